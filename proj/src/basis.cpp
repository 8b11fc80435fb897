#include "kstab/basis.hpp"

namespace kstab {

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

std::vector<IndexTuple> index_tuples(int n, int r) {
    std::vector<IndexTuple> out;
    if (r < 0 || r > n) return out;
    if (r == 0) {
        out.push_back({});
        return out;
    }
    IndexTuple idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i + 1;
    while (true) {
        out.push_back(idx);
        int i = r - 1;
        while (i >= 0 && idx[i] == n - (r - 1 - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

namespace {
bool elem_less(const std::pair<IndexTuple, Monomial>& a,
               const std::pair<IndexTuple, Monomial>& b) {
    if (a.first != b.first) return a.first < b.first;
    return MonomialOrder{}(a.second, b.second);
}
} // namespace

GradedBasis::GradedBasis(int n, int r, int s)
    : n_(n), r_(r), s_(s), index_(elem_less) {
    if (n < 1) throw InvalidInput("basis dimension must be >= 1");
    if (r < 0) throw InvalidInput("basis multivector degree must be >= 0");
    for (const auto& t : index_tuples(n, r))
        for (const auto& m : monomials_of_degree(n, s))
            elems_.emplace_back(t, m);
    for (int i = 0; i < static_cast<int>(elems_.size()); ++i)
        index_.emplace(elems_[i], i);
}

MultiVector GradedBasis::element(int i) const {
    const auto& [t, m] = elems_.at(i);
    MultiVector v(n_, r_);
    v.add_term(t, Polynomial::from_monomial(m, Rational(1)));
    return v;
}

int GradedBasis::index_of(const IndexTuple& t, const Monomial& m) const {
    auto it = index_.find({t, m});
    return it == index_.end() ? -1 : it->second;
}

std::vector<Rational> GradedBasis::coords(const MultiVector& A) const {
    if (A.dim() != n_)
        throw DimensionMismatch("coordinate extraction across dimensions");
    std::vector<Rational> v(elems_.size(), Rational(0));
    if (A.is_zero()) return v;
    if (A.degree() != r_)
        throw InvalidInput("multivector degree does not match basis");
    for (const auto& [t, c] : A.terms())
        for (const auto& [m, cf] : c.terms()) {
            int i = index_of(t, m);
            if (i < 0)
                throw InvalidInput(
                    "multivector has a term outside the graded basis "
                    "(inhomogeneous coefficient?)");
            v[static_cast<std::size_t>(i)] = cf;
        }
    return v;
}

MultiVector GradedBasis::from_coords(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != dim())
        throw DimensionMismatch("coordinate vector has wrong length");
    MultiVector A(n_, r_);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        const auto& [t, m] = elems_[i];
        A.add_term(t, Polynomial::from_monomial(m, v[i]));
    }
    return A;
}

} // namespace kstab
