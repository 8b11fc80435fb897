#include "kstab/multivector.hpp"

#include <algorithm>
#include <sstream>

namespace kstab {

int merge_tuples(const IndexTuple& a, const IndexTuple& b, IndexTuple& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    // Count inversions between the blocks while merging; each pair
    // (a_i, b_j) with a_i > b_j is one transposition.
    std::size_t i = 0, j = 0;
    long inversions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            inversions += static_cast<long>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return (inversions % 2 == 0) ? 1 : -1;
}

MultiVector::MultiVector(int n, int r) : n_(n), r_(r) {
    if (n < 1) throw InvalidInput("multivector dimension must be >= 1");
    if (r < 0) throw InvalidInput("multivector degree must be >= 0");
}

MultiVector MultiVector::function(const Polynomial& f) {
    MultiVector m(f.dim(), 0);
    m.add_term(IndexTuple{}, f);
    return m;
}

void MultiVector::add_term(IndexTuple idx, const Polynomial& c) {
    if (static_cast<int>(idx.size()) != r_)
        throw InvalidInput("index tuple length does not match multivector degree");
    if (c.dim() != n_) throw DimensionMismatch("coefficient dimension mismatch");
    if (c.is_zero()) return;
    for (int v : idx)
        if (v < 1 || v > n_) throw InvalidInput("wedge index out of range");
    // Canonicalize: sort and pick up the permutation sign; duplicates kill
    // the term.
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return;
    Polynomial add = (sign == 1) ? c : -c;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_.emplace(std::move(idx), add);
    } else {
        Polynomial sum = it->second + add;
        if (sum.is_zero())
            terms_.erase(it);
        else
            it->second = sum;
    }
}

Polynomial MultiVector::coeff(const IndexTuple& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Polynomial(n_) : it->second;
}

MultiVector MultiVector::operator+(const MultiVector& o) const {
    if (n_ != o.n_) throw DimensionMismatch("multivector addition across dimensions");
    if (r_ != o.r_) throw InvalidInput("multivector addition across degrees");
    MultiVector r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, c);
    return r;
}

MultiVector MultiVector::operator-(const MultiVector& o) const {
    if (n_ != o.n_) throw DimensionMismatch("multivector subtraction across dimensions");
    if (r_ != o.r_) throw InvalidInput("multivector subtraction across degrees");
    MultiVector r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, -c);
    return r;
}

MultiVector MultiVector::operator-() const {
    MultiVector r(n_, r_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
    return r;
}

MultiVector MultiVector::scaled(const Rational& c) const {
    MultiVector r(n_, r_);
    if (c.is_zero()) return r;
    for (const auto& [t, cv] : terms_) r.terms_.emplace(t, cv.scaled(c));
    return r;
}

bool MultiVector::operator==(const MultiVector& o) const {
    return n_ == o.n_ && r_ == o.r_ && terms_ == o.terms_;
}

int MultiVector::max_coeff_degree() const {
    int d = -1;
    for (const auto& [t, c] : terms_) d = std::max(d, c.degree());
    return d;
}

bool MultiVector::coeffs_homogeneous(int s) const {
    for (const auto& [t, c] : terms_)
        if (!c.homogeneous(s)) return false;
    return true;
}

std::optional<int> MultiVector::coeff_homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [t, c] : terms_) {
        auto h = c.homogeneous_degree();
        if (!h) return std::nullopt;
        if (d && *d != *h) return std::nullopt;
        d = h;
    }
    return d;
}

std::string MultiVector::str(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        std::string cs = c.str(vars);
        bool wrap = cs.find(" + ") != std::string::npos ||
                    cs.find(" - ") != std::string::npos;
        std::string lead = wrap ? "(" + cs + ")" : cs;
        if (!first) {
            // Fold a bare leading minus into the separator so the output
            // stays within the input grammar (no unary minus mid-sum).
            if (!wrap && !lead.empty() && lead[0] == '-') {
                os << " - ";
                lead = lead.substr(1);
            } else {
                os << " + ";
            }
        }
        first = false;
        if (t.empty()) {
            os << lead;
            continue;
        }
        if (lead == "1")
            ; // coefficient 1 elided
        else if (lead == "-1")
            os << "-";
        else
            os << lead << "*";
        os << "e[";
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) os << ",";
            os << t[i];
        }
        os << "]";
    }
    return os.str();
}

// ---- wedge ----------------------------------------------------------------

MultiVector wedge(const MultiVector& A, const MultiVector& B) {
    if (A.dim() != B.dim()) throw DimensionMismatch("wedge across dimensions");
    MultiVector r(A.dim(), A.degree() + B.degree());
    IndexTuple merged;
    for (const auto& [ta, ca] : A.terms())
        for (const auto& [tb, cb] : B.terms()) {
            int sg = merge_tuples(ta, tb, merged);
            if (sg == 0) continue;
            Polynomial c = ca * cb;
            if (sg < 0) c = -c;
            r.add_term(merged, c);
        }
    return r;
}

// ---- Schouten bracket ------------------------------------------------------

namespace {

// Removes index i from the increasing tuple t; returns false when absent,
// otherwise fills the reduced tuple and the left-derivative sign
// (-1)^{position of i in t}.
bool theta_derivative(const IndexTuple& t, int i, IndexTuple& reduced, int& sign) {
    auto it = std::find(t.begin(), t.end(), i);
    if (it == t.end()) return false;
    std::size_t pos = static_cast<std::size_t>(it - t.begin());
    reduced.clear();
    reduced.reserve(t.size() - 1);
    for (std::size_t j = 0; j < t.size(); ++j)
        if (j != pos) reduced.push_back(t[j]);
    sign = (pos % 2 == 0) ? 1 : -1;
    return true;
}

} // namespace

MultiVector schouten(const MultiVector& A, const MultiVector& B) {
    if (A.dim() != B.dim()) throw DimensionMismatch("schouten across dimensions");
    const int n = A.dim();
    const int a = A.degree(), b = B.degree();
    const int rdeg = a + b - 1;
    if (rdeg < 0) return MultiVector(n, 0); // [f, g] = 0 for two functions
    MultiVector r(n, rdeg);
    const int lead = (a % 2 == 1) ? 1 : -1; // (-1)^{a-1}
    IndexTuple reduced, merged;
    int sg;
    // First sum: (-1)^{a-1} (dA/dtheta_i)(dB/dx_i).
    for (const auto& [ta, pa] : A.terms()) {
        for (int i : ta) {
            if (!theta_derivative(ta, i, reduced, sg)) continue;
            for (const auto& [tb, pb] : B.terms()) {
                Polynomial dpb = pb.derivative(i);
                if (dpb.is_zero()) continue;
                int ms = merge_tuples(reduced, tb, merged);
                if (ms == 0) continue;
                Polynomial c = pa * dpb;
                if (lead * sg * ms < 0) c = -c;
                r.add_term(merged, c);
            }
        }
    }
    // Second sum: - (dA/dx_i)(dB/dtheta_i).
    for (const auto& [tb, pb] : B.terms()) {
        for (int i : tb) {
            if (!theta_derivative(tb, i, reduced, sg)) continue;
            for (const auto& [ta, pa] : A.terms()) {
                Polynomial dpa = pa.derivative(i);
                if (dpa.is_zero()) continue;
                int ms = merge_tuples(ta, reduced, merged);
                if (ms == 0) continue;
                Polynomial c = dpa * pb;
                if (sg * ms > 0) c = -c;
                r.add_term(merged, c);
            }
        }
    }
    return r;
}

MultiVector jacobiator(const MultiVector& pi) {
    if (pi.degree() != 2)
        throw InvalidInput("jacobiator requires a bivector");
    return schouten(pi, pi);
}

// ---- homogeneity, recentering, Liouville ----------------------------------

HomogeneousMultiVector HomogeneousMultiVector::of(MultiVector m, int s) {
    if (!m.coeffs_homogeneous(s))
        throw InvalidInput("multivector is not homogeneous of the stated degree");
    return HomogeneousMultiVector{std::move(m), s};
}

HomogeneousMultiVector homogeneous_part(const MultiVector& A, int s) {
    MultiVector r(A.dim(), A.degree());
    if (s >= 0)
        for (const auto& [t, c] : A.terms()) {
            Polynomial h = c.homogeneous_part(s);
            if (!h.is_zero()) r.add_term(t, h);
        }
    return HomogeneousMultiVector{std::move(r), s};
}

MultiVector recenter(const MultiVector& A, const std::vector<Rational>& p) {
    if (static_cast<int>(p.size()) != A.dim())
        throw DimensionMismatch("recenter point dimension mismatch");
    MultiVector r(A.dim(), A.degree());
    for (const auto& [t, c] : A.terms()) r.add_term(t, c.shifted(p));
    return r;
}

MultiVector liouville_field(int n) {
    if (n < 1) throw InvalidInput("liouville_field needs n >= 1");
    MultiVector r(n, 1);
    for (int i = 1; i <= n; ++i)
        r.add_term(IndexTuple{i}, Polynomial::variable(n, i));
    return r;
}

std::vector<std::string> default_var_names(int n) {
    if (n == 1) return {"x"};
    if (n == 2) return {"x", "y"};
    if (n == 3) return {"x", "y", "z"};
    std::vector<std::string> v;
    v.reserve(n);
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

} // namespace kstab
