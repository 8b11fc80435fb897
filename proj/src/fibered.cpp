#include "kstab/fibered.hpp"

#include "kstab/errors.hpp"

namespace kstab {

namespace {

int y_degree(const Monomial& m, const FiberedSpace& fs) {
    int deg = 0;
    for (int i = fs.d; i < fs.n(); ++i) deg += static_cast<int>(m.exps[i]);
    return deg;
}

int fiber_count(const IndexTuple& t, const FiberedSpace& fs) {
    int c = 0;
    for (auto i : t)
        if (i > fs.d) ++c;
    return c;
}

std::string tuple_str(const IndexTuple& t) {
    std::string s = "e[";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(static_cast<int>(t[i]));
    }
    return s + "]";
}

bool elem_less(const std::pair<IndexTuple, Monomial>& a,
               const std::pair<IndexTuple, Monomial>& b) {
    if (a.first != b.first) return a.first < b.first;
    return MonomialOrder{}(a.second, b.second);
}

// x-monomial extended by zeros on the fiber block, with an optional extra
// y_u factor.
Monomial full_monomial(const Monomial& xm, const FiberedSpace& fs, int y_u) {
    std::vector<std::uint32_t> e(static_cast<std::size_t>(fs.n()), 0);
    for (int i = 0; i < fs.d; ++i) e[i] = xm.exps[i];
    if (y_u > 0) e[fs.d + y_u - 1] += 1;
    return Monomial{std::move(e)};
}

} // namespace

FiberwiseDiagnostic fiberwise_linear_check(const MultiVector& Pi,
                                           const FiberedSpace& fs) {
    if (fs.d < 1 || fs.rf < 1)
        throw InvalidInput("fibered split needs d >= 1 and rf >= 1");
    if (Pi.dim() != fs.n())
        throw DimensionMismatch("bivector dimension does not match the fibered split");
    if (Pi.degree() != 2)
        throw InvalidInput("fiber-wise linearity is checked on bivectors");

    for (const auto& [t, p] : Pi.terms()) {
        switch (fiber_count(t, fs)) {
        case 0:
            return {false, "base-base term " + tuple_str(t) + " present"};
        case 1:
            for (const auto& [m, c] : p.terms()) {
                (void)c;
                if (y_degree(m, fs) != 0)
                    return {false, "coefficient of mixed term " + tuple_str(t) +
                                       " depends on a fiber coordinate"};
            }
            break;
        default:
            for (const auto& [m, c] : p.terms()) {
                (void)c;
                if (y_degree(m, fs) != 1)
                    return {false, "coefficient of fiber-fiber term " + tuple_str(t) +
                                       " is not linear in the fiber coordinates"};
            }
            break;
        }
    }
    return {true, ""};
}

// ---- LinGradedBasis -------------------------------------------------------

LinGradedBasis::LinGradedBasis(FiberedSpace fs, int r, int s)
    : fs_(fs), r_(r), s_(s), index_(&elem_less) {
    if (fs.d < 1 || fs.rf < 1)
        throw InvalidInput("fibered split needs d >= 1 and rf >= 1");
    if (r < 0) throw InvalidInput("negative multivector degree");

    // family (a): (deg s-1 x-monomial) * y_u * dy_T
    if (r <= fs.rf)
        for (const auto& T : index_tuples(fs.rf, r)) {
            IndexTuple tuple;
            for (auto i : T) tuple.push_back(static_cast<std::uint8_t>(fs.d + i));
            for (int u = 1; u <= fs.rf; ++u)
                for (const auto& xm : monomials_of_degree(fs.d, s - 1))
                    elems_.emplace_back(tuple, full_monomial(xm, fs, u));
        }
    // family (b): (deg s x-monomial) * dx_t ^ dy_S
    if (r >= 1 && r - 1 <= fs.rf)
        for (const auto& S : index_tuples(fs.rf, r - 1))
            for (int t = 1; t <= fs.d; ++t) {
                IndexTuple tuple{static_cast<std::uint8_t>(t)};
                for (auto i : S) tuple.push_back(static_cast<std::uint8_t>(fs.d + i));
                for (const auto& xm : monomials_of_degree(fs.d, s))
                    elems_.emplace_back(tuple, full_monomial(xm, fs, 0));
            }
    for (int i = 0; i < static_cast<int>(elems_.size()); ++i)
        index_[elems_[static_cast<std::size_t>(i)]] = i;
}

MultiVector LinGradedBasis::element(int i) const {
    const auto& [t, m] = elems_.at(static_cast<std::size_t>(i));
    MultiVector mv(fs_.n(), r_);
    mv.add_term(t, Polynomial::from_monomial(m, Rational(1)));
    return mv;
}

int LinGradedBasis::index_of(const IndexTuple& t, const Monomial& m) const {
    auto it = index_.find({t, m});
    return it == index_.end() ? -1 : it->second;
}

std::vector<Rational> LinGradedBasis::coords(const MultiVector& A) const {
    if (A.dim() != fs_.n())
        throw DimensionMismatch("multivector dimension does not match the basis");
    if (A.degree() != r_)
        throw InvalidInput("multivector degree does not match the basis");
    std::vector<Rational> v(static_cast<std::size_t>(dim()), Rational(0));
    for (const auto& [t, p] : A.terms())
        for (const auto& [m, c] : p.terms()) {
            int idx = index_of(t, m);
            if (idx < 0)
                throw InvalidInput("multivector has a term outside the "
                                   "fiber-wise linear basis: " + tuple_str(t));
            v[static_cast<std::size_t>(idx)] = c;
        }
    return v;
}

MultiVector LinGradedBasis::from_coords(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != dim())
        throw DimensionMismatch("coordinate vector length does not match the basis");
    MultiVector mv(fs_.n(), r_);
    for (int i = 0; i < dim(); ++i)
        if (!v[static_cast<std::size_t>(i)].is_zero()) {
            const auto& [t, m] = elems_[static_cast<std::size_t>(i)];
            mv.add_term(t, Polynomial::from_monomial(m, v[static_cast<std::size_t>(i)]));
        }
    return mv;
}

// ---- FiberedStructure -----------------------------------------------------

FiberedStructure FiberedStructure::of(MultiVector m, FiberedSpace fs, int k) {
    if (k < 1) throw InvalidInput("fibered structure order k must be >= 1");
    FiberwiseDiagnostic diag = fiberwise_linear_check(m, fs);
    if (!diag) throw NotFiberwiseLinear(diag.detail);
    if (!m.is_zero() && !m.coeffs_homogeneous(k))
        throw InvalidInput("bivector coefficients are not homogeneous of the "
                           "declared total degree k");
    return {std::move(m), fs, k};
}

// ---- lin complex ----------------------------------------------------------

RationalMatrix lin_differential_matrix(const FiberedStructure& Pi, int r, int s) {
    LinGradedBasis dom(Pi.fs, r, s);
    LinGradedBasis cod(Pi.fs, r + 1, s + Pi.k - 1);
    RationalMatrix M(cod.dim(), dom.dim());
    for (int j = 0; j < dom.dim(); ++j) {
        MultiVector br = schouten(Pi.mv, dom.element(j));
        for (const auto& [t, p] : br.terms())
            for (const auto& [m, c] : p.terms()) {
                int idx = cod.index_of(t, m);
                if (idx < 0)
                    throw ClosureViolation(
                        "bracket left the fiber-wise linear subspace at term " +
                        tuple_str(t));
                M.at(idx, j) = c;
            }
    }
    return M;
}

namespace {

CohomologyReport lin_slice_report(const FiberedStructure& Pi, int s) {
    LinGradedBasis b1(Pi.fs, 1, s - Pi.k + 1), b2(Pi.fs, 2, s),
        b3(Pi.fs, 3, s + Pi.k - 1);
    HomologySlice h = homology_slice(lin_differential_matrix(Pi, 2, s),
                                     lin_differential_matrix(Pi, 1, s - Pi.k + 1));
    CohomologyReport rep;
    rep.s = s;
    rep.k = Pi.k;
    rep.dim_v1 = b1.dim();
    rep.dim_v2 = b2.dim();
    rep.dim_v3 = b3.dim();
    rep.dim_im = h.dim_im;
    rep.dim_ker = h.dim_ker;
    rep.dim_h = h.dim_h;
    if (h.witness) rep.witness = b2.from_coords(*h.witness);
    return rep;
}

} // namespace

CohomologyReport lin_cohomology(const FiberedStructure& Pi, int s) {
    if (!jacobiator(Pi.mv).is_zero())
        throw NotPoisson("bivector fails the Jacobi identity: [pi,pi] != 0");
    return lin_slice_report(Pi, s);
}

StabilityCertificate algebroid_certificate(const FiberedStructure& Pi) {
    if (!jacobiator(Pi.mv).is_zero())
        throw NotPoisson("bivector fails the Jacobi identity: [pi,pi] != 0");
    StabilityCertificate cert;
    cert.k = Pi.k;
    cert.jacobi_ok = true;
    bool all_zero = true;
    for (int s = 0; s < Pi.k; ++s) {
        CohomologyReport rep = lin_slice_report(Pi, s);
        if (rep.dim_h != 0) all_zero = false;
        cert.reports.push_back(std::move(rep));
    }
    cert.verdict = all_zero ? Verdict::Certified : Verdict::NotCertified;
    return cert;
}

} // namespace kstab
