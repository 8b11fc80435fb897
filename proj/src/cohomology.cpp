#include "kstab/cohomology.hpp"

namespace kstab {

int infer_homogeneity(const MultiVector& pi) {
    if (pi.is_zero())
        throw InvalidInput("homogeneity degree of the zero multivector is undefined");
    auto d = pi.coeff_homogeneous_degree();
    if (!d)
        throw InvalidInput(
            "multivector has mixed coefficient degrees; pass one homogeneous part");
    return *d;
}

RationalMatrix differential_matrix(const HomogeneousMultiVector& pi_k, int r, int s) {
    const MultiVector& pi = pi_k.mv;
    if (pi.degree() != 2)
        throw InvalidInput("differential requires a bivector");
    if (!pi.coeffs_homogeneous(pi_k.s))
        throw InvalidInput("bivector is not homogeneous of the stated degree");
    const int n = pi.dim();
    const int k = pi_k.s;
    GradedBasis dom(n, r, s);
    GradedBasis cod(n, r + 1, s + k - 1);
    RationalMatrix M(cod.dim(), dom.dim());
    for (int j = 0; j < dom.dim(); ++j) {
        std::vector<Rational> col = cod.coords(schouten(pi, dom.element(j)));
        for (int i = 0; i < cod.dim(); ++i) M.at(i, j) = col[i];
    }
    return M;
}

namespace {

// One slice of the full polynomial complex.
CohomologyReport slice_report(const HomogeneousMultiVector& pi_k, int s) {
    const int n = pi_k.mv.dim();
    const int k = pi_k.s;
    GradedBasis b1(n, 1, s - k + 1), b2(n, 2, s), b3(n, 3, s + k - 1);
    HomologySlice h = homology_slice(differential_matrix(pi_k, 2, s),
                                     differential_matrix(pi_k, 1, s - k + 1));
    CohomologyReport rep;
    rep.s = s;
    rep.k = k;
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

CohomologyReport lp_cohomology(const HomogeneousMultiVector& pi_k, int s) {
    if (pi_k.mv.degree() != 2)
        throw InvalidInput("cohomology requires a bivector");
    if (pi_k.s < 1) throw InvalidInput("bivector degree k must be >= 1");
    if (!jacobiator(pi_k.mv).is_zero())
        throw NotPoisson("bivector fails the Jacobi identity: [pi,pi] != 0");
    return slice_report(pi_k, s);
}

StabilityCertificate stability_certificate(const MultiVector& pi) {
    if (pi.degree() != 2)
        throw InvalidInput("stability certificate requires a bivector");
    const int k = infer_homogeneity(pi);
    if (k < 1)
        throw InvalidInput("stability certificate needs polynomial degree k >= 1");
    if (!jacobiator(pi).is_zero())
        throw NotPoisson("bivector fails the Jacobi identity: [pi,pi] != 0");
    HomogeneousMultiVector hk = HomogeneousMultiVector::of(pi, k);
    StabilityCertificate cert;
    cert.k = k;
    cert.jacobi_ok = true;
    bool all_zero = true;
    for (int s = 0; s < k; ++s) {
        CohomologyReport rep = slice_report(hk, s);
        if (rep.dim_h != 0) all_zero = false;
        cert.reports.push_back(std::move(rep));
    }
    cert.verdict = all_zero ? Verdict::Certified : Verdict::NotCertified;
    return cert;
}

HomogeneousMultiVector quadratic_diagonal(const std::vector<std::vector<Rational>>& a) {
    const int n = static_cast<int>(a.size());
    if (n < 2) throw InvalidInput("quadratic diagonal needs n >= 2");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw InvalidInput("constant matrix is not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i][j] != -a[j][i])
                throw InvalidInput("constant matrix is not antisymmetric");
    MultiVector pi(n, 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Monomial m = Monomial::variable(n, i).times(Monomial::variable(n, j));
            pi.add_term({i, j}, Polynomial::from_monomial(m, a[i - 1][j - 1]));
        }
    return HomogeneousMultiVector{std::move(pi), 2};
}

Lemma32Result lemma32_criterion(const std::vector<std::vector<Rational>>& a) {
    const int n = static_cast<int>(a.size());
    if (n < 3)
        throw InvalidInput("diagonal criterion applies in dimension >= 3");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw InvalidInput("constant matrix is not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i][j] != -a[j][i])
                throw InvalidInput("constant matrix is not antisymmetric");
    Lemma32Result res;
    res.lambda.assign(n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) res.lambda[i] += a[i][j];
    for (int i = 0; i < n; ++i)
        if (res.lambda[i].is_zero()) {
            res.satisfied = false;
            res.reason = "lambda_" + std::to_string(i + 1) + " = 0";
            return res;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((res.lambda[i] + res.lambda[j]).is_zero()) {
                res.satisfied = false;
                res.reason = "lambda_" + std::to_string(i + 1) + " + lambda_" +
                             std::to_string(j + 1) + " = 0";
                return res;
            }
    res.satisfied = true;
    return res;
}

} // namespace kstab
