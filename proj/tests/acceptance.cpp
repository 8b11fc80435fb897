// =========================================================================
// Acceptance suite
//
// One check per headline capability of the library, each printed as a
// single [PASS]/[FAIL] line. Every criterion pins concrete values computed
// by an independent computer-algebra oracle; none of them is a smoke test.
// The binary exits nonzero iff any criterion fails, so it can gate a build.
// =========================================================================

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kstab/analysis3d.hpp"
#include "kstab/cohomology.hpp"
#include "kstab/fibered.hpp"
#include "kstab/forms3d.hpp"
#include "kstab/liealg.hpp"
#include "kstab/matrix.hpp"
#include "kstab/multivector.hpp"
#include "kstab/perturb.hpp"
#include "kstab/polynomial.hpp"
#include "kstab/rational.hpp"

#include "rep_transport.hpp"
#include "test_helpers.hpp"

using namespace kstab;

namespace {

// -------------------------------------------------------------------------
// Harness
// -------------------------------------------------------------------------

// Collects named sub-checks for one criterion; the criterion passes iff
// every sub-check holds. Notes are informational and always printed.
struct Checker {
    bool ok = true;
    std::ostringstream log;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "       failed: " << what << "\n";
        }
    }
    void note(const std::string& text) { log << "       " << text << "\n"; }
};

int failures = 0;

void criterion(int id, const std::string& title,
               const std::function<void(Checker&)>& body) {
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.log << "       exception: " << e.what() << "\n";
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " " << id << ". " << title
              << "  (" << std::fixed << std::setprecision(2) << secs << " s)\n"
              << c.log.str();
    if (!c.ok) ++failures;
}

// -------------------------------------------------------------------------
// Shared small helpers
// -------------------------------------------------------------------------

std::vector<Rational> matvec(const RationalMatrix& M,
                             const std::vector<Rational>& v) {
    std::vector<Rational> out(static_cast<std::size_t>(M.rows()));
    for (int i = 0; i < M.rows(); ++i) {
        Rational s;
        for (int j = 0; j < M.cols(); ++j)
            s = s + M.at(i, j) * v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = s;
    }
    return out;
}

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// Poisson structure on R^3 with Casimir f:
//   pi = df/dx3 e[1,2] - df/dx2 e[1,3] + df/dx1 e[2,3].
MultiVector casimir_poisson(const Polynomial& f) {
    MultiVector pi(3, 2);
    Polynomial p12 = f.derivative(3);
    Polynomial p13 = f.derivative(2).scaled(Rational(-1));
    Polynomial p23 = f.derivative(1);
    if (!p12.is_zero()) pi.add_term({1, 2}, p12);
    if (!p13.is_zero()) pi.add_term({1, 3}, p13);
    if (!p23.is_zero()) pi.add_term({2, 3}, p23);
    return pi;
}

// Random homogeneous polynomial of exact degree m on R^3 (never zero).
Polynomial random_homogeneous(std::mt19937_64& rng, int m) {
    for (;;) {
        Polynomial f(3);
        for (const auto& mono : monomials_of_degree(3, m))
            f.add_term(mono, Rational(kt::small_int(rng)));
        if (!f.is_zero()) return f;
    }
}

// -------------------------------------------------------------------------
// 1. Degenerate quadratic structure on the plane
// -------------------------------------------------------------------------

void c1_plane_obstruction(Checker& c) {
    MultiVector pi = kt::mvf(2, 2, {{{1, 2}, kt::poly(2, {{1, {1, 1}}})}});
    auto h0 = lp_cohomology(HomogeneousMultiVector::of(pi, 2), 0);
    c.require(h0.dim_h == 1, "dim H^{2,0} == 1");
    c.require(h0.dim_ker == 1 && h0.dim_im == 0, "slice 0 kernel/image dims");
    MultiVector e12 = kt::mvf(2, 2, {{{1, 2}, kt::pconst(2, 1)}});
    c.require(h0.witness.has_value() && *h0.witness == e12,
              "witness is the constant bivector e[1,2]");
    auto h1 = lp_cohomology(HomogeneousMultiVector::of(pi, 2), 1);
    c.require(h1.dim_v2 == 2 && h1.dim_ker == 2 && h1.dim_im == 2 && h1.dim_h == 0,
              "slice 1 dims 2/2/2/0");
    auto cert = stability_certificate(pi);
    c.require(cert.k == 2, "inferred order k == 2");
    c.require(cert.verdict == Verdict::NotCertified, "certificate is negative");
    c.require(cert.reports.size() == 2 && cert.reports[0].dim_h == 1 &&
                  cert.reports[1].dim_h == 0,
              "certificate slice dims match the direct computation");
}

// -------------------------------------------------------------------------
// 2. Diagonal quadratic family and its coefficient criterion
// -------------------------------------------------------------------------

std::vector<std::vector<Rational>> antisym3(long a12, long a13, long a23) {
    std::vector<std::vector<Rational>> a(3, std::vector<Rational>(3));
    a[0][1] = Rational(a12);  a[1][0] = Rational(-a12);
    a[0][2] = Rational(a13);  a[2][0] = Rational(-a13);
    a[1][2] = Rational(a23);  a[2][1] = Rational(-a23);
    return a;
}

void c2_quadratic_family(Checker& c) {
    auto a = antisym3(1, 2, 4);
    Lemma32Result crit = lemma32_criterion(a);
    c.require(crit.satisfied, "criterion holds for coefficients (1,2,4)");
    c.require(crit.lambda == std::vector<Rational>{Rational(3), Rational(3), Rational(-6)},
              "lambda == (3, 3, -6)");
    auto cert = stability_certificate(quadratic_diagonal(a).mv);
    c.require(cert.verdict == Verdict::Certified && cert.k == 2,
              "coefficients (1,2,4) give an order-2 certificate");
    c.require(cert.reports[0].dim_h == 0 && cert.reports[1].dim_h == 0,
              "both slices vanish for (1,2,4)");

    // Random members that satisfy the criterion must all be certified.
    // (Every member of this family satisfies the Jacobi identity, so
    // rejection sampling only filters on the criterion itself.)
    std::mt19937_64 rng(20240823);
    int accepted = 0;
    while (accepted < 20) {
        auto b = antisym3(kt::small_int(rng), kt::small_int(rng), kt::small_int(rng));
        if (!lemma32_criterion(b).satisfied) continue;
        auto rc = stability_certificate(quadratic_diagonal(b).mv);
        c.require(rc.verdict == Verdict::Certified,
                  "random criterion-satisfying member certified");
        c.require(rc.reports[0].dim_h == 0 && rc.reports[1].dim_h == 0,
                  "random member has vanishing slices");
        ++accepted;
    }
    c.require(accepted >= 20, "at least 20 random members exercised");
}

// -------------------------------------------------------------------------
// 3. Cyclic cubic/quartic family: modular route vs direct certificates
// -------------------------------------------------------------------------

void c3_cyclic_family(Checker& c) {
    HomogeneousMultiVector pi3 = example_pi_k(3);
    HomogeneousMultiVector pi4 = example_pi_k(4);
    c.require(jacobiator(pi3.mv).is_zero(), "cubic member is Poisson");
    c.require(jacobiator(pi4.mv).is_zero(), "quartic member is Poisson");

    MultiVector x3 = modular_vector_field(pi3.mv);
    MultiVector x4 = modular_vector_field(pi4.mv);
    c.require(liouville_decomposition_check(pi3, x3, 3),
              "cubic member splits as (1/4) I ^ X");
    c.require(liouville_decomposition_check(pi4, x4, 4),
              "quartic member splits as (1/5) I ^ X");

    // Cubic member: the modular field vanishes on a curve, so the ideal
    // slices never fill up and the shortcut stays inconclusive; the direct
    // computation confirms genuine obstructions (dim H^{2,2} = 3).
    auto iso3 = algebraically_isolated(x3, default_isolation_bound(2));
    c.require(iso3.outcome == IsolationOutcome::Undecided,
              "cubic modular zero not algebraically isolated up to the bound");
    auto mod3 = lemma33_certificate(pi3, default_isolation_bound(2));
    c.require(mod3.verdict == ModularVerdict::Inconclusive,
              "modular route inconclusive for the cubic member");
    auto cert3 = stability_certificate(pi3.mv);
    c.require(cert3.verdict == Verdict::NotCertified,
              "direct certificate negative for the cubic member");
    c.require(cert3.reports.size() == 3 && cert3.reports[0].dim_h == 0 &&
                  cert3.reports[1].dim_h == 2 && cert3.reports[2].dim_h == 3,
              "cubic slice dims H^{2,s} = (0, 2, 3)");

    // Quartic member: isolated modular zero, so both routes certify.
    auto iso4 = algebraically_isolated(x4, default_isolation_bound(3));
    c.require(iso4.outcome == IsolationOutcome::Isolated && iso4.isolated_degree == 7,
              "quartic modular zero isolated at ideal degree 7");
    auto mod4 = lemma33_certificate(pi4, default_isolation_bound(3));
    c.require(mod4.verdict == ModularVerdict::CertifiedViaModular,
              "modular route certifies the quartic member");
    auto cert4 = stability_certificate(pi4.mv);
    bool quartic_all_zero = cert4.reports.size() == 4;
    for (const auto& r : cert4.reports) quartic_all_zero &= (r.dim_h == 0);
    c.require(cert4.verdict == Verdict::Certified && quartic_all_zero,
              "direct certificate positive for the quartic member");
    c.require(!(mod4.verdict == ModularVerdict::CertifiedViaModular &&
                cert4.verdict != Verdict::Certified),
              "modular certification never contradicts the direct one");
    c.note("[NOTE] the cubic member is not order-3 stable: dim H^{2,2} = 3 and "
           "its modular field vanishes on a curve, so every ideal slice up to "
           "degree 7 is rank-deficient. The positive claims hold for the "
           "quartic member, where both certification routes agree.");
}

// -------------------------------------------------------------------------
// 4. Solvable plane algebra: stable Poisson point, unstable algebroid
// -------------------------------------------------------------------------

void c4_solvable_plane(Checker& c) {
    LieAlgebra g = aff1_algebra();
    auto h2 = ce_cohomology(Representation::trivial(g, 1), 2);
    c.require(h2.dim_h == 0, "H^2(g, R) == 0 with trivial coefficients");
    auto cert = stability_certificate(lie_poisson(g));
    c.require(cert.verdict == Verdict::Certified && cert.k == 1,
              "linear Poisson structure of g certified at order 1");

    Representation coad = aff1_coadjoint();
    auto h1 = ce_cohomology(coad, 1);
    c.require(h1.dim_h == 1, "dim H^1(g, V*) == 1 for the coadjoint action");
    auto Pi = FiberedStructure::of(action_algebroid(coad), FiberedSpace{2, 2}, 1);
    auto acert = algebroid_certificate(Pi);
    c.require(acert.verdict == Verdict::NotCertified,
              "action algebroid certificate negative");
    c.require(acert.reports.size() == 1 && acert.reports[0].dim_h == 1,
              "lin slice s = 0 has dim H = 1");
}

// -------------------------------------------------------------------------
// 5. Lin slice <-> degree-one algebra cohomology; cocycle transport
// -------------------------------------------------------------------------

void c5_lin_vs_algebra(Checker& c) {
    IsoCheck base = iso_check_h2lin_h1(aff1_coadjoint());
    c.require(base.equal && base.dim_h2lin == 1 && base.dim_h1 == 1,
              "base case dims 1 == 1");

    std::mt19937_64 rng(5150);
    std::vector<Representation> pool = kt::catalog_reps();
    int transported = 0;
    for (int t = 0; t < 25; ++t) {
        const Representation& rep0 = pool[static_cast<std::size_t>(t) % pool.size()];
        RationalMatrix Q = kt::random_invertible(rng, rep0.algebra().dim());
        RationalMatrix P = kt::random_invertible(rng, rep0.module_dim());
        Representation rep = kt::transport_rep(rep0, Q, P);
        IsoCheck ic = iso_check_h2lin_h1(rep);
        c.require(ic.equal, "transported pair keeps dim H^{2,0}_lin == dim H^1");
        ++transported;
    }
    c.require(transported >= 20, "at least 20 transported pairs exercised");

    // The constant-coefficient cocycle equation and the degree-one
    // differential must agree on every input, not only on cocycles.
    int cocycles = 0, non_cocycles = 0;
    for (int t = 0; t < 40; ++t) {
        const Representation& rep0 = pool[static_cast<std::size_t>(t) % pool.size()];
        RationalMatrix Q = kt::random_invertible(rng, rep0.algebra().dim());
        RationalMatrix P = kt::random_invertible(rng, rep0.module_dim());
        Representation rep = kt::transport_rep(rep0, Q, P);
        int r = rep.algebra().dim(), d = rep.module_dim();

        RationalMatrix mu(r, d);
        if (t % 4 == 3) {
            // image of the degree-zero differential: a guaranteed cocycle
            std::vector<Rational> v(static_cast<std::size_t>(d));
            for (auto& x : v) x = Rational(kt::small_int(rng));
            std::vector<Rational> coords = matvec(ce_differential_matrix(rep, 0), v);
            for (int u = 0; u < r; ++u)
                for (int q = 0; q < d; ++q)
                    mu.at(u, q) = coords[static_cast<std::size_t>(u * d + q)];
        } else {
            for (int u = 0; u < r; ++u)
                for (int q = 0; q < d; ++q) mu.at(u, q) = Rational(kt::small_int(rng));
        }

        bool eq1_zero = all_zero(eq1_residual(rep, mu));
        bool ce_zero =
            all_zero(matvec(ce_differential_matrix(rep, 1), mu_to_cochain(mu)));
        c.require(eq1_zero == ce_zero,
                  "cocycle equation residual vanishes iff d^1(mu) == 0");
        (eq1_zero ? cocycles : non_cocycles)++;
    }
    c.require(cocycles >= 5 && non_cocycles >= 5,
              "both sides of the equivalence witnessed");
}

// -------------------------------------------------------------------------
// 6. Sphere-type fiberwise-linear structure matches its closed form
// -------------------------------------------------------------------------

void c6_sphere_structure(Checker& c) {
    MultiVector Pi = monnier_algebroid(2);

    // (x1^2 + x2^2 + x3^2 - 1) sum_i e[i, 3+i]
    //   + 2 sum_{i<j} (x_j y_i - x_i y_j) e[3+i, 3+j]   on R^6.
    Polynomial rho1 = kt::poly(6, {{1, {2, 0, 0, 0, 0, 0}},
                                   {1, {0, 2, 0, 0, 0, 0}},
                                   {1, {0, 0, 2, 0, 0, 0}},
                                   {-1, {0, 0, 0, 0, 0, 0}}});
    MultiVector expected(6, 2);
    for (int i = 1; i <= 3; ++i) expected.add_term({i, 3 + i}, rho1);
    expected.add_term({4, 5}, kt::poly(6, {{2, {0, 1, 0, 1, 0, 0}},
                                           {-2, {1, 0, 0, 0, 1, 0}}}));
    expected.add_term({4, 6}, kt::poly(6, {{2, {0, 0, 1, 1, 0, 0}},
                                           {-2, {1, 0, 0, 0, 0, 1}}}));
    expected.add_term({5, 6}, kt::poly(6, {{2, {0, 0, 1, 0, 1, 0}},
                                           {-2, {0, 1, 0, 0, 0, 1}}}));
    c.require(Pi == expected, "structure equals the closed form term by term");

    auto diag = fiberwise_linear_check(Pi, FiberedSpace{3, 3});
    c.require(diag.ok, "fiberwise-linear shape check passes");
    bool jz = jacobiator(Pi).is_zero();
    c.note(std::string("[NOTE] Jacobi defect vanishes: ") + (jz ? "yes" : "no") +
           " (reported, not part of the pass condition)");
}

// -------------------------------------------------------------------------
// 7. Bracket identities, d o d = 0, integrability, obstruction annihilation
// -------------------------------------------------------------------------

void c7_structural_identities(Checker& c) {
    std::mt19937_64 rng(777);
    int identity_checks = 0;

    // Graded antisymmetry: [A,B] + (-1)^{(a-1)(b-1)} [B,A] = 0.
    for (int t = 0; t < 40; ++t) {
        int n = 2 + static_cast<int>(rng() % 2);
        int a = static_cast<int>(rng() % (n + 1));
        int b = static_cast<int>(rng() % (n + 1));
        MultiVector A = kt::random_mvf(rng, n, a, 2);
        MultiVector B = kt::random_mvf(rng, n, b, 2);
        MultiVector lhs = schouten(A, B), rhs = schouten(B, A);
        bool ok = ((a - 1) * (b - 1)) % 2 == 0 ? (lhs + rhs).is_zero()
                                               : (lhs - rhs).is_zero();
        c.require(ok, "graded antisymmetry instance");
        ++identity_checks;
    }

    // Graded Leibniz: [A, B^C] = [A,B]^C + (-1)^{(a-1)b} B^[A,C].
    for (int t = 0; t < 40; ++t) {
        int a = 1 + static_cast<int>(rng() % 2);
        int b = static_cast<int>(rng() % 2);
        int cd = static_cast<int>(rng() % 2) + 1;
        MultiVector A = kt::random_mvf(rng, 3, a, 2);
        MultiVector B = kt::random_mvf(rng, 3, b, 2);
        MultiVector C = kt::random_mvf(rng, 3, cd, 2);
        MultiVector second = wedge(B, schouten(A, C));
        if (((a - 1) * b) % 2 == 1) second = -second;
        c.require(schouten(A, wedge(B, C)) == wedge(schouten(A, B), C) + second,
                  "graded Leibniz instance");
        ++identity_checks;
    }

    // Graded Jacobi in derivation form:
    // [A,[B,C]] = [[A,B],C] + (-1)^{(a-1)(b-1)} [B,[A,C]].
    auto jacobi_triple = [&](int a, int b, int cd) {
        MultiVector A = kt::random_mvf(rng, 3, a, 2);
        MultiVector B = kt::random_mvf(rng, 3, b, 2);
        MultiVector C = kt::random_mvf(rng, 3, cd, 2);
        MultiVector second = schouten(B, schouten(A, C));
        if (((a - 1) * (b - 1)) % 2 == 1) second = -second;
        c.require(schouten(A, schouten(B, C)) ==
                      schouten(schouten(A, B), C) + second,
                  "graded Jacobi instance");
        ++identity_checks;
    };
    for (int t = 0; t < 15; ++t) jacobi_triple(1, 1, 2);
    for (int t = 0; t < 15; ++t) jacobi_triple(1, 2, 2);
    c.require(identity_checks >= 100, "at least 100 bracket identity instances");

    // d o d = 0 on every structure the suite certifies. Both cohomology
    // entry points verify the composite on each slice internally and throw
    // if it fails, so a clean pass here is the squared-differential check.
    int slices = 0;
    auto lp_slices = [&](const HomogeneousMultiVector& pk, int smax) {
        for (int s = 0; s <= smax; ++s) {
            lp_cohomology(pk, s);
            ++slices;
        }
    };
    lp_slices(HomogeneousMultiVector::of(
                  kt::mvf(2, 2, {{{1, 2}, kt::poly(2, {{1, {1, 1}}})}}), 2), 2);
    lp_slices(quadratic_diagonal(antisym3(1, 2, 4)), 2);
    lp_slices(example_pi_k(3), 3);
    lp_slices(example_pi_k(4), 3);
    lp_slices(HomogeneousMultiVector::of(lie_poisson(aff1_algebra()), 1), 2);
    for (int t = 0; t < 6; ++t) {
        int m = 2 + t % 3;
        MultiVector pi = casimir_poisson(random_homogeneous(rng, m));
        lp_slices(HomogeneousMultiVector::of(pi, m - 1), 1);
    }
    for (const Representation& rep :
         {aff1_coadjoint(), sl2_irrep2(), scaling_rep()}) {
        int d = rep.module_dim();
        auto Pi = FiberedStructure::of(action_algebroid(rep),
                                       FiberedSpace{d, rep.algebra().dim()}, 1);
        for (int s = 0; s <= 1; ++s) {
            lin_cohomology(Pi, s);
            ++slices;
        }
    }
    c.require(slices >= 25, "squared differential verified on >= 25 slices");

    // On R^3 the Jacobi identity is equivalent to integrability of the
    // volume-contracted 1-form: [pi,pi] = 0 iff alpha ^ d(alpha) = 0.
    int equiv = 0, poisson_seen = 0, nonpoisson_seen = 0;
    for (int t = 0; t < 60; ++t) {
        MultiVector pi = (t % 3 == 0)
                             ? casimir_poisson(kt::random_poly(rng, 3, 2))
                             : kt::random_mvf(rng, 3, 2, 2);
        bool poisson = jacobiator(pi).is_zero();
        bool integrable = integrability_check(contract_with_volume(pi)).is_zero();
        c.require(poisson == integrable, "integrability equivalence instance");
        (poisson ? poisson_seen : nonpoisson_seen)++;
        ++equiv;
    }
    c.require(equiv >= 50 && poisson_seen >= 10 && nonpoisson_seen >= 10,
              "equivalence exercised on both kinds of input");

    // The obstruction map annihilates the exact jet of the structure it
    // was built from: F(jet(Lambda, p, k)) = 0 for Poisson Lambda.
    int annihilated = 0;
    for (int t = 0; t < 21; ++t) {
        Polynomial f = kt::random_poly(rng, 3, 3);
        MultiVector L = casimir_poisson(f);
        if (L.is_zero()) continue;
        if (t % 4 == 0) {
            // conformal rescaling keeps the Jacobi identity on R^3
            Polynomial g = kt::random_poly(rng, 3, 1);
            MultiVector scaled(3, 2);
            const auto terms = L.terms();
            for (const auto& [tuple, p] : terms) scaled.add_term(tuple, g * p);
            if (scaled.is_zero()) continue;
            L = scaled;
        }
        int k = 1 + t % 3;
        std::vector<Rational> p = {Rational(kt::small_int(rng), 2),
                                   Rational(kt::small_int(rng), 3),
                                   Rational(kt::small_int(rng), 2)};
        ObstructionVector F = obstruction_map(L, p, k, jet_extension_exact(L, p, k));
        bool zero = true;
        for (const auto& comp : F.components) zero = zero && all_zero(comp);
        c.require(zero, "obstruction annihilates its own jet");
        ++annihilated;
    }
    c.require(annihilated >= 18, "obstruction identity exercised on >= 18 jets");
}

// -------------------------------------------------------------------------
// 8. Perturbation experiment on the stable linear plane structure
// -------------------------------------------------------------------------

void c8_perturbation_experiment(Checker& c) {
    MultiVector pi = kt::mvf(2, 2, {{{1, 2}, kt::pvar(2, 1)}});
    ExperimentReport rep = stability_experiment(pi, 1, 100, 1e-3, 2024);
    c.require(rep.trials == 100, "all trials ran");
    c.require(rep.successes >= 95, "at least 95/100 perturbations kept a "
                                   "nearby order-1 singular point");
    bool quality = true;
    for (const auto& t : rep.results)
        if (t.found) quality = quality && t.residual < 1e-9 && t.distance < 0.1;
    c.require(quality, "every found point has residual < 1e-9 within 0.1 of 0");
    {
        std::ostringstream os;
        os << "successes: " << rep.successes << "/" << rep.trials;
        c.note(os.str());
    }

    ExperimentReport rep2 = stability_experiment(pi, 1, 100, 1e-3, 2024);
    bool same = rep.successes == rep2.successes &&
                rep.results.size() == rep2.results.size();
    for (std::size_t i = 0; same && i < rep.results.size(); ++i) {
        const auto& a = rep.results[i];
        const auto& b = rep2.results[i];
        same = a.found == b.found && a.point == b.point &&
               a.residual == b.residual && a.distance == b.distance;
    }
    c.require(same, "re-running with the same seed reproduces the report bit for bit");
}

} // namespace

int main() {
    criterion(1, "plane structure x*y e[1,2]: obstruction witness and negative certificate",
              c1_plane_obstruction);
    criterion(2, "diagonal quadratic family: coefficient criterion certifies order 2",
              c2_quadratic_family);
    criterion(3, "cyclic family: modular route consistent with direct certificates",
              c3_cyclic_family);
    criterion(4, "solvable plane algebra: certified Poisson point, uncertified algebroid",
              c4_solvable_plane);
    criterion(5, "first lin slice matches degree-one algebra cohomology",
              c5_lin_vs_algebra);
    criterion(6, "sphere-type fiberwise-linear structure matches its closed form",
              c6_sphere_structure);
    criterion(7, "bracket identities, squared differential, integrability, obstructions",
              c7_structural_identities);
    criterion(8, "perturbation experiment: survival rate and bitwise reproducibility",
              c8_perturbation_experiment);

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return EXIT_SUCCESS;
    }
    std::cout << failures << " criterion(s) failed\n";
    return EXIT_FAILURE;
}
