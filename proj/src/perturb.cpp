#include "kstab/perturb.hpp"

#include <cmath>
#include <random>

#include "kstab/basis.hpp"
#include "kstab/errors.hpp"
#include "kstab/matrix.hpp"

namespace kstab {

namespace {

// ---- exact dyadic randomness ----------------------------------------------

// Every IEEE double is a dyadic rational; the conversion is exact.
Rational exact_of(double x) {
    if (!std::isfinite(x)) throw InvalidInput("non-finite floating parameter");
    return Rational(mpq_class(x));
}

// Uniform dyadic rational m/2^16 in [-1, 1].
Rational dyadic_unit(std::mt19937_64& rng) {
    const long den = 65536;
    long m = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * den + 1)) - den;
    return Rational(m, den);
}

// Dense random polynomial with dyadic coefficients on every monomial of
// total degree mindeg..maxdeg.
Polynomial dyadic_poly(std::mt19937_64& rng, int n, int mindeg, int maxdeg) {
    Polynomial p(n);
    for (int s = mindeg; s <= maxdeg; ++s)
        for (const auto& m : monomials_of_degree(n, s)) p.add_term(m, dyadic_unit(rng));
    return p;
}

// ---- polynomial utilities -------------------------------------------------

Polynomial poly_part(const Polynomial& p, int d) {
    Polynomial r(p.dim());
    for (const auto& [m, c] : p.terms())
        if (m.degree() == d) r.add_term(m, c);
    return r;
}

// Product with every term pair above maxdeg skipped, not computed.
Polynomial truncmul(const Polynomial& a, const Polynomial& b, int maxdeg) {
    Polynomial r(a.dim());
    for (const auto& [ma, ca] : a.terms()) {
        const int da = ma.degree();
        if (da > maxdeg) continue;
        for (const auto& [mb, cb] : b.terms()) {
            if (da + mb.degree() > maxdeg) continue;
            r.add_term(ma.times(mb), ca * cb);
        }
    }
    return r;
}

// ---- validation helpers ---------------------------------------------------

void check_bivector(const MultiVector& L) {
    if (L.degree() != 2)
        throw InvalidInput("jets and perturbations are defined for bivector fields");
}

// ---- deterministic per-trial seeds ----------------------------------------

// splitmix64 output for state `seed` at stream index t.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t t) {
    std::uint64_t x = seed + (t + 1) * 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

// ---- jets -----------------------------------------------------------------

ExactJet jet_extension_exact(const MultiVector& L, const std::vector<Rational>& p,
                             int k) {
    check_bivector(L);
    if (k < 1) throw InvalidInput("jet order k must be >= 1");
    if (static_cast<int>(p.size()) != L.dim())
        throw DimensionMismatch("base point dimension does not match the field");
    MultiVector rec = recenter(L, p);
    ExactJet out;
    out.point = p;
    out.k = k;
    for (int s = 0; s < k; ++s)
        out.components.push_back(
            GradedBasis(L.dim(), 2, s).coords(homogeneous_part(rec, s).mv));
    return out;
}

JetVector jet_extension(const MultiVector& L, const std::vector<double>& p, int k) {
    check_bivector(L);
    if (k < 1) throw InvalidInput("jet order k must be >= 1");
    const int n = L.dim();
    if (static_cast<int>(p.size()) != n)
        throw DimensionMismatch("base point dimension does not match the field");

    std::vector<GradedBasis> bases;
    JetVector out;
    out.point = p;
    out.k = k;
    for (int s = 0; s < k; ++s) {
        bases.emplace_back(n, 2, s);
        out.components.emplace_back(static_cast<std::size_t>(bases.back().dim()), 0.0);
    }

    // Taylor shift: the coefficient of x^e in P(x + p) is
    // sum_{e' >= e} c_{e'} * prod_i C(e'_i, e_i) p_i^{e'_i - e_i}.
    std::vector<std::uint32_t> sub(static_cast<std::size_t>(n), 0);
    for (const auto& [t, poly] : L.terms())
        for (const auto& [m, c] : poly.terms()) {
            double base = c.to_double();
            // enumerate sub-exponent vectors of m with total degree < k
            auto rec_enum = [&](auto&& self, int i, int deg, double factor) -> void {
                if (deg >= k) return;
                if (i == n) {
                    int idx = bases[static_cast<std::size_t>(deg)].index_of(
                        t, Monomial(sub));
                    if (idx >= 0)
                        out.components[static_cast<std::size_t>(deg)]
                                      [static_cast<std::size_t>(idx)] += factor;
                    return;
                }
                const std::uint32_t top = m.exps[static_cast<std::size_t>(i)];
                for (std::uint32_t e = 0; e <= top; ++e) {
                    sub[static_cast<std::size_t>(i)] = e;
                    double w = static_cast<double>(binom(static_cast<int>(top),
                                                         static_cast<int>(e)));
                    double pw = 1.0;
                    for (std::uint32_t j = 0; j < top - e; ++j)
                        pw *= p[static_cast<std::size_t>(i)];
                    self(self, i + 1, deg + static_cast<int>(e), factor * w * pw);
                }
                sub[static_cast<std::size_t>(i)] = 0;
            };
            rec_enum(rec_enum, 0, 0, base);
        }
    return out;
}

// ---- obstruction map ------------------------------------------------------

ObstructionVector obstruction_map(const MultiVector& L,
                                  const std::vector<Rational>& p, int k,
                                  const ExactJet& v) {
    check_bivector(L);
    if (k < 1) throw InvalidInput("order k must be >= 1");
    const int n = L.dim();
    if (static_cast<int>(p.size()) != n)
        throw DimensionMismatch("base point dimension does not match the field");
    if (v.k != k || static_cast<int>(v.components.size()) != k)
        throw DimensionMismatch("jet input does not have k components");

    MultiVector rec = recenter(L, p);
    std::vector<MultiVector> vm; // jet input as homogeneous bivectors
    for (int s = 0; s < k; ++s) {
        GradedBasis b(n, 2, s);
        if (static_cast<int>(v.components[static_cast<std::size_t>(s)].size()) !=
            b.dim())
            throw DimensionMismatch("jet component length does not match its slice");
        vm.push_back(b.from_coords(v.components[static_cast<std::size_t>(s)]));
    }

    ObstructionVector out;
    out.k = k;
    for (int l = k; l <= 2 * k - 1; ++l) {
        MultiVector acc(n, 3);
        for (int i = 0; i <= l - k; ++i)
            acc = acc + schouten(vm[static_cast<std::size_t>(i)],
                                 homogeneous_part(rec, l - i).mv);
        for (int i = l - k + 1; i <= k - 1; ++i) {
            int j = l - i; // also in l-k+1 .. k-1
            acc = acc + schouten(vm[static_cast<std::size_t>(i)],
                                 vm[static_cast<std::size_t>(j)])
                            .scaled(Rational(1, 2));
        }
        out.components.push_back(GradedBasis(n, 3, l - 1).coords(acc));
    }
    return out;
}

// ---- perturbations --------------------------------------------------------

MultiVector perturb_2d(const MultiVector& pi, double eps, std::uint64_t seed) {
    check_bivector(pi);
    if (pi.dim() != 2)
        throw DimensionMismatch("perturb_2d runs on bivectors over R^2");
    std::mt19937_64 rng(seed);
    MultiVector delta(2, 2);
    delta.add_term({1, 2}, dyadic_poly(rng, 2, 0, 2));
    return pi + delta.scaled(exact_of(eps));
}

MultiVector perturb_3d(const MultiVector& pi, int k, double eps,
                       std::uint64_t seed, int truncation_degree) {
    check_bivector(pi);
    if (pi.dim() != 3)
        throw DimensionMismatch("perturb_3d runs on bivectors over R^3");
    if (k < 1) throw InvalidInput("order k must be >= 1");
    if (truncation_degree < 2 * k)
        throw TruncationTooLow(
            "truncation degree " + std::to_string(truncation_degree) +
            " is below 2k = " + std::to_string(2 * k) +
            "; Jacobi defect orders k-1..2k-2 would be inexact");
    if (!jacobiator(pi).is_zero())
        throw NotPoisson("bivector fails the Jacobi identity: [pi,pi] != 0");

    const int n = 3, D = truncation_degree;
    const Rational e = exact_of(eps);
    std::mt19937_64 rng(seed);
    Polynomial g = dyadic_poly(rng, n, 0, 2);

    // near-identity map phi(x) = x + e*h(x), redrawn in the (adversarial
    // eps) case where the linear part fails to invert
    std::vector<Polynomial> h;
    RationalMatrix A(n, n);
    for (;;) {
        h.clear();
        for (int a = 0; a < n; ++a) h.push_back(dyadic_poly(rng, n, 1, 2));
        A = RationalMatrix::identity(n);
        for (int a = 0; a < n; ++a)
            for (int j = 0; j < n; ++j)
                A.at(a, j) += e * h[static_cast<std::size_t>(a)].coeff(
                                      Monomial::variable(n, j + 1));
        if (A.rank() == n) break;
    }

    // formal inverse psi of phi, one homogeneous degree slice at a time:
    //   psi^(1) = A^{-1} x,   psi^(d) = -e * A^{-1} [h_2(psi)]^(d).
    // Slices below d are final when slice d is assembled, so each slice
    // product is formed exactly once across the whole recursion.
    RationalMatrix Ainv = A.inverse();
    std::vector<std::vector<Polynomial>> psi_slice(
        static_cast<std::size_t>(n),
        std::vector<Polynomial>(static_cast<std::size_t>(D + 1), Polynomial(n)));
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < n; ++j)
            psi_slice[static_cast<std::size_t>(a)][1] =
                psi_slice[static_cast<std::size_t>(a)][1] +
                Polynomial::variable(n, j + 1).scaled(Ainv.at(a, j));
    std::vector<Polynomial> h2;
    for (int a = 0; a < n; ++a)
        h2.push_back(poly_part(h[static_cast<std::size_t>(a)], 2));
    for (int d = 2; d <= D; ++d) {
        std::vector<Polynomial> img(static_cast<std::size_t>(n), Polynomial(n));
        for (int a = 0; a < n; ++a)
            for (const auto& [m, c] : h2[static_cast<std::size_t>(a)].terms()) {
                // m = x_i x_j with i <= j, possibly equal
                int idx[2] = {0, 0}, t = 0;
                for (int v = 0; v < n; ++v)
                    for (std::uint32_t r = 0; r < m.exps[static_cast<std::size_t>(v)];
                         ++r)
                        idx[t++] = v;
                Polynomial s(n);
                for (int da = 1; da <= d - 1; ++da)
                    s = s + psi_slice[static_cast<std::size_t>(idx[0])]
                                     [static_cast<std::size_t>(da)] *
                                psi_slice[static_cast<std::size_t>(idx[1])]
                                         [static_cast<std::size_t>(d - da)];
                img[static_cast<std::size_t>(a)] =
                    img[static_cast<std::size_t>(a)] + s.scaled(c);
            }
        for (int a = 0; a < n; ++a) {
            Polynomial corr(n);
            for (int b = 0; b < n; ++b)
                corr = corr + img[static_cast<std::size_t>(b)].scaled(Ainv.at(a, b));
            psi_slice[static_cast<std::size_t>(a)][static_cast<std::size_t>(d)] =
                corr.scaled(-e);
        }
    }
    std::vector<Polynomial> psi(static_cast<std::size_t>(n), Polynomial(n));
    for (int a = 0; a < n; ++a)
        for (int d = 1; d <= D; ++d)
            psi[static_cast<std::size_t>(a)] =
                psi[static_cast<std::size_t>(a)] +
                psi_slice[static_cast<std::size_t>(a)][static_cast<std::size_t>(d)];

    // memoized truncated powers of the psi components, for composition
    std::vector<std::vector<Polynomial>> pw(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pw[static_cast<std::size_t>(i)] = {
            Polynomial::constant(n, Rational(1)), psi[static_cast<std::size_t>(i)]};
    auto power = [&](int i, std::uint32_t exp) -> const Polynomial& {
        auto& col = pw[static_cast<std::size_t>(i)];
        while (col.size() <= exp)
            col.push_back(truncmul(col.back(), psi[static_cast<std::size_t>(i)], D));
        return col[exp];
    };
    // psi has no constant term, so terms of degree > D compose to zero mod D
    auto compose_trunc = [&](const Polynomial& p) {
        Polynomial out(n);
        for (const auto& [m, c] : p.terms()) {
            if (m.degree() > D) continue;
            Polynomial term = Polynomial::constant(n, c);
            for (int i = 0; i < n; ++i)
                if (m.exps[static_cast<std::size_t>(i)] > 0)
                    term = truncmul(term,
                                    power(i, m.exps[static_cast<std::size_t>(i)]), D);
            out = out + term;
        }
        return out;
    };

    // pushforward: (phi_* pi)^{ab} = sum_{i<j} (J_ai J_bj - J_aj J_bi) pi^{ij}
    // evaluated along psi, with J the Jacobian of phi
    std::vector<std::vector<Polynomial>> J(
        static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n), Polynomial(n)));
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i) {
            Polynomial d = h[static_cast<std::size_t>(a)].derivative(i + 1).scaled(e);
            if (a == i) d = d + Polynomial::constant(n, Rational(1));
            J[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] = d;
        }

    Polynomial f = Polynomial::constant(n, Rational(1)) + g.scaled(e);
    MultiVector out(n, 2);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Polynomial q(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    Polynomial pij = pi.coeff({i + 1, j + 1});
                    if (pij.is_zero()) continue;
                    Polynomial minor =
                        J[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] *
                            J[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)] -
                        J[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] *
                            J[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)];
                    q = q + minor * pij;
                }
            Polynomial moved = truncmul(compose_trunc(q), f, D);
            if (!moved.is_zero()) out.add_term({a + 1, b + 1}, moved);
        }

    // defensive: integrability must hold below the truncation degree
    const MultiVector defect = jacobiator(out);
    for (const auto& [t, poly] : defect.terms()) {
        (void)t;
        for (const auto& [m, c] : poly.terms()) {
            (void)c;
            if (m.degree() < D)
                throw Error("3D perturbation lost integrability below the "
                            "truncation degree (internal error): defect at "
                            "degree " + std::to_string(m.degree()));
        }
    }
    return out;
}

// ---- numerical search -----------------------------------------------------

namespace {

double norm2(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

std::vector<double> stacked_jet(const MultiVector& L, const std::vector<double>& p,
                                int k) {
    JetVector jet = jet_extension(L, p, k);
    std::vector<double> r;
    for (const auto& comp : jet.components) r.insert(r.end(), comp.begin(), comp.end());
    return r;
}

// Solves the square system M x = b by Gaussian elimination with partial
// pivoting; returns false when M is numerically singular.
bool solve_dense(std::vector<std::vector<double>> M, std::vector<double> b,
                 std::vector<double>& x) {
    const int n = static_cast<int>(b.size());
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::fabs(M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) >
                std::fabs(M[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)]))
                piv = r;
        if (std::fabs(M[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)]) <
            1e-300)
            return false;
        std::swap(M[static_cast<std::size_t>(c)], M[static_cast<std::size_t>(piv)]);
        std::swap(b[static_cast<std::size_t>(c)], b[static_cast<std::size_t>(piv)]);
        for (int r = c + 1; r < n; ++r) {
            double f = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] /
                       M[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
            if (f == 0.0) continue;
            for (int j = c; j < n; ++j)
                M[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
                    f * M[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
            b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(c)];
        }
    }
    x.assign(static_cast<std::size_t>(n), 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[static_cast<std::size_t>(r)];
        for (int j = r + 1; j < n; ++j)
            s -= M[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *
                 x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(r)] = s / M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
    }
    return true;
}

} // namespace

FindResult find_singularity(const MultiVector& L, int k,
                            const std::vector<double>& x0, double radius,
                            double tol) {
    check_bivector(L);
    if (k < 1) throw InvalidInput("order k must be >= 1");
    const int n = L.dim();
    if (static_cast<int>(x0.size()) != n)
        throw DimensionMismatch("start point dimension does not match the field");
    if (!(radius > 0) || !(tol > 0))
        throw InvalidInput("radius and tolerance must be positive");

    const double step = 1e-6;
    std::vector<double> p = x0;
    std::vector<double> r = stacked_jet(L, p, k);
    double res = norm2(r);
    const int m = static_cast<int>(r.size());

    for (int iter = 0; iter < 100 && res >= tol; ++iter) {
        // numerical Jacobian, central differences
        std::vector<std::vector<double>> Jm(
            static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(n), 0.0));
        for (int c = 0; c < n; ++c) {
            std::vector<double> pp = p, pm = p;
            pp[static_cast<std::size_t>(c)] += step;
            pm[static_cast<std::size_t>(c)] -= step;
            std::vector<double> rp = stacked_jet(L, pp, k);
            std::vector<double> rm = stacked_jet(L, pm, k);
            for (int i = 0; i < m; ++i)
                Jm[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
                    (rp[static_cast<std::size_t>(i)] - rm[static_cast<std::size_t>(i)]) /
                    (2 * step);
        }
        // normal equations with a tiny Tikhonov floor
        std::vector<std::vector<double>> JtJ(
            static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
        std::vector<double> g(static_cast<std::size_t>(n), 0.0);
        double maxdiag = 0.0;
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                double s = 0;
                for (int i = 0; i < m; ++i)
                    s += Jm[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] *
                         Jm[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)];
                JtJ[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = s;
            }
            maxdiag = std::max(maxdiag, JtJ[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)]);
            double s = 0;
            for (int i = 0; i < m; ++i)
                s += Jm[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] *
                     r[static_cast<std::size_t>(i)];
            g[static_cast<std::size_t>(a)] = -s;
        }
        double lam = 1e-10 * std::max(1.0, maxdiag);
        for (int a = 0; a < n; ++a)
            JtJ[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] += lam;

        std::vector<double> delta;
        if (!solve_dense(JtJ, g, delta)) break;

        // backtracking; steps are clipped to the search ball
        bool accepted = false;
        double t = 1.0;
        for (int bt = 0; bt < 30; ++bt, t *= 0.5) {
            std::vector<double> cand(static_cast<std::size_t>(n));
            for (int c = 0; c < n; ++c)
                cand[static_cast<std::size_t>(c)] =
                    p[static_cast<std::size_t>(c)] + t * delta[static_cast<std::size_t>(c)];
            double dist = 0;
            for (int c = 0; c < n; ++c) {
                double d = cand[static_cast<std::size_t>(c)] - x0[static_cast<std::size_t>(c)];
                dist += d * d;
            }
            dist = std::sqrt(dist);
            if (dist > radius)
                for (int c = 0; c < n; ++c)
                    cand[static_cast<std::size_t>(c)] =
                        x0[static_cast<std::size_t>(c)] +
                        (cand[static_cast<std::size_t>(c)] - x0[static_cast<std::size_t>(c)]) *
                            (radius / dist);
            std::vector<double> rc = stacked_jet(L, cand, k);
            double nc = norm2(rc);
            if (nc < res) {
                p = std::move(cand);
                r = std::move(rc);
                res = nc;
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }

    FindResult out;
    out.point = p;
    out.residual = res;
    out.found = (res < tol);
    return out;
}

// ---- experiment -----------------------------------------------------------

ExperimentReport stability_experiment(const MultiVector& pi, int k, int trials,
                                      double eps, std::uint64_t seed) {
    check_bivector(pi);
    const int n = pi.dim();
    if (n != 2 && n != 3)
        throw InvalidInput("perturbation experiments run on R^2 or R^3");
    if (k < 1) throw InvalidInput("order k must be >= 1");
    if (trials < 0) throw InvalidInput("negative trial count");
    if (n == 3 && !jacobiator(pi).is_zero())
        throw NotPoisson("bivector fails the Jacobi identity: [pi,pi] != 0");

    ExactJet j0 = jet_extension_exact(
        pi, std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)), k);
    for (const auto& comp : j0.components)
        for (const auto& c : comp)
            if (!c.is_zero())
                throw InvalidInput(
                    "the origin is not a singular point of order k: a jet "
                    "component below k is nonzero");
    if (homogeneous_part(pi, k).mv.is_zero())
        throw InvalidInput("the degree-k part at the origin vanishes; the "
                           "singular point has order above k");

    ExperimentReport rep;
    rep.trials = trials;
    rep.k = k;
    rep.epsilon = eps;
    rep.seed = seed;
    const std::vector<double> origin(static_cast<std::size_t>(n), 0.0);
    for (int t = 0; t < trials; ++t) {
        std::uint64_t s = sub_seed(seed, static_cast<std::uint64_t>(t));
        MultiVector moved = (n == 2) ? perturb_2d(pi, eps, s)
                                     : perturb_3d(pi, k, eps, s, 2 * k + 2);
        FindResult fr = find_singularity(moved, k, origin);
        TrialResult tr;
        tr.found = fr.found;
        tr.point = fr.point;
        tr.residual = fr.residual;
        tr.distance = norm2(fr.point);
        if (tr.found) ++rep.successes;
        rep.results.push_back(std::move(tr));
    }
    return rep;
}

} // namespace kstab
