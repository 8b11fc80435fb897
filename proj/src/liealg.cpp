#include "kstab/liealg.hpp"

#include <algorithm>
#include <map>

#include "kstab/basis.hpp"
#include "kstab/errors.hpp"

namespace kstab {

// ---- LieAlgebra -----------------------------------------------------------

LieAlgebra::LieAlgebra(std::vector<std::vector<std::vector<Rational>>> a)
    : r_(static_cast<int>(a.size())), a_(std::move(a)) {
    if (r_ < 1) throw InvalidInput("Lie algebra dimension must be >= 1");
    for (const auto& plane : a_) {
        if (static_cast<int>(plane.size()) != r_)
            throw InvalidInput("structure constants are not a cube");
        for (const auto& row : plane)
            if (static_cast<int>(row.size()) != r_)
                throw InvalidInput("structure constants are not a cube");
    }
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j)
            for (int k = 0; k < r_; ++k)
                if (a_[i][j][k] != -a_[j][i][k])
                    throw InvalidInput("structure constants are not antisymmetric");
    // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j)
            for (int k = 0; k < r_; ++k)
                for (int l = 0; l < r_; ++l) {
                    Rational acc(0);
                    for (int m = 0; m < r_; ++m)
                        acc += a_[i][j][m] * a_[m][k][l] + a_[j][k][m] * a_[m][i][l] +
                               a_[k][i][m] * a_[m][j][l];
                    if (!acc.is_zero())
                        throw InvalidInput("structure constants violate the Jacobi identity");
                }
}

// ---- Representation -------------------------------------------------------

Representation::Representation(LieAlgebra g, std::vector<RationalMatrix> rho)
    : g_(std::move(g)), d_(0), rho_(std::move(rho)) {
    if (static_cast<int>(rho_.size()) != g_.dim())
        throw InvalidInput("one matrix per Lie algebra basis element is required");
    d_ = rho_[0].rows();
    for (const auto& m : rho_)
        if (m.rows() != d_ || m.cols() != d_)
            throw InvalidInput("representation matrices must be square of one size");
    const int r = g_.dim();
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            RationalMatrix lhs(d_, d_);
            for (int l = 0; l < r; ++l) {
                if (g_.a(i, j, l).is_zero()) continue;
                for (int p = 0; p < d_; ++p)
                    for (int q = 0; q < d_; ++q)
                        lhs.at(p, q) += g_.a(i, j, l) * rho_[static_cast<std::size_t>(l)].at(p, q);
            }
            RationalMatrix comm = rho_[static_cast<std::size_t>(i)].multiply(rho_[static_cast<std::size_t>(j)]);
            RationalMatrix ji = rho_[static_cast<std::size_t>(j)].multiply(rho_[static_cast<std::size_t>(i)]);
            for (int p = 0; p < d_; ++p)
                for (int q = 0; q < d_; ++q)
                    if (lhs.at(p, q) != comm.at(p, q) - ji.at(p, q))
                        throw InvalidInput(
                            "matrices do not represent the bracket: "
                            "rho([e_i,e_j]) != [rho(e_i), rho(e_j)]");
        }
}

Representation Representation::trivial(LieAlgebra g, int d) {
    if (d < 1) throw InvalidInput("module dimension must be >= 1");
    std::vector<RationalMatrix> zeros(static_cast<std::size_t>(g.dim()),
                                      RationalMatrix(d, d));
    return Representation(std::move(g), std::move(zeros));
}

// ---- linear bivectors -----------------------------------------------------

MultiVector lie_poisson(const LieAlgebra& g) {
    const int r = g.dim();
    MultiVector pi(r, 2);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            Polynomial p(r);
            for (int l = 0; l < r; ++l)
                if (!g.a(i, j, l).is_zero())
                    p = p + Polynomial::variable(r, l + 1).scaled(g.a(i, j, l));
            if (!p.is_zero())
                pi.add_term({static_cast<std::uint8_t>(i + 1),
                             static_cast<std::uint8_t>(j + 1)},
                            p);
        }
    return pi;
}

MultiVector action_algebroid(const Representation& rho_dual) {
    const LieAlgebra& g = rho_dual.algebra();
    const int r = g.dim();
    const int d = rho_dual.module_dim();
    const int n = d + r;
    MultiVector pi(n, 2);
    // fiber-fiber part: sum a(i,j,l) y_l dy_i ^ dy_j
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            Polynomial p(n);
            for (int l = 0; l < r; ++l)
                if (!g.a(i, j, l).is_zero())
                    p = p + Polynomial::variable(n, d + l + 1).scaled(g.a(i, j, l));
            if (!p.is_zero())
                pi.add_term({static_cast<std::uint8_t>(d + i + 1),
                             static_cast<std::uint8_t>(d + j + 1)},
                            p);
        }
    // action part: sum_l [M_p]_{q,l} x_l on e[q, d+p]
    for (int p = 0; p < r; ++p) {
        const RationalMatrix& m = rho_dual.rho(p);
        for (int q = 0; q < d; ++q) {
            Polynomial c(n);
            for (int l = 0; l < d; ++l)
                if (!m.at(q, l).is_zero())
                    c = c + Polynomial::variable(n, l + 1).scaled(m.at(q, l));
            if (!c.is_zero())
                pi.add_term({static_cast<std::uint8_t>(q + 1),
                             static_cast<std::uint8_t>(d + p + 1)},
                            c);
        }
    }
    if (!jacobiator(pi).is_zero())
        throw Error("action bivector fails the Jacobi identity (internal error)");
    if (!fiberwise_linear_check(pi, FiberedSpace{d, r}))
        throw Error("action bivector is not fiber-wise linear (internal error)");
    return pi;
}

// ---- Chevalley-Eilenberg complex ------------------------------------------

RationalMatrix ce_differential_matrix(const Representation& rep, int p) {
    const int r = rep.algebra().dim();
    const int d = rep.module_dim();
    if (p < -1 || p > r)
        throw InvalidInput("cochain degree out of range");
    if (p == -1) return RationalMatrix(d, 0);

    auto dom = index_tuples(r, p);
    auto cod = index_tuples(r, p + 1);
    std::map<IndexTuple, int> dom_index;
    for (int i = 0; i < static_cast<int>(dom.size()); ++i) dom_index[dom[i]] = i;

    RationalMatrix M(static_cast<int>(cod.size()) * d,
                     static_cast<int>(dom.size()) * d);
    for (int wi = 0; wi < static_cast<int>(cod.size()); ++wi) {
        const IndexTuple& W = cod[static_cast<std::size_t>(wi)];
        const int np = static_cast<int>(W.size()); // p + 1 entries

        // action terms: sum_a (-1)^a rho(W_a) xi(W \ a)
        for (int a = 0; a < np; ++a) {
            IndexTuple U;
            for (int t = 0; t < np; ++t)
                if (t != a) U.push_back(W[t]);
            auto it = dom_index.find(U);
            if (it == dom_index.end()) continue;
            const RationalMatrix& m = rep.rho(W[a] - 1);
            const Rational sign(a % 2 == 0 ? 1 : -1);
            for (int q = 0; q < d; ++q)
                for (int v = 0; v < d; ++v)
                    if (!m.at(q, v).is_zero())
                        M.at(wi * d + q, it->second * d + v) += sign * m.at(q, v);
        }
        // bracket terms: sum_{a<b} (-1)^{a+b} xi([W_a, W_b] ^ (W \ {a,b}))
        for (int a = 0; a < np; ++a)
            for (int b = a + 1; b < np; ++b) {
                auto br = rep.algebra().bracket(W[a] - 1, W[b] - 1);
                IndexTuple rest;
                for (int t = 0; t < np; ++t)
                    if (t != a && t != b) rest.push_back(W[t]);
                for (int l = 0; l < r; ++l) {
                    if (br[static_cast<std::size_t>(l)].is_zero()) continue;
                    auto gl = static_cast<std::uint8_t>(l + 1);
                    if (std::find(rest.begin(), rest.end(), gl) != rest.end()) continue;
                    IndexTuple U = rest;
                    auto pos = std::lower_bound(U.begin(), U.end(), gl);
                    const int smaller = static_cast<int>(pos - U.begin());
                    U.insert(pos, gl);
                    auto it = dom_index.find(U);
                    if (it == dom_index.end()) continue;
                    Rational sign((a + b + smaller) % 2 == 0 ? 1 : -1);
                    Rational c = sign * br[static_cast<std::size_t>(l)];
                    for (int v = 0; v < d; ++v)
                        M.at(wi * d + v, it->second * d + v) += c;
                }
            }
    }
    return M;
}

CEReport ce_cohomology(const Representation& rep, int p) {
    const int r = rep.algebra().dim();
    const int d = rep.module_dim();
    if (p < 0 || p > r)
        throw InvalidInput("cochain degree out of range");
    HomologySlice h = homology_slice(ce_differential_matrix(rep, p),
                                     ce_differential_matrix(rep, p - 1));
    CEReport rep_out;
    rep_out.p = p;
    rep_out.dim_v1 = static_cast<int>(binom(r, p - 1)) * d;
    rep_out.dim_v2 = static_cast<int>(binom(r, p)) * d;
    rep_out.dim_v3 = static_cast<int>(binom(r, p + 1)) * d;
    rep_out.dim_ker = h.dim_ker;
    rep_out.dim_im = h.dim_im;
    rep_out.dim_h = h.dim_h;
    rep_out.witness = std::move(h.witness);
    return rep_out;
}

// ---- mu identification ----------------------------------------------------

namespace {

void check_mu_shape(const Representation& rep, const RationalMatrix& mu) {
    if (mu.rows() != rep.algebra().dim() || mu.cols() != rep.module_dim())
        throw DimensionMismatch("mu must be (dim g) x (module dim)");
}

} // namespace

std::vector<Rational> eq1_residual(const Representation& rho_dual,
                                   const RationalMatrix& mu) {
    check_mu_shape(rho_dual, mu);
    const int r = rho_dual.algebra().dim();
    const int d = rho_dual.module_dim();
    std::vector<Rational> res;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            for (int q = 0; q < d; ++q) {
                Rational acc(0);
                // b_{i,v}^j = -[rho(e_i)]_{j,v}
                for (int v = 0; v < d; ++v)
                    acc += mu.at(j, v) * rho_dual.rho(i).at(q, v) -
                           mu.at(i, v) * rho_dual.rho(j).at(q, v);
                for (int u = 0; u < r; ++u)
                    acc -= rho_dual.algebra().a(i, j, u) * mu.at(u, q);
                res.push_back(acc);
            }
    return res;
}

std::vector<Rational> mu_to_cochain(const RationalMatrix& mu) {
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(mu.rows() * mu.cols()));
    for (int u = 0; u < mu.rows(); ++u)
        for (int q = 0; q < mu.cols(); ++q) v.push_back(mu.at(u, q));
    return v;
}

MultiVector mu_to_lin(const RationalMatrix& mu, int d) {
    const int r = mu.rows();
    const int n = d + r;
    if (mu.cols() != d) throw DimensionMismatch("mu must have d columns");
    MultiVector A(n, 2);
    for (int u = 0; u < r; ++u)
        for (int v = 0; v < d; ++v)
            if (!mu.at(u, v).is_zero())
                // dy_u ^ dx_v = -e[v+1, d+u+1]
                A.add_term({static_cast<std::uint8_t>(v + 1),
                            static_cast<std::uint8_t>(d + u + 1)},
                           Polynomial::constant(n, -mu.at(u, v)));
    return A;
}

RationalMatrix mu_from_lin(const MultiVector& A, const FiberedSpace& fs) {
    if (A.dim() != fs.n())
        throw DimensionMismatch("bivector dimension does not match the fibered split");
    if (A.degree() != 2)
        throw InvalidInput("mu extraction takes a bivector");
    RationalMatrix mu(fs.rf, fs.d);
    for (const auto& [t, p] : A.terms()) {
        if (t[0] > fs.d || t[1] <= fs.d)
            throw InvalidInput("bivector has a term outside the dx^dy block");
        auto deg = p.homogeneous_degree();
        if (!deg || *deg != 0)
            throw InvalidInput("mu extraction needs constant coefficients");
        mu.at(t[1] - fs.d - 1, t[0] - 1) = -p.coeff(Monomial::one(fs.n()));
    }
    return mu;
}

IsoCheck iso_check_h2lin_h1(const Representation& rho_dual) {
    const int d = rho_dual.module_dim();
    const int r = rho_dual.algebra().dim();
    FiberedStructure Pi =
        FiberedStructure::of(action_algebroid(rho_dual), FiberedSpace{d, r}, 1);
    IsoCheck out;
    out.dim_h2lin = lin_cohomology(Pi, 0).dim_h;
    out.dim_h1 = ce_cohomology(rho_dual, 1).dim_h;
    out.equal = (out.dim_h2lin == out.dim_h1);
    return out;
}

// ---- sphere-type algebroid ------------------------------------------------

MultiVector monnier_algebroid(int n) {
    if (n <= 1) throw InvalidInput("the sphere algebroid needs n > 1");
    const int d = n + 1;
    const int N = 2 * d;
    Polynomial rho_m1 = Polynomial::constant(N, Rational(-1));
    for (int i = 0; i < d; ++i) {
        Polynomial xi = Polynomial::variable(N, i + 1);
        rho_m1 = rho_m1 + xi * xi;
    }
    MultiVector pi(N, 2);
    for (int i = 0; i < d; ++i)
        pi.add_term({static_cast<std::uint8_t>(i + 1),
                     static_cast<std::uint8_t>(d + i + 1)},
                    rho_m1);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Polynomial c = Polynomial::variable(N, j + 1) *
                               Polynomial::variable(N, d + i + 1) -
                           Polynomial::variable(N, i + 1) *
                               Polynomial::variable(N, d + j + 1);
            pi.add_term({static_cast<std::uint8_t>(d + i + 1),
                         static_cast<std::uint8_t>(d + j + 1)},
                        c.scaled(Rational(2)));
        }
    return pi;
}

// ---- catalog --------------------------------------------------------------

namespace {

std::vector<std::vector<std::vector<Rational>>> zero_cube(int r) {
    return std::vector<std::vector<std::vector<Rational>>>(
        static_cast<std::size_t>(r),
        std::vector<std::vector<Rational>>(
            static_cast<std::size_t>(r),
            std::vector<Rational>(static_cast<std::size_t>(r), Rational(0))));
}

// sets a(i,j,k) = c and a(j,i,k) = -c (0-based)
void set_pair(std::vector<std::vector<std::vector<Rational>>>& a, int i, int j,
              int k, long c) {
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = Rational(c);
    a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = Rational(-c);
}

RationalMatrix mat2(long a, long b, long c, long d) {
    RationalMatrix m(2, 2);
    m.at(0, 0) = Rational(a);
    m.at(0, 1) = Rational(b);
    m.at(1, 0) = Rational(c);
    m.at(1, 1) = Rational(d);
    return m;
}

} // namespace

LieAlgebra abelian_algebra(int r) { return LieAlgebra(zero_cube(r)); }

LieAlgebra aff1_algebra() {
    auto a = zero_cube(2);
    set_pair(a, 0, 1, 1, 1); // [e1, e2] = e2
    return LieAlgebra(std::move(a));
}

Representation aff1_coadjoint() {
    return Representation(aff1_algebra(), {mat2(0, 0, 0, -1), mat2(0, 1, 0, 0)});
}

LieAlgebra sl2_algebra() {
    auto a = zero_cube(3);
    set_pair(a, 0, 1, 1, 2);  // [h, e] = 2e
    set_pair(a, 0, 2, 2, -2); // [h, f] = -2f
    set_pair(a, 1, 2, 0, 1);  // [e, f] = h
    return LieAlgebra(std::move(a));
}

Representation sl2_irrep2() {
    return Representation(sl2_algebra(),
                          {mat2(1, 0, 0, -1), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0)});
}

LieAlgebra heisenberg_algebra() {
    auto a = zero_cube(3);
    set_pair(a, 0, 1, 2, 1); // [e1, e2] = e3
    return LieAlgebra(std::move(a));
}

Representation heisenberg_standard() {
    RationalMatrix e12(3, 3), e23(3, 3), e13(3, 3);
    e12.at(0, 1) = Rational(1);
    e23.at(1, 2) = Rational(1);
    e13.at(0, 2) = Rational(1);
    return Representation(heisenberg_algebra(), {e12, e23, e13});
}

Representation scaling_rep() {
    RationalMatrix one(1, 1);
    one.at(0, 0) = Rational(1);
    return Representation(abelian_algebra(1), {one});
}

} // namespace kstab
