#pragma once

#include <optional>
#include <vector>

#include "kstab/fibered.hpp"
#include "kstab/matrix.hpp"
#include "kstab/multivector.hpp"

namespace kstab {

// =========================================================================
// Finite-dimensional Lie algebras with rational structure constants, their
// representations, Chevalley-Eilenberg cohomology, and the fiber-wise
// linear bivector of an action algebroid.
// =========================================================================

// Structure constants a(i,j,k) with [e_i, e_j] = sum_k a(i,j,k) e_k,
// 0-based indices. Antisymmetry and the Jacobi identity are validated at
// construction.
class LieAlgebra {
public:
    explicit LieAlgebra(std::vector<std::vector<std::vector<Rational>>> a);

    int dim() const { return r_; }
    const Rational& a(int i, int j, int k) const { return a_[i][j][k]; }

    // Coordinates of [e_i, e_j] in the basis.
    std::vector<Rational> bracket(int i, int j) const { return a_[i][j]; }

private:
    int r_;
    std::vector<std::vector<std::vector<Rational>>> a_;
};

// A representation rho: g -> End(V) given by one d x d matrix per basis
// element; the homomorphism property rho([e_i,e_j]) = [rho_i, rho_j] is
// validated at construction.
class Representation {
public:
    Representation(LieAlgebra g, std::vector<RationalMatrix> rho);

    static Representation trivial(LieAlgebra g, int d);

    const LieAlgebra& algebra() const { return g_; }
    int module_dim() const { return d_; }
    const RationalMatrix& rho(int i) const { return rho_[static_cast<std::size_t>(i)]; }

private:
    LieAlgebra g_;
    int d_;
    std::vector<RationalMatrix> rho_;
};

// The linear bivector of g on R^{dim g}: sum_{i<j} ( sum_l a(i,j,l) x_l ) e[i+1,j+1].
MultiVector lie_poisson(const LieAlgebra& g);

// The fiber-wise linear bivector of the action of g on V (the input is the
// dual action rho on V*, module dimension d):
//   Pi = sum_{i<j} (sum_l a(i,j,l) y_l) dy_i^dy_j + (action part in dx^dy),
// on R^{d + dim g} with the x-block first. With M_p = rho(e_p), the action
// part carries sum_l [M_p]_{q,l} x_l on e[q, d+p]. The result always passes
// fiberwise_linear_check and the Jacobi identity (guaranteed by the
// validated representation axioms; re-checked defensively).
MultiVector action_algebroid(const Representation& rho_dual);

// Matrix of the Chevalley-Eilenberg differential
// Hom(Lambda^p g, V) -> Hom(Lambda^{p+1} g, V),
//   (d xi)(u_0..u_p) = sum_a (-1)^a rho(u_a) xi(.. u_a ..)
//                    + sum_{a<b} (-1)^{a+b} xi([u_a,u_b] ^ ..),
// in the basis ordered by (p-subset lex, then module index). p = -1 gives
// the zero-domain map.
RationalMatrix ce_differential_matrix(const Representation& rep, int p);

struct CEReport {
    int p = 0;
    int dim_v1 = 0; // dim Hom(Lambda^{p-1} g, V)
    int dim_v2 = 0; // dim Hom(Lambda^p g, V)
    int dim_v3 = 0; // dim Hom(Lambda^{p+1} g, V)
    int dim_ker = 0;
    int dim_im = 0;
    int dim_h = 0;
    std::optional<std::vector<Rational>> witness; // cocycle outside the image
};

// dim H^p(g, V) with exact ranks; 0 <= p <= dim g.
CEReport ce_cohomology(const Representation& rep, int p);

// ---- the mu-identification ------------------------------------------------
// A constant matrix mu (rows u = 1..dim g, cols v = 1..d) encodes both the
// bivector sum mu_{u,v} dy_u^dx_v and the 1-cochain xi(e_u) = sum_v
// mu_{u,v} b_v of Hom(g, V). These maps implement the identification and
// the cocycle equation it transports.

// Residual of the coupling equation
//   sum_v (mu_{i,v} b_{j,q}^v - mu_{j,v} b_{i,q}^v) - sum_u a_{i,j}^u mu_{u,q},
// with b_{i,v}^j = -[rho(e_i)]_{j,v}; entries ordered by (pair (i<j) lex,
// then q). Zero iff mu is a cocycle.
std::vector<Rational> eq1_residual(const Representation& rho_dual,
                                   const RationalMatrix& mu);

// mu flattened into the canonical Hom(g, V) coordinate order.
std::vector<Rational> mu_to_cochain(const RationalMatrix& mu);

// The constant bivector sum mu_{u,v} dy_u^dx_v on R^{d + dim g}.
MultiVector mu_to_lin(const RationalMatrix& mu, int d);

// Extracts mu from a constant bivector with only dx^dy terms; inverse of
// mu_to_lin.
RationalMatrix mu_from_lin(const MultiVector& A, const FiberedSpace& fs);

struct IsoCheck {
    bool equal = false;
    int dim_h2lin = 0;
    int dim_h1 = 0;
};

// Compares dim H^{2,0}_lin of the action algebroid with dim H^1(g, V*).
IsoCheck iso_check_h2lin_h1(const Representation& rho_dual);

// The sphere-type algebroid bivector on R^{2n+2} (base x_0..x_n, fiber
// y_0..y_n, globals 1..n+1 and n+2..2n+2):
//   (rho - 1) sum_i dx_i^dy_i + 2 sum_{i<j} (x_j y_i - x_i y_j) dy_i^dy_j,
// rho = x_0^2 + .. + x_n^2. The y^y factor 2 is forced: with factor 1 the
// Jacobi identity fails (see the regression test), while this normalization
// keeps the displayed dx^dy part verbatim and satisfies [Pi,Pi] = 0.
MultiVector monnier_algebroid(int n);

// ---- small catalog used by tests and the registry -------------------------
LieAlgebra abelian_algebra(int r);
LieAlgebra aff1_algebra();       // [e1,e2] = e2
Representation aff1_coadjoint(); // the dual action on R^2
LieAlgebra sl2_algebra();        // (h,e,f): [h,e]=2e, [h,f]=-2f, [e,f]=h
Representation sl2_irrep2();     // two-dimensional irreducible
LieAlgebra heisenberg_algebra(); // [e1,e2] = e3 central
Representation heisenberg_standard(); // strictly upper-triangular on R^3
Representation scaling_rep();    // R acting on R by the identity

} // namespace kstab
