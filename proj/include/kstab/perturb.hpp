#pragma once

#include <cstdint>
#include <vector>

#include "kstab/multivector.hpp"

namespace kstab {

// =========================================================================
// Numerical validation harness: jets of bivector fields, the obstruction
// map attached to an order-k singular point, structure-preserving random
// perturbations, and a Gauss-Newton search for nearby singular points.
//
// Perturbation coefficients are dyadic rationals (multiples of 2^-16), so
// perturbed structures remain exact multivectors and every structural
// claim about them (Jacobi identity, truncation-order checks, seeded
// reproducibility) is an exact statement. Floating point enters only in
// the jet evaluations driving the numerical search.
// =========================================================================

// The jet (Lambda^(0)_p, ..., Lambda^(k-1)_p) of a bivector field at p:
// component s holds the coordinates of the degree-s homogeneous part of
// the field recentered at p, in the canonical degree-s basis of bivectors.
struct ExactJet {
    std::vector<Rational> point;
    int k = 1;
    std::vector<std::vector<Rational>> components; // s = 0..k-1
};

// Same data evaluated in double precision at a floating base point.
struct JetVector {
    std::vector<double> point;
    int k = 1;
    std::vector<std::vector<double>> components; // s = 0..k-1
};

// Exact jet extension; component s has length dim V_2^{(s)}(R^n).
ExactJet jet_extension_exact(const MultiVector& L, const std::vector<Rational>& p,
                             int k);

// Floating jet extension (direct Taylor-shift evaluation; no exact
// intermediate). Agrees with the exact path up to roundoff.
JetVector jet_extension(const MultiVector& L, const std::vector<double>& p, int k);

// Components F^l for l = k..2k-1, each a coordinate vector in the
// canonical basis of V_3^{(l-1)}(R^n).
struct ObstructionVector {
    int k = 1;
    std::vector<std::vector<Rational>> components; // l = k..2k-1
};

// The obstruction map at p applied to a jet-shaped input v:
//   F^l(v_0..v_{k-1}) = sum_{i <= l-k} [v_i, Lambda^(l-i)_p]
//                     + 1/2 sum_{l-k < i,j, i+j=l} [v_i, v_j],
// computed with the exact Schouten bracket. For Poisson Lambda it
// annihilates the jet of Lambda itself: F(jet_extension(Lambda,p,k)) = 0.
ObstructionVector obstruction_map(const MultiVector& L,
                                  const std::vector<Rational>& p, int k,
                                  const ExactJet& v);

// pi + eps * Delta on R^2, where Delta is a seeded random bivector whose
// coefficient is a polynomial of degree <= 2 with dyadic coefficients in
// [-1,1]. Every bivector on R^2 is Poisson, so no structure is lost.
MultiVector perturb_2d(const MultiVector& pi, double eps, std::uint64_t seed);

// Integrability-preserving perturbation on R^3: f * (phi_* pi) truncated at
// coefficient degree D, with f = 1 + eps*g (g random of degree <= 2) and
// phi(x) = x + eps*h(x) a random polynomial near-identity map (h of degree
// 1..2; no constant term, so the origin stays a singular point and the
// formal inverse of phi exists over the rationals). The homogeneous parts
// of the Jacobi defect of the result vanish below degree D (checked).
// Throws TruncationTooLow when D < 2k: orders k-1..2k-2 of the defect must
// be exact for an order-k experiment.
MultiVector perturb_3d(const MultiVector& pi, int k, double eps,
                       std::uint64_t seed, int truncation_degree);

struct FindResult {
    bool found = false;
    std::vector<double> point;
    double residual = 0.0; // Euclidean norm of the stacked jet at `point`
};

// Minimizes the squared norm of the stacked jet_extension(L, p, k)
// coefficients over the closed ball of the given radius around x0, by
// damped Gauss-Newton with a numerically differentiated Jacobian (central
// differences) and backtracking line search. found == true iff the
// residual dropped below tol inside the ball.
FindResult find_singularity(const MultiVector& L, int k,
                            const std::vector<double>& x0, double radius = 0.5,
                            double tol = 1e-9);

struct TrialResult {
    bool found = false;
    std::vector<double> point;
    double residual = 0.0;
    double distance = 0.0; // of `point` from the origin
};

struct ExperimentReport {
    int trials = 0;
    int successes = 0;
    int k = 1;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    std::vector<TrialResult> results; // one entry per trial, in trial order
};

// Perturbs pi `trials` times (perturb_2d or perturb_3d by dimension; the
// 3D truncation degree is 2k+2) and searches for an order-k singular point
// near the origin each time. Each trial derives its own deterministic
// sub-seed from (seed, trial index), so reports are reproducible bit for
// bit. Requires an order-k singular point of pi at the origin: components
// 0..k-1 of the exact jet vanish there and the degree-k part does not.
ExperimentReport stability_experiment(const MultiVector& pi, int k, int trials,
                                      double eps, std::uint64_t seed);

} // namespace kstab
