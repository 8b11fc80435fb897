#pragma once

#include <string>
#include <vector>

#include "kstab/cohomology.hpp"
#include "kstab/multivector.hpp"

namespace kstab {

// =========================================================================
// Three-dimensional toolkit: modular vector field, algebraic isolation of
// the modular field's zero, the Liouville-wedge decomposition of homogeneous
// Poisson bivectors on R^3, and the cyclic example family.
// =========================================================================

// Modular vector field of a bivector with respect to the standard volume,
// X_mod(f) = div(pi(., df)); in coordinates X^i = sum_j d_j pi^{ji}. Anchored
// on x e[1,2] |-> e[2] (the opposite pairing would flip the sign; this choice
// makes the Liouville decomposition below hold with the factor +1/(k+1)).
// Defined for every bivector; linear in pi; maps k-homogeneous coefficients
// to (k-1)-homogeneous ones.
MultiVector modular_vector_field(const MultiVector& pi);

enum class IsolationOutcome { Isolated, Undecided };

inline const char* isolation_name(IsolationOutcome o) {
    return o == IsolationOutcome::Isolated ? "Isolated" : "Undecided";
}

// One homogeneity slice of the ideal generated by a field's components:
// rank of { m * X_i : deg(m) = degree - deg(X_i) } inside the space of all
// degree-`degree` polynomials (of dimension `dim`).
struct IsolationSlice {
    int degree = 0;
    int rank = 0;
    int dim = 0;
};

struct IsolationVerdict {
    IsolationOutcome outcome = IsolationOutcome::Undecided;
    int isolated_degree = -1; // first full slice; -1 when Undecided
    int bound = 0;            // largest degree examined
    std::vector<IsolationSlice> table;
};

// Default search depth for a component degree: generous enough for the
// bundled examples while keeping slices small.
inline int default_isolation_bound(int component_degree) {
    return 2 * component_degree + 3;
}

// Tests whether the origin is an algebraically isolated zero of X on R^3:
// the ideal generated by the components has finite codimension iff some
// homogeneous slice of it is full, and fullness persists in higher degrees
// (verified one degree past the hit as an internal sanity check). Components
// must be homogeneous of a single common degree <= bound; the identically
// zero field yields Undecided with an empty table.
IsolationVerdict algebraically_isolated(const MultiVector& X, int bound);

// Exact test of pi = (1/(k+1)) * I ^ X with I the Liouville field on R^3.
bool liouville_decomposition_check(const HomogeneousMultiVector& pi,
                                   const MultiVector& X, int k);

// The cyclic degree-k family on R^3 (k >= 2):
//   (x y^{k-1} - y x^{k-1}) e[1,2] + (y z^{k-1} - z y^{k-1}) e[2,3]
//                                  + (z x^{k-1} - x z^{k-1}) e[3,1].
// Poisson for every k; degenerates to 0 at k = 2 (callers that want a
// warning can test is_zero on the result).
HomogeneousMultiVector example_pi_k(int k);

enum class ModularVerdict { CertifiedViaModular, Inconclusive };

inline const char* modular_verdict_name(ModularVerdict v) {
    return v == ModularVerdict::CertifiedViaModular ? "CertifiedViaModular"
                                                    : "Inconclusive";
}

struct ModularCertificate {
    ModularVerdict verdict = ModularVerdict::Inconclusive;
    MultiVector modular_field{3, 1};
    IsolationVerdict isolation;
    std::string note; // reason when Inconclusive without an isolation run
};

// Sufficient k-stability shortcut on R^3: a homogeneous Poisson bivector
// whose modular field vanishes at the origin and has an algebraically
// isolated zero there is k-stable. Inconclusive is an honest "this shortcut
// did not certify" (the full slice-by-slice certificate remains
// stability_certificate); it never contradicts that certificate.
ModularCertificate lemma33_certificate(const HomogeneousMultiVector& pi_k, int bound);

} // namespace kstab
