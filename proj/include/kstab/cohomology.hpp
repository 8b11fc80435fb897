#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kstab/basis.hpp"
#include "kstab/matrix.hpp"

namespace kstab {

// Common polynomial degree of a multivector's coefficients; rejects the zero
// multivector and mixed-degree input (silent truncation would hide user
// errors).
int infer_homogeneity(const MultiVector& pi);

// Matrix of A |-> [pi_k, A] from the canonical basis of V_r^{(s)} to the
// canonical basis of V_{r+1}^{(s+k-1)}, columns indexed by the domain basis.
// Defined for any homogeneous bivector pi_k; the Jacobi identity is NOT
// required here.
RationalMatrix differential_matrix(const HomogeneousMultiVector& pi_k, int r, int s);

// One homogeneity slice of the degree-2 cohomology of d = [pi_k, .]:
// H^{2,s} = ker(d_2^s) / im(d_1^{s-k+1}).
struct CohomologyReport {
    int s = 0;        // homogeneity of the middle space
    int k = 0;        // polynomial degree of pi_k
    int dim_v1 = 0;   // dim of the domain slice V_1^{(s-k+1)}
    int dim_v2 = 0;   // dim of the middle slice V_2^{(s)}
    int dim_v3 = 0;   // dim of the codomain slice V_3^{(s+k-1)}
    int dim_ker = 0;  // dim ker d_2^s
    int dim_im = 0;   // dim im d_1^{s-k+1}
    int dim_h = 0;    // dim H^{2,s} = dim_ker - dim_im
    // A cocycle that is not a coboundary; present iff dim_h > 0. Chosen
    // deterministically: first kernel basis vector (canonical ordering)
    // whose addition raises the rank of the image.
    std::optional<MultiVector> witness;
};

enum class Verdict { Certified, NotCertified };

inline const char* verdict_name(Verdict v) {
    return v == Verdict::Certified ? "Certified" : "NotCertified";
}

struct StabilityCertificate {
    int k = 0;
    Verdict verdict = Verdict::NotCertified;
    bool jacobi_ok = false;
    std::vector<CohomologyReport> reports; // s = 0..k-1
};

// Computes the H^{2,s} slice for a homogeneous Poisson bivector. Checks
// [pi,pi] = 0 (throws NotPoisson otherwise) and verifies d o d = 0 on the
// slice before trusting the ranks.
CohomologyReport lp_cohomology(const HomogeneousMultiVector& pi_k, int s);

// Order-k stability certificate: Certified iff the Jacobi identity holds and
// H^{2,s} = 0 for every s = 0..k-1. k is inferred from the input's
// homogeneity; mixed-degree input is rejected.
StabilityCertificate stability_certificate(const MultiVector& pi);

// The quadratic bivector sum_{i<j} a_{ij} x_i x_j e[i,j] from a full
// antisymmetric matrix of constants.
HomogeneousMultiVector quadratic_diagonal(const std::vector<std::vector<Rational>>& a);

// The diagonal-coefficient criterion: with a extended antisymmetrically,
// lambda_i = sum_j a_{ij}; satisfied iff every lambda_i != 0 and every
// pairwise sum lambda_i + lambda_j != 0 (i < j). Implies H^{2,0} = H^{2,1} = 0
// for the quadratic diagonal structure.
struct Lemma32Result {
    bool satisfied = false;
    std::vector<Rational> lambda;
    std::string reason; // human-readable violation when not satisfied
};
Lemma32Result lemma32_criterion(const std::vector<std::vector<Rational>>& a);

} // namespace kstab
