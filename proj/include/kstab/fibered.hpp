#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kstab/cohomology.hpp"
#include "kstab/multivector.hpp"

namespace kstab {

// =========================================================================
// Fiber-wise linear structures on R^d x R^rf.
//
// Coordinates are split as x_1..x_d (base, globals 1..d) followed by
// y_1..y_rf (fiber, globals d+1..d+rf). A bivector is fiber-wise linear
// when its dy^dy coefficients are linear in y, its dx^dy coefficients are
// y-free, and it has no dx^dx part; such bivectors are exactly the ones
// whose bracket preserves fiber-wise linear functions.
// =========================================================================

struct FiberedSpace {
    int d = 0;  // base dimension
    int rf = 0; // fiber rank
    int n() const { return d + rf; }
};

struct FiberwiseDiagnostic {
    bool ok = false;
    std::string detail; // names the violated condition when !ok
    explicit operator bool() const { return ok; }
};

FiberwiseDiagnostic fiberwise_linear_check(const MultiVector& Pi,
                                           const FiberedSpace& fs);

// =========================================================================
// LinGradedBasis — the canonical ordered basis of V_{r,lin}^{(s)}, the
// fiber-wise linear part of V_r^{(s)}(R^{d+rf}). Elements come in two
// families, ordered family (a) first:
//   (a) (x-monomial of degree s-1) * y_u * dy_{T},   |T| = r
//       ordered by T (lex), then u = 1..rf, then monomial (canonical order);
//   (b) (x-monomial of degree s)   * dx_t ^ dy_{S},  |S| = r-1
//       ordered by S (lex), then t = 1..d, then monomial.
// dim = C(rf,r)*rf*C(d+s-2,d-1) + C(rf,r-1)*d*C(d+s-1,d-1).
// =========================================================================
class LinGradedBasis {
public:
    LinGradedBasis(FiberedSpace fs, int r, int s);

    int dim() const { return static_cast<int>(elems_.size()); }
    const FiberedSpace& space() const { return fs_; }
    int r() const { return r_; }
    int s() const { return s_; }

    const std::vector<std::pair<IndexTuple, Monomial>>& elements() const {
        return elems_;
    }

    MultiVector element(int i) const;

    // Position of monomial * e[tuple]; -1 when the pair is not a basis
    // element (in particular when it lies outside the lin subspace).
    int index_of(const IndexTuple& t, const Monomial& m) const;

    // Coordinates of A, which must lie in the span of this basis; a term
    // outside it throws InvalidInput naming the offending term.
    std::vector<Rational> coords(const MultiVector& A) const;

    MultiVector from_coords(const std::vector<Rational>& v) const;

private:
    FiberedSpace fs_;
    int r_, s_;
    std::vector<std::pair<IndexTuple, Monomial>> elems_;
    std::map<std::pair<IndexTuple, Monomial>, int,
             bool (*)(const std::pair<IndexTuple, Monomial>&,
                      const std::pair<IndexTuple, Monomial>&)>
        index_;
};

// A validated fiber-wise linear bivector of homogeneity k: every
// coefficient monomial has total degree k (so the dy^dy part is x-degree
// k-1 times one y, and the dx^dy part is x-degree k). The zero bivector is
// accepted with any declared k >= 1 (trivial structures are legitimate).
struct FiberedStructure {
    MultiVector mv;
    FiberedSpace fs;
    int k = 1;

    static FiberedStructure of(MultiVector m, FiberedSpace fs, int k);
};

// Matrix of schouten(Pi, .) from lin_basis(fs,r,s) to
// lin_basis(fs,r+1,s+k-1). The bracket of a fiber-wise linear structure
// with a lin element always stays in the lin subspace (a y-weight count);
// a term escaping it is therefore reported as ClosureViolation, signalling
// an inconsistent input or a convention bug rather than a user mistake.
RationalMatrix lin_differential_matrix(const FiberedStructure& Pi, int r, int s);

// H^{2,s} of the fiber-wise linear subcomplex; same report shape as
// lp_cohomology. Requires [Pi,Pi] = 0.
CohomologyReport lin_cohomology(const FiberedStructure& Pi, int s);

// Order-k stability certificate over the lin complex: Certified iff
// H^{2,s}_lin = 0 for s = 0..k-1.
StabilityCertificate algebroid_certificate(const FiberedStructure& Pi);

} // namespace kstab
