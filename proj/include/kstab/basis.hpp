#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "kstab/multivector.hpp"

namespace kstab {

// Binomial coefficient; 0 when k < 0 or k > n.
std::uint64_t binom(int n, int k);

// All strictly increasing r-tuples from {1..n}, in lexicographic order.
std::vector<IndexTuple> index_tuples(int n, int r);

// =========================================================================
// GradedBasis — the canonical ordered basis of V_r^{(s)}(R^n), the space of
// r-vector fields with s-homogeneous polynomial coefficients.
//
// Elements are monomial * e[tuple]. Ordering: index tuples lexicographically,
// then monomials in the canonical monomial order; this ordering defines the
// rows and columns of every differential matrix, so it is part of the
// engine's reproducibility contract.
//
// dim = C(n,r) * C(n+s-1, n-1); the basis is empty when s < 0 or r > n.
// =========================================================================
class GradedBasis {
public:
    GradedBasis(int n, int r, int s);

    int dim() const { return static_cast<int>(elems_.size()); }
    int n() const { return n_; }
    int r() const { return r_; }
    int s() const { return s_; }

    const std::vector<std::pair<IndexTuple, Monomial>>& elements() const {
        return elems_;
    }

    // The i-th basis element as a multivector.
    MultiVector element(int i) const;

    // Position of monomial * e[tuple] in the ordering; -1 when absent.
    int index_of(const IndexTuple& t, const Monomial& m) const;

    // Coordinates of A, which must be a degree-r multivector with
    // s-homogeneous coefficients (the zero multivector always passes).
    std::vector<Rational> coords(const MultiVector& A) const;

    MultiVector from_coords(const std::vector<Rational>& v) const;

private:
    int n_, r_, s_;
    std::vector<std::pair<IndexTuple, Monomial>> elems_;
    std::map<std::pair<IndexTuple, Monomial>, int,
             bool (*)(const std::pair<IndexTuple, Monomial>&,
                      const std::pair<IndexTuple, Monomial>&)>
        index_;
};

} // namespace kstab
