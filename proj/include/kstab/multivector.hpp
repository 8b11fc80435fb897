#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kstab/polynomial.hpp"

namespace kstab {

// Strictly increasing 1-based coordinate indices naming a wedge of
// coordinate vector fields: {i1 < i2 < ... < ir} stands for
// d/dx_{i1} ^ ... ^ d/dx_{ir}.
using IndexTuple = std::vector<int>;

// Merges two disjoint increasing tuples into one increasing tuple and
// returns the sign of the permutation that sorts the concatenation
// (+1 / -1), or 0 when the tuples share an index (the wedge collapses).
int merge_tuples(const IndexTuple& a, const IndexTuple& b, IndexTuple& out);

// =========================================================================
// MultiVector — a degree-r multivector field on R^n with polynomial
// coefficients: a finite sum  sum_T  P_T(x) * e[T]  over increasing index
// tuples T of length r.
//
// Inserting a term with an unsorted tuple canonicalizes it (sorting the
// indices and multiplying by the permutation sign); repeated indices make
// the term vanish. Zero coefficient polynomials are never stored. Degree-0
// multivectors are plain polynomials under the empty tuple.
// =========================================================================
class MultiVector {
public:
    using TermMap = std::map<IndexTuple, Polynomial>;

    MultiVector(int n, int r);

    static MultiVector zero(int n, int r) { return MultiVector(n, r); }
    static MultiVector function(const Polynomial& f); // degree 0

    int dim() const { return n_; }
    int degree() const { return r_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    // Adds c(x) * e[idx]; idx need not be sorted (sign handled here).
    void add_term(IndexTuple idx, const Polynomial& c);

    // Coefficient polynomial of an (already increasing) tuple.
    Polynomial coeff(const IndexTuple& idx) const;

    MultiVector operator+(const MultiVector& o) const;
    MultiVector operator-(const MultiVector& o) const;
    MultiVector operator-() const;
    MultiVector scaled(const Rational& c) const;

    bool operator==(const MultiVector& o) const;
    bool operator!=(const MultiVector& o) const { return !(*this == o); }

    // Largest total degree over all coefficient monomials; -1 if zero.
    int max_coeff_degree() const;

    // True iff every coefficient monomial has total degree s.
    bool coeffs_homogeneous(int s) const;

    // Common total degree of every coefficient monomial, when one exists.
    std::optional<int> coeff_homogeneous_degree() const;

    // Deterministic rendering, e.g. "x1*x2*e[1,2] - 1/2*e[2,3]".
    std::string str(const std::vector<std::string>& vars) const;

private:
    int n_;
    int r_;
    TermMap terms_;
};

// ---- constructions and operations ---------------------------------------

// Wedge product; graded commutative: wedge(A,B) = (-1)^{ab} wedge(B,A).
MultiVector wedge(const MultiVector& A, const MultiVector& B);

// Schouten–Nijenhuis bracket, the graded Lie bracket on multivector fields
// extending the Lie bracket of vector fields. Convention fixed by
//   [X, f] = X(f),  [X, Y] = Lie bracket,
//   [A, B ^ C] = [A,B] ^ C + (-1)^{(a-1) b} B ^ [A,C],
//   [A, B] = -(-1)^{(a-1)(b-1)} [B, A].
// Computed via the closed odd-coordinate formula
//   [A,B] = (-1)^{a-1} sum_i (dA/dtheta_i)(dB/dx_i)
//                    -  sum_i (dA/dx_i)(dB/dtheta_i),
// where dA/dtheta_i removes index i with the sign (-1)^{position of i} and
// juxtaposition is the wedge of the written factors.
MultiVector schouten(const MultiVector& A, const MultiVector& B);

// [pi, pi] for a bivector; zero iff pi is Poisson.
MultiVector jacobiator(const MultiVector& pi);

// A multivector whose coefficients are all homogeneous of the same degree s.
struct HomogeneousMultiVector {
    MultiVector mv;
    int s;

    // Validates the homogeneity invariant (the zero multivector is
    // homogeneous of every degree).
    static HomogeneousMultiVector of(MultiVector m, int s);
};

// Keeps exactly the coefficient monomials of total degree s.
HomogeneousMultiVector homogeneous_part(const MultiVector& A, int s);

// Substitutes x <- x + p into every coefficient (Taylor expansion at p).
MultiVector recenter(const MultiVector& A, const std::vector<Rational>& p);

// The Euler/Liouville field  sum_i x_i d/dx_i.
MultiVector liouville_field(int n);

// Display names for coordinates: x,y,z when n <= 3, else x1..xn.
std::vector<std::string> default_var_names(int n);

} // namespace kstab
