#pragma once

#include <optional>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

// =========================================================================
// RationalMatrix — dense exact matrix over the rationals.
//
// rank() clears denominators row by row and runs fraction-free Bareiss
// elimination over the integers (all divisions exact), so ranks are immune
// to coefficient growth and rounding. Kernel extraction uses rational
// Gauss–Jordan with deterministic pivoting (first nonzero, row-major), so
// kernel bases and cohomology witnesses are reproducible bit for bit.
// =========================================================================
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols);

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool is_zero() const;
    bool operator==(const RationalMatrix& o) const;

    RationalMatrix multiply(const RationalMatrix& o) const;

    // Exact rank via integer fraction-free elimination.
    int rank() const;

    // Reduced row echelon form; pivot column indices appended to *pivots
    // when non-null.
    RationalMatrix rref(std::vector<int>* pivots = nullptr) const;

    // Basis of the null space {v : Mv = 0}, one vector per free column, in
    // ascending free-column order.
    std::vector<std::vector<Rational>> kernel_basis() const;

    // Copy with one extra column appended on the right.
    RationalMatrix with_column(const std::vector<Rational>& w) const;

    // Determinant (square matrices only).
    Rational det() const;

    // Inverse (square, nonsingular; throws InvalidInput otherwise).
    RationalMatrix inverse() const;

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

// =========================================================================
// Homology of one slice of a chain  A --M1--> B --M2--> C: kernel and image
// dimensions, their difference, and (when it is positive) a witness kernel
// vector outside the image, chosen deterministically as the first kernel
// basis vector whose augmentation raises the image rank.
// =========================================================================
struct HomologySlice {
    int dim_ker = 0;
    int dim_im = 0;
    int dim_h = 0;
    std::optional<std::vector<Rational>> witness;
};

// Requires M2 * M1 = 0 (throws Error otherwise: the caller fed maps that do
// not form a complex).
HomologySlice homology_slice(const RationalMatrix& M2, const RationalMatrix& M1);

} // namespace kstab
