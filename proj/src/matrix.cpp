#include "kstab/matrix.hpp"

#include <algorithm>

#include "kstab/errors.hpp"

namespace kstab {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimensions");
    a_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    RationalMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rational& bkj = o.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

int RationalMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    // Clear denominators row by row; row scaling preserves rank.
    std::vector<std::vector<mpz_class>> m(rows_, std::vector<mpz_class>(cols_));
    for (int i = 0; i < rows_; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < cols_; ++j) {
            mpz_class d = at(i, j).den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = l / g * d;
        }
        for (int j = 0; j < cols_; ++j)
            m[i][j] = at(i, j).num() * (l / at(i, j).den());
    }
    // Bareiss fraction-free elimination.
    int rank = 0;
    mpz_class prev = 1;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows_; ++i)
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int i = rank + 1; i < rows_; ++i) {
            for (int j = col + 1; j < cols_; ++j) {
                mpz_class t = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

RationalMatrix RationalMatrix::rref(std::vector<int>* pivots) const {
    RationalMatrix m = *this;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int i = row; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(row, j), m.at(pivot, j));
        Rational inv = Rational(1) / m.at(row, col);
        for (int j = col; j < cols_; ++j) m.at(row, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col);
            for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        if (pivots) pivots->push_back(col);
        ++row;
    }
    return m;
}

std::vector<std::vector<Rational>> RationalMatrix::kernel_basis() const {
    std::vector<int> pivots;
    RationalMatrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[f] = Rational(1);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -r.at(static_cast<int>(pr), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalMatrix RationalMatrix::with_column(const std::vector<Rational>& w) const {
    if (static_cast<int>(w.size()) != rows_)
        throw DimensionMismatch("appended column has wrong length");
    RationalMatrix m(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        m.at(i, cols_) = w[i];
    }
    return m;
}

Rational RationalMatrix::det() const {
    if (rows_ != cols_) throw InvalidInput("determinant of non-square matrix");
    RationalMatrix m = *this;
    Rational d(1);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int i = col; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(col, j), m.at(pivot, j));
            d = -d;
        }
        d *= m.at(col, col);
        Rational inv = Rational(1) / m.at(col, col);
        for (int i = col + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col) * inv;
            for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw InvalidInput("inverse of non-square matrix");
    RationalMatrix aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Rational(1);
    }
    std::vector<int> pivots;
    RationalMatrix r = aug.rref(&pivots);
    if (static_cast<int>(pivots.size()) != rows_ || (rows_ > 0 && pivots[rows_ - 1] >= cols_))
        throw InvalidInput("matrix is singular");
    for (int k = 0; k < rows_; ++k)
        if (pivots[k] != k) throw InvalidInput("matrix is singular");
    RationalMatrix inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
    return inv;
}

HomologySlice homology_slice(const RationalMatrix& M2, const RationalMatrix& M1) {
    if (M1.rows() != M2.cols())
        throw DimensionMismatch("chain maps do not compose");
    if (!M2.multiply(M1).is_zero())
        throw Error("differential does not square to zero (internal error)");
    HomologySlice h;
    h.dim_im = M1.rank();
    h.dim_ker = M2.cols() - M2.rank();
    h.dim_h = h.dim_ker - h.dim_im;
    if (h.dim_h > 0) {
        for (const auto& w : M2.kernel_basis())
            if (M1.with_column(w).rank() == h.dim_im + 1) {
                h.witness = w;
                break;
            }
        if (!h.witness)
            throw Error("no kernel basis vector escapes the image despite "
                        "dim H > 0 (internal error)");
    }
    return h;
}

} // namespace kstab
