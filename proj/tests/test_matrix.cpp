#include <doctest.h>

#include <cmath>
#include <random>

#include "kstab/matrix.hpp"
#include "test_helpers.hpp"

using kstab::RationalMatrix;
using kt::Rational;

namespace {

RationalMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows.begin()->size()) : 0;
    RationalMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (long v : row) m.at(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

// Independent floating-point rank oracle: Gaussian elimination with partial
// pivoting and a conservative relative threshold. Only meaningful on
// well-conditioned integer matrices, which is how the cross-check uses it.
int float_rank(const RationalMatrix& M) {
    int rows = M.rows(), cols = M.cols();
    std::vector<std::vector<double>> a(rows, std::vector<double>(cols));
    double maxabs = 0.0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            a[i][j] = M.at(i, j).to_double();
            maxabs = std::max(maxabs, std::fabs(a[i][j]));
        }
    double tol = 1e-9 * std::max(1.0, maxabs);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        double best = tol;
        for (int i = rank; i < rows; ++i)
            if (std::fabs(a[i][col]) > best) {
                best = std::fabs(a[i][col]);
                piv = i;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int i = rank + 1; i < rows; ++i) {
            double f = a[i][col] / a[rank][col];
            for (int j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("rank anchors") {
    CHECK(RationalMatrix::identity(3).rank() == 3);
    CHECK(RationalMatrix(4, 5).rank() == 0);
    CHECK(from_rows({{1, 2}, {2, 4}}).rank() == 1);
    CHECK(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}).rank() == 2);
    // rank is insensitive to denominators
    RationalMatrix m(2, 2);
    m.at(0, 0) = Rational(1, 2);
    m.at(0, 1) = Rational(1, 3);
    m.at(1, 0) = Rational(3, 2);
    m.at(1, 1) = Rational(1, 1);
    CHECK(m.rank() == 1);
}

TEST_CASE("rref, kernel, determinant, inverse") {
    RationalMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
    std::vector<int> piv;
    RationalMatrix r = m.rref(&piv);
    CHECK(piv == std::vector<int>{0, 1});
    CHECK(r.at(0, 0) == Rational(1));
    CHECK(r.at(1, 1) == Rational(1));

    auto ker = m.kernel_basis();
    REQUIRE(ker.size() == 1);
    // M v = 0 by direct substitution
    for (int i = 0; i < 3; ++i) {
        Rational acc(0);
        for (int j = 0; j < 3; ++j) acc += m.at(i, j) * ker[0][j];
        CHECK(acc == Rational(0));
    }

    CHECK(from_rows({{2, 0}, {0, 3}}).det() == Rational(6));
    CHECK(from_rows({{1, 2}, {2, 4}}).det() == Rational(0));
    RationalMatrix a = from_rows({{2, 1}, {1, 1}});
    CHECK(a.multiply(a.inverse()) == RationalMatrix::identity(2));
    CHECK_THROWS_AS(from_rows({{1, 2}, {2, 4}}).inverse(), kstab::InvalidInput);
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 20; ++t) {
        int rows = 1 + static_cast<int>(rng() % 6);
        int cols = 1 + static_cast<int>(rng() % 6);
        RationalMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m.at(i, j) = Rational(kt::small_int(rng), 1 + static_cast<long>(rng() % 3));
        int rank = m.rank();
        CHECK(rank + static_cast<int>(m.kernel_basis().size()) == cols);
        // every kernel vector is annihilated
        for (const auto& v : m.kernel_basis())
            for (int i = 0; i < rows; ++i) {
                Rational acc(0);
                for (int j = 0; j < cols; ++j) acc += m.at(i, j) * v[j];
                CHECK(acc == Rational(0));
            }
    }
}

TEST_CASE("exact rank agrees with a floating-point oracle") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 12; ++t) {
        int rows = 2 + static_cast<int>(rng() % 5);
        int cols = 2 + static_cast<int>(rng() % 5);
        RationalMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m.at(i, j) = Rational(static_cast<long>(rng() % 2001) - 1000);
        // occasionally plant a dependent row to get rank-deficient samples
        if (rows >= 2 && t % 3 == 0)
            for (int j = 0; j < cols; ++j) m.at(rows - 1, j) = m.at(0, j) * Rational(2);
        CHECK(m.rank() == float_rank(m));
    }
}
