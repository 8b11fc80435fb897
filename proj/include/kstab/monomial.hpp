#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "kstab/errors.hpp"

namespace kstab {

// =========================================================================
// Monomial — an exponent vector over a fixed set of n coordinates.
//
// The canonical monomial order, used for every basis enumeration, matrix
// column ordering and printout in the engine, is graded lexicographic:
//   * lower total degree first;
//   * within one degree, exponent vectors in lexicographically DESCENDING
//     order, first coordinate major.
// So in two variables the degree-2 monomials run x1^2, x1*x2, x2^2. Fixing
// this once makes matrices and cohomology witnesses reproducible bit for bit
// across runs.
// =========================================================================
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    static Monomial one(int n) { return Monomial(std::vector<std::uint32_t>(n, 0)); }

    // The monomial x_i (1-based).
    static Monomial variable(int n, int i) {
        if (i < 1 || i > n) throw InvalidInput("variable index out of range");
        Monomial m = one(n);
        m.exps[i - 1] = 1;
        return m;
    }

    int dim() const { return static_cast<int>(exps.size()); }

    int degree() const {
        return std::accumulate(exps.begin(), exps.end(), 0u);
    }

    Monomial times(const Monomial& o) const {
        if (exps.size() != o.exps.size())
            throw DimensionMismatch("monomial product across dimensions");
        Monomial m = *this;
        for (std::size_t i = 0; i < exps.size(); ++i) m.exps[i] += o.exps[i];
        return m;
    }

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return exps != o.exps; }
};

// Canonical order described above; usable as a std::map comparator so that
// iteration visits monomials in canonical order.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exps > b.exps; // lexicographically bigger exponent vector first
    }
};

// All monomials of total degree s in n variables, in canonical order.
// Empty when s < 0.
inline std::vector<Monomial> monomials_of_degree(int n, int s) {
    std::vector<Monomial> out;
    if (s < 0 || n < 1) return out;
    std::vector<std::uint32_t> cur(n, 0);
    // Recursive descent emitting exponent vectors lexicographically descending.
    struct Rec {
        int n;
        std::vector<std::uint32_t>& cur;
        std::vector<Monomial>& out;
        void go(int pos, int rem) {
            if (pos == n - 1) {
                cur[pos] = static_cast<std::uint32_t>(rem);
                out.emplace_back(cur);
                return;
            }
            for (int e = rem; e >= 0; --e) {
                cur[pos] = static_cast<std::uint32_t>(e);
                go(pos + 1, rem - e);
            }
        }
    } rec{n, cur, out};
    rec.go(0, s);
    return out;
}

} // namespace kstab
