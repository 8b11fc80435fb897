#pragma once

// Shared generator of random valid (Lie algebra, representation) pairs:
// transports a small catalog of known-good representations through random
// invertible changes of the Lie and module bases. Constructing the result
// re-validates antisymmetry, Jacobi, and the homomorphism property, so every
// emitted pair is a genuine representation.

#include <random>
#include <vector>

#include "kstab/liealg.hpp"
#include "test_helpers.hpp"

namespace kt {

using kstab::LieAlgebra;
using kstab::RationalMatrix;
using kstab::Representation;

using Cube = std::vector<std::vector<std::vector<Rational>>>;

inline Cube cube(int r) {
    return Cube(static_cast<std::size_t>(r),
                std::vector<std::vector<Rational>>(
                    static_cast<std::size_t>(r),
                    std::vector<Rational>(static_cast<std::size_t>(r), Rational(0))));
}

inline RationalMatrix random_invertible(std::mt19937_64& rng, int n) {
    for (;;) {
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = Rational(small_int(rng));
        if (m.rank() == n) return m;
    }
}

// Structure constants in the basis e'_k = sum_a Q_{ak} e_a.
inline LieAlgebra transport_algebra(const LieAlgebra& g, const RationalMatrix& Q) {
    const int r = g.dim();
    RationalMatrix Qi = Q.inverse();
    Cube a = cube(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                Rational acc(0);
                for (int A = 0; A < r; ++A)
                    for (int B = 0; B < r; ++B)
                        for (int c = 0; c < r; ++c)
                            acc += Q.at(A, i) * Q.at(B, j) * g.a(A, B, c) * Qi.at(k, c);
                a[i][j][k] = acc;
            }
    return LieAlgebra(std::move(a));
}

// Same representation in the transported Lie basis and a conjugated module
// basis.
inline Representation transport_rep(const Representation& rep, const RationalMatrix& Q,
                                    const RationalMatrix& P) {
    const int r = rep.algebra().dim();
    const int d = rep.module_dim();
    RationalMatrix Pi = P.inverse();
    std::vector<RationalMatrix> ms;
    for (int i = 0; i < r; ++i) {
        RationalMatrix m(d, d);
        for (int a = 0; a < r; ++a) {
            if (Q.at(a, i).is_zero()) continue;
            for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q)
                    m.at(p, q) += Q.at(a, i) * rep.rho(a).at(p, q);
        }
        ms.push_back(P.multiply(m).multiply(Pi));
    }
    return Representation(transport_algebra(rep.algebra(), Q), std::move(ms));
}

inline std::vector<Representation> catalog_reps() {
    using namespace kstab;
    return {aff1_coadjoint(), sl2_irrep2(), heisenberg_standard(), scaling_rep(),
            Representation::trivial(abelian_algebra(2), 2)};
}

} // namespace kt
