#include <doctest.h>

#include "test_helpers.hpp"

using namespace kt;
using kstab::jacobiator;
using kstab::schouten;
using kstab::wedge;

TEST_CASE("schouten anchors") {
    int n = 2;
    MultiVector dxdy = mvf(n, 2, {{{1, 2}, pconst(n, 1)}});
    CHECK(schouten(dxdy, dxdy).is_zero());

    // [x dy, y dx] = x dx - y dy  (the Lie bracket of vector fields)
    MultiVector xdy = mvf(n, 1, {{{2}, pvar(n, 1)}});
    MultiVector ydx = mvf(n, 1, {{{1}, pvar(n, 2)}});
    CHECK(schouten(xdy, ydx) ==
          mvf(n, 1, {{{1}, pvar(n, 1)}, {{2}, -pvar(n, 2)}}));

    // [dx, x dx^dy] = dx^dy  (Leibniz expansion)
    MultiVector dx = mvf(n, 1, {{{1}, pconst(n, 1)}});
    MultiVector xdxdy = mvf(n, 2, {{{1, 2}, pvar(n, 1)}});
    CHECK(schouten(dx, xdxdy) == dxdy);

    // [pi, dx] = -dx^dy for pi = x dx^dy; this fixes the differential's sign
    CHECK(schouten(xdxdy, dx) == -dxdy);

    // [X, f] = X(f) for a vector field and a function
    std::mt19937_64 rng(23);
    for (int t = 0; t < 10; ++t) {
        MultiVector X = random_mvf(rng, 3, 1, 2);
        Polynomial f = random_poly(rng, 3, 2);
        Polynomial Xf(3);
        for (int i = 1; i <= 3; ++i)
            Xf = Xf + X.coeff({i}) * f.derivative(i);
        CHECK(schouten(X, MultiVector::function(f)) == MultiVector::function(Xf));
    }
}

TEST_CASE("jacobiator anchors") {
    CHECK(jacobiator(mvf(2, 2, {{{1, 2}, pconst(2, 1)}})).is_zero());
    // every 3-vector on R^2 vanishes
    CHECK(jacobiator(mvf(2, 2, {{{1, 2}, pvar(2, 1) * pvar(2, 2)}})).is_zero());
    // x dx^dy + y dy^dz on R^3 fails the Jacobi identity: [pi,pi] = 2x dx^dy^dz
    MultiVector pi = mvf(3, 2, {{{1, 2}, pvar(3, 1)}, {{2, 3}, pvar(3, 2)}});
    CHECK(jacobiator(pi) == mvf(3, 3, {{{1, 2, 3}, pvar(3, 1).scaled(Rational(2))}}));
    CHECK_THROWS_AS(jacobiator(mvf(3, 1, {{{1}, pconst(3, 1)}})), kstab::InvalidInput);
}

// The bracket's defining identities, exercised on seeded random instances.
// Together these pin the sign convention completely.

TEST_CASE("schouten graded antisymmetry") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + static_cast<int>(rng() % 2);
        int a = static_cast<int>(rng() % (n + 1));
        int b = static_cast<int>(rng() % (n + 1));
        MultiVector A = random_mvf(rng, n, a, 2);
        MultiVector B = random_mvf(rng, n, b, 2);
        MultiVector lhs = schouten(A, B);
        MultiVector rhs = schouten(B, A);
        // [A,B] + (-1)^{(a-1)(b-1)} [B,A] = 0
        if (((a - 1) * (b - 1)) % 2 == 0)
            CHECK((lhs + rhs).is_zero());
        else
            CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("schouten graded Leibniz") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; ++t) {
        int n = 3;
        int a = 1 + static_cast<int>(rng() % 2);
        int b = static_cast<int>(rng() % 2);
        int c = static_cast<int>(rng() % 2) + 1;
        MultiVector A = random_mvf(rng, n, a, 2);
        MultiVector B = random_mvf(rng, n, b, 2);
        MultiVector C = random_mvf(rng, n, c, 2);
        MultiVector lhs = schouten(A, wedge(B, C));
        MultiVector rhs = wedge(schouten(A, B), C);
        MultiVector second = wedge(B, schouten(A, C));
        if (((a - 1) * b) % 2 == 1) second = -second;
        CHECK(lhs == rhs + second);
    }
}

TEST_CASE("schouten graded Jacobi") {
    // Derivation form: [A,[B,C]] = [[A,B],C] + (-1)^{(a-1)(b-1)} [B,[A,C]],
    // on the degree triples (1,1,2) and (1,2,2).
    std::mt19937_64 rng(37);
    auto check_triple = [&](int a, int b, int c) {
        MultiVector A = random_mvf(rng, 3, a, 2);
        MultiVector B = random_mvf(rng, 3, b, 2);
        MultiVector C = random_mvf(rng, 3, c, 2);
        MultiVector lhs = schouten(A, schouten(B, C));
        MultiVector rhs = schouten(schouten(A, B), C);
        MultiVector second = schouten(B, schouten(A, C));
        if (((a - 1) * (b - 1)) % 2 == 1) second = -second;
        CHECK(lhs == rhs + second);
    };
    for (int t = 0; t < 15; ++t) check_triple(1, 1, 2);
    for (int t = 0; t < 15; ++t) check_triple(1, 2, 2);
    // And the polarization used by the cohomology differential:
    // [[A,A],C] = 2 [A,[A,C]] for a bivector A.
    for (int t = 0; t < 10; ++t) {
        MultiVector A = random_mvf(rng, 3, 2, 2);
        MultiVector C = random_mvf(rng, 3, 1 + static_cast<int>(rng() % 2), 2);
        CHECK(schouten(schouten(A, A), C) ==
              schouten(A, schouten(A, C)).scaled(Rational(2)));
    }
}
