#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kstab/monomial.hpp"
#include "kstab/rational.hpp"

namespace kstab {

// =========================================================================
// Polynomial — sparse multivariate polynomial with exact rational
// coefficients over a fixed ambient dimension n.
//
// Invariants: no zero coefficients are ever stored, so structural equality
// of the term maps is mathematical equality. Terms iterate in the canonical
// monomial order (see monomial.hpp).
// =========================================================================
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    explicit Polynomial(int n);

    static Polynomial constant(int n, const Rational& c);
    static Polynomial variable(int n, int i); // 1-based x_i
    static Polynomial from_monomial(const Monomial& m, const Rational& c);

    int dim() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    // Adds c * m, dropping the entry if the coefficient cancels to zero.
    void add_term(const Monomial& m, const Rational& c);

    Rational coeff(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Partial derivative with respect to x_i (1-based).
    Polynomial derivative(int i) const;

    // Total degree; -1 for the zero polynomial.
    int degree() const;

    // True iff every stored monomial has total degree s (vacuously true for 0).
    bool homogeneous(int s) const;

    // Common total degree of all monomials; nullopt for the zero polynomial
    // or when degrees are mixed.
    std::optional<int> homogeneous_degree() const;

    // The degree-s part.
    Polynomial homogeneous_part(int s) const;

    // Substitutes x <- x + p (exact Taylor recentering of the coordinates).
    Polynomial shifted(const std::vector<Rational>& p) const;

    // Substitutes x_i <- subs[i-1] and drops every monomial of total degree
    // greater than maxdeg along the way (formal composition with truncation).
    Polynomial compose_truncated(const std::vector<Polynomial>& subs, int maxdeg) const;

    // Drops every monomial of total degree greater than maxdeg.
    Polynomial truncated(int maxdeg) const;

    Rational eval(const std::vector<Rational>& x) const;
    double eval_double(const std::vector<double>& x) const;

    // Deterministic rendering, e.g. "2*x1^2*x2 - 1/2*x2^3 + 1"; vars supplies
    // the display name of each coordinate.
    std::string str(const std::vector<std::string>& vars) const;

private:
    int n_;
    TermMap terms_;
};

} // namespace kstab
