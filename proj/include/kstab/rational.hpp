#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "kstab/errors.hpp"

namespace kstab {

// =========================================================================
// Rational — exact arbitrary-precision rational number.
//
// Thin wrapper over GMP's mpq_class that guarantees the canonical-form
// invariants at every construction site: denominator strictly positive and
// the fraction in lowest terms. All arithmetic is exact; there is no
// floating point in this type (to_double is an explicit, lossy export used
// only by the numerical experiment harness).
// =========================================================================
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design, keeps literals terse
    Rational(long num, long den) {
        if (den == 0) throw InvalidInput("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw InvalidInput("rational with zero denominator");
        v_ = mpq_class(num) / mpq_class(den); // division canonicalizes
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "p" or "p/q" with optional leading sign. Rejects anything else,
    // in particular decimal literals (those are allowed only in experiment
    // parameters, via from_decimal).
    static Rational parse(const std::string& text) {
        if (text.empty()) throw InvalidInput("empty rational literal");
        std::size_t i = 0;
        if (text[i] == '+' || text[i] == '-') ++i;
        bool digits = false, slash = false;
        for (; i < text.size(); ++i) {
            char c = text[i];
            if (c >= '0' && c <= '9') {
                digits = true;
            } else if (c == '/' && !slash && digits) {
                slash = true;
                digits = false;
            } else if (c == '.') {
                throw InvalidInput("decimal literal '" + text +
                                   "' not allowed in exact input");
            } else {
                throw InvalidInput("malformed rational literal '" + text + "'");
            }
        }
        if (!digits) throw InvalidInput("malformed rational literal '" + text + "'");
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw InvalidInput("malformed rational literal '" + text + "'");
        if (q.get_den() == 0)
            throw InvalidInput("rational with zero denominator: '" + text + "'");
        q.canonicalize();
        return Rational(q);
    }

    // Parses a plain decimal string ("0.001", "-2.5", "3") into the exact
    // rational it denotes. Used for perturbation parameters only.
    static Rational from_decimal(const std::string& text) {
        std::string t = text;
        auto dot = t.find('.');
        if (dot == std::string::npos) return parse(t);
        std::string head = t.substr(0, dot), tail = t.substr(dot + 1);
        if (tail.find_first_not_of("0123456789") != std::string::npos || tail.empty())
            throw InvalidInput("malformed decimal literal '" + text + "'");
        if (head.empty() || head == "+" || head == "-") head += "0";
        Rational r = parse(head + tail);
        mpz_class den = 1;
        for (std::size_t i = 0; i < tail.size(); ++i) den *= 10;
        bool neg = r.sign() < 0;
        Rational scaled(neg ? mpz_class(-r.num()) : r.num(), den);
        return neg ? -scaled : scaled;
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw InvalidInput("division by zero rational");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return cmp(v_, o.v_) == 0; }
    bool operator!=(const Rational& o) const { return cmp(v_, o.v_) != 0; }
    bool operator<(const Rational& o) const { return cmp(v_, o.v_) < 0; }
    bool operator<=(const Rational& o) const { return cmp(v_, o.v_) <= 0; }
    bool operator>(const Rational& o) const { return cmp(v_, o.v_) > 0; }
    bool operator>=(const Rational& o) const { return cmp(v_, o.v_) >= 0; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace kstab
