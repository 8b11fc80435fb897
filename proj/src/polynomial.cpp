#include "kstab/polynomial.hpp"

#include <sstream>

namespace kstab {

Polynomial::Polynomial(int n) : n_(n) {
    if (n < 1) throw InvalidInput("polynomial dimension must be >= 1");
}

Polynomial Polynomial::constant(int n, const Rational& c) {
    Polynomial p(n);
    p.add_term(Monomial::one(n), c);
    return p;
}

Polynomial Polynomial::variable(int n, int i) {
    Polynomial p(n);
    p.add_term(Monomial::variable(n, i), Rational(1));
    return p;
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& c) {
    Polynomial p(m.dim());
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.dim() != n_) throw DimensionMismatch("monomial dimension mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (n_ != o.n_) throw DimensionMismatch("polynomial addition across dimensions");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (n_ != o.n_) throw DimensionMismatch("polynomial subtraction across dimensions");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (n_ != o.n_) throw DimensionMismatch("polynomial product across dimensions");
    Polynomial r(n_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(ma.times(mb), ca * cb);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, cv] : terms_) r.terms_.emplace(m, cv * c);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
}

Polynomial Polynomial::derivative(int i) const {
    if (i < 1 || i > n_) throw InvalidInput("derivative index out of range");
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.exps[i - 1];
        if (e == 0) continue;
        Monomial dm = m;
        dm.exps[i - 1] = e - 1;
        r.add_term(dm, c * Rational(static_cast<long>(e)));
    }
    return r;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    (void)0;
    return d;
}

bool Polynomial::homogeneous(int s) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != s) return false;
    return true;
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

Polynomial Polynomial::homogeneous_part(int s) const {
    Polynomial r(n_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == s) r.terms_.emplace(m, c);
    return r;
}

Polynomial Polynomial::shifted(const std::vector<Rational>& p) const {
    if (static_cast<int>(p.size()) != n_)
        throw DimensionMismatch("shift point dimension mismatch");
    // Precompute (x_i + p_i)^e lazily per variable.
    std::vector<std::vector<Polynomial>> pows(n_);
    auto power = [&](int i, std::uint32_t e) -> const Polynomial& {
        auto& cache = pows[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(n_, Rational(1)));
        while (cache.size() <= e) {
            Polynomial base = Polynomial::variable(n_, i + 1);
            if (!p[i].is_zero()) base = base + Polynomial::constant(n_, p[i]);
            cache.push_back(cache.back() * base);
        }
        return cache[e];
    };
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(n_, c);
        for (int i = 0; i < n_; ++i)
            if (m.exps[i] > 0) t = t * power(i, m.exps[i]);
        r = r + t;
    }
    return r;
}

Polynomial Polynomial::compose_truncated(const std::vector<Polynomial>& subs,
                                         int maxdeg) const {
    if (static_cast<int>(subs.size()) != n_)
        throw DimensionMismatch("composition needs one substitute per variable");
    int m_dim = subs.empty() ? n_ : subs[0].dim();
    for (const auto& s : subs)
        if (s.dim() != m_dim) throw DimensionMismatch("substitutes disagree on dimension");
    std::vector<std::vector<Polynomial>> pows(n_);
    auto power = [&](int i, std::uint32_t e) -> const Polynomial& {
        auto& cache = pows[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(m_dim, Rational(1)));
        while (cache.size() <= e)
            cache.push_back((cache.back() * subs[i]).truncated(maxdeg));
        return cache[e];
    };
    Polynomial r(m_dim);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(m_dim, c);
        for (int i = 0; i < n_; ++i)
            if (m.exps[i] > 0) t = (t * power(i, m.exps[i])).truncated(maxdeg);
        r = r + t;
    }
    return r;
}

Polynomial Polynomial::truncated(int maxdeg) const {
    Polynomial r(n_);
    for (const auto& [m, c] : terms_)
        if (m.degree() <= maxdeg) r.terms_.emplace(m, c);
    return r;
}

Rational Polynomial::eval(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw DimensionMismatch("evaluation point dimension mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < n_; ++i)
            for (std::uint32_t e = 0; e < m.exps[i]; ++e) t *= x[i];
        acc += t;
    }
    return acc;
}

double Polynomial::eval_double(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw DimensionMismatch("evaluation point dimension mismatch");
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = c.to_double();
        for (int i = 0; i < n_; ++i)
            for (std::uint32_t e = 0; e < m.exps[i]; ++e) t *= x[i];
        acc += t;
    }
    return acc;
}

std::string Polynomial::str(const std::vector<std::string>& vars) const {
    if (static_cast<int>(vars.size()) != n_)
        throw DimensionMismatch("variable name list has wrong length");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool unit = (a == Rational(1));
        bool wrote = false;
        if (!unit || m.degree() == 0) {
            os << a.str();
            wrote = true;
        }
        for (int i = 0; i < n_; ++i) {
            if (m.exps[i] == 0) continue;
            if (wrote) os << "*";
            os << vars[i];
            if (m.exps[i] > 1) os << "^" << m.exps[i];
            wrote = true;
        }
    }
    return os.str();
}

} // namespace kstab
