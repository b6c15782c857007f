#pragma once

// The coefficient field K = Q(t)[u]/(u^2 - w), with t = q^{1/2} and
// w = omega = 1/(t + t^{-1}).  A Scalar is even + odd*u with even, odd
// rational functions of t.  Arithmetic is exact; values are kept reduced
// lazily (zero-testing and equality never need a gcd) and canonicalized
// on demand.

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "qvertex/laurent.hpp"

namespace qvertex {

class RationalFunction {
  public:
    RationalFunction() : num_(), den_(LaurentPoly::one()) {}
    explicit RationalFunction(const Rational& c) : num_(c), den_(LaurentPoly::one()) {}
    explicit RationalFunction(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {}
    RationalFunction(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        settle();
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_denominator_one() const { return den_.is_one(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        RationalFunction r;
        if (a.den_ == b.den_) {
            r.num_ = a.num_ + b.num_;
            r.den_ = a.den_;
        } else {
            r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
            r.den_ = a.den_ * b.den_;
        }
        r.settle();
        return r;
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return RationalFunction();
        RationalFunction r;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_ * b.den_;
        r.settle();
        return r;
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        if (a.is_zero()) return RationalFunction();
        RationalFunction r;
        r.num_ = a.num_ * b.den_;
        r.den_ = a.den_ * b.num_;
        r.settle();
        return r;
    }
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return a.num_ == b.num_;
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction scaled(const Rational& c) const {
        RationalFunction r = *this;
        r.num_ = r.num_.scaled(c);
        if (r.num_.is_zero()) r.den_ = LaurentPoly::one();
        return r;
    }

    // Canonical form: gcd-reduced, denominator with min exponent 0 and
    // leading coefficient +1.  Idempotent.
    void canonicalize() { reduce(true); }
    RationalFunction canonical() const {
        RationalFunction r = *this;
        r.canonicalize();
        return r;
    }

    Rational evaluate(const Rational& t0) const {
        Rational d = den_.evaluate(t0);
        if (qvertex::is_zero(d)) throw std::domain_error("RationalFunction: pole at t=" + t0.get_str());
        return num_.evaluate(t0) / d;
    }

    std::string str() const {
        RationalFunction c = canonical();
        if (c.den_.is_one()) return "(" + c.num_.str() + ")";
        return "(" + c.num_.str() + ")/(" + c.den_.str() + ")";
    }

  private:
    // Keeps denominators from growing without paying a gcd on every step.
    void settle() {
        if (num_.is_zero()) {
            den_ = LaurentPoly::one();
            return;
        }
        if (den_.degree_span() > kReduceThreshold) reduce(false);
        normalize_unit();
    }
    void reduce(bool full) {
        if (num_.is_zero()) {
            den_ = LaurentPoly::one();
            return;
        }
        LaurentPoly g = gcd(num_, den_);
        if (full || g.degree_span() > 0) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
        normalize_unit();
    }
    void normalize_unit() {
        if (den_.min_exp() != 0) {
            num_ = num_.shifted(-den_.min_exp());
            den_ = den_.shifted(-den_.min_exp());
        }
        if (den_.leading() != 1) {
            Rational inv = Rational(1) / den_.leading();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    static constexpr int kReduceThreshold = 24;

    LaurentPoly num_;
    LaurentPoly den_;
};

class Scalar {
  public:
    Scalar() = default;
    explicit Scalar(const Rational& c) : ev_(c) {}
    explicit Scalar(long c) : ev_(Rational(c)) {}
    explicit Scalar(const RationalFunction& even) : ev_(even) {}
    Scalar(const RationalFunction& even, const RationalFunction& odd) : ev_(even), od_(odd) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(Rational(1)); }
    // t^k, i.e. q^{k/2}
    static Scalar t_pow(int k) { return Scalar(RationalFunction(LaurentPoly::t_pow(k))); }
    // q^k
    static Scalar q_pow(int k) { return t_pow(2 * k); }
    // omega = 1/(t + t^{-1}) = t/(t^2 + 1)
    static Scalar omega() {
        return Scalar(RationalFunction(LaurentPoly::t_pow(1), LaurentPoly::t_pow(2) + LaurentPoly::one()));
    }
    // u = omega^{1/2}
    static Scalar u() { return Scalar(RationalFunction(), RationalFunction(Rational(1))); }
    // u^k for any integer k; negative powers of omega are Laurent polynomials.
    static Scalar u_pow(long k) {
        Scalar w = (k >= 0) ? omega() : omega().inverse();
        long n = k >= 0 ? k : -k;
        Scalar r = pow_nonneg(w, static_cast<unsigned long>(n / 2));
        if (n % 2) r = r * ((k >= 0) ? u() : u() * omega().inverse());
        return r;
    }
    static Scalar omega_pow(long k) { return u_pow(2 * k); }

    const RationalFunction& even() const { return ev_; }
    const RationalFunction& odd() const { return od_; }

    bool is_zero() const { return ev_.is_zero() && od_.is_zero(); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(a.ev_ + b.ev_, a.od_ + b.od_); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(a.ev_ - b.ev_, a.od_ - b.od_); }
    Scalar operator-() const { return Scalar(-ev_, -od_); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return Scalar();
        if (a.od_.is_zero() && b.od_.is_zero()) return Scalar(a.ev_ * b.ev_);
        RationalFunction w = omega_rf();
        return Scalar(a.ev_ * b.ev_ + a.od_ * b.od_ * w, a.ev_ * b.od_ + a.od_ * b.ev_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar: division by zero");
        // (e + o u)(e - o u) = e^2 - o^2 w, nonzero since w is not a square in Q(t).
        RationalFunction norm = ev_ * ev_ - od_ * od_ * omega_rf();
        RationalFunction inv_norm = RationalFunction(Rational(1)) / norm;
        return Scalar(ev_ * inv_norm, -(od_ * inv_norm));
    }

    Scalar pow(long e) const {
        if (e >= 0) return pow_nonneg(*this, static_cast<unsigned long>(e));
        return inverse().pow(-e);
    }

    Scalar scaled(const Rational& c) const {
        if (qvertex::is_zero(c)) return Scalar();
        return Scalar(ev_.scaled(c), od_.scaled(c));
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.ev_ == b.ev_ && a.od_ == b.od_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    void canonicalize() {
        ev_.canonicalize();
        od_.canonicalize();
    }
    Scalar canonical() const {
        Scalar s = *this;
        s.canonicalize();
        return s;
    }

    // Exact evaluation at a rational t0 > 0: returns (even(t0), odd(t0)),
    // the value being even + odd*u0 with u0 the positive square root of
    // 1/(t0 + 1/t0).  Throws on a pole.
    std::pair<Rational, Rational> evaluate_numeric(const Rational& t0) const {
        if (sgn(t0) <= 0) throw std::domain_error("evaluate_numeric: need t0 > 0");
        return {ev_.evaluate(t0), od_.evaluate(t0)};
    }

    std::string str() const {
        Scalar c = canonical();
        if (c.od_.is_zero()) return c.ev_.str();
        if (c.ev_.is_zero()) return c.od_.str() + "*u";
        return c.ev_.str() + " + " + c.od_.str() + "*u";
    }

  private:
    static RationalFunction omega_rf() {
        return RationalFunction(LaurentPoly::t_pow(1), LaurentPoly::t_pow(2) + LaurentPoly::one());
    }
    static Scalar pow_nonneg(Scalar base, unsigned long n) {
        Scalar acc = one();
        while (n) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    RationalFunction ev_;
    RationalFunction od_;
};

enum class ScalarOpKind { add, sub, mul, div };

inline Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOpKind kind) {
    switch (kind) {
        case ScalarOpKind::add: return a + b;
        case ScalarOpKind::sub: return a - b;
        case ScalarOpKind::mul: return a * b;
        case ScalarOpKind::div: return a / b;
    }
    throw std::logic_error("scalar_arith: bad kind");
}

// [m]_{q_i} with q_i = q^d = t^{2d}; dd = 2d must be 1 or 2.
inline Scalar q_int(long m, int dd) {
    if (dd != 1 && dd != 2) throw std::invalid_argument("q_int: 2d must be 1 or 2");
    if (m == 0) return Scalar::zero();
    long n = m > 0 ? m : -m;
    LaurentPoly p;
    for (long j = 0; j < n; ++j) p += LaurentPoly::t_pow(static_cast<int>(dd * (n - 1 - 2 * j)));
    Scalar s = Scalar(RationalFunction(p));
    return m > 0 ? s : -s;
}

inline Scalar q_int(long m, const Rational& d) {
    return q_int(m, static_cast<int>(twice_to_long(d)));
}

// Gaussian binomial [n choose m]_{q_i}; always a Laurent polynomial.
inline Scalar q_binomial(long n, long m, int dd) {
    if (n < 0 || m < 0 || m > n) throw std::invalid_argument("q_binomial: need 0 <= m <= n");
    Scalar num = Scalar::one(), den = Scalar::one();
    for (long j = 0; j < m; ++j) {
        num = num * q_int(n - j, dd);
        den = den * q_int(j + 1, dd);
    }
    return num / den;
}

inline Scalar q_binomial(long n, long m, const Rational& d) {
    return q_binomial(n, m, static_cast<int>(twice_to_long(d)));
}

}  // namespace qvertex
