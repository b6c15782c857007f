#pragma once

// Laurent polynomials in one variable t with exact rational coefficients.
// t stands for q^{1/2} throughout the library, so every power of q^{1/2}
// is an integer power of t.

#include <algorithm>
#include <cassert>
#include <sstream>
#include <string>
#include <vector>

#include "qvertex/rational.hpp"

namespace qvertex {

class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) {
        if (!qvertex::is_zero(c)) {
            lo_ = 0;
            coeffs_.push_back(c);
        }
    }
    LaurentPoly(const Rational& c, int exponent) {
        if (!qvertex::is_zero(c)) {
            lo_ = exponent;
            coeffs_.push_back(c);
        }
    }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(Rational(1)); }
    static LaurentPoly t_pow(int k) { return LaurentPoly(Rational(1), k); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return degree_span() == 0 && lo_ == 0 && coeffs_[0] == 1; }
    // Number of stored coefficients minus one; -1 for the zero polynomial.
    int degree_span() const { return static_cast<int>(coeffs_.size()) - 1; }
    int min_exp() const {
        assert(!is_zero());
        return lo_;
    }
    int max_exp() const {
        assert(!is_zero());
        return lo_ + degree_span();
    }
    const Rational& leading() const {
        assert(!is_zero());
        return coeffs_.back();
    }
    Rational coeff(int exponent) const {
        if (is_zero() || exponent < lo_ || exponent > max_exp()) return Rational(0);
        return coeffs_[static_cast<size_t>(exponent - lo_)];
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int lo = std::min(a.lo_, b.lo_);
        int hi = std::max(a.max_exp(), b.max_exp());
        LaurentPoly r;
        r.lo_ = lo;
        r.coeffs_.assign(static_cast<size_t>(hi - lo + 1), Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[static_cast<size_t>(a.lo_ - lo) + i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[static_cast<size_t>(b.lo_ - lo) + i] += b.coeffs_[i];
        r.trim();
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return LaurentPoly();
        LaurentPoly r;
        r.lo_ = a.lo_ + b.lo_;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (qvertex::is_zero(a.coeffs_[i])) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        r.trim();
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    LaurentPoly scaled(const Rational& c) const {
        if (qvertex::is_zero(c)) return LaurentPoly();
        LaurentPoly r = *this;
        for (auto& x : r.coeffs_) x *= c;
        return r;
    }
    LaurentPoly shifted(int k) const {
        LaurentPoly r = *this;
        if (!r.is_zero()) r.lo_ += k;
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.lo_ == b.lo_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.lo_ != b.lo_) return a.lo_ < b.lo_;
        if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            int c = cmp(a.coeffs_[i], b.coeffs_[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }

    // Exact division; throws if the remainder is nonzero.
    friend LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) throw std::domain_error("div_exact: division by zero polynomial");
        if (a.is_zero()) return LaurentPoly();
        LaurentPoly rem = a.shifted(-a.lo_);
        LaurentPoly den = b.shifted(-b.lo_);
        LaurentPoly quot;
        quot.lo_ = 0;
        int qspan = rem.degree_span() - den.degree_span();
        if (qspan < 0) throw std::domain_error("div_exact: not divisible");
        quot.coeffs_.assign(static_cast<size_t>(qspan + 1), Rational(0));
        while (!rem.is_zero() && rem.max_exp() >= den.max_exp()) {
            int shift = rem.max_exp() - den.max_exp();
            Rational f = rem.leading() / den.leading();
            quot.coeffs_[static_cast<size_t>(shift)] = f;
            rem = rem - den.shifted(shift).scaled(f);
        }
        if (!rem.is_zero()) throw std::domain_error("div_exact: not divisible");
        quot.trim();
        return quot.shifted(a.lo_ - b.lo_);
    }

    // Monic gcd of the polynomial parts; powers of t are units and ignored.
    friend LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly x = a.is_zero() ? a : a.shifted(-a.lo_);
        LaurentPoly y = b.is_zero() ? b : b.shifted(-b.lo_);
        while (!y.is_zero()) {
            LaurentPoly r = mod(x, y);
            x = y;
            y = r;
        }
        if (x.is_zero()) return x;
        return x.scaled(Rational(1) / x.leading());
    }

    Rational evaluate(const Rational& t0) const {
        if (qvertex::is_zero(t0)) throw std::domain_error("LaurentPoly::evaluate at t=0");
        Rational acc(0);
        // Horner over the nonnegative-shifted polynomial, then one power fix-up.
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t0 + *it;
        return acc * rat_pow(t0, lo_);
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree_span(); i >= 0; --i) {
            const Rational& c = coeffs_[static_cast<size_t>(i)];
            if (qvertex::is_zero(c)) continue;
            Rational ac = abs(c);
            if (first) {
                if (sgn(c) < 0) os << "-";
                first = false;
            } else {
                os << (sgn(c) < 0 ? " - " : " + ");
            }
            int e = lo_ + i;
            if (e == 0) {
                os << ac.get_str();
            } else {
                if (ac != 1) os << ac.get_str() << "*";
                os << "t";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

  private:
    void trim() {
        size_t b = 0, e = coeffs_.size();
        while (e > b && qvertex::is_zero(coeffs_[e - 1])) --e;
        while (b < e && qvertex::is_zero(coeffs_[b])) ++b;
        if (b == e) {
            coeffs_.clear();
            lo_ = 0;
            return;
        }
        if (b > 0 || e < coeffs_.size()) {
            coeffs_ = std::vector<Rational>(coeffs_.begin() + static_cast<long>(b),
                                            coeffs_.begin() + static_cast<long>(e));
            lo_ += static_cast<int>(b);
        }
    }

    // Remainder of a by b as ordinary polynomials (b has min_exp 0); the
    // result is unit-normalized to min_exp 0, which is all gcd needs.
    static LaurentPoly mod(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly rem = a;
        while (!rem.is_zero() && rem.max_exp() >= b.max_exp()) {
            Rational f = rem.leading() / b.leading();
            rem = rem - b.shifted(rem.max_exp() - b.max_exp()).scaled(f);
        }
        if (!rem.is_zero()) rem = rem.shifted(-rem.lo_);
        return rem;
    }

    int lo_ = 0;                     // exponent of coeffs_[0]
    std::vector<Rational> coeffs_;   // no zero at either end
};

}  // namespace qvertex
