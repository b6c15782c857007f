#pragma once

// Exact rational arithmetic. GMP-backed; everything in the library is exact.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qvertex {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// mpq_class(a, b) does not canonicalize; this does.
inline Rational make_rat(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
    if (!is_integer(r)) throw std::domain_error("to_long: not an integer: " + r.get_str());
    if (!r.get_num().fits_slong_p()) throw std::overflow_error("to_long: out of range");
    return r.get_num().get_si();
}

// r as a half-integer: returns 2r, throws if 2r is not integral.
inline long twice_to_long(const Rational& r) {
    Rational two_r = r * 2;
    two_r.canonicalize();
    return to_long(two_r);
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (is_zero(base)) {
        if (e < 0) throw std::domain_error("rat_pow: zero to negative power");
        return Rational(0);
    }
    Rational b = e < 0 ? Rational(1) / base : base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad input '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qvertex
