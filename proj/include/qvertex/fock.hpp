#pragma once

// Level-one Fock modules H_0, H_1, H_l: normal-ordered monomials
// (boson partition x fermion mode set x lattice word) with exact Scalar
// coefficients, and the elementary operator actions on them.
//
// Fermion modes are stored doubled (2k for Psi(-k)); NS modes are odd,
// R modes even, so all mode arithmetic stays integral.

#include <algorithm>
#include <compare>
#include <map>
#include <vector>

#include "qvertex/lattice.hpp"
#include "qvertex/scalar.hpp"

namespace qvertex {

enum class Sector { NS, R };

inline Sector sector_of(Module m) { return m == Module::Ll ? Sector::R : Sector::NS; }

struct FockMonomial {
    std::vector<std::pair<int, int>> bosons;  // (color 1..l, mode m > 0), ascending
    std::vector<int> fermions;                // doubled modes 2k >= 0, strictly decreasing
    std::vector<int> lat;                     // generator word exponents
    int marker = kNoMarker;

    auto operator<=>(const FockMonomial&) const = default;

    static FockMonomial vacuum(const CartanData& cd, Module m) {
        FockMonomial mono;
        mono.lat.assign(static_cast<size_t>(cd.word_len()), 0);
        mono.marker = static_cast<int>(m);
        return mono;
    }

    Module module() const { return static_cast<Module>(marker); }
    int fermion_count() const { return static_cast<int>(fermions.size()); }
    long boson_energy2() const {  // twice the boson energy
        long e = 0;
        for (const auto& [j, m] : bosons) e += 2L * m;
        return e;
    }
};

struct FockVector {
    Module mod = Module::L0;
    std::map<FockMonomial, Scalar> terms;

    FockVector() = default;
    explicit FockVector(Module m) : mod(m) {}

    static FockVector vacuum(const CartanData& cd, Module m) {
        FockVector v(m);
        v.terms.emplace(FockMonomial::vacuum(cd, m), Scalar::one());
        return v;
    }
    static FockVector single(const FockMonomial& mono, const Scalar& c) {
        FockVector v(mono.module());
        if (!c.is_zero()) v.terms.emplace(mono, c);
        return v;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const FockMonomial& mono, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    void add(const FockVector& o) {
        for (const auto& [m, c] : o.terms) add_term(m, c);
    }
    void add_scaled(const FockVector& o, const Scalar& s) {
        if (s.is_zero()) return;
        for (const auto& [m, c] : o.terms) add_term(m, c * s);
    }
    FockVector scaled(const Scalar& s) const {
        FockVector r(mod);
        r.add_scaled(*this, s);
        return r;
    }
    friend FockVector operator+(const FockVector& a, const FockVector& b) {
        FockVector r = a;
        r.mod = a.terms.empty() ? b.mod : a.mod;
        r.add(b);
        return r;
    }
    friend FockVector operator-(const FockVector& a, const FockVector& b) {
        FockVector r = a;
        r.mod = a.terms.empty() ? b.mod : a.mod;
        r.add_scaled(b, -Scalar::one());
        return r;
    }
    friend bool operator==(const FockVector& a, const FockVector& b) { return (a - b).is_zero(); }

    Scalar coeff(const FockMonomial& mono) const {
        auto it = terms.find(mono);
        return it == terms.end() ? Scalar::zero() : it->second;
    }
};

// ----- grading ---------------------------------------------------------------

// Twice the energy (= twice the eigenvalue of -d relative to the vacuum).
inline long degree2_of(const CartanData& cd, const FockMonomial& mono) {
    long e2 = mono.boson_energy2();
    for (int k2 : mono.fermions) e2 += k2;
    std::vector<Rational> beta = weight_eps(cd, mono.lat, mono.marker);
    Rational lat2 = cd.dot_eps(beta, beta) - cd.marker_norm(mono.module());
    return e2 + to_long(lat2);
}

inline Rational degree_of(const CartanData& cd, const FockMonomial& mono) {
    return make_rat(degree2_of(cd, mono), 2);
}

// d acts by the eigenvalue -(degree) on each monomial.
inline FockVector apply_d(const CartanData& cd, const FockVector& v) {
    FockVector r(v.mod);
    for (const auto& [mono, c] : v.terms) r.add_term(mono, c.scaled(make_rat(-degree2_of(cd, mono), 2)));
    return r;
}

// ----- elementary operators --------------------------------------------------

// Structure constant of [a_j(k), a_{j'}(-k)] at level one (k > 0):
// (1/k) [k a_{j j'}]_{q_j} (q^k - q^{-k}) / (q_{j'} - q_{j'}^{-1}).
inline Scalar boson_bracket_const(const CartanData& cd, int j, int jp, long k) {
    Scalar num = q_int(k * cd.a(j, jp), cd.dd(j));
    Scalar ratio = (cd.dd(jp) == 2) ? q_int(k, 2) : q_int(2 * k, 1);
    return (num * ratio).scaled(make_rat(1, k));
}

inline FockVector apply_boson(const CartanData& cd, int j, long k, const FockVector& v) {
    if (k == 0) throw std::invalid_argument("apply_boson: zero mode");
    FockVector r(v.mod);
    if (k < 0) {
        std::pair<int, int> entry{j, static_cast<int>(-k)};
        for (const auto& [mono, c] : v.terms) {
            FockMonomial m2 = mono;
            m2.bosons.insert(std::upper_bound(m2.bosons.begin(), m2.bosons.end(), entry), entry);
            r.add_term(m2, c);
        }
        return r;
    }
    for (const auto& [mono, c] : v.terms) {
        for (size_t i = 0; i < mono.bosons.size(); ++i) {
            if (mono.bosons[i].second != k) continue;
            if (i > 0 && mono.bosons[i] == mono.bosons[i - 1]) continue;  // count each distinct entry once
            long mult = 1;
            while (i + static_cast<size_t>(mult) < mono.bosons.size() && mono.bosons[i + static_cast<size_t>(mult)] == mono.bosons[i]) ++mult;
            FockMonomial m2 = mono;
            m2.bosons.erase(m2.bosons.begin() + static_cast<long>(i));
            Scalar f = boson_bracket_const(cd, j, mono.bosons[i].first, k).scaled(Rational(mult));
            r.add_term(m2, c * f);
        }
    }
    return r;
}

// Psi(k), k passed doubled.  k2 <= 0 multiplies on the left (normal
// ordering with fermionic signs, Psi(0)^2 -> 1 in R); k2 > 0 contracts
// with (q^k + q^{-k}).
inline FockVector apply_fermion(const CartanData& cd, int k2, const FockVector& v) {
    (void)cd;
    FockVector r(v.mod);
    int parity = sector_of(v.mod) == Sector::NS ? 1 : 0;
    if (((k2 % 2) + 2) % 2 != parity)
        throw std::invalid_argument("apply_fermion: mode does not match sector");
    if (k2 <= 0) {
        int d = -k2;
        for (const auto& [mono, c] : v.terms) {
            size_t p = 0;
            while (p < mono.fermions.size() && mono.fermions[p] > d) ++p;
            bool dup = p < mono.fermions.size() && mono.fermions[p] == d;
            if (dup && d != 0) continue;  // Psi(-k)^2 = 0 for k != 0
            FockMonomial m2 = mono;
            if (dup) {
                m2.fermions.erase(m2.fermions.begin() + static_cast<long>(p));  // Psi(0)^2 = 1
            } else {
                m2.fermions.insert(m2.fermions.begin() + static_cast<long>(p), d);
            }
            Scalar s = (p % 2) ? -c : c;
            r.add_term(m2, s);
        }
        return r;
    }
    for (const auto& [mono, c] : v.terms) {
        for (size_t p = 0; p < mono.fermions.size(); ++p) {
            if (mono.fermions[p] != k2) continue;
            FockMonomial m2 = mono;
            m2.fermions.erase(m2.fermions.begin() + static_cast<long>(p));
            Scalar f = Scalar::t_pow(k2) + Scalar::t_pow(-k2);  // q^k + q^{-k}
            if (p % 2) f = -f;
            r.add_term(m2, c * f);
            break;
        }
    }
    return r;
}

inline FockVector apply_lattice(const CartanData& cd, const GroupAlgebraElement& g, const FockVector& v) {
    FockVector r(v.mod);
    for (const auto& [mono, c] : v.terms) {
        GroupAlgebraElement state{1, mono.lat, mono.marker};
        GroupAlgebraElement prod = cocycle_mul(cd, g, state);
        FockMonomial m2 = mono;
        m2.lat = prod.exps;
        m2.marker = prod.marker;
        r.add_term(m2, prod.sign < 0 ? -c : c);
    }
    return r;
}

// partial_x: multiply each term by (x, beta).
inline FockVector apply_partial(const CartanData& cd, const std::vector<Rational>& x_eps, const FockVector& v) {
    FockVector r(v.mod);
    for (const auto& [mono, c] : v.terms) {
        std::vector<Rational> beta = weight_eps(cd, mono.lat, mono.marker);
        r.add_term(mono, c.scaled(cd.dot_eps(x_eps, beta)));
    }
    return r;
}

// (-1)^{(x, beta)}; the exponent must be an integer on every term.
inline FockVector apply_sign(const CartanData& cd, const std::vector<Rational>& x_eps, const FockVector& v) {
    FockVector r(v.mod);
    for (const auto& [mono, c] : v.terms) {
        std::vector<Rational> beta = weight_eps(cd, mono.lat, mono.marker);
        long e = to_long(cd.dot_eps(x_eps, beta));  // throws if not integral
        r.add_term(mono, (e % 2) ? -c : c);
    }
    return r;
}

// G = (-1)^{2 sum_i partial_{lambda_i} + N_F} in NS, with the constant
// -2 sum_i (lambda_i, lambda_l) subtracted in R.
inline int g_eigenvalue(const CartanData& cd, const FockMonomial& mono) {
    std::vector<Rational> beta = weight_eps(cd, mono.lat, mono.marker);
    Rational e = 2 * cd.dot_eps(cd.sum_lambda_eps(), beta) + mono.fermion_count();
    if (sector_of(mono.module()) == Sector::R) e -= cd.g_r_shift();
    long n = to_long(e);
    return (((n % 2) + 2) % 2) ? -1 : 1;
}

inline FockVector apply_G(const CartanData& cd, const FockVector& v) {
    FockVector r(v.mod);
    for (const auto& [mono, c] : v.terms) r.add_term(mono, g_eigenvalue(cd, mono) < 0 ? -c : c);
    return r;
}

// q_i^{+-h_i} acts as q^{+-(alpha_i, beta)}.
inline FockVector apply_qh(const CartanData& cd, int i, int sgn, const FockVector& v) {
    FockVector r(v.mod);
    for (const auto& [mono, c] : v.terms) {
        std::vector<Rational> beta = weight_eps(cd, mono.lat, mono.marker);
        long e2 = twice_to_long(cd.dot_eps(cd.alpha_eps(i), beta));  // 2(alpha_i, beta)
        r.add_term(mono, c * Scalar::t_pow(static_cast<int>(sgn * e2)));
    }
    return r;
}

// q^{+-h_0} = (gamma q^{-h_1 - 2h_2 - ... - 2h_{l-1} - h_l})^{+-1}: q^{+-(1 - (theta, beta))}.
inline FockVector apply_qh0(const CartanData& cd, int sgn, const FockVector& v) {
    FockVector r(v.mod);
    for (const auto& [mono, c] : v.terms) {
        std::vector<Rational> beta = weight_eps(cd, mono.lat, mono.marker);
        long e2 = twice_to_long(1 - cd.dot_eps(cd.theta_eps(), beta));  // 2(1 - (theta, beta))
        r.add_term(mono, c * Scalar::t_pow(static_cast<int>(sgn * e2)));
    }
    return r;
}

// q^{+-d}: q^{-+(degree)} per monomial.
inline FockVector apply_qd(const CartanData& cd, int sgn, const FockVector& v) {
    FockVector r(v.mod);
    for (const auto& [mono, c] : v.terms) {
        long d2 = degree2_of(cd, mono);
        r.add_term(mono, c * Scalar::t_pow(static_cast<int>(-sgn * d2)));
    }
    return r;
}

}  // namespace qvertex
