#pragma once

// Sign-cocycle central extension of the classical root lattice, generated
// by e^{lambda_1}, e^{alpha_1}, ..., e^{alpha_{l-1}} in that normal-form
// order.  Reordering adjacent generator pairs flips the sign by
// (-1)^{(gen_a, gen_b)}; vacuum markers e^{Lambda} sit rightmost and are
// cocycle-transparent.

#include <vector>

#include "qvertex/cartan.hpp"

namespace qvertex {

constexpr int kNoMarker = -1;

struct GroupAlgebraElement {
    int sign = 1;
    std::vector<int> exps;   // exponents of (lambda_1, alpha_1, ..., alpha_{l-1})
    int marker = kNoMarker;  // -1 none, else static_cast<int>(Module)

    static GroupAlgebraElement identity(const CartanData& cd) {
        return GroupAlgebraElement{1, std::vector<int>(static_cast<size_t>(cd.word_len())), kNoMarker};
    }
    static GroupAlgebraElement vacuum(const CartanData& cd, Module m) {
        return GroupAlgebraElement{1, std::vector<int>(static_cast<size_t>(cd.word_len())), static_cast<int>(m)};
    }
    static GroupAlgebraElement generator(const CartanData& cd, int g, int power = 1) {
        GroupAlgebraElement e = identity(cd);
        e.exps[static_cast<size_t>(g)] = power;
        return e;
    }

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.sign == b.sign && a.exps == b.exps && a.marker == b.marker;
    }
};

// Parity of the cocycle exponent accumulated when normal-ordering the
// concatenation x . y: each generator of y passes the tail of x.
inline int cocycle_parity(const CartanData& cd, const std::vector<int>& x, const std::vector<int>& y) {
    int par = 0;
    int n = cd.word_len();
    for (int a = 1; a < n; ++a) {
        if ((x[static_cast<size_t>(a)] & 1) == 0) continue;
        for (int b = 0; b < a; ++b) {
            if ((y[static_cast<size_t>(b)] & 1) == 0) continue;
            par ^= cd.kappa(a, b) & 1;
        }
    }
    return par;
}

inline GroupAlgebraElement cocycle_mul(const CartanData& cd, const GroupAlgebraElement& x,
                                       const GroupAlgebraElement& y) {
    if (x.marker != kNoMarker && y.marker != kNoMarker)
        throw std::invalid_argument("cocycle_mul: both factors carry a vacuum marker");
    GroupAlgebraElement r;
    r.sign = x.sign * y.sign * (cocycle_parity(cd, x.exps, y.exps) ? -1 : 1);
    r.exps.resize(x.exps.size());
    for (size_t i = 0; i < x.exps.size(); ++i) r.exps[i] = x.exps[i] + y.exps[i];
    r.marker = (x.marker != kNoMarker) ? x.marker : y.marker;
    return r;
}

// The underlying lattice vector, marker weight included.
inline ClassicalVector weight_of(const CartanData& cd, const GroupAlgebraElement& g) {
    std::vector<Rational> eps = cd.word_eps(g.exps);
    if (g.marker != kNoMarker) {
        const std::vector<Rational>& mw = cd.marker_eps(static_cast<Module>(g.marker));
        for (size_t k = 0; k < eps.size(); ++k) eps[k] += mw[k];
    }
    // convert eps -> lambda basis: coefficient of lambda_i is <h_i, .> = (alpha_i, .)/d_i
    ClassicalVector v = cd.cl_zero();
    for (int i = 1; i <= cd.rank(); ++i)
        v.lam[static_cast<size_t>(i - 1)] = cd.dot_eps(cd.alpha_eps(i), eps) / cd.d(i);
    return v;
}

inline std::vector<Rational> weight_eps(const CartanData& cd, const std::vector<int>& exps, int marker) {
    std::vector<Rational> eps = cd.word_eps(exps);
    if (marker != kNoMarker) {
        const std::vector<Rational>& mw = cd.marker_eps(static_cast<Module>(marker));
        for (size_t k = 0; k < eps.size(); ++k) eps[k] += mw[k];
    }
    return eps;
}

}  // namespace qvertex
