#pragma once

// Graded basis enumeration for the three level-one modules.  The lattice
// search is bounded by the positive-definite classical form; boson and
// fermion parts fill the remaining energy budget.  Degrees are handled
// doubled so all bookkeeping stays integral.

#include <algorithm>
#include <functional>
#include <vector>

#include "qvertex/fock.hpp"

namespace qvertex {

struct BasisEntry {
    FockMonomial mono;
    long degree2;  // twice the degree
};

// floor(2 * r)
inline long floor_twice(const Rational& r) {
    Rational two_r = 2 * r;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), two_r.get_num().get_mpz_t(), two_r.get_den().get_mpz_t());
    if (!q.fits_slong_p()) throw std::overflow_error("floor_twice: out of range");
    return q.get_si();
}

inline std::vector<BasisEntry> enumerate_basis(const CartanData& cd, Module mod, const Rational& max_degree) {
    std::vector<BasisEntry> out;
    if (max_degree < 0) return out;
    long maxd2 = floor_twice(max_degree);
    int l = cd.rank();
    bool ramond = sector_of(mod) == Sector::R;
    const std::vector<Rational>& mw = cd.marker_eps(mod);

    // (beta, beta) <= 2*maxDegree + (marker, marker); coordinates stored doubled.
    Rational radius2 = Rational(maxd2) + cd.marker_norm(mod);
    std::vector<long> b2(static_cast<size_t>(l));

    auto emit_for_lattice = [&](long sum4) {
        long lat2 = to_long(make_rat(sum4, 4) - cd.marker_norm(mod));  // twice the lattice energy
        if (lat2 > maxd2) return;

        std::vector<Rational> gamma(static_cast<size_t>(l));
        for (int k = 0; k < l; ++k)
            gamma[static_cast<size_t>(k)] = make_rat(b2[static_cast<size_t>(k)], 2) - mw[static_cast<size_t>(k)];
        std::vector<int> word = cd.eps_word(gamma);

        FockMonomial mono;
        mono.lat = word;
        mono.marker = static_cast<int>(mod);

        long frem2 = maxd2 - lat2;
        std::vector<int> ferm;  // ascending while building

        std::function<void(long)> add_bosons = [&](long left2) {
            mono.fermions.assign(ferm.rbegin(), ferm.rend());
            std::function<void(int, int, long)> bos = [&](int min_mode, int min_color, long budget2) {
                out.push_back(BasisEntry{mono, lat2 + frem2 - budget2});
                for (int m = min_mode; 2L * m <= budget2; ++m)
                    for (int j = (m == min_mode ? min_color : 1); j <= l; ++j) {
                        mono.bosons.emplace_back(j, m);
                        bos(m, j, budget2 - 2L * m);
                        mono.bosons.pop_back();
                    }
            };
            bos(1, 1, left2);
            mono.bosons.clear();
        };

        std::function<void(int, long)> add_fermions = [&](int next2, long left2) {
            add_bosons(left2);
            for (long k2 = next2; k2 <= left2; k2 += 2) {
                ferm.push_back(static_cast<int>(k2));
                add_fermions(static_cast<int>(k2) + 2, left2 - k2);
                ferm.pop_back();
            }
        };
        add_fermions(ramond ? 0 : 1, frem2);
    };

    std::function<void(int, long)> walk = [&](int pos, long sum4) {
        if (pos == l) {
            emit_for_lattice(sum4);
            return;
        }
        long bound4 = floor_twice(2 * radius2) - sum4;  // 4*radius2 - sum4
        for (long c2 = ramond ? 1 : 0; c2 * c2 <= bound4; c2 += 2) {
            b2[static_cast<size_t>(pos)] = c2;
            walk(pos + 1, sum4 + c2 * c2);
            if (c2 != 0) {
                b2[static_cast<size_t>(pos)] = -c2;
                walk(pos + 1, sum4 + c2 * c2);
            }
        }
        b2[static_cast<size_t>(pos)] = 0;
    };
    walk(0, 0);

    std::sort(out.begin(), out.end(), [](const BasisEntry& a, const BasisEntry& b) {
        if (a.degree2 != b.degree2) return a.degree2 < b.degree2;
        return a.mono < b.mono;
    });
    return out;
}

}  // namespace qvertex
