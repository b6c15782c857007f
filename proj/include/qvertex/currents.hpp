#pragma once

// Drinfeld currents x_i^{+-}(z), phi_i^{+-} series, and the Chevalley
// generators (e_0, f_0 via nested w-maps) as exact operators on Fock
// vectors.  Mode extraction is exact per mode: the annihilation side is
// nilpotent on each state, the creation side is pinned by the target
// exponent.  Elementary mode applications are memoized per monomial.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "qvertex/basis.hpp"
#include "qvertex/fock.hpp"

namespace qvertex {

// one boson layer at a fixed mode: sum of coeff * a_color(mode)
using BosonCombo = std::vector<std::pair<int, Scalar>>;

inline FockVector apply_combo(const CartanData& cd, const BosonCombo& combo, long mode, const FockVector& v) {
    FockVector r(v.mod);
    for (const auto& [color, coeff] : combo) {
        if (coeff.is_zero()) continue;
        r.add_scaled(apply_boson(cd, color, mode, v), coeff);
    }
    return r;
}

// q^{+-h_i} with the unsubscripted normalization (q^{h_i} = q_i^{h_i/d_i}).
inline FockVector apply_qh_unsub(const CartanData& cd, int i, int sgn, const FockVector& v) {
    FockVector r(v.mod);
    for (const auto& [mono, c] : v.terms) {
        std::vector<Rational> beta = weight_eps(cd, mono.lat, mono.marker);
        Rational e = 2 * cd.dot_eps(cd.alpha_eps(i), beta) / cd.d(i);
        r.add_term(mono, c * Scalar::t_pow(static_cast<int>(sgn * to_long(e))));
    }
    return r;
}

class Algebra {
  public:
    using Op = std::function<FockVector(const FockVector&)>;

    explicit Algebra(const CartanData& cd) : cd_(cd) {}
    const CartanData& cartan() const { return cd_; }

    // gamma^{1/2} -> t at level one
    static Scalar gamma_half() { return Scalar::t_pow(1); }
    static Scalar gamma_pow_half(long n2) { return Scalar::t_pow(static_cast<int>(n2)); }

    // ----- Drinfeld currents ------------------------------------------------

    FockVector x_mode(int i, int sgn, long n, const FockVector& v) const {
        return apply_memoized(MemoKey{OpTag::X, i, sgn, n}, v, [&](const FockMonomial& mono) {
            return x_mode_mono(i, sgn, n, mono);
        });
    }

    FockVector phi_mode(int i, int sgn, long r, const FockVector& v) const {
        if (r < 0) throw std::invalid_argument("phi_mode: r >= 0 required");
        return apply_memoized(MemoKey{OpTag::Phi, i, sgn, r}, v, [&](const FockMonomial& mono) {
            return phi_mode_mono(i, sgn, r, mono);
        });
    }

    // ----- Chevalley generators ----------------------------------------------

    FockVector e(int i, const FockVector& v) const {
        if (i == 0) {
            FockVector w = apply_qh0(cd_, 1, v).scaled(Scalar::q_pow(-1));  // q^{h_0} gamma^{-1}
            return apply_memoized(MemoKey{OpTag::E0Prime, 0, 0, 0}, w,
                                  [&](const FockMonomial& mono) { return e0_prime()(FockVector::single(mono, Scalar::one())); });
        }
        return x_mode(i, 1, 0, v);
    }

    FockVector f(int i, const FockVector& v) const {
        if (i == 0) {
            FockVector w = apply_memoized(MemoKey{OpTag::F0Chain, 0, 0, 0}, v,
                                          [&](const FockMonomial& mono) { return f0_chain()(FockVector::single(mono, Scalar::one())); });
            // f_0 = q^{2l-3} omega^2 q^{-h_0} gamma (w-chain)
            return apply_qh0(cd_, -1, w).scaled(Scalar::q_pow(2 * cd_.rank() - 3 + 1) * Scalar::omega_pow(2));
        }
        return x_mode(i, -1, 0, v);
    }

    FockVector qh(int i, int sgn, const FockVector& v) const {
        return i == 0 ? apply_qh0(cd_, sgn, v) : apply_qh(cd_, i, sgn, v);
    }
    FockVector qd(int sgn, const FockVector& v) const { return apply_qd(cd_, sgn, v); }

    FockVector chevalley(char gen, int i, const FockVector& v) const {
        switch (gen) {
            case 'e': return e(i, v);
            case 'f': return f(i, v);
            case 'h': return qh(i, 1, v);
            case 'H': return qh(i, -1, v);
            case 'd': return qd(1, v);
            case 'D': return qd(-1, v);
        }
        throw std::invalid_argument("chevalley: unknown generator");
    }

    // ----- w- and P-maps ------------------------------------------------------

    Op x_op(int i, int sgn, long n) const {
        return [this, i, sgn, n](const FockVector& v) { return x_mode(i, sgn, n, v); };
    }

    // w_i^{+-} a = x_i^{+-}(0) a - q_i^{+-h_i} a q_i^{-+h_i} x_i^{+-}(0)
    Op w_map(int i, int sgn, Op a) const {
        return [this, i, sgn, a](const FockVector& v) {
            FockVector xv = x_mode(i, sgn, 0, v);
            FockVector t1 = x_mode(i, sgn, 0, a(v));
            FockVector t2 = apply_qh(cd_, i, sgn, a(apply_qh(cd_, i, -sgn, xv)));
            return t1 - t2;
        };
    }

    // P_i^{+-} x = [x_i^{+-}(0), x] q_i^{-+h_i}
    Op p_map(int i, int sgn, Op x) const {
        return [this, i, sgn, x](const FockVector& v) {
            FockVector w = apply_qh(cd_, i, -sgn, v);
            return x_mode(i, sgn, 0, x(w)) - x(x_mode(i, sgn, 0, w));
        };
    }

    // e_0' = w_2^- w_3^- ... w_l^- w_l^- ... w_3^- w_2^- x_1^-(1)
    Op e0_prime() const { return w_chain(-1, x_op(1, -1, 1)); }
    // the w-chain part of f_0 (without normalization factors): w_2^+ ... w_2^+ x_1^+(-1)
    Op f0_chain() const { return w_chain(1, x_op(1, 1, -1)); }

    Op w_chain(int sgn, Op core) const {
        Op op = core;
        // palindromic sequence 2, 3, ..., l, l, ..., 3, 2
        std::vector<int> seq;
        for (int i = 2; i <= cd_.rank(); ++i) seq.push_back(i);
        for (int i = cd_.rank(); i >= 2; --i) seq.push_back(i);
        for (int i : seq) op = w_map(i, sgn, op);
        return op;
    }

    void clear_memo() const {
        std::unique_lock lk(mu_);
        memo_.clear();
    }

  private:
    enum class OpTag { X, Phi, E0Prime, F0Chain };
    struct MemoKey {
        OpTag tag;
        int i;
        int sgn;
        long n;
        auto operator<=>(const MemoKey&) const = default;
    };

    FockVector apply_memoized(const MemoKey& key, const FockVector& v,
                              const std::function<FockVector(const FockMonomial&)>& per_mono) const {
        FockVector out(v.mod);
        for (const auto& [mono, c] : v.terms) {
            {
                std::shared_lock lk(mu_);
                auto it = memo_.find({key, mono});
                if (it != memo_.end()) {
                    out.mod = it->second.mod;
                    out.add_scaled(it->second, c);
                    continue;
                }
            }
            FockVector r = per_mono(mono);
            out.mod = r.mod;
            out.add_scaled(r, c);
            std::unique_lock lk(mu_);
            memo_.emplace(std::make_pair(key, mono), std::move(r));
        }
        return out;
    }

    // --- mode extraction core -------------------------------------------------

    // exp over annihilation modes: emits every multiset application of
    // combo(k) (k >= 1, total mode sum M bounded by the boson energy),
    // with coefficient prod c(k)^{mult}/mult!.
    void annihilation_expansions(const FockVector& start, const std::function<Scalar(long)>& coeff,
                                 const std::function<BosonCombo(long)>& combo, long budget,
                                 const std::function<void(const FockVector&, long)>& emit) const {
        emit(start, 0);
        std::function<void(long, long, const FockVector&)> dfs = [&](long kmin, long used, const FockVector& cur) {
            for (long k = kmin; used + k <= budget; ++k) {
                BosonCombo cb = combo(k);
                Scalar ck = coeff(k);
                FockVector v = cur;
                Scalar f = Scalar::one();
                for (long mult = 1; used + mult * k <= budget; ++mult) {
                    v = apply_combo(cd_, cb, k, v);
                    if (v.is_zero()) break;
                    f = (f * ck).scaled(make_rat(1, mult));
                    FockVector scaled_v = v.scaled(f);
                    emit(scaled_v, used + mult * k);
                    dfs(k + 1, used + mult * k, scaled_v);
                }
            }
        };
        dfs(1, 0, start);
    }

    // exp over creation modes: sum over multisets with total exactly K.
    FockVector creation_expansion(const FockVector& start, const std::function<Scalar(long)>& coeff,
                                  const std::function<BosonCombo(long)>& combo, long K) const {
        FockVector out(start.mod);
        if (K == 0) {
            out.add(start);
            return out;
        }
        std::function<void(long, long, const FockVector&)> dfs = [&](long kmax, long rem, const FockVector& cur) {
            for (long k = std::min(kmax, rem); k >= 1; --k) {
                BosonCombo cb = combo(k);
                Scalar ck = coeff(k);
                FockVector v = cur;
                Scalar f = Scalar::one();
                for (long mult = 1; mult * k <= rem; ++mult) {
                    v = apply_combo(cd_, cb, -k, v);
                    f = (f * ck).scaled(make_rat(1, mult));
                    if (mult * k == rem) {
                        out.add_scaled(v, f);
                        break;
                    }
                    dfs(k - 1, rem - mult * k, v.scaled(f));
                }
            }
        };
        dfs(K, K, start);
        return out;
    }

    // x_i^{+-}(z) = z^{pref} exp(+- sum a_i(-k)/[k] q^{-+k/2} w_l z^k)
    //               exp(-+ sum a_i(k)/[k] q^{-+k/2} w_l z^{-k})
    //               e^{+-alpha_i} z^{+-partial_{alpha_i}} [Psi(z) if i=l]
    // with pref = 1 (i<l) or 1/2 (i=l) and w_l = omega only for i=l.
    FockVector x_mode_mono(int i, int sgn, long n, const FockMonomial& mono) const {
        int l = cd_.rank();
        bool spin = (i == l);
        FockVector out(mono.module());

        Scalar wl = spin ? Scalar::omega() : Scalar::one();
        auto c_coeff = [&, wl](long k) {  // creation-side coefficient of a_i(-k)
            return (q_int(k, 2).inverse() * Scalar::t_pow(static_cast<int>(-sgn * k)) * wl)
                .scaled(Rational(sgn));
        };
        auto a_coeff = [&, wl](long k) {  // annihilation-side coefficient of a_i(k)
            return (q_int(k, 2).inverse() * Scalar::t_pow(static_cast<int>(-sgn * k)) * wl)
                .scaled(Rational(-sgn));
        };
        auto cb = [&](long) { return BosonCombo{{i, Scalar::one()}}; };

        std::vector<Rational> beta = weight_eps(cd_, mono.lat, mono.marker);
        long e0x2 = to_long(Rational(2 * sgn) * cd_.dot_eps(cd_.alpha_eps(i), beta));  // 2*sgn*(alpha_i,beta)
        long pref2 = spin ? 1 : 2;
        long be2 = mono.boson_energy2();

        GroupAlgebraElement shift = GroupAlgebraElement::identity(cd_);
        if (spin) {
            shift.exps = cd_.alpha_l_word(sgn);
        } else {
            shift.exps[static_cast<size_t>(i)] = sgn;
        }

        // fermion stage candidates: (vector after Psi(mode), doubled z-power 2*(-mode))
        std::vector<std::pair<FockVector, long>> ferm_states;
        FockVector base = FockVector::single(mono, Scalar::one());
        if (!spin) {
            ferm_states.emplace_back(base, 0);
        } else {
            for (int k2 : mono.fermions) {  // annihilation (k2 > 0 entries)
                if (k2 == 0) continue;
                FockVector r = apply_fermion(cd_, k2, base);
                if (!r.is_zero()) ferm_states.emplace_back(std::move(r), -static_cast<long>(k2));
            }
            // creation (and the R zero mode): K2 >= 0 requires zf2 <= -2n - pref2 - e0x2 + be2
            long zf2max = -2 * n - pref2 - e0x2 + be2;
            int start = sector_of(mono.module()) == Sector::R ? 0 : 1;
            for (long k2 = start; k2 <= zf2max; k2 += 2) {
                FockVector r = apply_fermion(cd_, static_cast<int>(-k2), base);
                if (!r.is_zero()) ferm_states.emplace_back(std::move(r), k2);
            }
        }

        for (auto& [fv, zf2] : ferm_states) {
            FockVector shifted = apply_lattice(cd_, shift, fv);
            long base_z2 = pref2 + zf2 + e0x2;
            annihilation_expansions(shifted, a_coeff, cb, be2 / 2, [&](const FockVector& av, long M) {
                long K2 = -2 * n - base_z2 + 2 * M;
                if (K2 < 0) return;
                if (K2 % 2 != 0) throw std::logic_error("x_mode: non-integer creation demand");
                out.add(creation_expansion(av, c_coeff, cb, K2 / 2));
            });
        }
        return out;
    }

    // phi_i^{+}(r): q_i^{h_i} (coefficient of u^{-r} in exp(+(q_i - q_i^{-1}) sum a_i(k) u^{-k}));
    // phi_i^{-}(r): q_i^{-h_i} with creation modes instead.
    FockVector phi_mode_mono(int i, int sgn, long r, const FockMonomial& mono) const {
        Scalar qi_diff = Scalar::t_pow(cd_.dd(i)) - Scalar::t_pow(-cd_.dd(i));
        auto coeff = [&, qi_diff](long) { return qi_diff.scaled(Rational(sgn)); };
        auto cb = [&](long) { return BosonCombo{{i, Scalar::one()}}; };
        FockVector base = FockVector::single(mono, Scalar::one());
        FockVector expanded(mono.module());
        if (sgn > 0) {
            if (r > mono.boson_energy2() / 2) return expanded;  // annihilation exceeds energy
            annihilation_expansions(base, coeff, cb, mono.boson_energy2() / 2, [&](const FockVector& v, long M) {
                if (M == r) expanded.add(v);
            });
        } else {
            expanded = creation_expansion(base, coeff, cb, r);
        }
        return apply_qh(cd_, i, sgn, expanded);
    }

    const CartanData& cd_;
    mutable std::shared_mutex mu_;
    mutable std::map<std::pair<MemoKey, FockMonomial>, FockVector> memo_;
};

}  // namespace qvertex
