#pragma once

// Cartan data for the affine algebra of type B_l^(1): affine Cartan matrix,
// symmetrizing d_i, marks/comarks, the exact inverse of the classical
// Cartan matrix, the bilinear form on the affine weight lattice, and the
// classical weight lattice in both the fundamental-weight basis and an
// orthonormal epsilon basis (the latter drives all in-module pairings).

#include <array>
#include <cassert>
#include <stdexcept>
#include <vector>

#include "qvertex/rational.hpp"

namespace qvertex {

enum class Module { L0 = 0, L1 = 1, Ll = 2 };

inline const char* module_name(Module m) {
    switch (m) {
        case Module::L0: return "0";
        case Module::L1: return "1";
        case Module::Ll: return "l";
    }
    return "?";
}

// Coordinates over the classical fundamental weights lambda_1..lambda_l.
struct ClassicalVector {
    std::vector<Rational> lam;
};

// Coordinates over Lambda_0..Lambda_l, delta.
struct AffineWeight {
    std::vector<Rational> c;
};

class CartanData {
  public:
    explicit CartanData(int rank) : l_(rank) {
        if (rank < 2) throw std::invalid_argument("CartanData: rank must be >= 2");
        build_cartan();
        build_classical_inverse();
        build_epsilon_model();
        build_cocycle();
    }

    int rank() const { return l_; }
    int a(int i, int j) const { return A_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    // 2*d_i (2 for i < l, 1 for i = l)
    int dd(int i) const { return i == l_ ? 1 : 2; }
    Rational d(int i) const { return make_rat(dd(i), 2); }
    int mark(int i) const { return (i <= 1) ? 1 : 2; }
    int comark(int i) const { return (i <= 1 || i == l_) ? 1 : 2; }
    const Rational& abar_inv(int i, int j) const {  // 1 <= i,j <= l
        return AbarInv_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    }

    // ----- affine weight lattice -------------------------------------------

    AffineWeight aff_zero() const { return AffineWeight{std::vector<Rational>(static_cast<size_t>(l_ + 2))}; }
    AffineWeight aff_Lambda(int i) const {
        AffineWeight w = aff_zero();
        w.c[static_cast<size_t>(i)] = 1;
        return w;
    }
    AffineWeight aff_delta() const {
        AffineWeight w = aff_zero();
        w.c[static_cast<size_t>(l_ + 1)] = 1;
        return w;
    }
    // alpha_i = sum_j a_{ji} Lambda_j + delta_{i,0} delta
    AffineWeight aff_alpha(int i) const {
        AffineWeight w = aff_zero();
        for (int j = 0; j <= l_; ++j) w.c[static_cast<size_t>(j)] = a(j, i);
        if (i == 0) w.c[static_cast<size_t>(l_ + 1)] = 1;
        return w;
    }
    // lambda_i = Lambda_i - a_i^vee Lambda_0
    AffineWeight aff_classical_weight(int i) const {
        AffineWeight w = aff_Lambda(i);
        w.c[0] -= comark(i);
        return w;
    }

    // (Lambda_0, Lambda_i) = 0; (Lambda_i, Lambda_j) = d_i (Abar^-1)_{ij};
    // (Lambda_i, delta) = a_i^vee; (delta, delta) = 0.
    Rational bilinear_form(const AffineWeight& x, const AffineWeight& y) const {
        Rational acc(0);
        size_t dl = static_cast<size_t>(l_ + 1);
        for (int i = 1; i <= l_; ++i)
            for (int j = 1; j <= l_; ++j) {
                const Rational& xi = x.c[static_cast<size_t>(i)];
                const Rational& yj = y.c[static_cast<size_t>(j)];
                if (!is_zero(xi) && !is_zero(yj)) acc += xi * yj * d(i) * abar_inv(i, j);
            }
        for (int i = 0; i <= l_; ++i) {
            acc += x.c[static_cast<size_t>(i)] * y.c[dl] * comark(i);
            acc += y.c[static_cast<size_t>(i)] * x.c[dl] * comark(i);
        }
        return acc;
    }

    // <h_i, w> = d_i^{-1} (alpha_i, w); <d, w> = (Lambda_0, w)
    Rational dual_pairing_h(int i, const AffineWeight& w) const {
        return bilinear_form(aff_alpha(i), w) / d(i);
    }
    Rational dual_pairing_d(const AffineWeight& w) const { return bilinear_form(aff_Lambda(0), w); }

    // Classical projection: Lambda_i -> lambda_i (Lambda_0, delta -> 0).
    ClassicalVector classical_projection(const AffineWeight& w) const {
        ClassicalVector v = cl_zero();
        for (int i = 1; i <= l_; ++i) v.lam[static_cast<size_t>(i - 1)] = w.c[static_cast<size_t>(i)];
        return v;
    }

    // ----- classical lattice ------------------------------------------------

    ClassicalVector cl_zero() const { return ClassicalVector{std::vector<Rational>(static_cast<size_t>(l_))}; }
    ClassicalVector cl_lambda(int i) const {
        ClassicalVector v = cl_zero();
        v.lam[static_cast<size_t>(i - 1)] = 1;
        return v;
    }
    // alpha_i = sum_j a_{ji} lambda_j (classical part, 1 <= i <= l)
    ClassicalVector cl_alpha(int i) const {
        ClassicalVector v = cl_zero();
        for (int j = 1; j <= l_; ++j) v.lam[static_cast<size_t>(j - 1)] = a(j, i);
        return v;
    }

    std::vector<Rational> eps_of(const ClassicalVector& v) const {
        std::vector<Rational> e(static_cast<size_t>(l_));
        for (int i = 1; i <= l_; ++i) {
            const Rational& c = v.lam[static_cast<size_t>(i - 1)];
            if (is_zero(c)) continue;
            for (int k = 0; k < l_; ++k) e[static_cast<size_t>(k)] += c * lambda_eps_[static_cast<size_t>(i - 1)][static_cast<size_t>(k)];
        }
        return e;
    }

    Rational dot_eps(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
        Rational acc(0);
        for (size_t k = 0; k < x.size(); ++k) acc += x[k] * y[k];
        return acc;
    }

    Rational cl_form(const ClassicalVector& x, const ClassicalVector& y) const {
        return dot_eps(eps_of(x), eps_of(y));
    }

    // Gram matrix entry on the lambda basis, (lambda_i, lambda_j).
    Rational gram(int i, int j) const { return d(i) * abar_inv(i, j); }

    // ----- word coordinates (group algebra generators) ----------------------
    //
    // Generator order fixed as (lambda_1, alpha_1, ..., alpha_{l-1}); every
    // element of the classical root lattice Q is a unique integer word.

    int word_len() const { return l_; }
    const std::vector<Rational>& gen_eps(int g) const { return gen_eps_[static_cast<size_t>(g)]; }
    // 1 iff (gen_a, gen_b) is odd
    int kappa(int a, int b) const { return kappa_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }

    std::vector<Rational> word_eps(const std::vector<int>& exps) const {
        std::vector<Rational> e(static_cast<size_t>(l_));
        for (int g = 0; g < l_; ++g) {
            if (exps[static_cast<size_t>(g)] == 0) continue;
            for (int k = 0; k < l_; ++k)
                e[static_cast<size_t>(k)] += Rational(exps[static_cast<size_t>(g)]) * gen_eps_[static_cast<size_t>(g)][static_cast<size_t>(k)];
        }
        return e;
    }

    // Inverse of word_eps on integer vectors of Q.
    std::vector<int> eps_word(const std::vector<Rational>& eps) const {
        std::vector<long> c(static_cast<size_t>(l_));
        for (int k = 0; k < l_; ++k) c[static_cast<size_t>(k)] = to_long(eps[static_cast<size_t>(k)]);
        std::vector<int> m(static_cast<size_t>(l_));
        // c_1 = m_0 + m_1, c_{k+1} = m_{k+1} - m_k (1 <= k <= l-2), c_l = -m_{l-1}
        long acc = -c[static_cast<size_t>(l_ - 1)];
        m[static_cast<size_t>(l_ - 1)] = static_cast<int>(acc);
        for (int i = l_ - 2; i >= 1; --i) {
            acc = acc - c[static_cast<size_t>(i)];
            m[static_cast<size_t>(i)] = static_cast<int>(acc);
        }
        m[0] = static_cast<int>(c[0] - m[1]);
        return m;
    }

    // alpha_l as a generator word: lambda_1 - alpha_1 - ... - alpha_{l-1}.
    std::vector<int> alpha_l_word(int direction) const {
        std::vector<int> w(static_cast<size_t>(l_), -direction);
        w[0] = direction;
        return w;
    }

    const std::vector<Rational>& marker_eps(Module m) const { return marker_eps_[static_cast<size_t>(m)]; }
    const std::vector<Rational>& lambda_eps(int i) const { return lambda_eps_[static_cast<size_t>(i - 1)]; }
    const std::vector<Rational>& alpha_eps(int i) const { return alpha_eps_[static_cast<size_t>(i - 1)]; }
    const std::vector<Rational>& theta_eps() const { return theta_eps_; }
    const std::vector<Rational>& sum_lambda_eps() const { return sum_lambda_eps_; }
    // 2 sum_i (lambda_i, lambda_l), the R-sector constant in G
    const Rational& g_r_shift() const { return g_r_shift_; }
    const Rational& marker_norm(Module m) const { return marker_norm_[static_cast<size_t>(m)]; }

  private:
    void build_cartan() {
        size_t n = static_cast<size_t>(l_ + 1);
        A_.assign(n, std::vector<int>(n, 0));
        for (int i = 0; i <= l_; ++i) A_[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
        // nodes 0 and 1 both attach to node 2
        A_[0][2] = -1;
        A_[1][2] = -1;
        if (l_ == 2) {
            A_[2][0] = -2;
            A_[2][1] = -2;
        } else {
            A_[2][0] = -1;
            A_[2][1] = -1;
            for (int i = 2; i < l_; ++i) {
                A_[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = -1;
                A_[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = (i + 1 == l_) ? -2 : -1;
            }
        }
        // symmetrizability d_i a_ij = d_j a_ji
        for (int i = 0; i <= l_; ++i)
            for (int j = 0; j <= l_; ++j) assert(Rational(dd(i) * a(i, j)) == Rational(dd(j) * a(j, i)));
    }

    void build_classical_inverse() {
        size_t n = static_cast<size_t>(l_);
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) m[i][j] = a(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
            m[i][n + i] = 1;
        }
        for (size_t col = 0; col < n; ++col) {
            size_t piv = col;
            while (piv < n && is_zero(m[piv][col])) ++piv;
            if (piv == n) throw std::logic_error("classical Cartan matrix singular");
            std::swap(m[piv], m[col]);
            Rational inv = Rational(1) / m[col][col];
            for (size_t j = 0; j < 2 * n; ++j) m[col][j] *= inv;
            for (size_t r = 0; r < n; ++r) {
                if (r == col || is_zero(m[r][col])) continue;
                Rational f = m[r][col];
                for (size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
            }
        }
        AbarInv_.assign(n, std::vector<Rational>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) AbarInv_[i][j] = m[i][n + j];
    }

    void build_epsilon_model() {
        size_t n = static_cast<size_t>(l_);
        lambda_eps_.assign(n, std::vector<Rational>(n));
        alpha_eps_.assign(n, std::vector<Rational>(n));
        for (int i = 1; i < l_; ++i)
            for (int k = 1; k <= i; ++k) lambda_eps_[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)] = 1;
        for (int k = 0; k < l_; ++k) lambda_eps_[n - 1][static_cast<size_t>(k)] = make_rat(1, 2);
        for (int i = 1; i < l_; ++i) {
            alpha_eps_[static_cast<size_t>(i - 1)][static_cast<size_t>(i - 1)] = 1;
            alpha_eps_[static_cast<size_t>(i - 1)][static_cast<size_t>(i)] = -1;
        }
        alpha_eps_[n - 1][n - 1] = 1;
        // consistency with the abstract form: (lambda_i, lambda_j) = d_i (Abar^-1)_{ij}
        for (int i = 1; i <= l_; ++i)
            for (int j = 1; j <= l_; ++j)
                assert(dot_eps(lambda_eps_[static_cast<size_t>(i - 1)], lambda_eps_[static_cast<size_t>(j - 1)]) == gram(i, j));

        gen_eps_.assign(n, {});
        gen_eps_[0] = lambda_eps_[0];
        for (int g = 1; g < l_; ++g) gen_eps_[static_cast<size_t>(g)] = alpha_eps_[static_cast<size_t>(g - 1)];

        marker_eps_.assign(3, std::vector<Rational>(n));
        marker_eps_[1] = lambda_eps_[0];
        marker_eps_[2] = lambda_eps_[n - 1];
        for (int s = 0; s < 3; ++s)
            marker_norm_[static_cast<size_t>(s)] = dot_eps(marker_eps_[static_cast<size_t>(s)], marker_eps_[static_cast<size_t>(s)]);

        theta_eps_.assign(n, Rational(0));
        theta_eps_[0] = 1;
        theta_eps_[1] = 1;

        sum_lambda_eps_.assign(n, Rational(0));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k) sum_lambda_eps_[k] += lambda_eps_[i][k];
        g_r_shift_ = 2 * dot_eps(sum_lambda_eps_, lambda_eps_[n - 1]);
    }

    void build_cocycle() {
        size_t n = static_cast<size_t>(l_);
        kappa_.assign(n, std::vector<int>(n, 0));
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                if (a == b) continue;
                Rational p = dot_eps(gen_eps_[a], gen_eps_[b]);
                long v = to_long(p);
                kappa_[a][b] = static_cast<int>(((v % 2) + 2) % 2);
            }
    }

    int l_;
    std::vector<std::vector<int>> A_;
    std::vector<std::vector<Rational>> AbarInv_;
    std::vector<std::vector<Rational>> lambda_eps_;
    std::vector<std::vector<Rational>> alpha_eps_;
    std::vector<std::vector<Rational>> gen_eps_;
    std::vector<std::vector<Rational>> marker_eps_;
    std::array<Rational, 3> marker_norm_;
    std::vector<Rational> theta_eps_;
    std::vector<Rational> sum_lambda_eps_;
    Rational g_r_shift_;
    std::vector<std::vector<int>> kappa_;
};

inline bool is_ramond(Module m) { return m == Module::Ll; }

}  // namespace qvertex
