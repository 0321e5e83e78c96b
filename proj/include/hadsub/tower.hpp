#pragma once

#include <cstddef>
#include <stdexcept>

#include "hadsub/cmat.hpp"
#include "hadsub/hadamard.hpp"

namespace hadsub {

/// σ₁ = E₂₁+E₃₂+E₁₃ and σ₂ = E₃₁+E₁₂+E₂₃, the cycles (123) and (132).
inline CMat sigma1() {
    return CMat::unit(3, 1, 0) + CMat::unit(3, 2, 1) + CMat::unit(3, 0, 2);
}

inline CMat sigma2() {
    return CMat::unit(3, 2, 0) + CMat::unit(3, 0, 1) + CMat::unit(3, 1, 2);
}

/// γ₁ = E₁₁+E₂₃+E₃₂ (swap 2,3) and γ₂ = E₁₂+E₂₃+E₃₁; together they generate
/// the permutation matrices of S₃.
inline CMat gamma1() {
    return CMat::unit(3, 0, 0) + CMat::unit(3, 1, 2) + CMat::unit(3, 2, 1);
}

inline CMat gamma2() {
    return CMat::unit(3, 0, 1) + CMat::unit(3, 1, 2) + CMat::unit(3, 2, 0);
}

/// D_u = √n·Σ_ij conj(u_ij)·(E_ii ⊗ E_jj): diagonal unitary in M_{n²} with
/// √n·conj(u_ij) at diagonal slot i·n+j.
inline CMat d_matrix(const HadamardMatrix& u) {
    const std::size_t n = u.n;
    const double s = std::sqrt(static_cast<double>(n));
    CMat d(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            d(i * n + j, i * n + j) = s * std::conj(u.mat(i, j));
    return d;
}

struct TowerUnitary {
    int level = 0;
    CMat mat;  // size n^(ceil(level/2)+1)
};

inline std::size_t pow_sz(std::size_t base, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

/// Unitaries of the iterated basic construction, seeded with u₀ = u:
///   u_{2k+1} = (I_n ⊗ u_{2k})(D_u ⊗ I_n^{(k)}),  u_{2k} = u_{2k−1}(u ⊗ I_n^{(k)}),
/// so that u₂ = (I₃ ⊗ u)·D_u·(u ⊗ I₃). Levels 1..7 (≤ 243×243 for n = 3).
inline TowerUnitary tower_unitary(const HadamardMatrix& u, int m) {
    if (m < 1 || m > 7) throw std::invalid_argument("tower_unitary: level must be in 1..7");
    const std::size_t n = u.n;
    const CMat du = d_matrix(u);
    CMat cur = u.mat;
    for (int level = 1; level <= m; ++level) {
        if (level % 2 == 1) {
            const int k = (level - 1) / 2;
            cur = kron(CMat::identity(n), cur) * kron(du, CMat::identity(pow_sz(n, k)));
        } else {
            const int k = level / 2;
            cur = cur * kron(u.mat, CMat::identity(pow_sz(n, k)));
        }
    }
    return TowerUnitary{m, std::move(cur)};
}

/// W₂ = bl-diag{I₃, σ₁, σ₂}; W_{2k} = Π_{n=0}^{k−1} I₃^{(k−1−n)} ⊗ W₂ ⊗ I₃^{(n)},
/// factors multiplied left to right in ascending n. k ≤ 3 (81×81).
inline CMat w_block(int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("w_block: k must be in 1..3");
    CMat w2(9, 9);
    const CMat blocks[3] = {CMat::identity(3), sigma1(), sigma2()};
    for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) w2(3 * b + i, 3 * b + j) = blocks[b](i, j);
    CMat w = CMat::identity(pow_sz(3, k + 1));
    for (int t = 0; t < k; ++t) {
        const CMat factor =
            kron(CMat::identity(pow_sz(3, k - 1 - t)), kron(w2, CMat::identity(pow_sz(3, t))));
        w = w * factor;
    }
    return w;
}

/// Flip V = Σ E_ij ⊗ E_ji on ℂⁿ⊗ℂⁿ; V(a⊗b)V = b⊗a.
inline CMat flip(std::size_t n) {
    CMat v(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v(i * n + j, j * n + i) = 1.0;
    return v;
}

struct QSplit {
    CMat q0, q1, q2;  // supports (11,22,33), (12,23,31), (13,21,32); q0+q1+q2 = x
};

inline QSplit q_split(const CMat& x) {
    if (!x.square() || x.rows() != 3) throw std::invalid_argument("q_split: expected a 3x3 matrix");
    QSplit q{CMat(3, 3), CMat(3, 3), CMat(3, 3)};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const std::size_t d = (j + 3 - i) % 3;  // 0: diag, 1: Q1 support, 2: Q2 support
            (d == 0 ? q.q0 : d == 1 ? q.q1 : q.q2)(i, j) = x(i, j);
        }
    return q;
}

/// Evaluates (F₃†⊗I₃)·D_{F₃}†·(I₃⊗x)·D_{F₃}·(F₃⊗I₃) and checks it equals the
/// block circulant [[Q₀,Q₁,Q₂],[Q₂,Q₀,Q₁],[Q₁,Q₂,Q₀]] of x. A failure here
/// means the ω convention broke somewhere upstream.
inline CMat circulant_conjugation(const CMat& x) {
    const QSplit q = q_split(x);
    const HadamardMatrix f3 = fourier(3);
    const CMat df = d_matrix(f3);
    const CMat i3 = CMat::identity(3);
    const CMat lhs = kron(dagger(f3.mat), i3) * dagger(df) * kron(i3, x) * df * kron(f3.mat, i3);

    CMat expected(9, 9);
    const CMat* blocks[3][3] = {{&q.q0, &q.q1, &q.q2}, {&q.q2, &q.q0, &q.q1}, {&q.q1, &q.q2, &q.q0}};
    for (std::size_t bi = 0; bi < 3; ++bi)
        for (std::size_t bj = 0; bj < 3; ++bj)
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    expected(3 * bi + i, 3 * bj + j) = (*blocks[bi][bj])(i, j);

    if (max_abs(lhs - expected) > 1e-10)
        throw std::runtime_error("circulant_conjugation: block structure violated");
    return lhs;
}

/// u_{2k}†·v_{2k} = W_{2k}·(u†v ⊗ I₃^{(k)})·W_{2k}† within 1e−9.
inline bool verify_tower_identity(const PhasePair& p, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("verify_tower_identity: k must be in 1..3");
    const UVPair uv = build_uv(p);
    const CMat u2k = tower_unitary(uv.u, 2 * k).mat;
    const CMat v2k = tower_unitary(uv.v, 2 * k).mat;
    const CMat w = w_block(k);
    const CMat inner = kron(dagger(uv.u.mat) * uv.v.mat, CMat::identity(pow_sz(3, k)));
    return max_abs(dagger(u2k) * v2k - w * inner * dagger(w)) <= 1e-9;
}

}  // namespace hadsub
