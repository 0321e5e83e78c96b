#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hadsub/cmat.hpp"

namespace hadsub {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Entry-level tolerance for Hadamard/Hamming/pattern decisions.
inline constexpr double kEntryTol = 1e-10;

inline double canonical_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

/// ω = e^{−2πi/3}, the primitive cube root fixed throughout. The sign is
/// load-bearing: 𝒟₂F₃ = F₃σ₁ fails under the conjugate convention, and a
/// regression test pins it.
inline cplx omega3() { return cplx(-0.5, -std::sqrt(3.0) / 2.0); }

/// The four phases of u = diag(1, e^{iα₁}, e^{iα₂})·F₃ and
/// v = diag(1, e^{iβ₁}, e^{iβ₂})·F₃, canonicalized to [0, 2π).
struct PhasePair {
    double alpha1 = 0.0, alpha2 = 0.0, beta1 = 0.0, beta2 = 0.0;

    PhasePair() = default;
    PhasePair(double a1, double a2, double b1, double b2)
        : alpha1(canonical_angle(a1)),
          alpha2(canonical_angle(a2)),
          beta1(canonical_angle(b1)),
          beta2(canonical_angle(b2)) {}
};

/// A unitary all of whose entries have modulus 1/√n.
struct HadamardMatrix {
    std::size_t n = 0;
    CMat mat;
};

inline bool is_complex_hadamard(const CMat& u) {
    if (!u.square() || u.rows() == 0) return false;
    if (!is_unitary(u, kEntryTol)) return false;
    const double target = 1.0 / std::sqrt(static_cast<double>(u.rows()));
    for (const cplx& z : u.data())
        if (std::abs(std::abs(z) - target) > kEntryTol) return false;
    return true;
}

inline HadamardMatrix make_hadamard(const CMat& u) {
    if (!is_complex_hadamard(u))
        throw std::invalid_argument("make_hadamard: matrix is not complex Hadamard");
    return HadamardMatrix{u.rows(), u};
}

/// Fourier matrix F_n with entry (j,k) = ω^{jk}/√n, ω = e^{−2πi/n}.
inline HadamardMatrix fourier(std::size_t n) {
    if (n == 0) throw std::invalid_argument("fourier: order must be positive");
    CMat f(n, n);
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t e = (j * k) % n;  // reduce mod n for exact angles
            f(j, k) = s * std::polar(1.0, -kTwoPi * static_cast<double>(e) / static_cast<double>(n));
        }
    return HadamardMatrix{n, f};
}

/// Number of entries with modulus above the entry threshold.
inline int hamming(std::span<const cplx> w) {
    int count = 0;
    for (const cplx& z : w)
        if (std::abs(z) > kEntryTol) ++count;
    if (count == 0) throw std::invalid_argument("hamming: zero vector");
    return count;
}

/// Exact unit fraction 1/denominator.
struct UnitFraction {
    long long denominator = 1;

    double value() const { return 1.0 / static_cast<double>(denominator); }
    std::string str() const {
        return denominator == 1 ? std::string("1") : "1/" + std::to_string(denominator);
    }
    friend bool operator==(const UnitFraction&, const UnitFraction&) = default;
};

/// Pimsner–Popa number of the Masa pair (Δ_n, UΔ_nU†):
/// min over columns i of 1/h((U†)_i), i.e. 1 / (max column Hamming of U†).
inline UnitFraction lambda_masas(const CMat& u) {
    if (!is_unitary(u, kEntryTol))
        throw std::invalid_argument("lambda_masas: input must be unitary");
    const CMat ud = dagger(u);
    long long max_h = 1;
    for (std::size_t j = 0; j < ud.cols(); ++j) {
        std::vector<cplx> col(ud.rows());
        for (std::size_t i = 0; i < ud.rows(); ++i) col[i] = ud(i, j);
        max_h = std::max(max_h, static_cast<long long>(hamming(col)));
    }
    return UnitFraction{max_h};
}

/// The diagonal patterns 𝒟₁ = I, 𝒟₂ = diag(1,ω,ω²), 𝒟₃ = diag(1,ω²,ω).
inline CMat script_d(int j) {
    const cplx w = omega3();
    switch (j) {
        case 1: return CMat::identity(3);
        case 2: return CMat::diagonal({1.0, w, w * w});
        case 3: return CMat::diagonal({1.0, w * w, w});
        default: throw std::invalid_argument("script_d: index must be 1, 2 or 3");
    }
}

namespace detail {
inline void require_diagonal_unitary3(const CMat& d, const char* who) {
    if (!d.square() || d.rows() != 3)
        throw std::invalid_argument(std::string(who) + ": expected a 3x3 matrix");
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i != j && std::abs(d(i, j)) > kEntryTol)
                throw std::invalid_argument(std::string(who) + ": matrix is not diagonal");
            if (i == j && std::abs(std::abs(d(i, i)) - 1.0) > kEntryTol)
                throw std::invalid_argument(std::string(who) + ": diagonal is not unimodular");
        }
}
}  // namespace detail

/// D₁F₃ ∼ D₂F₃ iff D₂†D₁ is a unimodular scalar multiple of some 𝒟_j.
/// Decided by dividing out the (1,1) entry and comparing complex ratios;
/// angles are never subtracted, so there is no branch-cut issue.
inline bool sim_equiv3(const CMat& d1, const CMat& d2) {
    detail::require_diagonal_unitary3(d1, "sim_equiv3");
    detail::require_diagonal_unitary3(d2, "sim_equiv3");
    std::array<cplx, 3> p{};
    for (std::size_t i = 0; i < 3; ++i) p[i] = std::conj(d2(i, i)) * d1(i, i);
    const cplx lead = p[0];
    for (auto& z : p) z /= lead;
    for (int j = 1; j <= 3; ++j) {
        const CMat pat = script_d(j);
        bool match = true;
        for (std::size_t i = 0; i < 3; ++i)
            if (std::abs(p[i] - pat(i, i)) > kEntryTol) match = false;
        if (match) return true;
    }
    return false;
}

inline CMat phase_matrix_u(const PhasePair& p) {
    return CMat::diagonal({1.0, std::polar(1.0, p.alpha1), std::polar(1.0, p.alpha2)});
}

inline CMat phase_matrix_v(const PhasePair& p) {
    return CMat::diagonal({1.0, std::polar(1.0, p.beta1), std::polar(1.0, p.beta2)});
}

struct UVPair {
    HadamardMatrix u;
    HadamardMatrix v;
    bool distinct = false;  // false exactly when u ∼ v, i.e. the two Masas towers coincide
};

inline UVPair build_uv(const PhasePair& p) {
    const CMat d1 = phase_matrix_u(p);
    const CMat d2 = phase_matrix_v(p);
    const CMat f = fourier(3).mat;
    UVPair out;
    out.u = HadamardMatrix{3, d1 * f};
    out.v = HadamardMatrix{3, d2 * f};
    out.distinct = !sim_equiv3(d1, d2);
    return out;
}

}  // namespace hadsub
