#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hadsub/algebra.hpp"
#include "hadsub/biunitary.hpp"
#include "hadsub/cmat.hpp"
#include "hadsub/hadamard.hpp"
#include "hadsub/tower.hpp"

namespace hadsub {

/// ζ = (1/3)(e^{i(α₁−β₁)} + e^{−i(α₂−β₂)} + e^{−i(α₁−β₁)}e^{i(α₂−β₂)}).
/// |ζ| ≤ 1 always; ζ = 0 exactly on the commuting-square locus.
struct Zeta {
    cplx value;
};

inline cplx z1_of(const PhasePair& p) { return std::polar(1.0, p.alpha1 - p.beta1); }
inline cplx z2_of(const PhasePair& p) { return std::polar(1.0, p.alpha2 - p.beta2); }

inline Zeta zeta(const PhasePair& p) {
    const cplx z1 = z1_of(p), z2 = z2_of(p);
    return Zeta{(z1 + std::conj(z2) + std::conj(z1) * z2) / 3.0};
}

/// Coefficients of D₁†D₂ = γ₀·I + γ₁·diag(1,ω,ω²) + γ₂·diag(1,ω²,ω).
struct GammaCoeffs {
    cplx gamma0, gamma1, gamma2;
};

inline GammaCoeffs gamma_coeffs(const PhasePair& p) {
    const cplx d1 = std::polar(1.0, p.beta1 - p.alpha1);
    const cplx d2 = std::polar(1.0, p.beta2 - p.alpha2);
    const cplx w = omega3();
    const cplx w2 = w * w;
    return GammaCoeffs{(1.0 + d1 + d2) / 3.0, (1.0 + d1 * w2 + d2 * w) / 3.0,
                       (1.0 + d1 * w + d2 * w2) / 3.0};
}

/// Membership in the six-pattern commuting-square locus
/// (e^{i(α₁−β₁)}, e^{i(α₂−β₂)}) ∈ {(ω,ω),(ω²,ω²),(1,ω),(1,ω²),(ω,1),(ω²,1)},
/// decided by complex comparison. This exact test is the decision rule; the
/// numeric |ζ| and superoperator checks are cross-checks.
inline bool is_commuting_square_pair(const PhasePair& p) {
    if (!build_uv(p).distinct)
        throw std::invalid_argument("is_commuting_square_pair: pair is degenerate (u ~ v)");
    const cplx z1 = z1_of(p), z2 = z2_of(p);
    const cplx w = omega3();
    const cplx w2 = w * w;
    const std::array<std::array<cplx, 2>, 6> patterns = {{
        {w, w}, {w2, w2}, {cplx(1.0), w}, {cplx(1.0), w2}, {w, cplx(1.0)}, {w2, cplx(1.0)},
    }};
    for (const auto& pat : patterns)
        if (std::abs(z1 - pat[0]) <= kEntryTol && std::abs(z2 - pat[1]) <= kEntryTol) return true;
    return false;
}

struct InteriorAngle {
    double cos_closed = 0.0;  // (1/9)|e^{−i(α₁−β₁)} + e^{i(α₂−β₂)} + e^{i(α₁−β₁)}e^{−i(α₂−β₂)}|²
    double cos_basis = 0.0;   // (1/2)·Σ_ij ntr(λ_i†μ_j)·ntr(μ_j†λ_i) − 1/2
};

/// Interior (= exterior) angle cosine, by the closed form and independently by
/// the basis formula with λ_i = Ad_u(√3·E_ii), μ_j = Ad_v(√3·E_jj).
inline InteriorAngle interior_angle(const PhasePair& p) {
    const UVPair uv = build_uv(p);
    if (!uv.distinct) throw std::invalid_argument("interior_angle: pair is degenerate (u ~ v)");
    const cplx z1 = z1_of(p), z2 = z2_of(p);
    const cplx bracket = std::conj(z1) + z2 + z1 * std::conj(z2);
    InteriorAngle out;
    out.cos_closed = std::norm(bracket) / 9.0;

    const double s3 = std::sqrt(3.0);
    std::vector<CMat> lam, mu;
    for (std::size_t i = 0; i < 3; ++i) {
        lam.push_back(conj_by(uv.u.mat, s3 * CMat::unit(3, i, i)));
        mu.push_back(conj_by(uv.v.mat, s3 * CMat::unit(3, i, i)));
    }
    cplx s = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            s += ntr(dagger(lam[i]) * mu[j]) * ntr(dagger(mu[j]) * lam[i]);
    out.cos_basis = 0.5 * s.real() - 0.5;
    return out;
}

/// S₀ = E_{Ad_u(Δ₃)}·E_{Ad_v(Δ₃)}·E_{Ad_u(Δ₃)} − E_ℂ as a 9×9 superoperator
/// on M₃ (E_ℂ is the normalized trace). Hermitian, positive semidefinite,
/// and S₀² = |ζ|²·S₀.
inline SuperOp s0_build(const PhasePair& p) {
    const UVPair uv = build_uv(p);
    if (!uv.distinct) throw std::invalid_argument("s0_build: pair is degenerate (u ~ v)");
    const AlgebraBasis au = conjugated(delta_algebra(3), uv.u.mat);
    const AlgebraBasis av = conjugated(delta_algebra(3), uv.v.mat);
    const CMat su = superop_of_cond_exp(au).matrix;
    const CMat sv = superop_of_cond_exp(av).matrix;
    const CMat sc = superop_of_cond_exp(scalar_algebra(3)).matrix;
    return SuperOp{3, su * sv * su - sc};
}

struct SwAngle {
    double angle = 0.0;
    bool right_angle_marker = false;  // commuting square: Ang = {π/2} by convention
};

/// Sano–Watatani angle {arccos|ζ|}; {π/2} when S₀ vanishes (commuting
/// square). Verifies S₀² = |ζ|²S₀ and that the nonzero spectrum of S₀ is the
/// single point |ζ|².
inline SwAngle sw_angle(const PhasePair& p) {
    const SuperOp s0 = s0_build(p);
    if (max_abs(s0.matrix) <= 1e-9) return SwAngle{std::numbers::pi / 2.0, true};
    const double z2 = std::norm(zeta(p).value);
    const double idem = max_abs(s0.matrix * s0.matrix - z2 * s0.matrix);
    if (idem > 1e-6) throw std::runtime_error("sw_angle: S0 idempotency failed");
    for (double ev : eig_hermitian(s0.matrix))
        if (std::abs(ev) > 1e-8 && std::abs(ev - z2) > 1e-8)
            throw std::runtime_error("sw_angle: S0 spectrum disagrees with |zeta|^2");
    return SwAngle{std::acos(std::abs(zeta(p).value)), false};
}

inline double eta(double t) { return t <= 0.0 ? 0.0 : -t * std::log(t); }

struct EntropyForms {
    double matrix_form = 0.0;  // (1/3)·Σ_ij η(|(u†v)_ij|²)
    double closed_form = 0.0;  // Σ_j η(|γ_j|²)
};

inline EntropyForms entropy_forms(const PhasePair& p) {
    const UVPair uv = build_uv(p);
    const CMat x = dagger(uv.u.mat) * uv.v.mat;
    EntropyForms out;
    for (const cplx& z : x.data()) out.matrix_form += eta(std::norm(z));
    out.matrix_form /= 3.0;
    const GammaCoeffs g = gamma_coeffs(p);
    out.closed_form =
        eta(std::norm(g.gamma0)) + eta(std::norm(g.gamma1)) + eta(std::norm(g.gamma2));
    return out;
}

/// Relative entropy h(R_u|R_v) in nats. The matrix form and the three-term
/// closed form are both evaluated and must agree.
inline double entropy_h(const PhasePair& p) {
    const EntropyForms f = entropy_forms(p);
    if (std::abs(f.matrix_form - f.closed_form) > 1e-6)
        throw std::runtime_error("entropy_h: matrix and closed forms disagree");
    return f.matrix_form;
}

/// Commuting-square residual: max-norm of E_P·E_Q − E_N and E_Q·E_P − E_N.
/// Precondition: N ⊆ P and N ⊆ Q as spans.
inline double commuting_square_residual(const AlgebraBasis& n, const AlgebraBasis& p,
                                        const AlgebraBasis& q) {
    for (const CMat& b : n.basis)
        if (!span_contains(p, b) || !span_contains(q, b))
            throw std::invalid_argument("commuting_square: N is not contained in P and Q");
    const CMat sn = superop_of_cond_exp(n).matrix;
    const CMat sp = superop_of_cond_exp(p).matrix;
    const CMat sq = superop_of_cond_exp(q).matrix;
    return std::max(max_abs(sp * sq - sn), max_abs(sq * sp - sn));
}

inline bool check_commuting_square(const AlgebraBasis& n, const AlgebraBasis& p,
                                   const AlgebraBasis& q, std::size_t m_dim) {
    if (n.ambient_dim != m_dim || p.ambient_dim != m_dim || q.ambient_dim != m_dim)
        throw std::invalid_argument("check_commuting_square: ambient dimension mismatch");
    return commuting_square_residual(n, p, q) <= 1e-9;
}

struct CommutingCube {
    bool adjacent_faces = false;  // both Ad_u and Ad_v faces; always true
    bool slice = false;           // (ℂ ⊂ Ad_{u₂W₂}(ℂ⊗M₃), ℂ⊗M₃ ⊂ M₉); always true
    bool floor = false;           // (ℂ ⊂ Ad_u(Δ₃), Ad_v(Δ₃) ⊂ M₃); the six-pattern locus
    double faces_residual = 0.0;
    double slice_residual = 0.0;
    double floor_residual = 0.0;
};

/// Verifies the finite commuting cube over (u, v): both adjacent faces inside
/// M₉ (with M₃ embedded as ℂ⊗M₃, i.e. x ↦ I₃⊗x), the slice through
/// Ad_{u₂W₂}(ℂ⊗M₃), and the floor square in M₃.
inline CommutingCube check_commuting_cube(const PhasePair& p) {
    const UVPair uv = build_uv(p);
    if (!uv.distinct) throw std::invalid_argument("check_commuting_cube: pair is degenerate");
    const CMat u2 = tower_unitary(uv.u, 2).mat;
    const CMat v2 = tower_unitary(uv.v, 2).mat;
    const AlgebraBasis delta_m3 = tensor_algebra(delta_algebra(3), full_algebra(3));
    const AlgebraBasis q9 = right_factor_algebra(3, 3);

    const auto embedded_masa = [](const CMat& h) {
        AlgebraBasis n;
        n.ambient_dim = 9;
        n.contains_identity = true;
        const AlgebraBasis m = conjugated(delta_algebra(3), h);
        for (const CMat& b : m.basis) n.basis.push_back(kron(CMat::identity(3), b));
        return n;
    };

    CommutingCube out;
    const double face_u =
        commuting_square_residual(embedded_masa(uv.u.mat), conjugated(delta_m3, u2), q9);
    const double face_v =
        commuting_square_residual(embedded_masa(uv.v.mat), conjugated(delta_m3, v2), q9);
    out.faces_residual = std::max(face_u, face_v);
    out.adjacent_faces = out.faces_residual <= 1e-9;

    const AlgebraBasis c1 = conjugated(q9, u2 * w_block(1));
    out.slice_residual = commuting_square_residual(scalar_algebra(9), c1, q9);
    out.slice = out.slice_residual <= 1e-9;

    out.floor_residual = commuting_square_residual(
        scalar_algebra(3), conjugated(delta_algebra(3), uv.u.mat),
        conjugated(delta_algebra(3), uv.v.mat));
    out.floor = out.floor_residual <= 1e-9;
    return out;
}

/// First relative commutant of the intersection subfactor, computed at the
/// finite level it reduces to: Ad_{u₂W₂}(M₃⊗ℂ) ∩ (ℂ⊗M₃), un-embedded back to
/// M₃ coordinates. Always Δ₃ (dimension 3) for distinct pairs.
inline AlgebraBasis relative_commutant(const PhasePair& p) {
    const UVPair uv = build_uv(p);
    if (!uv.distinct) throw std::invalid_argument("relative_commutant: pair is degenerate");
    const CMat u2w2 = tower_unitary(uv.u, 2).mat * w_block(1);
    const AlgebraBasis a = conjugated(left_factor_algebra(3, 3), u2w2);
    const AlgebraBasis b = right_factor_algebra(3, 3);
    const AlgebraBasis inter = intersect(a, b);

    AlgebraBasis out;
    out.ambient_dim = 3;
    for (const CMat& e : inter.basis) {
        // elements of ℂ⊗M₃ have the form I₃⊗x; peel off the embedding
        CMat x(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                x(i, j) = (e(i, j) + e(3 + i, 3 + j) + e(6 + i, 6 + j)) / 3.0;
        if (max_abs(e - kron(CMat::identity(3), x)) > kRankTol)
            throw std::runtime_error("relative_commutant: element escapes the C ox M3 embedding");
        out.basis.push_back(std::move(x));
    }
    if (out.dim() != 3)
        throw std::runtime_error("relative_commutant: dimension is not 3");
    out.contains_identity = span_contains(out, CMat::identity(3));
    return out;
}

namespace detail {
/// Residual of Ad_g(Δ₃⊗M₃^{(k)}) against Δ₃⊗M₃^{(k)} inside M_{3^{k+1}}:
/// the largest off-block HS mass over the conjugated matrix units. Ad_g is a
/// HS isometry and the spans have equal dimension, so a one-sided residual
/// decides span equality.
inline double block_span_residual(const CMat& g, std::size_t block) {
    const std::size_t d = g.rows();
    double worst = 0.0;
    for (std::size_t pcol = 0; pcol < d; ++pcol) {
        for (std::size_t qcol = 0; qcol < d; ++qcol) {
            if (pcol / block != qcol / block) continue;  // unit E_pq with p,q in one block
            double off = 0.0;
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c)
                    if (r / block != c / block)
                        off += std::norm(g(r, pcol)) * std::norm(g(c, qcol));
            worst = std::max(worst, off);
        }
    }
    return std::sqrt(worst);
}
}  // namespace detail

struct ConjugacyWitness {
    CMat w;  // D₁·D₂†, diagonal unitary
    double span_residual_k1 = 0.0;
    double span_residual_k2 = 0.0;
    double commutant_residual = 0.0;  // w against the computed relative commutant
};

/// w = D₁D₂† conjugates the v-tower onto the u-tower: Ad_w(B^v_{2k}) = B^u_{2k}
/// for k = 1, 2 (checked as span residuals), and w lies in the relative
/// commutant of the intersection.
inline ConjugacyWitness conjugacy_witness(const PhasePair& p) {
    const UVPair uv = build_uv(p);
    if (!uv.distinct) throw std::invalid_argument("conjugacy_witness: pair is degenerate");
    ConjugacyWitness out;
    out.w = phase_matrix_u(p) * dagger(phase_matrix_v(p));
    for (int k = 1; k <= 2; ++k) {
        const CMat u2k = tower_unitary(uv.u, 2 * k).mat;
        const CMat v2k = tower_unitary(uv.v, 2 * k).mat;
        const std::size_t blk = pow_sz(3, k);
        const CMat wk = kron(CMat::identity(blk), out.w);  // M₃ sits in the last slot
        // Ad_w(B^v) = B^u  ⟺  g = u_{2k}†·(I⊗w)·v_{2k} normalizes Δ₃⊗M₃^{(k)}
        const CMat g = dagger(u2k) * wk * v2k;
        const double r = detail::block_span_residual(g, blk);
        (k == 1 ? out.span_residual_k1 : out.span_residual_k2) = r;
        if (r > kRankTol) throw std::runtime_error("conjugacy_witness: span mismatch");
    }
    out.commutant_residual = span_residual(relative_commutant(p), out.w);
    if (out.commutant_residual > kRankTol)
        throw std::runtime_error("conjugacy_witness: w is not in the relative commutant");
    return out;
}

/// Constants of the expectation identities driving the S₀ computation:
/// E_{vΔ₃v†}(Ad_{D₁}σ₁) = k₂·Ad_{D₂}σ₁ with k₂ = ζ, and
/// E_{uΔ₃u†}(Ad_{D₂}σ₁) = k₃·Ad_{D₁}σ₁ with k₃ = conj(ζ).
struct ExpectationConstants {
    cplx k2, k3;
    double rank1_residual = 0.0;  // proportionality defect of both images
};

inline ExpectationConstants expectation_constants(const PhasePair& p) {
    const UVPair uv = build_uv(p);
    const CMat d1s1 = conj_by(phase_matrix_u(p), sigma1());
    const CMat d2s1 = conj_by(phase_matrix_v(p), sigma1());
    const AlgebraBasis au = conjugated(delta_algebra(3), uv.u.mat);
    const AlgebraBasis av = conjugated(delta_algebra(3), uv.v.mat);
    ExpectationConstants out;
    const CMat ev = cond_exp(av, d1s1);
    out.k2 = hs_inner(ev, d2s1);  // ntr((Ad_{D₂}σ₁)†·E_v(…)); ‖Ad_{D₂}σ₁‖ = 1
    const CMat eu = cond_exp(au, d2s1);
    out.k3 = hs_inner(eu, d1s1);
    out.rank1_residual =
        std::max(hs_norm(ev - out.k2 * d2s1), hs_norm(eu - out.k3 * d1s1));
    return out;
}

struct Verdict {
    std::string name;
    bool pass = false;
    double residual = 0.0;
};

/// One report: every closed-form invariant of the pair plus named numerical
/// verdicts for the structural identities behind them.
struct InvariantReport {
    PhasePair pair;
    bool distinct = false;
    UnitFraction pp_lambda;
    cplx zeta_value;
    double cos_interior = 0.0;
    double angle_interior = 0.0;
    double angle_sw = 0.0;
    bool sw_right_angle = false;
    double entropy_h = 0.0;
    double entropy_h_log3 = 0.0;
    std::array<double, 2> entropy_big_h_bounds{};  // [h, ln 3]; the exact value is open
    bool commuting_square = false;
    std::size_t rel_commutant_dim = 0;
    std::vector<Verdict> verdicts;

    bool all_pass() const {
        for (const Verdict& v : verdicts)
            if (!v.pass) return false;
        return true;
    }
};

/// Structural checks for one distinct pair. Each verdict is an identity that
/// holds for every distinct pair; residual is the measured defect.
inline std::vector<Verdict> pair_verdicts(const PhasePair& p) {
    std::vector<Verdict> out;
    const UVPair uv = build_uv(p);
    const cplx zv = zeta(p).value;
    const double z2 = std::norm(zv);

    for (int k = 1; k <= 2; ++k) {
        const CMat u2k = tower_unitary(uv.u, 2 * k).mat;
        const CMat v2k = tower_unitary(uv.v, 2 * k).mat;
        const CMat w = w_block(k);
        const CMat inner = kron(dagger(uv.u.mat) * uv.v.mat, CMat::identity(pow_sz(3, k)));
        const double r = max_abs(dagger(u2k) * v2k - w * inner * dagger(w));
        out.push_back({"tower_identity_k" + std::to_string(k), r <= 1e-9, r});
    }

    {
        const CMat u2 = tower_unitary(uv.u, 2).mat;
        const CMat v2 = tower_unitary(uv.v, 2).mat;
        const AlgebraBasis dm = tensor_algebra(delta_algebra(3), full_algebra(3));
        const AlgebraBasis inter = intersect(conjugated(dm, u2), conjugated(dm, v2));
        const AlgebraBasis expected = conjugated(right_factor_algebra(3, 3), u2 * w_block(1));
        double r = inter.dim() == 9 ? 0.0 : 1.0;
        for (const CMat& b : inter.basis) r = std::max(r, span_residual(expected, b));
        out.push_back({"level2_intersection", inter.dim() == 9 && r <= kRankTol, r});
    }

    {
        const VertexWitness vw = vertex_witness(p);
        out.push_back({"vertex_factorization", vw.factor_check, vw.factor_residual});
        const double r = unitary_defect(block_transpose(vw.biunitary, 3, 3));
        out.push_back({"vertex_biunitary", r <= 1e-10, r});
        out.push_back({"vertex_perm_codec", vw.perm_part == w2_codec(), 0.0});
    }

    const bool pattern = is_commuting_square_pair(p);
    {
        const CommutingCube cube = check_commuting_cube(p);
        out.push_back({"cube_adjacent_faces", cube.adjacent_faces, cube.faces_residual});
        out.push_back({"cube_slice", cube.slice, cube.slice_residual});
        out.push_back({"cube_floor_matches_pattern", cube.floor == pattern,
                       cube.floor_residual});
        out.push_back({"zeta_zero_iff_pattern",
                       pattern == (std::abs(zv) <= kEntryTol), std::abs(zv)});
    }

    {
        const AlgebraBasis rc = relative_commutant(p);
        double r = 0.0;
        for (const CMat& b : rc.basis) r = std::max(r, span_residual(delta_algebra(3), b));
        out.push_back({"relative_commutant_delta3", rc.dim() == 3 && r <= kRankTol, r});
        // circulant cross-check: u†xu has constant diagonals for x in the span
        double circ = 0.0;
        for (const CMat& b : rc.basis) {
            const CMat y = dagger(uv.u.mat) * b * uv.u.mat;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    circ = std::max(circ, std::abs(y(i, j) - y((i + 1) % 3, (j + 1) % 3)));
        }
        out.push_back({"relative_commutant_circulant", circ <= 1e-9, circ});
    }

    {
        const ConjugacyWitness cw = conjugacy_witness(p);
        out.push_back({"conjugacy_span_k1", cw.span_residual_k1 <= kRankTol, cw.span_residual_k1});
        out.push_back({"conjugacy_span_k2", cw.span_residual_k2 <= kRankTol, cw.span_residual_k2});
        out.push_back(
            {"conjugacy_in_commutant", cw.commutant_residual <= kRankTol, cw.commutant_residual});
    }

    {
        const SuperOp s0 = s0_build(p);
        const double idem = max_abs(s0.matrix * s0.matrix - z2 * s0.matrix);
        out.push_back({"s0_idempotent", idem <= 1e-9, idem});
        double spec = 0.0;
        for (double ev : eig_hermitian(s0.matrix))
            if (std::abs(ev) > 1e-8) spec = std::max(spec, std::abs(ev - z2));
        out.push_back({"s0_spectrum", spec <= 1e-8, spec});
        const ExpectationConstants ec = expectation_constants(p);
        const double kres = std::max({std::abs(ec.k2 - zv), std::abs(ec.k3 - std::conj(zv)),
                                      ec.rank1_residual});
        out.push_back({"expectation_constants_zeta", kres <= 1e-9, kres});
    }

    {
        const InteriorAngle ia = interior_angle(p);
        const double r = std::abs(ia.cos_closed - ia.cos_basis);
        out.push_back({"interior_angle_agreement", r <= 1e-9, r});
        const double rz = std::abs(ia.cos_closed - z2);
        out.push_back({"cos_interior_is_zeta_sq", rz <= 1e-10, rz});
    }

    {
        const EntropyForms ef = entropy_forms(p);
        const double r = std::abs(ef.matrix_form - ef.closed_form);
        out.push_back({"entropy_agreement", r <= 1e-9, r});
    }

    {
        const UnitFraction l = lambda_masas(dagger(uv.u.mat) * uv.v.mat);
        out.push_back({"pp_lambda_is_third", l == UnitFraction{3}, 0.0});
    }

    return out;
}

inline InvariantReport full_report(const PhasePair& p) {
    InvariantReport r;
    r.pair = p;
    const UVPair uv = build_uv(p);
    r.distinct = uv.distinct;
    if (!r.distinct) return r;

    r.pp_lambda = lambda_masas(dagger(uv.u.mat) * uv.v.mat);
    r.zeta_value = zeta(p).value;
    const InteriorAngle ia = interior_angle(p);
    r.cos_interior = ia.cos_closed;
    r.angle_interior = std::acos(std::clamp(r.cos_interior, -1.0, 1.0));
    const SwAngle sw = sw_angle(p);
    r.angle_sw = sw.angle;
    r.sw_right_angle = sw.right_angle_marker;
    r.entropy_h = entropy_h(p);
    r.entropy_h_log3 = r.entropy_h / std::log(3.0);
    r.entropy_big_h_bounds = {r.entropy_h, std::log(3.0)};
    r.commuting_square = is_commuting_square_pair(p);
    r.rel_commutant_dim = relative_commutant(p).dim();
    r.verdicts = pair_verdicts(p);
    return r;
}

}  // namespace hadsub
