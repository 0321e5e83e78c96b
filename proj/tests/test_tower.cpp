#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace hadsub;
using hadsub::testing::rand_cmat;

TEST_CASE("d_matrix has unimodular diagonal and the expected slot values") {
    PairSampler sampler(41);
    const UVPair uv = build_uv(sampler.distinct_pair());
    const CMat du = d_matrix(uv.u);
    for (std::size_t i = 0; i < 9; ++i) {
        REQUIRE(std::abs(std::abs(du(i, i)) - 1.0) < 1e-12);
        for (std::size_t j = 0; j < 9; ++j)
            if (i != j) REQUIRE(du(i, j) == cplx{});
    }
    // slot (1,1) of D_{F3} is sqrt(3) * conj(omega/sqrt(3)) = e^{+2 pi i/3}
    const CMat df = d_matrix(fourier(3));
    REQUIRE(std::abs(df(4, 4) - std::conj(omega3())) < 1e-15);
}

TEST_CASE("D_u(u ox I3) equals D_F3(F3 ox I3) for u = D1 F3") {
    PairSampler sampler(42);
    for (int trial = 0; trial < 10; ++trial) {
        const UVPair uv = build_uv(sampler.distinct_pair());
        const CMat i3 = CMat::identity(3);
        const CMat lhs = d_matrix(uv.u) * kron(uv.u.mat, i3);
        const CMat rhs = d_matrix(fourier(3)) * kron(fourier(3).mat, i3);
        REQUIRE(max_abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("tower unitaries are unitary up to level 7") {
    PairSampler sampler(43);
    const UVPair uv = build_uv(sampler.distinct_pair());
    for (int m = 1; m <= 7; ++m) {
        const TowerUnitary t = tower_unitary(uv.u, m);
        REQUIRE(t.mat.rows() == pow_sz(3, (m + 1) / 2 + 1));
        REQUIRE(unitary_defect(t.mat) < 1e-10);
    }
    REQUIRE_THROWS_AS(tower_unitary(uv.u, 8), std::invalid_argument);
    REQUIRE_THROWS_AS(tower_unitary(uv.u, 0), std::invalid_argument);
}

TEST_CASE("u2 expands as (I3 ox u) D_u (u ox I3)") {
    PairSampler sampler(44);
    const UVPair uv = build_uv(sampler.distinct_pair());
    const CMat i3 = CMat::identity(3);
    const CMat expected = kron(i3, uv.u.mat) * d_matrix(uv.u) * kron(uv.u.mat, i3);
    REQUIRE(max_abs(tower_unitary(uv.u, 2).mat - expected) < 1e-12);
}

TEST_CASE("u_{2k} factors through the Fourier tower with the phase in the last slot") {
    PairSampler sampler(45);
    const PhasePair p = sampler.distinct_pair();
    const UVPair uv = build_uv(p);
    const CMat d1 = phase_matrix_u(p);
    for (int k = 1; k <= 2; ++k) {
        const CMat u2k = tower_unitary(uv.u, 2 * k).mat;
        const CMat f2k = tower_unitary(fourier(3), 2 * k).mat;
        REQUIRE(max_abs(u2k - kron(CMat::identity(pow_sz(3, k)), d1) * f2k) < 1e-12);
    }
}

TEST_CASE("basis step: u2^dag v2 = W2 (u^dag v ox I3) W2^dag") {
    PairSampler sampler(46);
    for (int trial = 0; trial < 10; ++trial) {
        const UVPair uv = build_uv(sampler.distinct_pair());
        const CMat u2 = tower_unitary(uv.u, 2).mat;
        const CMat v2 = tower_unitary(uv.v, 2).mat;
        const CMat w2 = w_block(1);
        const CMat inner = kron(dagger(uv.u.mat) * uv.v.mat, CMat::identity(3));
        REQUIRE(max_abs(dagger(u2) * v2 - w2 * inner * dagger(w2)) < 1e-10);
    }
}

TEST_CASE("the opposite embedding convention breaks the basis step") {
    // regression guard for the x -> I ox x embedding: placing u^dag v in the
    // second tensor slot must NOT satisfy the W2 identity
    PairSampler sampler(47);
    const UVPair uv = build_uv(sampler.distinct_pair());
    const CMat i3 = CMat::identity(3);
    const CMat u2 = tower_unitary(uv.u, 2).mat;
    const CMat v2 = tower_unitary(uv.v, 2).mat;
    const CMat w2 = w_block(1);
    const CMat wrong_slot = kron(i3, dagger(uv.u.mat) * uv.v.mat);
    REQUIRE(max_abs(dagger(u2) * v2 - w2 * wrong_slot * dagger(w2)) > 1e-3);

    // and A0 = M3 really embeds as C ox M3: the left-slot embedding of the
    // conjugated Masa is not even contained in it
    const AlgebraBasis q9 = right_factor_algebra(3, 3);
    const CMat wrong_embed = kron(conj_by(uv.u.mat, std::sqrt(3.0) * CMat::unit(3, 0, 0)), i3);
    REQUIRE(span_residual(q9, wrong_embed) > 1e-3);
    const CMat right_embed = kron(i3, conj_by(uv.u.mat, std::sqrt(3.0) * CMat::unit(3, 0, 0)));
    REQUIRE(span_residual(q9, right_embed) < 1e-12);
}

TEST_CASE("flipping the omega convention breaks the sigma identities") {
    const CMat f3 = fourier(3).mat;
    REQUIRE(max_abs(dagger(script_d(2)) * f3 - f3 * sigma1()) > 0.1);  // conj(D2) = D3
}

TEST_CASE("W blocks are permutation matrices") {
    for (int k = 1; k <= 3; ++k) {
        const CMat w = w_block(k);
        REQUIRE(w.rows() == pow_sz(3, k + 1));
        REQUIRE(unitary_defect(w) < 1e-12);
        for (std::size_t i = 0; i < w.rows(); ++i) {
            int ones = 0;
            for (std::size_t j = 0; j < w.cols(); ++j) {
                const double a = std::abs(w(i, j));
                REQUIRE((a < 1e-12 || std::abs(a - 1.0) < 1e-12));
                if (a > 0.5) ++ones;
            }
            REQUIRE(ones == 1);
        }
    }
    REQUIRE_THROWS_AS(w_block(4), std::invalid_argument);
}

TEST_CASE("W4 is the ordered product (I3 ox W2)(W2 ox I3)") {
    const CMat w2 = w_block(1);
    const CMat expected = kron(CMat::identity(3), w2) * kron(w2, CMat::identity(3));
    REQUIRE(max_abs(w_block(2) - expected) == 0.0);
}

TEST_CASE("flip operator") {
    for (std::size_t n : {2u, 3u}) {
        const CMat v = flip(n);
        REQUIRE(max_abs(v * v - CMat::identity(n * n)) == 0.0);
    }
    std::mt19937_64 rng(48);
    const CMat v3 = flip(3);
    for (int trial = 0; trial < 10; ++trial) {
        const CMat a = rand_cmat(rng, 3, 3), b = rand_cmat(rng, 3, 3);
        REQUIRE(max_abs(v3 * kron(a, b) * v3 - kron(b, a)) < 1e-12);
    }
}

TEST_CASE("flip swaps the tensor factors of the conjugated algebra") {
    PairSampler sampler(49);
    const UVPair uv = build_uv(sampler.distinct_pair());
    const CMat u2w2 = tower_unitary(uv.u, 2).mat * w_block(1);
    const AlgebraBasis lhs = conjugated(left_factor_algebra(3, 3), u2w2 * flip(3));
    const AlgebraBasis rhs = conjugated(right_factor_algebra(3, 3), u2w2);
    REQUIRE(lhs.dim() == 9);
    REQUIRE(spans_equal(lhs, rhs));
}

TEST_CASE("q_split supports and exact sum") {
    const CMat d = CMat::diagonal({1.0, 2.0, 3.0});
    const QSplit qd = q_split(d);
    REQUIRE(max_abs(qd.q0 - d) == 0.0);
    REQUIRE(max_abs(qd.q1) == 0.0);
    REQUIRE(max_abs(qd.q2) == 0.0);

    const QSplit q12 = q_split(CMat::unit(3, 0, 1));
    REQUIRE(max_abs(q12.q1 - CMat::unit(3, 0, 1)) == 0.0);
    REQUIRE(max_abs(q12.q0) == 0.0);
    REQUIRE(max_abs(q12.q2) == 0.0);

    const QSplit q21 = q_split(CMat::unit(3, 1, 0));
    REQUIRE(max_abs(q21.q2 - CMat::unit(3, 1, 0)) == 0.0);

    std::mt19937_64 rng(50);
    for (int trial = 0; trial < 10; ++trial) {
        const CMat x = rand_cmat(rng, 3, 3);
        const QSplit q = q_split(x);
        REQUIRE(max_abs(q.q0 + q.q1 + q.q2 - x) == 0.0);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                int nonzero = 0;
                if (q.q0(i, j) != cplx{}) ++nonzero;
                if (q.q1(i, j) != cplx{}) ++nonzero;
                if (q.q2(i, j) != cplx{}) ++nonzero;
                REQUIRE(nonzero <= 1);  // disjoint supports
            }
    }
    REQUIRE_THROWS_AS(q_split(CMat::identity(2)), std::invalid_argument);
}

TEST_CASE("circulant conjugation block structure") {
    REQUIRE(max_abs(circulant_conjugation(CMat::identity(3)) - CMat::identity(9)) < 1e-12);

    PairSampler sampler(51);
    const UVPair uv = build_uv(sampler.distinct_pair());
    const CMat x = dagger(uv.u.mat) * uv.v.mat;
    const CMat c = circulant_conjugation(x);
    const QSplit q = q_split(x);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            REQUIRE(std::abs(c(i, j) - q.q0(i, j)) < 1e-10);          // block (0,0) = Q0
            REQUIRE(std::abs(c(i, 3 + j) - q.q1(i, j)) < 1e-10);      // block (0,1) = Q1
            REQUIRE(std::abs(c(3 + i, j) - q.q2(i, j)) < 1e-10);      // block (1,0) = Q2
        }

    const CMat cs = circulant_conjugation(sigma1());
    const QSplit qs = q_split(sigma1());
    REQUIRE(max_abs(qs.q2 - sigma1()) == 0.0);  // sigma1 is pure Q2 type
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            REQUIRE(std::abs(cs(i, 6 + j) - sigma1()(i, j)) < 1e-10);      // block (1,3)
            REQUIRE(std::abs(cs(3 + i, j) - sigma1()(i, j)) < 1e-10);      // block (2,1)
            REQUIRE(std::abs(cs(6 + i, 3 + j) - sigma1()(i, j)) < 1e-10);  // block (3,2)
        }
}

TEST_CASE("script D identities with the Fourier matrix") {
    const CMat f3 = fourier(3).mat;
    REQUIRE(max_abs(script_d(2) * f3 - f3 * sigma1()) < 1e-12);
    REQUIRE(max_abs(script_d(3) * f3 - f3 * sigma2()) < 1e-12);
    REQUIRE(max_abs(gamma1() * f3 - f3 * gamma1()) < 1e-12);
    // gamma2 F3 = F3 diag(1, omega, omega^2); the conjugate diagonal fails
    REQUIRE(max_abs(gamma2() * f3 - f3 * script_d(2)) < 1e-12);
    REQUIRE(max_abs(gamma2() * f3 - f3 * script_d(3)) > 0.1);
}

TEST_CASE("verify_tower_identity") {
    REQUIRE(verify_tower_identity(PhasePair(M_PI, M_PI, 0, 0), 1));
    REQUIRE(verify_tower_identity(PhasePair(0, 0, 0, 0), 1));  // u = v degenerate case still holds
    PairSampler sampler(52);
    REQUIRE(verify_tower_identity(sampler.distinct_pair(), 2));
    REQUIRE_THROWS_AS(verify_tower_identity(PhasePair(0, 0, 0, 0), 4), std::invalid_argument);
}
