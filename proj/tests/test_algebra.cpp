#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace hadsub;
using hadsub::testing::rand_cmat;
using hadsub::testing::rand_unitary;

namespace {

void check_algebra_invariants(const AlgebraBasis& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const cplx ip = hs_inner(a.basis[i], a.basis[j]);
            REQUIRE(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-9);
        }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        REQUIRE(span_residual(a, dagger(a.basis[i])) < 1e-8);
        for (std::size_t j = 0; j < a.dim(); ++j)
            REQUIRE(span_residual(a, a.basis[i] * a.basis[j]) < 1e-8);
    }
    if (a.contains_identity)
        REQUIRE(span_residual(a, CMat::identity(a.ambient_dim)) < 1e-9);
}

}  // namespace

TEST_CASE("closure of the diagonal units is the diagonal Masa") {
    const AlgebraBasis a = algebra_closure(
        {CMat::unit(3, 0, 0), CMat::unit(3, 1, 1), CMat::unit(3, 2, 2)}, 3);
    REQUIRE(a.dim() == 3);
    check_algebra_invariants(a);
    REQUIRE(spans_equal(a, delta_algebra(3)));
}

TEST_CASE("closure of a single rank-one projection is span{I, p}") {
    const CMat f3 = fourier(3).mat;
    const CMat p = conj_by(f3, CMat::unit(3, 0, 0));
    const AlgebraBasis a = algebra_closure({p}, 3);
    REQUIRE(a.dim() == 2);  // powers of a projection add nothing
    check_algebra_invariants(a);
    REQUIRE(span_contains(a, p));
    REQUIRE(span_contains(a, CMat::identity(3)));
}

TEST_CASE("closure of all three Fourier-rotated diagonal units has dimension 3") {
    const CMat f3 = fourier(3).mat;
    std::vector<CMat> gens;
    for (std::size_t i = 0; i < 3; ++i) gens.push_back(conj_by(f3, CMat::unit(3, i, i)));
    const AlgebraBasis a = algebra_closure(gens, 3);
    REQUIRE(a.dim() == 3);
    REQUIRE(spans_equal(a, conjugated(delta_algebra(3), f3)));
}

TEST_CASE("closure of a 3-cycle is the circulant algebra") {
    const AlgebraBasis a = algebra_closure({sigma1()}, 3);
    REQUIRE(a.dim() == 3);  // sigma1 has three distinct eigenvalues
    check_algebra_invariants(a);
    REQUIRE(span_contains(a, sigma1() * sigma1()));
}

TEST_CASE("commutant of the full algebra is the scalars") {
    const AlgebraBasis c = commutant(full_algebra(3));
    REQUIRE(c.dim() == 1);
    REQUIRE(span_contains(c, CMat::identity(3)));
}

TEST_CASE("the diagonal Masa is its own commutant") {
    const AlgebraBasis c = commutant(delta_algebra(3));
    REQUIRE(c.dim() == 3);
    REQUIRE(spans_equal(c, delta_algebra(3)));
}

TEST_CASE("commutant of C ox M3 in M9 is M3 ox C") {
    const AlgebraBasis c = commutant(right_factor_algebra(3, 3));
    REQUIRE(c.dim() == 9);
    REQUIRE(spans_equal(c, left_factor_algebra(3, 3)));
    // brute-force: every commutant element commutes with every generator
    for (const CMat& x : c.basis)
        for (const CMat& b : right_factor_algebra(3, 3).basis)
            REQUIRE(max_abs(x * b - b * x) < 1e-9);
}

TEST_CASE("bicommutant returns the algebra span") {
    std::mt19937_64 rng(21);
    std::vector<AlgebraBasis> cases = {delta_algebra(3), right_factor_algebra(3, 3),
                                       algebra_closure({sigma1()}, 3)};
    for (int trial = 0; trial < 5; ++trial)
        cases.push_back(conjugated(delta_algebra(3), rand_unitary(rng, 3)));
    for (const AlgebraBasis& a : cases) {
        const AlgebraBasis cc = commutant(commutant(a));
        REQUIRE(cc.dim() == a.dim());
        REQUIRE(spans_equal(cc, a));
    }
}

TEST_CASE("intersect basics") {
    const AlgebraBasis d3 = delta_algebra(3);
    const AlgebraBasis self = intersect(d3, d3);
    REQUIRE(self.dim() == 3);
    REQUIRE(spans_equal(self, d3));

    const AlgebraBasis mub = intersect(d3, conjugated(d3, fourier(3).mat));
    REQUIRE(mub.dim() == 1);
    REQUIRE(span_contains(mub, CMat::identity(3)));

    const AlgebraBasis perm = intersect(d3, conjugated(d3, sigma1()));
    REQUIRE(perm.dim() == 3);
    REQUIRE(spans_equal(perm, d3));

    REQUIRE_THROWS_AS(intersect(d3, delta_algebra(4)), std::invalid_argument);
}

TEST_CASE("intersection dimension never exceeds either factor") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        const AlgebraBasis a = conjugated(delta_algebra(3), rand_unitary(rng, 3));
        const AlgebraBasis b = conjugated(delta_algebra(3), rand_unitary(rng, 3));
        const AlgebraBasis i = intersect(a, b);
        REQUIRE(i.dim() <= std::min(a.dim(), b.dim()));
    }
}

TEST_CASE("conditional expectation onto the diagonal") {
    const AlgebraBasis d3 = delta_algebra(3);
    REQUIRE(max_abs(cond_exp(d3, CMat::unit(3, 0, 1))) == 0.0);
    const CMat d = CMat::diagonal({1.0, cplx(0, 2), -3.0});
    REQUIRE(max_abs(cond_exp(d3, d) - d) < 1e-12);
}

TEST_CASE("conditional expectation onto Ad_u(Delta3) matches the closed form") {
    std::mt19937_64 rng(23);
    const CMat u = phase_matrix_u(PhasePair(0.7, 2.9, 0, 0)) * fourier(3).mat;
    const AlgebraBasis au = conjugated(delta_algebra(3), u);
    for (int trial = 0; trial < 50; ++trial) {
        const CMat x = rand_cmat(rng, 3, 3);
        CMat inner = dagger(u) * x * u;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (i != j) inner(i, j) = 0.0;
        REQUIRE(max_abs(cond_exp(au, x) - u * inner * dagger(u)) < 1e-10);
    }
}

TEST_CASE("conditional expectation laws") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 30; ++trial) {
        const AlgebraBasis a = conjugated(delta_algebra(3), rand_unitary(rng, 3));
        const CMat x = rand_cmat(rng, 3, 3);
        const CMat y = rand_cmat(rng, 3, 3);
        const CMat ex = cond_exp(a, x);
        REQUIRE(max_abs(cond_exp(a, ex) - ex) < 1e-9);                       // idempotent
        REQUIRE(std::abs(ntr(ex) - ntr(x)) < 1e-9);                          // trace-preserving
        REQUIRE(max_abs(cond_exp(a, CMat::identity(3)) - CMat::identity(3)) < 1e-9);  // unital
        REQUIRE(std::abs(hs_inner(ex, y) - hs_inner(x, cond_exp(a, y))) < 1e-9);      // self-adjoint
        for (const CMat& b1 : a.basis)
            for (const CMat& b2 : a.basis)
                REQUIRE(max_abs(cond_exp(a, b1 * x * b2) - b1 * ex * b2) < 1e-9);  // bimodule
        const auto ev = eig_hermitian(cond_exp(a, dagger(x) * x));
        REQUIRE(ev.front() > -1e-9);  // positivity
    }
}

TEST_CASE("conditional expectation requires a unital algebra") {
    AlgebraBasis no_identity;
    no_identity.ambient_dim = 3;
    no_identity.contains_identity = false;
    no_identity.basis.push_back(std::sqrt(3.0) * CMat::unit(3, 0, 0));
    REQUIRE_THROWS_AS(cond_exp(no_identity, CMat::identity(3)), std::invalid_argument);
    REQUIRE_THROWS_AS(superop_of_cond_exp(no_identity), std::invalid_argument);
}

TEST_CASE("vec follows the column-stacking convention vec(AXB) = (B^T ox A) vec(X)") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 20; ++trial) {
        const CMat a = rand_cmat(rng, 3, 3), x = rand_cmat(rng, 3, 3), b = rand_cmat(rng, 3, 3);
        CMat bt(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) bt(i, j) = b(j, i);
        const std::vector<cplx> lhs = vec(a * x * b);
        const std::vector<cplx> vx = vec(x);
        const CMat op = kron(bt, a);
        for (std::size_t i = 0; i < 9; ++i) {
            cplx s = 0.0;
            for (std::size_t j = 0; j < 9; ++j) s += op(i, j) * vx[j];
            REQUIRE(std::abs(s - lhs[i]) < 1e-10);
        }
    }
}

TEST_CASE("superoperator of a conditional expectation is a projection of rank dim A") {
    const SuperOp full = superop_of_cond_exp(full_algebra(3));
    REQUIRE(max_abs(full.matrix - CMat::identity(9)) < 1e-12);

    const SuperOp sd = superop_of_cond_exp(delta_algebra(3));
    REQUIRE(max_abs(sd.matrix * sd.matrix - sd.matrix) < 1e-10);
    cplx tr = 0.0;
    for (std::size_t i = 0; i < 9; ++i) tr += sd.matrix(i, i);
    REQUIRE(std::abs(tr - 3.0) < 1e-10);  // rank = dim Delta3

    std::mt19937_64 rng(26);
    const AlgebraBasis au = conjugated(delta_algebra(3), rand_unitary(rng, 3));
    const SuperOp su = superop_of_cond_exp(au);
    REQUIRE(max_abs(su.matrix * su.matrix - su.matrix) < 1e-10);
    REQUIRE(max_abs(su.matrix - dagger(su.matrix)) < 1e-10);

    // SuperOp::apply agrees with cond_exp
    for (int trial = 0; trial < 10; ++trial) {
        const CMat x = rand_cmat(rng, 3, 3);
        REQUIRE(max_abs(su.apply(x) - cond_exp(au, x)) < 1e-10);
    }
}
