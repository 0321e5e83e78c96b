#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hadsub/cmat.hpp"

namespace hadsub {

/// Rank decisions (closure, commutant, intersection, span tests) use this
/// absolute pivot threshold after normalizing to unit HS norm. Every instance
/// that arises here has spectral gaps many orders above it.
inline constexpr double kRankTol = 1e-8;

/// Trace-orthonormal basis of a unital *-subalgebra of M_d. The basis is
/// orthonormal under ⟨x,y⟩ = ntr(y†x); the span is closed under adjoints and
/// products (the basis elements themselves need not be).
struct AlgebraBasis {
    std::size_t ambient_dim = 0;
    std::vector<CMat> basis;
    bool contains_identity = false;

    std::size_t dim() const { return basis.size(); }
};

/// Two-pass modified Gram–Schmidt append. Returns false when the candidate
/// lies in the current span (residual ≤ tol after normalization).
inline bool orthonormal_append(std::vector<CMat>& basis, CMat x, double tol = kRankTol) {
    const double nx = hs_norm(x);
    if (nx <= tol) return false;
    x *= 1.0 / nx;
    for (int pass = 0; pass < 2; ++pass)
        for (const CMat& b : basis) x -= hs_inner(x, b) * b;
    const double r = hs_norm(x);
    if (r <= tol) return false;
    x *= 1.0 / r;
    basis.push_back(std::move(x));
    return true;
}

/// Residual of x against the span, after normalizing x to unit HS norm.
inline double span_residual(const AlgebraBasis& a, const CMat& x) {
    const double nx = hs_norm(x);
    if (nx == 0.0) return 0.0;
    CMat r = (1.0 / nx) * x;
    for (const CMat& b : a.basis) r -= hs_inner(r, b) * b;
    return hs_norm(r);
}

inline bool span_contains(const AlgebraBasis& a, const CMat& x, double tol = kRankTol) {
    return span_residual(a, x) <= tol;
}

inline bool spans_equal(const AlgebraBasis& a, const AlgebraBasis& b, double tol = kRankTol) {
    if (a.dim() != b.dim() || a.ambient_dim != b.ambient_dim) return false;
    for (const CMat& x : a.basis)
        if (!span_contains(b, x, tol)) return false;
    return true;
}

/// Orthonormalize a spanning set into an AlgebraBasis (no closure performed;
/// the caller asserts the span is already an algebra).
inline AlgebraBasis span_basis(const std::vector<CMat>& spanning, std::size_t d,
                               bool contains_identity) {
    AlgebraBasis a;
    a.ambient_dim = d;
    a.contains_identity = contains_identity;
    for (const CMat& x : spanning) {
        if (x.rows() != d || x.cols() != d)
            throw std::invalid_argument("span_basis: element of wrong ambient dimension");
        orthonormal_append(a.basis, x);
    }
    return a;
}

/// Smallest unital *-subalgebra of M_d containing the generators, as a
/// trace-orthonormal basis. Terminates because the dimension is bounded by d².
inline AlgebraBasis algebra_closure(const std::vector<CMat>& generators, std::size_t d) {
    AlgebraBasis a;
    a.ambient_dim = d;
    a.contains_identity = true;
    orthonormal_append(a.basis, CMat::identity(d));
    for (const CMat& g : generators) {
        if (!g.square() || g.rows() != d)
            throw std::invalid_argument("algebra_closure: generator of wrong ambient dimension");
        orthonormal_append(a.basis, g);
        orthonormal_append(a.basis, dagger(g));
    }
    bool grew = true;
    while (grew && a.basis.size() < d * d) {
        grew = false;
        const std::size_t m = a.basis.size();
        for (std::size_t i = 0; i < m; ++i) {
            grew |= orthonormal_append(a.basis, dagger(a.basis[i]));
            for (std::size_t j = 0; j < m; ++j)
                grew |= orthonormal_append(a.basis, a.basis[i] * a.basis[j]);
        }
    }
    return a;
}

// Standard algebras, all ntr-orthonormal by construction.

/// Diagonal Masa Δ_n: basis {√n·E_ii}.
inline AlgebraBasis delta_algebra(std::size_t n) {
    AlgebraBasis a;
    a.ambient_dim = n;
    a.contains_identity = true;
    const double s = std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) a.basis.push_back(s * CMat::unit(n, i, i));
    return a;
}

/// Full matrix algebra M_n: basis {√n·E_ij}.
inline AlgebraBasis full_algebra(std::size_t n) {
    AlgebraBasis a;
    a.ambient_dim = n;
    a.contains_identity = true;
    const double s = std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.basis.push_back(s * CMat::unit(n, i, j));
    return a;
}

/// Scalars ℂ·I_d.
inline AlgebraBasis scalar_algebra(std::size_t d) {
    AlgebraBasis a;
    a.ambient_dim = d;
    a.contains_identity = true;
    a.basis.push_back(CMat::identity(d));
    return a;
}

/// M_n ⊗ ℂ inside M_{nk}.
inline AlgebraBasis left_factor_algebra(std::size_t n, std::size_t k) {
    AlgebraBasis a;
    a.ambient_dim = n * k;
    a.contains_identity = true;
    const double s = std::sqrt(static_cast<double>(n));
    const CMat ik = CMat::identity(k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.basis.push_back(kron(s * CMat::unit(n, i, j), ik));
    return a;
}

/// ℂ ⊗ M_k inside M_{nk}.
inline AlgebraBasis right_factor_algebra(std::size_t n, std::size_t k) {
    AlgebraBasis a;
    a.ambient_dim = n * k;
    a.contains_identity = true;
    const double s = std::sqrt(static_cast<double>(k));
    const CMat in = CMat::identity(n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a.basis.push_back(kron(in, s * CMat::unit(k, i, j)));
    return a;
}

/// A ⊗ B as a subalgebra of M_{dA·dB}; ntr multiplicativity keeps the basis
/// orthonormal.
inline AlgebraBasis tensor_algebra(const AlgebraBasis& a, const AlgebraBasis& b) {
    AlgebraBasis t;
    t.ambient_dim = a.ambient_dim * b.ambient_dim;
    t.contains_identity = a.contains_identity && b.contains_identity;
    for (const CMat& x : a.basis)
        for (const CMat& y : b.basis) t.basis.push_back(kron(x, y));
    return t;
}

/// Ad_u(A) for unitary u.
inline AlgebraBasis conjugated(const AlgebraBasis& a, const CMat& u) {
    if (u.rows() != a.ambient_dim)
        throw std::invalid_argument("conjugated: dimension mismatch");
    AlgebraBasis c;
    c.ambient_dim = a.ambient_dim;
    c.contains_identity = a.contains_identity;
    const CMat ud = dagger(u);
    for (const CMat& b : a.basis) c.basis.push_back(u * b * ud);
    return c;
}

// --- vectorization -----------------------------------------------------
// Column-stacking convention: vec(X)[j·d + i] = X(i,j), so that
// vec(AXB) = (Bᵀ ⊗ A)·vec(X). Fixed here once; the matrix JSON format and
// all superoperator matrices use it.

inline std::vector<cplx> vec(const CMat& x) {
    std::vector<cplx> v(x.rows() * x.cols());
    for (std::size_t j = 0; j < x.cols(); ++j)
        for (std::size_t i = 0; i < x.rows(); ++i) v[j * x.rows() + i] = x(i, j);
    return v;
}

inline CMat unvec(const std::vector<cplx>& v, std::size_t d) {
    if (v.size() != d * d) throw std::invalid_argument("unvec: length mismatch");
    CMat x(d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) x(i, j) = v[j * d + i];
    return x;
}

/// vec(b·X) = (I ⊗ b)·vec(X)
inline CMat left_mult_superop(const CMat& b) { return kron(CMat::identity(b.rows()), b); }

/// vec(X·b) = (bᵀ ⊗ I)·vec(X)
inline CMat right_mult_superop(const CMat& b) {
    CMat bt(b.cols(), b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) bt(j, i) = b(i, j);
    return kron(bt, CMat::identity(b.rows()));
}

/// A linear map on M_d stored as its d²×d² matrix in vec coordinates.
struct SuperOp {
    std::size_t dim = 0;
    CMat matrix;

    CMat apply(const CMat& x) const {
        if (x.rows() != dim || x.cols() != dim)
            throw std::invalid_argument("SuperOp::apply: dimension mismatch");
        const std::vector<cplx> vx = vec(x);
        std::vector<cplx> vy(vx.size(), cplx{});
        for (std::size_t i = 0; i < vy.size(); ++i) {
            cplx s = 0.0;
            for (std::size_t j = 0; j < vx.size(); ++j) s += matrix(i, j) * vx[j];
            vy[i] = s;
        }
        return unvec(vy, dim);
    }
};

/// Trace-preserving conditional expectation onto A: the HS-orthogonal
/// projection E(x) = Σ_i ntr(b_i†x)·b_i. Requires I ∈ A.
inline CMat cond_exp(const AlgebraBasis& a, const CMat& x) {
    if (!a.contains_identity)
        throw std::invalid_argument("cond_exp: subalgebra must contain the identity");
    if (x.rows() != a.ambient_dim || x.cols() != a.ambient_dim)
        throw std::invalid_argument("cond_exp: dimension mismatch");
    CMat e(a.ambient_dim, a.ambient_dim);
    for (const CMat& b : a.basis) e += hs_inner(x, b) * b;
    return e;
}

/// The same expectation as a d²×d² matrix: (1/d)·Σ_i vec(b_i)vec(b_i)†.
/// Hermitian and idempotent (orthogonal projection of rank dim A).
inline SuperOp superop_of_cond_exp(const AlgebraBasis& a) {
    if (!a.contains_identity)
        throw std::invalid_argument("superop_of_cond_exp: subalgebra must contain the identity");
    const std::size_t d = a.ambient_dim;
    SuperOp s{d, CMat(d * d, d * d)};
    for (const CMat& b : a.basis) {
        const std::vector<cplx> vb = vec(b);
        for (std::size_t p = 0; p < vb.size(); ++p) {
            if (vb[p] == 0.0) continue;
            const cplx w = vb[p] / static_cast<double>(d);
            for (std::size_t q = 0; q < vb.size(); ++q)
                s.matrix(p, q) += w * std::conj(vb[q]);
        }
    }
    return s;
}

/// Commutant {x : xb = bx for all b in A}, computed as the kernel of
/// Σ_i (L_i − R_i)†(L_i − R_i) over vec coordinates.
inline AlgebraBasis commutant(const AlgebraBasis& a) {
    const std::size_t d = a.ambient_dim;
    const std::size_t dd = d * d;
    CMat m(dd, dd);
    for (const CMat& b : a.basis) {
        const CMat c = left_mult_superop(b) - right_mult_superop(b);
        m += dagger(c) * c;
    }
    const HermitianEig eig = eig_hermitian_full(m);
    AlgebraBasis r;
    r.ambient_dim = d;
    r.contains_identity = true;  // the identity always commutes
    const double scale = std::sqrt(static_cast<double>(d));
    for (std::size_t k = 0; k < dd; ++k) {
        if (eig.values[k] > kRankTol) break;  // ascending; kernel first
        std::vector<cplx> col(dd);
        for (std::size_t i = 0; i < dd; ++i) col[i] = eig.vectors(i, k);
        r.basis.push_back(scale * unvec(col, d));
    }
    return r;
}

/// Subspace intersection of the two spans. With C_{ji} = ⟨a_i, b_j⟩, a
/// combination x of A's basis lies in span B iff x†(I − C†C)x = 0, so the
/// intersection is the eigenvalue-1 eigenspace of the Gram matrix C†C.
inline AlgebraBasis intersect(const AlgebraBasis& a, const AlgebraBasis& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("intersect: ambient dimension mismatch");
    const std::size_t m = a.dim(), k = b.dim();
    CMat c(k, m);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < m; ++i) c(j, i) = hs_inner(a.basis[i], b.basis[j]);
    const CMat g = dagger(c) * c;
    const HermitianEig eig = eig_hermitian_full(g);
    AlgebraBasis r;
    r.ambient_dim = a.ambient_dim;
    for (std::size_t t = 0; t < m; ++t) {
        if (eig.values[t] < 1.0 - kRankTol) continue;
        CMat x(a.ambient_dim, a.ambient_dim);
        for (std::size_t i = 0; i < m; ++i) x += eig.vectors(i, t) * a.basis[i];
        r.basis.push_back(std::move(x));
    }
    r.contains_identity = a.contains_identity && b.contains_identity;
    return r;
}

}  // namespace hadsub
