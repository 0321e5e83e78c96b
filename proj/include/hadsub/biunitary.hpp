#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hadsub/cmat.hpp"
#include "hadsub/hadamard.hpp"
#include "hadsub/tower.hpp"

namespace hadsub {

// Index layout for M_n ⊗ M_k: entry u^{αa}_{βb} sits at flat row α·k+a,
// column β·k+b (0-indexed). The W₂ decode test pins this.

/// Block transpose ũ^{αa}_{βb} = u^{βa}_{αb}: transposes the arrangement of
/// the k×k blocks while leaving each block untouched.
inline CMat block_transpose(const CMat& u, std::size_t n, std::size_t k) {
    if (u.rows() != n * k || u.cols() != n * k)
        throw std::invalid_argument("block_transpose: size mismatch");
    CMat t(n * k, n * k);
    for (std::size_t alpha = 0; alpha < n; ++alpha)
        for (std::size_t beta = 0; beta < n; ++beta)
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b)
                    t(alpha * k + a, beta * k + b) = u(beta * k + a, alpha * k + b);
    return t;
}

/// u is bi-unitary when both u and its block transpose are unitary.
inline bool is_biunitary(const CMat& u, std::size_t n, std::size_t k, double tol = 1e-10) {
    if (u.rows() != n * k || u.cols() != n * k) return false;
    return is_unitary(u, tol) && is_unitary(block_transpose(u, n, k), tol);
}

/// Permutation data (ρ, λ) of a bi-unitary permutation matrix:
/// u^{ik}_{jℓ} = δ_{i,ρ_ℓ(j)}·δ_{k,λ_j(ℓ)}. Images are 1-indexed.
struct PermBiunitary {
    std::size_t n = 0;
    std::vector<std::vector<int>> rho;  // rho[l-1][j-1] = ρ_ℓ(j)
    std::vector<std::vector<int>> lam;  // lam[j-1][l-1] = λ_j(ℓ)

    friend bool operator==(const PermBiunitary&, const PermBiunitary&) = default;
};

namespace detail {
inline bool is_permutation_of_1n(const std::vector<int>& p, std::size_t n) {
    if (p.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (int v : p) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return true;
}
}  // namespace detail

inline void validate(const PermBiunitary& pb) {
    if (pb.n == 0 || pb.rho.size() != pb.n || pb.lam.size() != pb.n)
        throw std::invalid_argument("PermBiunitary: wrong tuple count");
    for (const auto& p : pb.rho)
        if (!detail::is_permutation_of_1n(p, pb.n))
            throw std::invalid_argument("PermBiunitary: rho entry is not a permutation");
    for (const auto& p : pb.lam)
        if (!detail::is_permutation_of_1n(p, pb.n))
            throw std::invalid_argument("PermBiunitary: lam entry is not a permutation");
}

/// The n²×n² 0/1 matrix of π(j,ℓ) = (ρ_ℓ(j), λ_j(ℓ)). Throws when π is not a
/// bijection of Ω_n×Ω_n.
inline CMat perm_encode(const PermBiunitary& pb) {
    validate(pb);
    const std::size_t n = pb.n;
    std::vector<bool> hit(n * n, false);
    CMat u(n * n, n * n);
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t l = 1; l <= n; ++l) {
            const int i = pb.rho[l - 1][j - 1];
            const int k = pb.lam[j - 1][l - 1];
            const std::size_t target = (i - 1) * n + (k - 1);
            if (hit[target]) throw std::invalid_argument("perm_encode: pi is not a bijection");
            hit[target] = true;
            u(target, (j - 1) * n + (l - 1)) = 1.0;
        }
    return u;
}

/// Recovers (ρ, λ) from an n²×n² permutation matrix. Throws when the input is
/// not a permutation matrix, or is one whose π is not of the product form
/// (equivalently, by the codec lemma, not bi-unitary).
inline PermBiunitary perm_decode(const CMat& u, std::size_t n) {
    const std::size_t nn = n * n;
    if (u.rows() != nn || u.cols() != nn)
        throw std::invalid_argument("perm_decode: size mismatch");
    for (const cplx& z : u.data())
        if (std::abs(z) > kEntryTol && std::abs(z - 1.0) > kEntryTol)
            throw std::invalid_argument("perm_decode: not a 0/1 matrix");

    // One 1 per column gives pi; one per row makes it injective.
    std::vector<std::size_t> pi(nn);
    std::vector<bool> row_used(nn, false);
    for (std::size_t col = 0; col < nn; ++col) {
        std::size_t found = nn;
        for (std::size_t row = 0; row < nn; ++row)
            if (std::abs(u(row, col) - 1.0) <= kEntryTol) {
                if (found != nn)
                    throw std::invalid_argument("perm_decode: not a permutation matrix");
                found = row;
            }
        if (found == nn || row_used[found])
            throw std::invalid_argument("perm_decode: not a permutation matrix");
        row_used[found] = true;
        pi[col] = found;
    }

    PermBiunitary pb;
    pb.n = n;
    pb.rho.assign(n, std::vector<int>(n, 0));
    pb.lam.assign(n, std::vector<int>(n, 0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) {
            const std::size_t target = pi[j * n + l];
            pb.rho[l][j] = static_cast<int>(target / n) + 1;  // i = ρ_ℓ(j)
            pb.lam[j][l] = static_cast<int>(target % n) + 1;  // k = λ_j(ℓ)
        }
    for (const auto& p : pb.rho)
        if (!detail::is_permutation_of_1n(p, n))
            throw std::invalid_argument("perm_decode: permutation matrix is not of product form");
    for (const auto& p : pb.lam)
        if (!detail::is_permutation_of_1n(p, n))
            throw std::invalid_argument("perm_decode: permutation matrix is not of product form");
    return pb;
}

/// The codec of W₂: ρ = (id,id,id), λ = (id, (123), (132)).
inline PermBiunitary w2_codec() {
    PermBiunitary pb;
    pb.n = 3;
    pb.rho = {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}};
    pb.lam = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    return pb;
}

struct VertexWitness {
    CMat biunitary;          // u₂W₂V₂
    bool factor_check = false;  // u₂W₂V₂ = (F₃† ⊗ u)·W₂
    double factor_residual = 0.0;
    PermBiunitary perm_part;  // W₂'s codec: the permutation representative
};

/// Builds the vertex-model bi-unitary u₂W₂V₂ for a distinct pair and verifies
/// its factorization through the permutation bi-unitary W₂. Both facts hold
/// for every distinct pair; a large residual means the build is broken.
inline VertexWitness vertex_witness(const PhasePair& p) {
    const UVPair uv = build_uv(p);
    if (!uv.distinct) throw std::invalid_argument("vertex_witness: pair is degenerate (u ~ v)");
    const CMat u2 = tower_unitary(uv.u, 2).mat;
    const CMat w2 = w_block(1);
    const CMat b = u2 * w2 * flip(3);
    if (!is_biunitary(b, 3, 3))
        throw std::runtime_error("vertex_witness: u2·W2·V2 failed the bi-unitarity check");
    const CMat factored = kron(dagger(fourier(3).mat), uv.u.mat) * w2;
    VertexWitness out;
    out.factor_residual = max_abs(b - factored);
    out.factor_check = out.factor_residual <= 1e-10;
    if (out.factor_residual > 1e-6)
        throw std::runtime_error("vertex_witness: factorization through W2 failed");
    out.biunitary = b;
    out.perm_part = perm_decode(w2, 3);
    return out;
}

struct Depth2Report {
    std::size_t upper = 0;                       // even vertices
    std::size_t lower = 0;                       // odd vertices
    std::vector<std::pair<int, int>> edges;      // 1-indexed (upper, lower)
    int depth = 0;
};

/// Principal-graph data for the W₂ codec only: the complete bipartite graph
/// K₃,₃ at depth 2. Edge count 9 matches the index of the intersection
/// subfactor. Other codecs are out of scope here.
inline Depth2Report depth2_report(const PermBiunitary& pb) {
    if (!(pb == w2_codec()))
        throw std::invalid_argument("depth2_report: only the W2 codec is supported");
    Depth2Report r;
    r.upper = 3;
    r.lower = 3;
    r.depth = 2;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) r.edges.emplace_back(i, j);
    return r;
}

}  // namespace hadsub
