#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hadsub {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major storage. This is the carrier for every
/// concrete object in the library: Hadamard matrices, tower unitaries,
/// permutation matrices, superoperator matrices.
class CMat {
public:
    CMat() = default;
    CMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CMat zero(std::size_t rows, std::size_t cols) { return CMat(rows, cols); }

    static CMat identity(std::size_t n) {
        CMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    /// Matrix unit E_ij (0-indexed).
    static CMat unit(std::size_t n, std::size_t i, std::size_t j) {
        CMat m(n, n);
        m(i, j) = 1.0;
        return m;
    }

    static CMat diagonal(const std::vector<cplx>& d) {
        CMat m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    CMat& operator+=(const CMat& o) {
        require_same_shape(o, "operator+=");
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }

    CMat& operator-=(const CMat& o) {
        require_same_shape(o, "operator-=");
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }

    CMat& operator*=(cplx s) {
        for (auto& z : a_) z *= s;
        return *this;
    }

private:
    void require_same_shape(const CMat& o, const char* who) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string(who) + ": shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> a_;
};

inline CMat operator+(CMat a, const CMat& b) { return a += b; }
inline CMat operator-(CMat a, const CMat& b) { return a -= b; }
inline CMat operator*(cplx s, CMat a) { return a *= s; }
inline CMat operator*(CMat a, cplx s) { return a *= s; }

inline CMat operator*(const CMat& a, const CMat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("operator*: inner dimension mismatch");
    CMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

/// Conjugate transpose.
inline CMat dagger(const CMat& a) {
    CMat c(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = std::conj(a(i, j));
    return c;
}

/// Kronecker product; block (i,j) of the result is a(i,j)·b.
inline CMat kron(const CMat& a, const CMat& b) {
    CMat c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == 0.0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

/// Normalized trace (1/d)·Σ a_ii.
inline cplx ntr(const CMat& a) {
    if (!a.square()) throw std::invalid_argument("ntr: matrix must be square");
    cplx t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t / static_cast<double>(a.rows());
}

inline double max_abs(const CMat& a) {
    double m = 0.0;
    for (const cplx& z : a.data()) m = std::max(m, std::abs(z));
    return m;
}

/// Hilbert–Schmidt inner product ⟨x,y⟩ = ntr(y†x).
inline cplx hs_inner(const CMat& x, const CMat& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("hs_inner: shape mismatch");
    cplx s = 0.0;
    for (std::size_t k = 0; k < x.data().size(); ++k) s += std::conj(y.data()[k]) * x.data()[k];
    return s / static_cast<double>(x.rows());
}

/// Norm induced by the normalized trace: ‖I_d‖ = 1.
inline double hs_norm(const CMat& x) {
    double s = 0.0;
    for (const cplx& z : x.data()) s += std::norm(z);
    return std::sqrt(s / static_cast<double>(x.rows()));
}

inline double unitary_defect(const CMat& u) {
    if (!u.square()) return 1.0;
    return max_abs(dagger(u) * u - CMat::identity(u.rows()));
}

inline bool is_unitary(const CMat& u, double tol = 1e-10) {
    return u.square() && unitary_defect(u) <= tol;
}

/// Ad_u(x) = u x u†.
inline CMat conj_by(const CMat& u, const CMat& x) { return u * x * dagger(u); }

struct HermitianEig {
    std::vector<double> values;  // ascending
    CMat vectors;                // columns, orthonormal, aligned with values
};

/// Cyclic complex Jacobi for Hermitian matrices (sizes here are ≤ 243).
/// Rejects input with ‖A − A†‖_max > 1e−8.
inline HermitianEig eig_hermitian_full(const CMat& input) {
    if (!input.square()) throw std::invalid_argument("eig_hermitian: matrix must be square");
    const std::size_t n = input.rows();
    double defect = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            defect = std::max(defect, std::abs(input(i, j) - std::conj(input(j, i))));
    if (defect > 1e-8) throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");

    CMat a = 0.5 * (input + dagger(input));
    CMat v = CMat::identity(n);
    double fro = 0.0;
    for (const cplx& z : a.data()) fro += std::norm(z);
    fro = std::sqrt(fro);
    const double tol = 1e-14 * (fro + 1e-300);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(2.0 * off) <= tol) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= 1e-300) continue;
                const cplx phase = apq / r;  // a_pq = r·phase
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // G = D·R with D = diag(1, conj(phase)) on the (p,q) plane:
                // G(p,p)=c, G(p,q)=s, G(q,p)=−s·conj(phase), G(q,q)=c·conj(phase)
                const cplx gqp = -s * std::conj(phase);
                const cplx gqq = c * std::conj(phase);
                for (std::size_t i = 0; i < n; ++i) {  // A ← A·G
                    const cplx x = a(i, p), y = a(i, q);
                    a(i, p) = x * c + y * gqp;
                    a(i, q) = x * s + y * gqq;
                }
                for (std::size_t j = 0; j < n; ++j) {  // A ← G†·A
                    const cplx x = a(p, j), y = a(q, j);
                    a(p, j) = c * x + std::conj(gqp) * y;
                    a(q, j) = s * x + std::conj(gqq) * y;
                }
                for (std::size_t i = 0; i < n; ++i) {  // V ← V·G
                    const cplx x = v(i, p), y = v(i, q);
                    v(i, p) = x * c + y * gqp;
                    v(i, q) = x * s + y * gqq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
        if (sweep == 99) throw std::runtime_error("eig_hermitian: Jacobi did not converge");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    HermitianEig out;
    out.values.resize(n);
    out.vectors = CMat(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

inline std::vector<double> eig_hermitian(const CMat& a) { return eig_hermitian_full(a).values; }

}  // namespace hadsub
