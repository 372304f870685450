#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "matnorm/errors.hpp"
#include "matnorm/rng.hpp"

namespace matnorm {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. The universal input object of the
/// library; every formula below consumes one (or several) of these.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    explicit ComplexMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
        if (n < 1) throw DimensionMismatch("matrix dimension must be >= 1");
    }

    static ComplexMatrix identity(int n) {
        ComplexMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(const std::vector<Complex>& d) {
        ComplexMatrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.n_; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
        return m;
    }

    static ComplexMatrix diagonal_real(const std::vector<double>& d) {
        ComplexMatrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.n_; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
        return m;
    }

    int dim() const { return n_; }

    Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    Complex operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    ComplexMatrix& operator+=(const ComplexMatrix& other) {
        require_same_dim(other);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& other) {
        require_same_dim(other);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
        return *this;
    }
    ComplexMatrix& operator*=(Complex t) {
        for (auto& v : a_) v *= t;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex t, ComplexMatrix a) { return a *= t; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        a.require_same_dim(b);
        const int n = a.n_;
        ComplexMatrix c(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{}) continue;
                for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix c(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) c(j, i) = std::conj((*this)(i, j));
        return c;
    }

    Complex trace() const {
        Complex t{};
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm_sq() const {
        double s = 0;
        for (const auto& v : a_) s += std::norm(v);
        return s;
    }
    double frobenius_norm() const { return std::sqrt(frobenius_norm_sq()); }

    double max_abs() const {
        double m = 0;
        for (const auto& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    bool all_finite() const {
        for (const auto& v : a_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        return true;
    }

    /// y = A x
    void apply(const Complex* x, Complex* y) const {
        for (int i = 0; i < n_; ++i) {
            Complex s{};
            const Complex* row = a_.data() + static_cast<std::size_t>(i) * n_;
            for (int j = 0; j < n_; ++j) s += row[j] * x[j];
            y[i] = s;
        }
    }

private:
    void require_same_dim(const ComplexMatrix& other) const {
        if (n_ != other.n_)
            throw DimensionMismatch("matrix dimensions differ: " + std::to_string(n_) + " vs " +
                                    std::to_string(other.n_));
    }

    int n_ = 0;
    std::vector<Complex> a_;
};

/// Real eigen/singular values, sorted descending.
struct Spectrum {
    std::vector<double> values;
};

/// <A xi, xi> with xi a unit vector; scratch must have room for dim entries.
inline Complex quadratic_form(const ComplexMatrix& a, const Complex* xi, Complex* scratch) {
    a.apply(xi, scratch);
    Complex s{};
    for (int i = 0; i < a.dim(); ++i) s += scratch[i] * std::conj(xi[i]);
    return s;
}

/// [tr(A^1), ..., tr(A^kmax)] by repeated multiplication. Works for arbitrary
/// (non-normal) A; no diagonalization involved.
inline std::vector<Complex> power_traces(const ComplexMatrix& a, int kmax) {
    if (kmax < 1) throw InvalidOrder("power_traces requires kmax >= 1");
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(kmax));
    ComplexMatrix p = a;
    out.push_back(p.trace());
    for (int m = 2; m <= kmax; ++m) {
        p = p * a;
        out.push_back(p.trace());
    }
    return out;
}

namespace detail {

inline double offdiag_frobenius(const ComplexMatrix& b) {
    double s = 0;
    const int n = b.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(b(i, j));
    return std::sqrt(s);
}

} // namespace detail

/// Eigenvalues of a Hermitian matrix, descending, by cyclic Jacobi rotations.
/// Stops when the off-diagonal Frobenius mass falls below 1e-14 of its initial
/// value; 100 sweeps at most.
inline Spectrum hermitian_eigenvalues(const ComplexMatrix& h) {
    const int n = h.dim();
    const double tau = 1e-12 * h.max_abs();
    double asym = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            asym = std::max(asym, std::abs(h(i, j) - std::conj(h(j, i))));
    if (asym > tau)
        throw NotHermitian("asymmetry " + std::to_string(asym) + " exceeds tolerance " +
                           std::to_string(tau));

    ComplexMatrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));

    const double off0 = detail::offdiag_frobenius(b);
    const double stop = 1e-14 * off0;
    if (off0 > 0) {
        // Pivots below `skip` cannot push the total mass back above `stop`.
        const double skip = stop / (2.0 * n);
        bool converged = false;
        for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    const Complex hpq = b(p, q);
                    const double r = std::abs(hpq);
                    if (r <= skip) continue;
                    const double alpha = b(p, p).real();
                    const double delta = b(q, q).real();
                    const Complex phase = hpq / r;
                    const double theta = (delta - alpha) / (2.0 * r);
                    const double t =
                        (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const Complex s = (t * c) * phase;
                    // B <- G* B G with G = I except G_pp=c, G_pq=s, G_qp=-conj(s), G_qq=c.
                    for (int i = 0; i < n; ++i) {
                        const Complex bip = b(i, p), biq = b(i, q);
                        b(i, p) = c * bip - std::conj(s) * biq;
                        b(i, q) = s * bip + c * biq;
                    }
                    for (int j = 0; j < n; ++j) {
                        const Complex bpj = b(p, j), bqj = b(q, j);
                        b(p, j) = c * bpj - s * bqj;
                        b(q, j) = std::conj(s) * bpj + c * bqj;
                    }
                    b(p, q) = 0.0;
                    b(q, p) = 0.0;
                    b(p, p) = b(p, p).real();
                    b(q, q) = b(q, q).real();
                }
            }
            converged = detail::offdiag_frobenius(b) < stop;
        }
        if (!converged) throw NoConvergence("Jacobi sweep cap reached");
    }

    Spectrum spec;
    spec.values.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) spec.values[static_cast<std::size_t>(i)] = b(i, i).real();
    std::sort(spec.values.begin(), spec.values.end(), std::greater<>());
    return spec;
}

/// Singular values of A, descending: sqrt of the spectrum of A*A. Tiny negative
/// eigenvalues (roundoff) are clamped at zero; anything more negative signals a
/// corrupted eigensolve and raises NoConvergence.
inline Spectrum singular_values(const ComplexMatrix& a) {
    const ComplexMatrix gram = a.adjoint() * a;
    Spectrum eig = hermitian_eigenvalues(gram);
    const double clamp = 1e-10 * gram.frobenius_norm();
    for (auto& v : eig.values) {
        if (v < 0) {
            if (v < -clamp)
                throw NoConvergence("negative eigenvalue of A*A beyond roundoff: " +
                                    std::to_string(v));
            v = 0;
        }
        v = std::sqrt(v);
    }
    std::sort(eig.values.begin(), eig.values.end(), std::greater<>());
    return eig;
}

/// Schatten p-norm, p >= 1.
inline double schatten_norm(const ComplexMatrix& a, double p) {
    if (p < 1) throw InvalidOrder("Schatten order must be >= 1");
    const Spectrum sv = singular_values(a);
    double s = 0;
    for (double v : sv.values) s += std::pow(v, p);
    return std::pow(s, 1.0 / p);
}

/// Haar-ish random unitary: orthonormalize a matrix of complex standard
/// Gaussians. Deterministic per seed; columns are re-orthogonalized once, which
/// keeps U*U - I below 1e-12 entrywise at desk dimensions.
inline ComplexMatrix random_unitary(int n, std::uint64_t seed) {
    if (n < 1) throw DimensionMismatch("random_unitary requires n >= 1");
    RngStream g(stream_key(seed, 0));
    std::vector<std::vector<Complex>> cols(static_cast<std::size_t>(n),
                                           std::vector<Complex>(static_cast<std::size_t>(n)));
    auto draw_column = [&](std::vector<Complex>& v) {
        for (auto& z : v) {
            auto [gr, gi] = g.next_gaussian_pair();
            z = Complex(gr, gi);
        }
    };
    auto dot = [n](const std::vector<Complex>& u, const std::vector<Complex>& v) {
        Complex s{};
        for (int i = 0; i < n; ++i) s += std::conj(u[static_cast<std::size_t>(i)]) * v[static_cast<std::size_t>(i)];
        return s;
    };
    auto norm2 = [n](const std::vector<Complex>& v) {
        double s = 0;
        for (int i = 0; i < n; ++i) s += std::norm(v[static_cast<std::size_t>(i)]);
        return std::sqrt(s);
    };
    for (int j = 0; j < n; ++j) {
        auto& v = cols[static_cast<std::size_t>(j)];
        draw_column(v);
        for (;;) {
            for (int pass = 0; pass < 2; ++pass)
                for (int i = 0; i < j; ++i) {
                    const Complex c = dot(cols[static_cast<std::size_t>(i)], v);
                    for (int r = 0; r < n; ++r)
                        v[static_cast<std::size_t>(r)] -= c * cols[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
                }
            const double nv = norm2(v);
            if (nv > 1e-8) {
                for (auto& z : v) z /= nv;
                break;
            }
            draw_column(v); // degenerate draw, retry deterministically
        }
    }
    ComplexMatrix u(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) u(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return u;
}

/// iid complex standard Gaussian entries; test-input plumbing.
inline ComplexMatrix random_gaussian_matrix(int n, std::uint64_t seed) {
    ComplexMatrix a(n);
    RngStream g(stream_key(seed, 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto [gr, gi] = g.next_gaussian_pair();
            a(i, j) = Complex(gr, gi);
        }
    return a;
}

inline ComplexMatrix random_hermitian_matrix(int n, std::uint64_t seed) {
    ComplexMatrix g = random_gaussian_matrix(n, seed);
    ComplexMatrix h(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
    return h;
}

inline ComplexMatrix random_psd_matrix(int n, std::uint64_t seed) {
    ComplexMatrix g = random_gaussian_matrix(n, seed);
    ComplexMatrix p = g.adjoint() * g;
    p *= Complex(1.0 / n, 0.0);
    return p;
}

} // namespace matnorm
