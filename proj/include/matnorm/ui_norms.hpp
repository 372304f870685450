#pragma once

#include <cmath>
#include <optional>

#include "matnorm/montecarlo.hpp"
#include "matnorm/sym_trace.hpp"

namespace matnorm {

/// Order pair for the N_q^(p) family: outer sphere order q, inner Schatten
/// order p (p = 1 recovers N_q).
struct NormOrder {
    double q = 1;
    double p = 1;
};

enum class NormMethod { closed_form, monte_carlo };

struct NormValue {
    double value = 0;
    NormMethod method = NormMethod::closed_form;
    double stderr_est = 0; // meaningful only for the Monte Carlo path
    std::int64_t samples = 0;
};

namespace detail {

inline std::vector<Complex> real_power_sums(const std::vector<double>& x, int kmax, double p) {
    std::vector<Complex> out(static_cast<std::size_t>(kmax));
    for (int m = 1; m <= kmax; ++m) {
        double s = 0;
        for (double v : x) s += std::pow(v, p * m);
        out[static_cast<std::size_t>(m - 1)] = s;
    }
    return out;
}

} // namespace detail

/// N_k(A) = [Tr(vee^k |A|)]^{1/k} = [h_k(sigma(A)) / c_{n,k}]^{1/k}.
inline double n_k(const ComplexMatrix& a, int k) {
    if (k < 1) throw InvalidOrder("n_k requires k >= 1");
    const Spectrum sv = singular_values(a);
    const double h = h_from_power_sums(detail::real_power_sums(sv.values, k, 1.0), k).real();
    return std::pow(h / u128_to_double(dim_sym(a.dim(), k)), 1.0 / k);
}

/// N_k^(p)(A) = [h_k(sigma(A)^p) / c_{n,k}]^{1/(pk)}.
inline double n_k_p(const ComplexMatrix& a, int k, double p) {
    if (k < 1) throw InvalidOrder("n_k_p requires k >= 1");
    if (p < 1) throw InvalidOrder("n_k_p requires p >= 1");
    const Spectrum sv = singular_values(a);
    const double h = h_from_power_sums(detail::real_power_sums(sv.values, k, p), k).real();
    return std::pow(h / u128_to_double(dim_sym(a.dim(), k)), 1.0 / (p * k));
}

/// Literal Schatten-product expansion of c_{n,k} N_k^k (cross-check path):
/// sum over partitions beta of k of (1/z_beta) prod_t ||A||^{p beta_t}_{(p beta_t)}.
/// Kept separate from the spectral route so the two can arbitrate each other.
inline double n_k_p_expansion(const ComplexMatrix& a, int k, double p) {
    if (k < 1 || k > 5) throw KTooLarge("expansion path kept for k <= 5");
    if (p < 1) throw InvalidOrder("expansion requires p >= 1");
    const Spectrum sv = singular_values(a);
    // ||A||^{m}_{(m)} = sum_i sigma_i^m, evaluated once per needed order.
    std::vector<double> schatten_pow(static_cast<std::size_t>(k) + 1, 0.0);
    for (int m = 1; m <= k; ++m) {
        double s = 0;
        for (double v : sv.values) s += std::pow(v, p * m);
        schatten_pow[static_cast<std::size_t>(m)] = s;
    }
    double total = 0;
    for (const Partition& beta : partitions_of(k)) {
        double prod = 1;
        for (int part : beta.parts) prod *= schatten_pow[static_cast<std::size_t>(part)];
        total += prod / u128_to_double(z_beta(beta));
    }
    return std::pow(total / u128_to_double(dim_sym(a.dim(), k)), 1.0 / (p * k));
}

inline double n_k_expansion(const ComplexMatrix& a, int k) { return n_k_p_expansion(a, k, 1.0); }

/// Schatten p-norm of the k-th symmetric power, without building the big
/// matrix: (sum over degree-k monomials in sigma(A) of monomial^p)^{1/p}.
/// Enumerates the c_{n,k} monomials directly, which keeps it an independent
/// route from the Newton-recurrence norms above.
inline double sym_power_schatten(const ComplexMatrix& a, int k, double p) {
    if (k < 1) throw InvalidOrder("sym_power_schatten requires k >= 1");
    if (p < 1) throw InvalidOrder("sym_power_schatten requires p >= 1");
    const U128 dim = dim_sym(a.dim(), k);
    if (dim > (static_cast<U128>(1) << 22))
        throw DimensionTooLarge("monomial enumeration cap exceeded: c_{n,k} = " + u128_to_string(dim));
    const Spectrum sv = singular_values(a);
    double s = 0;
    for (const auto& multiset : detail::multisets_colex(a.dim(), k)) {
        double prod = 1;
        for (int idx : multiset) prod *= sv.values[static_cast<std::size_t>(idx)];
        s += std::pow(prod, p);
    }
    return std::pow(s, 1.0 / p);
}

/// Q-norm N'_q(A) = ( int ||A xi||_2^{2q} dsigma )^{1/2q}. Closed form at
/// integer q via h_q at the spectrum of A*A; Monte Carlo otherwise.
inline NormValue n_prime(const ComplexMatrix& a, double q, const std::optional<MCConfig>& mc = {}) {
    if (q < 1) throw InvalidOrder("n_prime requires q >= 1");
    const double qr = std::round(q);
    if (std::abs(q - qr) < 1e-12) {
        const int k = static_cast<int>(qr);
        const Spectrum gram = hermitian_eigenvalues(a.adjoint() * a); // sigma(A)^2, descending
        std::vector<double> vals = gram.values;
        for (auto& v : vals) v = std::max(v, 0.0);
        const double h = h_complete(vals, k);
        const double val = std::pow(h / u128_to_double(dim_sym(a.dim(), k)), 1.0 / (2.0 * k));
        return {val, NormMethod::closed_form, 0.0, 0};
    }
    if (!mc) throw MCConfigRequired("non-integer q has no closed form; supply an MCConfig");
    const MCEstimate est = mc_bochner(a, q, *mc);
    const double m = est.mean.real();
    const double val = std::pow(m, 1.0 / (2.0 * q));
    // delta method for the root
    const double se = m > 0 ? est.stderr_est * val / (2.0 * q * m) : est.stderr_est;
    return {val, NormMethod::monte_carlo, se, est.samples};
}

} // namespace matnorm
