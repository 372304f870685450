#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "matnorm/linalg.hpp"
#include "matnorm/partitions.hpp"

namespace matnorm {

enum class SymTraceMethod { partition_formula, eigenvalue_oracle, brute_force };

inline const char* to_string(SymTraceMethod m) {
    switch (m) {
        case SymTraceMethod::partition_formula: return "partition-formula";
        case SymTraceMethod::eigenvalue_oracle: return "eigenvalue-oracle";
        case SymTraceMethod::brute_force: return "brute-force";
    }
    return "?";
}

struct SymTraceResult {
    Complex value;
    int k = 0;
    SymTraceMethod method = SymTraceMethod::partition_formula;
};

/// h_1..h_kmax from power sums p_1..p_kmax via the Newton recurrence
/// k h_k = sum_{i=1..k} p_i h_{k-i}, h_0 = 1.
inline std::vector<Complex> h_all_from_power_sums(const std::vector<Complex>& p, int kmax) {
    if (static_cast<int>(p.size()) < kmax) throw LengthMismatch("need power sums up to kmax");
    std::vector<Complex> h(static_cast<std::size_t>(kmax) + 1);
    h[0] = 1.0;
    for (int k = 1; k <= kmax; ++k) {
        Complex s{};
        for (int i = 1; i <= k; ++i) s += p[static_cast<std::size_t>(i - 1)] * h[static_cast<std::size_t>(k - i)];
        h[static_cast<std::size_t>(k)] = s / static_cast<double>(k);
    }
    h.erase(h.begin());
    return h;
}

/// h_k alone from power sums p_1..p_k.
inline Complex h_from_power_sums(const std::vector<Complex>& p, int k) {
    if (k < 1) throw InvalidOrder("h_from_power_sums requires k >= 1");
    return h_all_from_power_sums(p, k).back();
}

/// Unnormalized complete homogeneous polynomial h_k at a real tuple.
inline double h_complete(const std::vector<double>& x, int k) {
    std::vector<Complex> p(static_cast<std::size_t>(k));
    for (int m = 1; m <= k; ++m) {
        double s = 0;
        for (double v : x) s += std::pow(v, m);
        p[static_cast<std::size_t>(m - 1)] = s;
    }
    return h_from_power_sums(p, k).real();
}

/// Normalized trace of the k-th symmetric tensor power of A, for arbitrary
/// complex A: h_k(power traces) / c_{n,k}.
inline SymTraceResult normalized_sym_trace(const ComplexMatrix& a, int k) {
    if (k < 1 || k > 64) throw Overflow("normalized_sym_trace requires 1 <= k <= 64");
    const Complex hk = h_from_power_sums(power_traces(a, k), k);
    const double c = u128_to_double(dim_sym(a.dim(), k));
    return {hk / c, k, SymTraceMethod::partition_formula};
}

/// Literal partition sum: (1/c_{n,k}) sum_beta (1/z_beta) prod_t tr(A^{beta_t}).
/// Self-check path; the Newton recurrence above must match it term for term.
inline SymTraceResult normalized_sym_trace_partition_sum(const ComplexMatrix& a, int k) {
    if (k < 1 || k > 12) throw KTooLarge("partition-sum path capped at k = 12");
    const std::vector<Complex> p = power_traces(a, k);
    Complex total{};
    for (const Partition& beta : partitions_of(k)) {
        Complex prod = 1.0;
        for (int part : beta.parts) prod *= p[static_cast<std::size_t>(part - 1)];
        total += prod / u128_to_double(z_beta(beta));
    }
    const double c = u128_to_double(dim_sym(a.dim(), k));
    return {total / c, k, SymTraceMethod::partition_formula};
}

/// h_k evaluated at the (Hermitian) eigenvalues of A; the eigenvalue oracle.
inline SymTraceResult normalized_sym_trace_eigen(const ComplexMatrix& a, int k) {
    if (k < 1 || k > 64) throw Overflow("normalized_sym_trace_eigen requires 1 <= k <= 64");
    const Spectrum eig = hermitian_eigenvalues(a);
    const double c = u128_to_double(dim_sym(a.dim(), k));
    return {h_complete(eig.values, k) / c, k, SymTraceMethod::eigenvalue_oracle};
}

namespace detail {

/// Multisets of size k over {0..n-1} as ascending sorted tuples, in colex
/// order (largest element most significant). Internally iterates the
/// descending representation, whose plain lex order is exactly colex.
inline std::vector<std::vector<int>> multisets_colex(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k), 0); // descending: cur[0] >= cur[1] >= ...
    for (;;) {
        out.emplace_back(cur.rbegin(), cur.rend());
        int r = k - 1;
        for (; r >= 0; --r) {
            const int cap = (r == 0) ? n - 1 : cur[static_cast<std::size_t>(r - 1)];
            if (cur[static_cast<std::size_t>(r)] < cap) break;
        }
        if (r < 0) break;
        ++cur[static_cast<std::size_t>(r)];
        for (int i = r + 1; i < k; ++i) cur[static_cast<std::size_t>(i)] = 0;
    }
    return out;
}

} // namespace detail

/// Brute-force matrix of the k-th symmetric power of A in the monomial
/// multiset basis (colex order). The basis is not orthonormal, but the matrix
/// represents the operator exactly, so its trace equals tr(vee^k A); that is
/// the contract the oracle tests rely on.
inline ComplexMatrix sym_power_matrix(const ComplexMatrix& a, int k) {
    if (k < 1) throw InvalidOrder("sym_power_matrix requires k >= 1");
    const int n = a.dim();
    const U128 dim = dim_sym(n, k);
    if (dim > 4096) throw DimensionTooLarge("c_{n,k} = " + u128_to_string(dim) + " exceeds brute-force cap 4096");
    const auto basis = detail::multisets_colex(n, k);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

    ComplexMatrix m(static_cast<int>(basis.size()));
    std::vector<int> tuple(static_cast<std::size_t>(k), 0);
    std::vector<int> sorted(static_cast<std::size_t>(k));
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto& s = basis[col];
        std::fill(tuple.begin(), tuple.end(), 0);
        for (;;) {
            Complex prod = 1.0;
            for (int r = 0; r < k; ++r) prod *= a(tuple[static_cast<std::size_t>(r)], s[static_cast<std::size_t>(r)]);
            if (prod != Complex{}) {
                sorted = tuple;
                std::sort(sorted.begin(), sorted.end());
                m(index.find(sorted)->second, static_cast<int>(col)) += prod;
            }
            int r = k - 1;
            while (r >= 0 && tuple[static_cast<std::size_t>(r)] == n - 1) --r;
            if (r < 0) break;
            ++tuple[static_cast<std::size_t>(r)];
            for (int i = r + 1; i < k; ++i) tuple[static_cast<std::size_t>(i)] = 0;
        }
    }
    return m;
}

/// tr(sym_power_matrix) / c_{n,k}; the brute-force route.
inline SymTraceResult normalized_sym_trace_brute(const ComplexMatrix& a, int k) {
    const ComplexMatrix m = sym_power_matrix(a, k);
    const double c = u128_to_double(dim_sym(a.dim(), k));
    return {m.trace() / c, k, SymTraceMethod::brute_force};
}

} // namespace matnorm
