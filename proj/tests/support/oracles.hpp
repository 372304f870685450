#pragma once

// Test-only oracles, kept deliberately independent of the library's
// evaluation paths: h_k by explicit monomial enumeration (no Newton
// recurrence), flat Dirichlet moments in closed form, and the partition
// counting recurrence.

#include <complex>
#include <cstdint>
#include <vector>

namespace oracles {

using Complex = std::complex<double>;

/// Complete homogeneous h_k by direct enumeration of all degree-k monomials.
inline Complex brute_h(const std::vector<Complex>& x, int k) {
    const int n = static_cast<int>(x.size());
    // iterate nondecreasing index tuples
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    Complex total{};
    for (;;) {
        Complex prod = 1.0;
        for (int r = 0; r < k; ++r) prod *= x[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])];
        total += prod;
        int r = k - 1;
        while (r >= 0 && idx[static_cast<std::size_t>(r)] == n - 1) --r;
        if (r < 0) break;
        const int v = idx[static_cast<std::size_t>(r)] + 1;
        for (int i = r; i < k; ++i) idx[static_cast<std::size_t>(i)] = v;
    }
    return total;
}

inline Complex brute_h_real(const std::vector<double>& x, int k) {
    std::vector<Complex> cx(x.begin(), x.end());
    return brute_h(cx, k);
}

/// int prod_i |xi_i|^{2 alpha_i} dsigma = (n-1)! alpha! / (n-1+|alpha|)!  for
/// xi uniform on the unit sphere of C^n (flat Dirichlet law of |xi_i|^2).
inline double dirichlet_moment(int n, const std::vector<int>& alpha) {
    long double num = 1, den = 1;
    for (int i = 2; i < n; ++i) num *= i; // (n-1)!
    int total = 0;
    for (int a : alpha) {
        for (int i = 2; i <= a; ++i) num *= i;
        total += a;
    }
    for (int i = 2; i <= n - 1 + total; ++i) den *= i;
    return static_cast<double>(num / den);
}

/// p(k) by the classic two-variable recurrence (partitions of k with parts <= m).
inline std::uint64_t partition_count(int k) {
    std::vector<std::vector<std::uint64_t>> p(static_cast<std::size_t>(k) + 1,
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(k) + 1, 0));
    for (int m = 0; m <= k; ++m) p[0][static_cast<std::size_t>(m)] = 1;
    for (int s = 1; s <= k; ++s)
        for (int m = 1; m <= k; ++m) {
            p[static_cast<std::size_t>(s)][static_cast<std::size_t>(m)] =
                p[static_cast<std::size_t>(s)][static_cast<std::size_t>(m - 1)] +
                (s >= m ? p[static_cast<std::size_t>(s - m)][static_cast<std::size_t>(m)] : 0);
        }
    return p[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
}

} // namespace oracles
