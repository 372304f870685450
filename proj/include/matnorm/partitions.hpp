#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "matnorm/errors.hpp"

namespace matnorm {

using U128 = unsigned __int128;

inline double u128_to_double(U128 v) {
    return static_cast<double>(v);
}

inline std::string u128_to_string(U128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

/// Integer partition beta of k: weakly decreasing positive parts, plus the
/// multiplicity table that the cycle-type constant z_beta is built from.
struct Partition {
    std::vector<int> parts;                          // weakly decreasing, > 0
    int k = 0;                                       // sum of parts
    std::vector<std::pair<int, int>> multiplicities; // (part size, count), size descending

    static Partition from_parts(std::vector<int> p) {
        Partition out;
        out.parts = std::move(p);
        for (std::size_t i = 0; i < out.parts.size(); ++i) {
            if (out.parts[i] <= 0) throw DomainError("partition parts must be positive");
            if (i > 0 && out.parts[i] > out.parts[i - 1])
                throw DomainError("partition parts must be weakly decreasing");
            out.k += out.parts[i];
            if (!out.multiplicities.empty() && out.multiplicities.back().first == out.parts[i])
                ++out.multiplicities.back().second;
            else
                out.multiplicities.emplace_back(out.parts[i], 1);
        }
        return out;
    }

    int length() const { return static_cast<int>(parts.size()); }
};

namespace detail {

inline void gen_partitions_exact_length(int rem, int slots, int maxpart,
                                        std::vector<int>& cur, std::vector<Partition>& out) {
    if (slots == 0) {
        if (rem == 0) out.push_back(Partition::from_parts(cur));
        return;
    }
    const int hi = std::min(maxpart, rem - (slots - 1));
    const int lo = (rem + slots - 1) / slots; // smallest admissible leading part
    for (int a = hi; a >= lo; --a) {
        cur.push_back(a);
        gen_partitions_exact_length(rem - a, slots - 1, a, cur, out);
        cur.pop_back();
    }
}

inline U128 checked_mul(U128 a, U128 b, const char* what) {
    if (a != 0 && b > static_cast<U128>(-1) / a)
        throw Overflow(std::string(what) + " exceeds 128-bit range");
    return a * b;
}

} // namespace detail

/// All partitions of k, grouped by number of parts l = 1..k, reverse-lex
/// (descending) within each group. The flat order is reproducible, so CLI and
/// test output built on it is stable.
inline std::vector<Partition> partitions_of(int k) {
    if (k < 1) throw DomainError("partitions_of requires k >= 1");
    if (k > 64) throw Overflow("partitions_of capped at k = 64");
    std::vector<Partition> out;
    std::vector<int> cur;
    for (int l = 1; l <= k; ++l)
        detail::gen_partitions_exact_length(k, l, k - l + 1, cur, out);
    return out;
}

/// Cycle-type constant z_beta = prod over distinct part sizes i of i^{m_i} m_i!.
/// 1/z_beta is the weight each partition carries in the trace formula.
inline U128 z_beta(const Partition& beta) {
    U128 z = 1;
    for (const auto& [size, count] : beta.multiplicities) {
        for (int c = 0; c < count; ++c) z = detail::checked_mul(z, static_cast<U128>(size), "z_beta");
        for (int c = 2; c <= count; ++c) z = detail::checked_mul(z, static_cast<U128>(c), "z_beta");
    }
    return z;
}

/// dim Sym^k(C^n) = C(n+k-1, k), exact. Each intermediate value r_i is itself
/// the binomial C(n-1+i, i) <= the result, so only the result can overflow.
inline U128 dim_sym(int n, int k) {
    if (n < 1) throw DomainError("dim_sym requires n >= 1");
    if (k < 0) throw DomainError("dim_sym requires k >= 0");
    U128 r = 1;
    for (int i = 1; i <= k; ++i) {
        const unsigned long long m = static_cast<unsigned long long>(n) - 1 + static_cast<unsigned long long>(i);
        const unsigned long long g = std::gcd(m, static_cast<unsigned long long>(i));
        // r_i = r_{i-1} * m / i; with m = g*m', i = g*i' and gcd(m', i') = 1,
        // i' divides r_{i-1} exactly, so divide before the checked multiply.
        const U128 ir = static_cast<U128>(i) / g;
        r = detail::checked_mul(r / ir, static_cast<U128>(m / g), "dim_sym");
    }
    return r;
}

} // namespace matnorm
