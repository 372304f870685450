#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "matnorm/montecarlo.hpp"
#include "matnorm/sym_trace.hpp"
#include "matnorm/wui_moments.hpp"

namespace matnorm {

using RealTuple = std::vector<double>;

enum class GaugeMethod { closed_form, simplex_mc };

inline const char* to_string(GaugeMethod m) {
    return m == GaugeMethod::closed_form ? "closed-form" : "simplex-mc";
}

struct GaugeValue {
    double value = 0;
    double q = 0;
    GaugeMethod method = GaugeMethod::closed_form;
    double stderr_est = 0; // simplex-mc only
    std::int64_t samples = 0;
};

namespace detail {

inline bool is_integer_order(double q) { return std::abs(q - std::round(q)) < 1e-12; }

} // namespace detail

/// Exact H_q for n = 2 and x >= 0: the coordinate weights (|xi_1|^2, |xi_2|^2)
/// are (U, 1-U) with U uniform on (0,1), so the sphere integral collapses to a
/// one-dimensional one. Used as the oracle for the simplex sampler.
inline double h_q_closed_n2(double x0, double x1, double q) {
    if (x0 < 0 || x1 < 0) throw NegativeEntry("h_q_closed_n2 requires x >= 0");
    if (x0 == x1) return std::pow(x0, q);
    return (std::pow(x1, q + 1) - std::pow(x0, q + 1)) / ((q + 1) * (x1 - x0));
}

/// H_q(x) = int (<X xi, xi>)^q dsigma on x >= 0. Integer q: h_q(x)/c_{n,q}.
/// Non-integer q: E[(sum x_i W_i)^q] with W flat on the simplex, sampled by
/// normalized iid exponentials (that law is exactly the law of (|xi_i|^2)).
inline GaugeValue h_q(const RealTuple& x, double q, const std::optional<MCConfig>& mc = {}) {
    if (q < 1) throw InvalidOrder("h_q requires q >= 1");
    for (double v : x)
        if (v < 0) throw NegativeEntry("h_q requires x >= 0 entrywise");
    if (x.empty()) throw LengthMismatch("h_q requires a nonempty tuple");
    const int n = static_cast<int>(x.size());

    if (detail::is_integer_order(q)) {
        const int k = static_cast<int>(std::round(q));
        const double v = h_complete(x, k) / u128_to_double(dim_sym(n, k));
        return {v, q, GaugeMethod::closed_form, 0.0, 0};
    }
    if (!mc) throw MCConfigRequired("non-integer q needs an MCConfig");
    const MCEstimate est = detail::mc_reduce(*mc, [&x, n, q, seed = mc->seed] {
        return [&x, n, q, seed, e = std::vector<double>(static_cast<std::size_t>(n))](std::int64_t i) mutable {
            RngStream g(stream_key(seed, static_cast<std::uint64_t>(i)));
            double total = 0;
            for (int r = 0; r < n; ++r) {
                e[static_cast<std::size_t>(r)] = g.next_exponential();
                total += e[static_cast<std::size_t>(r)];
            }
            double s = 0;
            for (int r = 0; r < n; ++r) s += x[static_cast<std::size_t>(r)] * e[static_cast<std::size_t>(r)];
            return Complex(std::pow(s / total, q), 0.0);
        };
    });
    return {est.mean.real(), q, GaugeMethod::simplex_mc, est.stderr_est, est.samples};
}

/// Phi_q(x) = H_q(|x|)^{1/q}; a symmetric gauge function (permutation and
/// sign-flip invariant by construction of |x|).
inline GaugeValue phi_gauge(const RealTuple& x, double q, const std::optional<MCConfig>& mc = {}) {
    RealTuple ax(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) ax[i] = std::abs(x[i]);
    GaugeValue h = h_q(ax, q, mc);
    const double hv = h.value;
    h.value = std::pow(hv, 1.0 / q);
    if (h.method == GaugeMethod::simplex_mc && hv > 0)
        h.stderr_est = h.stderr_est * h.value / (q * hv);
    return h;
}

namespace detail {

inline RealTuple sorted_descending(const RealTuple& x) {
    RealTuple s = x;
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
}

} // namespace detail

/// x prec_w y: every descending prefix sum of x is <= the matching one of y.
/// Comparisons carry a 1e-12 relative slack, the same convention the strong
/// variant's total-sum equality uses; pairs produced by doubly stochastic
/// averaging classify correctly despite roundoff.
inline bool weak_majorizes(const RealTuple& x, const RealTuple& y) {
    if (x.size() != y.size()) throw LengthMismatch("majorization needs equal lengths");
    const RealTuple xs = detail::sorted_descending(x);
    const RealTuple ys = detail::sorted_descending(y);
    double px = 0, py = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        px += xs[i];
        py += ys[i];
        if (px > py + 1e-12 * std::max(1.0, std::abs(py))) return false;
    }
    return true;
}

/// x prec y: weak majorization plus equal totals (within 1e-12).
inline bool majorizes(const RealTuple& x, const RealTuple& y) {
    if (!weak_majorizes(x, y)) return false;
    const double sx = std::accumulate(x.begin(), x.end(), 0.0);
    const double sy = std::accumulate(y.begin(), y.end(), 0.0);
    return std::abs(sx - sy) <= 1e-12 * std::max(1.0, std::abs(sy));
}

struct InequalitySlack {
    std::string name;
    double slack = 0;
    bool applicable = false;
    std::string note;
};

namespace detail {

inline RealTuple abs_pow(const RealTuple& x, double p) {
    RealTuple out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::pow(std::abs(x[i]), p);
    return out;
}

inline double h_int(const RealTuple& x, int k) {
    return h_complete(x, k) / u128_to_double(dim_sym(static_cast<int>(x.size()), k));
}

} // namespace detail

/// Named slacks (right minus left) for the gauge-function inequalities, all
/// evaluated in closed form. q must be an integer order; p is interpreted per
/// inequality: p >= 1 feeds the Minkowski form, p in (0,1) the fractional one,
/// and the interpolation inequality additionally needs integer p <= q.
inline std::vector<InequalitySlack> inequality_suite(const RealTuple& x, const RealTuple& y,
                                                     double q, double p) {
    if (x.size() != y.size()) throw LengthMismatch("inequality_suite needs equal lengths");
    if (x.empty()) throw LengthMismatch("inequality_suite needs nonempty tuples");
    if (q < 1 || !detail::is_integer_order(q))
        throw DomainError("inequality_suite evaluates closed forms; q must be an integer >= 1");
    if (!(p > 0)) throw DomainError("inequality_suite requires p > 0");
    const int k = static_cast<int>(std::round(q));
    const std::size_t n = x.size();

    std::vector<InequalitySlack> out;

    { // Hoelder: H_q(|xy|) <= H_q(x^2)^{1/2} H_q(y^2)^{1/2}
        RealTuple xy(n), x2(n), y2(n);
        for (std::size_t i = 0; i < n; ++i) {
            xy[i] = std::abs(x[i] * y[i]);
            x2[i] = x[i] * x[i];
            y2[i] = y[i] * y[i];
        }
        const double lhs = detail::h_int(xy, k);
        const double rhs = std::sqrt(detail::h_int(x2, k)) * std::sqrt(detail::h_int(y2, k));
        out.push_back({"n1", rhs - lhs, true, ""});
    }

    { // Minkowski for p >= 1 / fractional variant for p in (0,1)
        RealTuple sum(n);
        for (std::size_t i = 0; i < n; ++i) sum[i] = x[i] + y[i];
        const double e = 1.0 / (q * p);
        const double lhs = std::pow(detail::h_int(detail::abs_pow(sum, p), k), e);
        const double hx = std::pow(detail::h_int(detail::abs_pow(x, p), k), e);
        const double hy = std::pow(detail::h_int(detail::abs_pow(y, p), k), e);
        if (p >= 1) {
            out.push_back({"n2", hx + hy - lhs, true, ""});
            out.push_back({"n4", 0, false, "requires 0 < p < 1"});
        } else {
            out.push_back({"n2", 0, false, "requires p >= 1"});
            out.push_back({"n4", std::pow(2.0, 1.0 / p - 1.0) * (hx + hy) - lhs, true, ""});
        }
    }

    { // isotonicity: x prec_w y implies H_q(x) <= H_q(y), on nonnegative tuples
        InequalitySlack s{"n5", 0, false, ""};
        const bool nonneg = std::all_of(x.begin(), x.end(), [](double v) { return v >= 0; }) &&
                            std::all_of(y.begin(), y.end(), [](double v) { return v >= 0; });
        if (!nonneg) {
            s.note = "requires x, y >= 0";
        } else if (!weak_majorizes(x, y)) {
            s.note = "premise x prec_w y does not hold";
        } else {
            s.applicable = true;
            s.slack = detail::h_int(y, k) - detail::h_int(x, k);
        }
        out.push_back(std::move(s));
    }

    { // H_q(x^p) <= H_p(x^q) for integer q >= p >= 1, x >= 0
        InequalitySlack s{"mccarthy", 0, false, ""};
        const bool nonneg = std::all_of(x.begin(), x.end(), [](double v) { return v >= 0; });
        if (!nonneg) {
            s.note = "requires x >= 0";
        } else if (p < 1 || !detail::is_integer_order(p)) {
            s.note = "closed form needs integer p >= 1";
        } else if (p > q) {
            s.note = "requires q >= p";
        } else {
            const int kp = static_cast<int>(std::round(p));
            s.applicable = true;
            s.slack = detail::h_int(detail::abs_pow(x, q), kp) - detail::h_int(detail::abs_pow(x, p), k);
        }
        out.push_back(std::move(s));
    }

    return out;
}

/// Random doubly stochastic matrix: a Dirichlet-weighted convex combination of
/// n^2 random permutations. Any x = D y is then majorized by y.
inline std::vector<std::vector<double>> random_doubly_stochastic(int n, std::uint64_t seed) {
    if (n < 1) throw DimensionMismatch("random_doubly_stochastic requires n >= 1");
    RngStream g(stream_key(seed, 2));
    const int m = n * n;
    std::vector<double> w(static_cast<std::size_t>(m));
    double tot = 0;
    for (auto& v : w) {
        v = g.next_exponential();
        tot += v;
    }
    std::vector<std::vector<double>> d(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int j = 0; j < m; ++j) {
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i) {
            const int r = static_cast<int>(g.next_u64() % static_cast<std::uint64_t>(i + 1));
            std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(r)]);
        }
        const double wj = w[static_cast<std::size_t>(j)] / tot;
        for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] += wj;
    }
    return d;
}

struct SchurPairReport {
    RealTuple x, y;
    double h2q_x = 0;
    double h2q_y = 0;
    double slack = 0; // h2q_y - h2q_x; >= 0 when the Schur-convexity holds
    int two_q = 0;
};

/// Draws x = D y for a random doubly stochastic D (so x prec y by Birkhoff)
/// and compares H_{2q} at both tuples through the Hermitian closed form on
/// diagonal matrices. q is an integer order; 2q is the even exponent.
inline SchurPairReport schur_pair_check(const RealTuple& y, int q, std::uint64_t seed) {
    if (q < 1) throw InvalidOrder("schur_pair_check requires q >= 1");
    if (y.empty()) throw LengthMismatch("schur_pair_check needs a nonempty tuple");
    const int n = static_cast<int>(y.size());
    const auto d = random_doubly_stochastic(n, seed);
    RealTuple x(y.size(), 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(i)] += d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(j)];

    const int two_q = 2 * q;
    const double hx = std::pow(phi_closed(ComplexMatrix::diagonal_real(x), two_q, PhiDomain::hermitian_even), two_q);
    const double hy = std::pow(phi_closed(ComplexMatrix::diagonal_real(y), two_q, PhiDomain::hermitian_even), two_q);
    return {std::move(x), y, hx, hy, hy - hx, two_q};
}

} // namespace matnorm
