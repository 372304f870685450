#pragma once

// Randomized verification suites behind `matnorm verify`. Each check prints
// one JSON line {check, max_violation, pass}; a suite passes when every check
// does. Deterministic given (--n, --trials, --seed, --mc-samples).

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "matnorm/matnorm.hpp"

namespace matnorm::verify {

struct Options {
    int n = 3;
    int trials = 20;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::int64_t mc_samples = 50000;
};

struct CheckResult {
    std::string name;
    double max_violation = 0; // suite-specific scale; pass iff <= tol (or <= 0 for MC bands)
    bool pass = true;
};

class Reporter {
public:
    explicit Reporter(double tol) : tol_(tol) {}

    /// Deterministic check: violation must stay within tol.
    void deterministic(const std::string& name, double violation) {
        record(name, violation, violation <= tol_);
    }

    /// Monte Carlo check: reports |diff| - 4*stderr (negative = comfortable pass).
    void mc_band(const std::string& name, double diff, double stderr_est, double scale) {
        const double v = std::abs(diff) - 4.0 * stderr_est - 1e-12 * std::max(1.0, scale);
        record(name, v, v <= 0);
    }

    /// Custom pass criterion.
    void custom(const std::string& name, double violation, bool pass) { record(name, violation, pass); }

    bool all_pass() const { return all_pass_; }
    const std::vector<CheckResult>& results() const { return results_; }

private:
    void record(const std::string& name, double v, bool pass) {
        for (auto& r : results_) {
            if (r.name == name) {
                r.max_violation = std::max(r.max_violation, v);
                r.pass = r.pass && pass;
                all_pass_ = all_pass_ && pass;
                return;
            }
        }
        results_.push_back({name, v, pass});
        all_pass_ = all_pass_ && pass;
    }

    double tol_;
    std::vector<CheckResult> results_;
    bool all_pass_ = true;
};

inline double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({1e-300, std::abs(a), std::abs(b)});
}

inline double rel_diff(Complex a, Complex b) {
    return std::abs(a - b) / std::max({1e-300, std::abs(a), std::abs(b)});
}

inline std::uint64_t trial_seed(const Options& opt, std::uint64_t salt, int trial) {
    return stream_key(opt.seed + salt * 0x100000001ull, static_cast<std::uint64_t>(trial));
}

inline void suite_identities(const Options& opt, Reporter& rep) {
    const int n = opt.n;
    for (int t = 0; t < opt.trials; ++t) {
        const ComplexMatrix a = random_gaussian_matrix(n, trial_seed(opt, 1, t));
        for (int k = 2; k <= 4; ++k) {
            if (dim_sym(n, k) > 4096) continue;
            const Complex newton = normalized_sym_trace(a, k).value;
            rep.deterministic("sym-trace-bruteforce", rel_diff(newton, normalized_sym_trace_brute(a, k).value));
            rep.deterministic("sym-trace-partition-sum",
                              rel_diff(newton, normalized_sym_trace_partition_sum(a, k).value));
        }
        for (int k = 2; k <= 3; ++k)
            for (double p : {1.0, 1.5, 2.0}) {
                const double lhs = std::pow(u128_to_double(dim_sym(n, k)), 1.0 / (k * p)) * n_k_p(a, k, p);
                const double rhs = std::pow(sym_power_schatten(a, k, p), 1.0 / k);
                rep.deterministic("prop-2.6", rel_diff(lhs, rhs));
            }
        {
            std::vector<ComplexMatrix> quad;
            for (int i = 0; i < 4; ++i) quad.push_back(random_gaussian_matrix(n, trial_seed(opt, 2, 4 * t + i)));
            const Complex closed = mixed_moment_closed(quad).value;
            const Complex polar = mixed_moment_general(PolarizationJob{quad}).value;
            rep.deterministic("thm-4.3-vs-polarization", rel_diff(closed, polar));
        }
        {
            const ComplexMatrix h = random_hermitian_matrix(n, trial_seed(opt, 3, t));
            rep.deterministic("phi4-hermitian-consistency", rel_diff(phi4(h), phi_closed(h, 4, PhiDomain::hermitian_even)));
            const MomentStats st = moment_stats(a, 0.0);
            rep.deterministic("frobenius-moment-split",
                              rel_diff(a.frobenius_norm_sq(), n * st.e2 + static_cast<double>(n) * n * st.v));
        }
    }
    {
        const ComplexMatrix id = ComplexMatrix::identity(n);
        const double implemented = mixed_moment_closed({id, id}).value.real();
        rep.deterministic("two-matrix-constant", std::abs(implemented - 1.0));
        // regression guard: the C(n+1,2) normalization must NOT give 1
        const double naive = (static_cast<double>(n) + static_cast<double>(n) * n) /
                               u128_to_double(dim_sym(n, 2));
        rep.custom("two-matrix-constant-naive-variant-fails", std::abs(naive - 1.0), std::abs(naive - 1.0) > 0.5);
    }
    // Monte Carlo legs
    const int mc_trials = std::min(opt.trials, 8);
    for (int t = 0; t < mc_trials; ++t) {
        const MCConfig cfg{opt.mc_samples, trial_seed(opt, 4, t), 4096};
        const ComplexMatrix a = random_gaussian_matrix(n, trial_seed(opt, 5, t));
        const int k = 2 + (t % 2);
        const MCEstimate est = mc_numerical_power(a, k, cfg);
        const Complex closed = normalized_sym_trace(a, k).value;
        rep.mc_band("sym-trace-mc", std::abs(est.mean - closed), est.stderr_est, std::abs(closed));

        std::vector<Complex> z(static_cast<std::size_t>(n));
        RngStream g(trial_seed(opt, 6, t));
        for (auto& v : z) {
            auto [re, im] = g.next_gaussian_pair();
            v = Complex(re, im);
        }
        double z2 = 0;
        for (const auto& v : z) z2 += std::norm(v);
        const int kk = 1 + (t % 3);
        const MCEstimate kest = mc_kernel(z, kk, cfg);
        const double c = u128_to_double(dim_sym(n, kk));
        rep.mc_band("lemma-2.7", c * kest.mean.real() - std::pow(z2, kk), c * kest.stderr_est,
                    std::pow(z2, kk));
    }
}

inline void suite_norm_axioms(const Options& opt, Reporter& rep) {
    const int n = opt.n;
    for (int t = 0; t < opt.trials; ++t) {
        const ComplexMatrix a = random_gaussian_matrix(n, trial_seed(opt, 10, t));
        const ComplexMatrix b = random_gaussian_matrix(n, trial_seed(opt, 11, t));
        const ComplexMatrix u = random_unitary(n, trial_seed(opt, 12, t));
        const ComplexMatrix v = random_unitary(n, trial_seed(opt, 13, t));
        RngStream g(trial_seed(opt, 14, t));
        auto [tre, tim] = g.next_gaussian_pair();
        const Complex scalar(tre, tim);

        const ComplexMatrix sum = a + b;
        const ComplexMatrix uav = u * a * v;
        const ComplexMatrix uau = u * a * u.adjoint();
        ComplexMatrix ta = a;
        ta *= scalar;

        for (int k = 1; k <= 3; ++k) {
            rep.deterministic("nk-triangle", std::max(0.0, n_k(sum, k) - n_k(a, k) - n_k(b, k)));
            rep.deterministic("nk-unitary", rel_diff(n_k(uav, k), n_k(a, k)));
            rep.deterministic("nk-homogeneity", rel_diff(n_k(ta, k), std::abs(scalar) * n_k(a, k)));
        }
        for (int k : {2, 3})
            for (double p : {1.5, 2.0}) {
                rep.deterministic("nkp-triangle",
                                  std::max(0.0, n_k_p(sum, k, p) - n_k_p(a, k, p) - n_k_p(b, k, p)));
                rep.deterministic("nkp-unitary", rel_diff(n_k_p(uav, k, p), n_k_p(a, k, p)));
            }
        for (int q : {1, 2, 3}) {
            rep.deterministic("nprime-triangle",
                              std::max(0.0, n_prime(sum, q).value - n_prime(a, q).value - n_prime(b, q).value));
            rep.deterministic("nprime-unitary", rel_diff(n_prime(uav, q).value, n_prime(a, q).value));
        }
        rep.deterministic("phi2-wui", rel_diff(phi2(uau), phi2(a)));
        rep.deterministic("phi4-wui", rel_diff(phi4(uau), phi4(a)));
        rep.deterministic("npsi-wui", rel_diff(n_psi(uau), n_psi(a)));
        rep.deterministic("npsi0-wui", rel_diff(n_psi0(uau), n_psi0(a)));
        rep.deterministic("phi2-triangle", std::max(0.0, phi2(sum) - phi2(a) - phi2(b)));
        rep.deterministic("phi4-triangle", std::max(0.0, phi4(sum) - phi4(a) - phi4(b)));
        rep.deterministic("npsi-triangle", std::max(0.0, n_psi(sum) - n_psi(a) - n_psi(b)));
        rep.deterministic("npsi0-triangle", std::max(0.0, n_psi0(sum) - n_psi0(a) - n_psi0(b)));
    }
}

inline RealTuple random_tuple(int n, std::uint64_t seed, bool nonneg) {
    RngStream g(stream_key(seed, 9));
    RealTuple x(static_cast<std::size_t>(n));
    for (auto& v : x) {
        auto [a, b] = g.next_gaussian_pair();
        v = nonneg ? std::abs(a) : a;
        (void)b;
    }
    return x;
}

inline void suite_gauge(const Options& opt, Reporter& rep) {
    const int n = opt.n;
    for (int t = 0; t < opt.trials; ++t) {
        RngStream g(trial_seed(opt, 20, t));
        const int q = 1 + static_cast<int>(g.next_u64() % 4);
        const double p_mink = 1.0 + 3.0 * g.next_uniform();
        const double p_frac = 0.05 + 0.9 * g.next_uniform();
        const RealTuple x = random_tuple(n, trial_seed(opt, 21, t), false);
        const RealTuple y = random_tuple(n, trial_seed(opt, 22, t), false);

        for (const auto& s : inequality_suite(x, y, q, p_mink))
            if (s.applicable) rep.deterministic(s.name, std::max(0.0, -s.slack));
        for (const auto& s : inequality_suite(x, y, q, p_frac))
            if (s.applicable) rep.deterministic(s.name, std::max(0.0, -s.slack));

        { // isotonicity on a generated majorization pair, and McCarthy on x >= 0
            const RealTuple ypos = random_tuple(n, trial_seed(opt, 23, t), true);
            const auto d = random_doubly_stochastic(n, trial_seed(opt, 24, t));
            RealTuple xpos(ypos.size(), 0.0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    xpos[static_cast<std::size_t>(i)] += d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * ypos[static_cast<std::size_t>(j)];
            const int pint = 1 + static_cast<int>(g.next_u64() % static_cast<std::uint64_t>(q));
            for (const auto& s : inequality_suite(xpos, ypos, q, static_cast<double>(pint)))
                if (s.applicable) rep.deterministic(s.name, std::max(0.0, -s.slack));
        }
        {
            const RealTuple y2 = random_tuple(n, trial_seed(opt, 25, t), false);
            const auto schur = schur_pair_check(y2, q, trial_seed(opt, 26, t));
            rep.deterministic("schur-2q", std::max(0.0, -schur.slack));
        }
        { // Phi_q is a norm: triangle on random pairs
            RealTuple sum(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) sum[i] = x[i] + y[i];
            const double lhs = phi_gauge(sum, q).value;
            const double rhs = phi_gauge(x, q).value + phi_gauge(y, q).value;
            rep.deterministic("phi-q-triangle", std::max(0.0, lhs - rhs));
        }
    }
    if (n == 2) {
        const int mc_trials = std::min(opt.trials, 6);
        for (int t = 0; t < mc_trials; ++t) {
            RngStream g(trial_seed(opt, 27, t));
            const double q = 1.0 + 3.0 * g.next_uniform();
            if (detail::is_integer_order(q)) continue;
            const RealTuple x = random_tuple(2, trial_seed(opt, 28, t), true);
            const MCConfig cfg{opt.mc_samples, trial_seed(opt, 29, t), 4096};
            const GaugeValue est = h_q(x, q, cfg);
            const double oracle = h_q_closed_n2(x[0], x[1], q);
            rep.mc_band("hq-mc-n2", est.value - oracle, est.stderr_est, oracle);
        }
    }
}

inline void suite_mc_oracle(const Options& opt, Reporter& rep) {
    const int n = opt.n;
    const int mc_trials = std::min(opt.trials, 8);
    for (int t = 0; t < mc_trials; ++t) {
        const MCConfig cfg{opt.mc_samples, trial_seed(opt, 30, t), 4096};
        const ComplexMatrix a = random_gaussian_matrix(n, trial_seed(opt, 31, t));

        const int k = 2 + (t % 3);
        const MCEstimate pk = mc_numerical_power(a, k, cfg);
        const Complex closed = normalized_sym_trace(a, k).value;
        rep.mc_band("sym-trace-mc", std::abs(pk.mean - closed), pk.stderr_est, std::abs(closed));

        const MCEstimate p4 = mc_abs_power(a, 4.0, MCConfig{cfg.samples, cfg.seed + 1, cfg.chunk});
        rep.mc_band("phi4-mc", p4.mean.real() - std::pow(phi4(a), 4), p4.stderr_est, std::pow(phi4(a), 4));

        const MCEstimate bo = mc_bochner(a, 2.0, MCConfig{cfg.samples, cfg.seed + 2, cfg.chunk});
        rep.mc_band("nprime-mc", bo.mean.real() - std::pow(n_prime(a, 2).value, 4), bo.stderr_est,
                    std::pow(n_prime(a, 2).value, 4));

        { // N_Psi^4 = 3 d_n E|f|^4 + n d_n E|f - Ef|^4, both legs by MC
            const MCEstimate c4 = mc_abs_power(centered(a), 4.0, MCConfig{cfg.samples, cfg.seed + 3, cfg.chunk});
            const double dn = moment_d_n(n);
            const double mc_val = 3.0 * dn * p4.mean.real() + n * dn * c4.mean.real();
            const double se = std::sqrt(std::pow(3.0 * dn * p4.stderr_est, 2) + std::pow(n * dn * c4.stderr_est, 2));
            rep.mc_band("npsi-definitional-mc", mc_val - std::pow(n_psi(a), 4), se, std::pow(n_psi(a), 4));
        }
        {
            std::vector<ComplexMatrix> ms;
            for (int i = 0; i < 3; ++i) ms.push_back(random_gaussian_matrix(n, trial_seed(opt, 32, 3 * t + i)));
            const MCEstimate mm = mc_mixed(ms, MCConfig{cfg.samples, cfg.seed + 4, cfg.chunk});
            const Complex cl = mixed_moment_closed(ms).value;
            rep.mc_band("mixed-moment-mc", std::abs(mm.mean - cl), mm.stderr_est, std::abs(cl));
        }
    }
}

/// Runs the requested suite(s), appends one JSON line per check to out_lines,
/// returns true iff every check passed.
inline bool run_suites(const std::string& suite, const Options& opt, std::string& out_lines) {
    Reporter rep(opt.tol);
    bool known = false;
    if (suite == "identities" || suite == "all") {
        suite_identities(opt, rep);
        known = true;
    }
    if (suite == "norm-axioms" || suite == "all") {
        suite_norm_axioms(opt, rep);
        known = true;
    }
    if (suite == "gauge" || suite == "all") {
        suite_gauge(opt, rep);
        known = true;
    }
    if (suite == "mc-oracle" || suite == "all") {
        suite_mc_oracle(opt, rep);
        known = true;
    }
    if (!known) throw DomainError("unknown suite: " + suite);
    for (const auto& r : rep.results()) {
        out_lines += "{\"check\": \"" + r.name + "\", \"max_violation\": " + format_double(r.max_violation) +
                     ", \"pass\": " + (r.pass ? "true" : "false") + "}\n";
    }
    return rep.all_pass();
}

} // namespace matnorm::verify
