#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

#include "matnorm/linalg.hpp"
#include "matnorm/rng.hpp"

namespace matnorm {

/// Sampling plan for one Monte Carlo estimate. `chunk` fixes the reduction
/// granularity: partial sums are formed per chunk and reduced in ascending
/// chunk order, so the mean is bit-identical for any thread count.
struct MCConfig {
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    std::int64_t chunk = 4096;
};

struct MCEstimate {
    Complex mean{};
    double stderr_est = 0; // sample standard deviation / sqrt(N)
    std::int64_t samples = 0;
    std::uint64_t seed = 0;

    double real_mean() const { return mean.real(); }
};

/// MC thread budget: hardware concurrency, capped by MATNORM_THREADS.
inline int mc_thread_count() {
    unsigned hc = std::thread::hardware_concurrency();
    if (hc == 0) hc = 1;
    if (const char* env = std::getenv("MATNORM_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && static_cast<unsigned>(v) < hc) hc = static_cast<unsigned>(v);
    }
    return static_cast<int>(hc);
}

namespace detail {

struct ChunkPartial {
    Complex sum{};
    double sumsq = 0;
};

/// Generic chunked mean estimator. `make_worker()` is invoked once per thread
/// and must return a callable (sample index) -> Complex evaluating the
/// integrand at the sample keyed by that index.
template <typename WorkerFactory>
MCEstimate mc_reduce(const MCConfig& cfg, int threads, WorkerFactory&& make_worker) {
    const std::int64_t n = cfg.samples;
    if (n < 1) throw ConfigTooSmall("sample count must be >= 1");
    const std::int64_t chunk = cfg.chunk > 0 ? cfg.chunk : 4096;
    const std::int64_t nchunks = (n + chunk - 1) / chunk;

    std::vector<ChunkPartial> parts(static_cast<std::size_t>(nchunks));
    std::atomic<std::int64_t> next{0};
    auto run = [&] {
        auto worker = make_worker();
        for (;;) {
            const std::int64_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            const std::int64_t lo = c * chunk;
            const std::int64_t hi = std::min(n, lo + chunk);
            Complex s{};
            double s2 = 0;
            for (std::int64_t i = lo; i < hi; ++i) {
                const Complex v = worker(i);
                s += v;
                s2 += std::norm(v);
            }
            parts[static_cast<std::size_t>(c)] = {s, s2};
        }
    };

    const int t = std::min<std::int64_t>(threads, nchunks);
    if (t <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) pool.emplace_back(run);
        for (auto& th : pool) th.join();
    }

    Complex total{};
    double totsq = 0;
    for (const auto& p : parts) {
        total += p.sum;
        totsq += p.sumsq;
    }
    const Complex mean = total / static_cast<double>(n);
    double var = 0;
    if (n > 1) var = std::max(0.0, (totsq - std::norm(total) / static_cast<double>(n)) / static_cast<double>(n - 1));
    return {mean, std::sqrt(var / static_cast<double>(n)), n, cfg.seed};
}

template <typename WorkerFactory>
MCEstimate mc_reduce(const MCConfig& cfg, WorkerFactory&& make_worker) {
    return mc_reduce(cfg, mc_thread_count(), std::forward<WorkerFactory>(make_worker));
}

} // namespace detail

/// Fill `xi` with sample `index` of the uniform distribution on the unit
/// sphere of C^n: a complex standard Gaussian vector, normalized.
inline void sphere_point(int n, std::uint64_t seed, std::uint64_t index, Complex* xi) {
    RngStream g(stream_key(seed, index));
    double nrm2 = 0;
    for (int i = 0; i < n; ++i) {
        auto [re, im] = g.next_gaussian_pair();
        xi[i] = Complex(re, im);
        nrm2 += re * re + im * im;
    }
    const double inv = 1.0 / std::sqrt(nrm2);
    for (int i = 0; i < n; ++i) xi[i] *= inv;
}

/// Materialized batch of sphere samples (test scale). Sample j of a config is
/// the same vector no matter how many samples are requested around it.
inline std::vector<std::vector<Complex>> sample_sphere(int n, std::int64_t count, const MCConfig& cfg) {
    if (n < 1) throw DimensionMismatch("sample_sphere requires n >= 1");
    std::vector<std::vector<Complex>> out(static_cast<std::size_t>(count),
                                          std::vector<Complex>(static_cast<std::size_t>(n)));
    for (std::int64_t j = 0; j < count; ++j)
        sphere_point(n, cfg.seed, static_cast<std::uint64_t>(j), out[static_cast<std::size_t>(j)].data());
    return out;
}

namespace detail {

inline Complex pow_int(Complex z, int k) {
    Complex r = 1.0;
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

struct SphereWorkspace {
    std::vector<Complex> xi, ax;
    explicit SphereWorkspace(int n)
        : xi(static_cast<std::size_t>(n)), ax(static_cast<std::size_t>(n)) {}
};

} // namespace detail

/// E[ <A xi, xi>^k ]
inline MCEstimate mc_numerical_power(const ComplexMatrix& a, int k, const MCConfig& cfg) {
    return detail::mc_reduce(cfg, [&a, k, seed = cfg.seed] {
        return [&a, k, seed, ws = detail::SphereWorkspace(a.dim())](std::int64_t i) mutable {
            sphere_point(a.dim(), seed, static_cast<std::uint64_t>(i), ws.xi.data());
            return detail::pow_int(quadratic_form(a, ws.xi.data(), ws.ax.data()), k);
        };
    });
}

/// E[ |<A xi, xi>|^p ]
inline MCEstimate mc_abs_power(const ComplexMatrix& a, double p, const MCConfig& cfg) {
    return detail::mc_reduce(cfg, [&a, p, seed = cfg.seed] {
        return [&a, p, seed, ws = detail::SphereWorkspace(a.dim())](std::int64_t i) mutable {
            sphere_point(a.dim(), seed, static_cast<std::uint64_t>(i), ws.xi.data());
            const double m = std::abs(quadratic_form(a, ws.xi.data(), ws.ax.data()));
            return Complex(std::pow(m, p), 0.0);
        };
    });
}

/// E[ ||A xi||_2^{2q} ]  (the Bochner-norm integrand)
inline MCEstimate mc_bochner(const ComplexMatrix& a, double q, const MCConfig& cfg) {
    return detail::mc_reduce(cfg, [&a, q, seed = cfg.seed] {
        return [&a, q, seed, ws = detail::SphereWorkspace(a.dim())](std::int64_t i) mutable {
            sphere_point(a.dim(), seed, static_cast<std::uint64_t>(i), ws.xi.data());
            a.apply(ws.xi.data(), ws.ax.data());
            double s = 0;
            for (int r = 0; r < a.dim(); ++r) s += std::norm(ws.ax[static_cast<std::size_t>(r)]);
            return Complex(std::pow(s, q), 0.0);
        };
    });
}

/// E[ |<z, xi>|^{2k} ]
inline MCEstimate mc_kernel(const std::vector<Complex>& z, int k, const MCConfig& cfg) {
    const int n = static_cast<int>(z.size());
    return detail::mc_reduce(cfg, [&z, n, k, seed = cfg.seed] {
        return [&z, n, k, seed, xi = std::vector<Complex>(static_cast<std::size_t>(n))](std::int64_t i) mutable {
            sphere_point(n, seed, static_cast<std::uint64_t>(i), xi.data());
            Complex w{};
            for (int r = 0; r < n; ++r) w += z[static_cast<std::size_t>(r)] * std::conj(xi[static_cast<std::size_t>(r)]);
            return Complex(std::pow(std::norm(w), k), 0.0);
        };
    });
}

/// E[ prod_i <A_i xi, xi> ]
inline MCEstimate mc_mixed(const std::vector<ComplexMatrix>& as, const MCConfig& cfg) {
    if (as.empty()) throw InvalidKind("mixed moment needs at least one matrix");
    const int n = as.front().dim();
    for (const auto& a : as)
        if (a.dim() != n) throw DimensionMismatch("mixed moment matrices must share a dimension");
    return detail::mc_reduce(cfg, [&as, n, seed = cfg.seed] {
        return [&as, n, seed, ws = detail::SphereWorkspace(n)](std::int64_t i) mutable {
            sphere_point(n, seed, static_cast<std::uint64_t>(i), ws.xi.data());
            Complex prod = 1.0;
            for (const auto& a : as) prod *= quadratic_form(a, ws.xi.data(), ws.ax.data());
            return prod;
        };
    });
}

/// Kind-tagged request for the dispatching entry point below.
struct MomentRequest {
    enum class Kind { numerical_power, abs_power, bochner, kernel, mixed } kind;
    std::vector<ComplexMatrix> matrices; // 1 matrix for the power kinds, k for mixed
    std::vector<Complex> z;              // kernel only
    int k = 0;                           // numerical_power / kernel order
    double p = 0;                        // abs_power order
    double q = 0;                        // bochner order
};

/// Estimate one sphere integral. Rejects configs below the acceptance-grade
/// floor of 1000 samples.
inline MCEstimate mc_moment(const MomentRequest& req, const MCConfig& cfg) {
    if (cfg.samples < 1000) throw ConfigTooSmall("mc_moment requires at least 1000 samples");
    using Kind = MomentRequest::Kind;
    switch (req.kind) {
        case Kind::numerical_power:
            if (req.matrices.size() != 1 || req.k < 1) throw InvalidKind("numerical-power needs one matrix and k >= 1");
            return mc_numerical_power(req.matrices.front(), req.k, cfg);
        case Kind::abs_power:
            if (req.matrices.size() != 1 || req.p < 0) throw InvalidKind("abs-power needs one matrix and p >= 0");
            return mc_abs_power(req.matrices.front(), req.p, cfg);
        case Kind::bochner:
            if (req.matrices.size() != 1 || req.q < 0) throw InvalidKind("bochner needs one matrix and q >= 0");
            return mc_bochner(req.matrices.front(), req.q, cfg);
        case Kind::kernel:
            if (req.z.empty() || req.k < 1) throw InvalidKind("kernel needs a vector z and k >= 1");
            return mc_kernel(req.z, req.k, cfg);
        case Kind::mixed:
            if (req.matrices.empty()) throw InvalidKind("mixed needs at least one matrix");
            return mc_mixed(req.matrices, cfg);
    }
    throw InvalidKind("unknown moment kind");
}

} // namespace matnorm
