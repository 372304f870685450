#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace matnorm {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t splitmix_finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace detail

/// Key for the stream attached to (seed, index). Counter-based: sample i of a
/// run is a pure function of (seed, i), so chunked or parallel evaluation
/// reproduces the serial stream regardless of schedule.
inline std::uint64_t stream_key(std::uint64_t seed, std::uint64_t index) {
    return detail::splitmix_finalize(seed + (index + 1) * detail::kGolden);
}

/// splitmix64 stream. Cheap to construct, no warm-up needed.
class RngStream {
public:
    explicit RngStream(std::uint64_t key) : state_(key) {}

    std::uint64_t next_u64() {
        state_ += detail::kGolden;
        return detail::splitmix_finalize(state_);
    }

    /// Uniform on [0, 1), 53-bit resolution.
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0, 1]; safe as a logarithm argument.
    double next_uniform_pos() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Two independent standard normals via Box-Muller.
    std::pair<double, double> next_gaussian_pair() {
        const double u1 = next_uniform_pos();
        const double u2 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 6.283185307179586476925286766559 * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

    /// Exp(1) variate.
    double next_exponential() { return -std::log(next_uniform_pos()); }

private:
    std::uint64_t state_;
};

} // namespace matnorm
