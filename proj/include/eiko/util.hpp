#ifndef EIKO_UTIL_HPP
#define EIKO_UTIL_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace eiko {

/// Thread cap resolution order: explicit argument, EIKO_THREADS, hardware.
int thread_count(int requested = 0);

/// Static block partition of [0, n). Results never depend on the schedule:
/// each index is written by exactly one invocation of fn.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn,
                  int threads = 0);

/// FNV-1a 64-bit, used to stamp reports with a config fingerprint.
std::uint64_t fnv1a64(const std::string& bytes);

/// Shortest exact decimal for a double (17 significant digits).
std::string format_g17(double v);

/// Counter-based deterministic RNG (splitmix64). Portable across platforms
/// and standard libraries, unlike the std distributions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Uniform integer in [0, n) by Lemire reduction.
    std::uint64_t below(std::uint64_t n) {
        __uint128_t m = static_cast<__uint128_t>(next()) * n;
        return static_cast<std::uint64_t>(m >> 64);
    }
    /// Uniform in [a, b].
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

private:
    std::uint64_t state_;
};

} // namespace eiko

#endif
