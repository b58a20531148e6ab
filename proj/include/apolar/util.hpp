#ifndef APOLAR_UTIL_HPP
#define APOLAR_UTIL_HPP

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace apolar {

// Malformed user input (bad flag, unparsable polynomial, unsupported n).
// The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two independent algorithms disagreed on a value they must agree on.
// The CLI maps this to exit code 3 and never resolves it silently.
struct InternalInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Binomial coefficient as a signed 64-bit value. Arguments stay small here
// (n below ~60), so the running product never overflows.
std::int64_t binomial(std::int64_t n, std::int64_t k);

// Deterministic 64-bit generator (splitmix64). Used instead of <random>
// engines plus distributions because distribution output is not pinned by
// the standard and seeds must reproduce across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-enough value in [0, bound) via the fixed-point multiply trick;
    // fully deterministic given the seed.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}

    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace apolar

#endif
