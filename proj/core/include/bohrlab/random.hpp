#pragma once

#include <cstdint>
#include <random>

namespace bohr {

// Seeded generator whose output is identical across standard libraries:
// std::mt19937_64 is fully specified, the distributions are not, so the
// conversions are done here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

private:
    std::mt19937_64 engine_;
};

} // namespace bohr
