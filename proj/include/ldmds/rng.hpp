#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ldmds {

// Deterministic random source.  mt19937_64 has a standardized output
// sequence, and the derived draws below avoid std::uniform_* distributions,
// whose outputs may differ across standard library implementations.  Same
// seed, same draws, everywhere.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform integer in [0, bound) by rejection; bound must be positive.
    std::uint32_t below(std::uint32_t bound);

    // Uniform double in [0, 1) with 53 random bits.
    double unit_real();

    bool bernoulli(double p) { return unit_real() < p; }

    // Uniform random k-subset of {0..n-1}, sorted.
    std::vector<std::uint32_t> sample_subset(std::uint32_t n, std::uint32_t k);

    // Uniform random permutation of {0..n-1}.
    std::vector<std::uint32_t> permutation(std::uint32_t n);

private:
    std::mt19937_64 eng_;
};

} // namespace ldmds
