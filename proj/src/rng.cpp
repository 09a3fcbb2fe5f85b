#include "ldmds/rng.hpp"

#include <algorithm>

#include "ldmds/errors.hpp"

namespace ldmds {

std::uint32_t DetRng::below(std::uint32_t bound) {
    if (bound == 0) throw InvalidParamsError("random bound must be positive");
    // Rejection keeps the draw unbiased for bounds that do not divide 2^64.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return static_cast<std::uint32_t>(x % bound);
}

double DetRng::unit_real() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

std::vector<std::uint32_t> DetRng::sample_subset(std::uint32_t n, std::uint32_t k) {
    if (k > n) throw InvalidParamsError("cannot sample more elements than n");
    std::vector<std::uint32_t> pool(n);
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
    for (std::uint32_t i = 0; i < k; ++i) {
        std::uint32_t j = i + below(n - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

std::vector<std::uint32_t> DetRng::permutation(std::uint32_t n) {
    std::vector<std::uint32_t> out(n);
    for (std::uint32_t i = 0; i < n; ++i) out[i] = i;
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
        std::uint32_t j = i + below(n - i);
        std::swap(out[i], out[j]);
    }
    return out;
}

} // namespace ldmds
