#include "ldmds/combinatorics.hpp"

#include <limits>

namespace ldmds {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t factor = n - k + i;
        // result * factor / i is exact; guard the multiply.
        std::uint64_t g = result / i;
        std::uint64_t rem = result % i;
        std::uint64_t part = rem * factor / i;
        if (g != 0 && factor > (std::numeric_limits<std::uint64_t>::max() - part) / g) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        result = g * factor + part;
    }
    return result;
}

std::vector<std::uint32_t> first_subset(std::uint32_t k) {
    std::vector<std::uint32_t> s(k);
    for (std::uint32_t i = 0; i < k; ++i) s[i] = i;
    return s;
}

bool next_subset_colex(std::vector<std::uint32_t>& subset, std::uint32_t n) {
    const std::size_t k = subset.size();
    for (std::size_t i = 0; i < k; ++i) {
        std::uint32_t limit = (i + 1 < k) ? subset[i + 1] : n;
        if (subset[i] + 1 < limit) {
            ++subset[i];
            for (std::size_t j = 0; j < i; ++j) subset[j] = static_cast<std::uint32_t>(j);
            return true;
        }
    }
    return false;
}

std::uint64_t subset_colex_rank(const std::vector<std::uint32_t>& subset) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        r += binomial(subset[i], static_cast<std::uint64_t>(i) + 1);
    }
    return r;
}

std::vector<std::uint32_t> subset_colex_unrank(std::uint64_t rank,
                                               std::uint32_t k,
                                               std::uint32_t n) {
    std::vector<std::uint32_t> subset(k);
    std::uint32_t hi = n;
    for (std::uint32_t i = k; i > 0; --i) {
        // Largest v < hi with C(v, i) <= rank.  C(i-1, i) == 0 bounds the scan.
        std::uint32_t v = hi - 1;
        while (binomial(v, i) > rank) --v;
        subset[i - 1] = v;
        rank -= binomial(v, i);
        hi = v;
    }
    return subset;
}

} // namespace ldmds
