#pragma once

#include <cstdint>
#include <vector>

namespace ldmds {

// C(n, k), saturating at UINT64_MAX instead of overflowing.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Subsets are kept as sorted index vectors and enumerated in colexicographic
// order: {0,1,..,k-1} first, each step increments the smallest element that
// can move.  Colex rank is the enumeration position, which lets sweeps be
// chunked deterministically and failures reported reproducibly.

std::vector<std::uint32_t> first_subset(std::uint32_t k);
// Advances to the colex successor among subsets of {0..n-1}; returns false
// (leaving the subset unspecified) after the last one.
bool next_subset_colex(std::vector<std::uint32_t>& subset, std::uint32_t n);
std::uint64_t subset_colex_rank(const std::vector<std::uint32_t>& subset);
std::vector<std::uint32_t> subset_colex_unrank(std::uint64_t rank,
                                               std::uint32_t k,
                                               std::uint32_t n);

} // namespace ldmds
