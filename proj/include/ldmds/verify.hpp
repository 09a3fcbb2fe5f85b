#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ldmds/construct.hpp"

namespace ldmds {

// Exact reduced fraction.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t num, std::int64_t den);
    bool operator==(const Rational& rhs) const = default;
};

// Outcome of checking one code instance.  failing_pattern is present exactly
// when is_mds is false and names the first failing node set in colex order.
struct VerificationReport {
    bool is_mds = false;
    std::optional<std::vector<std::uint32_t>> failing_pattern;
    std::vector<std::uint32_t> row_weights; // nonzeros per row of A
    std::vector<std::uint32_t> col_weights; // nonzeros per column of A
    bool is_lowest_density = false;
    Rational kappa{0, 1};
    bool exhaustive = false;
    std::uint64_t patterns_checked = 0;
    std::uint64_t patterns_total = 0;
};

// Whether (n, k, m, p) satisfies the array-code consistency equation
// p*k == m*r with r = n - k.
bool check_params(std::uint32_t n, std::uint32_t k, std::uint32_t m, std::uint32_t p);

// Data symbols per column slot, n*m / (m+p), as an exact fraction.  Equals
// k exactly when the parameters are consistent.
Rational normalized_dimension(const CodeParams& params);

// 0/1 support pattern of a matrix, for structural (value-free) tests.
struct SupportPattern {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> bits; // row-major

    static SupportPattern zero(std::size_t rows, std::size_t cols);
    static SupportPattern of_matrix(const Matrix& m);

    bool get(std::size_t r, std::size_t c) const { return bits[r * cols + c] != 0; }
    void set(std::size_t r, std::size_t c, bool v) { bits[r * cols + c] = v ? 1 : 0; }
};

// Size of a maximum matching between rows and columns of the pattern.
std::size_t max_bipartite_matching(const SupportPattern& pattern);

// A square pattern is structurally singular when every matrix with that
// support is singular, i.e. when rows cannot be matched to columns through
// supported entries.
bool structurally_singular(const SupportPattern& pattern);

// Checks that every square submatrix of a, of every size, is nonsingular.
// The number of submatrices must not exceed the budget, else
// BudgetExceededError.
bool totally_nonsingular(const Matrix& a, std::uint64_t budget = 1000000);

// Decides the erasure-correction property by enumerating all C(n, r) failure
// patterns in colex order and testing the corresponding submatrix of A for
// invertibility.  Deterministic: the reported failing pattern is the first
// in colex order regardless of worker count.  Throws BudgetExceededError
// when C(n, r) exceeds the budget.
VerificationReport check_mds_exhaustive(const GeneratorA& gen,
                                        std::uint64_t budget = 1000000,
                                        unsigned workers = 0);

// Same test on `samples` patterns drawn uniformly with a seeded RNG.  A
// found failure is still a proof of non-MDS; a clean run is only evidence.
VerificationReport check_mds_sampled(const GeneratorA& gen, std::uint64_t samples,
                                     std::uint64_t seed);

// Checks the density bound: an MDS instance needs at least r nonzeros in
// every row of A and k in every column; equality everywhere is lowest
// density.  Fills weights and kappa; does not decide is_mds.
VerificationReport check_lowest_density(const GeneratorA& gen);

} // namespace ldmds
