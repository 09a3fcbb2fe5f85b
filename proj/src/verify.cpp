#include "ldmds/verify.hpp"

#include <atomic>
#include <numeric>
#include <string>
#include <thread>

#include "ldmds/combinatorics.hpp"
#include "ldmds/rng.hpp"

namespace ldmds {

Rational Rational::of(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InvalidParamsError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

bool check_params(std::uint32_t n, std::uint32_t k, std::uint32_t m, std::uint32_t p) {
    if (n < 2 || k < 1 || k >= n || m < 1 || p < 1) return false;
    std::uint32_t r = n - k;
    return static_cast<std::uint64_t>(p) * k == static_cast<std::uint64_t>(m) * r;
}

Rational normalized_dimension(const CodeParams& params) {
    return Rational::of(static_cast<std::int64_t>(params.n) * params.m,
                        params.column_height());
}

SupportPattern SupportPattern::zero(std::size_t rows, std::size_t cols) {
    return SupportPattern{rows, cols, std::vector<std::uint8_t>(rows * cols, 0)};
}

SupportPattern SupportPattern::of_matrix(const Matrix& m) {
    SupportPattern s = zero(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.raw(i, j) != 0) s.set(i, j, true);
    return s;
}

namespace {

// Augmenting path from one row, Kuhn's algorithm.
bool try_augment(const SupportPattern& pat, std::size_t row,
                 std::vector<std::int64_t>& col_owner, std::vector<char>& visited) {
    for (std::size_t c = 0; c < pat.cols; ++c) {
        if (!pat.get(row, c) || visited[c]) continue;
        visited[c] = 1;
        if (col_owner[c] < 0 ||
            try_augment(pat, static_cast<std::size_t>(col_owner[c]), col_owner, visited)) {
            col_owner[c] = static_cast<std::int64_t>(row);
            return true;
        }
    }
    return false;
}

} // namespace

std::size_t max_bipartite_matching(const SupportPattern& pattern) {
    std::vector<std::int64_t> col_owner(pattern.cols, -1);
    std::size_t matched = 0;
    std::vector<char> visited(pattern.cols);
    for (std::size_t row = 0; row < pattern.rows; ++row) {
        std::fill(visited.begin(), visited.end(), 0);
        if (try_augment(pattern, row, col_owner, visited)) ++matched;
    }
    return matched;
}

bool structurally_singular(const SupportPattern& pattern) {
    if (pattern.rows != pattern.cols) {
        throw DimensionError("structural singularity is defined for square patterns");
    }
    return max_bipartite_matching(pattern) < pattern.rows;
}

bool totally_nonsingular(const Matrix& a, std::uint64_t budget) {
    const std::size_t max_size = a.rows() < a.cols() ? a.rows() : a.cols();
    std::uint64_t total = 0;
    for (std::size_t s = 1; s <= max_size; ++s) {
        std::uint64_t c = binomial(a.rows(), s);
        std::uint64_t d = binomial(a.cols(), s);
        if (c != 0 && d > (UINT64_MAX - total) / c) {
            total = UINT64_MAX;
            break;
        }
        total += c * d;
    }
    if (total > budget) {
        throw BudgetExceededError("checking " + std::to_string(total) +
                                  " submatrices exceeds budget " +
                                  std::to_string(budget));
    }
    for (std::size_t s = 1; s <= max_size; ++s) {
        std::vector<std::uint32_t> rsub = first_subset(static_cast<std::uint32_t>(s));
        do {
            std::vector<std::size_t> rows(rsub.begin(), rsub.end());
            std::vector<std::uint32_t> csub = first_subset(static_cast<std::uint32_t>(s));
            do {
                std::vector<std::size_t> cols(csub.begin(), csub.end());
                Matrix sub = submatrix(a, rows, cols);
                if (rank_destructive(sub) < s) return false;
            } while (next_subset_colex(csub, static_cast<std::uint32_t>(a.cols())));
        } while (next_subset_colex(rsub, static_cast<std::uint32_t>(a.rows())));
    }
    return true;
}

namespace {

void fill_density(VerificationReport& report, const GeneratorA& gen) {
    const Matrix& a = gen.a_full;
    report.row_weights.assign(a.rows(), 0);
    report.col_weights.assign(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.raw(i, j) != 0) {
                ++report.row_weights[i];
                ++report.col_weights[j];
            }
        }
    }
    report.is_lowest_density = true;
    for (std::uint32_t w : report.row_weights) {
        if (w != gen.params.r) report.is_lowest_density = false;
    }
    for (std::uint32_t w : report.col_weights) {
        if (w != gen.params.k) report.is_lowest_density = false;
    }
    report.kappa = normalized_dimension(gen.params);
}

// Fills `scratch` (r*m x k*p) with the submatrix of A taken from block rows
// in `failed` and block columns in the complementary node set, then tests
// invertibility by rank.  Returns true when the pattern is recoverable.
bool pattern_recoverable(const GeneratorA& gen,
                         const std::vector<std::uint32_t>& failed, Matrix& scratch) {
    const CodeParams& cp = gen.params;
    std::vector<std::uint32_t> survivors;
    survivors.reserve(cp.k);
    {
        std::size_t t = 0;
        for (std::uint32_t j = 0; j < cp.n; ++j) {
            if (t < failed.size() && failed[t] == j) {
                ++t;
            } else {
                survivors.push_back(j);
            }
        }
    }
    std::size_t row = 0;
    for (std::uint32_t i : failed) {
        for (std::uint32_t u = 0; u < cp.m; ++u, ++row) {
            std::size_t col = 0;
            for (std::uint32_t j : survivors) {
                for (std::uint32_t v = 0; v < cp.p; ++v, ++col) {
                    scratch.set(row, static_cast<std::size_t>(col),
                                gen.a_full.raw(static_cast<std::size_t>(i) * cp.m + u,
                                               static_cast<std::size_t>(j) * cp.p + v));
                }
            }
        }
    }
    return rank_destructive(scratch) == scratch.rows();
}

} // namespace

VerificationReport check_mds_exhaustive(const GeneratorA& gen, std::uint64_t budget,
                                        unsigned workers) {
    const CodeParams& cp = gen.params;
    cp.validate();
    const std::uint64_t total = binomial(cp.n, cp.r);
    if (total > budget) {
        throw BudgetExceededError("enumerating " + std::to_string(total) +
                                  " failure patterns exceeds budget " +
                                  std::to_string(budget));
    }
    if (workers == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        if (hw == 0) hw = 1;
        workers = total >= 4096 ? (hw < 8 ? hw : 8) : 1;
    }
    if (workers > total) workers = static_cast<unsigned>(total);

    std::atomic<std::uint64_t> first_failure{UINT64_MAX};
    auto sweep = [&](std::uint64_t lo, std::uint64_t hi) {
        const PrimeField f(cp.q);
        Matrix scratch(f, static_cast<std::size_t>(cp.r) * cp.m,
                       static_cast<std::size_t>(cp.k) * cp.p);
        std::vector<std::uint32_t> failed = subset_colex_unrank(lo, cp.r, cp.n);
        for (std::uint64_t rk = lo; rk < hi; ++rk) {
            if (rk >= first_failure.load(std::memory_order_relaxed)) break;
            if (!pattern_recoverable(gen, failed, scratch)) {
                std::uint64_t cur = first_failure.load(std::memory_order_relaxed);
                while (rk < cur && !first_failure.compare_exchange_weak(
                                       cur, rk, std::memory_order_relaxed)) {
                }
                break;
            }
            if (rk + 1 < hi) next_subset_colex(failed, cp.n);
        }
    };

    if (workers <= 1) {
        sweep(0, total);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t lo = total * w / workers;
            std::uint64_t hi = total * (w + 1) / workers;
            pool.emplace_back(sweep, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    VerificationReport report;
    fill_density(report, gen);
    report.exhaustive = true;
    report.patterns_total = total;
    std::uint64_t failure = first_failure.load();
    if (failure == UINT64_MAX) {
        report.is_mds = true;
        report.patterns_checked = total;
    } else {
        report.is_mds = false;
        report.failing_pattern = subset_colex_unrank(failure, cp.r, cp.n);
        // Count as a sequential early-exit scan would.
        report.patterns_checked = failure + 1;
    }
    return report;
}

VerificationReport check_mds_sampled(const GeneratorA& gen, std::uint64_t samples,
                                     std::uint64_t seed) {
    const CodeParams& cp = gen.params;
    cp.validate();
    const PrimeField f(cp.q);
    DetRng rng(seed);
    Matrix scratch(f, static_cast<std::size_t>(cp.r) * cp.m,
                   static_cast<std::size_t>(cp.k) * cp.p);
    VerificationReport report;
    fill_density(report, gen);
    report.exhaustive = false;
    report.patterns_total = binomial(cp.n, cp.r);
    report.is_mds = true;
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::vector<std::uint32_t> failed = rng.sample_subset(cp.n, cp.r);
        ++report.patterns_checked;
        if (!pattern_recoverable(gen, failed, scratch)) {
            report.is_mds = false;
            report.failing_pattern = failed;
            break;
        }
    }
    return report;
}

VerificationReport check_lowest_density(const GeneratorA& gen) {
    gen.params.validate();
    VerificationReport report;
    fill_density(report, gen);
    return report;
}

} // namespace ldmds
