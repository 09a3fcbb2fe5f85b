#pragma once

#include <cstdint>
#include <vector>

#include "ldmds/matrix.hpp"

namespace ldmds {

// Parameters of a vertical [n, k] array code over GF(q).  Each of the n
// nodes stores one array column of m data symbols and p parity symbols;
// any r = n - k node erasures are repairable.  Valid parameters satisfy
// n = k + r, p*k = m*r, and q prime.  The minimal column split for given
// (k, r) is m = k/gcd(k,r), p = r/gcd(k,r); multiples of it are the
// extended codes.
struct CodeParams {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t r = 0;
    std::uint32_t m = 0;
    std::uint32_t p = 0;
    std::uint32_t q = 0;

    // Minimal (m, p) for the given (n, r); throws InvalidParamsError unless
    // 1 <= r < n and q is an admissible prime.
    static CodeParams create(std::uint32_t n, std::uint32_t r, std::uint32_t q);
    // Scale >= 1 multiplies the minimal column split.
    static CodeParams create_scaled(std::uint32_t n, std::uint32_t r,
                                    std::uint32_t q, std::uint32_t scale);

    std::uint32_t column_height() const { return m + p; }
    std::uint32_t data_symbols() const { return n * m; }
    std::uint32_t parity_symbols() const { return n * p; }

    // Rechecks every invariant; throws InvalidParamsError on violation.
    void validate() const;

    bool operator==(const CodeParams& rhs) const = default;
};

// Minimal parameters with q the smallest prime >= n, large enough for the
// default (Cauchy) coefficient matrix.
CodeParams derive_params(std::uint32_t n, std::uint32_t r);

// Position of one array cell.
struct Cell {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    bool operator==(const Cell& rhs) const = default;
};

// What a given array cell holds: data symbol i or parity symbol i of its
// column's node.
struct CellRef {
    bool is_parity = false;
    std::uint32_t symbol = 0;
    bool operator==(const CellRef& rhs) const = default;
};

// Diagonal placement of the (m+p) x n array.  Data symbol i of node j sits
// at row (i + j*m) mod (m+p); parity symbol i of node j at row
// (j*m - i - 1) mod (m+p).  The two families tile the array exactly, so
// every row holds k data cells and r parity cells.
class ArrayLayout {
public:
    explicit ArrayLayout(const CodeParams& params);

    const CodeParams& params() const { return params_; }

    Cell data_cell(std::uint32_t i, std::uint32_t j) const;
    Cell parity_cell(std::uint32_t i, std::uint32_t j) const;
    // Inverse map; row < m+p, col < n.
    CellRef cell(std::uint32_t row, std::uint32_t col) const;

private:
    CodeParams params_;
    std::vector<CellRef> grid_;
};

ArrayLayout build_layout(const CodeParams& params);

// k x r coefficient matrix with all square submatrices (of every size)
// nonsingular, built from a Cauchy matrix on k + r distinct field points.
// Throws FieldTooSmallError when q < k + r.
Matrix cauchy_totally_nonsingular(std::uint32_t k, std::uint32_t r,
                                  const PrimeField& field);

// Fixed 5 x 3 coefficient matrix over GF(7) for the n = 8, r = 3 code used
// throughout the tests.  Smaller field than the Cauchy default admits.
Matrix reference_a_tilde_n8_r3();

// (m+p) x (m+p) reversal matrix: exactly the antidiagonal entries
// (i + j + 1) mod (m+p) == 0 are one.
Matrix build_d_matrix(std::uint32_t m, std::uint32_t p, const PrimeField& field);

// Systematic generator of the code in the form (I | A), kept as its
// nonsystematic part A together with the factors it is built from.
//
// Symbol vectors are grouped by node: data symbol i of node j is vector
// position j*m + i, parity symbol i of node j is position j*p + i.  Under
// that ordering A equals kron(a_tilde, D).  Carved along node boundaries
// instead, it is an n x n grid of m x p blocks A_{ij} (block() below) with
// zero diagonal: node j's parities never depend on its own data.
struct GeneratorA {
    CodeParams params;
    Matrix a_tilde; // k x r
    Matrix a_full;  // n*m x n*p

    Matrix block(std::uint32_t i, std::uint32_t j) const;
    bool block_is_zero(std::uint32_t i, std::uint32_t j) const;
};

// Builds the generator from a coefficient matrix; a_tilde must be k x r
// over GF(q).  Throws DimensionError or FieldMismatchError otherwise.
GeneratorA build_generator(const CodeParams& params, const Matrix& a_tilde);

// Predicted block support: whether block (i, j) of A is nonzero, from the
// parameters alone.  Block (i, j) vanishes exactly when (i - j) * p is
// divisible by m + p.
bool block_support(const CodeParams& params, std::uint32_t i, std::uint32_t j);

// Same code contents with every node's column scaled to a*m data and a*p
// parity symbols.  Keeps the coefficient matrix; only the block size grows.
GeneratorA extend_code(const GeneratorA& gen, std::uint32_t scale);

// Dual code: an [n, r] lowest-density code whose nonsystematic part is
// -transpose(A).  Data and parity roles swap, so m and p swap.
GeneratorA dual_code(const GeneratorA& gen);

} // namespace ldmds
