#pragma once

#include <cstdint>
#include <vector>

#include "ldmds/construct.hpp"

namespace ldmds {

// m x n grid of data symbols; entry (i, j) is data symbol i of node j.
struct DataBlock {
    CodeParams params;
    std::vector<std::uint32_t> d; // row-major, size m*n

    static DataBlock zero(const CodeParams& params);

    std::uint32_t get(std::uint32_t i, std::uint32_t j) const;
    void set(std::uint32_t i, std::uint32_t j, std::uint32_t value);

    bool operator==(const DataBlock& rhs) const = default;
};

// Full (m+p) x n cell grid in layout order; entry (row, col) is the array
// cell, data and parity interleaved per the diagonal layout.
struct CodewordArray {
    CodeParams params;
    std::vector<std::uint32_t> cells; // row-major, size (m+p)*n

    static CodewordArray zero(const CodeParams& params);

    std::uint32_t get(std::uint32_t row, std::uint32_t col) const;
    void set(std::uint32_t row, std::uint32_t col, std::uint32_t value);

    bool operator==(const CodewordArray& rhs) const = default;
};

// Sorted list of distinct failed node indices.
struct ErasurePattern {
    std::vector<std::uint32_t> failed;

    // Sorts, deduplicates, and range-checks against n.
    static ErasurePattern of(std::vector<std::uint32_t> nodes, std::uint32_t n);

    bool contains(std::uint32_t node) const;
    std::vector<std::uint32_t> surviving(std::uint32_t n) const;
};

// Encodes by the row-local rule: in every array row, the vector of the k
// data cells (in column order) times the coefficient matrix gives the r
// parity cells (in column order).  Data cells are copied through unchanged.
CodewordArray encode(const GeneratorA& gen, const ArrayLayout& layout,
                     const DataBlock& data);

// Same codeword via the generator: parity vector = data vector * A, then
// scattered into the array.  Kept as an independently computed path.
CodewordArray encode_via_generator(const GeneratorA& gen, const ArrayLayout& layout,
                                   const DataBlock& data);

// Recovers all data symbols from the surviving columns.  Cells of failed
// nodes are never read.  Throws TooManyErasuresError when more than r nodes
// failed and UnrecoverableError when the survivors are inconsistent (which
// cannot happen for an intact codeword of an MDS instance).
DataBlock decode(const GeneratorA& gen, const ArrayLayout& layout,
                 const CodewordArray& cw, const ErasurePattern& erased);

// Same recovery done row by row: each array row is a short [n, k] code and
// is solved independently.  Kept as an independently computed path.
DataBlock decode_rowwise(const GeneratorA& gen, const ArrayLayout& layout,
                         const CodewordArray& cw, const ErasurePattern& erased);

} // namespace ldmds
