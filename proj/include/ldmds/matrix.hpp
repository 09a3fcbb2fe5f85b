#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ldmds/field.hpp"

namespace ldmds {

// Dense row-major matrix over a prime field.  Entries are stored as raw
// residues; entries.size() == rows*cols always holds.
class Matrix {
public:
    Matrix(PrimeField field, std::size_t rows, std::size_t cols);

    static Matrix identity(PrimeField field, std::size_t n);
    // Builds from row lists; every entry must already be a residue < q.
    static Matrix from_rows(PrimeField field,
                            const std::vector<std::vector<std::uint32_t>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    std::uint32_t raw(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, std::uint32_t value);
    FieldElement at(std::size_t r, std::size_t c) const;

    std::vector<std::uint32_t> row(std::size_t r) const;
    std::vector<std::uint32_t> col(std::size_t c) const;

    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> entries_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix negate(const Matrix& a);

// Inverse by Gauss-Jordan elimination.  Throws DimensionError for non-square
// input and SingularMatrixError when no inverse exists.
Matrix mat_inv(const Matrix& a);

std::size_t rank(const Matrix& a);
// Rank by in-place elimination; destroys the argument.  Lets pattern sweeps
// reuse one scratch matrix instead of allocating per pattern.
std::size_t rank_destructive(Matrix& a);

Matrix kronecker(const Matrix& a, const Matrix& b);

// Rows and columns picked by index lists, in the given order.
Matrix submatrix(const Matrix& a,
                 const std::vector<std::size_t>& row_idx,
                 const std::vector<std::size_t>& col_idx);

// Row vector times matrix; v.size() must equal a.rows().
std::vector<std::uint32_t> row_vec_mul(const std::vector<std::uint32_t>& v,
                                       const Matrix& a);

} // namespace ldmds
