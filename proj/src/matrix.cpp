#include "ldmds/matrix.hpp"

#include <string>

namespace ldmds {

namespace {

std::string shape(const Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) {
        throw FieldMismatchError("matrices over GF(" +
                                 std::to_string(a.field().order()) + ") and GF(" +
                                 std::to_string(b.field().order()) + ")");
    }
}

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("matrix shapes " + shape(a) + " and " + shape(b) +
                             " differ");
    }
}

} // namespace

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1 % field.order());
    return m;
}

Matrix Matrix::from_rows(PrimeField field,
                         const std::vector<std::vector<std::uint32_t>>& rows) {
    std::size_t nr = rows.size();
    std::size_t nc = nr == 0 ? 0 : rows[0].size();
    Matrix m(field, nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) {
            throw DimensionError("ragged row list: row " + std::to_string(i) +
                                 " has " + std::to_string(rows[i].size()) +
                                 " entries, expected " + std::to_string(nc));
        }
        for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, std::uint32_t value) {
    if (value >= field_.order()) {
        throw InvalidParamsError("entry " + std::to_string(value) +
                                 " is not a residue mod " +
                                 std::to_string(field_.order()));
    }
    entries_[r * cols_ + c] = value;
}

FieldElement Matrix::at(std::size_t r, std::size_t c) const {
    return FieldElement(raw(r, c), field_.order());
}

std::vector<std::uint32_t> Matrix::row(std::size_t r) const {
    return std::vector<std::uint32_t>(entries_.begin() + r * cols_,
                                      entries_.begin() + (r + 1) * cols_);
}

std::vector<std::uint32_t> Matrix::col(std::size_t c) const {
    std::vector<std::uint32_t> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = raw(i, c);
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
           entries_ == rhs.entries_;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) {
        throw DimensionError("cannot multiply " + shape(a) + " by " + shape(b));
    }
    const PrimeField& f = a.field();
    const std::uint64_t q = f.order();
    Matrix out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::uint64_t aik = a.raw(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                std::uint64_t acc = out.raw(i, j) + (aik * b.raw(k, j)) % q;
                out.set(i, j, static_cast<std::uint32_t>(acc >= q ? acc - q : acc));
            }
        }
    }
    return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    require_same_shape(a, b);
    Matrix out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.set(i, j, a.field().add(a.raw(i, j), b.raw(i, j)));
    return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    require_same_shape(a, b);
    Matrix out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.set(i, j, a.field().sub(a.raw(i, j), b.raw(i, j)));
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.set(j, i, a.raw(i, j));
    return out;
}

Matrix negate(const Matrix& a) {
    Matrix out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.set(i, j, a.field().neg(a.raw(i, j)));
    return out;
}

Matrix mat_inv(const Matrix& a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("cannot invert non-square " + shape(a) + " matrix");
    }
    const PrimeField& f = a.field();
    const std::size_t n = a.rows();
    Matrix work = a;
    Matrix inv = Matrix::identity(f, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work.raw(pivot, col) == 0) ++pivot;
        if (pivot == n) {
            throw SingularMatrixError("matrix of size " + shape(a) +
                                      " is singular at column " +
                                      std::to_string(col));
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::uint32_t tmp = work.raw(col, j);
                work.set(col, j, work.raw(pivot, j));
                work.set(pivot, j, tmp);
                tmp = inv.raw(col, j);
                inv.set(col, j, inv.raw(pivot, j));
                inv.set(pivot, j, tmp);
            }
        }
        std::uint32_t scale = f.inv(work.raw(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            work.set(col, j, f.mul(work.raw(col, j), scale));
            inv.set(col, j, f.mul(inv.raw(col, j), scale));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            std::uint32_t factor = work.raw(i, col);
            if (factor == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                work.set(i, j, f.sub(work.raw(i, j), f.mul(factor, work.raw(col, j))));
                inv.set(i, j, f.sub(inv.raw(i, j), f.mul(factor, inv.raw(col, j))));
            }
        }
    }
    return inv;
}

std::size_t rank_destructive(Matrix& a) {
    const PrimeField& f = a.field();
    const std::size_t nr = a.rows();
    const std::size_t nc = a.cols();
    std::size_t rk = 0;
    for (std::size_t col = 0; col < nc && rk < nr; ++col) {
        std::size_t pivot = rk;
        while (pivot < nr && a.raw(pivot, col) == 0) ++pivot;
        if (pivot == nr) continue;
        if (pivot != rk) {
            for (std::size_t j = col; j < nc; ++j) {
                std::uint32_t tmp = a.raw(rk, j);
                a.set(rk, j, a.raw(pivot, j));
                a.set(pivot, j, tmp);
            }
        }
        std::uint32_t inv_p = f.inv(a.raw(rk, col));
        for (std::size_t i = rk + 1; i < nr; ++i) {
            std::uint32_t factor = a.raw(i, col);
            if (factor == 0) continue;
            std::uint32_t scale = f.mul(factor, inv_p);
            for (std::size_t j = col; j < nc; ++j) {
                a.set(i, j, f.sub(a.raw(i, j), f.mul(scale, a.raw(rk, j))));
            }
        }
        ++rk;
    }
    return rk;
}

std::size_t rank(const Matrix& a) {
    Matrix work = a;
    return rank_destructive(work);
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    const PrimeField& f = a.field();
    Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::uint32_t aij = a.raw(i, j);
            if (aij == 0) continue;
            for (std::size_t u = 0; u < b.rows(); ++u)
                for (std::size_t v = 0; v < b.cols(); ++v)
                    out.set(i * b.rows() + u, j * b.cols() + v,
                            f.mul(aij, b.raw(u, v)));
        }
    }
    return out;
}

Matrix submatrix(const Matrix& a,
                 const std::vector<std::size_t>& row_idx,
                 const std::vector<std::size_t>& col_idx) {
    for (std::size_t r : row_idx) {
        if (r >= a.rows())
            throw DimensionError("row index " + std::to_string(r) +
                                 " out of range for " + shape(a));
    }
    for (std::size_t c : col_idx) {
        if (c >= a.cols())
            throw DimensionError("column index " + std::to_string(c) +
                                 " out of range for " + shape(a));
    }
    Matrix out(a.field(), row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            out.set(i, j, a.raw(row_idx[i], col_idx[j]));
    return out;
}

std::vector<std::uint32_t> row_vec_mul(const std::vector<std::uint32_t>& v,
                                       const Matrix& a) {
    if (v.size() != a.rows()) {
        throw DimensionError("vector of length " + std::to_string(v.size()) +
                             " times " + shape(a) + " matrix");
    }
    const PrimeField& f = a.field();
    const std::uint64_t q = f.order();
    std::vector<std::uint32_t> out(a.cols(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        std::uint64_t vk = v[k];
        if (vk == 0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::uint64_t acc = out[j] + (vk * a.raw(k, j)) % q;
            out[j] = static_cast<std::uint32_t>(acc >= q ? acc - q : acc);
        }
    }
    return out;
}

} // namespace ldmds
