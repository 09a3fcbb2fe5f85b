#include "ldmds/construct.hpp"

#include <numeric>
#include <string>

namespace ldmds {

CodeParams CodeParams::create(std::uint32_t n, std::uint32_t r, std::uint32_t q) {
    return create_scaled(n, r, q, 1);
}

CodeParams CodeParams::create_scaled(std::uint32_t n, std::uint32_t r,
                                     std::uint32_t q, std::uint32_t scale) {
    if (n < 2 || r < 1 || r >= n) {
        throw InvalidParamsError("need 1 <= r < n, got n=" + std::to_string(n) +
                                 " r=" + std::to_string(r));
    }
    if (scale < 1) {
        throw InvalidParamsError("column scale must be >= 1");
    }
    CodeParams cp;
    cp.n = n;
    cp.k = n - r;
    cp.r = r;
    std::uint32_t g = std::gcd(cp.k, r);
    cp.m = scale * (cp.k / g);
    cp.p = scale * (r / g);
    cp.q = q;
    cp.validate();
    return cp;
}

void CodeParams::validate() const {
    if (n < 2 || k < 1 || r < 1 || n != k + r) {
        throw InvalidParamsError("inconsistent node counts n=" + std::to_string(n) +
                                 " k=" + std::to_string(k) + " r=" + std::to_string(r));
    }
    if (m < 1 || p < 1 ||
        static_cast<std::uint64_t>(p) * k != static_cast<std::uint64_t>(m) * r) {
        throw InvalidParamsError("column split m=" + std::to_string(m) +
                                 " p=" + std::to_string(p) +
                                 " violates p*k == m*r for k=" + std::to_string(k) +
                                 " r=" + std::to_string(r));
    }
    PrimeField check(q); // validates q
}

CodeParams derive_params(std::uint32_t n, std::uint32_t r) {
    if (n < 2 || r < 1 || r >= n) {
        throw InvalidParamsError("need 1 <= r < n, got n=" + std::to_string(n) +
                                 " r=" + std::to_string(r));
    }
    return CodeParams::create(n, r, smallest_prime_geq(n));
}

ArrayLayout::ArrayLayout(const CodeParams& params) : params_(params) {
    params_.validate();
    const std::uint32_t h = params_.column_height();
    const std::uint32_t n = params_.n;
    grid_.assign(static_cast<std::size_t>(h) * n, CellRef{});
    std::vector<bool> filled(grid_.size(), false);
    for (std::uint32_t j = 0; j < n; ++j) {
        for (std::uint32_t i = 0; i < params_.m; ++i) {
            Cell c = data_cell(i, j);
            std::size_t idx = static_cast<std::size_t>(c.row) * n + c.col;
            if (filled[idx]) {
                throw Error("layout cell collision at row " + std::to_string(c.row) +
                            " col " + std::to_string(c.col));
            }
            filled[idx] = true;
            grid_[idx] = CellRef{false, i};
        }
        for (std::uint32_t i = 0; i < params_.p; ++i) {
            Cell c = parity_cell(i, j);
            std::size_t idx = static_cast<std::size_t>(c.row) * n + c.col;
            if (filled[idx]) {
                throw Error("layout cell collision at row " + std::to_string(c.row) +
                            " col " + std::to_string(c.col));
            }
            filled[idx] = true;
            grid_[idx] = CellRef{true, i};
        }
    }
    // The two placement families tile each column exactly.
    for (std::size_t idx = 0; idx < filled.size(); ++idx) {
        if (!filled[idx]) {
            throw Error("layout left cell " + std::to_string(idx) + " unassigned");
        }
    }
}

Cell ArrayLayout::data_cell(std::uint32_t i, std::uint32_t j) const {
    if (i >= params_.m || j >= params_.n) {
        throw InvalidParamsError("data symbol (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") out of range");
    }
    const std::uint32_t h = params_.column_height();
    std::uint64_t row = (static_cast<std::uint64_t>(j) * params_.m + i) % h;
    return Cell{static_cast<std::uint32_t>(row), j};
}

Cell ArrayLayout::parity_cell(std::uint32_t i, std::uint32_t j) const {
    if (i >= params_.p || j >= params_.n) {
        throw InvalidParamsError("parity symbol (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") out of range");
    }
    const std::uint32_t h = params_.column_height();
    // (j*m - i - 1) mod h, kept in unsigned arithmetic; i + 1 <= p < h.
    std::uint64_t row = (static_cast<std::uint64_t>(j) * params_.m % h + h - (i + 1)) % h;
    return Cell{static_cast<std::uint32_t>(row), j};
}

CellRef ArrayLayout::cell(std::uint32_t row, std::uint32_t col) const {
    if (row >= params_.column_height() || col >= params_.n) {
        throw InvalidParamsError("cell (" + std::to_string(row) + "," +
                                 std::to_string(col) + ") out of range");
    }
    return grid_[static_cast<std::size_t>(row) * params_.n + col];
}

ArrayLayout build_layout(const CodeParams& params) {
    return ArrayLayout(params);
}

Matrix cauchy_totally_nonsingular(std::uint32_t k, std::uint32_t r,
                                  const PrimeField& field) {
    if (k < 1 || r < 1) {
        throw InvalidParamsError("coefficient matrix needs k >= 1 and r >= 1");
    }
    const std::uint64_t needed = static_cast<std::uint64_t>(k) + r;
    if (field.order() < needed) {
        throw FieldTooSmallError("Cauchy construction needs q >= k + r = " +
                                 std::to_string(needed) + ", got q = " +
                                 std::to_string(field.order()));
    }
    // Entries 1/(x_i - y_j) with x_i = i and y_j = k + j, all 2k*r points
    // distinct, so every square submatrix is a Cauchy matrix and nonsingular.
    Matrix a(field, k, r);
    for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = 0; j < r; ++j) {
            std::uint32_t diff = field.sub(i, k + j);
            a.set(i, j, field.inv(diff));
        }
    }
    return a;
}

Matrix reference_a_tilde_n8_r3() {
    return Matrix::from_rows(PrimeField(7), {{1, 1, 1},
                                             {1, 3, 6},
                                             {1, 4, 2},
                                             {1, 6, 4},
                                             {1, 2, 5}});
}

Matrix build_d_matrix(std::uint32_t m, std::uint32_t p, const PrimeField& field) {
    const std::uint32_t h = m + p;
    if (h < 1) throw InvalidParamsError("column height must be >= 1");
    Matrix d(field, h, h);
    for (std::uint32_t i = 0; i < h; ++i) {
        for (std::uint32_t j = 0; j < h; ++j) {
            if ((i + j + 1) % h == 0) d.set(i, j, 1 % field.order());
        }
    }
    return d;
}

Matrix GeneratorA::block(std::uint32_t i, std::uint32_t j) const {
    if (i >= params.n || j >= params.n) {
        throw InvalidParamsError("block index out of range");
    }
    std::vector<std::size_t> rows(params.m), cols(params.p);
    for (std::uint32_t u = 0; u < params.m; ++u)
        rows[u] = static_cast<std::size_t>(i) * params.m + u;
    for (std::uint32_t v = 0; v < params.p; ++v)
        cols[v] = static_cast<std::size_t>(j) * params.p + v;
    return submatrix(a_full, rows, cols);
}

bool GeneratorA::block_is_zero(std::uint32_t i, std::uint32_t j) const {
    for (std::uint32_t u = 0; u < params.m; ++u) {
        for (std::uint32_t v = 0; v < params.p; ++v) {
            if (a_full.raw(static_cast<std::size_t>(i) * params.m + u,
                           static_cast<std::size_t>(j) * params.p + v) != 0) {
                return false;
            }
        }
    }
    return true;
}

GeneratorA build_generator(const CodeParams& params, const Matrix& a_tilde) {
    params.validate();
    if (a_tilde.rows() != params.k || a_tilde.cols() != params.r) {
        throw DimensionError("coefficient matrix must be " + std::to_string(params.k) +
                             "x" + std::to_string(params.r) + ", got " +
                             std::to_string(a_tilde.rows()) + "x" +
                             std::to_string(a_tilde.cols()));
    }
    PrimeField f(params.q);
    if (a_tilde.field() != f) {
        throw FieldMismatchError("coefficient matrix over GF(" +
                                 std::to_string(a_tilde.field().order()) +
                                 "), code over GF(" + std::to_string(params.q) + ")");
    }
    Matrix d = build_d_matrix(params.m, params.p, f);
    return GeneratorA{params, a_tilde, kronecker(a_tilde, d)};
}

bool block_support(const CodeParams& params, std::uint32_t i, std::uint32_t j) {
    if (i >= params.n || j >= params.n) {
        throw InvalidParamsError("block index out of range");
    }
    std::uint32_t diff = i >= j ? i - j : j - i;
    return (static_cast<std::uint64_t>(diff) * params.p) % params.column_height() != 0;
}

GeneratorA extend_code(const GeneratorA& gen, std::uint32_t scale) {
    if (scale < 1) throw InvalidParamsError("column scale must be >= 1");
    CodeParams cp = gen.params;
    cp.m *= scale;
    cp.p *= scale;
    cp.validate();
    return build_generator(cp, gen.a_tilde);
}

GeneratorA dual_code(const GeneratorA& gen) {
    CodeParams cp;
    cp.n = gen.params.n;
    cp.k = gen.params.r;
    cp.r = gen.params.k;
    cp.m = gen.params.p;
    cp.p = gen.params.m;
    cp.q = gen.params.q;
    cp.validate();
    return build_generator(cp, negate(transpose(gen.a_tilde)));
}

} // namespace ldmds
