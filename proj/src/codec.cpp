#include "ldmds/codec.hpp"

#include <algorithm>
#include <string>

namespace ldmds {

namespace {

void require_residue(std::uint32_t value, std::uint32_t q) {
    if (value >= q) {
        throw InvalidParamsError("symbol " + std::to_string(value) +
                                 " is not a residue mod " + std::to_string(q));
    }
}

void require_same_params(const CodeParams& a, const CodeParams& b,
                         const char* what) {
    if (!(a == b)) {
        throw InvalidParamsError(std::string(what) +
                                 " built for different code parameters");
    }
}

} // namespace

DataBlock DataBlock::zero(const CodeParams& params) {
    params.validate();
    return DataBlock{params, std::vector<std::uint32_t>(
                                 static_cast<std::size_t>(params.m) * params.n, 0)};
}

std::uint32_t DataBlock::get(std::uint32_t i, std::uint32_t j) const {
    if (i >= params.m || j >= params.n) {
        throw InvalidParamsError("data symbol (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") out of range");
    }
    return d[static_cast<std::size_t>(i) * params.n + j];
}

void DataBlock::set(std::uint32_t i, std::uint32_t j, std::uint32_t value) {
    if (i >= params.m || j >= params.n) {
        throw InvalidParamsError("data symbol (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") out of range");
    }
    require_residue(value, params.q);
    d[static_cast<std::size_t>(i) * params.n + j] = value;
}

CodewordArray CodewordArray::zero(const CodeParams& params) {
    params.validate();
    return CodewordArray{params,
                         std::vector<std::uint32_t>(
                             static_cast<std::size_t>(params.column_height()) * params.n, 0)};
}

std::uint32_t CodewordArray::get(std::uint32_t row, std::uint32_t col) const {
    if (row >= params.column_height() || col >= params.n) {
        throw InvalidParamsError("cell (" + std::to_string(row) + "," +
                                 std::to_string(col) + ") out of range");
    }
    return cells[static_cast<std::size_t>(row) * params.n + col];
}

void CodewordArray::set(std::uint32_t row, std::uint32_t col, std::uint32_t value) {
    if (row >= params.column_height() || col >= params.n) {
        throw InvalidParamsError("cell (" + std::to_string(row) + "," +
                                 std::to_string(col) + ") out of range");
    }
    require_residue(value, params.q);
    cells[static_cast<std::size_t>(row) * params.n + col] = value;
}

ErasurePattern ErasurePattern::of(std::vector<std::uint32_t> nodes, std::uint32_t n) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    if (!nodes.empty() && nodes.back() >= n) {
        throw InvalidParamsError("failed node " + std::to_string(nodes.back()) +
                                 " out of range for n = " + std::to_string(n));
    }
    return ErasurePattern{std::move(nodes)};
}

bool ErasurePattern::contains(std::uint32_t node) const {
    return std::binary_search(failed.begin(), failed.end(), node);
}

std::vector<std::uint32_t> ErasurePattern::surviving(std::uint32_t n) const {
    std::vector<std::uint32_t> out;
    out.reserve(n - failed.size());
    for (std::uint32_t j = 0; j < n; ++j) {
        if (!contains(j)) out.push_back(j);
    }
    return out;
}

namespace {

// Data and parity cell columns of one array row, each in ascending column
// order.  Every row has exactly k data and r parity cells.
struct RowCells {
    std::vector<std::uint32_t> data_col;   // size k
    std::vector<std::uint32_t> data_sym;   // symbol index per data cell
    std::vector<std::uint32_t> parity_col; // size r
    std::vector<std::uint32_t> parity_sym;
};

RowCells row_cells(const ArrayLayout& layout, std::uint32_t row) {
    const CodeParams& cp = layout.params();
    RowCells rc;
    for (std::uint32_t j = 0; j < cp.n; ++j) {
        CellRef ref = layout.cell(row, j);
        if (ref.is_parity) {
            rc.parity_col.push_back(j);
            rc.parity_sym.push_back(ref.symbol);
        } else {
            rc.data_col.push_back(j);
            rc.data_sym.push_back(ref.symbol);
        }
    }
    return rc;
}

void check_encode_args(const GeneratorA& gen, const ArrayLayout& layout,
                       const DataBlock& data) {
    require_same_params(gen.params, layout.params(), "layout");
    require_same_params(gen.params, data.params, "data block");
    if (data.d.size() != static_cast<std::size_t>(gen.params.m) * gen.params.n) {
        throw InvalidParamsError("data block has wrong symbol count");
    }
    for (std::uint32_t v : data.d) require_residue(v, gen.params.q);
}

} // namespace

CodewordArray encode(const GeneratorA& gen, const ArrayLayout& layout,
                     const DataBlock& data) {
    check_encode_args(gen, layout, data);
    const CodeParams& cp = gen.params;
    CodewordArray cw = CodewordArray::zero(cp);
    std::vector<std::uint32_t> row_data(cp.k);
    for (std::uint32_t row = 0; row < cp.column_height(); ++row) {
        RowCells rc = row_cells(layout, row);
        for (std::uint32_t t = 0; t < cp.k; ++t) {
            row_data[t] = data.get(rc.data_sym[t], rc.data_col[t]);
            cw.set(row, rc.data_col[t], row_data[t]);
        }
        std::vector<std::uint32_t> parity = row_vec_mul(row_data, gen.a_tilde);
        for (std::uint32_t t = 0; t < cp.r; ++t) {
            cw.set(row, rc.parity_col[t], parity[t]);
        }
    }
    return cw;
}

CodewordArray encode_via_generator(const GeneratorA& gen, const ArrayLayout& layout,
                                   const DataBlock& data) {
    check_encode_args(gen, layout, data);
    const CodeParams& cp = gen.params;
    // Node-major flattening: data symbol i of node j at position j*m + i.
    std::vector<std::uint32_t> vec_d(cp.data_symbols());
    for (std::uint32_t j = 0; j < cp.n; ++j)
        for (std::uint32_t i = 0; i < cp.m; ++i)
            vec_d[static_cast<std::size_t>(j) * cp.m + i] = data.get(i, j);
    std::vector<std::uint32_t> vec_f = row_vec_mul(vec_d, gen.a_full);
    CodewordArray cw = CodewordArray::zero(cp);
    for (std::uint32_t j = 0; j < cp.n; ++j) {
        for (std::uint32_t i = 0; i < cp.m; ++i) {
            Cell c = layout.data_cell(i, j);
            cw.set(c.row, c.col, data.get(i, j));
        }
        for (std::uint32_t i = 0; i < cp.p; ++i) {
            Cell c = layout.parity_cell(i, j);
            cw.set(c.row, c.col, vec_f[static_cast<std::size_t>(j) * cp.p + i]);
        }
    }
    return cw;
}

namespace {

void check_decode_args(const GeneratorA& gen, const ArrayLayout& layout,
                       const CodewordArray& cw, const ErasurePattern& erased) {
    require_same_params(gen.params, layout.params(), "layout");
    require_same_params(gen.params, cw.params, "codeword");
    if (cw.cells.size() !=
        static_cast<std::size_t>(gen.params.column_height()) * gen.params.n) {
        throw InvalidParamsError("codeword has wrong cell count");
    }
    if (!erased.failed.empty() && erased.failed.back() >= gen.params.n) {
        throw InvalidParamsError("failed node index out of range");
    }
    if (erased.failed.size() > gen.params.r) {
        throw TooManyErasuresError(std::to_string(erased.failed.size()) +
                                   " erasures exceed redundancy r = " +
                                   std::to_string(gen.params.r));
    }
    for (std::uint32_t j = 0; j < gen.params.n; ++j) {
        if (erased.contains(j)) continue;
        for (std::uint32_t row = 0; row < gen.params.column_height(); ++row) {
            require_residue(cw.get(row, j), gen.params.q);
        }
    }
}

} // namespace

DataBlock decode(const GeneratorA& gen, const ArrayLayout& layout,
                 const CodewordArray& cw, const ErasurePattern& erased) {
    check_decode_args(gen, layout, cw, erased);
    const CodeParams& cp = gen.params;
    const PrimeField f(cp.q);

    // Pad the failure set to exactly r nodes with the smallest-index
    // survivors; their recovered columns are cross-checked afterwards.
    std::vector<std::uint32_t> failed = erased.failed;
    std::vector<std::uint32_t> padded;
    for (std::uint32_t j = 0; j < cp.n && failed.size() < cp.r; ++j) {
        if (!erased.contains(j)) {
            padded.push_back(j);
            failed.push_back(j);
        }
    }
    std::sort(failed.begin(), failed.end());

    std::vector<std::uint32_t> survivors;
    survivors.reserve(cp.k);
    for (std::uint32_t j = 0; j < cp.n; ++j) {
        if (!std::binary_search(failed.begin(), failed.end(), j)) survivors.push_back(j);
    }

    // Survivor data, node-major.
    std::vector<std::uint32_t> d_s(static_cast<std::size_t>(cp.k) * cp.m);
    for (std::size_t t = 0; t < survivors.size(); ++t) {
        for (std::uint32_t i = 0; i < cp.m; ++i) {
            Cell c = layout.data_cell(i, survivors[t]);
            d_s[t * cp.m + i] = cw.get(c.row, c.col);
        }
    }
    // Survivor parity, node-major.
    std::vector<std::uint32_t> f_s(static_cast<std::size_t>(cp.k) * cp.p);
    for (std::size_t t = 0; t < survivors.size(); ++t) {
        for (std::uint32_t i = 0; i < cp.p; ++i) {
            Cell c = layout.parity_cell(i, survivors[t]);
            f_s[t * cp.p + i] = cw.get(c.row, c.col);
        }
    }

    std::vector<std::size_t> surv_rows(static_cast<std::size_t>(cp.k) * cp.m);
    std::vector<std::size_t> surv_cols(static_cast<std::size_t>(cp.k) * cp.p);
    for (std::size_t t = 0; t < survivors.size(); ++t) {
        for (std::uint32_t i = 0; i < cp.m; ++i)
            surv_rows[t * cp.m + i] = static_cast<std::size_t>(survivors[t]) * cp.m + i;
        for (std::uint32_t i = 0; i < cp.p; ++i)
            surv_cols[t * cp.p + i] = static_cast<std::size_t>(survivors[t]) * cp.p + i;
    }
    std::vector<std::size_t> fail_rows(static_cast<std::size_t>(failed.size()) * cp.m);
    for (std::size_t t = 0; t < failed.size(); ++t) {
        for (std::uint32_t i = 0; i < cp.m; ++i)
            fail_rows[t * cp.m + i] = static_cast<std::size_t>(failed[t]) * cp.m + i;
    }

    // Survivor parity minus the survivors' own contribution, then the failed
    // nodes' data is the unique preimage under the failed-rows submatrix.
    Matrix a_s = submatrix(gen.a_full, surv_rows, surv_cols);
    Matrix a_f = submatrix(gen.a_full, fail_rows, surv_cols);
    std::vector<std::uint32_t> rhs = row_vec_mul(d_s, a_s);
    for (std::size_t t = 0; t < rhs.size(); ++t) rhs[t] = f.sub(f_s[t], rhs[t]);

    std::vector<std::uint32_t> d_f;
    try {
        Matrix a_f_inv = mat_inv(a_f);
        d_f = row_vec_mul(rhs, a_f_inv);
    } catch (const SingularMatrixError&) {
        throw UnrecoverableError(
            "erasure pattern is not invertible for this code instance");
    }

    DataBlock out = DataBlock::zero(cp);
    for (std::size_t t = 0; t < survivors.size(); ++t) {
        for (std::uint32_t i = 0; i < cp.m; ++i) {
            out.set(i, survivors[t], d_s[t * cp.m + i]);
        }
    }
    for (std::size_t t = 0; t < failed.size(); ++t) {
        for (std::uint32_t i = 0; i < cp.m; ++i) {
            out.set(i, failed[t], d_f[t * cp.m + i]);
        }
    }
    // Padded columns were really present; recovery must reproduce them.
    for (std::uint32_t j : padded) {
        for (std::uint32_t i = 0; i < cp.m; ++i) {
            Cell c = layout.data_cell(i, j);
            if (out.get(i, j) != cw.get(c.row, c.col)) {
                throw UnrecoverableError("surviving columns are inconsistent at node " +
                                         std::to_string(j));
            }
        }
    }
    return out;
}

DataBlock decode_rowwise(const GeneratorA& gen, const ArrayLayout& layout,
                         const CodewordArray& cw, const ErasurePattern& erased) {
    check_decode_args(gen, layout, cw, erased);
    const CodeParams& cp = gen.params;
    const PrimeField f(cp.q);
    DataBlock out = DataBlock::zero(cp);

    for (std::uint32_t row = 0; row < cp.column_height(); ++row) {
        RowCells rc = row_cells(layout, row);
        // Split the row's data slots into known and erased ones.
        std::vector<std::uint32_t> unknown_slots;
        std::vector<std::uint32_t> known_contrib(cp.r, 0);
        for (std::uint32_t t = 0; t < cp.k; ++t) {
            if (erased.contains(rc.data_col[t])) {
                unknown_slots.push_back(t);
                continue;
            }
            std::uint32_t v = cw.get(row, rc.data_col[t]);
            out.set(rc.data_sym[t], rc.data_col[t], v);
            if (v == 0) continue;
            for (std::uint32_t c = 0; c < cp.r; ++c) {
                known_contrib[c] =
                    f.add(known_contrib[c], f.mul(v, gen.a_tilde.raw(t, c)));
            }
        }
        std::vector<std::uint32_t> known_parity_slots;
        for (std::uint32_t c = 0; c < cp.r; ++c) {
            if (!erased.contains(rc.parity_col[c])) known_parity_slots.push_back(c);
        }
        const std::size_t u = unknown_slots.size();
        // One unknown cell per failed column, so enough parities survive.
        if (known_parity_slots.size() < u) {
            throw UnrecoverableError("row " + std::to_string(row) +
                                     " lost more cells than it can repair");
        }
        std::vector<std::uint32_t> solved;
        if (u > 0) {
            // Row equation restricted to the unknowns, x * system = rhs,
            // using the first u surviving parity slots.
            Matrix system(f, u, u);
            for (std::size_t b = 0; b < u; ++b)
                for (std::size_t a = 0; a < u; ++a)
                    system.set(b, a,
                               gen.a_tilde.raw(unknown_slots[b], known_parity_slots[a]));
            std::vector<std::uint32_t> rhs(u);
            for (std::size_t a = 0; a < u; ++a) {
                std::uint32_t c = known_parity_slots[a];
                rhs[a] = f.sub(cw.get(row, rc.parity_col[c]), known_contrib[c]);
            }
            try {
                Matrix inv = mat_inv(system);
                solved = row_vec_mul(rhs, inv);
            } catch (const SingularMatrixError&) {
                throw UnrecoverableError(
                    "erasure pattern is not invertible for this code instance");
            }
            for (std::size_t b = 0; b < u; ++b) {
                std::uint32_t t = unknown_slots[b];
                out.set(rc.data_sym[t], rc.data_col[t], solved[b]);
            }
        }
        // Surviving parities beyond the solved system must agree too.
        for (std::size_t a = u; a < known_parity_slots.size(); ++a) {
            std::uint32_t c = known_parity_slots[a];
            std::uint32_t expect = known_contrib[c];
            for (std::size_t b = 0; b < u; ++b) {
                expect = f.add(expect,
                               f.mul(solved[b], gen.a_tilde.raw(unknown_slots[b], c)));
            }
            if (expect != cw.get(row, rc.parity_col[c])) {
                throw UnrecoverableError("surviving cells of row " +
                                         std::to_string(row) + " are inconsistent");
            }
        }
    }
    return out;
}

} // namespace ldmds
