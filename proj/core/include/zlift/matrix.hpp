#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zlift/arith.hpp"
#include "zlift/errors.hpp"

namespace zlift {

// Dense matrix of arbitrary-precision integers, row-major.  Dimensions are
// fixed at construction.  Row/column operations mutate in place; a matrix is
// a plain value, so callers needing the original keep a copy.  No operation
// may run concurrently with a mutating operation on the same matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);  // zero-filled
    static IntMatrix identity(std::size_t n);
    // Validates that all rows have equal length.
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Integer& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    // Bounds-checked access.
    const Integer& at(std::size_t r, std::size_t c) const;
    Integer& at(std::size_t r, std::size_t c);

    // dst row += c * src row.  Requires src != dst.
    void add_row_multiple(std::size_t src, std::size_t dst, const Integer& c);
    // dst column += c * src column.  Requires src != dst.
    void add_col_multiple(std::size_t src, std::size_t dst, const Integer& c);
    // row r *= c entrywise.
    void scale_row(std::size_t r, const Integer& c);

    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

// Exact product; throws DimensionMismatch unless a.cols() == b.rows().
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

// One finitely supported row of a row-finite matrix: (column, value) pairs
// with strictly increasing columns and no zero values.
class SparseRow {
public:
    SparseRow() = default;
    // Validates the invariants above.
    static SparseRow from_pairs(std::vector<std::pair<std::size_t, Integer>> entries);
    static SparseRow from_dense(std::span<const Integer> values);

    const std::vector<std::pair<std::size_t, Integer>>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    // 1 + largest support index, or 0 for the zero row.
    std::size_t width() const;
    std::vector<Integer> to_dense(std::size_t width) const;

    bool operator==(const SparseRow& other) const = default;

private:
    std::vector<std::pair<std::size_t, Integer>> entries_;
};

// Pull-based producer of the rows of a row-finite matrix with countably many
// rows.  next_row() returns one row per call; std::nullopt means the matrix
// was declared finite and is exhausted.  Single consumer.
class RowStream {
public:
    virtual ~RowStream() = default;

    std::optional<SparseRow> next_row() {
        auto row = produce();
        if (row) ++consumed_;
        return row;
    }
    std::size_t rows_consumed() const { return consumed_; }

private:
    virtual std::optional<SparseRow> produce() = 0;
    std::size_t consumed_ = 0;
};

// Finite stream over a materialized list of rows.
class VectorRowStream final : public RowStream {
public:
    explicit VectorRowStream(std::vector<SparseRow> rows) : rows_(std::move(rows)) {}

private:
    std::optional<SparseRow> produce() override {
        if (next_ >= rows_.size()) return std::nullopt;
        return rows_[next_++];
    }
    std::vector<SparseRow> rows_;
    std::size_t next_ = 0;
};

// Stream backed by a generator function row_index -> row.  An engaged result
// for every index makes the stream infinite; returning std::nullopt ends it.
class GeneratorRowStream final : public RowStream {
public:
    using Generator = std::function<std::optional<SparseRow>(std::size_t)>;
    explicit GeneratorRowStream(Generator gen) : gen_(std::move(gen)) {}

private:
    std::optional<SparseRow> produce() override { return gen_(index_++); }
    Generator gen_;
    std::size_t index_ = 0;
};

// Finite stream over the rows of a dense matrix (rows are zero-padded views).
std::unique_ptr<RowStream> matrix_row_stream(const IntMatrix& m);

// Materialize the first n rows as a dense matrix with
// width = max(cols, 1 + largest support index seen).
// Throws StreamExhausted if the stream is finite and shorter than n.
IntMatrix take_prefix(RowStream& s, std::size_t n, std::size_t cols);

// The pivot map J: pivot row index -> pivot column index, injective,
// defined for rows 0..size()-1.  Columns are never physically permuted;
// every pivot access goes through this map.
class ColumnPermutation {
public:
    // Appends the pivot column of the next row; col must be unused.
    void assign(std::size_t row, std::size_t col);

    std::size_t size() const { return col_of_row_.size(); }
    std::size_t col_of(std::size_t row) const;
    std::optional<std::size_t> row_of(std::size_t col) const;
    bool is_pivot_col(std::size_t col) const { return row_of(col).has_value(); }
    const std::vector<std::size_t>& cols() const { return col_of_row_; }

    bool operator==(const ColumnPermutation& other) const {
        return col_of_row_ == other.col_of_row_;
    }

private:
    std::vector<std::size_t> col_of_row_;
};

}  // namespace zlift
