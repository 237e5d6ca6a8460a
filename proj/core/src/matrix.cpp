#include "zlift/matrix.hpp"

#include <algorithm>
#include <string>

namespace zlift {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols) throw DimensionMismatch("from_rows: ragged rows");
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

const Integer& IntMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw IndexOutOfRange("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                              ") out of " + std::to_string(rows_) + "x" + std::to_string(cols_));
    return (*this)(r, c);
}

Integer& IntMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_)
        throw IndexOutOfRange("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                              ") out of " + std::to_string(rows_) + "x" + std::to_string(cols_));
    return (*this)(r, c);
}

void IntMatrix::add_row_multiple(std::size_t src, std::size_t dst, const Integer& c) {
    if (src >= rows_ || dst >= rows_) throw IndexOutOfRange("add_row_multiple: row out of range");
    if (src == dst) throw IndexOutOfRange("add_row_multiple: src == dst");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += c * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t src, std::size_t dst, const Integer& c) {
    if (src >= cols_ || dst >= cols_) throw IndexOutOfRange("add_col_multiple: column out of range");
    if (src == dst) throw IndexOutOfRange("add_col_multiple: src == dst");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += c * (*this)(i, src);
}

void IntMatrix::scale_row(std::size_t r, const Integer& c) {
    if (r >= rows_) throw IndexOutOfRange("scale_row: row out of range");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) *= c;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("mat_mul: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& f = a(i, k);
            if (f == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Integer& g = b(k, j);
                if (g != 0) out(i, j) += f * g;
            }
        }
    return out;
}

SparseRow SparseRow::from_pairs(std::vector<std::pair<std::size_t, Integer>> entries) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].second == 0) throw Error("SparseRow: stored zero value");
        if (i > 0 && entries[i].first <= entries[i - 1].first)
            throw Error("SparseRow: column indices not strictly increasing");
    }
    SparseRow r;
    r.entries_ = std::move(entries);
    return r;
}

SparseRow SparseRow::from_dense(std::span<const Integer> values) {
    SparseRow r;
    for (std::size_t j = 0; j < values.size(); ++j)
        if (values[j] != 0) r.entries_.emplace_back(j, values[j]);
    return r;
}

std::size_t SparseRow::width() const {
    return entries_.empty() ? 0 : entries_.back().first + 1;
}

std::vector<Integer> SparseRow::to_dense(std::size_t width) const {
    if (this->width() > width) throw DimensionMismatch("SparseRow::to_dense: support exceeds width");
    std::vector<Integer> out(width);
    for (const auto& [col, value] : entries_) out[col] = value;
    return out;
}

std::unique_ptr<RowStream> matrix_row_stream(const IntMatrix& m) {
    std::vector<SparseRow> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::pair<std::size_t, Integer>> entries;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) entries.emplace_back(j, m(i, j));
        rows.push_back(SparseRow::from_pairs(std::move(entries)));
    }
    return std::make_unique<VectorRowStream>(std::move(rows));
}

IntMatrix take_prefix(RowStream& s, std::size_t n, std::size_t cols) {
    std::vector<SparseRow> rows;
    rows.reserve(n);
    std::size_t w = cols;
    for (std::size_t i = 0; i < n; ++i) {
        auto row = s.next_row();
        if (!row)
            throw StreamExhausted("stream ended after " + std::to_string(i) + " of " +
                                  std::to_string(n) + " requested rows");
        w = std::max(w, row->width());
        rows.push_back(std::move(*row));
    }
    w = std::max<std::size_t>(w, 1);
    IntMatrix out(n, w);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [col, value] : rows[i].entries()) out(i, col) = value;
    return out;
}

void ColumnPermutation::assign(std::size_t row, std::size_t col) {
    if (row != col_of_row_.size())
        throw Error("ColumnPermutation: rows must be assigned in order");
    if (row_of(col))
        throw Error("ColumnPermutation: column " + std::to_string(col) + " already a pivot");
    col_of_row_.push_back(col);
}

std::size_t ColumnPermutation::col_of(std::size_t row) const {
    if (row >= col_of_row_.size()) throw IndexOutOfRange("ColumnPermutation: row out of range");
    return col_of_row_[row];
}

std::optional<std::size_t> ColumnPermutation::row_of(std::size_t col) const {
    for (std::size_t r = 0; r < col_of_row_.size(); ++r)
        if (col_of_row_[r] == col) return r;
    return std::nullopt;
}

}  // namespace zlift
