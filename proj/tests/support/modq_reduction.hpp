#pragma once

// Test-only oracle: plain row reduction over Z/qZ with the row-at-a-time
// discipline (clear previously obtained pivot columns, pivot on the first
// unit entry, scale the pivot to 1, clear above).  Entries are kept
// canonical in [0, q).  Independent of both lift engines: the only shared
// code is the residue helpers.

#include <optional>
#include <vector>

#include "zlift/arith.hpp"
#include "zlift/matrix.hpp"

namespace zlift::testing {

class ModqReduction {
public:
    explicit ModqReduction(const Modulus& mod) : mod_(mod) {}

    // Processes one row; returns its pivot column, or nullopt if the cleared
    // row has no entry coprime to p.
    std::optional<std::size_t> process_row(const SparseRow& row) {
        ensure_width(row.width());
        std::vector<Integer> r = row.to_dense(width_);
        const Integer& q = mod_.value();
        for (auto& x : r) x = nonneg_residue(x, q);

        for (std::size_t k = 0; k < rows_.size(); ++k) {
            Integer f = r[pivot_cols_[k]];
            if (f != 0) submul(r, f, rows_[k]);
        }
        std::size_t piv = width_;
        for (std::size_t c = 0; c < width_; ++c)
            if (!divides(mod_.prime(), r[c])) {
                piv = c;
                break;
            }
        if (piv == width_) return std::nullopt;

        Integer u = nonneg_residue(unit_inverse(r[piv], mod_), q);
        for (auto& x : r) x = nonneg_residue(x * u, q);
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            Integer f = rows_[k][piv];
            if (f != 0) submul(rows_[k], f, r);
        }
        rows_.push_back(std::move(r));
        pivot_cols_.push_back(piv);
        return piv;
    }

    const std::vector<std::vector<Integer>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }
    std::size_t width() const { return width_; }

    // Entry (i, j), zero beyond the stored width.
    Integer entry(std::size_t i, std::size_t j) const {
        return j < rows_[i].size() ? rows_[i][j] : Integer(0);
    }

private:
    void ensure_width(std::size_t w) {
        if (w <= width_) return;
        for (auto& row : rows_) row.resize(w);
        width_ = w;
    }
    void submul(std::vector<Integer>& a, const Integer& f, const std::vector<Integer>& b) {
        const Integer& q = mod_.value();
        for (std::size_t j = 0; j < b.size() && j < a.size(); ++j)
            if (b[j] != 0) a[j] = nonneg_residue(a[j] - f * b[j], q);
    }

    Modulus mod_;
    std::size_t width_ = 0;
    std::vector<std::vector<Integer>> rows_;
    std::vector<std::size_t> pivot_cols_;
};

}  // namespace zlift::testing
