#include "zlift/lift_stream.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace zlift {

namespace {

// row_a -= f * row_b on the common width.
void row_submul(std::vector<Integer>& a, const Integer& f, const std::vector<Integer>& b) {
    for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j] != 0) a[j] -= f * b[j];
}

std::size_t first_nonzero_row(const std::vector<std::vector<Integer>>& rows, std::size_t col,
                              std::size_t row_count) {
    for (std::size_t r = 0; r < row_count; ++r)
        if (rows[r][col] != 0) return r;
    return row_count;
}

}  // namespace

EliminationState::EliminationState(std::unique_ptr<RowStream> source, Modulus mod,
                                   bool record_trace)
    : mod_(std::move(mod)), source_(std::move(source)), record_trace_(record_trace) {
    read_next_row();
}

void EliminationState::ensure_width(std::size_t w) {
    if (w <= width_) return;
    for (auto& row : r_) row.resize(w);
    for (auto& row : c_) row.resize(w);
    width_ = w;
}

std::vector<Integer> EliminationState::zeroed_dense(const SparseRow& row) const {
    std::vector<Integer> dense = row.to_dense(width_);
    for (auto& x : dense)
        if (x != 0 && divides(mod_.value(), x)) x = 0;
    return dense;
}

void EliminationState::read_next_row() {
    auto row = source_->next_row();
    if (!row) {
        exhausted_ = true;
        pending_ = false;
        return;
    }
    ensure_width(std::max<std::size_t>(row->width(), 1));
    consumed_.push_back(*row);
    r_.push_back(zeroed_dense(*row));
    pending_ = true;
}

void step_loop(EliminationState& state) {
    if (!state.pending_)
        throw StreamExhausted("no working row: the source is exhausted");

    const std::size_t cur = state.processed_;
    const Integer& p = state.mod_.prime();
    const Integer& q = state.mod_.value();
    auto& r = state.r_;
    auto& c = state.c_;
    auto& pivots = state.pivots_;

    // Clear the previously obtained pivot columns in the working row.  The
    // earlier rows are exactly the identity on pivot columns, so each entry
    // clears to an exact zero.
    for (std::size_t k = 0; k < cur; ++k) {
        Integer f = r[cur][pivots.col_of(k)];
        if (f != 0) row_submul(r[cur], f, r[k]);
    }

    // First entry of the cleared row coprime to p becomes the pivot.
    std::size_t piv = state.width_;
    for (std::size_t col = 0; col < state.width_; ++col) {
        if (!divides(p, r[cur][col])) {
            piv = col;
            break;
        }
    }
    if (piv == state.width_)
        throw NotABasisModP(cur, "row " + std::to_string(cur) +
                                     " has no pivot entry coprime to p");
    pivots.assign(cur, piv);

    // Scale the source row by the inverse of the cleared pivot, zero its
    // multiples of q, and reinsert it into both C and R.
    Integer u = unit_inverse(r[cur][piv], state.mod_);
    state.units_.push_back(u);
    std::vector<Integer> scaled = state.consumed_[cur].to_dense(state.width_);
    for (auto& x : scaled) {
        x *= u;
        if (x != 0 && divides(q, x)) x = 0;
    }
    c.push_back(scaled);
    r[cur] = std::move(scaled);

    // Re-clear the pivot columns; the pivot entry is now congruent to 1.
    for (std::size_t k = 0; k < cur; ++k) {
        Integer f = r[cur][pivots.col_of(k)];
        if (f != 0) row_submul(r[cur], f, r[k]);
    }

    // Normalize the pivot to exactly 1, mirroring the adjustment into C so
    // the recorded row operations still reduce C to R.
    Integer delta = r[cur][piv] - 1;
    if (delta != 0) {
        if (!divides(q, delta))
            throw Error("internal: pivot in row " + std::to_string(cur) +
                        " is not congruent to 1 modulo q");
        r[cur][piv] = 1;
        c[cur][piv] -= delta;
    }
    if (state.record_trace_) {
        IntMatrix block(cur + 1, cur + 1);
        for (std::size_t i = 0; i <= cur; ++i)
            for (std::size_t k = 0; k <= cur; ++k) block(i, k) = r[i][pivots.col_of(k)];
        state.trace_.push_back({std::move(block), 0});
    }

    // Zero the working row's remaining multiples of q, mirrored into C.
    for (std::size_t col = 0; col < state.width_; ++col) {
        Integer& x = r[cur][col];
        if (x != 0 && divides(q, x)) {
            c[cur][col] -= x;
            x = 0;
        }
    }

    // Clear above the pivot; the pivot is exactly 1, so these are exact.
    for (std::size_t k = 0; k < cur; ++k) {
        Integer f = r[k][piv];
        if (f != 0) row_submul(r[k], f, r[cur]);
    }

    // Any multiple of q anywhere in R becomes 0; the C = M*R rebuild below
    // absorbs the difference, which is 0 modulo q.
    for (std::size_t i = 0; i <= cur; ++i)
        for (auto& x : r[i])
            if (x != 0 && divides(q, x)) x = 0;

    // Rebuild M from the candidate entries at the pivot positions and set
    // C = M * R, exactly.
    IntMatrix m(cur + 1, cur + 1);
    for (std::size_t i = 0; i <= cur; ++i)
        for (std::size_t k = 0; k <= cur; ++k) m(i, k) = c[i][pivots.col_of(k)];
    state.m_ = m;
    {
        std::vector<std::vector<Integer>> prod(cur + 1, std::vector<Integer>(state.width_));
        for (std::size_t k = 0; k <= cur; ++k)
            for (std::size_t col = 0; col < state.width_; ++col) {
                const Integer& x = r[k][col];
                if (x == 0) continue;
                for (std::size_t i = 0; i <= cur; ++i)
                    if (m(i, k) != 0) prod[i][col] += m(i, k) * x;
            }
        c = std::move(prod);
    }

    // Divisibility repair: for each nonpivot column of C whose first nonzero
    // entry is a multiple of q, try to clear that entry by adding a gcd
    // combination of pivot-column rows of R (a vector that is a multiple of
    // q and touches only nonzero entries of R), then refresh the column of C
    // as M times the new column of R.
    std::size_t repairs = 0;
    for (std::size_t col = 0; col < state.width_; ++col) {
        if (pivots.is_pivot_col(col)) continue;
        std::size_t k = first_nonzero_row(c, col, cur + 1);
        if (k == cur + 1) continue;
        if (!divides(q, c[k][col])) continue;

        std::vector<std::size_t> support;  // pivot rows contributing to the combination
        std::vector<Integer> values;
        for (std::size_t kk = 0; kk <= cur; ++kk) {
            std::size_t pc = pivots.col_of(kk);
            if (first_nonzero_row(c, pc, cur + 1) != k) continue;
            if (r[kk][col] == 0) continue;
            support.push_back(kk);
            values.push_back(c[k][pc]);
        }
        if (support.empty()) continue;
        GcdCombination comb = mgcdex(values);
        if (comb.gcd == 0 || !divides(comb.gcd * q, c[k][col])) continue;

        Integer scale = c[k][col] / comb.gcd;  // a multiple of q
        for (std::size_t j = 0; j < support.size(); ++j)
            r[support[j]][col] -= comb.coefficients[j] * scale;
        for (std::size_t i = 0; i <= cur; ++i) {
            Integer acc = 0;
            for (std::size_t kk = 0; kk <= cur; ++kk)
                if (m(i, kk) != 0 && r[kk][col] != 0) acc += m(i, kk) * r[kk][col];
            c[i][col] = std::move(acc);
        }
        if (c[k][col] != 0)
            throw Error("internal: divisibility repair failed to clear a column");
        ++repairs;
    }
    if (state.record_trace_) state.trace_.back().divisibility_repairs = repairs;

    state.processed_ = cur + 1;
    ++state.loops_;
    state.read_next_row();
}

std::vector<std::size_t> EliminationState::stabilized_rows() const {
    std::vector<std::size_t> rows;
    for (std::size_t row = 0; row < processed_; ++row)
        if (stabilization_check(*this, row)) rows.push_back(row);
    return rows;
}

bool stabilization_check(const EliminationState& state, std::size_t row) {
    if (row >= state.working_row_index())
        throw IndexOutOfRange("stabilization_check: row not yet processed");
    const auto& c_row = state.c_rows()[row];
    const auto& r = state.r_rows();
    const Integer& q = state.modulus().value();
    for (std::size_t col = 0; col < c_row.size(); ++col) {
        if (c_row[col] == 0) continue;
        if (divides(q, c_row[col])) return false;  // leftover multiple of q
        auto pivot_row = state.pivots().row_of(col);
        if (!pivot_row) return false;  // support outside the pivot columns
        // The pivot row must be a row of the identity.
        const auto& pr = r[*pivot_row];
        for (std::size_t j = 0; j < pr.size(); ++j) {
            if (j == col) {
                if (pr[j] != 1) return false;
            } else if (pr[j] != 0) {
                return false;
            }
        }
    }
    return true;
}

StreamLiftReport run_until(EliminationState& state, std::size_t target_rows,
                           std::size_t max_loops) {
    if (target_rows < 1) throw Error("run_until: target_rows must be >= 1");

    std::vector<std::optional<std::size_t>> stabilized_at;
    auto refresh = [&] {
        stabilized_at.resize(state.working_row_index());
        for (std::size_t row = 0; row < state.working_row_index(); ++row)
            if (!stabilized_at[row] && stabilization_check(state, row))
                stabilized_at[row] = state.loops_executed();
    };
    auto stable_prefix = [&] {
        std::size_t n = 0;
        while (n < stabilized_at.size() && stabilized_at[n]) ++n;
        return n;
    };

    while (true) {
        refresh();
        std::size_t reportable = 0;
        if (state.source_exhausted() && !state.has_pending_row()) {
            // A finite source runs one loop per row and then nothing can
            // change any row, so every processed row is reported.
            reportable = state.working_row_index();
            if (reportable < target_rows)
                throw StreamExhausted("finite stream supplied only " +
                                      std::to_string(reportable) + " rows; " +
                                      std::to_string(target_rows) + " requested");
        } else {
            reportable = stable_prefix();
        }
        if (reportable >= target_rows) {
            StreamLiftReport report;
            report.lifted = IntMatrix(reportable, state.width());
            for (std::size_t i = 0; i < reportable; ++i)
                for (std::size_t j = 0; j < state.width(); ++j)
                    report.lifted(i, j) = state.c_rows()[i][j];
            report.units.assign(state.units().begin(), state.units().begin() + reportable);
            for (std::size_t i = 0; i < reportable; ++i)
                report.pivots.assign(i, state.pivots().col_of(i));
            report.loops_executed = state.loops_executed();
            for (std::size_t i = 0; i < reportable; ++i)
                report.stabilized_at_loop.push_back(
                    stabilized_at[i] ? *stabilized_at[i] : state.loops_executed());
            return report;
        }
        if (state.loops_executed() >= max_loops) {
            std::vector<std::size_t> blocking;
            std::set<std::size_t> missing;
            for (std::size_t row = 0; row < std::min(target_rows, state.working_row_index());
                 ++row) {
                if (stabilized_at[row]) continue;
                blocking.push_back(row);
                const auto& c_row = state.c_rows()[row];
                for (std::size_t col = 0; col < c_row.size(); ++col) {
                    if (c_row[col] == 0) continue;
                    auto pr = state.pivots().row_of(col);
                    bool identity = false;
                    if (pr) {
                        identity = true;
                        const auto& rr = state.r_rows()[*pr];
                        for (std::size_t j = 0; j < rr.size() && identity; ++j)
                            if (rr[j] != (j == col ? 1 : 0)) identity = false;
                    }
                    if (!identity) missing.insert(col);
                }
            }
            std::ostringstream msg;
            msg << "no stabilized prefix of " << target_rows << " rows after " << max_loops
                << " loops; blocking rows:";
            for (auto row : blocking) msg << ' ' << row;
            msg << "; columns without identity rows:";
            for (auto col : missing) msg << ' ' << col;
            throw StabilizationTimeout(state.loops_executed(), std::move(blocking),
                                       std::vector<std::size_t>(missing.begin(), missing.end()),
                                       msg.str());
        }
        step_loop(state);
    }
}

}  // namespace zlift
