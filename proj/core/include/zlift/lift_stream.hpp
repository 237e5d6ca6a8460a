#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "zlift/arith.hpp"
#include "zlift/matrix.hpp"

namespace zlift {

// Live state of the streaming elimination over a row-finite matrix supplied
// one row at a time.  Invariants at every loop boundary:
//   - rows 0..I-1 of R restricted to the pivot columns form the identity,
//     exactly (pivot 1, other entries 0);
//   - no entry of R is a nonzero multiple of q;
//   - C == U * A modulo q, row by row, over the consumed prefix of A;
//   - M * R == C exactly, where M is the square matrix of C-entries at the
//     pivot positions rebuilt in the previous loop.
//
// Single-owner, single-threaded; independent states run freely in parallel.
class EliminationState {
public:
    // Reads row 0 of the source (entries divisible by q replaced by 0).
    // When record_trace is set, each loop stores a LoopTrace snapshot.
    EliminationState(std::unique_ptr<RowStream> source, Modulus mod,
                     bool record_trace = false);

    const Modulus& modulus() const { return mod_; }
    // Number of fully processed rows; also the index of the pending row.
    std::size_t working_row_index() const { return processed_; }
    std::size_t width() const { return width_; }
    std::size_t loops_executed() const { return loops_; }
    bool source_exhausted() const { return exhausted_; }
    // True while R holds a raw row awaiting its loop.
    bool has_pending_row() const { return pending_; }

    // Reduction workspace rows 0..processed (last one pending, if any).
    const std::vector<std::vector<Integer>>& r_rows() const { return r_; }
    // Candidate lifted rows 0..processed-1.
    const std::vector<std::vector<Integer>>& c_rows() const { return c_; }
    const std::vector<Integer>& units() const { return units_; }
    const ColumnPermutation& pivots() const { return pivots_; }
    // M from the last loop's rebuild (empty before the first loop).
    const IntMatrix& m_matrix() const { return m_; }
    // Original source rows, in order, as consumed.
    const std::vector<SparseRow>& consumed_rows() const { return consumed_; }
    // Indices of processed rows that currently pass the stabilization check.
    std::vector<std::size_t> stabilized_rows() const;

    // Mid-loop snapshot, recorded when tracing is on.
    struct LoopTrace {
        // J-permuted (I+1)x(I+1) principal block of R right after the pivot
        // was normalized to 1 (upper triangular with unit diagonal).
        IntMatrix pivot_block_after_normalize;
        std::size_t divisibility_repairs = 0;  // columns repaired this loop
    };
    const std::vector<LoopTrace>& trace() const { return trace_; }

    friend void step_loop(EliminationState& state);

private:
    void read_next_row();
    std::vector<Integer> zeroed_dense(const SparseRow& row) const;
    void ensure_width(std::size_t w);

    Modulus mod_;
    std::unique_ptr<RowStream> source_;
    std::size_t processed_ = 0;  // I
    std::size_t width_ = 0;
    std::vector<std::vector<Integer>> r_;
    std::vector<std::vector<Integer>> c_;
    std::vector<Integer> units_;
    ColumnPermutation pivots_;
    IntMatrix m_;
    std::vector<SparseRow> consumed_;
    bool pending_ = false;
    bool exhausted_ = false;
    std::size_t loops_ = 0;
    bool record_trace_;
    std::vector<LoopTrace> trace_;
};

// Executes one full loop on the pending working row: clear previously
// obtained pivot columns, find the pivot (first entry coprime to p), scale
// the source row by the pivot's inverse and reinsert it into C and R,
// re-clear, normalize the pivot to exactly 1 (mirrored into C), zero the
// working row's multiples of q (mirrored into C), clear above the pivot,
// zero all multiples of q in R, rebuild M and set C = M * R, run the
// divisibility repair on nonpivot columns of C, then read the next row.
//
// Throws NotABasisModP(I) if the cleared working row has no entry coprime
// to p, and StreamExhausted if there is no pending row.
void step_loop(EliminationState& state);

// True iff row (< working_row_index) is final: every nonzero entry of its C
// row is coprime-to-q-or-zero -- no nonzero multiples of q remain -- and sits
// in a pivot column whose R row is a row of the identity.  Once true, the
// row's C entries never change again.
bool stabilization_check(const EliminationState& state, std::size_t row);

// Stabilized prefix of lifted rows together with the bookkeeping needed to
// certify them.
struct StreamLiftReport {
    IntMatrix lifted;  // rows 0..k-1 of C at the reporting width
    std::vector<Integer> units;
    ColumnPermutation pivots;
    std::size_t loops_executed = 0;
    // Loop after which each reported row was deemed final.
    std::vector<std::size_t> stabilized_at_loop;
};

// Runs loops until the first target_rows rows have stabilized, then reports
// them.  A finite source that exhausts after n >= target_rows loops reports
// all n rows (nothing can change them once the source ends).  Throws
// NotABasisModP (propagated), StreamExhausted if a finite source has fewer
// than target_rows rows, and StabilizationTimeout after max_loops loops,
// naming the blocking rows and the columns still lacking identity rows.
StreamLiftReport run_until(EliminationState& state, std::size_t target_rows,
                           std::size_t max_loops);

}  // namespace zlift
