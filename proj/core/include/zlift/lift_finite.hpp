#pragma once

#include <vector>

#include "zlift/arith.hpp"
#include "zlift/matrix.hpp"

namespace zlift {

// Certified output of a basis lift.  For an n x m input A (n <= m) and
// modulus q = p^nu:
//   - lifted is n x m with row i == units[i] * (row i of A) mod q, entrywise;
//   - every unit is coprime to p;
//   - for square inputs |det(lifted)| = 1, so the rows are a Z-basis;
//   - for n < m the n x n minor on the pivot columns is +-1, so the rows
//     generate a direct summand.
struct LiftResult {
    IntMatrix lifted;
    std::vector<Integer> units;     // diagonal of U, one per input row
    ColumnPermutation pivots;       // row -> pivot column
    IntMatrix reduction_witness;    // final reduction workspace R (n x m)
    IntMatrix row_op_witness;       // accumulated row operations (n x n, det +-1)
    Modulus modulus;
};

// Finite-matrix basis lifting modulo p^nu by Gaussian elimination with
// symmetric residues.  Maintains the reduction workspace R (augmented with
// the row-operation tracker), the unimodular candidate matrix C built by
// paired column operations, the unit diagonal U and the pivot map, including
// the gcd-combination repair of candidate entries divisible by p^nu.
//
// Throws TooManyRows if a.rows() > a.cols() and NotABasisModP(row) if some
// working row has no entry coprime to p after clearing.
LiftResult get_basis_finite(const IntMatrix& a, const Modulus& mod);

// Re-applies the recorded row operations to `lifted` and returns the result,
// for auditing: it must agree with reduction_witness modulo q on the pivot
// columns.  A tampered lift shows up as a mismatch there.
IntMatrix replay_reduction(const LiftResult& result);

}  // namespace zlift
