#include "zlift/lift_finite.hpp"

#include <string>
#include <utility>

namespace zlift {

namespace {

// Column-j-of-C is zero strictly above row `row`.
bool column_zero_above(const IntMatrix& c, std::size_t col, std::size_t row) {
    for (std::size_t r = 0; r < row; ++r)
        if (c(r, col) != 0) return false;
    return true;
}

}  // namespace

LiftResult get_basis_finite(const IntMatrix& a, const Modulus& mod) {
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    if (n > m) throw TooManyRows("more rows (" + std::to_string(n) + ") than columns (" +
                                 std::to_string(m) + ") cannot form a basis");
    const Integer& p = mod.prime();
    const Integer& q = mod.value();

    // Workspace [R | B]: R starts as the symmetric residues of A and B as the
    // identity.  B sees every row operation but no scaling, so B stays the
    // exact inverse of the candidate matrix C throughout.
    IntMatrix r(n, m + n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) r(i, j) = symmetric_residue(a(i, j), q);
        r(i, m + i) = 1;
    }
    // C starts as the identity and collects, as column operations, the
    // inverse of every row operation applied to the workspace; it stays
    // unimodular by construction.
    IntMatrix c = IntMatrix::identity(n);
    std::vector<Integer> units(n, Integer(1));
    std::vector<std::size_t> ind(m);
    for (std::size_t j = 0; j < m; ++j) ind[j] = j;
    std::vector<Integer> checkdet(m);

    for (std::size_t i = 0; i < n; ++i) {
        // Candidate pivots: the working row with all previously obtained
        // pivot columns cleared in one shot (rows 0..i-1 are, modulo q, the
        // identity on their pivot columns).
        for (std::size_t col = 0; col < m; ++col) {
            checkdet[col] = r(i, col);
            for (std::size_t k = 0; k < i; ++k) checkdet[col] -= r(i, ind[k]) * r(k, col);
        }
        std::size_t piv = m;
        for (std::size_t col = 0; col < m; ++col) {
            if (!divides(p, checkdet[col])) {
                piv = col;
                break;
            }
        }
        if (piv == m)
            throw NotABasisModP(i, "row " + std::to_string(i) +
                                       " has no pivot entry coprime to p");

        // Track the column permutation instead of moving columns.
        if (ind[i] != piv) {
            std::size_t t = i;
            while (ind[t] != piv) ++t;
            std::swap(ind[i], ind[t]);
        }

        // Scale the working row so the pivot becomes 1 modulo q; only the
        // first m columns are scaled, keeping B an exact row-op record.
        Integer u = unit_inverse(checkdet[piv], mod);
        units[i] = u;
        for (std::size_t col = 0; col < m; ++col)
            r(i, col) = symmetric_residue(u * r(i, col), q);

        // Clear the previously obtained pivot columns in the working row.
        // Every row operation on the workspace is paired with the inverse
        // column operation on C, so C * workspace is invariant.
        for (std::size_t h = 0; h < i; ++h) {
            Integer temp = symmetric_residue(r(i, ind[h]), q);
            if (temp == 0) continue;
            r.add_row_multiple(h, i, -temp);
            c.add_col_multiple(i, h, temp);
        }
        // Clear above the pivot.
        for (std::size_t h = i; h-- > 0;) {
            Integer temp = symmetric_residue(r(h, ind[i]), q);
            if (temp == 0) continue;
            r.add_row_multiple(i, h, -temp);
            c.add_col_multiple(h, i, temp);
        }

        // Repair pass: when the candidate entry at the pivot position is a
        // nonzero multiple of q, spend a gcd combination of earlier pivot
        // columns (those with no candidate entries above this row) to clear
        // it, again as paired operations.  Skipped when the indices would
        // leave the square candidate matrix; that can only happen for inputs
        // with more columns than rows.
        if (piv < n && c(piv, piv) != 0 && divides(q, c(piv, piv))) {
            std::vector<std::size_t> targets;  // pivot columns, used as row indices below
            std::vector<Integer> values;
            for (std::size_t j = 0; j < i; ++j) {
                if (ind[j] >= n || ind[j] == i) continue;
                if (column_zero_above(c, j, piv)) {
                    targets.push_back(ind[j]);
                    values.push_back(c(piv, ind[j]));
                }
            }
            if (!targets.empty()) {
                GcdCombination comb = mgcdex(values);
                if (comb.gcd != 0 && divides(comb.gcd * q, c(piv, piv))) {
                    Integer scale = c(piv, piv) / comb.gcd;  // a multiple of q
                    for (std::size_t j = 0; j < targets.size(); ++j) {
                        Integer w = comb.coefficients[j] * scale;
                        if (w == 0) continue;
                        c.add_col_multiple(targets[j], i, -w);
                        r.add_row_multiple(i, targets[j], w);
                    }
                }
            }
        }
    }

    // Assemble the result in natural column coordinates.  C's columns are
    // indexed by pivot order, so column h of C carries the entries of matrix
    // column ind[h]; entries in nonpivot columns come from C * R, which
    // equals diag(units) * A modulo q throughout.
    ColumnPermutation pivots;
    for (std::size_t i = 0; i < n; ++i) pivots.assign(i, ind[i]);

    IntMatrix lifted(n, m);
    std::vector<bool> pivot_col(m, false);
    for (std::size_t h = 0; h < n; ++h) {
        pivot_col[ind[h]] = true;
        for (std::size_t row = 0; row < n; ++row) lifted(row, ind[h]) = c(row, h);
    }
    for (std::size_t col = 0; col < m; ++col) {
        if (pivot_col[col]) continue;
        for (std::size_t row = 0; row < n; ++row) {
            Integer acc = 0;
            for (std::size_t h = 0; h < n; ++h) acc += c(row, h) * r(h, col);
            lifted(row, col) = std::move(acc);
        }
    }

    IntMatrix witness(n, m);
    IntMatrix row_ops(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) witness(i, j) = r(i, j);
        for (std::size_t j = 0; j < n; ++j) row_ops(i, j) = r(i, m + j);
    }

    return LiftResult{std::move(lifted), std::move(units),   std::move(pivots),
                      std::move(witness), std::move(row_ops), mod};
}

IntMatrix replay_reduction(const LiftResult& result) {
    return mat_mul(result.row_op_witness, result.lifted);
}

}  // namespace zlift
