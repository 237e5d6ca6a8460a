#include "zlift/matrix.hpp"

#include <gtest/gtest.h>

#include "support/test_util.hpp"

using namespace zlift;
using zlift::testing::mat;
using zlift::testing::sparse;

TEST(IntMatrix, AddRowMultipleExamples) {
    IntMatrix m = IntMatrix::identity(2);
    m.add_row_multiple(0, 1, 5);
    EXPECT_EQ(m, mat({{1, 0}, {5, 1}}));

    IntMatrix n = mat({{1, 2}, {3, 4}});
    IntMatrix unchanged = n;
    n.add_row_multiple(0, 1, 0);
    EXPECT_EQ(n, unchanged);

    n.add_row_multiple(1, 0, -1);
    EXPECT_EQ(n, mat({{-2, -2}, {3, 4}}));
}

TEST(IntMatrix, AddColMultipleExamples) {
    IntMatrix m = IntMatrix::identity(2);
    m.add_col_multiple(0, 1, 3);
    EXPECT_EQ(m, mat({{1, 3}, {0, 1}}));

    IntMatrix n = mat({{1, 2}, {3, 4}});
    IntMatrix unchanged = n;
    n.add_col_multiple(0, 1, 0);
    EXPECT_EQ(n, unchanged);

    n.add_col_multiple(0, 1, 2);
    EXPECT_EQ(n, mat({{1, 4}, {3, 10}}));
}

TEST(IntMatrix, ScaleRowExamples) {
    IntMatrix m = IntMatrix::identity(2);
    m.scale_row(0, 1);
    EXPECT_EQ(m, IntMatrix::identity(2));

    IntMatrix n = mat({{2, 4}});
    n.scale_row(0, 3);
    EXPECT_EQ(n, mat({{6, 12}}));

    IntMatrix z = mat({{1, 1}});
    z.scale_row(0, 0);
    EXPECT_EQ(z, mat({{0, 0}}));
}

TEST(IntMatrix, IndexErrors) {
    IntMatrix m = IntMatrix::identity(2);
    EXPECT_THROW(m.add_row_multiple(0, 2, 1), IndexOutOfRange);
    EXPECT_THROW(m.add_row_multiple(1, 1, 1), IndexOutOfRange);
    EXPECT_THROW(m.add_col_multiple(5, 0, 1), IndexOutOfRange);
    EXPECT_THROW(m.scale_row(9, 1), IndexOutOfRange);
    EXPECT_THROW(m.at(2, 0), IndexOutOfRange);
}

TEST(IntMatrix, AddRowMultiplePreservesDeterminant) {
    // Checked against the verify oracle in test_verify; here via the
    // permanent-free 2x2 formula to stay self-contained.
    IntMatrix m = mat({{3, 7}, {-2, 5}});
    auto det2 = [](const IntMatrix& a) -> Integer {
        return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    };
    Integer before = det2(m);
    m.add_row_multiple(0, 1, -4);
    EXPECT_EQ(det2(m), before);
    m.add_col_multiple(1, 0, 9);
    EXPECT_EQ(det2(m), before);
}

TEST(IntMatrix, ElementaryOpsInvertible) {
    IntMatrix m = mat({{3, -1, 4}, {1, 5, -9}, {2, 6, 5}});
    IntMatrix orig = m;
    m.add_row_multiple(0, 2, 7);
    m.add_row_multiple(0, 2, -7);
    EXPECT_EQ(m, orig);
    m.add_col_multiple(2, 1, -4);
    m.add_col_multiple(2, 1, 4);
    EXPECT_EQ(m, orig);
}

TEST(MatMul, ExamplesAndMismatch) {
    IntMatrix b = mat({{1, 1}, {1, 1}});
    EXPECT_EQ(mat_mul(IntMatrix::identity(2), b), b);
    EXPECT_EQ(mat_mul(mat({{2, 0}, {0, 2}}), b), mat({{2, 2}, {2, 2}}));
    IntMatrix wide = mat({{1, 2, 3}, {4, 5, 6}});
    EXPECT_THROW(mat_mul(wide, mat({{1, 0}, {0, 1}})), DimensionMismatch);
}

TEST(MatMul, AssociativeOnSmallMatrices) {
    IntMatrix a = mat({{1, -2}, {3, 4}});
    IntMatrix b = mat({{0, 5, 1}, {2, -1, 3}});
    IntMatrix c = mat({{1, 0}, {2, 2}, {-3, 1}});
    EXPECT_EQ(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c)));
}

TEST(SparseRow, InvariantsEnforced) {
    EXPECT_THROW(SparseRow::from_pairs({{0, Integer(0)}}), Error);
    EXPECT_THROW(SparseRow::from_pairs({{1, Integer(2)}, {1, Integer(3)}}), Error);
    EXPECT_THROW(SparseRow::from_pairs({{2, Integer(2)}, {1, Integer(3)}}), Error);
    auto r = sparse({{1, 2}, {4, -1}});
    EXPECT_EQ(r.width(), 5u);
    auto dense = r.to_dense(6);
    EXPECT_EQ(dense[1], 2);
    EXPECT_EQ(dense[4], -1);
    EXPECT_EQ(dense[0], 0);
    EXPECT_THROW(r.to_dense(3), DimensionMismatch);
}

TEST(SparseRow, DenseRoundTrip) {
    std::vector<Integer> dense = zlift::testing::ints({0, 3, 0, 0, -7, 1});
    auto row = SparseRow::from_dense(dense);
    EXPECT_EQ(row.to_dense(dense.size()), dense);
}

TEST(TakePrefix, IdentityWindow) {
    GeneratorRowStream s([](std::size_t i) {
        return SparseRow::from_pairs({{i, Integer(1)}});
    });
    EXPECT_EQ(take_prefix(s, 3, 3), IntMatrix::identity(3));
    EXPECT_EQ(s.rows_consumed(), 3u);
}

TEST(TakePrefix, ExhaustedFiniteStream) {
    VectorRowStream empty({});
    EXPECT_THROW(take_prefix(empty, 1, 1), StreamExhausted);

    VectorRowStream one({sparse({{0, 1}})});
    EXPECT_THROW(take_prefix(one, 2, 1), StreamExhausted);
}

TEST(TakePrefix, BandedWindowWidensToSupport) {
    GeneratorRowStream s([](std::size_t i) {
        return SparseRow::from_pairs({{i, Integer(1)}, {i + 1, Integer(1)}});
    });
    EXPECT_EQ(take_prefix(s, 2, 2), mat({{1, 1, 0}, {0, 1, 1}}));
}

TEST(TakePrefix, PrefixesPersistAcrossFurtherPulls) {
    GeneratorRowStream s([](std::size_t i) {
        return SparseRow::from_pairs({{i, Integer(1)}});
    });
    IntMatrix first = take_prefix(s, 2, 2);
    IntMatrix copy = first;
    (void)s.next_row();
    (void)s.next_row();
    EXPECT_EQ(first, copy);
}

TEST(ColumnPermutationMap, InjectiveAndOrdered) {
    ColumnPermutation j;
    j.assign(0, 3);
    j.assign(1, 0);
    EXPECT_EQ(j.col_of(0), 3u);
    EXPECT_EQ(j.col_of(1), 0u);
    EXPECT_TRUE(j.is_pivot_col(0));
    EXPECT_FALSE(j.is_pivot_col(1));
    EXPECT_EQ(j.row_of(3).value(), 0u);
    EXPECT_THROW(j.assign(2, 3), Error);   // column reused
    EXPECT_THROW(j.assign(5, 4), Error);   // out-of-order row
    EXPECT_THROW(j.col_of(7), IndexOutOfRange);
}
