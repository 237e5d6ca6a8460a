#include "zlift/lattice_ring.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>

#include "support/test_util.hpp"
#include "zlift/verify.hpp"

using namespace zlift;
using zlift::testing::ints;

namespace {

std::uint64_t mix64(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

LatticeRingElement elem(const std::vector<long>& coords) {
    return LatticeRingElement{ints(coords)};
}

// Coordinatewise divisibility oracle for ideal membership: x lies in the
// ideal generated by gens iff at every atom the gcd of the generators'
// entries divides x's entry (gcd 0 forcing x's entry to 0).
bool in_ideal(const LatticeRingElement& x, std::span<const LatticeRingElement> gens,
              unsigned k) {
    for (unsigned a = 0; a < k; ++a) {
        Integer g = 0;
        for (const auto& gen : gens) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gen.coords[a].get_mpz_t());
        if (g == 0) {
            if (x.coords[a] != 0) return false;
        } else if (!divides(g, x.coords[a])) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(ToCanonical, Examples) {
    std::vector<std::pair<AtomSet, Integer>> t1 = {{0b11, Integer(1)}};
    EXPECT_EQ(to_canonical(2, t1), elem({1, 1}));

    std::vector<std::pair<AtomSet, Integer>> t2 = {{0b01, Integer(2)}, {0b10, Integer(3)}};
    EXPECT_EQ(to_canonical(2, t2), elem({2, 3}));

    // (e + f) - e - f relation: {0,1} - {0} collapses to the idempotent {1}.
    std::vector<std::pair<AtomSet, Integer>> t3 = {{0b11, Integer(1)}, {0b01, Integer(-1)}};
    EXPECT_EQ(to_canonical(2, t3), elem({0, 1}));
    EXPECT_TRUE(is_idempotent(to_canonical(2, t3)));
}

TEST(RingOps, ExamplesAndErrors) {
    EXPECT_EQ(s_mul(elem({1, 0, 1}), elem({1, 0, 1})), elem({1, 0, 1}));  // e*e = e
    EXPECT_EQ(s_mul(elem({2, 3}), elem({1, 0})), elem({2, 0}));
    EXPECT_EQ(s_add(elem({1, 2}), elem({3, 4})), elem({4, 6}));
    EXPECT_THROW(s_add(elem({1}), elem({1, 2})), DimensionMismatch);
    EXPECT_THROW(s_mul(elem({1}), elem({1, 2})), DimensionMismatch);
}

TEST(RingOps, TorsionFreeRepresentation) {
    // n * x = 0 with n != 0 forces x = 0 in atom coordinates.
    std::vector<LatticeRingElement> samples = {elem({5, -7, 0}), elem({0, 0, 1}),
                                               elem({0, 0, 0}), elem({-2, 4, 8})};
    for (const auto& x : samples) {
        for (long n : {2L, 3L, -5L}) {
            LatticeRingElement scaled = x;
            for (auto& c : scaled.coords) c *= n;
            bool scaled_zero = scaled == zero_element(3);
            bool x_zero = x == zero_element(3);
            EXPECT_EQ(scaled_zero, x_zero);
        }
    }
}

TEST(Idempotents, ExactlyZeroOneVectorsExhaustively) {
    // For k <= 4, sweep all elements with coordinates in [-3, 3] and check
    // that x*x == x holds exactly for the 0/1 vectors.
    for (unsigned k = 1; k <= 4; ++k) {
        std::vector<long> coords(k, -3);
        while (true) {
            LatticeRingElement x = elem(std::vector<long>(coords.begin(), coords.end()));
            bool idem = s_mul(x, x) == x;
            bool zero_one = true;
            for (auto c : coords) zero_one = zero_one && (c == 0 || c == 1);
            EXPECT_EQ(idem, zero_one);
            unsigned pos = 0;
            while (pos < k && coords[pos] == 3) coords[pos++] = -3;
            if (pos == k) break;
            ++coords[pos];
        }
    }
}

TEST(DecomposeIdeal, Examples) {
    std::vector<LatticeRingElement> gens = {elem({2, 4}), elem({0, 6})};
    OrthogonalDecomposition d = decompose_ideal(2, gens);
    ASSERT_EQ(d.pairs.size(), 1u);
    EXPECT_EQ(d.pairs[0].first, 0b11u);
    EXPECT_EQ(d.pairs[0].second, 2);

    std::vector<LatticeRingElement> single = {elem({1, 0})};
    d = decompose_ideal(2, single);
    ASSERT_EQ(d.pairs.size(), 1u);
    EXPECT_EQ(d.pairs[0].first, 0b01u);
    EXPECT_EQ(d.pairs[0].second, 1);

    std::vector<LatticeRingElement> none;
    EXPECT_TRUE(decompose_ideal(2, none).pairs.empty());
}

TEST(DecomposeIdeal, PairsAreOrthogonalWithDistinctMultiplicities) {
    std::vector<LatticeRingElement> gens = {elem({2, 3, 0, 2}), elem({4, 9, 0, 6})};
    OrthogonalDecomposition d = decompose_ideal(4, gens);
    for (std::size_t i = 0; i < d.pairs.size(); ++i)
        for (std::size_t j = i + 1; j < d.pairs.size(); ++j) {
            EXPECT_EQ(d.pairs[i].first & d.pairs[j].first, 0u);
            EXPECT_NE(d.pairs[i].second, d.pairs[j].second);
        }
}

TEST(DecomposeIdeal, GeneratorSpansSameIdealOnRandomInstances) {
    std::uint64_t s = 2024;
    for (int trial = 0; trial < 120; ++trial) {
        unsigned k = 1 + mix64(s) % 5;
        std::size_t gen_count = 1 + mix64(s) % 4;
        std::vector<LatticeRingElement> gens;
        for (std::size_t g = 0; g < gen_count; ++g) {
            LatticeRingElement e = zero_element(k);
            for (unsigned a = 0; a < k; ++a)
                e.coords[a] = Integer(static_cast<long>(mix64(s) % 41)) - 20;
            gens.push_back(std::move(e));
        }
        OrthogonalDecomposition d = decompose_ideal(k, gens);
        LatticeRingElement gen = d.generator(k);

        // Both-direction membership.
        std::vector<LatticeRingElement> gen_only = {gen};
        for (const auto& g : gens) EXPECT_TRUE(in_ideal(g, gen_only, k));
        EXPECT_TRUE(in_ideal(gen, gens, k));

        // Random products land in the single-generator ideal.
        for (int probe = 0; probe < 5; ++probe) {
            LatticeRingElement combo = zero_element(k);
            for (const auto& g : gens) {
                LatticeRingElement r = zero_element(k);
                for (unsigned a = 0; a < k; ++a)
                    r.coords[a] = Integer(static_cast<long>(mix64(s) % 9)) - 4;
                combo = s_add(combo, s_mul(g, r));
            }
            EXPECT_TRUE(in_ideal(combo, gen_only, k));
        }
    }
}

TEST(FreeBasis, AtomsFirstOrderGivesAtoms) {
    FiniteBooleanAlgebra b(2);
    std::vector<AtomSet> order = {0b01, 0b10, 0b11};
    auto basis = free_basis(b, order);
    ASSERT_EQ(basis.size(), 2u);
    EXPECT_EQ(basis[0], 0b01u);
    EXPECT_EQ(basis[1], 0b10u);
    EXPECT_EQ(det_exact(coordinate_matrix(2, basis)), 1);
}

TEST(FreeBasis, TopFirstOrderExample) {
    FiniteBooleanAlgebra b(2);
    std::vector<AtomSet> order = {0b11, 0b01, 0b10};
    auto basis = free_basis(b, order);
    // {1} is rejected: {{0},{1}} and {{0,1}} are distinct orthogonal
    // families with equal sums.
    ASSERT_EQ(basis.size(), 2u);
    EXPECT_EQ(basis[0], 0b11u);
    EXPECT_EQ(basis[1], 0b01u);
    EXPECT_EQ(det_exact(coordinate_matrix(2, basis)), -1);
}

TEST(FreeBasis, UnimodularForRandomOrders) {
    std::uint64_t s = 7;
    for (unsigned k = 1; k <= 5; ++k) {
        FiniteBooleanAlgebra b(k);
        for (int trial = 0; trial < 20; ++trial) {
            auto order = b.nonzero_idempotents();
            for (std::size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[mix64(s) % i]);
            auto basis = free_basis(b, order);
            ASSERT_EQ(basis.size(), k);
            Integer d = det_exact(coordinate_matrix(k, basis));
            EXPECT_TRUE(d == 1 || d == -1) << "k " << k << " trial " << trial;
        }
    }
}

TEST(FreeBasis, IsVectorSpaceBasisOverF2) {
    // Every nonzero idempotent must be an XOR combination of basis elements.
    FiniteBooleanAlgebra b(4);
    auto order = b.nonzero_idempotents();
    auto basis = free_basis(b, order);
    ASSERT_EQ(basis.size(), 4u);
    std::vector<bool> reachable(16, false);
    reachable[0] = true;
    for (std::size_t bits = 0; bits < 16; ++bits) {
        AtomSet acc = 0;
        for (unsigned i = 0; i < 4; ++i)
            if (bits & (1u << i)) acc ^= basis[i];
        reachable[acc] = true;
    }
    for (std::size_t e = 0; e < 16; ++e) EXPECT_TRUE(reachable[e]);
}

TEST(FreeBasis, GreedyRejectsImprimitiveSets) {
    // {{a,b},{b,c},{a,c}} has no equal orthogonal-family sums but spans an
    // index-2 sublattice; the greedy must not end up with it.
    FiniteBooleanAlgebra b(3);
    std::vector<AtomSet> order = {0b011, 0b110, 0b101, 0b001, 0b010, 0b100, 0b111};
    auto basis = free_basis(b, order);
    ASSERT_EQ(basis.size(), 3u);
    EXPECT_EQ(basis[0], 0b011u);
    EXPECT_EQ(basis[1], 0b110u);
    EXPECT_NE(basis[2], 0b101u);  // would make the span imprimitive
    Integer d = det_exact(coordinate_matrix(3, basis));
    EXPECT_TRUE(d == 1 || d == -1);
}

TEST(FreeBasis, AllOrdersForThreeAtoms) {
    // Exhaustive over every enumeration order of the 7 nonzero idempotents.
    FiniteBooleanAlgebra b(3);
    std::vector<AtomSet> order = b.nonzero_idempotents();
    std::sort(order.begin(), order.end());
    std::size_t checked = 0;
    do {
        auto basis = free_basis(b, order);
        ASSERT_EQ(basis.size(), 3u);
        Integer d = det_exact(coordinate_matrix(3, basis));
        ASSERT_TRUE(d == 1 || d == -1);
        ++checked;
    } while (std::next_permutation(order.begin(), order.end()));
    EXPECT_EQ(checked, 5040u);
}

TEST(FreeBasis, RejectsBadOrders) {
    FiniteBooleanAlgebra b(2);
    std::vector<AtomSet> short_order = {0b01, 0b10};
    EXPECT_THROW(free_basis(b, short_order), Error);
    std::vector<AtomSet> dup = {0b01, 0b01, 0b10};
    EXPECT_THROW(free_basis(b, dup), Error);
}

TEST(FiniteBooleanAlgebraOps, LatticeStructure) {
    FiniteBooleanAlgebra b(3);
    EXPECT_EQ(b.one(), 0b111u);
    EXPECT_EQ(b.meet(0b110, 0b011), 0b010u);
    EXPECT_EQ(b.join(0b100, 0b001), 0b101u);
    EXPECT_EQ(b.complement(0b100), 0b011u);
    EXPECT_TRUE(b.orthogonal(0b100, 0b011));
    EXPECT_EQ(b.nonzero_idempotents().size(), 7u);
    EXPECT_THROW(FiniteBooleanAlgebra(64), Error);
}
