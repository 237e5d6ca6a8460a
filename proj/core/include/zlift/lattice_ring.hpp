#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "zlift/arith.hpp"
#include "zlift/matrix.hpp"

namespace zlift {

// Elements of a finite boolean algebra with k atoms, as bitsets over the
// atoms.  Meet is intersection, join union, complement is relative to the
// full set.
using AtomSet = std::uint64_t;

class FiniteBooleanAlgebra {
public:
    // k <= 63 atoms.
    explicit FiniteBooleanAlgebra(unsigned atom_count);

    unsigned atom_count() const { return k_; }
    AtomSet zero() const { return 0; }
    AtomSet one() const { return full_; }
    AtomSet meet(AtomSet a, AtomSet b) const { return a & b; }
    AtomSet join(AtomSet a, AtomSet b) const { return a | b; }
    AtomSet complement(AtomSet a) const { return full_ & ~a; }
    bool orthogonal(AtomSet a, AtomSet b) const { return (a & b) == 0; }
    bool contains(AtomSet a) const { return (a & ~full_) == 0; }

    // All 2^k - 1 nonzero elements in increasing numeric order.
    std::vector<AtomSet> nonzero_idempotents() const;

private:
    unsigned k_;
    AtomSet full_;
};

// Element of the free lattice ring on a finite boolean algebra, stored in
// atom coordinates: the element sum_i e_i n_i with the e_i pairwise
// orthogonal corresponds to the integer vector with n_i at the atoms of e_i.
// Addition and multiplication are coordinatewise; an idempotent is exactly a
// 0/1 vector.
struct LatticeRingElement {
    std::vector<Integer> coords;

    std::size_t atom_count() const { return coords.size(); }
    bool operator==(const LatticeRingElement& other) const = default;
};

LatticeRingElement zero_element(unsigned k);

// Collapses a formal sum of (idempotent, integer) terms to atom coordinates:
// coords[a] = sum of the integers of the terms whose idempotent contains a.
LatticeRingElement to_canonical(unsigned k,
                                std::span<const std::pair<AtomSet, Integer>> terms);

LatticeRingElement s_add(const LatticeRingElement& x, const LatticeRingElement& y);
LatticeRingElement s_mul(const LatticeRingElement& x, const LatticeRingElement& y);

// Idempotent of an element, as a mask, when it is one (all coords 0/1).
bool is_idempotent(const LatticeRingElement& x);
LatticeRingElement idempotent_element(unsigned k, AtomSet mask);

// A single generator sum_i f_i m_i of a finitely generated ideal, with the
// f_i pairwise orthogonal and the m_i distinct positive multiplicities.
struct OrthogonalDecomposition {
    std::vector<std::pair<AtomSet, Integer>> pairs;  // multiplicity ascending

    LatticeRingElement generator(unsigned k) const;
    bool operator==(const OrthogonalDecomposition& other) const = default;
};

// Decomposes the ideal generated by `generators`: coordinatewise the ideal
// is gcd-generated, so atoms are grouped by their gcd value g_a over the
// generators and each nonzero group contributes one (idempotent, g) pair.
// The returned generator spans the same ideal as the inputs.
OrthogonalDecomposition decompose_ideal(unsigned k,
                                        std::span<const LatticeRingElement> generators);

// Greedy free Z-basis of the lattice ring: scans the nonzero idempotents in
// the given order and keeps each one as long as the kept set stays
// Z-independent with a primitive span (a direct summand of the coordinate
// lattice); in particular no two distinct orthogonal families in the kept
// set can share a sum.  The result has exactly k elements and a unimodular
// atom-coordinate matrix, and is also an F_2 vector-space basis of the
// boolean algebra.  `order` must enumerate all nonzero idempotents exactly
// once.
std::vector<AtomSet> free_basis(const FiniteBooleanAlgebra& b,
                                std::span<const AtomSet> order);

// Rows are the atom-coordinate vectors of the given idempotents.
IntMatrix coordinate_matrix(unsigned k, std::span<const AtomSet> idempotents);

}  // namespace zlift
