#include "zlift/lattice_ring.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace zlift {

FiniteBooleanAlgebra::FiniteBooleanAlgebra(unsigned atom_count) : k_(atom_count) {
    if (atom_count > 63) throw Error("FiniteBooleanAlgebra: at most 63 atoms supported");
    full_ = atom_count == 0 ? 0 : ((AtomSet{1} << atom_count) - 1);
}

std::vector<AtomSet> FiniteBooleanAlgebra::nonzero_idempotents() const {
    std::vector<AtomSet> out;
    out.reserve((std::size_t{1} << k_) - 1);
    for (AtomSet e = 1; e <= full_; ++e) out.push_back(e);
    return out;
}

LatticeRingElement zero_element(unsigned k) {
    return LatticeRingElement{std::vector<Integer>(k)};
}

LatticeRingElement to_canonical(unsigned k,
                                std::span<const std::pair<AtomSet, Integer>> terms) {
    FiniteBooleanAlgebra b(k);
    LatticeRingElement x = zero_element(k);
    for (const auto& [mask, n] : terms) {
        if (!b.contains(mask)) throw Error("to_canonical: idempotent outside the algebra");
        for (unsigned a = 0; a < k; ++a)
            if (mask & (AtomSet{1} << a)) x.coords[a] += n;
    }
    return x;
}

LatticeRingElement s_add(const LatticeRingElement& x, const LatticeRingElement& y) {
    if (x.atom_count() != y.atom_count())
        throw DimensionMismatch("s_add: elements over different atom counts");
    LatticeRingElement out = x;
    for (std::size_t a = 0; a < y.coords.size(); ++a) out.coords[a] += y.coords[a];
    return out;
}

LatticeRingElement s_mul(const LatticeRingElement& x, const LatticeRingElement& y) {
    if (x.atom_count() != y.atom_count())
        throw DimensionMismatch("s_mul: elements over different atom counts");
    LatticeRingElement out = x;
    for (std::size_t a = 0; a < y.coords.size(); ++a) out.coords[a] *= y.coords[a];
    return out;
}

bool is_idempotent(const LatticeRingElement& x) {
    for (const auto& c : x.coords)
        if (c != 0 && c != 1) return false;
    return true;
}

LatticeRingElement idempotent_element(unsigned k, AtomSet mask) {
    LatticeRingElement x = zero_element(k);
    for (unsigned a = 0; a < k; ++a)
        if (mask & (AtomSet{1} << a)) x.coords[a] = 1;
    return x;
}

LatticeRingElement OrthogonalDecomposition::generator(unsigned k) const {
    LatticeRingElement x = zero_element(k);
    for (const auto& [mask, mult] : pairs)
        for (unsigned a = 0; a < k; ++a)
            if (mask & (AtomSet{1} << a)) x.coords[a] += mult;
    return x;
}

OrthogonalDecomposition decompose_ideal(unsigned k,
                                        std::span<const LatticeRingElement> generators) {
    for (const auto& g : generators)
        if (g.atom_count() != k)
            throw DimensionMismatch("decompose_ideal: generator over wrong atom count");

    // Coordinatewise the ideal at atom a is gcd{|g_a|} * Z; atoms sharing a
    // gcd value are collected into one idempotent.
    std::map<Integer, AtomSet> groups;
    for (unsigned a = 0; a < k; ++a) {
        Integer g = 0;
        for (const auto& gen : generators)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gen.coords[a].get_mpz_t());
        if (g != 0) groups[g] |= AtomSet{1} << a;
    }
    OrthogonalDecomposition out;
    for (auto& [mult, mask] : groups) out.pairs.emplace_back(mask, mult);
    return out;
}

namespace {

// The candidate set is kept Z-independent with a primitive span: a direct
// summand of the atom-coordinate lattice.  Equivalent test: the row echelon
// form over Z has no zero rows and every staircase pivot is 1.  (Rejecting
// merely on equal orthogonal-family sums is not enough; sets like
// {{a,b},{b,c},{a,c}} pass that test yet span an index-2 sublattice.)
bool primitive_independent(const std::vector<AtomSet>& set, unsigned k) {
    const std::size_t n = set.size();
    if (n > k) return false;
    std::vector<std::vector<Integer>> h(n, std::vector<Integer>(k));
    for (std::size_t i = 0; i < n; ++i)
        for (unsigned a = 0; a < k; ++a)
            if (set[i] & (AtomSet{1} << a)) h[i][a] = 1;

    std::size_t r = 0;
    std::vector<Integer> pivot_values;
    for (unsigned c = 0; c < k && r < n; ++c) {
        while (true) {
            std::size_t best = n;
            for (std::size_t i = r; i < n; ++i) {
                if (h[i][c] == 0) continue;
                if (best == n || cmp(abs(h[i][c]), abs(h[best][c])) < 0) best = i;
            }
            if (best == n) break;
            std::swap(h[r], h[best]);
            bool others = false;
            for (std::size_t i = r + 1; i < n; ++i) {
                if (h[i][c] == 0) continue;
                others = true;
                Integer f = h[i][c] / h[r][c];
                if (f != 0)
                    for (unsigned j = 0; j < k; ++j) h[i][j] -= f * h[r][j];
            }
            if (!others) break;
        }
        if (h[r][c] == 0) continue;
        pivot_values.push_back(abs(h[r][c]));
        ++r;
    }
    if (r < n) return false;  // dependent rows
    for (const auto& p : pivot_values)
        if (p != 1) return false;  // span is a proper-index sublattice
    return true;
}

}  // namespace

std::vector<AtomSet> free_basis(const FiniteBooleanAlgebra& b, std::span<const AtomSet> order) {
    const unsigned k = b.atom_count();
    const std::size_t expected = (std::size_t{1} << k) - 1;
    if (order.size() != expected)
        throw Error("free_basis: order must enumerate all " + std::to_string(expected) +
                    " nonzero idempotents");
    std::vector<bool> seen(expected + 1, false);
    for (AtomSet e : order) {
        if (e == 0 || !b.contains(e) || seen[e])
            throw Error("free_basis: order is not a permutation of the nonzero idempotents");
        seen[e] = true;
    }

    std::vector<AtomSet> basis;
    for (AtomSet e : order) {
        basis.push_back(e);
        if (!primitive_independent(basis, k)) basis.pop_back();
    }
    if (basis.size() != k) throw Error("free_basis: internal error, expected k elements");
    return basis;
}

IntMatrix coordinate_matrix(unsigned k, std::span<const AtomSet> idempotents) {
    IntMatrix m(idempotents.size(), k);
    for (std::size_t i = 0; i < idempotents.size(); ++i)
        for (unsigned a = 0; a < k; ++a)
            if (idempotents[i] & (AtomSet{1} << a)) m(i, a) = 1;
    return m;
}

}  // namespace zlift
