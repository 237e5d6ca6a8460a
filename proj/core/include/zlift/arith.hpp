#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "zlift/errors.hpp"

namespace zlift {

// All entries in this library are exact arbitrary-precision integers.
using Integer = mpz_class;

// A prime-power modulus p^nu.  All residue arithmetic in the lift engines is
// done modulo value() = p^nu; units are the residues coprime to p.
//
// Moduli with two distinct prime factors are rejected at construction: no
// basis lift exists over such rings, so they must never reach an engine.
class Modulus {
public:
    // Checks primality of p by trial division (fine at the sizes this
    // library is meant for) and requires nu >= 1.  Throws InvalidModulus.
    Modulus(Integer prime, unsigned exponent);

    // Skips the primality check; the caller vouches for p.
    static Modulus trusted(Integer prime, unsigned exponent);

    const Integer& prime() const { return prime_; }
    unsigned exponent() const { return exponent_; }
    // q = p^nu
    const Integer& value() const { return value_; }

private:
    Modulus(Integer prime, unsigned exponent, bool check);

    Integer prime_;
    unsigned exponent_;
    Integer value_;
};

// Symmetric remainder: result == x (mod m) with -m/2 < result <= m/2.
// For even m the representative +m/2 is used.
Integer symmetric_residue(const Integer& x, const Integer& m);

// True iff m divides x.
bool divides(const Integer& m, const Integer& x);

// Canonical residue in [0, m).
Integer nonneg_residue(const Integer& x, const Integer& m);

// Inverse of u modulo mod.value(), returned as a symmetric residue.
// Throws NotAUnit if u shares a factor with p.
Integer unit_inverse(const Integer& u, const Modulus& mod);

// g = gcd(a, b) >= 0 together with x, y such that x*a + y*b = g.
// Deterministic: plain iterative extended Euclid with truncated division,
// so extended_gcd(0, b) = (|b|, 0, sgn b) and extended_gcd(a, 0) = (|a|, sgn a, 0).
struct ExtendedGcd {
    Integer gcd;
    Integer x;
    Integer y;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

// Gcd of a vector of integers plus one linear combination realizing it.
struct GcdCombination {
    Integer gcd;                        // >= 0; 0 only when every input is 0
    std::vector<Integer> coefficients;  // same length as the input
};

// Left fold of two-term extended gcds: at step i the running gcd g is
// combined with v[i] as x*g + y*v[i] = g', coefficient i becomes y, and all
// earlier coefficients are rescaled by x.  The fold order is fixed; no
// attempt is made to shrink the coefficients.
GcdCombination mgcdex(std::span<const Integer> v);

}  // namespace zlift
