#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zlift/arith.hpp"
#include "zlift/lift_finite.hpp"
#include "zlift/lift_stream.hpp"
#include "zlift/matrix.hpp"

namespace zlift {

// Independent certification of lift results.  Nothing here calls into either
// elimination engine; a lift is accepted only on the evidence of exact
// determinants, Hermite normal forms and entrywise congruences.

// Exact determinant by fraction-free (Bareiss) elimination.  Throws NotSquare.
Integer det_exact(const IntMatrix& m);

// Row-style Hermite normal form: t unimodular, t * m = h, h upper staircase
// with positive pivots and entries above each pivot reduced into [0, pivot).
struct HermiteForm {
    IntMatrix h;
    IntMatrix t;
};
HermiteForm hermite_normal_form(const IntMatrix& m);

// For square m: true iff det(m) is coprime to p, which over Z/qZ (a local
// ring) says exactly that the rows form a free basis.  Throws NotSquare.
bool is_basis_mod_q(const IntMatrix& m, const Modulus& mod);

struct VerificationReport {
    std::vector<std::uint8_t> congruence_ok;  // per input row
    bool unimodular_ok = false;
    bool basis_mod_q_ok = false;
    bool units_ok = false;
    std::string details;

    bool all_ok() const;
};

// Checks a claimed lift of `input`:
//   (i)   every unit coprime to p;
//   (ii)  lifted == diag(units) * input mod q, entrywise;
//   (iii) for square inputs |det(lifted)| = 1, certified twice: by the exact
//         determinant and independently by the HNF reducing to the identity;
//   (iv)  for square inputs, the input rows were a basis mod q.
// Non-square shapes skip (iii)/(iv) (noted in details).  Throws ShapeMismatch.
VerificationReport verify_lift(const IntMatrix& input, const IntMatrix& lifted,
                               const std::vector<Integer>& units, const Modulus& mod);
VerificationReport verify_lift(const IntMatrix& input, const LiftResult& result);
VerificationReport verify_lift(const IntMatrix& input, const StreamLiftReport& report,
                               const Modulus& mod);

// Deterministic instance generator: applies `ops` random row additions and
// unit row scalings to the identity, then perturbs every entry by a random
// multiple of q.  The result is a basis mod q by construction.  ops == 0
// returns the identity unchanged.
IntMatrix random_basis_mod_q(std::size_t n, const Modulus& mod, std::uint64_t seed,
                             std::size_t ops);

}  // namespace zlift
