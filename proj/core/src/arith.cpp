#include "zlift/arith.hpp"

#include <utility>

namespace zlift {

namespace {

// Trial division; adequate for the prime sizes this library targets.
bool is_prime_trial_division(const Integer& p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (mpz_even_p(p.get_mpz_t())) return false;
    Integer d = 3;
    Integer dd;
    while (true) {
        dd = d * d;
        if (dd > p) return true;
        if (mpz_divisible_p(p.get_mpz_t(), d.get_mpz_t())) return false;
        d += 2;
    }
}

}  // namespace

Modulus::Modulus(Integer prime, unsigned exponent) : Modulus(std::move(prime), exponent, true) {}

Modulus Modulus::trusted(Integer prime, unsigned exponent) {
    return Modulus(std::move(prime), exponent, false);
}

Modulus::Modulus(Integer prime, unsigned exponent, bool check)
    : prime_(std::move(prime)), exponent_(exponent) {
    if (exponent_ < 1) throw InvalidModulus("modulus exponent must be >= 1");
    if (prime_ < 2) throw InvalidModulus("modulus prime must be >= 2");
    if (check && !is_prime_trial_division(prime_))
        throw InvalidModulus("modulus base " + prime_.get_str() +
                             " is not prime; only prime-power moduli are supported");
    mpz_pow_ui(value_.get_mpz_t(), prime_.get_mpz_t(), exponent_);
}

Integer symmetric_residue(const Integer& x, const Integer& m) {
    if (m < 1) throw Error("symmetric_residue: modulus must be >= 1");
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());  // r in [0, m)
    if (2 * r > m) r -= m;
    return r;
}

bool divides(const Integer& m, const Integer& x) {
    return mpz_divisible_p(x.get_mpz_t(), m.get_mpz_t()) != 0;
}

Integer nonneg_residue(const Integer& x, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer unit_inverse(const Integer& u, const Modulus& mod) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), mod.prime().get_mpz_t());
    if (g != 1)
        throw NotAUnit(u.get_str() + " shares the factor " + g.get_str() + " with " +
                       mod.prime().get_str());
    Integer inv;
    int ok = mpz_invert(inv.get_mpz_t(), u.get_mpz_t(), mod.value().get_mpz_t());
    if (!ok) throw NotAUnit(u.get_str() + " has no inverse modulo " + mod.value().get_str());
    return symmetric_residue(inv, mod.value());
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
    if (a == 0 && b == 0) return {0, 0, 0};
    Integer old_r = a, r = b;
    Integer old_x = 1, x = 0;
    Integer old_y = 0, y = 1;
    Integer q, tmp;
    while (r != 0) {
        q = old_r / r;  // truncated division
        tmp = old_r - q * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_x - q * x;
        old_x = std::move(x);
        x = std::move(tmp);
        tmp = old_y - q * y;
        old_y = std::move(y);
        y = std::move(tmp);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    return {std::move(old_r), std::move(old_x), std::move(old_y)};
}

GcdCombination mgcdex(std::span<const Integer> v) {
    if (v.empty()) throw Error("mgcdex: input must be nonempty");
    Integer g = 0;
    std::vector<Integer> coeffs(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ExtendedGcd e = extended_gcd(g, v[i]);  // e.x*g + e.y*v[i] = e.gcd
        coeffs[i] = e.y;
        for (std::size_t j = 0; j < i; ++j) coeffs[j] *= e.x;
        g = std::move(e.gcd);
    }
    return {std::move(g), std::move(coeffs)};
}

}  // namespace zlift
