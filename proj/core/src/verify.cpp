#include "zlift/verify.hpp"

#include <sstream>
#include <utility>

namespace zlift {

namespace {

// Minimal deterministic PRNG (splitmix64); keeps generated instances
// reproducible across platforms and standard libraries.
struct SplitMix64 {
    std::uint64_t s;
    explicit SplitMix64(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace

Integer det_exact(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("det_exact: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                // Exact division is the fraction-free step.
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(t);
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix h = m;
    IntMatrix t = IntMatrix::identity(rows);

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(h(a, j), h(b, j));
        for (std::size_t j = 0; j < rows; ++j) std::swap(t(a, j), t(b, j));
    };
    auto submul_row = [&](std::size_t dst, const Integer& f, std::size_t src) {
        for (std::size_t j = 0; j < cols; ++j) h(dst, j) -= f * h(src, j);
        for (std::size_t j = 0; j < rows; ++j) t(dst, j) -= f * t(src, j);
    };
    auto negate_row = [&](std::size_t row) {
        for (std::size_t j = 0; j < cols; ++j) h(row, j) = -h(row, j);
        for (std::size_t j = 0; j < rows; ++j) t(row, j) = -t(row, j);
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Gcd elimination below the staircase: keep moving the smallest
        // nonzero entry of the column up and reducing the others by it.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (h(i, c) == 0) continue;
                if (best == rows || cmp(abs(h(i, c)), abs(h(best, c))) < 0) best = i;
            }
            if (best == rows) break;  // column is zero below the staircase
            swap_rows(r, best);
            bool others = false;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (h(i, c) == 0) continue;
                others = true;
                Integer f = h(i, c) / h(r, c);  // truncated: remainder shrinks
                if (f != 0) submul_row(i, f, r);
            }
            if (!others) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) negate_row(r);
        // Reduce the entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            Integer f;
            mpz_fdiv_q(f.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
            if (f != 0) submul_row(i, f, r);
        }
        ++r;
    }
    return {std::move(h), std::move(t)};
}

bool is_basis_mod_q(const IntMatrix& m, const Modulus& mod) {
    if (m.rows() != m.cols()) throw NotSquare("is_basis_mod_q: matrix is not square");
    Integer d = det_exact(m);
    Integer g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), mod.prime().get_mpz_t());
    return g == 1;
}

bool VerificationReport::all_ok() const {
    if (!unimodular_ok || !basis_mod_q_ok || !units_ok) return false;
    for (auto ok : congruence_ok)
        if (!ok) return false;
    return true;
}

VerificationReport verify_lift(const IntMatrix& input, const IntMatrix& lifted,
                               const std::vector<Integer>& units, const Modulus& mod) {
    if (lifted.rows() != input.rows() || lifted.cols() != input.cols())
        throw ShapeMismatch("verify_lift: lifted shape differs from input shape");
    if (units.size() != input.rows())
        throw ShapeMismatch("verify_lift: one unit per input row required");

    VerificationReport report;
    std::ostringstream details;
    const Integer& q = mod.value();

    report.units_ok = true;
    for (const auto& u : units) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), mod.prime().get_mpz_t());
        if (g != 1) {
            report.units_ok = false;
            details << "unit " << u.get_str() << " not coprime to p; ";
        }
    }

    report.congruence_ok.assign(input.rows(), 1);
    for (std::size_t i = 0; i < input.rows(); ++i) {
        for (std::size_t j = 0; j < input.cols(); ++j) {
            Integer diff = lifted(i, j) - units[i] * input(i, j);
            if (!divides(q, diff)) {
                report.congruence_ok[i] = 0;
                details << "row " << i << " incongruent at column " << j << "; ";
                break;
            }
        }
    }

    if (input.rows() == input.cols()) {
        Integer d = det_exact(lifted);
        bool det_ok = (d == 1 || d == -1);
        // Second, independent certificate: the HNF of a unimodular matrix is
        // the identity.
        HermiteForm hf = hermite_normal_form(lifted);
        bool hnf_ok = hf.h == IntMatrix::identity(lifted.rows());
        report.unimodular_ok = det_ok && hnf_ok;
        if (!det_ok) details << "det(lifted) = " << d.get_str() << "; ";
        if (!hnf_ok) details << "HNF of lifted is not the identity; ";
        report.basis_mod_q_ok = is_basis_mod_q(input, mod);
        if (!report.basis_mod_q_ok) details << "input rows are not a basis mod q; ";
    } else {
        report.unimodular_ok = true;
        report.basis_mod_q_ok = true;
        details << "non-square input: determinant and basis checks skipped; ";
    }

    report.details = details.str();
    return report;
}

VerificationReport verify_lift(const IntMatrix& input, const LiftResult& result) {
    return verify_lift(input, result.lifted, result.units, result.modulus);
}

VerificationReport verify_lift(const IntMatrix& input, const StreamLiftReport& report,
                               const Modulus& mod) {
    return verify_lift(input, report.lifted, report.units, mod);
}

IntMatrix random_basis_mod_q(std::size_t n, const Modulus& mod, std::uint64_t seed,
                             std::size_t ops) {
    if (n < 1) throw Error("random_basis_mod_q: n must be >= 1");
    IntMatrix m = IntMatrix::identity(n);
    if (ops == 0) return m;

    SplitMix64 rng(seed);
    const Integer& p = mod.prime();
    const Integer& q = mod.value();
    for (std::size_t t = 0; t < ops; ++t) {
        if (n > 1 && rng.below(3) != 0) {
            std::size_t i = rng.below(n);
            std::size_t j = rng.below(n);
            while (j == i) j = rng.below(n);
            Integer c = Integer(1 + static_cast<long>(rng.below(3)));
            if (rng.below(2)) c = -c;
            m.add_row_multiple(i, j, c);
        } else {
            std::size_t i = rng.below(n);
            Integer u;
            do {
                u = nonneg_residue(Integer(static_cast<long>(1 + rng.below(16))), q);
            } while (u == 0 || divides(p, u));
            m.scale_row(i, symmetric_residue(u, q));
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) += q * Integer(static_cast<long>(rng.below(5)) - 2);
    return m;
}

}  // namespace zlift
