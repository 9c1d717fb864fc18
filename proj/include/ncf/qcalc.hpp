#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncf/qpoly.hpp"

namespace ncf {

/// Ordinary binomial coefficient; 0 when b < 0 or b > a.
BigInt binomial(long long a, long long b);

/// [a]_q = 1 + q + ... + q^(a-1); [0]_q = 0.
QPoly q_int(int a);

/// [a]_q! = [a]_q [a-1]_q ... [1]_q.
QPoly q_factorial(int a);

/// Gaussian binomial, built by alternately multiplying by [a-j+1]_q and
/// dividing exactly by [j]_q. Zero when b < 0 or b > a.
QPoly q_binomial(int a, int b);

/// The q-analogue of the forest count,
///   qbin(n, k-1) * qbin(3n-2k-1, n-k) / [2n-k]_q.
/// Throws InvariantViolation if the division is inexact or a coefficient
/// is negative.
QPoly f_poly(int n, int k);

/// Number of non-crossing forests on n vertices with k components,
///   C(n, k-1) * C(3n-2k-1, n-k) / (2n-k).
BigInt count_formula(int n, int k);

/// d-th cyclotomic polynomial. Built once per d from q^d - 1 by dividing
/// out the smaller divisors' cyclotomics; the cache is mutex-guarded.
const QPoly& cyclotomic(int d);

/// A polynomial reduced modulo Phi_d: the exact value at a primitive d-th
/// root of unity, expressed in the power basis 1, w, ..., w^(phi(d)-1).
class CyclotomicResidue {
public:
    CyclotomicResidue(int d, const QPoly& p);

    int d() const noexcept { return d_; }
    const QPoly& residue() const noexcept { return residue_; }

    /// True when the represented value is a rational integer (constant residue).
    bool is_integer() const noexcept { return residue_.degree() <= 0; }
    /// Throws InputError("value is not a rational integer") otherwise.
    BigInt as_integer() const;

    friend CyclotomicResidue operator+(const CyclotomicResidue& a, const CyclotomicResidue& b);
    friend CyclotomicResidue operator*(const CyclotomicResidue& a, const CyclotomicResidue& b);
    friend CyclotomicResidue operator*(const BigInt& c, const CyclotomicResidue& a);
    friend bool operator==(const CyclotomicResidue&, const CyclotomicResidue&) = default;

private:
    int d_;
    QPoly residue_;
};

/// p(w) for a primitive d-th root of unity w, exactly.
CyclotomicResidue eval_at_root(const QPoly& p, int d);

/// qbin(a, b) at a primitive d-th root of unity via the q-Lucas
/// factorization C(a div d, b div d) * qbin(a mod d, b mod d)(w).
CyclotomicResidue q_lucas(int a, int b, int d);

/// Largest m with Phi_d^m dividing p (p nonzero).
int cyclotomic_multiplicity(const QPoly& p, int d);

/// Outcome of checking the three root-of-unity facts about q-integers for
/// one (a, b, d). A check that does not apply to the arguments is nullopt.
struct QFactsVerdict {
    bool simple_zero = false;          // mult of Phi_d in [a]_q is 1 iff d != 1 and d | a, else 0
    std::optional<bool> unit_value;    // [a]_q(w) = 1 when a = 1 mod d (d >= 2)
    std::optional<bool> ratio;         // [a]_q(w) / [b]_q(w) rule when a = b mod d
    std::vector<std::string> witnesses;

    bool passed() const noexcept {
        return simple_zero && unit_value.value_or(true) && ratio.value_or(true);
    }
};

QFactsVerdict q_facts_check(int a, int b, int d);

}  // namespace ncf
