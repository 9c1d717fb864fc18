#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncf/qpoly.hpp"

namespace ncf {

/// Positive divisors of n in increasing order.
std::vector<int> divisors(int n);

/// Value of f_{n,k}(q) at a primitive d-th root of unity from the closed
/// forms: f_{n,k} for d = 1; (n'-k'+1) f_{n',k'} when d | k;
/// C(n',k'-1) C(3n'-2k', n'-k') with k' = (k+1)/2 when d = 2 and k is odd;
/// zero otherwise. Throws InputError when d does not divide n.
BigInt closed_form_eval(int n, int k, int d);

/// |F_{n,k}^d| by filtering the full enumeration.
std::uint64_t fixed_count_brute(int n, int k, int d);

/// Fixed-point counts for every divisor of n from one pass over F_{n,k}.
/// Entry i belongs to divisors(n)[i].
std::vector<std::uint64_t> fixed_counts_brute(int n, int k);

struct BijectionCount {
    std::optional<std::uint64_t> count;  // absent when no bijection applies
    std::string reason;
};

/// |F_{n,k}^d| by pushing every (forest, good vertex) or (forest, mark)
/// pair through C_d or C_2 and checking the images are distinct. Applies
/// for d >= 2 with d | k, or d = 2 with k odd. A repeated image throws
/// InvariantViolation.
BijectionCount fixed_count_bijection(int n, int k, int d);

struct CspRow {
    int d = 0;
    BigInt closed_form;
    std::optional<BigInt> poly_eval;  // absent if f_{n,k}(w) is not an integer
    std::uint64_t brute = 0;
    std::optional<std::uint64_t> bijection;
    bool agree = false;
    std::string note;  // explanation when something failed
};

struct CspReport {
    int n = 0;
    int k = 0;
    std::vector<CspRow> rows;  // one per divisor of n, increasing d
    bool verdict = false;
};

/// Compares the closed form, the exact evaluation of f_{n,k}(q) mod Phi_d,
/// the brute-force fixed count and (where it applies) the bijective count
/// for every d | n. Disagreements and internal failures become failing rows
/// instead of exceptions; only invalid (n, k) throws.
CspReport verify_csp(int n, int k);

/// C(n',k'-1) C(3n'-2k', n'-k') == (3n'-2k') f_{n',k'}: the closed-form value
/// at -1 for odd k agrees with the count of marked forests.
bool check_odd_half_turn_identity(int n_prime, int k_prime);

}  // namespace ncf
