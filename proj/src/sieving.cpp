#include "ncf/sieving.hpp"

#include <set>

#include "ncf/bijections.hpp"
#include "ncf/enumeration.hpp"
#include "ncf/errors.hpp"
#include "ncf/forest.hpp"
#include "ncf/qcalc.hpp"

namespace ncf {

namespace {

void check_nkd(int n, int k, int d) {
    if (n < 1 || k < 1 || k > n) {
        throw InputError("need 1 <= k <= n, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
    }
    if (d < 1 || n % d != 0) {
        throw InputError("d = " + std::to_string(d) + " does not divide n = " + std::to_string(n));
    }
}

}  // namespace

std::vector<int> divisors(int n) {
    if (n < 1) throw InputError("divisors of a non-positive number");
    std::vector<int> out;
    for (int d = 1; d <= n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

BigInt closed_form_eval(int n, int k, int d) {
    check_nkd(n, k, d);
    if (d == 1) return count_formula(n, k);
    const int small_n = n / d;
    if (k % d == 0) {
        const int small_k = k / d;
        return BigInt(small_n - small_k + 1) * count_formula(small_n, small_k);
    }
    if (d == 2 && k % 2 == 1) {
        const int small_k = (k + 1) / 2;
        return binomial(small_n, small_k - 1) * binomial(3 * small_n - 2 * small_k, small_n - small_k);
    }
    return 0;
}

std::uint64_t fixed_count_brute(int n, int k, int d) {
    check_nkd(n, k, d);
    std::uint64_t count = 0;
    auto stream = enumerate_forests(n, k);
    while (auto f = stream.next()) {
        if (is_d_invariant(*f, d)) ++count;
    }
    return count;
}

std::vector<std::uint64_t> fixed_counts_brute(int n, int k) {
    check_nkd(n, k, 1);
    const auto ds = divisors(n);
    std::vector<std::uint64_t> counts(ds.size(), 0);
    auto stream = enumerate_forests(n, k);
    while (auto f = stream.next()) {
        for (std::size_t i = 0; i < ds.size(); ++i) {
            if (is_d_invariant(*f, ds[i])) ++counts[i];
        }
    }
    return counts;
}

BijectionCount fixed_count_bijection(int n, int k, int d) {
    check_nkd(n, k, d);
    if (d < 2) return {std::nullopt, "no bijection for d = 1"};
    const int small_n = n / d;
    std::set<NonCrossingForest> images;
    auto insert = [&](NonCrossingForest f) {
        if (f.k() != k) throw InvariantViolation("bijection image has the wrong component count");
        if (!images.insert(std::move(f)).second) {
            throw InvariantViolation("bijection hit the same forest twice at n = " + std::to_string(n) +
                                     ", k = " + std::to_string(k) + ", d = " + std::to_string(d));
        }
    };
    if (k % d == 0) {
        auto stream = enumerate_forests(small_n, k / d);
        while (auto phi = stream.next()) {
            for (Vertex v : classify_vertices(*phi).good) insert(construct_cd(*phi, v, d));
        }
        return {images.size(), "good-vertex construction"};
    }
    if (d == 2 && k % 2 == 1) {
        auto stream = enumerate_forests(small_n, (k + 1) / 2);
        while (auto phi = stream.next()) {
            for (const Mark& m : all_marks(*phi)) insert(construct_c2_odd(*phi, m));
        }
        return {images.size(), "marked diameter construction"};
    }
    return {std::nullopt, "d does not divide k and (d, k) is not (2, odd)"};
}

CspReport verify_csp(int n, int k) {
    check_nkd(n, k, 1);
    CspReport report{n, k, {}, true};
    const auto ds = divisors(n);

    std::optional<QPoly> f;
    std::string poly_error;
    try {
        f = f_poly(n, k);
    } catch (const std::exception& e) {
        poly_error = e.what();
    }
    const auto brute = fixed_counts_brute(n, k);

    for (std::size_t i = 0; i < ds.size(); ++i) {
        CspRow row;
        row.d = ds[i];
        row.closed_form = closed_form_eval(n, k, row.d);
        row.brute = brute[i];
        if (f) {
            const auto value = eval_at_root(*f, row.d);
            if (value.is_integer()) {
                row.poly_eval = value.as_integer();
            } else {
                row.note = "f(w) is not an integer: " + value.residue().to_list_string();
            }
        } else {
            row.note = poly_error;
        }
        try {
            row.bijection = fixed_count_bijection(n, k, row.d).count;
        } catch (const std::exception& e) {
            row.note = e.what();
            row.agree = false;
            report.rows.push_back(std::move(row));
            report.verdict = false;
            continue;
        }
        const BigInt truth(row.brute);
        row.agree = row.poly_eval && *row.poly_eval == truth && row.closed_form == truth &&
                    (!row.bijection || *row.bijection == row.brute);
        report.verdict = report.verdict && row.agree;
        report.rows.push_back(std::move(row));
    }
    return report;
}

bool check_odd_half_turn_identity(int n_prime, int k_prime) {
    if (n_prime < 1 || k_prime < 1 || k_prime > n_prime) {
        throw InputError("need 1 <= k' <= n'");
    }
    const BigInt lhs = binomial(n_prime, k_prime - 1) *
                       binomial(3 * n_prime - 2 * k_prime, n_prime - k_prime);
    const BigInt rhs = BigInt(3 * n_prime - 2 * k_prime) * count_formula(n_prime, k_prime);
    return lhs == rhs;
}

}  // namespace ncf
