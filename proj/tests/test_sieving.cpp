#include "doctest.h"
#include "ncf/errors.hpp"
#include "ncf/qcalc.hpp"
#include "ncf/sieving.hpp"

using namespace ncf;

TEST_CASE("divisors") {
    CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<int>{1});
    CHECK_THROWS_AS(divisors(0), InputError);
}

TEST_CASE("closed_form_eval examples") {
    CHECK(closed_form_eval(4, 2, 2) == 2);
    CHECK(closed_form_eval(4, 1, 2) == 4);
    CHECK(closed_form_eval(3, 1, 3) == 0);
    CHECK(closed_form_eval(12, 7, 1) == count_formula(12, 7));
    CHECK(closed_form_eval(6, 3, 3) == 2);
    CHECK_THROWS_AS(closed_form_eval(4, 2, 3), InputError);
}

TEST_CASE("fixed_count_brute examples") {
    CHECK(fixed_count_brute(4, 3, 2) == 2);
    CHECK(fixed_count_brute(4, 2, 4) == 0);
    for (int n = 1; n <= 9; ++n)
        for (int d : divisors(n)) CHECK(fixed_count_brute(n, n, d) == 1);
    CHECK_THROWS_AS(fixed_count_brute(6, 2, 4), InputError);
}

TEST_CASE("fixed_count_bijection examples") {
    CHECK(fixed_count_bijection(4, 2, 2).count == std::optional<std::uint64_t>(2));
    CHECK(fixed_count_bijection(4, 1, 2).count == std::optional<std::uint64_t>(4));
    CHECK(fixed_count_bijection(6, 3, 3).count == std::optional<std::uint64_t>(2));
    CHECK(fixed_count_brute(6, 3, 3) == 2);
    const auto none = fixed_count_bijection(6, 2, 3);
    CHECK_FALSE(none.count.has_value());
    CHECK_FALSE(none.reason.empty());
    CHECK_FALSE(fixed_count_bijection(6, 2, 1).count.has_value());
}

TEST_CASE("verify_csp examples") {
    const auto r = verify_csp(4, 2);
    REQUIRE(r.rows.size() == 3);
    CHECK(r.rows[0].d == 1);
    CHECK(r.rows[0].brute == 14);
    CHECK(r.rows[1].brute == 2);
    CHECK(r.rows[2].brute == 0);
    CHECK(r.verdict);

    const auto t = verify_csp(3, 1);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].brute == 3);
    CHECK(t.rows[1].brute == 0);
    CHECK(t.verdict);

    const auto one = verify_csp(1, 1);
    REQUIRE(one.rows.size() == 1);
    CHECK(one.rows[0].closed_form == 1);
    CHECK(one.verdict);

    CHECK_THROWS_AS(verify_csp(3, 4), InputError);
}

TEST_CASE("every CSP row agrees for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            const auto r = verify_csp(n, k);
            CAPTURE(n);
            CAPTURE(k);
            REQUIRE(r.verdict);
            REQUIRE(r.rows.size() == divisors(n).size());
            for (const auto& row : r.rows) {
                if (row.d >= 2 && k % row.d != 0 && !(row.d == 2 && k % 2 == 1)) {
                    REQUIRE(row.brute == 0);
                    REQUIRE(row.closed_form == 0);
                }
            }
        }
    }
}

TEST_CASE("odd half-turn identity") {
    CHECK(check_odd_half_turn_identity(2, 1));
    CHECK(check_odd_half_turn_identity(4, 2));
    CHECK(binomial(4, 1) * binomial(8, 2) == 112);
    for (int n = 1; n <= 30; ++n) CHECK(check_odd_half_turn_identity(n, n));
    CHECK_THROWS_AS(check_odd_half_turn_identity(3, 4), InputError);
}
