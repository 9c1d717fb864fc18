#include <set>

#include "doctest.h"
#include "ncf/enumeration.hpp"
#include "ncf/errors.hpp"
#include "ncf/qcalc.hpp"
#include "oracles.hpp"

using namespace ncf;

namespace {

std::vector<NonCrossingForest> collect(ForestStream s) {
    std::vector<NonCrossingForest> out;
    for (const auto& f : s) out.push_back(f);
    return out;
}

}  // namespace

TEST_CASE("small enumerations") {
    const auto trees3 = collect(enumerate_forests(3, 1));
    REQUIRE(trees3.size() == 3);
    CHECK(trees3[0] == oracle::forest(3, {{1, 2}, {1, 3}}));
    CHECK(trees3[1] == oracle::forest(3, {{1, 2}, {2, 3}}));
    CHECK(trees3[2] == oracle::forest(3, {{1, 3}, {2, 3}}));

    for (int n = 1; n <= 7; ++n) {
        const auto only = collect(enumerate_forests(n, n));
        REQUIRE(only.size() == 1);
        CHECK(only[0].edges().empty());
    }
    CHECK(collect(enumerate_forests(4, 1)).size() == 12);
    CHECK(count_by_enumeration(5, 1) == 55);
    CHECK(count_by_enumeration(3, 2) == 3);
}

TEST_CASE("enumerate_forests rejects k out of range") {
    CHECK_THROWS_AS(enumerate_forests(4, 0), InputError);
    CHECK_THROWS_AS(enumerate_forests(4, 5), InputError);
    CHECK_THROWS_AS(enumerate_all_forests(0), InputError);
}

TEST_CASE("subset scan oracle matches the stream for every k, n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        const auto scan = count_by_subset_scan(n);
        std::uint64_t total = 0;
        for (int k = 1; k <= n; ++k) {
            REQUIRE(count_by_enumeration(n, k) == scan[k]);
            total += scan[k];
        }
        std::uint64_t streamed = 0;
        auto all = enumerate_all_forests(n);
        while (all.next()) ++streamed;
        CHECK(streamed == total);
    }
}

TEST_CASE("stream size matches the counting formula for n <= 9") {
    for (int n = 1; n <= 9; ++n)
        for (int k = 1; k <= n; ++k) REQUIRE(BigInt(count_by_enumeration(n, k)) == count_formula(n, k));
}

TEST_CASE("emission is strictly increasing and every forest is valid") {
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            std::optional<NonCrossingForest> prev;
            for (const auto& f : enumerate_forests(n, k)) {
                REQUIRE(f.k() == k);
                REQUIRE_NOTHROW(NonCrossingForest::from_edges(n, f.edges()));
                if (prev) REQUIRE(*prev < f);
                prev = f;
            }
        }
        std::optional<NonCrossingForest> prev;
        for (const auto& f : enumerate_all_forests(n)) {
            if (prev) REQUIRE(prev->edges() < f.edges());
            prev = f;
        }
    }
}

TEST_CASE("enumerate_invariant examples") {
    const auto two = enumerate_invariant(4, 2, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == oracle::forest(4, {{1, 2}, {3, 4}}));
    CHECK(two[1] == oracle::forest(4, {{1, 4}, {2, 3}}));

    CHECK(enumerate_invariant(3, 1, 3).empty());

    const auto diam = enumerate_invariant(4, 3, 2);
    REQUIRE(diam.size() == 2);
    CHECK(diam[0] == oracle::forest(4, {{1, 3}}));
    CHECK(diam[1] == oracle::forest(4, {{2, 4}}));

    CHECK_THROWS_AS(enumerate_invariant(4, 2, 3), InputError);
    CHECK_THROWS_AS(enumerate_invariant(4, 0, 2), InputError);
}

TEST_CASE("filter, orbit and bijection routes agree for n <= 10") {
    for (int n = 1; n <= 10; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (int d = 1; d <= n; ++d) {
                if (n % d) continue;
                const auto filter = enumerate_invariant(n, k, d, InvariantRoute::Filter);
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(d);
                REQUIRE(enumerate_invariant(n, k, d, InvariantRoute::Orbit) == filter);
                if (d >= 2) REQUIRE(enumerate_invariant(n, k, d, InvariantRoute::Bijection) == filter);
            }
        }
    }
}
