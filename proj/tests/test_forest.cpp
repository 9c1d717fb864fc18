#include <algorithm>

#include "doctest.h"
#include "ncf/enumeration.hpp"
#include "ncf/errors.hpp"
#include "ncf/forest.hpp"
#include "oracles.hpp"

using namespace ncf;

TEST_CASE("crosses: interleaving, disjoint and shared endpoints") {
    CHECK(crosses(Chord{1, 3}, Chord{2, 4}, 4));
    CHECK_FALSE(crosses(Chord{1, 2}, Chord{3, 4}, 4));
    CHECK_FALSE(crosses(Chord{1, 3}, Chord{3, 5}, 6));
    // Orientation of the input pair does not matter.
    CHECK(crosses(Chord{3, 1}, Chord{4, 2}, 4));
    CHECK_THROWS_AS(crosses(Chord{1, 5}, Chord{2, 3}, 4), InputError);
    CHECK_THROWS_AS(crosses(Chord{0, 2}, Chord{2, 3}, 4), InputError);
}

TEST_CASE("crosses is symmetric on every chord pair") {
    for (int n = 2; n <= 9; ++n) {
        std::vector<Chord> chords;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) chords.push_back(Chord{u, v});
        for (const auto& a : chords)
            for (const auto& b : chords) REQUIRE(crosses(a, b, n) == crosses(b, a, n));
    }
}

TEST_CASE("forest construction validates its invariants") {
    CHECK_THROWS_AS(oracle::forest(4, {{1, 3}, {2, 4}}), InputError);          // crossing
    CHECK_THROWS_AS(oracle::forest(3, {{1, 2}, {2, 3}, {1, 3}}), InputError);  // cycle
    CHECK_THROWS_AS(oracle::forest(4, {{1, 2}, {2, 1}}), InputError);          // duplicate
    CHECK_THROWS_AS(oracle::forest(4, {{1, 5}}), InputError);
    CHECK_THROWS_AS(oracle::forest(4, {{2, 2}}), InputError);
    CHECK_THROWS_AS(NonCrossingForest::empty(0), InputError);

    const auto f = oracle::forest(5, {{4, 2}, {1, 2}});
    REQUIRE(f.edges().size() == 2);
    CHECK(f.edges()[0] == Chord{1, 2});
    CHECK(f.edges()[1] == Chord{2, 4});
}

TEST_CASE("component_count") {
    // Forest drawn with n = 12, k = 7.
    const auto fig = oracle::forest(12, {{1, 2}, {1, 8}, {3, 7}, {4, 7}, {9, 11}});
    CHECK(component_count(fig) == 7);
    CHECK(component_count(NonCrossingForest::empty(5)) == 5);
    CHECK(component_count(oracle::forest(4, {{1, 2}, {2, 3}, {3, 4}})) == 1);

    const auto trees = fig.trees();
    REQUIRE(trees.size() == 7);
    CHECK(trees[0] == std::vector<Vertex>{1, 2, 8});
    CHECK(trees[1] == std::vector<Vertex>{3, 4, 7});
}

TEST_CASE("rotate examples") {
    CHECK(rotate(oracle::forest(4, {{1, 2}}), 1) == oracle::forest(4, {{2, 3}}));
    CHECK(rotate(oracle::forest(4, {{1, 3}}), 2) == oracle::forest(4, {{1, 3}}));
    const auto f = oracle::forest(6, {{1, 4}, {2, 3}, {5, 6}});
    CHECK(rotate(f, 0) == f);
    CHECK(rotate(f, 6) == f);
    CHECK(rotate(f, -1) == rotate(f, 5));
    CHECK(rotate(oracle::forest(4, {{3, 4}}), 1) == oracle::forest(4, {{1, 4}}));
}

TEST_CASE("rotate is a group action preserving the forest invariants") {
    for (int n = 1; n <= 8; ++n) {
        auto stream = enumerate_all_forests(n);
        while (auto f = stream.next()) {
            for (int a = 0; a < n; ++a) {
                const auto ra = rotate(*f, a);
                // Re-validate through the checked constructor.
                REQUIRE_NOTHROW(NonCrossingForest::from_edges(n, ra.edges()));
                REQUIRE(component_count(ra) == component_count(*f));
                REQUIRE(rotate(ra, n - a) == *f);
                const int b = (a * 3 + 1) % n;
                REQUIRE(rotate(ra, b) == rotate(*f, a + b));
            }
        }
    }
}

TEST_CASE("component_count equals n - |edges| on every forest up to n = 9") {
    for (int n = 1; n <= 9; ++n) {
        auto stream = enumerate_all_forests(n);
        while (auto f = stream.next()) REQUIRE(component_count(*f) == n - static_cast<int>(f->edges().size()));
    }
}

TEST_CASE("is_d_invariant") {
    CHECK(is_d_invariant(oracle::forest(4, {{1, 2}, {3, 4}}), 2));
    CHECK_FALSE(is_d_invariant(oracle::forest(4, {{1, 2}}), 2));
    CHECK(is_d_invariant(oracle::forest(4, {{1, 2}}), 1));
    CHECK_THROWS_AS(is_d_invariant(oracle::forest(4, {{1, 2}}), 3), InputError);
    CHECK_THROWS_AS(is_d_invariant(oracle::forest(4, {{1, 2}}), 0), InputError);
}

TEST_CASE("d-invariance agrees with the oracle and descends to divisors") {
    for (int n = 1; n <= 9; ++n) {
        auto stream = enumerate_all_forests(n);
        while (auto f = stream.next()) {
            for (int d = 1; d <= n; ++d) {
                if (n % d) continue;
                const bool inv = is_d_invariant(*f, d);
                REQUIRE(inv == oracle::fixed_by_shift(*f, n / d));
                REQUIRE(inv == (rotate(*f, n / d) == *f));
                if (!inv) continue;
                for (int e = 1; e <= d; ++e) {
                    if (d % e == 0) REQUIRE(is_d_invariant(*f, e));
                }
            }
        }
    }
}

TEST_CASE("distance counts clockwise with both ends included") {
    CHECK(distance(1, 1, 5) == 1);
    CHECK(distance(1, 2, 5) == 2);
    CHECK(distance(4, 2, 5) == 4);
    CHECK(distance(5, 1, 5) == 2);
    CHECK(distance(2, 1, 5) == 5);
    CHECK_THROWS_AS(distance(0, 1, 5), InputError);
    CHECK_THROWS_AS(distance(1, 6, 5), InputError);
    for (int n = 1; n <= 7; ++n)
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v) {
                // Walk the circle.
                int steps = 1;
                for (int x = u; x != v; x = x % n + 1) ++steps;
                REQUIRE(distance(u, v, n) == steps);
            }
}

TEST_CASE("DOT output lists every vertex and edge") {
    const auto dot = to_dot(oracle::forest(4, {{1, 3}}), "g");
    CHECK(dot.find("graph g {") == 0);
    CHECK(dot.find("layout=circo") != std::string::npos);
    CHECK(dot.find("  1 -- 3;") != std::string::npos);
    CHECK(dot.find("  4;") != std::string::npos);
}
