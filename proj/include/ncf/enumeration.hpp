#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "ncf/forest.hpp"
#include "ncf/detail/union_find.hpp"

namespace ncf {

/// Lazily generates non-crossing forests on n vertices, optionally only
/// those with exactly k components.
///
/// Backtracks over chords in lexicographic order, pruning a chord when it
/// crosses a chosen chord or closes a cycle, and cutting branches that can
/// no longer reach n - k edges. Forests come out strictly increasing in
/// their sorted edge lists, so the stream has no duplicates.
class ForestStream {
public:
    ForestStream(int n, std::optional<int> k);

    int n() const noexcept { return n_; }
    std::optional<int> k() const noexcept { return k_; }

    /// Next forest, or nullopt once exhausted.
    std::optional<NonCrossingForest> next();

    class iterator {
    public:
        using value_type = NonCrossingForest;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(ForestStream* s) : stream_(s) { ++*this; }

        const NonCrossingForest& operator*() const { return *current_; }
        const NonCrossingForest* operator->() const { return &*current_; }
        iterator& operator++() {
            current_ = stream_->next();
            if (!current_) stream_ = nullptr;
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, std::default_sentinel_t) { return a.stream_ == nullptr; }

    private:
        ForestStream* stream_ = nullptr;
        std::optional<NonCrossingForest> current_;
    };

    iterator begin() { return iterator(this); }
    std::default_sentinel_t end() { return {}; }

private:
    int n_;
    std::optional<int> k_;
    int target_edges_;  // max depth; also the emission depth when k is set
    std::vector<Chord> chords_;
    std::vector<std::vector<char>> crossing_;
    std::vector<int> stack_;
    int cursor_ = 0;
    bool started_ = false;
    bool done_ = false;
    detail::UndoableUnionFind uf_;
};

/// Stream over F_{n,k}. Throws InputError unless 1 <= k <= n.
ForestStream enumerate_forests(int n, int k);

/// Stream over every non-crossing forest on n vertices, any k.
ForestStream enumerate_all_forests(int n);

/// |F_{n,k}| by running the stream.
std::uint64_t count_by_enumeration(int n, int k);

/// Independent oracle: walks all 2^(n(n-1)/2) chord subsets and keeps the
/// non-crossing acyclic ones. Returns counts indexed by k (index 0 unused).
/// Only feasible for small n (n <= 8).
std::vector<std::uint64_t> count_by_subset_scan(int n);

enum class InvariantRoute {
    Filter,     // enumerate F_{n,k} and keep the rotation-fixed forests
    Bijection,  // push the small-side domain through C_d or C_2
    Orbit,      // backtrack over orbits of chords under the rotation
};

/// Sorted list of F_{n,k}^d. Throws InputError when d does not divide n or
/// k is out of range.
std::vector<NonCrossingForest> enumerate_invariant(int n, int k, int d,
                                                   InvariantRoute route = InvariantRoute::Filter);

}  // namespace ncf
