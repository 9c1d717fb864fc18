#include "ncf/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "ncf/bijections.hpp"
#include "ncf/errors.hpp"

namespace ncf {

ForestStream::ForestStream(int n, std::optional<int> k)
    : n_(n), k_(k), target_edges_(0), uf_(n + 1) {
    if (n < 1) throw InputError("n must be at least 1, got " + std::to_string(n));
    if (k && (*k < 1 || *k > n)) {
        throw InputError("k = " + std::to_string(*k) + " outside 1.." + std::to_string(n));
    }
    target_edges_ = k ? n - *k : n - 1;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) chords_.push_back(Chord{u, v});
    }
    const std::size_t m = chords_.size();
    crossing_.assign(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) crossing_[i][j] = crosses_unchecked(chords_[i], chords_[j]);
    }
    stack_.reserve(target_edges_);
}

std::optional<NonCrossingForest> ForestStream::next() {
    if (done_) return std::nullopt;
    const int m = static_cast<int>(chords_.size());
    auto emit = [&] {
        std::vector<Chord> edges;
        edges.reserve(stack_.size());
        for (int i : stack_) edges.push_back(chords_[i]);
        return NonCrossingForest::from_canonical_unchecked(n_, std::move(edges));
    };

    if (!started_) {
        started_ = true;
        cursor_ = 0;
        if (!k_ || target_edges_ == 0) {
            if (target_edges_ == 0) done_ = true;
            return emit();
        }
    }

    for (;;) {
        const int depth = static_cast<int>(stack_.size());
        bool extended = false;
        if (depth < target_edges_) {
            // With a fixed k we still need this many chords from [cursor_, m).
            const int need = k_ ? target_edges_ - depth : 1;
            while (!extended && cursor_ + need <= m) {
                const int c = cursor_++;
                const Chord& chord = chords_[c];
                bool ok = uf_.find(chord.u) != uf_.find(chord.v);
                for (std::size_t s = 0; ok && s < stack_.size(); ++s) ok = !crossing_[c][stack_[s]];
                if (!ok) continue;
                uf_.unite(chord.u, chord.v);
                stack_.push_back(c);
                cursor_ = c + 1;
                extended = true;
            }
        }
        if (extended) {
            if (!k_ || static_cast<int>(stack_.size()) == target_edges_) return emit();
            continue;
        }
        if (stack_.empty()) {
            done_ = true;
            return std::nullopt;
        }
        cursor_ = stack_.back() + 1;
        stack_.pop_back();
        uf_.undo();
    }
}

ForestStream enumerate_forests(int n, int k) {
    if (k < 1 || k > n) {
        throw InputError("k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
    return ForestStream(n, k);
}

ForestStream enumerate_all_forests(int n) { return ForestStream(n, std::nullopt); }

std::uint64_t count_by_enumeration(int n, int k) {
    std::uint64_t count = 0;
    auto stream = enumerate_forests(n, k);
    while (stream.next()) ++count;
    return count;
}

std::vector<std::uint64_t> count_by_subset_scan(int n) {
    if (n < 1 || n > 8) throw InputError("subset scan is limited to 1 <= n <= 8");
    std::vector<Chord> chords;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) chords.push_back(Chord{u, v});
    }
    const int m = static_cast<int>(chords.size());
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (std::popcount(mask) > n - 1) continue;
        bool ok = true;
        for (int i = 0; ok && i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            for (int j = i + 1; ok && j < m; ++j) {
                if ((mask >> j & 1) && crosses_unchecked(chords[i], chords[j])) ok = false;
            }
        }
        if (!ok) continue;
        detail::UndoableUnionFind uf(n + 1);
        int edges = 0;
        for (int i = 0; ok && i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            ok = uf.unite(chords[i].u, chords[i].v);
            ++edges;
        }
        if (ok) ++counts[n - edges];
    }
    return counts;
}

namespace {

std::vector<NonCrossingForest> invariant_by_filter(int n, int k, int d) {
    std::vector<NonCrossingForest> out;
    auto stream = enumerate_forests(n, k);
    while (auto f = stream.next()) {
        if (is_d_invariant(*f, d)) out.push_back(std::move(*f));
    }
    return out;
}

std::vector<NonCrossingForest> invariant_by_bijection(int n, int k, int d) {
    std::vector<NonCrossingForest> out;
    if (d == 1) {
        auto stream = enumerate_forests(n, k);
        while (auto f = stream.next()) out.push_back(std::move(*f));
        return out;
    }
    const int small_n = n / d;
    if (k % d == 0) {
        auto stream = enumerate_forests(small_n, k / d);
        while (auto phi = stream.next()) {
            for (Vertex v : classify_vertices(*phi).good) out.push_back(construct_cd(*phi, v, d));
        }
    } else if (d == 2) {
        auto stream = enumerate_forests(small_n, (k + 1) / 2);
        while (auto phi = stream.next()) {
            for (const Mark& m : all_marks(*phi)) out.push_back(construct_c2_odd(*phi, m));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Backtracking over chord orbits of the rotation by n/d steps. An orbit is
// admitted whole, so every emitted edge set is invariant by construction.
class OrbitSearch {
public:
    OrbitSearch(int n, int k, int d) : n_(n), target_(n - k), uf_(n + 1) {
        const int step = n / d;
        for (Vertex u = 1; u <= n; ++u) {
            for (Vertex v = u + 1; v <= n; ++v) {
                std::vector<Chord> orbit;
                for (int i = 0; i < d; ++i) {
                    orbit.push_back(Chord::make(shift(u, i * step, n), shift(v, i * step, n)));
                }
                std::sort(orbit.begin(), orbit.end());
                orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
                if (orbit.front() == Chord{u, v} && self_consistent(orbit)) orbits_.push_back(std::move(orbit));
            }
        }
    }

    std::vector<NonCrossingForest> run() {
        search(0);
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    bool self_consistent(const std::vector<Chord>& orbit) const {
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            for (std::size_t j = i + 1; j < orbit.size(); ++j) {
                if (crosses_unchecked(orbit[i], orbit[j])) return false;
            }
        }
        detail::UndoableUnionFind uf(n_ + 1);
        return std::all_of(orbit.begin(), orbit.end(), [&](const Chord& c) { return uf.unite(c.u, c.v); });
    }

    void search(std::size_t from) {
        const int have = static_cast<int>(chosen_.size());
        if (have == target_) {
            auto edges = chosen_;
            std::sort(edges.begin(), edges.end());
            found_.push_back(NonCrossingForest::from_canonical_unchecked(n_, std::move(edges)));
            return;
        }
        for (std::size_t i = from; i < orbits_.size(); ++i) {
            const auto& orbit = orbits_[i];
            if (have + static_cast<int>(orbit.size()) > target_) continue;
            bool ok = true;
            for (const Chord& c : orbit) {
                for (const Chord& e : chosen_) {
                    if (crosses_unchecked(c, e)) { ok = false; break; }
                }
                if (!ok) break;
            }
            if (!ok) continue;
            std::size_t joined = 0;
            for (const Chord& c : orbit) {
                if (!uf_.unite(c.u, c.v)) { ok = false; break; }
                ++joined;
            }
            if (ok) {
                chosen_.insert(chosen_.end(), orbit.begin(), orbit.end());
                search(i + 1);
                chosen_.resize(have);
            }
            for (std::size_t j = 0; j < joined; ++j) uf_.undo();
        }
    }

    int n_;
    int target_;
    detail::UndoableUnionFind uf_;
    std::vector<std::vector<Chord>> orbits_;
    std::vector<Chord> chosen_;
    std::vector<NonCrossingForest> found_;
};

}  // namespace

std::vector<NonCrossingForest> enumerate_invariant(int n, int k, int d, InvariantRoute route) {
    if (n < 1) throw InputError("n must be at least 1, got " + std::to_string(n));
    if (k < 1 || k > n) {
        throw InputError("k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
    if (d < 1 || n % d != 0) {
        throw InputError("d = " + std::to_string(d) + " does not divide n = " + std::to_string(n));
    }
    switch (route) {
        case InvariantRoute::Filter: return invariant_by_filter(n, k, d);
        case InvariantRoute::Bijection: return invariant_by_bijection(n, k, d);
        case InvariantRoute::Orbit: return OrbitSearch(n, k, d).run();
    }
    return {};
}

}  // namespace ncf
