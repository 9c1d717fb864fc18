#include "ncf/forest.hpp"

#include <algorithm>
#include <sstream>

#include "ncf/errors.hpp"
#include "ncf/detail/union_find.hpp"

namespace ncf {

namespace {

void check_label(Vertex x, int n) {
    if (x < 1 || x > n) {
        throw InputError("vertex " + std::to_string(x) + " outside 1.." + std::to_string(n));
    }
}

}  // namespace

Chord Chord::make(Vertex a, Vertex b) {
    if (a == b) throw InputError("chord endpoints coincide: " + std::to_string(a));
    return a < b ? Chord{a, b} : Chord{b, a};
}

NonCrossingForest NonCrossingForest::from_edges(int n, std::span<const Chord> edges) {
    if (n < 1) throw InputError("forest needs n >= 1, got " + std::to_string(n));
    std::vector<Chord> sorted;
    sorted.reserve(edges.size());
    for (const Chord& e : edges) {
        check_label(e.u, n);
        check_label(e.v, n);
        sorted.push_back(Chord::make(e.u, e.v));
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("duplicate chord in edge list");
    }
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (crosses_unchecked(sorted[i], sorted[j])) {
                std::ostringstream msg;
                msg << "chords (" << sorted[i].u << "," << sorted[i].v << ") and (" << sorted[j].u
                    << "," << sorted[j].v << ") cross";
                throw InputError(msg.str());
            }
        }
    }
    detail::UndoableUnionFind uf(n + 1);
    for (const Chord& e : sorted) {
        if (!uf.unite(e.u, e.v)) {
            throw InputError("edge set contains a cycle through (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ")");
        }
    }
    return NonCrossingForest(n, std::move(sorted));
}

NonCrossingForest NonCrossingForest::from_pairs(int n, std::span<const std::pair<int, int>> edges) {
    std::vector<Chord> chords;
    chords.reserve(edges.size());
    for (auto [a, b] : edges) chords.push_back(Chord{a, b});
    return from_edges(n, chords);
}

NonCrossingForest NonCrossingForest::from_canonical_unchecked(int n, std::vector<Chord> edges) {
    return NonCrossingForest(n, std::move(edges));
}

NonCrossingForest NonCrossingForest::empty(int n) {
    if (n < 1) throw InputError("forest needs n >= 1, got " + std::to_string(n));
    return NonCrossingForest(n, {});
}

bool NonCrossingForest::has_edge(Vertex a, Vertex b) const {
    if (a == b) return false;
    const Chord c = a < b ? Chord{a, b} : Chord{b, a};
    return std::binary_search(edges_.begin(), edges_.end(), c);
}

std::vector<int> NonCrossingForest::component_ids() const {
    detail::UndoableUnionFind uf(n_ + 1);
    for (const Chord& e : edges_) uf.unite(e.u, e.v);
    std::vector<int> root_to_id(n_ + 1, -1);
    std::vector<int> ids(n_ + 1, -1);
    int next = 0;
    for (Vertex x = 1; x <= n_; ++x) {
        const int r = uf.find(x);
        if (root_to_id[r] < 0) root_to_id[r] = next++;
        ids[x] = root_to_id[r];
    }
    return ids;
}

std::vector<std::vector<Vertex>> NonCrossingForest::trees() const {
    const auto ids = component_ids();
    std::vector<std::vector<Vertex>> out;
    for (Vertex x = 1; x <= n_; ++x) {
        if (ids[x] >= static_cast<int>(out.size())) out.resize(ids[x] + 1);
        out[ids[x]].push_back(x);
    }
    return out;
}

std::vector<std::vector<Vertex>> NonCrossingForest::adjacency() const {
    std::vector<std::vector<Vertex>> adj(n_ + 1);
    for (const Chord& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

bool crosses(const Chord& e1, const Chord& e2, int n) {
    check_label(e1.u, n);
    check_label(e1.v, n);
    check_label(e2.u, n);
    check_label(e2.v, n);
    const Chord a = Chord::make(e1.u, e1.v);
    const Chord b = Chord::make(e2.u, e2.v);
    return crosses_unchecked(a, b);
}

int component_count(const NonCrossingForest& forest) {
    detail::UndoableUnionFind uf(forest.n() + 1);
    int count = forest.n();
    for (const Chord& e : forest.edges()) {
        if (uf.unite(e.u, e.v)) --count;
    }
    return count;
}

NonCrossingForest rotate(const NonCrossingForest& forest, long long s) {
    const int n = forest.n();
    std::vector<Chord> out;
    out.reserve(forest.edges().size());
    for (const Chord& e : forest.edges()) {
        const Vertex a = shift(e.u, s, n);
        const Vertex b = shift(e.v, s, n);
        out.push_back(a < b ? Chord{a, b} : Chord{b, a});
    }
    std::sort(out.begin(), out.end());
    return NonCrossingForest::from_canonical_unchecked(n, std::move(out));
}

bool is_d_invariant(const NonCrossingForest& forest, int d) {
    if (d < 1 || forest.n() % d != 0) {
        throw InputError("d = " + std::to_string(d) + " does not divide n = " +
                         std::to_string(forest.n()));
    }
    if (d == 1) return true;
    const int n = forest.n();
    const int step = n / d;
    // Edge-wise membership test avoids building the rotated forest.
    for (const Chord& e : forest.edges()) {
        if (!forest.has_edge(shift(e.u, step, n), shift(e.v, step, n))) return false;
    }
    return true;
}

int distance(Vertex u, Vertex v, int n) {
    if (n < 1) throw InputError("distance needs n >= 1");
    check_label(u, n);
    check_label(v, n);
    int r = (v - u + 1) % n;
    if (r <= 0) r += n;
    return r;
}

std::string to_dot(const NonCrossingForest& forest, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  layout=circo;\n";
    out << "  node [shape=circle];\n";
    for (Vertex x = 1; x <= forest.n(); ++x) {
        out << "  " << x;
        if (x == 1) out << " [style=filled, fillcolor=black, fontcolor=white]";
        out << ";\n";
    }
    // Invisible rim keeps the circular order under circo.
    if (forest.n() >= 3) {
        for (Vertex x = 1; x <= forest.n(); ++x) {
            out << "  " << x << " -- " << shift(x, 1, forest.n()) << " [style=invis];\n";
        }
    }
    for (const Chord& e : forest.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace ncf
