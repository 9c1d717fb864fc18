#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ncf {

/// Vertex label on the circle, 1..n clockwise. Vertex 1 is the base vertex.
using Vertex = int;

/// An undirected chord, always stored with u < v.
struct Chord {
    Vertex u = 0;
    Vertex v = 0;

    /// Normalizes the endpoint order. Throws InputError when a == b.
    static Chord make(Vertex a, Vertex b);

    friend auto operator<=>(const Chord&, const Chord&) = default;
};

/// A set of pairwise non-crossing chords on n circularly arranged vertices
/// that forms an acyclic graph. Immutable once built; edges are kept sorted.
class NonCrossingForest {
public:
    /// Validates labels, crossing and acyclicity. Duplicate chords are
    /// rejected rather than merged.
    static NonCrossingForest from_edges(int n, std::span<const Chord> edges);
    static NonCrossingForest from_pairs(int n, std::span<const std::pair<int, int>> edges);

    /// Skips validation. Caller guarantees normalized, sorted, valid edges.
    static NonCrossingForest from_canonical_unchecked(int n, std::vector<Chord> edges);

    /// The forest with no edges.
    static NonCrossingForest empty(int n);

    int n() const noexcept { return n_; }
    const std::vector<Chord>& edges() const noexcept { return edges_; }

    /// Number of components, n - |edges| (valid because the graph is acyclic).
    int k() const noexcept { return n_ - static_cast<int>(edges_.size()); }

    bool has_edge(Vertex a, Vertex b) const;

    /// Component id per vertex; index 0 is unused. Ids are numbered in
    /// order of each tree's smallest label, starting at 0.
    std::vector<int> component_ids() const;

    /// Vertex sets of the trees, each sorted, ordered by smallest label.
    std::vector<std::vector<Vertex>> trees() const;

    /// Neighbours of every vertex, index 0 unused.
    std::vector<std::vector<Vertex>> adjacency() const;

    friend bool operator==(const NonCrossingForest&, const NonCrossingForest&) = default;
    friend auto operator<=>(const NonCrossingForest& a, const NonCrossingForest& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.edges_ <=> b.edges_;
    }

private:
    NonCrossingForest(int n, std::vector<Chord> edges) : n_(n), edges_(std::move(edges)) {}

    int n_ = 0;
    std::vector<Chord> edges_;
};

/// Strict interleaving test. Chords sharing an endpoint never cross.
bool crosses(const Chord& e1, const Chord& e2, int n);

/// Same predicate without range checks, for inner loops.
inline bool crosses_unchecked(const Chord& e1, const Chord& e2) noexcept {
    const bool c_in = e1.u < e2.u && e2.u < e1.v;
    const bool d_in = e1.u < e2.v && e2.v < e1.v;
    const bool shared = e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v;
    return !shared && c_in != d_in;
}

/// Counts connected components with a union-find pass over the edges.
int component_count(const NonCrossingForest& forest);

/// Rotates clockwise by s steps: label i goes to ((i - 1 + s) mod n) + 1.
/// Any integer s is accepted.
NonCrossingForest rotate(const NonCrossingForest& forest, long long s);

/// True iff the forest is fixed by rotation through 2*pi/d, i.e. by n/d steps.
bool is_d_invariant(const NonCrossingForest& forest, int d);

/// Number of vertices met going clockwise from u to v, both ends included:
/// the value in 1..n congruent to v - u + 1 mod n.
int distance(Vertex u, Vertex v, int n);

/// Shifts a label clockwise by s steps on an n-cycle.
inline Vertex shift(Vertex x, long long s, int n) noexcept {
    long long r = (static_cast<long long>(x) - 1 + s) % n;
    if (r < 0) r += n;
    return static_cast<Vertex>(r + 1);
}

/// Graphviz rendering with a circular layout hint.
std::string to_dot(const NonCrossingForest& forest, const std::string& name = "forest");

}  // namespace ncf
