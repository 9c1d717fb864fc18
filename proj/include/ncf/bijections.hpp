#pragma once

#include <optional>
#include <vector>

#include "ncf/forest.hpp"

namespace ncf {

/// Good/bad split of the vertices. In every tree that avoids the base
/// vertex the smallest label is bad; everything else is good, so there are
/// k - 1 bad and n - k + 1 good vertices.
struct VertexClass {
    NonCrossingForest forest;
    std::vector<Vertex> good;
    std::vector<Vertex> bad;
};

VertexClass classify_vertices(const NonCrossingForest& forest);
bool is_good_vertex(const NonCrossingForest& forest, Vertex v);

/// Extra datum carried by the small forest: a vertex, or a vertex together
/// with one of its incident edges.
struct Mark {
    Vertex vertex = 0;
    std::optional<Chord> edge;

    static Mark at(Vertex v) { return Mark{v, std::nullopt}; }
    static Mark on_edge(Vertex v, Chord e) { return Mark{v, e}; }

    friend bool operator==(const Mark&, const Mark&) = default;
    friend auto operator<=>(const Mark&, const Mark&) = default;
};

/// All 3n - 2k marks of a forest: each vertex alone, then each edge with
/// either endpoint.
std::vector<Mark> all_marks(const NonCrossingForest& forest);

/// Throws InputError unless the mark refers to a vertex of the forest and,
/// when present, an incident edge of it.
void validate_mark(const NonCrossingForest& forest, const Mark& mark);

struct TreeExtent {
    std::vector<Vertex> tree;  // sorted labels
    Vertex first = 0;
    Vertex last = 0;
};

struct ExtentReport {
    std::vector<TreeExtent> extents;
    std::vector<std::vector<Vertex>> self_mapped;  // trees fixed by the rotation
};

/// First and last vertex of every tree of a d-invariant forest (d >= 2).
/// Trees the rotation maps to themselves are reported separately. Throws
/// InputError on a non-invariant forest and InvariantViolation if a tree's
/// orbit is not laid out as d disjoint consecutive blocks.
ExtentReport tree_extents(const NonCrossingForest& forest, int d);

struct TreeImageCheck {
    bool disjoint_or_equal = true;  // every tree meets its image fully or not at all
    int self_mapped = 0;            // number of trees equal to their image
};

/// Compares every tree with its image under rotation by n/d steps.
TreeImageCheck check_tree_images(const NonCrossingForest& forest, int d);

/// C_d: cuts phi open at the good vertex v, lays d copies of the resulting
/// list around a circle of d * n' vertices and labels the copy of phi's base
/// vertex as 1. The image lies in F_{dn', dk'}^d.
NonCrossingForest construct_cd(const NonCrossingForest& phi, Vertex v, int d);

struct Decomposition {
    NonCrossingForest forest;
    Mark mark;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// D_d, the inverse of construct_cd. Scans window starts counterclockwise
/// from the base vertex and takes the first n'-vertex window that no edge
/// leaves. Requires d >= 2, d | n, d | k.
Decomposition decompose_dd(const NonCrossingForest& forest, int d);

/// C_2 for odd component counts: the marked vertex becomes the top end of a
/// diameter. With an edge mark, the neighbours of the marked vertex from the
/// marked edge onwards (clockwise) move to the bottom end. The left half is
/// the half-turn image of the right half. Result has k = 2k' - 1.
NonCrossingForest construct_c2_odd(const NonCrossingForest& phi, const Mark& mark);

/// D_2 for odd k: keeps the half containing the base vertex, contracts the
/// diameter to the marked vertex and marks the first edge at the bottom end.
Decomposition decompose_d2_odd(const NonCrossingForest& forest);

}  // namespace ncf
