#include "ncf/bijections.hpp"

#include <algorithm>
#include <string>

#include "ncf/errors.hpp"

namespace ncf {

namespace {

int mod(long long a, int m) {
    long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

std::string label_list(const std::vector<Vertex>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xs[i]);
    }
    return s + "}";
}

// Re-validates the output of a construction; any failure is a bug in the map.
NonCrossingForest checked_result(int n, const std::vector<Chord>& edges, const char* what) {
    try {
        return NonCrossingForest::from_edges(n, edges);
    } catch (const InputError& e) {
        throw InvariantViolation(std::string(what) + " produced an invalid forest: " + e.what());
    }
}

std::vector<Vertex> shifted(const std::vector<Vertex>& xs, long long s, int n) {
    std::vector<Vertex> out;
    out.reserve(xs.size());
    for (Vertex x : xs) out.push_back(shift(x, s, n));
    std::sort(out.begin(), out.end());
    return out;
}

bool intersects(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

void require_invariant(const NonCrossingForest& forest, int d) {
    if (d < 2) throw InputError("d must be at least 2, got " + std::to_string(d));
    if (!is_d_invariant(forest, d)) {
        throw InputError("forest is not invariant under rotation by n/" + std::to_string(d));
    }
}

}  // namespace

VertexClass classify_vertices(const NonCrossingForest& forest) {
    VertexClass out{forest, {}, {}};
    std::vector<char> bad(forest.n() + 1, 0);
    for (const auto& tree : forest.trees()) {
        if (tree.front() != 1) bad[tree.front()] = 1;
    }
    for (Vertex x = 1; x <= forest.n(); ++x) (bad[x] ? out.bad : out.good).push_back(x);
    return out;
}

bool is_good_vertex(const NonCrossingForest& forest, Vertex v) {
    if (v < 1 || v > forest.n()) return false;
    const auto cls = classify_vertices(forest);
    return std::binary_search(cls.good.begin(), cls.good.end(), v);
}

std::vector<Mark> all_marks(const NonCrossingForest& forest) {
    std::vector<Mark> out;
    out.reserve(3 * forest.n() - 2 * forest.k());
    for (Vertex x = 1; x <= forest.n(); ++x) out.push_back(Mark::at(x));
    for (const Chord& e : forest.edges()) {
        out.push_back(Mark::on_edge(e.u, e));
        out.push_back(Mark::on_edge(e.v, e));
    }
    return out;
}

void validate_mark(const NonCrossingForest& forest, const Mark& mark) {
    if (mark.vertex < 1 || mark.vertex > forest.n()) {
        throw InputError("marked vertex " + std::to_string(mark.vertex) + " outside 1.." +
                         std::to_string(forest.n()));
    }
    if (!mark.edge) return;
    const Chord e = *mark.edge;
    if (!forest.has_edge(e.u, e.v)) {
        throw InputError("marked edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") is not an edge of the forest");
    }
    if (e.u != mark.vertex && e.v != mark.vertex) {
        throw InputError("marked edge is not incident to the marked vertex");
    }
}

TreeImageCheck check_tree_images(const NonCrossingForest& forest, int d) {
    if (d < 1 || forest.n() % d != 0) throw InputError("d must divide n");
    TreeImageCheck out;
    const int step = forest.n() / d;
    for (const auto& tree : forest.trees()) {
        const auto image = shifted(tree, step, forest.n());
        if (image == tree) {
            ++out.self_mapped;
        } else if (intersects(image, tree)) {
            out.disjoint_or_equal = false;
        }
    }
    return out;
}

ExtentReport tree_extents(const NonCrossingForest& forest, int d) {
    require_invariant(forest, d);
    const int n = forest.n();
    const int step = n / d;
    ExtentReport out;

    for (const auto& tree : forest.trees()) {
        if (shifted(tree, step, n) == tree) {
            out.self_mapped.push_back(tree);
            continue;
        }
        // The full orbit must be d pairwise disjoint copies.
        std::vector<Vertex> orbit;
        std::vector<int> owner(n + 1, -1);
        for (int i = 0; i < d; ++i) {
            for (Vertex x : shifted(tree, static_cast<long long>(i) * step, n)) {
                if (owner[x] >= 0) {
                    throw InvariantViolation("tree " + label_list(tree) +
                                             " meets one of its rotated copies");
                }
                owner[x] = i;
                orbit.push_back(x);
            }
        }
        std::sort(orbit.begin(), orbit.end());

        const int m = static_cast<int>(orbit.size());
        std::vector<Vertex> firsts;
        std::vector<Vertex> lasts;
        for (int i = 0; i < m; ++i) {
            if (owner[orbit[i]] != 0) continue;
            const Vertex prev = orbit[mod(i - 1, m)];
            const Vertex next = orbit[mod(i + 1, m)];
            if (owner[prev] != 0) {
                if (owner[prev] != d - 1) {
                    throw InvariantViolation("vertex before a block of " + label_list(tree) +
                                             " is not in its preimage");
                }
                firsts.push_back(orbit[i]);
            }
            if (owner[next] != 0) {
                if (owner[next] != 1) {
                    throw InvariantViolation("vertex after a block of " + label_list(tree) +
                                             " is not in its image");
                }
                lasts.push_back(orbit[i]);
            }
        }
        if (firsts.size() != 1 || lasts.size() != 1) {
            throw InvariantViolation("tree " + label_list(tree) +
                                     " is not contiguous among its rotated copies");
        }
        TreeExtent ext{tree, firsts.front(), lasts.front()};
        if (distance(ext.first, ext.last, n) > step) {
            throw InvariantViolation("tree " + label_list(tree) + " spans more than n/d vertices");
        }
        out.extents.push_back(std::move(ext));
    }
    if (out.self_mapped.empty() && forest.k() % d != 0) {
        throw InvariantViolation("no self-mapped tree but k = " + std::to_string(forest.k()) +
                                 " is not a multiple of d = " + std::to_string(d));
    }
    return out;
}

NonCrossingForest construct_cd(const NonCrossingForest& phi, Vertex v, int d) {
    if (d < 2) throw InputError("d must be at least 2, got " + std::to_string(d));
    if (!is_good_vertex(phi, v)) {
        throw InputError("vertex " + std::to_string(v) + " is not a good vertex of the forest");
    }
    const int small_n = phi.n();
    const int n = d * small_n;
    // List position of phi's vertex x once the circle is cut open at v.
    auto position = [&](Vertex x) { return mod(x - v, small_n); };
    const int base_position = position(1);
    auto label = [&](long long pos) { return mod(pos - base_position, n) + 1; };

    std::vector<Chord> edges;
    edges.reserve(phi.edges().size() * d);
    for (int copy = 0; copy < d; ++copy) {
        const long long offset = static_cast<long long>(copy) * small_n;
        for (const Chord& e : phi.edges()) {
            edges.push_back(Chord::make(label(offset + position(e.u)), label(offset + position(e.v))));
        }
    }
    NonCrossingForest out = checked_result(n, edges, "C_d");
    if (out.k() != d * phi.k() || !is_d_invariant(out, d)) {
        throw InvariantViolation("C_d image is not a d-invariant forest with d*k' components");
    }
    return out;
}

Decomposition decompose_dd(const NonCrossingForest& forest, int d) {
    require_invariant(forest, d);
    if (forest.k() % d != 0) {
        throw InputError("d = " + std::to_string(d) + " does not divide k = " +
                         std::to_string(forest.k()));
    }
    const int n = forest.n();
    const int small_n = n / d;

    for (int back = 0; back < small_n; ++back) {
        const Vertex start = shift(1, -back, n);
        auto inside = [&](Vertex x) { return distance(start, x, n) <= small_n; };
        const bool closed = std::all_of(forest.edges().begin(), forest.edges().end(),
                                        [&](const Chord& e) { return inside(e.u) == inside(e.v); });
        if (!closed) continue;

        // Window offset of the base vertex is `back`; relabel so it becomes 1.
        auto small_label = [&](Vertex x) { return mod(distance(start, x, n) - 1 - back, small_n) + 1; };
        std::vector<Chord> edges;
        for (const Chord& e : forest.edges()) {
            if (inside(e.u)) edges.push_back(Chord::make(small_label(e.u), small_label(e.v)));
        }
        NonCrossingForest phi = checked_result(small_n, edges, "D_d");
        const Vertex v = small_label(start);
        if (phi.k() * d != forest.k()) {
            throw InvariantViolation("D_d window has the wrong number of components");
        }
        if (!is_good_vertex(phi, v)) {
            throw InvariantViolation("D_d start vertex " + std::to_string(v) + " is not good");
        }
        return Decomposition{std::move(phi), Mark::at(v)};
    }
    throw InvariantViolation("no closed window of n/d consecutive vertices contains the base vertex");
}

NonCrossingForest construct_c2_odd(const NonCrossingForest& phi, const Mark& mark) {
    validate_mark(phi, mark);
    const int small_n = phi.n();
    const int n = 2 * small_n;
    const Vertex v = mark.vertex;
    auto offset = [&](Vertex x) { return mod(x - v, small_n); };  // 0 is the top end
    const int base_offset = offset(1);
    auto label = [&](long long pos) { return mod(pos - base_offset, n) + 1; };
    const int bottom = small_n;

    std::optional<int> split;  // neighbours of v at or beyond this offset go to the bottom
    if (mark.edge) split = offset(mark.edge->u == v ? mark.edge->v : mark.edge->u);

    std::vector<Chord> edges;
    edges.reserve(2 * phi.edges().size() + 1);
    edges.push_back(Chord::make(label(0), label(bottom)));
    auto add_symmetric = [&](int a, int b) {
        edges.push_back(Chord::make(label(a), label(b)));
        edges.push_back(Chord::make(label(a + small_n), label(b + small_n)));
    };
    for (const Chord& e : phi.edges()) {
        if (e.u != v && e.v != v) {
            add_symmetric(offset(e.u), offset(e.v));
            continue;
        }
        const int w = offset(e.u == v ? e.v : e.u);
        const int end = split && w >= *split ? bottom : 0;
        add_symmetric(end, w);
    }
    NonCrossingForest out = checked_result(n, edges, "C_2");
    if (out.k() != 2 * phi.k() - 1 || !is_d_invariant(out, 2)) {
        throw InvariantViolation("C_2 image is not a 2-invariant forest with 2k'-1 components");
    }
    return out;
}

Decomposition decompose_d2_odd(const NonCrossingForest& forest) {
    require_invariant(forest, 2);
    if (forest.k() % 2 == 0) {
        throw InputError("D_2 for odd k needs an odd component count, got k = " +
                         std::to_string(forest.k()));
    }
    const int n = forest.n();
    const int small_n = n / 2;

    std::optional<Chord> diameter;
    for (const Chord& e : forest.edges()) {
        if (e.v - e.u == small_n) {
            if (diameter) throw InvariantViolation("two diameters in a non-crossing forest");
            diameter = e;
        }
    }
    if (!diameter) throw InputError("forest has no self-mapped tree (no diameter edge)");

    // The top end is the one from which the base vertex is at most n' steps clockwise.
    const Vertex top = distance(diameter->u, 1, n) <= small_n ? diameter->u : diameter->v;
    auto offset = [&](Vertex x) { return distance(top, x, n) - 1; };
    const int base_offset = offset(1);
    auto small_label = [&](int off) { return mod(off % small_n - base_offset, small_n) + 1; };

    std::vector<Chord> edges;
    std::optional<int> first_bottom_neighbour;
    for (const Chord& e : forest.edges()) {
        if (e == *diameter) continue;
        const int a = offset(e.u);
        const int b = offset(e.v);
        if (a > small_n || b > small_n) continue;  // left half
        edges.push_back(Chord::make(small_label(a), small_label(b)));
        if (a == small_n || b == small_n) {
            const int other = a == small_n ? b : a;
            if (!first_bottom_neighbour || other < *first_bottom_neighbour) first_bottom_neighbour = other;
        }
    }
    NonCrossingForest phi = checked_result(small_n, edges, "D_2");
    if (2 * phi.k() - 1 != forest.k()) {
        throw InvariantViolation("D_2 right half has the wrong number of components");
    }
    const Vertex v = small_label(0);
    Mark mark = Mark::at(v);
    if (first_bottom_neighbour) mark.edge = Chord::make(v, small_label(*first_bottom_neighbour));
    return Decomposition{std::move(phi), mark};
}

}  // namespace ncf
