#ifndef TRIFOREST_TRIANGULATION_HPP
#define TRIFOREST_TRIANGULATION_HPP

#include <triforest/embedding.hpp>
#include <triforest/graph.hpp>
#include <triforest/rng.hpp>

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace triforest {

/// Sorted vertex triple.
using Triangle = std::array<int, 3>;

inline Triangle make_triangle(int a, int b, int c) {
    Triangle t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

inline bool is_triangle_of(const Graph& g, const Triangle& t) {
    return t[0] != t[1] && t[1] != t[2] && t[0] != t[2] && g.has_edge(t[0], t[1]) && g.has_edge(t[1], t[2]) &&
           g.has_edge(t[0], t[2]);
}

/// Every face, the outer one included, is a triangle.
inline bool is_simple_triangulation(const Embedding& e) {
    if (e.order() < 3) return false;
    for (const Face& f : e.faces())
        if (f.length() != 3) return false;
    return true;
}

struct TriangulationRecord {
    int original_n = 0;
    std::vector<int> added_vertices;
    std::vector<Edge> added_edges;
};

struct Triangulated {
    Embedding embedding;
    TriangulationRecord record;
};

/// Adds chords inside every face of length > 3 until all faces are
/// triangles. A chord joins two distinct, non-adjacent vertices of the
/// face walk at non-consecutive positions; such a pair exists in every
/// non-triangular face of a simple plane graph, so no vertices are needed.
inline Triangulated triangulate(const Embedding& e) {
    if (e.order() < 3) throw Error(ErrorCode::InvalidInput, "triangulate needs at least three vertices");
    RotationSystem rs = e.rotation();
    Graph g = e.graph();
    TriangulationRecord record{e.order(), {}, {}};
    const auto& ob = e.outer().boundary;
    const std::pair<int, int> outer_dart{ob[0], ob[1 % ob.size()]};

    while (true) {
        const auto faces = rs.trace_faces();
        bool changed = false;
        for (const auto& w : faces) {
            const std::size_t k = w.size();
            if (k <= 3) continue;
            for (std::size_t i = 0; i < k && !changed; ++i)
                for (std::size_t j = i + 2; j < k && !changed; ++j) {
                    if (i == 0 && j == k - 1) continue;
                    const int a = w[i], b = w[j];
                    if (a == b || g.has_edge(a, b)) continue;
                    rs.insert_after(a, w[(i + k - 1) % k], b);
                    rs.insert_after(b, w[j - 1], a);
                    g.add_edge(a, b);
                    record.added_edges.emplace_back(a, b);
                    changed = true;
                }
            if (changed) break;
            throw Error(ErrorCode::InternalError, "face of length " + std::to_string(k) + " admits no chord");
        }
        if (!changed) break;
    }
    std::sort(record.added_edges.begin(), record.added_edges.end());
    Embedding probe(rs);
    Embedding out(rs, probe.face_of_dart(outer_dart.first, outer_dart.second));
    return {std::move(out), std::move(record)};
}

/// Triangles that are not faces, in lexicographic order. In a simple
/// triangulation these are exactly the separating triangles.
inline std::vector<Triangle> separating_triangles(const Embedding& e) {
    if (!is_simple_triangulation(e)) throw Error(ErrorCode::NotTriangulation, "embedding has a non-triangular face");
    const Graph& g = e.graph();
    std::set<Triangle> facial;
    for (const Face& f : e.faces()) facial.insert(make_triangle(f.boundary[0], f.boundary[1], f.boundary[2]));
    std::vector<Triangle> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            for (int w : g.neighbors(v))
                if (w > v && g.has_edge(u, w) && !facial.contains(Triangle{u, v, w})) out.push_back({u, v, w});
        }
    return out;
}

inline bool is_4_connected_triangulation(const Embedding& e) {
    if (!is_simple_triangulation(e)) throw Error(ErrorCode::NotTriangulation, "embedding has a non-triangular face");
    return e.order() >= 5 && separating_triangles(e).empty();
}

/// An embedded piece of a larger embedding with its vertex-id map.
struct Piece {
    Embedding embedding;
    std::vector<int> to_parent;
};

struct SplitResult {
    Piece inside;   ///< the side not containing the outer face
    Piece outside;  ///< the side containing the outer face
};

/// Splits a triangulation at a separating triangle. Both pieces are
/// triangulations in which `t` is a face; the inside piece is rooted at `t`,
/// the outside piece keeps the original outer face.
inline SplitResult split_at_triangle(const Embedding& e, const Triangle& t0) {
    if (!is_simple_triangulation(e)) throw Error(ErrorCode::NotTriangulation, "embedding has a non-triangular face");
    const Triangle t = make_triangle(t0[0], t0[1], t0[2]);
    const Graph& g = e.graph();
    if (!is_triangle_of(g, t)) throw Error(ErrorCode::NotSeparating, "not a triangle of the graph");
    if (e.find_face(t)) throw Error(ErrorCode::NotSeparating, "triangle is a face");

    std::vector<int> rest;
    for (int v = 0; v < g.order(); ++v)
        if (v != t[0] && v != t[1] && v != t[2]) rest.push_back(v);
    const auto comps = connected_components(induced_subgraph(g, rest));
    if (comps.size() < 2) throw Error(ErrorCode::NotSeparating, "triangle does not separate");

    int outer_witness = -1;
    for (int v : e.outer().boundary)
        if (v != t[0] && v != t[1] && v != t[2]) outer_witness = v;
    std::vector<int> inside_set, outside_set(t.begin(), t.end());
    inside_set = outside_set;
    for (const auto& c : comps) {
        const bool outer_side = std::any_of(c.begin(), c.end(), [&](int i) { return rest[static_cast<std::size_t>(i)] == outer_witness; });
        for (int i : c) (outer_side ? outside_set : inside_set).push_back(rest[static_cast<std::size_t>(i)]);
    }
    std::sort(inside_set.begin(), inside_set.end());
    std::sort(outside_set.begin(), outside_set.end());

    auto local_of = [](const std::vector<int>& set, int v) {
        return static_cast<int>(std::lower_bound(set.begin(), set.end(), v) - set.begin());
    };

    Embedding in_probe(restrict_rotation(e.rotation(), inside_set));
    const Triangle local_t{local_of(inside_set, t[0]), local_of(inside_set, t[1]), local_of(inside_set, t[2])};
    auto in_face = in_probe.find_face(local_t);
    if (!in_face) throw Error(ErrorCode::InternalError, "split triangle is not a face of the inside piece");

    const auto& ob = e.outer().boundary;
    Embedding out_probe(restrict_rotation(e.rotation(), outside_set));
    const int out_face = out_probe.face_of_dart(local_of(outside_set, ob[0]), local_of(outside_set, ob[1]));

    return {Piece{set_outer_face(in_probe, *in_face), inside_set},
            Piece{set_outer_face(out_probe, out_face), outside_set}};
}

// ---------------------------------------------------------------------------
// Generators

namespace detail {

/// Inserts a new vertex into the face traced a -> b -> c -> a.
inline int stack_vertex(RotationSystem& rs, int a, int b, int c) {
    const int z = rs.add_vertex();
    rs.insert_after(a, c, z);
    rs.insert_after(b, a, z);
    rs.insert_after(c, b, z);
    rs.at(z) = {a, c, b};
    return z;
}

inline RotationSystem triangle_rotation() { return RotationSystem({{1, 2}, {2, 0}, {0, 1}}); }

/// Replaces edge u-v by the other diagonal of its two incident triangles
/// when the result stays a simple triangulation with minimum degree 3.
inline bool try_flip(RotationSystem& rs, int u, int v) {
    const int w = rs.successor(v, u);
    const int x = rs.successor(u, v);
    if (w == x || rs.adjacent(w, x)) return false;
    if (rs.at(u).size() <= 3 || rs.at(v).size() <= 3) return false;
    rs.remove(u, v);
    rs.remove(v, u);
    rs.insert_after(w, v, x);
    rs.insert_after(x, u, w);
    return true;
}

}  // namespace detail

enum class GenMode { stacked, flip };

inline GenMode parse_gen_mode(std::string_view s) {
    if (s == "stacked") return GenMode::stacked;
    if (s == "flip") return GenMode::flip;
    throw Error(ErrorCode::InvalidInput, "unknown generator mode '" + std::string(s) + "'");
}

/// Seeded random triangulation on n >= 4 vertices. `stacked` inserts each
/// new vertex into a uniformly chosen face of the current triangulation,
/// starting from K4; `flip` then performs `steps` successful random edge
/// flips (edges drawn uniformly; at most 50 draws per requested flip).
inline Embedding gen_triangulation(int n, GenMode mode, int steps, std::uint64_t seed) {
    if (n < 4) throw Error(ErrorCode::InvalidInput, "gen_triangulation needs n >= 4");
    Rng rng(seed);
    RotationSystem rs = detail::triangle_rotation();
    detail::stack_vertex(rs, 0, 1, 2);
    while (rs.order() < n) {
        const auto faces = rs.trace_faces();
        const auto& f = faces[static_cast<std::size_t>(rng.below(static_cast<int>(faces.size())))];
        detail::stack_vertex(rs, f[0], f[1], f[2]);
    }
    if (mode == GenMode::flip) {
        long long done = 0, draws = 0;
        const long long max_draws = 50LL * steps;
        while (done < steps && draws < max_draws) {
            ++draws;
            const auto edges = rs.graph().edges();
            const Edge& e = edges[static_cast<std::size_t>(rng.below(static_cast<int>(edges.size())))];
            if (detail::try_flip(rs, e.u, e.v)) ++done;
        }
    }
    return Embedding(std::move(rs));
}

/// Keeps each edge independently with probability keep_num/keep_den.
inline Graph random_spanning_subgraph(const Graph& g, int keep_num, int keep_den, Rng& rng) {
    Graph h(g.order());
    for (const Edge& e : g.edges())
        if (rng.chance(keep_num, keep_den)) h.add_edge(e.u, e.v);
    return h;
}

}  // namespace triforest

#endif  // TRIFOREST_TRIANGULATION_HPP
