#ifndef TRIFOREST_PARTITION_HPP
#define TRIFOREST_PARTITION_HPP

#include <triforest/dual.hpp>
#include <triforest/embedding.hpp>
#include <triforest/graph.hpp>
#include <triforest/oracles.hpp>
#include <triforest/planarity.hpp>
#include <triforest/triangulation.hpp>
#include <triforest/tutte.hpp>

#include <array>
#include <deque>
#include <numeric>
#include <set>
#include <optional>
#include <string>
#include <vector>

namespace triforest {

// ---------------------------------------------------------------------------
// Coloring the faces of a cubic plane graph by the sides of a cycle

/// Colors every face of `e` by its side of the cycle `t`: faces reachable
/// from the outer face through edges not on `t` get color 0, the rest 1.
/// The result is indexed by face id, i.e. by dual vertex.
///
/// When `e` is cyclically 4-edge-connected and `t` is a Tutte cycle, each
/// component of G - V(t) is a single vertex, so each class of the dual
/// induces a triangle-forest.
inline Coloring coloring_from_tutte_cycle(const Embedding& e, const TutteCertificate& t) {
    const Graph& g = e.graph();
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 3) throw Error(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    if (t.kind != TutteKind::cycle) throw Error(ErrorCode::NotACycle, "certificate describes a path");
    if (!is_tutte_subgraph(g, t.sequence, TutteKind::cycle))
        throw Error(ErrorCode::PreconditionViolated, "cycle violates the Tutte condition");

    std::set<Edge> on_cycle;
    const auto& s = t.sequence;
    for (std::size_t i = 0; i < s.size(); ++i) on_cycle.emplace(s[i], s[(i + 1) % s.size()]);

    Coloring sides(e.face_count());
    std::deque<int> queue{e.outer_face()};
    sides.set(e.outer_face(), 0);
    while (!queue.empty()) {
        const Face& f = e.face(queue.front());
        queue.pop_front();
        for (std::size_t k = 0; k < f.boundary.size(); ++k) {
            const int u = f.boundary[k], v = f.boundary[(k + 1) % f.boundary.size()];
            if (on_cycle.contains(Edge(u, v))) continue;
            const int across = e.face_of_dart(v, u);
            if (sides.is_set(across)) continue;
            sides.set(across, 0);
            queue.push_back(across);
        }
    }
    for (int f = 0; f < e.face_count(); ++f)
        if (!sides.is_set(f)) sides.set(f, 1);
    return sides;
}

// ---------------------------------------------------------------------------
// Precolored extension on a 4-connected triangulation

/// The dual picture around the outer triangle (a, b, c) of a triangulation.
/// Capitalised names follow the usual convention: A is the interior face
/// on the edge opposite a, starred names live in the dual.
struct DualFrame {
    Embedding base;
    DualGraph dualgraph;
    std::array<int, 3> delta{};         ///< a, b, c in outer-face walk order
    int delta_star = -1;                ///< dual vertex of the outer face
    std::array<int, 3> abc_star{};      ///< faces of the dual around a, b, c
    std::array<int, 3> ABC_star{};      ///< dual vertices of the faces opposite a, b, c
    Embedding H;                        ///< dual minus delta_star, rooted at the merged face
    std::vector<int> H_to_dual;         ///< H vertex -> dual vertex
    std::vector<int> dual_to_H;         ///< dual vertex -> H vertex (-1 for delta_star)
};

inline DualFrame build_dual_frame(const Embedding& e) {
    DualFrame fr;
    fr.base = e;
    const auto& ob = e.outer().boundary;
    if (ob.size() != 3) throw Error(ErrorCode::NotTriangulation, "outer face is not a triangle");
    fr.delta = {ob[0], ob[1], ob[2]};
    fr.dualgraph = dual(e);
    const DualGraph& d = fr.dualgraph;
    fr.delta_star = d.face_to_dualvertex[static_cast<std::size_t>(e.outer_face())];
    for (int i = 0; i < 3; ++i) {
        const int x = fr.delta[static_cast<std::size_t>(i)];
        const int y = fr.delta[static_cast<std::size_t>((i + 1) % 3)];
        const int z = fr.delta[static_cast<std::size_t>((i + 2) % 3)];
        fr.abc_star[static_cast<std::size_t>(i)] = d.vertex_to_dualface[static_cast<std::size_t>(x)];
        // The outer walk traverses y -> z, so the opposite face owns z -> y.
        fr.ABC_star[static_cast<std::size_t>(i)] = d.face_to_dualvertex[static_cast<std::size_t>(e.face_of_dart(z, y))];
    }
    const int nd = d.graph().order();
    fr.dual_to_H.assign(static_cast<std::size_t>(nd), -1);
    for (int v = 0; v < nd; ++v)
        if (v != fr.delta_star) {
            fr.dual_to_H[static_cast<std::size_t>(v)] = static_cast<int>(fr.H_to_dual.size());
            fr.H_to_dual.push_back(v);
        }
    Embedding h(restrict_rotation(d.embedding.rotation(), fr.H_to_dual));
    std::optional<int> merged;
    for (const Face& f : h.faces()) {
        int hits = 0;
        for (int X : fr.ABC_star)
            if (std::find(f.boundary.begin(), f.boundary.end(), fr.dual_to_H[static_cast<std::size_t>(X)]) != f.boundary.end()) ++hits;
        if (hits == 3) {
            if (merged) throw Error(ErrorCode::NotFourConnected, "two faces of H contain A*, B*, C*");
            merged = f.id;
        }
    }
    if (!merged) throw Error(ErrorCode::InternalError, "no face of H contains A*, B*, C*");
    fr.H = set_outer_face(h, *merged);
    return fr;
}

/// Outer edges of H at `x` (an H vertex), sorted.
inline std::vector<Edge> outer_edges_at(const Embedding& h, int x) {
    std::vector<Edge> out;
    for (const Edge& e : h.outer_edges())
        if (e.contains(x)) out.push_back(e);
    return out;
}

/// No monochromatic triangle contains a monochromatic edge of `delta`
/// unless `delta` itself is monochromatic.
inline bool delta_edges_clean(const Graph& g, const Coloring& c, const Triangle& delta) {
    if (c[delta[0]] == c[delta[1]] && c[delta[1]] == c[delta[2]]) return true;
    for (int i = 0; i < 3; ++i) {
        const int x = delta[static_cast<std::size_t>(i)], y = delta[static_cast<std::size_t>((i + 1) % 3)];
        if (c[x] != c[y]) continue;
        for (int w : g.neighbors(x))
            if (w != y && g.has_edge(w, y) && c[w] == c[x]) return false;
    }
    return true;
}

struct ExtensionResult {
    Coloring coloring;
    TutteCertificate dual_cycle;  ///< Tutte cycle of the dual whose sides give the coloring
    bool monochromatic = false;   ///< whether the outer triangle was precolored with one color
};

/// Extends a precoloring of the outer triangle of a 4-connected
/// triangulation to a 2-coloring in which both classes induce
/// triangle-forests and, unless the triangle is monochromatic, no edge of
/// the outer triangle lies in a monochromatic triangle.
///
/// Monochromatic triangle: a Tutte cycle of H through one outer edge at each
/// of A*, B*, C*. Otherwise, with a the odd vertex: a Tutte path of H from
/// B* to C* through an outer edge at A*, closed through delta_star. Primal
/// vertices are colored by the side of their dual face; the coloring is then
/// flipped globally if needed and every postcondition re-verified.
inline ExtensionResult extend_4connected_detailed(const Embedding& e, const Coloring& pre,
                                                  const TutteSearchOptions& opts = {}) {
    if (!is_simple_triangulation(e) || !is_4_connected_triangulation(e) || e.order() < 6)
        throw Error(ErrorCode::NotFourConnected, "expected a 4-connected triangulation on at least six vertices");
    DualFrame fr = build_dual_frame(e);
    if (pre.size() != e.order()) throw Error(ErrorCode::InvalidPrecoloring, "precoloring has the wrong size");
    for (int v = 0; v < e.order(); ++v) {
        const bool on_delta = v == fr.delta[0] || v == fr.delta[1] || v == fr.delta[2];
        if (on_delta != pre.is_set(v)) throw Error(ErrorCode::InvalidPrecoloring, "precoloring must cover exactly the outer triangle");
    }
    std::array<int, 3> pc{pre[fr.delta[0]], pre[fr.delta[1]], pre[fr.delta[2]]};
    const bool mono = pc[0] == pc[1] && pc[1] == pc[2];

    auto to_h = [&](int dv) { return fr.dual_to_H[static_cast<std::size_t>(dv)]; };
    std::vector<int> cycle;  // in dual ids
    if (mono) {
        std::array<Edge, 3> chosen;
        for (int i = 0; i < 3; ++i) {
            const auto cand = outer_edges_at(fr.H, to_h(fr.ABC_star[static_cast<std::size_t>(i)]));
            auto it = std::find_if(cand.begin(), cand.end(), [&](const Edge& x) {
                return std::find(chosen.begin(), chosen.begin() + i, x) == chosen.begin() + i;
            });
            if (it == cand.end()) throw Error(ErrorCode::InternalError, "no distinct outer edge at A*, B*, C*");
            chosen[static_cast<std::size_t>(i)] = *it;
        }
        const auto cert = find_tutte_cycle_through_edges(fr.H, chosen[0], chosen[1], chosen[2], opts);
        for (int x : cert.sequence) cycle.push_back(fr.H_to_dual[static_cast<std::size_t>(x)]);
    } else {
        int odd = 0;
        for (int i = 0; i < 3; ++i)
            if (pc[static_cast<std::size_t>(i)] != pc[static_cast<std::size_t>((i + 1) % 3)] &&
                pc[static_cast<std::size_t>(i)] != pc[static_cast<std::size_t>((i + 2) % 3)])
                odd = i;
        const int A = fr.ABC_star[static_cast<std::size_t>(odd)];
        const int B = fr.ABC_star[static_cast<std::size_t>((odd + 1) % 3)];
        const int C = fr.ABC_star[static_cast<std::size_t>((odd + 2) % 3)];
        const auto at_a = outer_edges_at(fr.H, to_h(A));
        if (at_a.empty()) throw Error(ErrorCode::InternalError, "A* has no outer edge in H");
        const auto cert = find_tutte_path(fr.H, to_h(B), to_h(C), at_a.front(), opts);
        cycle.push_back(fr.delta_star);
        for (int x : cert.sequence) cycle.push_back(fr.H_to_dual[static_cast<std::size_t>(x)]);
    }

    const Graph& dg = fr.dualgraph.graph();
    auto check = is_tutte_subgraph(dg, cycle, TutteKind::cycle);
    if (!check) throw Error(ErrorCode::InternalError, "closed cycle is not a Tutte cycle of the dual");

    const Coloring sides = coloring_from_tutte_cycle(fr.dualgraph.embedding, *check.certificate);
    Coloring out(e.order());
    for (int v = 0; v < e.order(); ++v) out.set(v, sides[fr.dualgraph.vertex_to_dualface[static_cast<std::size_t>(v)]]);
    if (out[fr.delta[0]] != pc[0]) out = out.flipped();
    for (int i = 0; i < 3; ++i)
        if (out[fr.delta[static_cast<std::size_t>(i)]] != pc[static_cast<std::size_t>(i)])
            throw Error(ErrorCode::PrecoloringMismatch, "side coloring disagrees with the precoloring under both flips");
    if (!verify_bipartition(e.graph(), out, BipartitionMode::tf_tf).valid)
        throw Error(ErrorCode::PrecoloringMismatch, "extension is not a triangle-forest partition");
    if (!delta_edges_clean(e.graph(), out, make_triangle(fr.delta[0], fr.delta[1], fr.delta[2])))
        throw Error(ErrorCode::PrecoloringMismatch, "an edge of the outer triangle lies in a monochromatic triangle");
    return {std::move(out), std::move(*check.certificate), mono};
}

inline Coloring extend_4connected(const Embedding& e, const Coloring& pre, const TutteSearchOptions& opts = {}) {
    return extend_4connected_detailed(e, pre, opts).coloring;
}

/// Extension of a precolored triangle of K4 to its fourth vertex: the
/// opposite of the majority color. Both classes then have at most three
/// vertices and no monochromatic triangle meets a monochromatic edge of
/// a heterochromatic triangle.
inline int k4_fourth_color(const std::array<int, 3>& colors) {
    const int ones = colors[0] + colors[1] + colors[2];
    return ones >= 2 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Partitioning arbitrary planar graphs

struct FixedTriangle {
    std::array<int, 3> vertices{};
    std::array<int, 3> colors{};
};

struct DecompositionNode {
    enum class Kind { triangle, k4, four_connected, split };
    Kind kind = Kind::triangle;
    std::vector<int> vertices;  ///< ids in the triangulated graph
    Triangle boundary{};
    std::array<int, 3> precolor{};
    std::vector<DecompositionNode> children;
};

struct PartitionOptions {
    TutteSearchOptions tutte;
    /// Re-verify every merged piece (triangle-forest classes and the
    /// boundary-edge condition).
    bool verify_merges = true;
};

struct PartitionResult {
    Coloring coloring;
    DecompositionNode tree;
    TriangulationRecord triangulation;
    int pieces = 0;  ///< triangulations visited, i.e. nodes of `tree`
};

namespace detail {

inline int local_index(const std::vector<int>& sorted_ids, int v) {
    auto it = std::lower_bound(sorted_ids.begin(), sorted_ids.end(), v);
    if (it == sorted_ids.end() || *it != v) throw Error(ErrorCode::InternalError, "vertex missing from piece");
    return static_cast<int>(it - sorted_ids.begin());
}

/// Colors a triangulation extending the coloring `dcol` of its triangle
/// `delta` (sorted). Strengthened invariant maintained by the recursion:
/// both classes are triangle-forests and, if `delta` is heterochromatic,
/// its monochromatic edge lies in no monochromatic triangle. The latter
/// is what makes gluing along a separating triangle safe.
inline std::vector<int> color_triangulation(const Embedding& piece, const Triangle& delta, const std::array<int, 3>& dcol,
                                            const PartitionOptions& opts, DecompositionNode& node, int& pieces) {
    const int n = piece.order();
    ++pieces;
    node.boundary = delta;
    node.precolor = dcol;
    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < 3; ++i) colors[static_cast<std::size_t>(delta[static_cast<std::size_t>(i)])] = dcol[static_cast<std::size_t>(i)];

    if (n == 3) {
        node.kind = DecompositionNode::Kind::triangle;
        return colors;
    }
    if (n == 4) {
        node.kind = DecompositionNode::Kind::k4;
        for (auto& c : colors)
            if (c == -1) c = k4_fourth_color(dcol);
        return colors;
    }
    const auto seps = separating_triangles(piece);
    if (seps.empty()) {
        node.kind = DecompositionNode::Kind::four_connected;
        const Embedding rooted = set_outer_face(piece, delta);
        Coloring pre(n);
        for (int i = 0; i < 3; ++i) pre.set(delta[static_cast<std::size_t>(i)], dcol[static_cast<std::size_t>(i)]);
        const Coloring ext = extend_4connected(rooted, pre, opts.tutte);
        for (int v = 0; v < n; ++v) colors[static_cast<std::size_t>(v)] = ext[v];
        return colors;
    }

    node.kind = DecompositionNode::Kind::split;
    const Triangle cut = std::find(seps.begin(), seps.end(), delta) != seps.end() ? delta : seps.front();
    SplitResult sr = split_at_triangle(piece, cut);

    auto recurse = [&](const Piece& p, const Triangle& t, const std::array<int, 3>& tc) {
        Triangle lt{local_index(p.to_parent, t[0]), local_index(p.to_parent, t[1]), local_index(p.to_parent, t[2])};
        DecompositionNode child;
        for (int v : p.to_parent) child.vertices.push_back(node.vertices[static_cast<std::size_t>(v)]);
        auto local = color_triangulation(p.embedding, lt, tc, opts, child, pieces);
        for (std::size_t i = 0; i < local.size(); ++i) colors[static_cast<std::size_t>(p.to_parent[i])] = local[i];
        node.children.push_back(std::move(child));
    };
    auto contains_all = [](const std::vector<int>& ids, const Triangle& t) {
        return std::all_of(t.begin(), t.end(), [&](int v) { return std::binary_search(ids.begin(), ids.end(), v); });
    };

    if (cut == delta) {
        recurse(sr.outside, delta, dcol);
        recurse(sr.inside, delta, dcol);
    } else {
        const bool outside_first = contains_all(sr.outside.to_parent, delta);
        const Piece& first = outside_first ? sr.outside : sr.inside;
        const Piece& second = outside_first ? sr.inside : sr.outside;
        recurse(first, delta, dcol);
        const std::array<int, 3> cut_colors{colors[static_cast<std::size_t>(cut[0])], colors[static_cast<std::size_t>(cut[1])],
                                            colors[static_cast<std::size_t>(cut[2])]};
        recurse(second, cut, cut_colors);
    }

    if (opts.verify_merges) {
        Coloring merged(n);
        for (int v = 0; v < n; ++v) merged.set(v, colors[static_cast<std::size_t>(v)]);
        if (!verify_bipartition(piece.graph(), merged, BipartitionMode::tf_tf).valid)
            throw Error(ErrorCode::InternalError, "merged piece is not a triangle-forest partition");
        if (!delta_edges_clean(piece.graph(), merged, delta))
            throw Error(ErrorCode::InternalError, "merged piece has a monochromatic triangle on a boundary edge");
    }
    return colors;
}

}  // namespace detail

/// 2-colors a planar graph so that each class induces a triangle-forest,
/// optionally honouring a precoloring of one triangle of the graph.
///
/// The graph is padded to three vertices and connected by edges between
/// components, embedded, and triangulated by chords. The triangulation is
/// then cut recursively along separating triangles (the fixed triangle
/// first if it separates, else the lexicographically smallest); the piece
/// containing the fixed triangle is colored first and passes its coloring
/// of the cut triangle on to the other piece. Leaves are K4 (table),
/// a lone triangle, or 4-connected triangulations (dual Tutte cycles).
inline PartitionResult partition_planar_detailed(const Graph& g, const std::optional<FixedTriangle>& fixed = std::nullopt,
                                                 const PartitionOptions& opts = {}) {
    const int n0 = g.order();
    if (fixed) {
        const auto& fv = fixed->vertices;
        for (int c : fixed->colors)
            if (c != 0 && c != 1) throw Error(ErrorCode::InvalidPrecoloring, "precolors must be 0 or 1");
        for (int v : fv)
            if (v < 0 || v >= n0) throw Error(ErrorCode::InvalidPrecoloring, "fixed vertex out of range");
        if (!is_triangle_of(g, make_triangle(fv[0], fv[1], fv[2])))
            throw Error(ErrorCode::InvalidPrecoloring, "fixed vertices do not form a triangle of the graph");
    }
    PartitionResult result;
    result.triangulation.original_n = n0;
    if (n0 == 0) return result;

    Graph w = g;
    while (w.order() < 3) result.triangulation.added_vertices.push_back(w.add_vertex());
    const auto comps = connected_components(w);
    std::vector<Edge> connectors;
    for (std::size_t i = 1; i < comps.size(); ++i) {
        w.add_edge(comps[i - 1].front(), comps[i].front());
        connectors.emplace_back(comps[i - 1].front(), comps[i].front());
    }
    const Embedding emb = embed(w);
    Triangulated tri = triangulate(emb);
    const Embedding& t = tri.embedding;
    result.triangulation.added_edges = connectors;
    result.triangulation.added_edges.insert(result.triangulation.added_edges.end(), tri.record.added_edges.begin(),
                                            tri.record.added_edges.end());
    std::sort(result.triangulation.added_edges.begin(), result.triangulation.added_edges.end());

    Triangle delta;
    std::array<int, 3> dcol{0, 0, 0};
    if (fixed) {
        std::array<std::pair<int, int>, 3> vc;
        for (int i = 0; i < 3; ++i) vc[static_cast<std::size_t>(i)] = {fixed->vertices[static_cast<std::size_t>(i)], fixed->colors[static_cast<std::size_t>(i)]};
        std::sort(vc.begin(), vc.end());
        for (int i = 0; i < 3; ++i) {
            delta[static_cast<std::size_t>(i)] = vc[static_cast<std::size_t>(i)].first;
            dcol[static_cast<std::size_t>(i)] = vc[static_cast<std::size_t>(i)].second;
        }
    } else {
        std::optional<Triangle> best;
        for (const Face& f : t.faces()) {
            const Triangle ft = make_triangle(f.boundary[0], f.boundary[1], f.boundary[2]);
            if (!best || ft < *best) best = ft;
        }
        delta = *best;
    }

    result.tree.vertices.resize(static_cast<std::size_t>(t.order()));
    std::iota(result.tree.vertices.begin(), result.tree.vertices.end(), 0);
    const auto colors = detail::color_triangulation(t, delta, dcol, opts, result.tree, result.pieces);
    Coloring out(n0);
    for (int v = 0; v < n0; ++v) out.set(v, colors[static_cast<std::size_t>(v)]);
    if (!verify_bipartition(g, out, BipartitionMode::tf_tf).valid)
        throw Error(ErrorCode::InternalError, "restricted coloring is not a triangle-forest partition");
    if (fixed)
        for (int i = 0; i < 3; ++i)
            if (out[fixed->vertices[static_cast<std::size_t>(i)]] != fixed->colors[static_cast<std::size_t>(i)])
                throw Error(ErrorCode::InternalError, "coloring does not honour the precoloring");
    result.coloring = std::move(out);
    return result;
}

inline Coloring partition_planar(const Graph& g, const std::optional<FixedTriangle>& fixed = std::nullopt,
                                 const PartitionOptions& opts = {}) {
    return partition_planar_detailed(g, fixed, opts).coloring;
}

/// Colors each vertex by the parity of its BFS layer, one BFS per
/// component rooted at its smallest vertex. For planar graphs both
/// classes are outerplanar.
inline Coloring bfs_outerplanar_bipartition(const Graph& g) {
    Coloring c(g.order());
    for (int root = 0; root < g.order(); ++root) {
        if (c.is_set(root)) continue;
        c.set(root, 0);
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (int y : g.neighbors(x))
                if (!c.is_set(y)) {
                    c.set(y, 1 - c[x]);
                    queue.push_back(y);
                }
        }
    }
    return c;
}

}  // namespace triforest

#endif  // TRIFOREST_PARTITION_HPP
