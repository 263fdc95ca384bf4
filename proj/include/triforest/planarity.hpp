#ifndef TRIFOREST_PLANARITY_HPP
#define TRIFOREST_PLANARITY_HPP

#include <triforest/embedding.hpp>
#include <triforest/graph.hpp>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <optional>
#include <vector>

namespace triforest {

namespace detail {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

inline BoostGraph to_boost(const Graph& g) {
    BoostGraph bg(static_cast<std::size_t>(g.order()));
    for (const Edge& e : g.edges()) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    auto index = boost::get(boost::edge_index, bg);
    int k = 0;
    for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(index, *it, k++);
    return bg;
}

/// Boyer-Myrvold planarity test; on success the per-vertex neighbor order.
inline std::optional<std::vector<std::vector<int>>> boyer_myrvold_rotation(const Graph& g) {
    using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
    BoostGraph bg = to_boost(g);
    std::vector<std::vector<EdgeDesc>> emb(static_cast<std::size_t>(g.order()));
    const bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                            boost::boyer_myrvold_params::embedding = &emb[0]);
    if (!planar) return std::nullopt;
    std::vector<std::vector<int>> rot(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        for (const auto& e : emb[static_cast<std::size_t>(v)]) {
            const int s = static_cast<int>(boost::source(e, bg)), t = static_cast<int>(boost::target(e, bg));
            rot[static_cast<std::size_t>(v)].push_back(s == v ? t : s);
        }
    return rot;
}

}  // namespace detail

inline bool is_planar(const Graph& g) {
    if (g.order() < 5) return true;
    return detail::boyer_myrvold_rotation(g).has_value();
}

/// Combinatorial embedding of a connected planar graph. The outer face is
/// face 0 of the traversal.
inline Embedding embed(const Graph& g) {
    if (g.order() < 2 || !is_connected(g))
        throw Error(ErrorCode::InvalidInput, "embed expects a connected graph with at least two vertices");
    auto rot = detail::boyer_myrvold_rotation(g);
    if (!rot) throw Error(ErrorCode::NotPlanar, "graph contains a Kuratowski subdivision");
    return Embedding(RotationSystem(std::move(*rot)));
}

/// Outerplanar iff adding an apex adjacent to every vertex stays planar.
inline bool is_outerplanar(const Graph& g) {
    Graph h(g.order() + 1);
    for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
    for (int v = 0; v < g.order(); ++v) h.add_edge(v, g.order());
    return is_planar(h);
}

}  // namespace triforest

#endif  // TRIFOREST_PLANARITY_HPP
