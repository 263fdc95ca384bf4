#ifndef TRIFOREST_CONNECTIVITY_HPP
#define TRIFOREST_CONNECTIVITY_HPP

#include <triforest/graph.hpp>
#include <triforest/oracles.hpp>

#include <vector>

namespace triforest {

/// Connected after deleting `removed` (vertices flagged nonzero).
inline bool connected_without(const Graph& g, const std::vector<char>& removed) {
    int start = -1, alive = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!removed[static_cast<std::size_t>(v)]) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive <= 1) return true;
    std::vector<char> seen(removed);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : g.neighbors(x))
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++reached;
                stack.push_back(y);
            }
    }
    return reached == alive;
}

inline bool is_2_connected(const Graph& g) {
    if (g.order() < 3 || !is_connected(g)) return false;
    return blocks(g).cut_vertices.empty();
}

/// Exhaustive vertex-cut test: no set of at most two vertices disconnects g.
inline bool is_3_connected(const Graph& g) {
    const int n = g.order();
    if (n < 4 || !is_connected(g)) return false;
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
        removed[static_cast<std::size_t>(a)] = 1;
        if (!connected_without(g, removed)) return false;
        for (int b = a + 1; b < n; ++b) {
            removed[static_cast<std::size_t>(b)] = 1;
            const bool ok = connected_without(g, removed);
            removed[static_cast<std::size_t>(b)] = 0;
            if (!ok) return false;
        }
        removed[static_cast<std::size_t>(a)] = 0;
    }
    return true;
}

struct CubicReport {
    bool cubic = false;
    bool three_connected = false;
    bool cyclically_4ec = false;
};

/// Degree, vertex-connectivity, and cyclic edge-connectivity check by
/// enumerating every edge subset of size at most three: a disconnecting
/// subset is allowed only if it has three edges and cuts off a single vertex.
inline CubicReport cubic_cyclic_4ec_check(const Graph& g) {
    detail::require_order(g, 64, "cubic_cyclic_4ec_check");
    CubicReport r;
    r.cubic = g.order() > 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 3) r.cubic = false;
    r.three_connected = is_3_connected(g);

    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    auto cut_ok = [&](std::initializer_list<int> idx) {
        Graph h = g;
        for (int i : idx) h.remove_edge(edges[static_cast<std::size_t>(i)].u, edges[static_cast<std::size_t>(i)].v);
        const auto comps = connected_components(h);
        if (comps.size() <= 1) return true;
        if (idx.size() < 3) return false;
        for (const auto& c : comps)
            if (c.size() == 1) return true;
        return false;
    };
    r.cyclically_4ec = is_connected(g) && g.order() > 1;
    for (int a = 0; a < m && r.cyclically_4ec; ++a) {
        if (!cut_ok({a})) r.cyclically_4ec = false;
        for (int b = a + 1; b < m && r.cyclically_4ec; ++b) {
            if (!cut_ok({a, b})) r.cyclically_4ec = false;
            for (int c = b + 1; c < m && r.cyclically_4ec; ++c)
                if (!cut_ok({a, b, c})) r.cyclically_4ec = false;
        }
    }
    return r;
}

}  // namespace triforest

#endif  // TRIFOREST_CONNECTIVITY_HPP
