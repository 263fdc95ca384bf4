#ifndef TRIFOREST_GRAPH_HPP
#define TRIFOREST_GRAPH_HPP

#include <triforest/error.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace triforest {

/// Undirected edge stored with `u < v`.
struct Edge {
    int u = 0;
    int v = 0;

    constexpr Edge() = default;
    constexpr Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    constexpr bool contains(int x) const noexcept { return u == x || v == x; }
    constexpr int other(int x) const noexcept { return x == u ? v : u; }

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the dense vertex range `0..n-1`.
/// Neighbor lists are kept sorted so every traversal is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(check_order(n)) {}

    Graph(int n, std::span<const Edge> edges) : Graph(n) {
        for (const Edge& e : edges) add_edge(e.u, e.v);
    }

    Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
        for (auto [a, b] : edges) add_edge(a, b);
    }

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    int size() const noexcept { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int a, int b) const {
        if (a < 0 || b < 0 || a >= order() || b >= order()) return false;
        const auto& na = adj_[static_cast<std::size_t>(a)];
        return std::binary_search(na.begin(), na.end(), b);
    }

    /// Adds the edge {a,b}. Rejects loops and out-of-range endpoints;
    /// returns false when the edge already exists.
    bool add_edge(int a, int b) {
        if (a == b) throw Error(ErrorCode::InvalidInput, "self-loop at vertex " + std::to_string(a));
        if (a < 0 || b < 0 || a >= order() || b >= order())
            throw Error(ErrorCode::InvalidInput,
                        "edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
        if (has_edge(a, b)) return false;
        insert_sorted(adj_[static_cast<std::size_t>(a)], b);
        insert_sorted(adj_[static_cast<std::size_t>(b)], a);
        ++m_;
        return true;
    }

    bool remove_edge(int a, int b) {
        if (!has_edge(a, b)) return false;
        erase_value(adj_[static_cast<std::size_t>(a)], b);
        erase_value(adj_[static_cast<std::size_t>(b)], a);
        --m_;
        return true;
    }

    int add_vertex() {
        adj_.emplace_back();
        return order() - 1;
    }

    /// Edges in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < order(); ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    static std::size_t check_order(int n) {
        if (n < 0) throw Error(ErrorCode::InvalidInput, "negative vertex count");
        return static_cast<std::size_t>(n);
    }
    static void insert_sorted(std::vector<int>& list, int x) {
        list.insert(std::lower_bound(list.begin(), list.end(), x), x);
    }
    static void erase_value(std::vector<int>& list, int x) {
        list.erase(std::lower_bound(list.begin(), list.end(), x));
    }

    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

/// Subgraph induced by `vertices`, relabelled to `0..k-1` in the order given.
inline Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    Graph h(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int w : g.neighbors(vertices[i]))
            if (int j = local[static_cast<std::size_t>(w)]; j > static_cast<int>(i)) h.add_edge(static_cast<int>(i), j);
    return h;
}

/// Vertex-disjoint union, `b` relabelled after `a`.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
    for (const Edge& e : b.edges()) g.add_edge(e.u + a.order(), e.v + a.order());
    return g;
}

/// Connected components, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            out.back().push_back(x);
            for (int y : g.neighbors(x))
                if (comp[static_cast<std::size_t>(y)] == -1) {
                    comp[static_cast<std::size_t>(y)] = id;
                    stack.push_back(y);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

// ---------------------------------------------------------------------------
// Colorings

/// Total or partial 2-coloring. Unassigned vertices hold `kUnset`.
class Coloring {
public:
    static constexpr std::int8_t kUnset = -1;

    Coloring() = default;
    explicit Coloring(int n) : colors_(static_cast<std::size_t>(n), kUnset) {}
    explicit Coloring(std::vector<std::int8_t> colors) : colors_(std::move(colors)) {
        for (auto c : colors_)
            if (c != kUnset && c != 0 && c != 1) throw Error(ErrorCode::InvalidInput, "color must be 0 or 1");
    }
    Coloring(std::initializer_list<int> colors) {
        for (int c : colors) {
            if (c != kUnset && c != 0 && c != 1) throw Error(ErrorCode::InvalidInput, "color must be 0 or 1");
            colors_.push_back(static_cast<std::int8_t>(c));
        }
    }

    int size() const noexcept { return static_cast<int>(colors_.size()); }
    int operator[](int v) const { return colors_.at(static_cast<std::size_t>(v)); }
    bool is_set(int v) const { return (*this)[v] != kUnset; }
    void set(int v, int c) {
        if (c != 0 && c != 1) throw Error(ErrorCode::InvalidInput, "color must be 0 or 1");
        colors_.at(static_cast<std::size_t>(v)) = static_cast<std::int8_t>(c);
    }
    bool is_total() const noexcept {
        return std::none_of(colors_.begin(), colors_.end(), [](auto c) { return c == kUnset; });
    }
    std::vector<int> color_class(int c) const {
        std::vector<int> out;
        for (int v = 0; v < size(); ++v)
            if (colors_[static_cast<std::size_t>(v)] == c) out.push_back(v);
        return out;
    }
    Coloring flipped() const {
        Coloring out = *this;
        for (auto& c : out.colors_)
            if (c != kUnset) c = static_cast<std::int8_t>(1 - c);
        return out;
    }
    const std::vector<std::int8_t>& raw() const noexcept { return colors_; }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<std::int8_t> colors_;
};

// ---------------------------------------------------------------------------
// Blocks

struct BlockDecomposition {
    /// Sorted vertex sets of the maximal 2-connected subgraphs and bridges.
    std::vector<std::vector<int>> blocks;
    std::vector<int> cut_vertices;
};

/// Block/cut-vertex decomposition (Hopcroft-Tarjan, iterative).
/// Isolated vertices yield no block. Output is sorted for determinism.
inline BlockDecomposition blocks(const Graph& g) {
    const int n = g.order();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edge_stack;
    BlockDecomposition out;
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        std::size_t next;
        int children;
    };

    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        std::vector<Frame> stack{{root, -1, 0, 0}};
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                const int w = nb[f.next++];
                const auto vi = static_cast<std::size_t>(f.v), wi = static_cast<std::size_t>(w);
                if (disc[wi] == -1) {
                    edge_stack.emplace_back(f.v, w);
                    disc[wi] = low[wi] = timer++;
                    ++f.children;
                    stack.push_back({w, f.v, 0, 0});
                } else if (w != f.parent && disc[wi] < disc[vi]) {
                    edge_stack.emplace_back(f.v, w);
                    low[vi] = std::min(low[vi], disc[wi]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty()) {
                if (done.children > 1) is_cut[static_cast<std::size_t>(done.v)] = 1;
                break;
            }
            Frame& parent = stack.back();
            const auto pi = static_cast<std::size_t>(parent.v), ci = static_cast<std::size_t>(done.v);
            low[pi] = std::min(low[pi], low[ci]);
            if (low[ci] >= disc[pi]) {
                if (parent.parent != -1) is_cut[pi] = 1;
                std::vector<int> block;
                const Edge tree_edge(parent.v, done.v);
                while (true) {
                    Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e.u);
                    block.push_back(e.v);
                    if (e == tree_edge) break;
                }
                std::sort(block.begin(), block.end());
                block.erase(std::unique(block.begin(), block.end()), block.end());
                out.blocks.push_back(std::move(block));
            }
        }
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    for (int v = 0; v < n; ++v)
        if (is_cut[static_cast<std::size_t>(v)]) out.cut_vertices.push_back(v);
    return out;
}

/// No cycle of length four or more: every block has at most three vertices.
inline bool is_triangle_forest(const Graph& g) {
    // Any graph with more than 2n edges has a block larger than a triangle.
    if (g.size() > 2 * g.order()) return false;
    for (const auto& b : blocks(g).blocks)
        if (b.size() > 3) return false;
    return true;
}

inline bool is_forest(const Graph& g) {
    return g.size() + static_cast<int>(connected_components(g).size()) == g.order();
}

// ---------------------------------------------------------------------------
// graph6

inline constexpr int kMaxG6Order = 62;

/// Decodes the short form of McKay's graph6 format (n <= 62).
inline Graph g6_decode(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw Error(ErrorCode::InvalidG6, "empty string");
    for (char ch : text)
        if (ch < 63 || ch > 126) throw Error(ErrorCode::InvalidG6, std::string("invalid character '") + ch + "'");
    const int n = text[0] - 63;
    if (n > kMaxG6Order) throw Error(ErrorCode::InvalidG6, "only the short form (n <= 62) is supported");
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t expected = 1 + (bits + 5) / 6;
    if (text.size() != expected)
        throw Error(ErrorCode::InvalidG6, "expected " + std::to_string(expected) + " bytes for n=" +
                                              std::to_string(n) + ", got " + std::to_string(text.size()));
    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = text[1 + k / 6] - 63;
            if (byte >> (5 - static_cast<int>(k % 6)) & 1) g.add_edge(i, j);
        }
    for (; k < (expected - 1) * 6; ++k)
        if ((text[1 + k / 6] - 63) >> (5 - static_cast<int>(k % 6)) & 1)
            throw Error(ErrorCode::InvalidG6, "nonzero padding bits");
    return g;
}

inline std::string g6_encode(const Graph& g) {
    const int n = g.order();
    if (n > kMaxG6Order) throw Error(ErrorCode::SizeLimitExceeded, "g6 short form supports n <= 62");
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

}  // namespace triforest

#endif  // TRIFOREST_GRAPH_HPP
