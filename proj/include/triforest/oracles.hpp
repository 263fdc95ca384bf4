#ifndef TRIFOREST_ORACLES_HPP
#define TRIFOREST_ORACLES_HPP

#include <triforest/graph.hpp>

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace triforest {

/// Which predicate each color class must satisfy. In the asymmetric mode
/// class 0 is the forest.
enum class BipartitionMode { tf_tf, forest_tf, forest_forest };

inline constexpr std::string_view to_string(BipartitionMode m) noexcept {
    switch (m) {
    case BipartitionMode::tf_tf: return "tf_tf";
    case BipartitionMode::forest_tf: return "forest_tf";
    case BipartitionMode::forest_forest: return "forest_forest";
    }
    return "?";
}

inline BipartitionMode parse_mode(std::string_view s) {
    if (s == "tf_tf") return BipartitionMode::tf_tf;
    if (s == "forest_tf") return BipartitionMode::forest_tf;
    if (s == "forest_forest") return BipartitionMode::forest_forest;
    throw Error(ErrorCode::InvalidInput, "unknown mode '" + std::string(s) + "'");
}

inline constexpr int kMaxColoringOrder = 24;
inline constexpr int kMaxHamiltonianOrder = 64;

/// Node counters reported by the exhaustive searches.
struct SearchStats {
    std::uint64_t nodes = 0;      ///< partial assignments visited
    std::uint64_t complete = 0;   ///< total assignments reached
};

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

inline std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v)
        for (int w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= bit(w);
    return adj;
}

inline Mask reach_within(const std::vector<Mask>& adj, Mask allowed, Mask start) {
    Mask seen = start & allowed, frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

/// Largest block (vertex count) of the subgraph induced by `mask`; stops
/// early once a block exceeds `limit`.
class MaskBlocks {
public:
    explicit MaskBlocks(const std::vector<Mask>& adj) : adj_(adj) {}

    int largest_block(Mask mask, int limit = 64) {
        mask_ = mask;
        limit_ = limit;
        best_ = 0;
        timer_ = 0;
        disc_.fill(-1);
        top_ = 0;
        for (Mask m = mask; m; m &= m - 1) {
            int r = std::countr_zero(m);
            if (disc_[static_cast<std::size_t>(r)] == -1) {
                visit(r, -1);
                if (best_ > limit_) break;
            }
        }
        return best_;
    }

private:
    void visit(int v, int parent) {
        disc_[static_cast<std::size_t>(v)] = low_[static_cast<std::size_t>(v)] = timer_++;
        for (Mask nb = adj_[static_cast<std::size_t>(v)] & mask_; nb; nb &= nb - 1) {
            if (best_ > limit_) return;
            const int w = std::countr_zero(nb);
            auto& lw = low_[static_cast<std::size_t>(w)];
            auto& lv = low_[static_cast<std::size_t>(v)];
            if (disc_[static_cast<std::size_t>(w)] == -1) {
                stack_[top_++] = {v, w};
                visit(w, v);
                lv = std::min(lv, lw);
                if (lw >= disc_[static_cast<std::size_t>(v)]) {
                    Mask block = 0;
                    while (top_ > 0) {
                        auto [a, b] = stack_[--top_];
                        block |= bit(a) | bit(b);
                        if (a == v && b == w) break;
                    }
                    best_ = std::max(best_, std::popcount(block));
                }
            } else if (w != parent && disc_[static_cast<std::size_t>(w)] < disc_[static_cast<std::size_t>(v)]) {
                stack_[top_++] = {v, w};
                lv = std::min(lv, disc_[static_cast<std::size_t>(w)]);
            }
        }
    }

    const std::vector<Mask>& adj_;
    Mask mask_ = 0;
    int limit_ = 64;
    int best_ = 0;
    int timer_ = 0;
    std::array<int, 64> disc_{};
    std::array<int, 64> low_{};
    std::array<std::pair<int, int>, 64 * 64> stack_{};
    std::size_t top_ = 0;
};

inline void require_order(const Graph& g, int limit, std::string_view what) {
    if (g.order() > limit)
        throw Error(ErrorCode::SizeLimitExceeded, std::string(what) + " supports n <= " + std::to_string(limit) +
                                                      ", got n=" + std::to_string(g.order()));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Verification

struct Violation {
    int color = 0;
    std::string kind;           ///< "block" (>= 4 vertices) or "cycle" (block containing a cycle)
    std::vector<int> vertices;  ///< original vertex ids
};

struct BipartitionReport {
    bool valid = true;
    std::vector<Violation> violations;
};

/// Checks both induced color classes against the predicates of `mode`.
inline BipartitionReport verify_bipartition(const Graph& g, const Coloring& c, BipartitionMode mode) {
    if (c.size() != g.order() || !c.is_total())
        throw Error(ErrorCode::PartialColoring, "coloring must assign every vertex of the graph");
    BipartitionReport report;
    for (int color = 0; color < 2; ++color) {
        const bool forest = mode == BipartitionMode::forest_forest || (mode == BipartitionMode::forest_tf && color == 0);
        const auto members = c.color_class(color);
        const auto bd = blocks(induced_subgraph(g, members));
        for (const auto& b : bd.blocks) {
            const std::size_t limit = forest ? 2 : 3;
            if (b.size() <= limit) continue;
            Violation v{color, forest ? "cycle" : "block", {}};
            for (int local : b) v.vertices.push_back(members[static_cast<std::size_t>(local)]);
            report.violations.push_back(std::move(v));
        }
    }
    report.valid = report.violations.empty();
    return report;
}

// ---------------------------------------------------------------------------
// Exhaustive searches

/// Depth-first enumeration of all 2-colorings in vertex order, color 0
/// first, so the first hit is the lexicographically smallest valid
/// coloring. Partial classes that already violate their predicate are cut:
/// both predicates are closed under taking induced subgraphs.
inline std::optional<Coloring> brute_force_bipartition(const Graph& g, BipartitionMode mode,
                                                       SearchStats* stats = nullptr) {
    using namespace detail;
    require_order(g, kMaxColoringOrder, "brute_force_bipartition");
    const int n = g.order();
    const auto adj = adjacency_masks(g);
    MaskBlocks mb(adj);
    std::array<Mask, 2> cls{0, 0};
    std::vector<std::int8_t> assignment(static_cast<std::size_t>(n), 0);
    SearchStats local;

    auto is_forest_class = [&](int c) { return mode == BipartitionMode::forest_forest ||
                                               (mode == BipartitionMode::forest_tf && c == 0); };
    // Adding v keeps a forest iff v's class neighbors lie in distinct trees.
    auto forest_ok = [&](int v, Mask members) {
        Mask nb = adj[static_cast<std::size_t>(v)] & members;
        while (nb) {
            const int w = std::countr_zero(nb);
            nb &= nb - 1;
            const Mask tree = reach_within(adj, members, bit(w));
            if (tree & nb) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int v) -> bool {
        ++local.nodes;
        if (v == n) {
            ++local.complete;
            return true;
        }
        for (int c = 0; c < 2; ++c) {
            const Mask members = cls[static_cast<std::size_t>(c)];
            bool ok;
            if (is_forest_class(c))
                ok = forest_ok(v, members);
            else
                ok = (adj[static_cast<std::size_t>(v)] & members) == 0 || mb.largest_block(members | bit(v), 3) <= 3;
            if (!ok) continue;
            cls[static_cast<std::size_t>(c)] |= bit(v);
            assignment[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(c);
            if (self(self, v + 1)) return true;
            cls[static_cast<std::size_t>(c)] &= ~bit(v);
        }
        return false;
    };

    const bool found = rec(rec, 0);
    if (stats) *stats = local;
    if (!found) return std::nullopt;
    return Coloring(assignment);
}

struct InducedTriangleForest {
    int size = 0;
    std::vector<int> witness;
};

/// Maximum vertex set inducing a triangle-forest, by include-first branch
/// and bound over all subsets.
inline InducedTriangleForest max_induced_triangle_forest(const Graph& g, SearchStats* stats = nullptr) {
    using namespace detail;
    require_order(g, kMaxColoringOrder, "max_induced_triangle_forest");
    const int n = g.order();
    const auto adj = adjacency_masks(g);
    MaskBlocks mb(adj);
    Mask best = 0;
    int best_size = -1;
    SearchStats local;

    auto rec = [&](auto&& self, int v, Mask chosen, int size) -> void {
        ++local.nodes;
        if (size + (n - v) <= best_size) return;
        if (v == n) {
            ++local.complete;
            best = chosen;
            best_size = size;
            return;
        }
        const Mask with = chosen | bit(v);
        if ((adj[static_cast<std::size_t>(v)] & chosen) == 0 || mb.largest_block(with, 3) <= 3)
            self(self, v + 1, with, size + 1);
        self(self, v + 1, chosen, size);
    };
    rec(rec, 0, 0, 0);
    if (stats) *stats = local;

    InducedTriangleForest out;
    out.size = best_size;
    for (int v = 0; v < n; ++v)
        if (best & bit(v)) out.witness.push_back(v);
    return out;
}

/// Backtracking Hamiltonian cycle search from vertex 0 with degree and
/// connectivity pruning. Returns the cycle as a vertex sequence starting at 0.
inline std::optional<std::vector<int>> hamiltonian_cycle_search(const Graph& g, SearchStats* stats = nullptr) {
    using namespace detail;
    require_order(g, kMaxHamiltonianOrder, "hamiltonian_cycle_search");
    const int n = g.order();
    if (n < 3) return std::nullopt;
    const auto adj = adjacency_masks(g);
    const Mask all = n == 64 ? ~Mask{0} : (bit(n) - 1);
    for (int v = 0; v < n; ++v)
        if (std::popcount(adj[static_cast<std::size_t>(v)]) < 2) return std::nullopt;
    if (reach_within(adj, all, bit(0)) != all) return std::nullopt;

    std::vector<int> path{0};
    path.reserve(static_cast<std::size_t>(n));
    SearchStats local;
    const int start = 0;

    auto feasible = [&](int cur, Mask unvisited) {
        if (unvisited == 0) return (adj[static_cast<std::size_t>(cur)] & bit(start)) != 0;
        const Mask ends = bit(cur) | bit(start);
        // Every unvisited vertex needs two usable cycle neighbors.
        for (Mask u = unvisited; u; u &= u - 1) {
            const int w = std::countr_zero(u);
            if (std::popcount(adj[static_cast<std::size_t>(w)] & (unvisited | ends)) < 2) return false;
        }
        if ((adj[static_cast<std::size_t>(cur)] & unvisited) == 0) return false;
        if ((adj[static_cast<std::size_t>(start)] & unvisited) == 0) return false;
        // The remaining path runs from cur through all unvisited vertices.
        const Mask first = adj[static_cast<std::size_t>(cur)] & unvisited;
        return reach_within(adj, unvisited, first) == unvisited;
    };

    auto rec = [&](auto&& self, int cur, Mask unvisited) -> bool {
        ++local.nodes;
        if (unvisited == 0) {
            ++local.complete;
            return (adj[static_cast<std::size_t>(cur)] & bit(start)) != 0;
        }
        if (!feasible(cur, unvisited)) return false;
        for (Mask nb = adj[static_cast<std::size_t>(cur)] & unvisited; nb; nb &= nb - 1) {
            const int w = std::countr_zero(nb);
            path.push_back(w);
            if (self(self, w, unvisited & ~bit(w))) return true;
            path.pop_back();
        }
        return false;
    };
    const bool found = rec(rec, start, all & ~bit(start));
    if (stats) *stats = local;
    if (!found) return std::nullopt;
    return path;
}

}  // namespace triforest

#endif  // TRIFOREST_ORACLES_HPP
