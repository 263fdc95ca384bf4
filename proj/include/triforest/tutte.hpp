#ifndef TRIFOREST_TUTTE_HPP
#define TRIFOREST_TUTTE_HPP

#include <triforest/connectivity.hpp>
#include <triforest/embedding.hpp>
#include <triforest/graph.hpp>
#include <triforest/oracles.hpp>

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace triforest {

enum class TutteKind { path, cycle };

inline constexpr std::string_view to_string(TutteKind k) noexcept { return k == TutteKind::path ? "path" : "cycle"; }

/// A component of G - V(T) and the number of edges it sends to T.
struct Attachment {
    std::vector<int> component;
    int edges = 0;

    friend bool operator==(const Attachment&, const Attachment&) = default;
};

/// A path or cycle T together with the attachment count of every
/// component of G - V(T). Valid when every count is at most three.
struct TutteCertificate {
    TutteKind kind = TutteKind::path;
    std::vector<int> sequence;
    std::vector<Attachment> attachments;

    friend bool operator==(const TutteCertificate&, const TutteCertificate&) = default;
};

struct TutteCheck {
    std::optional<TutteCertificate> certificate;
    std::optional<Attachment> violation;  ///< first component with more than three attachments

    explicit operator bool() const noexcept { return certificate.has_value(); }
};

namespace detail {

inline void require_walk(const Graph& g, std::span<const int> seq, TutteKind kind) {
    const ErrorCode code = kind == TutteKind::path ? ErrorCode::NotAPath : ErrorCode::NotACycle;
    if (seq.empty()) throw Error(code, "empty sequence");
    if (kind == TutteKind::cycle && seq.size() < 3) throw Error(code, "a cycle needs at least three vertices");
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const int v = seq[i];
        if (v < 0 || v >= g.order()) throw Error(code, "vertex out of range");
        if (seen[static_cast<std::size_t>(v)]++) throw Error(code, "repeated vertex " + std::to_string(v));
        if (i + 1 < seq.size() && !g.has_edge(v, seq[i + 1]))
            throw Error(code, "missing edge " + std::to_string(v) + "-" + std::to_string(seq[i + 1]));
    }
    if (kind == TutteKind::cycle && !g.has_edge(seq.back(), seq.front())) throw Error(code, "missing closing edge");
}

/// Components of G - `on_t` (label -1 for vertices of T), ordered by
/// smallest vertex, with their attachment-edge counts.
inline std::vector<Attachment> attachments(const Graph& g, const std::vector<char>& on_t) {
    std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
    std::vector<Attachment> out;
    for (int s = 0; s < g.order(); ++s) {
        if (on_t[static_cast<std::size_t>(s)] || label[static_cast<std::size_t>(s)] != -1) continue;
        Attachment a;
        std::vector<int> stack{s};
        label[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            a.component.push_back(x);
            for (int y : g.neighbors(x)) {
                if (on_t[static_cast<std::size_t>(y)]) {
                    ++a.edges;
                } else if (label[static_cast<std::size_t>(y)] == -1) {
                    label[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
                    stack.push_back(y);
                }
            }
        }
        std::sort(a.component.begin(), a.component.end());
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace detail

/// Checks the Tutte condition for a path or cycle of g.
inline TutteCheck is_tutte_subgraph(const Graph& g, std::span<const int> sequence, TutteKind kind) {
    detail::require_walk(g, sequence, kind);
    std::vector<char> on_t(static_cast<std::size_t>(g.order()), 0);
    for (int v : sequence) on_t[static_cast<std::size_t>(v)] = 1;
    auto att = detail::attachments(g, on_t);
    TutteCheck out;
    for (const auto& a : att)
        if (a.edges > 3) {
            out.violation = a;
            return out;
        }
    out.certificate = TutteCertificate{kind, {sequence.begin(), sequence.end()}, std::move(att)};
    return out;
}

struct TutteSearchOptions {
    /// Wall-clock budget per call; unlimited when empty.
    std::optional<std::chrono::milliseconds> time_budget;
    SearchStats* stats = nullptr;
};

namespace detail {

/// Depth-first search for a path from `source` to `target` that uses every
/// required edge and satisfies the Tutte condition. Neighbors are tried in
/// increasing order. Two prunes:
///  - a component of G - V(partial) that cannot contain the rest of the
///    path is final, so more than three attachments kill the branch;
///  - an unused required edge must still be reachable from the frontier.
class TuttePathSearch {
public:
    TuttePathSearch(const Graph& g, int source, int target, std::vector<Edge> required, bool forbid_direct,
                    const TutteSearchOptions& opts)
        : g_(g), target_(target), required_(std::move(required)), forbid_direct_(forbid_direct),
          on_path_(static_cast<std::size_t>(g.order()), 0), comp_(static_cast<std::size_t>(g.order()), -1),
          stats_(opts.stats) {
        if (opts.time_budget) deadline_ = std::chrono::steady_clock::now() + *opts.time_budget;
        path_.push_back(source);
        on_path_[static_cast<std::size_t>(source)] = 1;
    }

    std::optional<std::vector<int>> run() {
        const bool found = dfs();
        if (stats_) stats_->nodes += nodes_;
        if (!found) return std::nullopt;
        return path_;
    }

private:
    bool required_used(const Edge& e) const {
        for (std::size_t i = 0; i + 1 < path_.size(); ++i)
            if (Edge(path_[i], path_[i + 1]) == e) return true;
        return false;
    }

    void label_components() {
        std::fill(comp_.begin(), comp_.end(), -1);
        attach_.clear();
        std::vector<int> stack;
        for (int s = 0; s < g_.order(); ++s) {
            if (on_path_[static_cast<std::size_t>(s)] || comp_[static_cast<std::size_t>(s)] != -1) continue;
            const int id = static_cast<int>(attach_.size());
            attach_.push_back(0);
            comp_[static_cast<std::size_t>(s)] = id;
            stack.push_back(s);
            while (!stack.empty()) {
                const int x = stack.back();
                stack.pop_back();
                for (int y : g_.neighbors(x)) {
                    if (on_path_[static_cast<std::size_t>(y)]) {
                        ++attach_[static_cast<std::size_t>(id)];
                    } else if (comp_[static_cast<std::size_t>(y)] == -1) {
                        comp_[static_cast<std::size_t>(y)] = id;
                        stack.push_back(y);
                    }
                }
            }
        }
    }

    bool dfs() {
        if ((nodes_++ & 1023) == 0 && deadline_ && std::chrono::steady_clock::now() >= *deadline_)
            throw Error(ErrorCode::TimeBudgetExceeded, "Tutte search exceeded its time budget");
        const int x = path_.back();
        if (x == target_) {
            if (forbid_direct_ && path_.size() < 3) return false;
            for (const Edge& e : required_)
                if (!required_used(e)) return false;
            std::vector<char> on_t(on_path_);
            for (const auto& a : attachments(g_, on_t))
                if (a.edges > 3) return false;
            return true;
        }
        label_components();
        const int home = comp_[static_cast<std::size_t>(target_)];
        for (std::size_t c = 0; c < attach_.size(); ++c)
            if (static_cast<int>(c) != home && attach_[c] > 3) return false;
        for (const Edge& e : required_) {
            if (required_used(e)) continue;
            for (int end : {e.u, e.v}) {
                if (end == x) continue;
                if (on_path_[static_cast<std::size_t>(end)] || comp_[static_cast<std::size_t>(end)] != home) return false;
            }
        }
        std::vector<int> next;
        for (int y : g_.neighbors(x)) {
            if (on_path_[static_cast<std::size_t>(y)] || comp_[static_cast<std::size_t>(y)] != home) continue;
            if (forbid_direct_ && y == target_ && path_.size() < 2) continue;
            next.push_back(y);
        }
        for (int y : next) {
            path_.push_back(y);
            on_path_[static_cast<std::size_t>(y)] = 1;
            if (dfs()) return true;
            on_path_[static_cast<std::size_t>(y)] = 0;
            path_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    int target_;
    std::vector<Edge> required_;
    bool forbid_direct_;
    std::vector<int> path_;
    std::vector<char> on_path_;
    std::vector<int> comp_;
    std::vector<int> attach_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    SearchStats* stats_;
    std::uint64_t nodes_ = 0;
};

inline void require_2_connected(const Embedding& e) {
    if (!is_2_connected(e.graph()))
        throw Error(ErrorCode::PreconditionViolated, "graph is not 2-connected");
}

}  // namespace detail

/// Tutte path from u to v through the edge f, where u, v and f lie on the
/// outer face of a 2-connected plane graph. Attachments are counted as
/// edges, so existence is guaranteed when the graph is subcubic and u, v
/// have degree at most two; there SearchExhausted means the search is
/// broken. Elsewhere (e.g. K4 with f = uv) no such path may exist.
inline TutteCertificate find_tutte_path(const Embedding& e, int u, int v, Edge f, const TutteSearchOptions& opts = {}) {
    detail::require_2_connected(e);
    const Graph& g = e.graph();
    if (u == v || u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw Error(ErrorCode::PreconditionViolated, "endpoints must be two distinct vertices");
    if (!e.on_outer_face(u) || !e.on_outer_face(v))
        throw Error(ErrorCode::PreconditionViolated, "endpoints must lie on the outer face");
    if (!e.edge_on_outer_face(f)) throw Error(ErrorCode::PreconditionViolated, "forced edge must lie on the outer face");

    detail::TuttePathSearch search(g, u, v, {f}, false, opts);
    auto path = search.run();
    if (!path) throw Error(ErrorCode::SearchExhausted, "no Tutte path exists from " + std::to_string(u) + " to " + std::to_string(v));
    auto check = is_tutte_subgraph(g, *path, TutteKind::path);
    if (!check) throw Error(ErrorCode::InternalError, "search returned an invalid Tutte path");
    return *check.certificate;
}

/// Tutte cycle through three distinct outer-face edges of a 2-connected
/// plane graph; guaranteed to exist when the graph is subcubic. The cycle is searched as a path between the endpoints of
/// the first edge that avoids using that edge directly.
inline TutteCertificate find_tutte_cycle_through_edges(const Embedding& e, Edge e1, Edge e2, Edge e3,
                                                       const TutteSearchOptions& opts = {}) {
    detail::require_2_connected(e);
    if (e1 == e2 || e1 == e3 || e2 == e3) throw Error(ErrorCode::PreconditionViolated, "edges must be distinct");
    for (const Edge& x : {e1, e2, e3})
        if (!e.edge_on_outer_face(x)) throw Error(ErrorCode::PreconditionViolated, "edges must lie on the outer face");

    detail::TuttePathSearch search(e.graph(), e1.u, e1.v, {e2, e3}, true, opts);
    auto path = search.run();
    if (!path) throw Error(ErrorCode::SearchExhausted, "no Tutte cycle through the three edges");
    auto check = is_tutte_subgraph(e.graph(), *path, TutteKind::cycle);
    if (!check) throw Error(ErrorCode::InternalError, "search returned an invalid Tutte cycle");
    return *check.certificate;
}

}  // namespace triforest

#endif  // TRIFOREST_TUTTE_HPP
