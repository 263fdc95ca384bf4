#ifndef TRIFOREST_EMBEDDING_HPP
#define TRIFOREST_EMBEDDING_HPP

#include <triforest/graph.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace triforest {

/// Mutable rotation system: for every vertex the cyclic order of its
/// neighbors. Faces are traced with the rule
///     next(u -> v) = (v -> successor_v(u)).
/// Used as a builder; `Embedding` is the validated immutable form.
class RotationSystem {
public:
    RotationSystem() = default;
    explicit RotationSystem(int n) : rot_(static_cast<std::size_t>(n)) {}
    explicit RotationSystem(std::vector<std::vector<int>> rot) : rot_(std::move(rot)) {}

    int order() const noexcept { return static_cast<int>(rot_.size()); }
    const std::vector<int>& at(int v) const { return rot_.at(static_cast<std::size_t>(v)); }
    std::vector<int>& at(int v) { return rot_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::vector<int>>& lists() const noexcept { return rot_; }

    int add_vertex() {
        rot_.emplace_back();
        return order() - 1;
    }

    int successor(int v, int u) const {
        const auto& r = at(v);
        auto it = std::find(r.begin(), r.end(), u);
        if (it == r.end()) throw Error(ErrorCode::InvalidInput, "dart not in rotation");
        ++it;
        return it == r.end() ? r.front() : *it;
    }

    /// Inserts `x` into the rotation of `v` directly after `after`.
    void insert_after(int v, int after, int x) {
        auto& r = at(v);
        auto it = std::find(r.begin(), r.end(), after);
        if (it == r.end()) throw Error(ErrorCode::InvalidInput, "anchor not in rotation");
        r.insert(it + 1, x);
    }

    void remove(int v, int x) {
        auto& r = at(v);
        auto it = std::find(r.begin(), r.end(), x);
        if (it != r.end()) r.erase(it);
    }

    bool adjacent(int v, int x) const {
        const auto& r = at(v);
        return std::find(r.begin(), r.end(), x) != r.end();
    }

    Graph graph() const {
        Graph g(order());
        for (int v = 0; v < order(); ++v)
            for (int w : at(v)) g.add_edge(v, w);
        return g;
    }

    /// Face walks as vertex sequences; dart i of a face is seq[i] -> seq[i+1].
    std::vector<std::vector<int>> trace_faces() const {
        std::map<std::pair<int, int>, bool> seen;
        std::vector<std::vector<int>> faces;
        for (int u = 0; u < order(); ++u)
            for (int v : at(u)) {
                if (seen[{u, v}]) continue;
                std::vector<int> walk;
                int a = u, b = v;
                while (!seen[{a, b}]) {
                    seen[{a, b}] = true;
                    walk.push_back(a);
                    const int c = successor(b, a);
                    a = b;
                    b = c;
                }
                faces.push_back(std::move(walk));
            }
        return faces;
    }

private:
    std::vector<std::vector<int>> rot_;
};

struct Face {
    int id = 0;
    /// Vertex sequence of the face walk; consecutive entries (cyclically)
    /// are the edges of the boundary.
    std::vector<int> boundary;

    int length() const noexcept { return static_cast<int>(boundary.size()); }
};

/// Combinatorial embedding of a connected graph with a designated outer
/// face. Construction validates the rotation system against the graph
/// and the Euler formula, so every `Embedding` is planar.
class Embedding {
public:
    Embedding() = default;

    explicit Embedding(RotationSystem rotation, int outer_face = 0)
        : graph_(rotation.graph()), rotation_(std::move(rotation)) {
        if (graph_.order() < 2) throw Error(ErrorCode::InvalidInput, "embedding needs at least two vertices");
        if (!is_connected(graph_)) throw Error(ErrorCode::InvalidInput, "embedding needs a connected graph");
        for (int v = 0; v < graph_.order(); ++v)
            if (static_cast<int>(rotation_.at(v).size()) != graph_.degree(v))
                throw Error(ErrorCode::InvalidInput, "rotation of vertex " + std::to_string(v) + " repeats a neighbor");
        auto walks = rotation_.trace_faces();
        for (std::size_t i = 0; i < walks.size(); ++i) {
            const auto& w = walks[i];
            for (std::size_t k = 0; k < w.size(); ++k)
                dart_face_[{w[k], w[(k + 1) % w.size()]}] = static_cast<int>(i);
            faces_.push_back(Face{static_cast<int>(i), w});
        }
        if (graph_.order() - graph_.size() + face_count() != 2)
            throw Error(ErrorCode::NotPlanar, "rotation system violates Euler's formula (genus > 0)");
        if (outer_face < 0 || outer_face >= face_count()) throw Error(ErrorCode::UnknownFace, "outer face id out of range");
        outer_ = outer_face;
    }

    const Graph& graph() const noexcept { return graph_; }
    int order() const noexcept { return graph_.order(); }
    const RotationSystem& rotation() const noexcept { return rotation_; }
    const std::vector<int>& rotation(int v) const { return rotation_.at(v); }
    int successor(int v, int u) const { return rotation_.successor(v, u); }

    const std::vector<Face>& faces() const noexcept { return faces_; }
    int face_count() const noexcept { return static_cast<int>(faces_.size()); }
    const Face& face(int id) const { return faces_.at(static_cast<std::size_t>(id)); }
    int outer_face() const noexcept { return outer_; }
    const Face& outer() const { return face(outer_); }

    /// Face to the traversal side of the dart tail -> head.
    int face_of_dart(int tail, int head) const {
        auto it = dart_face_.find({tail, head});
        if (it == dart_face_.end()) throw Error(ErrorCode::InvalidInput, "no such dart");
        return it->second;
    }

    /// Face whose boundary visits exactly the given vertex set once each.
    std::optional<int> find_face(std::span<const int> vertices) const {
        std::vector<int> want(vertices.begin(), vertices.end());
        std::sort(want.begin(), want.end());
        for (const Face& f : faces_) {
            if (f.boundary.size() != want.size()) continue;
            std::vector<int> have = f.boundary;
            std::sort(have.begin(), have.end());
            if (have == want) return f.id;
        }
        return std::nullopt;
    }

    bool on_outer_face(int v) const {
        const auto& b = outer().boundary;
        return std::find(b.begin(), b.end(), v) != b.end();
    }

    bool edge_on_outer_face(Edge e) const {
        if (!graph_.has_edge(e.u, e.v)) return false;
        return face_of_dart(e.u, e.v) == outer_ || face_of_dart(e.v, e.u) == outer_;
    }

    /// Edges of the outer face boundary, sorted.
    std::vector<Edge> outer_edges() const {
        std::vector<Edge> out;
        const auto& b = outer().boundary;
        for (std::size_t k = 0; k < b.size(); ++k) out.emplace_back(b[k], b[(k + 1) % b.size()]);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    Graph graph_;
    RotationSystem rotation_;
    std::vector<Face> faces_;
    std::map<std::pair<int, int>, int> dart_face_;
    int outer_ = 0;
};

/// Same rotation system, rooted at face `face_id`.
inline Embedding set_outer_face(const Embedding& e, int face_id) {
    if (face_id < 0 || face_id >= e.face_count())
        throw Error(ErrorCode::UnknownFace, "face " + std::to_string(face_id) + " does not exist");
    if (face_id == e.outer_face()) return e;
    return Embedding(e.rotation(), face_id);
}

/// Re-roots at the face whose boundary is exactly `vertices`.
inline Embedding set_outer_face(const Embedding& e, std::span<const int> vertices) {
    auto id = e.find_face(vertices);
    if (!id) throw Error(ErrorCode::UnknownFace, "no face with the given boundary");
    return set_outer_face(e, *id);
}

/// Restriction of the rotation system to `keep` (relabelled in the given
/// order). Deleting vertices preserves planarity.
inline RotationSystem restrict_rotation(const RotationSystem& rs, std::span<const int> keep) {
    std::vector<int> local(static_cast<std::size_t>(rs.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) local[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    RotationSystem out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (int w : rs.at(keep[i]))
            if (int j = local[static_cast<std::size_t>(w)]; j >= 0) out.at(static_cast<int>(i)).push_back(j);
    return out;
}

}  // namespace triforest

#endif  // TRIFOREST_EMBEDDING_HPP
