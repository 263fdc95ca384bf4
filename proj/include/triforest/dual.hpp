#ifndef TRIFOREST_DUAL_HPP
#define TRIFOREST_DUAL_HPP

#include <triforest/embedding.hpp>

#include <map>
#include <vector>

namespace triforest {

/// Planar dual with its embedding and the correspondences back to the
/// primal. Dual vertex i is primal face i.
struct DualGraph {
    Embedding embedding;                   ///< embedding of the dual
    std::vector<int> face_to_dualvertex;   ///< primal face -> dual vertex
    std::vector<int> dualvertex_to_face;   ///< dual vertex -> primal face
    std::map<Edge, Edge> edge_to_dualedge; ///< primal edge -> dual edge
    std::map<Edge, Edge> dualedge_to_edge; ///< dual edge -> primal edge
    std::vector<int> vertex_to_dualface;   ///< primal vertex -> face of the dual embedding
    std::vector<int> dualface_to_vertex;   ///< face of the dual embedding -> primal vertex

    const Graph& graph() const noexcept { return embedding.graph(); }
};

/// Builds the dual. The rotation at dual vertex f lists the faces across
/// the darts of f in walk order; with that choice the dual face traced
/// from the dual dart crossing primal dart (u -> v) circulates around u.
/// Requires a simple dual (no bridges, no two faces sharing two edges),
/// which holds for every triangulation on at least four vertices and for
/// every 3-connected plane graph.
inline DualGraph dual(const Embedding& e) {
    const int f = e.face_count();
    RotationSystem rs(f);
    std::map<std::pair<int, int>, std::pair<int, int>> dual_dart_to_primal;
    for (const Face& face : e.faces()) {
        const auto& b = face.boundary;
        for (std::size_t k = 0; k < b.size(); ++k) {
            const int u = b[k], v = b[(k + 1) % b.size()];
            const int across = e.face_of_dart(v, u);
            if (across == face.id) throw Error(ErrorCode::InvalidInput, "dual has a loop (primal bridge)");
            if (rs.adjacent(face.id, across)) throw Error(ErrorCode::InvalidInput, "dual has parallel edges");
            rs.at(face.id).push_back(across);
            dual_dart_to_primal[{face.id, across}] = {u, v};
        }
    }
    DualGraph d;
    d.embedding = Embedding(std::move(rs));
    d.face_to_dualvertex.resize(static_cast<std::size_t>(f));
    d.dualvertex_to_face.resize(static_cast<std::size_t>(f));
    for (int i = 0; i < f; ++i) d.face_to_dualvertex[static_cast<std::size_t>(i)] = d.dualvertex_to_face[static_cast<std::size_t>(i)] = i;
    for (const Edge& pe : e.graph().edges()) {
        const Edge de(e.face_of_dart(pe.u, pe.v), e.face_of_dart(pe.v, pe.u));
        d.edge_to_dualedge[pe] = de;
        d.dualedge_to_edge[de] = pe;
    }
    d.vertex_to_dualface.assign(static_cast<std::size_t>(e.order()), -1);
    d.dualface_to_vertex.assign(static_cast<std::size_t>(d.embedding.face_count()), -1);
    for (const Face& df : d.embedding.faces()) {
        const auto& b = df.boundary;
        const int tail = dual_dart_to_primal.at({b[0], b[1 % b.size()]}).first;
        d.dualface_to_vertex[static_cast<std::size_t>(df.id)] = tail;
        d.vertex_to_dualface[static_cast<std::size_t>(tail)] = df.id;
    }
    return d;
}

}  // namespace triforest

#endif  // TRIFOREST_DUAL_HPP
