#ifndef TRIFOREST_IO_HPP
#define TRIFOREST_IO_HPP

#include <triforest/graph.hpp>
#include <triforest/tutte.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

namespace triforest {

using json = nlohmann::ordered_json;

/// {"n": int, "edges": [[u,v],...]}
inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return json{{"n", g.order()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const json& j) {
    try {
        Graph g(j.at("n").get<int>());
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::InvalidInput, "edge must be a pair");
            g.add_edge(e[0].get<int>(), e[1].get<int>());
        }
        return g;
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::InvalidInput, std::string("bad JSON edge list: ") + ex.what());
    }
}

/// Accepts either graph6 or a JSON edge list (recognised by a leading '{').
inline Graph parse_graph(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw Error(ErrorCode::InvalidInput, "empty graph input");
    text.remove_prefix(first);
    if (text.front() == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& ex) {
            throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + ex.what());
        }
        return graph_from_json(j);
    }
    const auto eol = text.find_first_of("\r\n");
    return g6_decode(text.substr(0, eol));
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Graph read_graph_file(const std::string& path) { return parse_graph(read_file(path)); }

inline json coloring_colors_json(const Coloring& c) {
    json colors = json::array();
    for (int v = 0; v < c.size(); ++v) colors.push_back(c[v]);
    return colors;
}

inline json to_json(const TutteCertificate& t) {
    json att = json::array();
    for (const auto& a : t.attachments) att.push_back({{"component", a.component}, {"edges", a.edges}});
    return json{{"kind", std::string(to_string(t.kind))}, {"sequence", t.sequence}, {"attachments", std::move(att)}};
}

inline TutteCertificate tutte_certificate_from_json(const json& j) {
    TutteCertificate t;
    const auto kind = j.at("kind").get<std::string>();
    if (kind != "path" && kind != "cycle") throw Error(ErrorCode::InvalidInput, "kind must be path or cycle");
    t.kind = kind == "path" ? TutteKind::path : TutteKind::cycle;
    t.sequence = j.at("sequence").get<std::vector<int>>();
    for (const auto& a : j.at("attachments"))
        t.attachments.push_back({a.at("component").get<std::vector<int>>(), a.at("edges").get<int>()});
    return t;
}

}  // namespace triforest

#endif  // TRIFOREST_IO_HPP
