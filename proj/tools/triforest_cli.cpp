// Command-line front end: partition, certify, batch.
//
// Exit codes: 0 success / claim confirmed, 1 claim not confirmed (including
// a candidate failing a required property), 2 input error, 3 precoloring
// error, 4 internal lemma violation, 5 time budget exhausted.

#include <triforest/triforest.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace tf = triforest;

namespace {

int exit_code_for(tf::ErrorCode code) {
    using tf::ErrorCode;
    if (code == ErrorCode::InvalidPrecoloring) return 3;
    if (code == ErrorCode::TimeBudgetExceeded) return 5;
    if (code == ErrorCode::PropertyFailed) return 1;
    if (tf::is_internal(code)) return 4;
    return 2;
}

struct Output {
    std::string path;

    void emit(const tf::json& j) const {
        const std::string text = j.dump(2) + "\n";
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw tf::Error(tf::ErrorCode::InvalidInput, "cannot write '" + path + "'");
        out << text;
    }
};

struct GraphSource {
    std::string g6;
    std::string json_text;
    std::string file;

    tf::Graph load() const {
        const int given = !g6.empty() + !json_text.empty() + !file.empty();
        if (given != 1) throw tf::Error(tf::ErrorCode::InvalidInput, "give exactly one of --g6, --json, --file");
        if (!g6.empty()) return tf::g6_decode(g6);
        if (!json_text.empty()) return tf::parse_graph(json_text);
        return tf::read_graph_file(file);
    }
};

/// "v1,v2,v3=c1,c2,c3"
tf::FixedTriangle parse_fix(const std::string& text) {
    const auto eq = text.find('=');
    auto ints = [](const std::string& part) {
        std::vector<int> out;
        std::stringstream ss(part);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                out.push_back(std::stoi(item, &used));
                if (used != item.size()) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw tf::Error(tf::ErrorCode::InvalidPrecoloring, "bad integer '" + item + "' in --fix");
            }
        }
        return out;
    };
    if (eq == std::string::npos) throw tf::Error(tf::ErrorCode::InvalidPrecoloring, "--fix expects v1,v2,v3=c1,c2,c3");
    const auto vs = ints(text.substr(0, eq)), cs = ints(text.substr(eq + 1));
    if (vs.size() != 3 || cs.size() != 3) throw tf::Error(tf::ErrorCode::InvalidPrecoloring, "--fix needs three vertices and three colors");
    tf::FixedTriangle fixed;
    for (std::size_t i = 0; i < 3; ++i) {
        fixed.vertices[i] = vs[i];
        fixed.colors[i] = cs[i];
    }
    return fixed;
}

std::pair<int, int> parse_range(const std::string& text) {
    try {
        const auto dots = text.find("..");
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw tf::Error(tf::ErrorCode::InvalidInput, "bad range '" + text + "', expected N or LO..HI");
    }
}

int run_partition(const GraphSource& src, const std::string& fix, long long budget_ms, const Output& out) {
    const tf::Graph g = src.load();
    std::optional<tf::FixedTriangle> fixed;
    if (!fix.empty()) fixed = parse_fix(fix);
    tf::PartitionOptions opts;
    if (budget_ms > 0) opts.tutte.time_budget = std::chrono::milliseconds(budget_ms);
    const tf::Coloring c = tf::partition_planar(g, fixed, opts);
    const bool verified = tf::verify_bipartition(g, c, tf::BipartitionMode::tf_tf).valid;
    if (!verified) throw tf::Error(tf::ErrorCode::InternalError, "coloring failed verification");
    tf::json j{{"n", g.order()}, {"colors", tf::coloring_colors_json(c)}, {"fixed", nullptr}, {"verified", verified}};
    if (fixed) j["fixed"] = {{"vertices", fixed->vertices}, {"colors", fixed->colors}};
    out.emit(j);
    return 0;
}

int run_certify(const std::string& claim, const std::string& file, std::uint64_t seed, int per_order, const Output& out) {
    tf::Certificate cert;
    if (claim == "octahedron") {
        cert = tf::certify_octahedron_bound();
        const auto part = tf::certify_non_bipartitionable(tf::named::octahedron(), "octahedron_bipartition");
        cert.verdict["octahedron_two_triangle_forest_partition"] = part.verdict["partition"];
    } else if (claim == "k7") {
        cert = tf::certify_non_bipartitionable(tf::named::complete(7), "k7_non_bipartitionable");
    } else if (claim == "projective") {
        cert = tf::certify_non_bipartitionable(tf::build_named("projective11"), "projective11_non_bipartitionable");
    } else if (claim == "propagation") {
        cert = tf::certify_octahedron_propagation();
    } else if (claim == "dual-hamiltonian") {
        if (!file.empty()) {
            cert = tf::certify_forest_iff_dual_hamiltonian(tf::embed(tf::read_graph_file(file)));
        } else {
            cert.claim = "forest_iff_dual_hamiltonian";
            cert.inputs = {{"seed", seed}, {"orders", "4..10"}, {"per_order", per_order}};
            tf::json cases = tf::json::array();
            bool all = true;
            for (int n = 4; n <= 10; ++n)
                for (int i = 0; i < per_order; ++i) {
                    const auto e = tf::gen_triangulation(n, tf::GenMode::flip, 20 * n, tf::mix_seed(seed, static_cast<std::uint64_t>(n * 1000 + i)));
                    const auto c = tf::certify_forest_iff_dual_hamiltonian(e);
                    all = all && c.confirmed;
                    cases.push_back({{"g6", c.inputs["triangulation"]},
                                     {"two_forest_partition", c.verdict["two_forest_partition"]},
                                     {"dual_hamiltonian_cycle", c.verdict["dual_hamiltonian_cycle"]},
                                     {"agree", c.confirmed}});
                }
            cert.verdict["cases"] = std::move(cases);
            cert.confirmed = all;
        }
    } else if (claim == "42") {
        if (file.empty()) throw tf::Error(tf::ErrorCode::InvalidInput, "certify 42 needs --file");
        cert = tf::certify_42_construction(tf::read_graph_file(file));
    } else {
        throw tf::Error(tf::ErrorCode::InvalidInput, "unknown claim '" + claim + "'");
    }
    out.emit(cert.to_json());
    return cert.confirmed ? 0 : 1;
}

int run_batch(const tf::BatchSpec& spec, const Output& out) {
    const auto summary = tf::run_batch(spec);
    out.emit(summary);
    return summary["failed"].get<int>() == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partition planar graphs into two triangle-forests and certify extremal examples"};
    app.require_subcommand(1);

    Output out;
    GraphSource src;
    std::string fix;
    long long budget_ms = 0;

    auto* part = app.add_subcommand("partition", "2-color a planar graph into two triangle-forests");
    part->add_option("--g6", src.g6, "graph6 string");
    part->add_option("--json", src.json_text, "inline JSON edge list {\"n\":..,\"edges\":[[u,v],..]}");
    part->add_option("--file", src.file, "file holding graph6 or a JSON edge list");
    part->add_option("--fix", fix, "precolor a triangle: v1,v2,v3=c1,c2,c3");
    part->add_option("--time-budget", budget_ms, "per Tutte search budget in milliseconds (0 = unlimited)");
    part->add_option("--out", out.path, "write JSON here instead of stdout");

    std::string claim, cert_file;
    std::uint64_t seed = 1;
    int per_order = 10;
    auto* cert = app.add_subcommand("certify", "certify an extremal claim");
    cert->add_option("claim", claim, "octahedron | k7 | projective | propagation | dual-hamiltonian | 42")->required();
    cert->add_option("--file", cert_file, "input graph (42: cubic candidate; dual-hamiltonian: triangulation)");
    cert->add_option("--seed", seed, "generator seed for dual-hamiltonian");
    cert->add_option("--count", per_order, "triangulations per order for dual-hamiltonian");
    cert->add_option("--out", out.path, "write JSON here instead of stdout");

    tf::BatchSpec spec;
    std::string range = "20..40";
    long long batch_budget = 0;
    auto* batch = app.add_subcommand("batch", "partition and verify generated instances");
    batch->add_option("--mode", spec.mode, "stacked | flip | subgraph");
    batch->add_option("--n", range, "order or range LO..HI");
    batch->add_option("--count", spec.count, "number of instances");
    batch->add_option("--seed", spec.seed, "64-bit seed");
    batch->add_flag("--oracle", spec.oracle, "cross-check with brute force when n <= 14");
    batch->add_option("--time-budget", batch_budget, "per Tutte search budget in milliseconds (0 = unlimited)");
    batch->add_option("--out", out.path, "write JSON here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*part) return run_partition(src, fix, budget_ms, out);
        if (*cert) return run_certify(claim, cert_file, seed, per_order, out);
        if (*batch) {
            std::tie(spec.n_lo, spec.n_hi) = parse_range(range);
            if (batch_budget > 0) spec.time_budget = std::chrono::milliseconds(batch_budget);
            return run_batch(spec, out);
        }
    } catch (const tf::Error& e) {
        tf::json err{{"error", std::string(tf::to_string(e.code()))}, {"message", e.what()}};
        std::cout << err.dump() << "\n";
        std::cerr << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return 2;
}
