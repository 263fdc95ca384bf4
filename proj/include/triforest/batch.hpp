#ifndef TRIFOREST_BATCH_HPP
#define TRIFOREST_BATCH_HPP

#include <triforest/io.hpp>
#include <triforest/oracles.hpp>
#include <triforest/partition.hpp>
#include <triforest/rng.hpp>
#include <triforest/triangulation.hpp>

#include <functional>
#include <optional>
#include <string>

namespace triforest {

inline constexpr int kOracleMaxOrder = 14;

struct BatchSpec {
    std::string mode = "flip";  ///< stacked | flip | subgraph
    int n_lo = 20;
    int n_hi = 40;
    int count = 100;
    std::uint64_t seed = 1;
    bool oracle = false;
    std::optional<std::chrono::milliseconds> time_budget;
};

/// Instance `index` of a batch: a seeded triangulation, or for mode
/// `subgraph` a random spanning subgraph of a flip triangulation.
inline Graph batch_instance(const BatchSpec& spec, int index) {
    Rng rng(mix_seed(spec.seed, static_cast<std::uint64_t>(index)));
    const int n = spec.n_lo + rng.below(spec.n_hi - spec.n_lo + 1);
    const bool sub = spec.mode == "subgraph";
    const GenMode gm = sub ? GenMode::flip : parse_gen_mode(spec.mode);
    const Embedding t = gen_triangulation(n, gm, 20 * n, rng.next());
    if (!sub) return t.graph();
    return random_spanning_subgraph(t.graph(), 3, 4, rng);
}

/// Runs partition + verifier on every instance. `tamper`, when set, may
/// modify the coloring before verification (failure-injection hook).
inline json run_batch(const BatchSpec& spec, const std::function<void(int, Coloring&)>& tamper = {}) {
    if (spec.n_lo < 4 || spec.n_hi < spec.n_lo || spec.count < 0)
        throw Error(ErrorCode::InvalidInput, "batch needs 4 <= n_lo <= n_hi and count >= 0");
    if (spec.mode != "stacked" && spec.mode != "flip" && spec.mode != "subgraph")
        throw Error(ErrorCode::InvalidInput, "batch mode must be stacked, flip or subgraph");
    PartitionOptions opts;
    opts.tutte.time_budget = spec.time_budget;

    int verified = 0, oracle_checked = 0, oracle_agreed = 0, oracle_skipped = 0;
    json failures = json::array();
    for (int i = 0; i < spec.count; ++i) {
        const Graph g = batch_instance(spec, i);
        std::string reason;
        try {
            Coloring c = partition_planar(g, std::nullopt, opts);
            if (tamper) tamper(i, c);
            const auto report = verify_bipartition(g, c, BipartitionMode::tf_tf);
            if (report.valid)
                ++verified;
            else
                reason = "verifier rejected the coloring";
        } catch (const Error& e) {
            reason = e.what();
        }
        if (spec.oracle) {
            if (g.order() <= kOracleMaxOrder) {
                ++oracle_checked;
                const auto found = brute_force_bipartition(g, BipartitionMode::tf_tf);
                if (found && verify_bipartition(g, *found, BipartitionMode::tf_tf).valid)
                    ++oracle_agreed;
                else if (reason.empty())
                    reason = "oracle found no partition";
            } else {
                ++oracle_skipped;
            }
        }
        if (!reason.empty()) failures.push_back({{"index", i}, {"n", g.order()}, {"g6", g6_encode(g)}, {"reason", reason}});
    }
    json out{{"mode", spec.mode}, {"n", {spec.n_lo, spec.n_hi}}, {"count", spec.count}, {"seed", spec.seed},
             {"verified", verified}, {"failed", failures.size()}};
    if (spec.oracle) {
        out["oracle"] = {{"checked", oracle_checked}, {"agreed", oracle_agreed}, {"skipped", oracle_skipped}};
        if (oracle_skipped > 0)
            out["oracle"]["note"] = "oracle skipped for " + std::to_string(oracle_skipped) + " instance(s) with n > " +
                                    std::to_string(kOracleMaxOrder);
    }
    out["failures"] = std::move(failures);
    return out;
}

}  // namespace triforest

#endif  // TRIFOREST_BATCH_HPP
