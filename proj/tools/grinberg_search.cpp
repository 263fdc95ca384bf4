// Searches for a cyclically 4-edge-connected planar cubic graph that is
// non-Hamiltonian by Grinberg's criterion, as the dual of a triangulation.
//
// A triangulation without separating triangles has a cyclically
// 4-edge-connected 3-connected cubic dual. If exactly one vertex has degree
// not congruent to 2 mod 3, the dual has exactly one face whose size k has
// k - 2 not divisible by 3, so Grinberg's identity cannot hold for any
// Hamiltonian cycle. The search anneals over random edge flips.
//
// Usage: grinberg_search [--n 23] [--seed 1] [--restarts 200] [--steps 200000]
// Prints the g6 of the cubic dual on stdout; exit 1 if nothing was found.

#include <triforest/triforest.hpp>

#include <CLI11.hpp>

#include <bit>
#include <cmath>
#include <iostream>

namespace tf = triforest;

namespace {

int triangle_count(const tf::RotationSystem& rs) {
    const int n = rs.order();
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : rs.at(v)) adj[v] |= std::uint64_t{1} << w;
    int count = 0;
    for (int u = 0; u < n; ++u)
        for (int v : rs.at(u)) {
            if (v <= u) continue;
            const std::uint64_t above = ~((std::uint64_t{2} << v) - 1);
            count += std::popcount(adj[u] & adj[v] & above);
        }
    return count;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grinberg-guided search for a non-Hamiltonian cyclically 4-edge-connected cubic planar graph"};
    int n = 23, restarts = 200;
    long long steps = 200000;
    std::uint64_t seed = 1;
    app.add_option("--n", n, "order of the triangulation (dual has 2n - 4 vertices)");
    app.add_option("--seed", seed, "seed");
    app.add_option("--restarts", restarts, "independent annealing runs");
    app.add_option("--steps", steps, "flip proposals per run");
    CLI11_PARSE(app, argc, argv);
    if (n < 6 || n > 33) {
        std::cerr << "n must be in 6..33\n";
        return 2;
    }

    auto score = [](const tf::RotationSystem& rs) {
        const int n = rs.order();
        int off = 0;
        for (int v = 0; v < n; ++v)
            if (rs.at(v).size() % 3 != 2) ++off;
        const int separating = triangle_count(rs) - (2 * n - 4);
        return 4 * separating + std::abs(off - 1);
    };

    for (int run = 0; run < restarts; ++run) {
        const std::uint64_t run_seed = tf::mix_seed(seed, static_cast<std::uint64_t>(run));
        tf::RotationSystem rs = tf::gen_triangulation(n, tf::GenMode::flip, 20 * n, run_seed).rotation();
        tf::Rng rng(tf::mix_seed(run_seed, 1));
        int current = score(rs);
        for (long long step = 0; step < steps && current > 0; ++step) {
            const double temperature = 1.5 * (1.0 - static_cast<double>(step) / static_cast<double>(steps)) + 0.05;
            const int u = rng.below(n);
            const auto& ru = rs.at(u);
            const int v = ru[static_cast<std::size_t>(rng.below(static_cast<int>(ru.size())))];
            const int w = rs.successor(v, u), x = rs.successor(u, v);
            if (!tf::detail::try_flip(rs, u, v)) continue;
            const int next = score(rs);
            const int delta = next - current;
            if (delta <= 0 || rng.below(1'000'000) < static_cast<int>(1e6 * std::exp(-delta / temperature))) {
                current = next;
                continue;
            }
            // Undo: flipping w-x restores u-v.
            if (!tf::detail::try_flip(rs, w, x)) {
                std::cerr << "undo failed\n";
                return 4;
            }
        }
        if (current != 0) continue;

        const tf::Embedding e(rs);
        const tf::DualGraph d = tf::dual(e);
        const tf::Graph& cubic = d.graph();
        const auto report = tf::cubic_cyclic_4ec_check(cubic);
        if (!report.cubic || !report.three_connected || !report.cyclically_4ec) continue;
        if (tf::hamiltonian_cycle_search(cubic)) continue;
        std::cerr << "run " << run << ": triangulation " << tf::g6_encode(e.graph()) << "\n";
        std::cout << tf::g6_encode(cubic) << "\n";
        return 0;
    }
    std::cerr << "no candidate found\n";
    return 1;
}
