#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace triforest;
using tftest::independent_tf_tf;

namespace {

Coloring precolor(const Embedding& e, const std::array<int, 3>& colors) {
    Coloring pre(e.order());
    const auto& ob = e.outer().boundary;
    for (int i = 0; i < 3; ++i) pre.set(ob[static_cast<std::size_t>(i)], colors[static_cast<std::size_t>(i)]);
    return pre;
}

/// Extension oracle: does any completion of `pre` satisfy both classes
/// triangle-forest and the outer-edge condition?
bool extension_exists(const Embedding& e, const Coloring& pre) {
    const auto& ob = e.outer().boundary;
    const Triangle delta = make_triangle(ob[0], ob[1], ob[2]);
    std::vector<int> free;
    for (int v = 0; v < e.order(); ++v)
        if (!pre.is_set(v)) free.push_back(v);
    for (unsigned long long mask = 0; mask < (1ULL << free.size()); ++mask) {
        Coloring c = pre;
        for (std::size_t i = 0; i < free.size(); ++i) c.set(free[i], static_cast<int>((mask >> i) & 1ULL));
        if (independent_tf_tf(e.graph(), c) && delta_edges_clean(e.graph(), c, delta)) return true;
    }
    return false;
}

/// Independent form of the outer-edge condition.
bool no_delta_edge_in_mono_triangle(const Graph& g, const Coloring& c, const std::array<int, 3>& d) {
    if (c[d[0]] == c[d[1]] && c[d[1]] == c[d[2]]) return true;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const int x = d[static_cast<std::size_t>(i)], y = d[static_cast<std::size_t>(j)];
            if (c[x] != c[y]) continue;
            for (int w = 0; w < g.order(); ++w)
                if (w != x && w != y && g.has_edge(w, x) && g.has_edge(w, y) && c[w] == c[x]) return false;
        }
    return true;
}

void check_extension(const Embedding& e, const std::array<int, 3>& colors) {
    const Coloring pre = precolor(e, colors);
    const ExtensionResult r = extend_4connected_detailed(e, pre);
    const auto& ob = e.outer().boundary;
    for (int i = 0; i < 3; ++i) EXPECT_EQ(r.coloring[ob[static_cast<std::size_t>(i)]], colors[static_cast<std::size_t>(i)]);
    EXPECT_TRUE(independent_tf_tf(e.graph(), r.coloring)) << g6_encode(e.graph());
    EXPECT_TRUE(no_delta_edge_in_mono_triangle(e.graph(), r.coloring, {ob[0], ob[1], ob[2]}));
    EXPECT_EQ(r.monochromatic, colors[0] == colors[1] && colors[1] == colors[2]);
    EXPECT_TRUE(is_tutte_subgraph(dual(e).graph(), r.dual_cycle.sequence, TutteKind::cycle));
}

}  // namespace

TEST(CycleSides, CubeHamiltonianCycle) {
    const Embedding cube = embed(named::cube());
    const auto ham = hamiltonian_cycle_search(cube.graph());
    ASSERT_TRUE(ham);
    const auto cert = is_tutte_subgraph(cube.graph(), *ham, TutteKind::cycle);
    ASSERT_TRUE(cert);
    const Coloring c = coloring_from_tutte_cycle(cube, *cert.certificate);
    ASSERT_EQ(c.size(), 6);
    EXPECT_EQ(c.color_class(0).size(), 3u);
    EXPECT_EQ(c.color_class(1).size(), 3u);
    const DualGraph d = dual(cube);
    EXPECT_TRUE(independent_tf_tf(d.graph(), c));
}

TEST(CycleSides, K4FacialTriangle) {
    const Embedding k4 = embed(named::complete(4));
    const auto& ob = k4.outer().boundary;
    const auto cert = is_tutte_subgraph(k4.graph(), ob, TutteKind::cycle);
    ASSERT_TRUE(cert);
    const Coloring c = coloring_from_tutte_cycle(k4, *cert.certificate);
    std::vector<std::size_t> sizes{c.color_class(0).size(), c.color_class(1).size()};
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 3}));
    EXPECT_TRUE(independent_tf_tf(dual(k4).graph(), c));
}

TEST(CycleSides, Preconditions) {
    const Embedding oct = embed(named::octahedron());
    TutteCertificate t{TutteKind::cycle, {0, 2, 4}, {}};
    EXPECT_THROW(coloring_from_tutte_cycle(oct, t), Error);  // not cubic
    const Embedding cube = embed(named::cube());
    TutteCertificate p{TutteKind::path, {0, 1}, {}};
    EXPECT_THROW(coloring_from_tutte_cycle(cube, p), Error);
}

TEST(CycleSides, CyclicallyFourEdgeConnectedInstances) {
    int checked = 0;
    for (int rep = 0; rep < 8000 && checked < 60; ++rep) {
        const int n = 7 + rep % 10;
        const Embedding t = gen_triangulation(n, GenMode::flip, 20 * n, mix_seed(211, rep));
        if (!is_4_connected_triangulation(t)) continue;
        const DualGraph d = dual(t);
        ASSERT_TRUE(cubic_cyclic_4ec_check(d.graph()).cyclically_4ec);
        const auto oe = d.embedding.outer_edges();
        const auto cyc = find_tutte_cycle_through_edges(d.embedding, oe[0], oe[1], oe[2]);
        for (const auto& a : cyc.attachments) EXPECT_EQ(a.component.size(), 1u);
        const Coloring sides = coloring_from_tutte_cycle(d.embedding, cyc);
        Coloring c(t.order());  // a primal vertex takes the side of its dual face
        for (int v = 0; v < t.order(); ++v) c.set(v, sides[d.vertex_to_dualface[static_cast<std::size_t>(v)]]);
        EXPECT_TRUE(independent_tf_tf(t.graph(), c)) << g6_encode(t.graph());
        ++checked;
    }
    EXPECT_GE(checked, 60);
}

TEST(Extension4Connected, OctahedronMonochromatic) {
    const Embedding oct = embed(named::octahedron());
    EXPECT_TRUE(extension_exists(oct, precolor(oct, {0, 0, 0})));
    check_extension(oct, {0, 0, 0});
}

TEST(Extension4Connected, OctahedronAllPrecolorings) {
    const Embedding oct = embed(named::octahedron());
    for (int mask = 0; mask < 8; ++mask) {
        const std::array<int, 3> cols{mask & 1, mask >> 1 & 1, mask >> 2 & 1};
        EXPECT_TRUE(extension_exists(oct, precolor(oct, cols)));
        check_extension(oct, cols);
    }
}

TEST(Extension4Connected, Icosahedron) {
    const Embedding ico = embed(named::icosahedron());
    check_extension(ico, {0, 0, 1});
    for (int mask = 0; mask < 8; ++mask) check_extension(ico, {mask & 1, mask >> 1 & 1, mask >> 2 & 1});
}

TEST(Extension4Connected, GeneratedFourConnected) {
    int checked = 0;
    for (int rep = 0; rep < 6000 && checked < 40; ++rep) {
        const int n = 8 + rep % 9;
        const Embedding t = gen_triangulation(n, GenMode::flip, 20 * n, mix_seed(307, rep));
        if (!is_4_connected_triangulation(t)) continue;
        for (int mask = 0; mask < 8; ++mask) check_extension(t, {mask & 1, mask >> 1 & 1, mask >> 2 & 1});
        ++checked;
    }
    EXPECT_EQ(checked, 40);
}

TEST(Extension4Connected, Preconditions) {
    const Embedding k4 = embed(named::complete(4));
    try {
        extend_4connected(k4, precolor(k4, {0, 0, 0}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotFourConnected);
    }
    const Embedding oct = embed(named::octahedron());
    Coloring partial(6);
    partial.set(oct.outer().boundary[0], 0);
    try {
        extend_4connected(oct, partial);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidPrecoloring);
    }
}

TEST(K4Table, AllPrecoloringsValid) {
    const Graph k4 = named::complete(4);
    for (int mask = 0; mask < 8; ++mask) {
        const std::array<int, 3> cols{mask & 1, mask >> 1 & 1, mask >> 2 & 1};
        const int fourth = k4_fourth_color(cols);
        Coloring c{cols[0], cols[1], cols[2], fourth};
        EXPECT_TRUE(independent_tf_tf(k4, c));
        EXPECT_TRUE(no_delta_edge_in_mono_triangle(k4, c, {0, 1, 2}));
        // Oracle: which of the two extensions work.
        int good = 0;
        for (int x = 0; x < 2; ++x) {
            Coloring d{cols[0], cols[1], cols[2], x};
            if (independent_tf_tf(k4, d) && no_delta_edge_in_mono_triangle(k4, d, {0, 1, 2})) ++good;
        }
        EXPECT_GE(good, 1);
    }
}

TEST(Partition, Examples) {
    FixedTriangle all0{{0, 1, 2}, {0, 0, 0}};
    EXPECT_EQ(partition_planar(named::complete(3), all0), (Coloring{0, 0, 0}));

    const Coloring k4 = partition_planar(named::complete(4));
    std::vector<std::size_t> sizes{k4.color_class(0).size(), k4.color_class(1).size()};
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 3}));
    EXPECT_TRUE(independent_tf_tf(named::complete(4), k4));

    const Embedding t = gen_triangulation(50, GenMode::flip, 1000, 7);
    EXPECT_TRUE(independent_tf_tf(t.graph(), partition_planar(t.graph())));
}

TEST(Partition, TrivialAndDisconnectedInputs) {
    EXPECT_EQ(partition_planar(Graph(0)).size(), 0);
    EXPECT_EQ(partition_planar(Graph(1)), (Coloring{0}));
    const Coloring two = partition_planar(Graph(2, {{0, 1}}));
    EXPECT_TRUE(independent_tf_tf(Graph(2, {{0, 1}}), two));
    const Graph scattered = disjoint_union(named::octahedron(), disjoint_union(named::complete(4), Graph(3)));
    EXPECT_TRUE(independent_tf_tf(scattered, partition_planar(scattered)));
}

TEST(Partition, Errors) {
    try {
        partition_planar(named::complete(5));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPlanar);
    }
    for (const FixedTriangle& bad : {FixedTriangle{{0, 1, 2}, {0, 2, 0}}, FixedTriangle{{0, 1, 9}, {0, 0, 0}}}) {
        try {
            partition_planar(named::complete(4), bad);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidPrecoloring);
        }
    }
    try {
        partition_planar(named::cycle(4), FixedTriangle{{0, 1, 2}, {0, 0, 0}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidPrecoloring);
    }
}

TEST(Partition, HonoursEveryPrecoloringOfEveryTriangle) {
    for (int rep = 0; rep < 12; ++rep) {
        const Embedding t = gen_triangulation(8 + rep, rep % 2 ? GenMode::stacked : GenMode::flip, 200, mix_seed(401, rep));
        const Graph& g = t.graph();
        int triangles = 0;
        for (const Edge& e : g.edges())
            for (int w : g.neighbors(e.v)) {
                if (w <= e.v || !g.has_edge(e.u, w)) continue;
                ++triangles;
                for (int mask = 0; mask < 8; ++mask) {
                    FixedTriangle fx{{e.u, e.v, w}, {mask & 1, mask >> 1 & 1, mask >> 2 & 1}};
                    const Coloring c = partition_planar(g, fx);
                    EXPECT_TRUE(independent_tf_tf(g, c));
                    for (int i = 0; i < 3; ++i) EXPECT_EQ(c[fx.vertices[i]], fx.colors[i]);
                }
            }
        EXPECT_GT(triangles, 0);
    }
}

TEST(Partition, EndToEndGenerated) {
    for (int rep = 0; rep < 150; ++rep) {
        const int n = 4 + rep % 37;
        Graph g;
        switch (rep % 3) {
            case 0: g = gen_triangulation(n, GenMode::stacked, 0, mix_seed(501, rep)).graph(); break;
            case 1: g = gen_triangulation(n, GenMode::flip, 20 * n, mix_seed(501, rep)).graph(); break;
            default: g = tftest::random_planar(n, mix_seed(501, rep), true); break;
        }
        const PartitionResult r = partition_planar_detailed(g);
        EXPECT_TRUE(verify_bipartition(g, r.coloring, BipartitionMode::tf_tf).valid) << g6_encode(g);
        if (n <= 14) {
            EXPECT_TRUE(independent_tf_tf(g, r.coloring));
        }
        EXPECT_GE(r.pieces, 1);
    }
}

TEST(Partition, StackedTrianglesGraphs) {
    for (int rep = 0; rep < 5; ++rep) {
        const Embedding t = gen_triangulation(5 + rep, GenMode::flip, 100, mix_seed(601, rep));
        const Graph g = stack_triangles(t);
        EXPECT_TRUE(verify_bipartition(g, partition_planar(g), BipartitionMode::tf_tf).valid);
    }
}

TEST(Partition, DecompositionTreeShape) {
    // Double-stacked K4: two separating triangles, so two splits and three K4 leaves.
    const Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {5, 0}, {5, 1}, {5, 4}});
    const PartitionResult r = partition_planar_detailed(g);
    EXPECT_EQ(r.tree.kind, DecompositionNode::Kind::split);
    EXPECT_EQ(r.pieces, 5);
    std::function<int(const DecompositionNode&)> nodes = [&](const DecompositionNode& n) {
        int s = 1;
        for (const auto& c : n.children) s += nodes(c);
        return s;
    };
    EXPECT_EQ(nodes(r.tree), r.pieces);
    std::function<int(const DecompositionNode&)> leaves = [&](const DecompositionNode& n) {
        if (n.children.empty()) {
            EXPECT_EQ(n.kind, DecompositionNode::Kind::k4);
            return 1;
        }
        int s = 0;
        for (const auto& c : n.children) s += leaves(c);
        return s;
    };
    EXPECT_EQ(leaves(r.tree), 3);
}

TEST(Partition, Deterministic) {
    const Graph g = gen_triangulation(35, GenMode::flip, 700, 17).graph();
    EXPECT_EQ(partition_planar(g), partition_planar(g));
}

TEST(Bfs, Examples) {
    const Coloring k3 = bfs_outerplanar_bipartition(named::complete(3));
    EXPECT_EQ(k3, (Coloring{0, 1, 1}));
    const Graph oct = named::octahedron();
    const Coloring o = bfs_outerplanar_bipartition(oct);
    EXPECT_EQ(o.color_class(0), (std::vector<int>{0, 1}));
    const Graph layer1 = tftest::induced(oct, o.color_class(1));
    EXPECT_EQ(layer1.size(), 4);  // a 4-cycle
    EXPECT_TRUE(is_outerplanar(layer1));
    const Graph grid = named::grid(3, 3);
    const Coloring gc = bfs_outerplanar_bipartition(grid);
    for (int c = 0; c < 2; ++c) EXPECT_TRUE(is_outerplanar(tftest::induced(grid, gc.color_class(c))));
}

TEST(Bfs, PlanarInstances) {
    for (int rep = 0; rep < 60; ++rep) {
        const Graph g = tftest::random_planar(4 + rep % 40, mix_seed(701, rep), rep % 2 == 0);
        const Coloring c = bfs_outerplanar_bipartition(g);
        for (int col = 0; col < 2; ++col) EXPECT_TRUE(is_outerplanar(tftest::induced(g, c.color_class(col))));
    }
}
