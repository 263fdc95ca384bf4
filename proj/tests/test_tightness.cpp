#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace triforest;

TEST(Named, BuildExamples) {
    const Graph oct = build_named("octahedron");
    EXPECT_EQ(oct.order(), 6);
    EXPECT_EQ(oct.size(), 12);
    for (int v = 0; v < 6; ++v) EXPECT_EQ(oct.degree(v), 4);
    const Graph k7 = build_named("k7");
    EXPECT_EQ(k7.order(), 7);
    EXPECT_EQ(k7.size(), 21);
    const Graph proj = build_named("projective11");
    EXPECT_EQ(proj.order(), 11);
    EXPECT_EQ(g6_encode(proj).front(), 'J');
    EXPECT_EQ(build_named("disjoint_octahedra(2)").order(), 12);
    EXPECT_EQ(build_named("cube"), named::cube());
    EXPECT_EQ(build_named("icosahedron").size(), 30);
    EXPECT_THROW(build_named("dodecahedron"), Error);
    EXPECT_THROW(build_named("disjoint_octahedra()"), Error);
}

TEST(Named, Shapes) {
    EXPECT_EQ(named::icosahedron().order(), 12);
    for (int v = 0; v < 12; ++v) EXPECT_EQ(named::icosahedron().degree(v), 5);
    EXPECT_TRUE(is_4_connected_triangulation(embed(named::icosahedron())));
    EXPECT_EQ(named::petersen().size(), 15);
    EXPECT_EQ(named::prism().size(), 9);
    EXPECT_EQ(named::grid(3, 3).size(), 12);
    EXPECT_EQ(named::wheel(5).order(), 6);
}

TEST(OctahedronBound, Certificate) {
    const Certificate c = certify_octahedron_bound();
    EXPECT_TRUE(c.confirmed);
    EXPECT_EQ(c.verdict["octahedron"]["max_induced_triangle_forest"], 3);
    EXPECT_EQ(c.verdict["stated_figure"]["max"], 4);
    EXPECT_EQ(c.verdict["stated_figure"]["of_vertices"], 8);
    EXPECT_EQ(c.verdict["stated_figure_matches"], false);
    const auto& unions = c.verdict["disjoint_octahedra"];
    ASSERT_EQ(unions.size(), 3u);
    for (int k = 1; k <= 3; ++k) {
        EXPECT_EQ(unions[k - 1]["max_induced_triangle_forest"], 3 * k);
        EXPECT_EQ(unions[k - 1]["at_most_half"], true);
    }
    // The claim is about induced size, not partition existence.
    EXPECT_EQ(certify_non_bipartitionable(named::octahedron()).verdict["partition"], "present");
    EXPECT_LT(c.verdict["octahedron"]["max_induced_triangle_forest"].get<int>(), 6 - 2);
}

TEST(NonBipartitionable, Examples) {
    const Certificate k7 = certify_non_bipartitionable(named::complete(7));
    EXPECT_TRUE(k7.confirmed);
    EXPECT_EQ(k7.verdict["partition"], "absent");
    const Certificate proj = certify_non_bipartitionable(build_named("projective11"));
    EXPECT_TRUE(proj.confirmed);
    EXPECT_EQ(proj.inputs["n"], 11);
    const Certificate oct = certify_non_bipartitionable(named::octahedron());
    EXPECT_FALSE(oct.confirmed);
    EXPECT_TRUE(tftest::independent_tf_tf(named::octahedron(), Coloring(oct.verdict["witness"].get<std::vector<std::int8_t>>())));
    EXPECT_THROW(certify_non_bipartitionable(Graph(25)), Error);
}

TEST(NonBipartitionable, ProjectiveByFullEnumeration) {
    const Graph g = build_named("projective11");
    for (unsigned long long mask = 0; mask < (1ULL << 11); ++mask)
        ASSERT_FALSE(tftest::independent_tf_tf(g, tftest::coloring_from_mask(11, mask)));
}

TEST(Certificates, Reproducible) {
    EXPECT_EQ(certify_octahedron_bound().to_json(false).dump(), certify_octahedron_bound().to_json(false).dump());
    EXPECT_EQ(certify_non_bipartitionable(named::complete(7)).to_json(false).dump(),
              certify_non_bipartitionable(named::complete(7)).to_json(false).dump());
    EXPECT_EQ(certify_octahedron_propagation().to_json(false).dump(), certify_octahedron_propagation().to_json(false).dump());
}

TEST(StackTriangles, Counts) {
    const Graph k4 = stack_triangles(embed(named::complete(4)));
    EXPECT_EQ(k4.order(), 16);
    EXPECT_EQ(k4.size(), 42);
    EXPECT_EQ(stack_triangles(embed(named::octahedron())).order(), 30);
    EXPECT_THROW(stack_triangles(embed(named::cycle(5))), Error);
}

TEST(StackTriangles, EveryFaceFormsAnOctahedron) {
    for (int rep = 0; rep < 10; ++rep) {
        const Embedding t = gen_triangulation(4 + rep % 9, GenMode::flip, 100, mix_seed(801, rep));
        const Graph g = stack_triangles(t);
        EXPECT_TRUE(is_planar(g));
        int next = t.order();
        for (const Face& f : t.faces()) {
            std::vector<int> six{f.boundary[0], f.boundary[1], f.boundary[2], next, next + 1, next + 2};
            next += 3;
            EXPECT_TRUE(tftest::isomorphic_small(tftest::induced(g, six), named::octahedron()));
        }
    }
}

TEST(Propagation, Certificate) {
    const Certificate c = certify_octahedron_propagation();
    EXPECT_TRUE(c.confirmed);
    EXPECT_EQ(c.verdict["faces"].size(), 8u);
    for (const auto& f : c.verdict["faces"]) EXPECT_EQ(f["valid_colorings_with_face_in_triangle_forest"], 0);
    EXPECT_GT(c.verdict["valid_forest_triangle_forest_colorings"].get<int>(), 0);
}

TEST(Propagation, IndependentSweep) {
    // Class 0 must be acyclic, class 1 a triangle-forest; class 1 may not contain a whole face.
    const Graph oct = named::octahedron();
    const Embedding e = embed(oct);
    int control = 0;
    for (unsigned mask = 0; mask < 64; ++mask) {
        const Coloring c = tftest::coloring_from_mask(6, mask);
        const bool ok = tftest::acyclic(tftest::induced(oct, tftest::color_class(c, 0))) &&
                        !tftest::has_long_cycle(tftest::induced(oct, tftest::color_class(c, 1)));
        if (!ok) continue;
        ++control;
        for (const Face& f : e.faces())
            EXPECT_FALSE(c[f.boundary[0]] == 1 && c[f.boundary[1]] == 1 && c[f.boundary[2]] == 1);
    }
    EXPECT_GT(control, 0);
}

TEST(ForestIffDualHamiltonian, Examples) {
    const Certificate k4 = certify_forest_iff_dual_hamiltonian(embed(named::complete(4)));
    EXPECT_TRUE(k4.confirmed);
    EXPECT_EQ(k4.verdict["two_forest_partition"], "present");
    EXPECT_EQ(k4.verdict["dual_hamiltonian_cycle"], "present");
    const Certificate oct = certify_forest_iff_dual_hamiltonian(embed(named::octahedron()));
    EXPECT_TRUE(oct.confirmed);
    EXPECT_EQ(oct.verdict["two_forest_partition"], "present");
    EXPECT_THROW(certify_forest_iff_dual_hamiltonian(embed(named::cycle(5))), Error);
}

TEST(ForestIffDualHamiltonian, Generated) {
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 4 + rep % 7;
        const Certificate c = certify_forest_iff_dual_hamiltonian(gen_triangulation(n, GenMode::flip, 20 * n, mix_seed(901, rep)));
        EXPECT_TRUE(c.confirmed) << c.inputs.dump();
    }
}

TEST(Construction42, RejectsWrongCandidates) {
    auto failed = [](const Graph& g) {
        try {
            certify_42_construction(g);
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::PropertyFailed);
            return std::string(e.what());
        }
        return std::string("passed");
    };
    EXPECT_NE(failed(named::petersen()).find("planar"), std::string::npos);
    EXPECT_NE(failed(named::prism()).find("cyclically 4-edge-connected"), std::string::npos);
    EXPECT_NE(failed(named::octahedron()).find("cubic"), std::string::npos);
    EXPECT_NE(failed(named::cube()).find("non-Hamiltonian"), std::string::npos);
}

TEST(Construction42, DataCandidate) {
    const Graph g = read_graph_file(tftest::data_path("cubic42_nonhamiltonian.g6"));
    ASSERT_EQ(g.order(), 42);
    const Certificate c = certify_42_construction(g);
    EXPECT_TRUE(c.confirmed);
    EXPECT_EQ(c.verdict["dual_order"], 23);
    EXPECT_EQ(c.verdict["dual_two_forest_partition"], "absent");
    EXPECT_EQ(c.verdict["stacked_graph"]["n"], 23 + 3 * 42);
}

TEST(Batch, SummaryAndOracleNote) {
    BatchSpec spec;
    spec.mode = "stacked";
    spec.n_lo = spec.n_hi = 30;
    spec.count = 5;
    spec.oracle = true;
    const json out = run_batch(spec);
    EXPECT_EQ(out["verified"], 5);
    EXPECT_EQ(out["failed"], 0);
    EXPECT_EQ(out["oracle"]["skipped"], 5);
    EXPECT_TRUE(out["oracle"].contains("note"));

    spec.n_lo = 6;
    spec.n_hi = 12;
    spec.mode = "subgraph";
    const json small = run_batch(spec);
    EXPECT_EQ(small["oracle"]["checked"], 5);
    EXPECT_EQ(small["oracle"]["agreed"], 5);
}

TEST(Batch, FailureInjectionDumpsInstance) {
    BatchSpec spec;
    spec.n_lo = 10;
    spec.n_hi = 20;
    spec.count = 6;
    spec.seed = 3;
    const json out = run_batch(spec, [](int index, Coloring& c) {
        if (index == 2)
            for (int v = 0; v < c.size(); ++v) c.set(v, 0);
    });
    EXPECT_EQ(out["verified"], 5);
    EXPECT_EQ(out["failed"], 1);
    ASSERT_EQ(out["failures"].size(), 1u);
    const auto& f = out["failures"][0];
    EXPECT_EQ(f["index"], 2);
    EXPECT_EQ(g6_decode(f["g6"].get<std::string>()), batch_instance(spec, 2));
}

TEST(Batch, DeterministicAndValidated) {
    BatchSpec spec;
    spec.count = 10;
    EXPECT_EQ(run_batch(spec).dump(), run_batch(spec).dump());
    spec.mode = "nope";
    EXPECT_THROW(run_batch(spec), Error);
    spec.mode = "flip";
    spec.n_lo = 3;
    EXPECT_THROW(run_batch(spec), Error);
}

TEST(Io, JsonGraphs) {
    const Graph k4 = named::complete(4);
    EXPECT_EQ(graph_from_json(graph_to_json(k4)), k4);
    EXPECT_EQ(parse_graph(R"({"n":3,"edges":[[0,1],[1,2]]})"), named::path(3));
    EXPECT_EQ(parse_graph("  C~\n"), k4);
    EXPECT_THROW(parse_graph("{\"n\":3"), Error);
    EXPECT_THROW(parse_graph(R"({"n":3,"edges":[[0,1,2]]})"), Error);
    EXPECT_THROW(parse_graph(R"({"n":2,"edges":[[0,5]]})"), Error);
    EXPECT_THROW(read_graph_file("/nonexistent/file.g6"), Error);
}
