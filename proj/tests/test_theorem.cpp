#include <doctest.h>

#include <sstream>

#include "k25/theorem.hpp"
#include "support/oracles.hpp"

using namespace k25;

TEST_CASE("every_edge_in_triangle") {
    CHECK(every_edge_in_triangle(cycle_square(6)).value);
    CHECK(every_edge_in_triangle(Graph(4)).value); // vacuous

    const auto c4 = every_edge_in_triangle(cycle(4));
    CHECK_FALSE(c4.value);
    REQUIRE(c4.witness.has_value());

    const auto pr = every_edge_in_triangle(prism());
    CHECK_FALSE(pr.value);
    REQUIRE(pr.witness.has_value());
    // Rungs are the only triangle-free edges; the first in edge order is (0, 3).
    CHECK(*pr.witness == std::pair<int, int>{0, 3});
}

TEST_CASE("classify on squared cycles") {
    const PropertyReport even = classify(cycle_square(8));
    CHECK(even.planar);
    CHECK(even.four_connected);
    CHECK(even.k25_minor_free);
    CHECK(even.four_regular);
    CHECK(even.every_edge_in_triangle);
    CHECK(even.squared_even_cycle == 8);

    const PropertyReport odd = classify(cycle_square(7));
    CHECK_FALSE(odd.planar);
    REQUIRE(odd.planarity_obstruction.has_value());
    CHECK(verify_minor_model(*odd.planarity_obstruction).empty());
    CHECK(odd.k25_minor_free);
    CHECK(odd.four_connected);
    CHECK_FALSE(odd.squared_even_cycle.has_value());
}

TEST_CASE("classify on K_5 and small graphs") {
    const PropertyReport k5 = classify(complete(5));
    CHECK_FALSE(k5.planar);
    CHECK(k5.four_connected);
    CHECK(k5.k25_minor_free); // 5 vertices cannot host a 7-vertex pattern
    CHECK(k5.four_regular);
    CHECK_FALSE(k5.squared_even_cycle.has_value());

    const PropertyReport k4 = classify(complete(4));
    CHECK(k4.planar);
    CHECK_FALSE(k4.four_connected);
    CHECK(k4.k25_minor_free);
    CHECK_FALSE(k4.four_regular);
    CHECK(k4.every_edge_in_triangle);

    const PropertyReport empty = classify(Graph(0));
    CHECK(empty.planar);
    CHECK_FALSE(empty.four_connected);
    CHECK(empty.k25_minor_free);

    CHECK_THROWS_AS(classify(Graph(19)), CapabilityError);
}

TEST_CASE("classify attaches a verified K_{2,5} witness when one exists") {
    const PropertyReport r = classify(complete_bipartite(2, 5));
    CHECK_FALSE(r.k25_minor_free);
    REQUIRE(r.k25_model.has_value());
    CHECK(verify_minor_model(*r.k25_model).empty());

    const PropertyReport r8 = classify(complete(8));
    CHECK_FALSE(r8.k25_minor_free);
    REQUIRE(r8.k25_model.has_value());
    CHECK(verify_minor_model(*r8.k25_model).empty());
}

TEST_CASE("lemma1_check passes on even squared cycles") {
    const Lemma1Report r6 = lemma1_check(cycle_square(6));
    CHECK(r6.holds());
    CHECK(r6.remainder_sizes == std::vector<int>(6, 1));

    const Lemma1Report r10 = lemma1_check(cycle_square(10));
    CHECK(r10.holds());
    CHECK(r10.remainder_sizes == std::vector<int>(10, 5));
}

TEST_CASE("lemma1_check rejects graphs failing its hypotheses") {
    CHECK_THROWS_AS(lemma1_check(complete(5)), HypothesisError);      // not planar
    CHECK_THROWS_AS(lemma1_check(cube()), HypothesisError);           // not 4-connected
    CHECK_THROWS_AS(lemma1_check(cycle_square(7)), HypothesisError);  // not planar
}

TEST_CASE("closed_neighborhood_cut_witness builds a verified model") {
    // v = 0 is joined to a 3-vertex cut {1, 2, 3}; removing N[0] separates
    // the two triangles {4, 5, 6} and {7, 8, 9}.
    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {0, 3}};
    for (int s : {1, 2, 3})
        for (int c : {4, 5, 6, 7, 8, 9}) edges.emplace_back(s, c);
    for (auto [a, b] : {std::pair{4, 5}, {5, 6}, {4, 6}, {7, 8}, {8, 9}, {7, 9}})
        edges.emplace_back(a, b);
    const Graph g = Graph::from_edges(10, edges);

    const auto violation = closed_neighborhood_cut_witness(g, 0);
    REQUIRE(violation.has_value());
    CHECK(violation->vertex == 0);
    CHECK(violation->cut == VertexSet::of({1, 2, 3}));
    CHECK(violation->model.pattern == complete_bipartite(3, 3));
    CHECK(verify_minor_model(violation->model).empty());

    // No witness when the closed neighborhood leaves a connected remainder.
    CHECK_FALSE(closed_neighborhood_cut_witness(cycle_square(10), 0).has_value());
}

TEST_CASE("lemma4_witness on cubic 3-connected graphs") {
    for (const Graph& h : {complete_bipartite(3, 3), prism(), petersen()}) {
        const Lemma4Result r = lemma4_witness(h);
        CHECK(verify_minor_model(r.model).empty());
        CHECK(r.model.pattern == complete_bipartite(2, 5));
        CHECK(r.model.host == r.line.graph);
        // The chosen edge really is triangle-free.
        const auto [u, v] = r.triangle_free_edge;
        CHECK((h.neighbors(u) & h.neighbors(v)).empty());

        // Model anatomy: five singleton sets forming exactly the open
        // neighborhood of the two-vertex branch set, and the second large
        // set is everything outside its closed neighborhood.
        const VertexSet big = r.model.branch_sets[0];
        VertexSet singles;
        for (int i = 2; i < 7; ++i) {
            CHECK(r.model.branch_sets[static_cast<std::size_t>(i)].count() == 1);
            singles = singles | r.model.branch_sets[static_cast<std::size_t>(i)];
        }
        CHECK(big.count() == 2);
        CHECK(singles == neighborhood(r.line.graph, big, false));
        CHECK(r.model.branch_sets[1] ==
              (r.line.graph.vertices() - neighborhood(r.line.graph, big, true)));
    }

    // Consequently the line graphs are not K_{2,5}-minor-free.
    CHECK_FALSE(classify(line_graph(complete_bipartite(3, 3)).graph).k25_minor_free);
    CHECK_FALSE(classify(line_graph(prism()).graph).k25_minor_free);

    CHECK_THROWS_AS(lemma4_witness(complete(4)), NotApplicableError);
    CHECK_THROWS_AS(lemma4_witness(cycle(5)), HypothesisError); // not cubic

    // Cubic but only 2-connected: two K_4-minus-an-edge blocks joined by two edges.
    const Graph two_blocks = Graph::from_edges(8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3},
                                                   {4, 5}, {4, 6}, {5, 6}, {4, 7}, {5, 7},
                                                   {2, 6}, {3, 7}});
    CHECK(regularity(two_blocks) == 3);
    CHECK_THROWS_AS(lemma4_witness(two_blocks), HypothesisError);
}

TEST_CASE("lemma4 oracle confirmation on the 9-vertex line graph") {
    const auto lk33 = line_graph(complete_bipartite(3, 3));
    CHECK(testing::oracle_has_minor(lk33.graph, complete_bipartite(2, 5)));
}

TEST_CASE("lemma4_witness on random cubic 3-connected graphs") {
    std::mt19937_64 rng(0x5eed0401);
    int accepted = 0;
    while (accepted < 10) {
        const Graph h = testing::random_cubic(accepted % 2 == 0 ? 8 : 10, rng);
        if (!is_k_connected(h, 3)) continue;
        ++accepted;
        const Lemma4Result r = lemma4_witness(h);
        CHECK(verify_minor_model(r.model).empty());
        // The promised consequence: the line graph is not K_{2,5}-minor-free.
        CHECK_FALSE(classify(r.line.graph).k25_minor_free);
    }
}

TEST_CASE("odd_square_k5") {
    const MinorModel m5 = odd_square_k5(5);
    CHECK(verify_minor_model(m5).empty());
    for (int v = 0; v < 5; ++v)
        CHECK(m5.branch_sets[static_cast<std::size_t>(v)] == VertexSet::single(v));

    for (int n : {7, 9, 11}) {
        const MinorModel m = odd_square_k5(n);
        CHECK(m.pattern == complete(5));
        CHECK(verify_minor_model(m).empty());
    }

    CHECK_THROWS_AS(odd_square_k5(6), PreconditionError);
    CHECK_THROWS_AS(odd_square_k5(17), PreconditionError);
}

TEST_CASE("enumerate_graphs counts") {
    int count = 0;
    enumerate_graphs(4, 0, [&](const Graph&) { ++count; });
    CHECK(count == 64);

    count = 0;
    enumerate_graphs(4, 4, [&](const Graph&) { ++count; });
    CHECK(count == 0);

    std::vector<Graph> found;
    enumerate_graphs(5, 4, [&](const Graph& g) { found.push_back(g); });
    REQUIRE(found.size() == 1);
    CHECK(found.front() == complete(5));

    CHECK_THROWS_AS(enumerate_graphs(9, 0, [](const Graph&) {}), CapabilityError);
}

TEST_CASE("verify_main_theorem up to six vertices") {
    const VerificationReport report = verify_main_theorem(6, 2);
    CHECK(report.verified());
    CHECK(report.counterexamples.empty());
    // Exactly the 15 labeled squared 6-cycles pass the hypotheses: 6!/48.
    CHECK(report.graphs_passing_hypotheses == 15);
    CHECK(report.hypothesis_graphs.size() == 15);
    for (const auto& g6 : report.hypothesis_graphs)
        CHECK(isomorphism(parse_graph6(g6), cycle_square(6)).has_value());
}

TEST_CASE("verify over a stream") {
    std::istringstream in(emit_graph6(cycle_square(10)) + "\n\n" + emit_graph6(petersen()) + "\n");
    const VerificationReport report = verify_main_theorem_stream(in);
    CHECK(report.verified());
    CHECK(report.graphs_examined == 2);
    CHECK(report.graphs_passing_hypotheses == 1);
    CHECK(report.n_min == 10);
    CHECK(report.n_max == 10);

    std::istringstream bad("C~\nnot-a-graph\n");
    CHECK_THROWS_WITH_AS(verify_main_theorem_stream(bad),
                         doctest::Contains("line 2"), Error);
}

TEST_CASE("a corrupted classifier produces counterexamples") {
    const ClassifyFn corrupted = [](const Graph& g) {
        PropertyReport r = classify(g);
        r.planar = true;
        r.four_connected = true;
        r.k25_minor_free = true; // claims every graph satisfies the hypotheses
        return r;
    };
    const VerificationReport report = verify_main_theorem(5, 1, corrupted);
    CHECK_FALSE(report.verified());
    CHECK_FALSE(report.counterexamples.empty());
}

TEST_CASE("hypothesis graphs satisfy the four-regular and triangle facts") {
    // Every graph passing the hypotheses must be 4-regular with every edge
    // in a triangle; checked over the full n <= 6 enumeration.
    for (int n = 5; n <= 6; ++n) {
        enumerate_graphs(n, 4, [&](const Graph& g) {
            const PropertyReport r = classify(g);
            if (r.planar && r.four_connected && r.k25_minor_free) {
                CHECK(r.four_regular);
                CHECK(r.every_edge_in_triangle);
                CHECK(r.squared_even_cycle.has_value());
            }
        });
    }
}

TEST_CASE("4-connected 4-regular triangle graphs are squared cycles or have K_{2,5}") {
    // Statement-level spot check of the dichotomy on small named graphs.
    const std::vector<Graph> corpus{cycle_square(6),  cycle_square(8),
                                    cycle_square(10), cycle_square(12),
                                    complete(5),      line_graph(complete_bipartite(3, 3)).graph,
                                    line_graph(prism()).graph};
    for (const Graph& g : corpus) {
        const PropertyReport r = classify(g);
        if (r.four_connected && r.four_regular && r.every_edge_in_triangle) {
            const bool squared = is_squared_cycle(g).has_value();
            CHECK((squared || !r.k25_minor_free));
        }
    }
}
