#include <doctest.h>

#include <algorithm>

#include "k25/connectivity.hpp"
#include "k25/families.hpp"
#include "support/oracles.hpp"

using namespace k25;

namespace {

// Connectivity according to the brute-force enumerator, for cross-checks.
int bruteforce_connectivity(const Graph& g) {
    const auto cut = min_vertex_cut_bruteforce(g, g.vertex_count());
    if (!cut) return g.vertex_count() - 1;
    return cut->kind == CutWitness::Kind::vertex_cut ? cut->vertex_members.count() : -1;
}

} // namespace

TEST_CASE("vertex_connectivity on the named graphs") {
    CHECK(vertex_connectivity(complete(5)) == 4);
    CHECK(vertex_connectivity(cycle_square(6)) == 4);
    CHECK(vertex_connectivity(petersen()) == 3);
    CHECK(vertex_connectivity(path(3)) == 1);
    CHECK(vertex_connectivity(cycle(5)) == 2);
    CHECK(vertex_connectivity(Graph(1)) == 0);
    CHECK(vertex_connectivity(Graph(3)) == 0);

    // Values confirmed against the exhaustive cut enumerator.
    CHECK(bruteforce_connectivity(cycle_square(6)) == 4);
    CHECK(bruteforce_connectivity(petersen()) == 3);
}

TEST_CASE("min_vertex_cut_bruteforce examples") {
    const auto p3 = min_vertex_cut_bruteforce(path(3), 3);
    REQUIRE(p3.has_value());
    CHECK(p3->vertex_members == VertexSet::single(1));
    CHECK(p3->side_a == VertexSet::single(0));
    CHECK(p3->side_b == VertexSet::single(2));

    CHECK_FALSE(min_vertex_cut_bruteforce(complete(4), 4).has_value());
    CHECK_FALSE(min_vertex_cut_bruteforce(cycle_square(6), 4).has_value());

    const auto c6 = min_vertex_cut_bruteforce(cycle_square(6), 5);
    REQUIRE(c6.has_value());
    // Lexicographically least 4-cut: the neighborhood of vertex 2.
    CHECK(c6->vertex_members == VertexSet::of({0, 1, 3, 4}));
    CHECK(validate_cut_witness(cycle_square(6), *c6).empty());

    CHECK_THROWS_AS(min_vertex_cut_bruteforce(Graph(13), 3), CapabilityError);
}

TEST_CASE("vertex connectivity agrees with the brute-force oracle") {
    for (const Graph& g : testing::random_corpus(400, 10, 0x5eed0201)) {
        if (g.vertex_count() < 1) continue;
        CHECK(vertex_connectivity(g) == bruteforce_connectivity(g));
    }
}

TEST_CASE("k-connectivity test matches the exact value") {
    for (const Graph& g : testing::random_corpus(200, 9, 0x5eed0202)) {
        const int kappa = vertex_connectivity(g);
        for (int k = 1; k <= 5; ++k) CHECK(is_k_connected(g, k) == (kappa >= k));
    }
}

TEST_CASE("vertex_connectivity_with_cut returns a valid minimum cut") {
    for (const Graph& g : testing::random_corpus(200, 10, 0x5eed0203)) {
        const auto result = vertex_connectivity_with_cut(g);
        CHECK(result.connectivity == vertex_connectivity(g));
        if (result.cut) {
            CHECK(validate_cut_witness(g, *result.cut).empty());
            CHECK(result.cut->vertex_members.count() == result.connectivity);
        } else {
            // Only complete graphs have no cut.
            CHECK(g.edge_count() == g.vertex_count() * (g.vertex_count() - 1) / 2);
        }
    }
}

TEST_CASE("edge_connectivity") {
    CHECK(edge_connectivity(cycle(5)) == 2);
    CHECK(edge_connectivity(complete(4)) == 3);

    const Graph bridged = Graph::from_edges(
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    CHECK(edge_connectivity(bridged) == 1);

    CHECK_THROWS_AS(edge_connectivity(Graph(1)), PreconditionError);
    CHECK(edge_connectivity(Graph(2)) == 0);
}

TEST_CASE("connectivity inequalities on a random corpus") {
    for (const Graph& g : testing::random_corpus(250, 10, 0x5eed0204)) {
        const int n = g.vertex_count();
        if (n < 2) continue;
        int min_degree = n;
        for (int v = 0; v < n; ++v) min_degree = std::min(min_degree, g.degree(v));
        const int kappa = vertex_connectivity(g);
        const int lambda = edge_connectivity(g);
        CHECK(kappa <= lambda);      // Whitney
        CHECK(lambda <= min_degree); // an edge cut around a min-degree vertex
        const bool complete = g.edge_count() == n * (n - 1) / 2;
        if (!complete) CHECK(kappa <= min_degree);
    }
}

TEST_CASE("cyclic 4-edge-connectivity") {
    CHECK(is_cyclically_4_edge_connected(complete(4)).value);
    CHECK(is_cyclically_4_edge_connected(complete_bipartite(3, 3)).value);
    CHECK(is_cyclically_4_edge_connected(petersen()).value);

    const auto pr = is_cyclically_4_edge_connected(prism());
    CHECK_FALSE(pr.value);
    REQUIRE(pr.cut.has_value());
    CHECK(pr.cut->kind == CutWitness::Kind::edge_cut);
    // The offending cut is the three rungs between the two triangles.
    std::vector<std::pair<int, int>> rungs{{0, 3}, {1, 4}, {2, 5}};
    CHECK(pr.cut->edge_members == rungs);
    CHECK(validate_cut_witness(prism(), *pr.cut).empty());

    // A 2-edge-connected graph fails with its small edge cut as witness.
    const Graph bridged = Graph::from_edges(
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    const auto br = is_cyclically_4_edge_connected(bridged);
    CHECK_FALSE(br.value);
    REQUIRE(br.cut.has_value());
    CHECK(br.cut->edge_members.size() == 1);

    CHECK_THROWS_AS(is_cyclically_4_edge_connected(complete(13)), CapabilityError);
}

TEST_CASE("even squared cycles are exactly 4-connected") {
    for (int n = 6; n <= 16; n += 2) CHECK(vertex_connectivity(cycle_square(n)) == 4);
}

TEST_CASE("connectivity preconditions") {
    CHECK_THROWS_AS(vertex_connectivity(Graph(0)), PreconditionError);
    CHECK_THROWS_AS(is_cyclically_4_edge_connected(Graph(1)), PreconditionError);
    CHECK_THROWS_AS(is_k_connected(Graph(3), 0), PreconditionError);
}

TEST_CASE("cyclically 4-edge-connected implies 3-edge-connected on the corpus") {
    for (const Graph& g : testing::random_corpus(120, 8, 0x5eed0205)) {
        if (g.vertex_count() < 2 || g.edge_count() > 60) continue;
        if (is_cyclically_4_edge_connected(g).value) CHECK(edge_connectivity(g) >= 3);
    }
}
