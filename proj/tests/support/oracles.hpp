#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "k25/graph.hpp"

namespace k25::testing {

/// Exhaustive branch-set oracle, independent of the library search:
/// enumerates every partition of every host-vertex subset into exactly
/// pattern.n connected blocks and accepts iff some assignment of blocks to
/// pattern vertices realizes every pattern edge. Intended for hosts with at
/// most ~8 vertices.
bool oracle_has_minor(const Graph& host, const Graph& pattern);

/// Runs the oracle for several same-sized patterns at once, sharing the
/// partition enumeration. Returns one presence flag per pattern; all
/// patterns must have the same vertex count.
std::vector<bool> oracle_has_minors(const Graph& host, const std::vector<Graph>& patterns);

Graph random_graph(int n, double edge_probability, std::mt19937_64& rng);

/// Deterministic corpus: sizes cycle through [1, max_n], densities vary.
std::vector<Graph> random_corpus(int count, int max_n, std::uint64_t seed);

std::vector<int> random_permutation(int n, std::mt19937_64& rng);

/// Graph with vertex i of g renamed to perm[i].
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// Uniform-ish random cubic graph on n vertices (n even, n >= 4) via the
/// configuration model with rejection of loops and parallel edges.
Graph random_cubic(int n, std::mt19937_64& rng);

} // namespace k25::testing
