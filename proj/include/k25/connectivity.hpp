#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "k25/graph.hpp"

namespace k25 {

/// Certificate that removing `members` (vertices or edges) disconnects the
/// graph: side_a and side_b are nonempty, disjoint, cover everything else,
/// and have no edge between them once the members are removed.
struct CutWitness {
    enum class Kind { vertex_cut, edge_cut };

    Kind kind = Kind::vertex_cut;
    VertexSet vertex_members;                       ///< used when kind == vertex_cut
    std::vector<std::pair<int, int>> edge_members;  ///< used when kind == edge_cut
    VertexSet side_a;
    VertexSet side_b;
};

/// Violations of the CutWitness contract against g; empty when valid.
std::vector<std::string> validate_cut_witness(const Graph& g, const CutWitness& w);

/// Vertex connectivity: the minimum over nonadjacent pairs of the maximum
/// number of internally disjoint paths (vertex-split max-flow). Complete
/// graphs return n - 1 by convention; disconnected graphs return 0.
/// Requires n >= 1.
int vertex_connectivity(const Graph& g);

/// vertex_connectivity plus a minimum vertex cut extracted from the final
/// max-flow residual (absent for complete graphs; for disconnected graphs
/// the cut is empty and the sides are a component split).
struct ConnectivityResult {
    int connectivity = 0;
    std::optional<CutWitness> cut;
};
ConnectivityResult vertex_connectivity_with_cut(const Graph& g);

/// Early-stopping test for vertex_connectivity(g) >= k (k >= 1); cheaper
/// than the exact value inside enumeration loops.
bool is_k_connected(const Graph& g, int k);

/// Smallest vertex cut of size < k_max with its two sides, or absent when
/// none exists below k_max. Exhaustive over subsets of size
/// < min(k_max, n-1), sizes ascending and lexicographic within a size, so
/// the result is deterministic. Limited to n <= 12.
std::optional<CutWitness> min_vertex_cut_bruteforce(const Graph& g, int k_max);

/// Minimum number of edges whose removal disconnects g (unit-capacity
/// max-flow from a fixed vertex to every other); 0 when disconnected.
/// Requires n >= 2.
int edge_connectivity(const Graph& g);

/// Cyclic 4-edge-connectivity: 3-edge-connected and no 3-edge cut whose
/// removal leaves exactly two components that each contain a cycle. On
/// false, carries the offending cut. Enumerates 3-edge subsets; m <= 60.
struct CyclicConnectivityResult {
    bool value = false;
    std::optional<CutWitness> cut;
};
CyclicConnectivityResult is_cyclically_4_edge_connected(const Graph& g);

} // namespace k25
