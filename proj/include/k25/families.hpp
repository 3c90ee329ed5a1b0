#pragma once

#include <optional>
#include <vector>

#include "k25/graph.hpp"

namespace k25 {

/// Planar embedding certificate: a list of facial cycles of its owner graph.
/// Valid when every edge of the owner appears in exactly two faces and
/// Euler's formula n - m + |faces| = 2 holds; see validate_face_list.
struct FaceList {
    Graph owner;
    std::vector<std::vector<int>> faces;
};

/// Violations of the FaceList invariants, as human-readable strings; empty
/// when the certificate is valid.
std::vector<std::string> validate_face_list(const FaceList& fl);

/// Graph square: same vertices, edges between distinct vertices at distance
/// at most two.
Graph square(const Graph& g);

/// Named small-graph constructors with fixed canonical labelings:
///   cycle(n):   vertices 0..n-1 in cyclic order (n >= 3)
///   path(n):    vertices 0..n-1 along the path (n >= 1)
///   complete(n)
///   complete_bipartite(s, t): parts {0..s-1} and {s..s+t-1}
///   prism:      triangles 0-1-2 and 3-4-5, rungs i ~ i+3
///   petersen:   outer cycle 0..4, spokes i ~ i+5, inner pentagram 5..9
///   cube:       vertices 0..7, adjacent when labels differ in one bit
Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph complete_bipartite(int s, int t);
Graph prism();
Graph petersen();
Graph cube();

/// Square of the n-cycle, built directly: i adjacent to i±1 and i±2 mod n.
/// Requires n >= 5 so the result is 4-regular; smaller n degenerate to
/// complete graphs and are rejected.
Graph cycle_square(int n);

/// Line graph plus the defining correspondence: vertex i of the line graph
/// is edges[i] of g (edges in lexicographic order).
struct LineGraph {
    Graph graph;
    std::vector<std::pair<int, int>> edge_of_vertex;
};

LineGraph line_graph(const Graph& g);

/// k when every vertex has degree exactly k; absent otherwise (including
/// the 0-vertex graph).
std::optional<int> regularity(const Graph& g);

/// g.n when some Hamiltonian cycle H of g satisfies square(H) == g, else
/// absent. Backtracking search, deterministic, limited to 18 vertices.
std::optional<int> is_squared_cycle(const Graph& g);

/// The explicit planar embedding of cycle_square(n) for even n >= 6: two
/// disjoint faces of degree n/2 (even-indexed and odd-indexed vertices in
/// cyclic order) joined by n triangles {i, i+1, i+2}.
FaceList squared_cycle_embedding(int n);

} // namespace k25
