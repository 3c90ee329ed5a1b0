#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k25/errors.hpp"
#include "k25/vertex_set.hpp"

namespace k25 {

/// Immutable simple undirected graph on at most 64 vertices. Adjacency is
/// stored as one VertexSet row per vertex; rows are symmetric and loop-free.
/// All operations on graphs are pure functions returning new values, so
/// graphs are safe to share between threads without coordination.
class Graph {
public:
    static constexpr int max_vertices = 64;

    /// The 0-vertex graph.
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Builds a graph from an edge list. Duplicate edges are merged.
    /// Throws PreconditionError on loops or out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    /// Builds a graph directly from adjacency rows; validates symmetry,
    /// absence of loops, and that all set bits are below the vertex count.
    static Graph from_rows(std::vector<VertexSet> rows);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }
    VertexSet vertices() const { return VertexSet::first_n(n_); }

    /// Edges as (u, v) with u < v, ordered lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    /// Union of neighbor rows over s. Cheaper than per-vertex loops for
    /// search code; equals neighborhood(g, s, false) | (s & rows).
    VertexSet neighbors_of_set(VertexSet s) const;

    bool operator==(const Graph&) const = default;

private:
    Graph(int n, int m, std::vector<VertexSet> adj) : n_(n), m_(m), adj_(std::move(adj)) {}

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

// ---------------------------------------------------------------------------
// graph6 codec
//
// Standard printable encoding: every byte is 63 + a 6-bit value. The vertex
// count comes first (one byte for n <= 62, "~" + three bytes for larger n, up
// to this library's cap of 64), then the upper adjacency triangle in column
// order x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian six bits per
// byte and zero-padded.
// ---------------------------------------------------------------------------

/// Decodes a single graph6 line. An optional ">>graph6<<" header is
/// tolerated, as is one trailing newline. Throws DecodeError, with the byte
/// offset, on malformed length prefixes, non-printable bytes, nonzero
/// padding bits, trailing data, or n > 64.
Graph parse_graph6(std::string_view text);

/// Canonical header-free graph6 encoding of g.
std::string emit_graph6(const Graph& g);

// ---------------------------------------------------------------------------
// Elementary operations
// ---------------------------------------------------------------------------

/// Open neighborhood of the set s (union of neighbor rows minus s), or the
/// closed one (union including s) when closed is true.
VertexSet neighborhood(const Graph& g, VertexSet s, bool closed);

/// Induced subgraph plus the index mapping back to the original graph.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> origin; ///< origin[new_index] = old index, increasing
};

/// Induced subgraph on V \ s. Surviving vertices are re-indexed in
/// increasing original order. Deleting everything yields the 0-vertex graph.
InducedSubgraph delete_vertices(const Graph& g, VertexSet s);

/// Contraction result; image maps every original vertex to its new index
/// (the two contracted endpoints map to the same one).
struct ContractionResult {
    Graph graph;
    std::vector<int> image; ///< image[old_index] = new index
};

/// Contracts the edge uv, merging into the lower index and re-indexing
/// compactly; loops and parallel edges are simplified away. Throws
/// PreconditionError when uv is not an edge.
ContractionResult contract_edge(const Graph& g, int u, int v);

/// Connected components as vertex sets, ordered by smallest member.
/// The 0-vertex graph has no components.
std::vector<VertexSet> components(const Graph& g);

/// Component of g containing v, restricted to the subgraph induced on
/// `within` (v must belong to `within`).
VertexSet component_of(const Graph& g, int v, VertexSet within);

/// True when the subgraph induced on s is connected (empty and singleton
/// sets count as connected).
bool is_connected_subset(const Graph& g, VertexSet s);

/// Adjacency-preserving bijection from g's vertices to h's, or nullopt.
/// Search-based: both graphs must have at most 16 vertices (CapabilityError
/// otherwise). Deterministic: vertices are matched in index order against
/// candidates in ascending order within degree/neighbor-degree refinement
/// classes, so the returned bijection is the lexicographically least one
/// compatible with that refinement.
std::optional<std::vector<int>> isomorphism(const Graph& g, const Graph& h);

} // namespace k25
