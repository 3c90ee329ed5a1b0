#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k25/graph.hpp"

namespace k25 {

/// Witness that `pattern` is a minor of `host`: one branch set per pattern
/// vertex. Valid when the branch sets are nonempty, pairwise disjoint, each
/// induces a connected subgraph of the host, and every pattern edge is
/// realized by some host edge between the corresponding branch sets.
struct MinorModel {
    Graph host;
    Graph pattern;
    std::vector<VertexSet> branch_sets; ///< indexed by pattern vertex
};

/// Violations of the MinorModel invariants, empty when the model is valid.
/// Throws PreconditionError when the branch-set count does not match the
/// pattern's vertex count.
std::vector<std::string> verify_minor_model(const MinorModel& m);

/// General branch-set search: a verified model of `pattern` in `host`, or
/// absent. Deterministic. Limits: pattern <= 8 vertices, host <= 18.
std::optional<MinorModel> find_minor(const Graph& host, const Graph& pattern);

/// Specialized K_{s,t} search (s in {2, 3}, t >= s, host <= 32 vertices)
/// exploiting the fact that the t-side branch sets may be assumed to be
/// single vertices. Agrees with find_minor on presence/absence; any model
/// returned has singleton t-side branch sets.
std::optional<MinorModel> find_complete_bipartite_minor(const Graph& host, int s, int t);

/// Planarity by forbidden minors: planar iff neither K_5 nor K_3,3 is a
/// minor. On false carries one obstruction model. Limited to 18 vertices.
struct PlanarityResult {
    bool planar = false;
    std::optional<MinorModel> obstruction;
};
PlanarityResult is_planar(const Graph& g);

} // namespace k25
