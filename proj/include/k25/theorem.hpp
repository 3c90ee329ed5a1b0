#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k25/connectivity.hpp"
#include "k25/families.hpp"
#include "k25/graph.hpp"
#include "k25/minors.hpp"

namespace k25 {

/// Per-graph classification against the characterization's predicates,
/// with attached witnesses where a predicate fails constructively.
struct PropertyReport {
    bool planar = false;
    bool four_connected = false;
    bool k25_minor_free = false;
    bool four_regular = false;
    bool every_edge_in_triangle = false;
    /// n when the graph is the square of an even cycle of length n >= 6.
    std::optional<int> squared_even_cycle;

    std::optional<MinorModel> planarity_obstruction; ///< K_5 or K_3,3 model when nonplanar
    std::optional<MinorModel> k25_model;             ///< present iff k25_minor_free is false
    std::optional<CutWitness> connectivity_cut;      ///< a small cut when not 4-connected
    std::optional<std::pair<int, int>> triangle_free_edge;
};

struct TriangleResult {
    bool value = false;
    std::optional<std::pair<int, int>> witness; ///< an edge in no triangle, when value is false
};

/// True iff the endpoints of every edge have a common neighbor.
TriangleResult every_edge_in_triangle(const Graph& g);

/// Full classification; limited to 18 vertices by the minor searches.
PropertyReport classify(const Graph& g);

// ---------------------------------------------------------------------------
// Closed-neighborhood cut checker
// ---------------------------------------------------------------------------

/// A vertex whose closed neighborhood is a cut set, together with the
/// complete-bipartite model that contradicts planarity: branch sets {v} and
/// two components of g minus (v and the cut), joined through a minimal cut
/// S inside N(v).
struct ClosedNeighborhoodViolation {
    int vertex = -1;
    VertexSet cut; ///< minimal S subseteq N(vertex) separating g minus vertex
    MinorModel model;
};

struct Lemma1Report {
    /// Vertices left after deleting N[v], per vertex v.
    std::vector<int> remainder_sizes;
    std::vector<ClosedNeighborhoodViolation> violations;
    bool holds() const { return violations.empty(); }
};

/// Checks that no closed neighborhood N[v] is a cut set. Requires g to be
/// 4-connected and planar (HypothesisError otherwise).
Lemma1Report lemma1_check(const Graph& g);

/// Witness construction behind lemma1_check, usable on any graph where
/// N[v] actually is a cut set; absent when it is not.
std::optional<ClosedNeighborhoodViolation> closed_neighborhood_cut_witness(const Graph& g, int v);

// ---------------------------------------------------------------------------
// Line-graph K_{2,5} witness
// ---------------------------------------------------------------------------

/// Constructive K_{2,5} model in the line graph of a cubic, 3-connected
/// graph h: pick an edge uv in no triangle, take the line-graph vertices
/// around it as singletons, {uv, vw} as one large branch set and everything
/// outside the closed neighborhood of {uv, vw} as the other.
struct Lemma4Result {
    LineGraph line;                         ///< line graph of the input
    std::pair<int, int> triangle_free_edge; ///< the chosen uv in the input graph
    MinorModel model;                       ///< verified K_{2,5} model in line.graph
};

/// Throws NotApplicableError for K_4, HypothesisError when h is not cubic
/// 3-connected, and ClaimViolationError (carrying the graph) if no
/// triangle-free edge exists.
Lemma4Result lemma4_witness(const Graph& h);

/// Verified K_5 model in cycle_square(n) for odd n in [5, 15].
MinorModel odd_square_k5(int n);

// ---------------------------------------------------------------------------
// Exhaustive verification
// ---------------------------------------------------------------------------

/// All labeled graphs on n vertices with minimum degree >= min_degree, in
/// ascending edge-mask order (graph6 column order of edge slots). Limited
/// to n <= 8; larger n should come in over a graph6 stream.
void enumerate_graphs(int n, int min_degree, const std::function<void(const Graph&)>& fn);

struct Counterexample {
    std::string graph6;
    PropertyReport report;
};

/// Outcome of checking the equivalence "planar and 4-connected and
/// K_{2,5}-minor-free iff square of an even cycle of length >= 6" over a
/// graph collection. Verified iff counterexamples is empty.
struct VerificationReport {
    int n_min = 0;
    int n_max = 0;
    std::uint64_t graphs_examined = 0;
    std::uint64_t graphs_passing_hypotheses = 0;
    /// graph6 of every graph satisfying all three hypotheses.
    std::vector<std::string> hypothesis_graphs;
    std::vector<Counterexample> counterexamples;
    double elapsed_seconds = 0.0;
    bool verified() const { return counterexamples.empty(); }
};

using ClassifyFn = std::function<PropertyReport(const Graph&)>;

/// Exhaustive check over all graphs with up to n_max vertices (n_max <= 8).
/// Enumeration skips graphs with minimum degree < 4: such a graph is not
/// 4-connected and is not the square of a cycle of length >= 5, so it can
/// never be a counterexample either way. Work is split into edge-mask
/// prefix chunks across `jobs` threads with a deterministic merge. The
/// optional hook replaces the classifier (used to fault-inject in tests).
VerificationReport verify_main_theorem(int n_max, int jobs = 1, const ClassifyFn& hook = {});

/// Same check over a stream of graph6 lines (blank lines skipped).
/// Ingestion or classification failures are reported with line numbers.
VerificationReport verify_main_theorem_stream(std::istream& in, const ClassifyFn& hook = {});

} // namespace k25
