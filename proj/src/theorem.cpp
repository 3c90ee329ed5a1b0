#include "k25/theorem.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <istream>
#include <map>
#include <thread>

namespace k25 {

TriangleResult every_edge_in_triangle(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (!(g.neighbors(u) & g.neighbors(v)).count()) return {false, std::make_pair(u, v)};
    return {true, std::nullopt};
}

PropertyReport classify(const Graph& g) {
    if (g.vertex_count() > 18) throw CapabilityError("classify is limited to 18 vertices");
    PropertyReport r;
    const int n = g.vertex_count();

    auto planarity = is_planar(g);
    r.planar = planarity.planar;
    r.planarity_obstruction = std::move(planarity.obstruction);

    if (n == 0) {
        r.four_connected = false;
    } else {
        auto conn = vertex_connectivity_with_cut(g);
        r.four_connected = conn.connectivity >= 4;
        if (!r.four_connected) r.connectivity_cut = std::move(conn.cut);
    }

    auto k25 = find_complete_bipartite_minor(g, 2, 5);
    r.k25_minor_free = !k25.has_value();
    if (k25) r.k25_model = std::move(*k25);

    r.four_regular = regularity(g) == std::optional<int>(4);

    auto tri = every_edge_in_triangle(g);
    r.every_edge_in_triangle = tri.value;
    r.triangle_free_edge = tri.witness;

    if (const auto sq = is_squared_cycle(g); sq && *sq >= 6 && *sq % 2 == 0)
        r.squared_even_cycle = sq;
    return r;
}

// ---------------------------------------------------------------------------
// Closed-neighborhood cut checker
// ---------------------------------------------------------------------------

std::optional<ClosedNeighborhoodViolation> closed_neighborhood_cut_witness(const Graph& g,
                                                                           int v) {
    const VertexSet closed = neighborhood(g, VertexSet::single(v), true);
    const VertexSet remainder = g.vertices() - closed;
    if (remainder.count() <= 1) return std::nullopt;
    if (is_connected_subset(g, remainder)) return std::nullopt;

    // Smallest S inside N(v) that separates g minus v; sizes ascending and
    // lexicographic within a size, so the witness is deterministic.
    const std::vector<int> nbrs = g.neighbors(v).to_vector();
    const VertexSet without_v = g.vertices().without(v);
    const int d = static_cast<int>(nbrs.size());
    for (int size = 1; size <= d; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            VertexSet s;
            for (int i : pick) s = s.with(nbrs[static_cast<std::size_t>(i)]);
            const VertexSet rest = without_v - s;
            if (!rest.empty() && !is_connected_subset(g, rest)) {
                VertexSet pool = rest;
                const VertexSet c1 = component_of(g, pool.first(), pool);
                pool = pool - c1;
                const VertexSet c2 = component_of(g, pool.first(), pool);

                MinorModel model{g, complete_bipartite(3, size), {}};
                model.branch_sets = {VertexSet::single(v), c1, c2};
                for (int w : s) model.branch_sets.push_back(VertexSet::single(w));
                if (!verify_minor_model(model).empty())
                    throw Error("internal error: closed-neighborhood witness failed verification");
                return ClosedNeighborhoodViolation{v, s, std::move(model)};
            }
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == d - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    throw Error("internal error: N[v] cuts the graph but no cut inside N(v) was found");
}

Lemma1Report lemma1_check(const Graph& g) {
    if (!is_k_connected(g, 4)) throw HypothesisError("lemma1_check requires a 4-connected graph");
    if (!is_planar(g).planar) throw HypothesisError("lemma1_check requires a planar graph");
    Lemma1Report report;
    const int n = g.vertex_count();
    report.remainder_sizes.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const VertexSet remainder = g.vertices() - neighborhood(g, VertexSet::single(v), true);
        report.remainder_sizes.push_back(remainder.count());
        if (auto violation = closed_neighborhood_cut_witness(g, v))
            report.violations.push_back(std::move(*violation));
    }
    return report;
}

// ---------------------------------------------------------------------------
// Line-graph K_{2,5} witness
// ---------------------------------------------------------------------------

Lemma4Result lemma4_witness(const Graph& h) {
    if (regularity(h) != std::optional<int>(3))
        throw HypothesisError("lemma4_witness requires a cubic graph");
    if (h.vertex_count() == 4) throw NotApplicableError("lemma4_witness does not apply to K_4");
    if (!is_k_connected(h, 3))
        throw HypothesisError("lemma4_witness requires a 3-connected graph");

    // Lexicographically least edge whose endpoints share no neighbor.
    std::optional<std::pair<int, int>> chosen;
    for (auto [u, v] : h.edges())
        if ((h.neighbors(u) & h.neighbors(v)).empty()) {
            chosen = {u, v};
            break;
        }
    if (!chosen)
        throw ClaimViolationError("cubic 3-connected non-K4 graph with every edge in a triangle: " +
                                  emit_graph6(h));
    const auto [u, v] = *chosen;

    const auto u_rest = (h.neighbors(u).without(v)).to_vector(); // x, y
    const auto v_rest = (h.neighbors(v).without(u)).to_vector(); // w, z
    const int x = u_rest[0], y = u_rest[1];
    const int w = v_rest[0], z = v_rest[1];
    const auto w_rest = (h.neighbors(w).without(v)).to_vector(); // s, t
    const int s = w_rest[0], t = w_rest[1];

    LineGraph line = line_graph(h);
    std::map<std::pair<int, int>, int> vertex_of_edge;
    for (std::size_t i = 0; i < line.edge_of_vertex.size(); ++i)
        vertex_of_edge[line.edge_of_vertex[i]] = static_cast<int>(i);
    const auto lv = [&](int a, int b) {
        return vertex_of_edge.at({std::min(a, b), std::max(a, b)});
    };

    const VertexSet big = VertexSet::of({lv(u, v), lv(v, w)});
    VertexSet singles = VertexSet::of({lv(u, x), lv(u, y), lv(v, z), lv(w, s), lv(w, t)});
    const VertexSet rest = line.graph.vertices() - big - singles;
    if (rest.empty())
        throw ClaimViolationError("line graph leaves no residual branch set: " + emit_graph6(h));

    MinorModel model{line.graph, complete_bipartite(2, 5), {big, rest}};
    for (int e : singles) model.branch_sets.push_back(VertexSet::single(e));
    const auto violations = verify_minor_model(model);
    if (!violations.empty())
        throw ClaimViolationError("constructed model failed verification on " + emit_graph6(h) +
                                  ": " + violations.front());
    return {std::move(line), *chosen, std::move(model)};
}

MinorModel odd_square_k5(int n) {
    if (n < 5 || n > 15 || n % 2 == 0)
        throw PreconditionError("odd_square_k5 requires odd n in [5, 15]");
    auto model = find_minor(cycle_square(n), complete(5));
    if (!model) throw Error("internal error: no K_5 model found in an odd squared cycle");
    return std::move(*model);
}

// ---------------------------------------------------------------------------
// Exhaustive verification
// ---------------------------------------------------------------------------

namespace {

struct EdgeSlots {
    int n = 0;
    int bits = 0;
    std::array<std::pair<int, int>, 28> pair_of_slot{};
    std::array<std::uint32_t, 8> incident{};

    explicit EdgeSlots(int n_) : n(n_) {
        int k = 0;
        for (int col = 1; col < n; ++col)
            for (int row = 0; row < col; ++row, ++k) {
                pair_of_slot[static_cast<std::size_t>(k)] = {row, col};
                incident[static_cast<std::size_t>(row)] |= std::uint32_t{1} << k;
                incident[static_cast<std::size_t>(col)] |= std::uint32_t{1} << k;
            }
        bits = k;
    }

    Graph graph_of(std::uint32_t mask) const {
        std::vector<VertexSet> rows(static_cast<std::size_t>(n));
        while (mask) {
            const int k = std::countr_zero(mask);
            mask &= mask - 1;
            const auto [a, b] = pair_of_slot[static_cast<std::size_t>(k)];
            rows[static_cast<std::size_t>(a)] = rows[static_cast<std::size_t>(a)].with(b);
            rows[static_cast<std::size_t>(b)] = rows[static_cast<std::size_t>(b)].with(a);
        }
        return Graph::from_rows(std::move(rows));
    }

    bool min_degree_at_least(std::uint32_t mask, int d) const {
        for (int v = 0; v < n; ++v)
            if (std::popcount(mask & incident[static_cast<std::size_t>(v)]) < d) return false;
        return true;
    }
};

void scan_masks(const EdgeSlots& slots, int min_degree, std::uint64_t lo, std::uint64_t hi,
                const std::function<void(const Graph&)>& fn) {
    const int edge_floor = (min_degree >= 4) ? 2 * slots.n : 0;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        const auto m32 = static_cast<std::uint32_t>(mask);
        if (std::popcount(m32) < edge_floor) continue;
        if (min_degree > 0 && !slots.min_degree_at_least(m32, min_degree)) continue;
        fn(slots.graph_of(m32));
    }
}

// Same predicate pair as classify, evaluated cheapest-first with short
// circuits; P = planar & 4-connected & K_{2,5}-minor-free, Q = square of an
// even cycle of length >= 6.
std::pair<bool, bool> theorem_predicates(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const bool q = n >= 6 && n % 2 == 0 && m == 2 * n && is_squared_cycle(g).has_value();
    bool p = n >= 5 && (n < 3 || m <= 3 * n - 6);
    p = p && is_k_connected(g, 4);
    p = p && !find_minor(g, complete(5)).has_value();
    p = p && !find_minor(g, complete_bipartite(3, 3)).has_value();
    p = p && !find_complete_bipartite_minor(g, 2, 5).has_value();
    return {p, q};
}

struct LayerStats {
    std::uint64_t examined = 0;
    std::uint64_t passing = 0;
    std::vector<std::string> hypothesis_graphs;
    std::vector<Counterexample> counterexamples;
};

void examine_graph(const Graph& g, const ClassifyFn& hook, LayerStats& stats) {
    ++stats.examined;
    bool p = false;
    bool q = false;
    if (hook) {
        const PropertyReport r = hook(g);
        p = r.planar && r.four_connected && r.k25_minor_free;
        q = r.squared_even_cycle.has_value();
        if (p) {
            ++stats.passing;
            stats.hypothesis_graphs.push_back(emit_graph6(g));
        }
        if (p != q) stats.counterexamples.push_back({emit_graph6(g), r});
        return;
    }
    std::tie(p, q) = theorem_predicates(g);
    if (p) {
        ++stats.passing;
        stats.hypothesis_graphs.push_back(emit_graph6(g));
    }
    if (p != q) stats.counterexamples.push_back({emit_graph6(g), classify(g)});
}

void merge(LayerStats& into, LayerStats&& from) {
    into.examined += from.examined;
    into.passing += from.passing;
    std::move(from.hypothesis_graphs.begin(), from.hypothesis_graphs.end(),
              std::back_inserter(into.hypothesis_graphs));
    std::move(from.counterexamples.begin(), from.counterexamples.end(),
              std::back_inserter(into.counterexamples));
}

// Splits [0, 2^bits) into prefix chunks and processes them on `jobs`
// threads; results are merged in chunk order so the outcome does not depend
// on scheduling.
LayerStats run_layer(int n, int jobs, const ClassifyFn& hook) {
    const EdgeSlots slots(n);
    const std::uint64_t space = std::uint64_t{1} << slots.bits;
    const int chunk_bits = std::max(0, slots.bits - 16);
    const std::uint64_t chunk_size = std::uint64_t{1} << chunk_bits;
    const std::uint64_t chunk_count = space / chunk_size;

    std::vector<LayerStats> chunk_stats(static_cast<std::size_t>(chunk_count));
    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::uint64_t chunk = next.fetch_add(1);
            if (chunk >= chunk_count) break;
            LayerStats local;
            scan_masks(slots, 4, chunk * chunk_size, (chunk + 1) * chunk_size,
                       [&](const Graph& g) { examine_graph(g, hook, local); });
            chunk_stats[static_cast<std::size_t>(chunk)] = std::move(local);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    LayerStats total;
    for (auto& cs : chunk_stats) merge(total, std::move(cs));
    return total;
}

} // namespace

void enumerate_graphs(int n, int min_degree, const std::function<void(const Graph&)>& fn) {
    if (n < 0 || n > 8)
        throw CapabilityError(
            "enumerate_graphs is limited to 8 vertices; feed larger graphs in as a graph6 stream");
    const EdgeSlots slots(n);
    scan_masks(slots, min_degree, 0, std::uint64_t{1} << slots.bits, fn);
}

VerificationReport verify_main_theorem(int n_max, int jobs, const ClassifyFn& hook) {
    if (n_max < 1 || n_max > 8)
        throw CapabilityError("internal verification is limited to n_max in [1, 8]");
    if (jobs < 1) throw PreconditionError("jobs must be >= 1");
    const auto started = std::chrono::steady_clock::now();
    VerificationReport report;
    report.n_min = 1;
    report.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        LayerStats layer = run_layer(n, jobs, hook);
        report.graphs_examined += layer.examined;
        report.graphs_passing_hypotheses += layer.passing;
        std::move(layer.hypothesis_graphs.begin(), layer.hypothesis_graphs.end(),
                  std::back_inserter(report.hypothesis_graphs));
        std::move(layer.counterexamples.begin(), layer.counterexamples.end(),
                  std::back_inserter(report.counterexamples));
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

VerificationReport verify_main_theorem_stream(std::istream& in, const ClassifyFn& hook) {
    const auto started = std::chrono::steady_clock::now();
    VerificationReport report;
    std::string line;
    long line_no = 0;
    bool any = false;
    LayerStats stats;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        Graph g;
        try {
            g = parse_graph6(line);
            if (!any) {
                report.n_min = report.n_max = g.vertex_count();
                any = true;
            } else {
                report.n_min = std::min(report.n_min, g.vertex_count());
                report.n_max = std::max(report.n_max, g.vertex_count());
            }
            examine_graph(g, hook, stats);
        } catch (const Error& e) {
            throw Error("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    report.graphs_examined = stats.examined;
    report.graphs_passing_hypotheses = stats.passing;
    report.hypothesis_graphs = std::move(stats.hypothesis_graphs);
    report.counterexamples = std::move(stats.counterexamples);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

} // namespace k25
