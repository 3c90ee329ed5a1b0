#include "k25/connectivity.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace k25 {

std::vector<std::string> validate_cut_witness(const Graph& g, const CutWitness& w) {
    std::vector<std::string> violations;
    const VertexSet all = g.vertices();
    VertexSet removed;
    Graph reduced;
    if (w.kind == CutWitness::Kind::vertex_cut) {
        removed = w.vertex_members;
        if (!removed.is_subset_of(all)) violations.push_back("cut vertices out of range");
        reduced = delete_vertices(g, removed).graph;
    } else {
        std::vector<VertexSet> rows;
        rows.reserve(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) rows.push_back(g.neighbors(v));
        for (auto [u, v] : w.edge_members) {
            if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() ||
                !g.has_edge(u, v)) {
                violations.push_back("cut edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                     ") is not an edge of the graph");
                return violations;
            }
            rows[static_cast<std::size_t>(u)] = rows[static_cast<std::size_t>(u)].without(v);
            rows[static_cast<std::size_t>(v)] = rows[static_cast<std::size_t>(v)].without(u);
        }
        reduced = Graph::from_rows(std::move(rows));
    }
    if (w.side_a.empty() || w.side_b.empty()) violations.push_back("a side is empty");
    if (w.side_a.intersects(w.side_b)) violations.push_back("sides are not disjoint");
    if (w.side_a.intersects(removed) || w.side_b.intersects(removed))
        violations.push_back("sides overlap the removed members");
    if ((w.side_a | w.side_b | removed) != all)
        violations.push_back("sides plus members do not cover the vertex set");

    // No edge may join the two sides once the members are gone.
    if (w.kind == CutWitness::Kind::vertex_cut) {
        for (int v : w.side_a)
            if (g.neighbors(v).intersects(w.side_b))
                violations.push_back("edge joins the two sides");
    } else {
        for (int v : w.side_a)
            if (reduced.neighbors(v).intersects(w.side_b))
                violations.push_back("edge joins the two sides after edge removal");
    }
    return violations;
}

// ---------------------------------------------------------------------------
// Unit max-flow networks
// ---------------------------------------------------------------------------

namespace {

// Adjacency-list residual network for small unit-capacity flows.
struct FlowNetwork {
    struct Arc {
        int to;
        int cap;
        int rev; // index of the reverse arc in arcs[to]
    };

    std::vector<std::vector<Arc>> arcs;

    explicit FlowNetwork(int nodes) : arcs(static_cast<std::size_t>(nodes)) {}

    void add_arc(int from, int to, int cap) {
        arcs[static_cast<std::size_t>(from)].push_back(
            {to, cap, static_cast<int>(arcs[static_cast<std::size_t>(to)].size())});
        arcs[static_cast<std::size_t>(to)].push_back(
            {from, 0, static_cast<int>(arcs[static_cast<std::size_t>(from)].size()) - 1});
    }

    // BFS augmenting paths until either exhaustion or `limit` units, whichever
    // comes first. Returns the flow shipped.
    int max_flow(int source, int sink, int limit) {
        int shipped = 0;
        const int n = static_cast<int>(arcs.size());
        std::vector<int> parent_node(static_cast<std::size_t>(n));
        std::vector<int> parent_arc(static_cast<std::size_t>(n));
        std::vector<int> queue;
        queue.reserve(static_cast<std::size_t>(n));
        while (shipped < limit) {
            std::fill(parent_node.begin(), parent_node.end(), -1);
            parent_node[static_cast<std::size_t>(source)] = source;
            queue.clear();
            queue.push_back(source);
            bool reached = false;
            for (std::size_t head = 0; head < queue.size() && !reached; ++head) {
                const int u = queue[head];
                const auto& out = arcs[static_cast<std::size_t>(u)];
                for (std::size_t i = 0; i < out.size(); ++i) {
                    const Arc& a = out[i];
                    if (a.cap <= 0 || parent_node[static_cast<std::size_t>(a.to)] != -1) continue;
                    parent_node[static_cast<std::size_t>(a.to)] = u;
                    parent_arc[static_cast<std::size_t>(a.to)] = static_cast<int>(i);
                    if (a.to == sink) {
                        reached = true;
                        break;
                    }
                    queue.push_back(a.to);
                }
            }
            if (!reached) break;
            for (int v = sink; v != source;) {
                const int u = parent_node[static_cast<std::size_t>(v)];
                Arc& a = arcs[static_cast<std::size_t>(u)][static_cast<std::size_t>(
                    parent_arc[static_cast<std::size_t>(v)])];
                a.cap -= 1;
                arcs[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += 1;
                v = u;
            }
            ++shipped;
        }
        return shipped;
    }

    // Nodes reachable from source in the residual network.
    std::vector<bool> residual_reachable(int source) const {
        std::vector<bool> seen(arcs.size(), false);
        std::vector<int> queue{source};
        seen[static_cast<std::size_t>(source)] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (const Arc& a : arcs[static_cast<std::size_t>(queue[head])]) {
                if (a.cap > 0 && !seen[static_cast<std::size_t>(a.to)]) {
                    seen[static_cast<std::size_t>(a.to)] = true;
                    queue.push_back(a.to);
                }
            }
        }
        return seen;
    }
};

// Vertex-split network: node 2v is v's in-node, 2v+1 its out-node. Split
// arcs get capacity 1, edge arcs are effectively unbounded so that minimum
// cuts consist of split arcs only.
FlowNetwork make_vertex_split_network(const Graph& g, int s, int t) {
    const int n = g.vertex_count();
    FlowNetwork net(2 * n);
    for (int v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
    for (auto [u, v] : g.edges()) {
        net.add_arc(2 * u + 1, 2 * v, n);
        net.add_arc(2 * v + 1, 2 * u, n);
    }
    return net;
}

// Max number of internally disjoint s-t paths, stopping early at `limit`.
int vertex_flow(const Graph& g, int s, int t, int limit,
                FlowNetwork* keep_network = nullptr) {
    FlowNetwork net = make_vertex_split_network(g, s, t);
    const int value = net.max_flow(2 * s + 1, 2 * t, limit);
    if (keep_network) *keep_network = std::move(net);
    return value;
}

bool is_complete(const Graph& g) {
    const int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

// Pair list for the standard reduction: a fixed minimum-degree vertex
// against all non-neighbors, plus nonadjacent pairs inside its neighborhood.
std::vector<std::pair<int, int>> connectivity_pairs(const Graph& g) {
    const int n = g.vertex_count();
    int u0 = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(u0)) u0 = v;
    std::vector<std::pair<int, int>> pairs;
    const VertexSet non_neighbors = g.vertices() - neighborhood(g, VertexSet::single(u0), true);
    for (int v : non_neighbors) pairs.emplace_back(u0, v);
    const auto nbrs = g.neighbors(u0).to_vector();
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (!g.has_edge(nbrs[i], nbrs[j])) pairs.emplace_back(nbrs[i], nbrs[j]);
    return pairs;
}

CutWitness component_split_witness(const Graph& g) {
    const auto comps = components(g);
    CutWitness w;
    w.kind = CutWitness::Kind::vertex_cut;
    w.side_a = comps.front();
    for (std::size_t i = 1; i < comps.size(); ++i) w.side_b = w.side_b | comps[i];
    return w;
}

} // namespace

int vertex_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw PreconditionError("vertex_connectivity requires n >= 1");
    if (components(g).size() != 1) return 0;
    if (is_complete(g)) return n - 1;
    int best = n - 1;
    for (auto [s, t] : connectivity_pairs(g)) best = std::min(best, vertex_flow(g, s, t, best));
    return best;
}

ConnectivityResult vertex_connectivity_with_cut(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw PreconditionError("vertex_connectivity requires n >= 1");
    if (components(g).size() != 1) return {0, component_split_witness(g)};
    if (is_complete(g)) return {n - 1, std::nullopt};

    // First pass finds the value, second re-runs the minimizing pair without
    // an early stop so the residual yields a minimum cut.
    int best = n - 1;
    std::pair<int, int> best_pair{-1, -1};
    for (auto [s, t] : connectivity_pairs(g)) {
        const int f = vertex_flow(g, s, t, best);
        if (f < best) {
            best = f;
            best_pair = {s, t};
        }
    }
    FlowNetwork net(0);
    vertex_flow(g, best_pair.first, best_pair.second, n, &net);
    const auto reach = net.residual_reachable(2 * best_pair.first + 1);
    CutWitness w;
    w.kind = CutWitness::Kind::vertex_cut;
    for (int v = 0; v < n; ++v)
        if (reach[static_cast<std::size_t>(2 * v)] && !reach[static_cast<std::size_t>(2 * v + 1)])
            w.vertex_members = w.vertex_members.with(v);
    const VertexSet rest = g.vertices() - w.vertex_members;
    w.side_a = component_of(g, best_pair.first, rest);
    w.side_b = rest - w.side_a;
    return {best, w};
}

bool is_k_connected(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (k < 1) throw PreconditionError("is_k_connected requires k >= 1");
    if (n <= k) return false;
    if (components(g).size() != 1) return false;
    if (is_complete(g)) return true;
    for (auto [s, t] : connectivity_pairs(g))
        if (vertex_flow(g, s, t, k) < k) return false;
    return true;
}

std::optional<CutWitness> min_vertex_cut_bruteforce(const Graph& g, int k_max) {
    const int n = g.vertex_count();
    if (n > 12) throw CapabilityError("min_vertex_cut_bruteforce is limited to 12 vertices");
    const int cap = std::min(k_max, n - 1);
    for (int size = 0; size < cap; ++size) {
        // Lexicographic combinations of `size` vertices.
        std::vector<int> pick(static_cast<std::size_t>(size));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            VertexSet s;
            for (int v : pick) s = s.with(v);
            const VertexSet rest = g.vertices() - s;
            if (!rest.empty()) {
                const VertexSet comp = component_of(g, rest.first(), rest);
                if (comp != rest) {
                    CutWitness w;
                    w.kind = CutWitness::Kind::vertex_cut;
                    w.vertex_members = s;
                    w.side_a = comp;
                    w.side_b = rest - comp;
                    return w;
                }
            }
            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

namespace {

// Directed unit-capacity network over the plain vertices (two arcs per edge).
FlowNetwork make_edge_network(const Graph& g) {
    FlowNetwork net(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        net.add_arc(u, v, 1);
        net.add_arc(v, u, 1);
    }
    return net;
}

struct EdgeCutResult {
    int value;
    std::vector<std::pair<int, int>> cut_edges;
    VertexSet source_side;
};

EdgeCutResult edge_connectivity_with_cut(const Graph& g) {
    const int n = g.vertex_count();
    int best = g.edge_count() + 1;
    int best_t = -1;
    for (int t = 1; t < n; ++t) {
        FlowNetwork net = make_edge_network(g);
        const int f = net.max_flow(0, t, best);
        if (f < best) {
            best = f;
            best_t = t;
        }
    }
    FlowNetwork net = make_edge_network(g);
    net.max_flow(0, best_t, g.edge_count() + 1);
    const auto reach = net.residual_reachable(0);
    EdgeCutResult result;
    result.value = best;
    for (int v = 0; v < n; ++v)
        if (reach[static_cast<std::size_t>(v)]) result.source_side = result.source_side.with(v);
    for (auto [u, v] : g.edges()) {
        const bool ru = result.source_side.contains(u);
        const bool rv = result.source_side.contains(v);
        if (ru != rv) result.cut_edges.emplace_back(u, v);
    }
    return result;
}

} // namespace

int edge_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw PreconditionError("edge_connectivity requires n >= 2");
    if (components(g).size() != 1) return 0;
    int best = g.edge_count() + 1;
    for (int t = 1; t < n; ++t) {
        FlowNetwork net = make_edge_network(g);
        best = std::min(best, net.max_flow(0, t, best));
    }
    return best;
}

CyclicConnectivityResult is_cyclically_4_edge_connected(const Graph& g) {
    if (g.edge_count() > 60)
        throw CapabilityError("is_cyclically_4_edge_connected is limited to 60 edges");
    const int n = g.vertex_count();
    if (n < 2) throw PreconditionError("is_cyclically_4_edge_connected requires n >= 2");

    if (components(g).size() != 1 || edge_connectivity(g) < 3) {
        const auto ec = edge_connectivity_with_cut(g);
        CutWitness w;
        w.kind = CutWitness::Kind::edge_cut;
        w.edge_members = ec.cut_edges;
        w.side_a = ec.source_side;
        w.side_b = g.vertices() - ec.source_side;
        return {false, w};
    }

    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::vector<VertexSet> base_rows;
    base_rows.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) base_rows.push_back(g.neighbors(v));

    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                auto rows = base_rows;
                for (int e : {a, b, c}) {
                    const auto [u, v] = edges[static_cast<std::size_t>(e)];
                    rows[static_cast<std::size_t>(u)] = rows[static_cast<std::size_t>(u)].without(v);
                    rows[static_cast<std::size_t>(v)] = rows[static_cast<std::size_t>(v)].without(u);
                }
                const Graph reduced = Graph::from_rows(std::move(rows));
                const auto comps = components(reduced);
                if (comps.size() != 2) continue;
                bool both_cyclic = true;
                for (const VertexSet& comp : comps) {
                    int inner_degrees = 0;
                    for (int v : comp) inner_degrees += (reduced.neighbors(v) & comp).count();
                    if (inner_degrees / 2 < comp.count()) {
                        both_cyclic = false;
                        break;
                    }
                }
                if (both_cyclic) {
                    CutWitness w;
                    w.kind = CutWitness::Kind::edge_cut;
                    w.edge_members = {edges[static_cast<std::size_t>(a)],
                                      edges[static_cast<std::size_t>(b)],
                                      edges[static_cast<std::size_t>(c)]};
                    w.side_a = comps[0];
                    w.side_b = comps[1];
                    return {false, w};
                }
            }
    return {true, std::nullopt};
}

} // namespace k25
