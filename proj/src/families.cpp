#include "k25/families.hpp"

#include <algorithm>
#include <map>

namespace k25 {

std::vector<std::string> validate_face_list(const FaceList& fl) {
    std::vector<std::string> violations;
    const Graph& g = fl.owner;
    std::map<std::pair<int, int>, int> edge_uses;
    for (std::size_t f = 0; f < fl.faces.size(); ++f) {
        const auto& face = fl.faces[f];
        if (face.size() < 3) {
            violations.push_back("face " + std::to_string(f) + " has fewer than 3 vertices");
            continue;
        }
        VertexSet seen;
        for (int v : face) {
            if (v < 0 || v >= g.vertex_count()) {
                violations.push_back("face " + std::to_string(f) + " has out-of-range vertex " +
                                     std::to_string(v));
                return violations;
            }
            if (seen.contains(v))
                violations.push_back("face " + std::to_string(f) + " repeats vertex " +
                                     std::to_string(v));
            seen = seen.with(v);
        }
        for (std::size_t i = 0; i < face.size(); ++i) {
            const int u = face[i];
            const int v = face[(i + 1) % face.size()];
            if (!g.has_edge(u, v)) {
                violations.push_back("face " + std::to_string(f) + " uses non-edge (" +
                                     std::to_string(u) + ", " + std::to_string(v) + ")");
                continue;
            }
            ++edge_uses[{std::min(u, v), std::max(u, v)}];
        }
    }
    for (auto [u, v] : g.edges()) {
        const int uses = edge_uses.count({u, v}) ? edge_uses.at({u, v}) : 0;
        if (uses != 2)
            violations.push_back("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                 ") appears in " + std::to_string(uses) + " faces, expected 2");
    }
    const long euler = static_cast<long>(g.vertex_count()) - g.edge_count() +
                       static_cast<long>(fl.faces.size());
    if (euler != 2)
        violations.push_back("Euler characteristic n - m + f = " + std::to_string(euler) +
                             ", expected 2");
    return violations;
}

Graph square(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        VertexSet row = g.neighbors(v) | g.neighbors_of_set(g.neighbors(v));
        rows[static_cast<std::size_t>(v)] = row.without(v);
    }
    return Graph::from_rows(std::move(rows));
}

Graph cycle(int n) {
    if (n < 3) throw PreconditionError("cycle requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph path(int n) {
    if (n < 1) throw PreconditionError("path requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph complete(int n) {
    if (n < 1) throw PreconditionError("complete requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw PreconditionError("complete_bipartite requires s, t >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) edges.emplace_back(i, s + j);
    return Graph::from_edges(s + t, edges);
}

Graph prism() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                 {0, 3}, {1, 4}, {2, 5}});
}

Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, edges);
}

Graph cube() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 8; ++i)
        for (int b = 0; b < 3; ++b)
            if (int j = i ^ (1 << b); j > i) edges.emplace_back(i, j);
    return Graph::from_edges(8, edges);
}

Graph cycle_square(int n) {
    if (n < 5)
        throw PreconditionError("cycle_square requires n >= 5 (smaller squares are complete)");
    if (n > Graph::max_vertices) throw PreconditionError("cycle_square limited to 64 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, (i + 2) % n);
    }
    return Graph::from_edges(n, edges);
}

LineGraph line_graph(const Graph& g) {
    const auto edges = g.edges();
    const int k = static_cast<int>(edges.size());
    if (k > Graph::max_vertices)
        throw CapabilityError("line graph would exceed 64 vertices (" + std::to_string(k) +
                              " edges)");
    std::vector<std::pair<int, int>> lg_edges;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            const auto [u1, v1] = edges[static_cast<std::size_t>(a)];
            const auto [u2, v2] = edges[static_cast<std::size_t>(b)];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) lg_edges.emplace_back(a, b);
        }
    return {Graph::from_edges(k, lg_edges), edges};
}

std::optional<int> regularity(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    const int k = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

namespace {

// Extends a partial Hamiltonian order whose square must equal g.
// order[0..placed) are fixed; each new vertex must be adjacent in g to its
// one and two predecessors, and the cycle closure must respect distance <= 2
// adjacency back to the start.
bool extend_squared_cycle(const Graph& g, std::vector<int>& order, VertexSet used, int placed) {
    const int n = g.vertex_count();
    if (placed == n) {
        // The square of the cycle through `order` must equal g exactly.
        std::vector<VertexSet> rows(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const int v = order[static_cast<std::size_t>(i)];
            VertexSet row;
            for (int d : {-2, -1, 1, 2}) row = row.with(order[static_cast<std::size_t>((i + d + n) % n)]);
            rows[static_cast<std::size_t>(v)] = row;
        }
        return Graph::from_rows(std::move(rows)) == g;
    }
    const int prev = order[static_cast<std::size_t>(placed - 1)];
    VertexSet candidates = g.neighbors(prev) - used;
    if (placed >= 2)
        candidates = candidates & g.neighbors(order[static_cast<std::size_t>(placed - 2)]);
    if (placed == n - 1 || placed == n - 2) candidates = candidates & g.neighbors(order[0]);
    if (placed == n - 1 && n > 3) candidates = candidates & g.neighbors(order[1]);
    for (int v : candidates) {
        order[static_cast<std::size_t>(placed)] = v;
        if (extend_squared_cycle(g, order, used.with(v), placed + 1)) return true;
    }
    return false;
}

} // namespace

std::optional<int> is_squared_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 18) throw CapabilityError("is_squared_cycle search is limited to 18 vertices");
    if (n < 3) return std::nullopt;
    if (n >= 5) {
        // The square of an n-cycle with n >= 5 is 4-regular with 2n edges.
        if (regularity(g) != std::optional<int>(4) || g.edge_count() != 2 * n)
            return std::nullopt;
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    order[0] = 0;
    if (extend_squared_cycle(g, order, VertexSet::single(0), 1)) return n;
    return std::nullopt;
}

FaceList squared_cycle_embedding(int n) {
    if (n < 6 || n % 2 != 0)
        throw PreconditionError("squared_cycle_embedding requires even n >= 6");
    FaceList fl{cycle_square(n), {}};
    std::vector<int> evens, odds;
    for (int i = 0; i < n; i += 2) evens.push_back(i);
    for (int i = 1; i < n; i += 2) odds.push_back(i);
    fl.faces.push_back(evens);
    fl.faces.push_back(odds);
    for (int i = 0; i < n; ++i) fl.faces.push_back({i, (i + 1) % n, (i + 2) % n});
    return fl;
}

} // namespace k25
