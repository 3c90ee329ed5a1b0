#include "k25/graph.hpp"

#include <algorithm>
#include <array>

namespace k25 {

Graph::Graph(int n) {
    if (n < 0 || n > max_vertices)
        throw PreconditionError("vertex count must be in [0, 64], got " + std::to_string(n));
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw PreconditionError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ") with n = " + std::to_string(n));
        if (u == v)
            throw PreconditionError("loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)] = g.adj_[static_cast<std::size_t>(u)].with(v);
        g.adj_[static_cast<std::size_t>(v)] = g.adj_[static_cast<std::size_t>(v)].with(u);
    }
    int m = 0;
    for (int v = 0; v < n; ++v) m += g.adj_[static_cast<std::size_t>(v)].count();
    g.m_ = m / 2;
    return g;
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
    const int n = static_cast<int>(rows.size());
    if (n > max_vertices)
        throw PreconditionError("vertex count must be at most 64, got " + std::to_string(n));
    const VertexSet range = VertexSet::first_n(n);
    int degree_sum = 0;
    for (int v = 0; v < n; ++v) {
        const VertexSet row = rows[static_cast<std::size_t>(v)];
        if (!row.is_subset_of(range))
            throw PreconditionError("adjacency row " + std::to_string(v) + " has bits >= n");
        if (row.contains(v))
            throw PreconditionError("loop at vertex " + std::to_string(v));
        for (int u : row)
            if (!rows[static_cast<std::size_t>(u)].contains(v))
                throw PreconditionError("adjacency not symmetric at (" + std::to_string(v) +
                                        ", " + std::to_string(u) + ")");
        degree_sum += row.count();
    }
    return Graph(n, degree_sum / 2, std::move(rows));
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)] - VertexSet::first_n(u + 1))
            out.emplace_back(u, v);
    return out;
}

VertexSet Graph::neighbors_of_set(VertexSet s) const {
    VertexSet acc;
    for (int v : s) acc = acc | adj_[static_cast<std::size_t>(v)];
    return acc;
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int decode_byte(std::string_view text, std::size_t at) {
    const unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126)
        throw DecodeError("non-printable graph6 byte", at);
    return c - 63;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.substr(0, kGraph6Header.size()) == kGraph6Header) base = kGraph6Header.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.size() <= base)
        throw DecodeError("empty graph6 input", base);

    std::size_t at = base;
    long n = 0;
    if (static_cast<unsigned char>(text[at]) == 126) {
        // Multi-byte vertex count: "~" + 18 bits, or "~~" + 36 bits.
        ++at;
        if (at >= text.size())
            throw DecodeError("truncated graph6 length prefix", at);
        int groups = 3;
        if (static_cast<unsigned char>(text[at]) == 126) {
            groups = 6;
            ++at;
        }
        if (text.size() - at < static_cast<std::size_t>(groups))
            throw DecodeError("truncated graph6 length prefix", text.size());
        for (int i = 0; i < groups; ++i, ++at) n = (n << 6) | decode_byte(text, at);
    } else {
        n = decode_byte(text, at);
        ++at;
    }
    if (n > Graph::max_vertices)
        throw DecodeError("graph6 vertex count " + std::to_string(n) + " exceeds 64", base);

    const int nn = static_cast<int>(n);
    const long bit_count = static_cast<long>(nn) * (nn - 1) / 2;
    const std::size_t body_bytes = static_cast<std::size_t>((bit_count + 5) / 6);
    if (text.size() - at < body_bytes)
        throw DecodeError("graph6 body shorter than the length prefix requires", text.size());
    if (text.size() - at > body_bytes)
        throw DecodeError("trailing data after graph6 encoding", at + body_bytes);

    std::vector<VertexSet> rows(static_cast<std::size_t>(nn));
    long bit = 0;
    for (std::size_t i = 0; i < body_bytes; ++i) {
        const int value = decode_byte(text, at + i);
        for (int shift = 5; shift >= 0; --shift, ++bit) {
            const bool set = (value >> shift) & 1;
            if (bit >= bit_count) {
                if (set)
                    throw DecodeError("nonzero padding bit in graph6 encoding", at + i);
                continue;
            }
            if (set) {
                // Column order: bit index j(j-1)/2 + i addresses x(i, j).
                const long b = bit;
                int col = 1;
                while (static_cast<long>(col) * (col + 1) / 2 <= b) ++col;
                const int row = static_cast<int>(b - static_cast<long>(col) * (col - 1) / 2);
                rows[static_cast<std::size_t>(row)] = rows[static_cast<std::size_t>(row)].with(col);
                rows[static_cast<std::size_t>(col)] = rows[static_cast<std::size_t>(col)].with(row);
            }
        }
    }
    return Graph::from_rows(std::move(rows));
}

std::string emit_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int accum = 0;
    int used = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            accum = (accum << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(63 + accum));
                accum = 0;
                used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>(63 + (accum << (6 - used))));
    return out;
}

// ---------------------------------------------------------------------------
// Elementary operations
// ---------------------------------------------------------------------------

VertexSet neighborhood(const Graph& g, VertexSet s, bool closed) {
    const VertexSet all = g.neighbors_of_set(s);
    return closed ? (all | s) : (all - s);
}

InducedSubgraph delete_vertices(const Graph& g, VertexSet s) {
    const VertexSet kept = g.vertices() - s;
    std::vector<int> origin = kept.to_vector();
    const int k = static_cast<int>(origin.size());
    std::array<int, Graph::max_vertices> to_new{};
    for (int i = 0; i < k; ++i) to_new[static_cast<std::size_t>(origin[static_cast<std::size_t>(i)])] = i;
    std::vector<VertexSet> rows(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        VertexSet row;
        for (int u : g.neighbors(origin[static_cast<std::size_t>(i)]) & kept)
            row = row.with(to_new[static_cast<std::size_t>(u)]);
        rows[static_cast<std::size_t>(i)] = row;
    }
    return {Graph::from_rows(std::move(rows)), std::move(origin)};
}

ContractionResult contract_edge(const Graph& g, int u, int v) {
    const int n = g.vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n || !g.has_edge(u, v))
        throw PreconditionError("contract_edge requires an existing edge (" + std::to_string(u) +
                                ", " + std::to_string(v) + ")");
    const int keep = std::min(u, v);
    const int drop = std::max(u, v);
    const VertexSet endpoints = VertexSet::of({u, v});
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w)
        image[static_cast<std::size_t>(w)] = (w == drop) ? keep : (w > drop ? w - 1 : w);
    std::vector<VertexSet> rows(static_cast<std::size_t>(n - 1));
    for (int w = 0; w < n; ++w) {
        if (w == drop) continue;
        VertexSet row;
        VertexSet nbrs = g.neighbors(w);
        if (w == keep) {
            nbrs = (g.neighbors(u) | g.neighbors(v)) - endpoints;
        } else if (nbrs.intersects(endpoints)) {
            nbrs = nbrs - endpoints;
            row = row.with(keep);
        }
        for (int x : nbrs) row = row.with(image[static_cast<std::size_t>(x)]);
        rows[static_cast<std::size_t>(image[static_cast<std::size_t>(w)])] = row;
    }
    return {Graph::from_rows(std::move(rows)), std::move(image)};
}

VertexSet component_of(const Graph& g, int v, VertexSet within) {
    VertexSet comp = VertexSet::single(v);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
        const VertexSet grown = (g.neighbors_of_set(frontier) & within) - comp;
        comp = comp | grown;
        frontier = grown;
    }
    return comp;
}

bool is_connected_subset(const Graph& g, VertexSet s) {
    if (s.empty()) return true;
    return component_of(g, s.first(), s) == s;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet rest = g.vertices();
    while (!rest.empty()) {
        const VertexSet comp = component_of(g, rest.first(), rest);
        out.push_back(comp);
        rest = rest - comp;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism
// ---------------------------------------------------------------------------

namespace {

// Refinement key: degree followed by the sorted multiset of neighbor degrees.
std::vector<std::vector<int>> refinement_keys(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<int>& key = keys[static_cast<std::size_t>(v)];
        key.push_back(g.degree(v));
        for (int u : g.neighbors(v)) key.push_back(g.degree(u));
        std::sort(key.begin() + 1, key.end());
    }
    return keys;
}

bool extend_isomorphism(const Graph& g, const Graph& h,
                        const std::vector<std::vector<int>>& gkeys,
                        const std::vector<std::vector<int>>& hkeys,
                        std::vector<int>& map, VertexSet used, int next) {
    const int n = g.vertex_count();
    if (next == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used.contains(cand)) continue;
        if (hkeys[static_cast<std::size_t>(cand)] != gkeys[static_cast<std::size_t>(next)]) continue;
        bool ok = true;
        for (int prev = 0; prev < next; ++prev) {
            if (g.has_edge(next, prev) != h.has_edge(cand, map[static_cast<std::size_t>(prev)])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[static_cast<std::size_t>(next)] = cand;
        if (extend_isomorphism(g, h, gkeys, hkeys, map, used.with(cand), next + 1)) return true;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> isomorphism(const Graph& g, const Graph& h) {
    if (g.vertex_count() > 16 || h.vertex_count() > 16)
        throw CapabilityError("isomorphism search is limited to 16 vertices");
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    const auto gkeys = refinement_keys(g);
    const auto hkeys = refinement_keys(h);
    auto sorted_g = gkeys;
    auto sorted_h = hkeys;
    std::sort(sorted_g.begin(), sorted_g.end());
    std::sort(sorted_h.begin(), sorted_h.end());
    if (sorted_g != sorted_h) return std::nullopt;

    std::vector<int> map(static_cast<std::size_t>(g.vertex_count()), -1);
    if (extend_isomorphism(g, h, gkeys, hkeys, map, VertexSet{}, 0)) return map;
    return std::nullopt;
}

} // namespace k25
