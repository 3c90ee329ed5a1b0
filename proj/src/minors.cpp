#include "k25/minors.hpp"

#include <algorithm>
#include <numeric>

#include "k25/families.hpp"

namespace k25 {

std::vector<std::string> verify_minor_model(const MinorModel& m) {
    const int k = m.pattern.vertex_count();
    if (static_cast<int>(m.branch_sets.size()) != k)
        throw PreconditionError("model has " + std::to_string(m.branch_sets.size()) +
                                " branch sets for a " + std::to_string(k) + "-vertex pattern");
    std::vector<std::string> violations;
    const VertexSet range = m.host.vertices();
    for (int i = 0; i < k; ++i) {
        const VertexSet b = m.branch_sets[static_cast<std::size_t>(i)];
        if (b.empty()) violations.push_back("branch set " + std::to_string(i) + " is empty");
        if (!b.is_subset_of(range))
            violations.push_back("branch set " + std::to_string(i) + " leaves the host range");
        else if (!is_connected_subset(m.host, b))
            violations.push_back("branch set " + std::to_string(i) + " is not connected");
        for (int j = i + 1; j < k; ++j)
            if (b.intersects(m.branch_sets[static_cast<std::size_t>(j)]))
                violations.push_back("branch sets " + std::to_string(i) + " and " +
                                     std::to_string(j) + " overlap");
    }
    for (auto [a, b] : m.pattern.edges()) {
        const VertexSet ba = m.branch_sets[static_cast<std::size_t>(a)];
        const VertexSet bb = m.branch_sets[static_cast<std::size_t>(b)];
        if (!m.host.neighbors_of_set(ba).intersects(bb))
            violations.push_back("no host edge realizes pattern edge (" + std::to_string(a) +
                                 ", " + std::to_string(b) + ")");
    }
    return violations;
}

namespace {

constexpr VertexSet strictly_above(int v) {
    return VertexSet(~((std::uint64_t{2} << v) - 1));
}

// Backtracking over explicit branch sets. Pattern vertices are processed in
// decreasing-degree order; each branch set is enumerated as a connected
// subset with canonical minimum start vertex and an exclusion set, so every
// candidate set is visited exactly once. Candidate vertices are tried in
// ascending index order throughout, which makes the first model found a
// deterministic function of the inputs.
struct BranchSetSearch {
    const Graph& host;
    const Graph& pattern;
    int k;
    std::vector<int> order;                   // position -> pattern vertex
    std::vector<std::vector<int>> earlier;    // position -> earlier neighbor positions
    std::vector<std::uint32_t> nbr_positions; // position -> neighbor positions, bit per position
    std::vector<VertexSet> sets;              // finalized branch sets by position
    std::vector<VertexSet> set_nbrs;          // host neighborhoods of finalized sets
    VertexSet free;

    explicit BranchSetSearch(const Graph& h, const Graph& p)
        : host(h), pattern(p), k(p.vertex_count()) {
        order.resize(static_cast<std::size_t>(k));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return p.degree(a) > p.degree(b); });
        std::vector<int> pos_of(static_cast<std::size_t>(k));
        for (int pos = 0; pos < k; ++pos) pos_of[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
        earlier.resize(static_cast<std::size_t>(k));
        nbr_positions.assign(static_cast<std::size_t>(k), 0);
        for (int pos = 0; pos < k; ++pos) {
            for (int nbr : p.neighbors(order[static_cast<std::size_t>(pos)])) {
                const int npos = pos_of[static_cast<std::size_t>(nbr)];
                if (npos < pos) earlier[static_cast<std::size_t>(pos)].push_back(npos);
                nbr_positions[static_cast<std::size_t>(pos)] |= std::uint32_t{1} << npos;
            }
        }
        sets.resize(static_cast<std::size_t>(k));
        set_nbrs.resize(static_cast<std::size_t>(k));
        free = h.vertices();
    }

    // Does position q still have pattern neighbors beyond position pos?
    bool pending_neighbors(int q, int pos) const {
        return (nbr_positions[static_cast<std::size_t>(q)] >> (pos + 1)) != 0;
    }

    bool assign(int pos) {
        if (pos == k) return true;
        if (free.count() < k - pos) return false;
        for (int start : free) {
            const VertexSet b = VertexSet::single(start);
            const VertexSet region = free & strictly_above(start);
            if (grow(pos, b, host.neighbors(start), region, VertexSet{})) return true;
        }
        return false;
    }

    // b: current connected set (min element = its start); bnbr: host
    // neighborhood of b; region: vertices allowed to join; banned: excluded
    // along the current enumeration path.
    bool grow(int pos, VertexSet b, VertexSet bnbr, VertexSet region, VertexSet banned) {
        if (try_finalize(pos, b, bnbr)) return true;
        // Feasibility of ever completing this set from here: every earlier
        // neighbor must already touch b or be reachable through growable room.
        const VertexSet growable = (region - banned) | b;
        for (int q : earlier[static_cast<std::size_t>(pos)])
            if (!set_nbrs[static_cast<std::size_t>(q)].intersects(growable)) return false;

        VertexSet cand = ((bnbr & region) - b) - banned;
        const int needed_later = k - pos - 1;
        for (int u : cand) {
            const VertexSet nb = b.with(u);
            if ((free - nb).count() >= needed_later) {
                if (grow(pos, nb, bnbr | host.neighbors(u), region, banned)) return true;
            }
            banned = banned.with(u);
        }
        return false;
    }

    bool try_finalize(int pos, VertexSet b, VertexSet bnbr) {
        for (int q : earlier[static_cast<std::size_t>(pos)])
            if (!sets[static_cast<std::size_t>(q)].intersects(bnbr)) return false;
        const VertexSet rest = free - b;
        if (rest.count() < k - pos - 1) return false;
        // Finalized sets with pattern neighbors at still-unassigned
        // positions must keep a free host neighbor to connect through.
        if (pending_neighbors(pos, pos) && !bnbr.intersects(rest)) return false;
        for (int q = 0; q < pos; ++q)
            if (pending_neighbors(q, pos) && !set_nbrs[static_cast<std::size_t>(q)].intersects(rest))
                return false;

        sets[static_cast<std::size_t>(pos)] = b;
        set_nbrs[static_cast<std::size_t>(pos)] = bnbr;
        const VertexSet saved_free = free;
        free = rest;
        if (assign(pos + 1)) return true;
        free = saved_free;
        return false;
    }

    MinorModel model() const {
        MinorModel m{host, pattern, std::vector<VertexSet>(static_cast<std::size_t>(k))};
        for (int pos = 0; pos < k; ++pos)
            m.branch_sets[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] =
                sets[static_cast<std::size_t>(pos)];
        return m;
    }
};

} // namespace

std::optional<MinorModel> find_minor(const Graph& host, const Graph& pattern) {
    if (pattern.vertex_count() > 8)
        throw CapabilityError("find_minor is limited to 8-vertex patterns");
    if (host.vertex_count() > 18)
        throw CapabilityError("find_minor is limited to 18-vertex hosts");
    if (pattern.vertex_count() == 0) return MinorModel{host, pattern, {}};
    if (pattern.vertex_count() > host.vertex_count() ||
        pattern.edge_count() > host.edge_count())
        return std::nullopt;

    BranchSetSearch search(host, pattern);
    if (!search.assign(0)) return std::nullopt;
    MinorModel m = search.model();
    if (!verify_minor_model(m).empty())
        throw Error("internal error: found minor model failed verification");
    return m;
}

namespace {

// Grows the s-side branch sets of a K_{s,t} model after the t singletons
// have been fixed. Each large set must be adjacent to every singleton.
struct BipartiteSideSearch {
    const Graph& host;
    std::vector<int> singletons; // ascending
    int s;
    VertexSet free;
    std::vector<VertexSet> sides;

    bool assign(int idx) {
        if (idx == s) return true;
        for (int start : free) {
            const VertexSet region = free & strictly_above(start);
            if (grow(idx, VertexSet::single(start), host.neighbors(start), region, VertexSet{}))
                return true;
        }
        return false;
    }

    bool grow(int idx, VertexSet b, VertexSet bnbr, VertexSet region, VertexSet banned) {
        if (dominates_all(bnbr)) {
            // Any completion using a superset of b also works with b itself
            // (domination and disjointness are preserved by shrinking), so
            // there is no point growing past a dominating set.
            sides[static_cast<std::size_t>(idx)] = b;
            const VertexSet saved = free;
            free = free - b;
            const bool ok = static_cast<int>(free.count()) >= s - idx - 1 && assign(idx + 1);
            if (!ok) free = saved;
            return ok;
        }
        // Every singleton must stay reachable from the growing set.
        const VertexSet growable = (region - banned) | b;
        for (int w : singletons)
            if (!host.neighbors(w).intersects(growable)) return false;

        VertexSet cand = ((bnbr & region) - b) - banned;
        for (int u : cand) {
            if (static_cast<int>((free - b.with(u)).count()) >= s - idx - 1) {
                if (grow(idx, b.with(u), bnbr | host.neighbors(u), region, banned)) return true;
            }
            banned = banned.with(u);
        }
        return false;
    }

    bool dominates_all(VertexSet bnbr) const {
        for (int w : singletons)
            if (!bnbr.contains(w)) return false;
        return true;
    }
};

} // namespace

std::optional<MinorModel> find_complete_bipartite_minor(const Graph& host, int s, int t) {
    if (s != 2 && s != 3)
        throw PreconditionError("find_complete_bipartite_minor supports s in {2, 3}");
    if (t < s) throw PreconditionError("find_complete_bipartite_minor requires t >= s");
    if (host.vertex_count() > 32)
        throw CapabilityError("find_complete_bipartite_minor is limited to 32-vertex hosts");

    const Graph pattern = complete_bipartite(s, t);
    const int n = host.vertex_count();
    if (s + t > n) return std::nullopt;

    // Singleton candidates in descending-degree order (index breaks ties);
    // a t-side vertex needs s disjoint branch sets among its neighbors.
    std::vector<int> by_degree(static_cast<std::size_t>(n));
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int a, int b) { return host.degree(a) > host.degree(b); });
    std::vector<int> eligible;
    for (int v : by_degree)
        if (host.degree(v) >= s) eligible.push_back(v);
    const int e = static_cast<int>(eligible.size());
    if (e < t) return std::nullopt;

    // Lexicographic combinations over the ordered eligible list.
    std::vector<int> pick(static_cast<std::size_t>(t));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::vector<int> singles;
        singles.reserve(static_cast<std::size_t>(t));
        for (int i : pick) singles.push_back(eligible[static_cast<std::size_t>(i)]);
        std::sort(singles.begin(), singles.end());
        VertexSet w;
        for (int v : singles) w = w.with(v);

        bool viable = true;
        for (int v : singles)
            if ((host.neighbors(v) - w).count() < s) {
                viable = false;
                break;
            }
        if (viable) {
            BipartiteSideSearch side{host, singles, s, host.vertices() - w,
                                     std::vector<VertexSet>(static_cast<std::size_t>(s))};
            if (side.assign(0)) {
                MinorModel m{host, pattern, {}};
                m.branch_sets = side.sides;
                for (int v : singles) m.branch_sets.push_back(VertexSet::single(v));
                if (!verify_minor_model(m).empty())
                    throw Error("internal error: bipartite minor model failed verification");
                return m;
            }
        }

        int i = t - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == e - t + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < t; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return std::nullopt;
}

PlanarityResult is_planar(const Graph& g) {
    if (g.vertex_count() > 18) throw CapabilityError("is_planar is limited to 18 vertices");
    const int n = g.vertex_count();
    const bool euler_reject = n >= 3 && g.edge_count() > 3 * n - 6;
    if (!euler_reject) {
        if (auto k5 = find_minor(g, complete(5))) return {false, std::move(k5)};
        if (auto k33 = find_minor(g, complete_bipartite(3, 3))) return {false, std::move(k33)};
        return {true, std::nullopt};
    }
    // Too many edges to be planar; still search for the obstruction to report.
    if (auto k5 = find_minor(g, complete(5))) return {false, std::move(k5)};
    if (auto k33 = find_minor(g, complete_bipartite(3, 3))) return {false, std::move(k33)};
    return {false, std::nullopt};
}

} // namespace k25
