#include "k25/json_io.hpp"

namespace k25 {

using nlohmann::json;

void to_json(json& j, const VertexSet& s) { j = s.to_vector(); }

void to_json(json& j, const MinorModel& m) {
    j = json{{"pattern", emit_graph6(m.pattern)}, {"branch_sets", m.branch_sets}};
}

void to_json(json& j, const CutWitness& w) {
    j = json::object();
    if (w.kind == CutWitness::Kind::vertex_cut) {
        j["kind"] = "vertex-cut";
        j["members"] = w.vertex_members;
    } else {
        j["kind"] = "edge-cut";
        auto members = json::array();
        for (auto [u, v] : w.edge_members) members.push_back(json::array({u, v}));
        j["members"] = std::move(members);
    }
    j["sideA"] = w.side_a;
    j["sideB"] = w.side_b;
}

void to_json(json& j, const FaceList& fl) { j = fl.faces; }

void to_json(json& j, const PropertyReport& r) {
    json witnesses = json::object();
    if (r.planarity_obstruction) witnesses["planarity_obstruction"] = *r.planarity_obstruction;
    if (r.k25_model) witnesses["k25_model"] = *r.k25_model;
    if (r.connectivity_cut) witnesses["connectivity_cut"] = *r.connectivity_cut;
    if (r.triangle_free_edge)
        witnesses["triangle_free_edge"] =
            json::array({r.triangle_free_edge->first, r.triangle_free_edge->second});
    j = json{{"planar", r.planar},
             {"four_connected", r.four_connected},
             {"k25_minor_free", r.k25_minor_free},
             {"four_regular", r.four_regular},
             {"every_edge_in_triangle", r.every_edge_in_triangle},
             {"squared_even_cycle", r.squared_even_cycle ? json(*r.squared_even_cycle) : json()},
             {"witnesses", std::move(witnesses)}};
}

void to_json(json& j, const Counterexample& c) {
    j = json{{"graph6", c.graph6}, {"report", c.report}};
}

void to_json(json& j, const VerificationReport& r) {
    j = json{{"n_range", json::array({r.n_min, r.n_max})},
             {"graphs_examined", r.graphs_examined},
             {"graphs_passing_hypotheses", r.graphs_passing_hypotheses},
             {"hypothesis_graphs", r.hypothesis_graphs},
             {"counterexamples", r.counterexamples},
             {"elapsed_seconds", r.elapsed_seconds},
             {"verified", r.verified()}};
}

void to_json(json& j, const Lemma1Report& r) {
    auto violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back(
            json{{"vertex", v.vertex}, {"cut", v.cut}, {"model", v.model}});
    j = json{{"lemma", 1},
             {"holds", r.holds()},
             {"remainder_sizes", r.remainder_sizes},
             {"violations", std::move(violations)}};
}

void to_json(json& j, const Lemma4Result& r) {
    j = json{{"lemma", 4},
             {"applicable", true},
             {"triangle_free_edge",
              json::array({r.triangle_free_edge.first, r.triangle_free_edge.second})},
             {"line_graph", emit_graph6(r.line.graph)},
             {"model", r.model}};
}

} // namespace k25
