#pragma once

#include <json.hpp>

#include "k25/connectivity.hpp"
#include "k25/families.hpp"
#include "k25/minors.hpp"
#include "k25/theorem.hpp"

namespace k25 {

// nlohmann ADL serializers. Witness vertex sets become sorted index arrays,
// pattern graphs are embedded as graph6 strings.

void to_json(nlohmann::json& j, const VertexSet& s);
void to_json(nlohmann::json& j, const MinorModel& m);
void to_json(nlohmann::json& j, const CutWitness& w);
void to_json(nlohmann::json& j, const FaceList& fl);
void to_json(nlohmann::json& j, const PropertyReport& r);
void to_json(nlohmann::json& j, const Counterexample& c);
void to_json(nlohmann::json& j, const VerificationReport& r);
void to_json(nlohmann::json& j, const Lemma1Report& r);
void to_json(nlohmann::json& j, const Lemma4Result& r);

} // namespace k25
