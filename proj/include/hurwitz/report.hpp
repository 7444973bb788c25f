#pragma once

#include <string>
#include <vector>

#include "hurwitz/liaison.hpp"
#include "hurwitz/pipeline.hpp"
#include "hurwitz/verify.hpp"
#include "json.hpp"

namespace hurwitz {

nlohmann::ordered_json plan_to_json(const LiaisonPlan& plan);
LiaisonPlan plan_from_json(const nlohmann::ordered_json& j);

/// {genus, prime, seed, plan, checks:[{name, pass, measured, expected, millis}], verdict}
nlohmann::ordered_json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::ordered_json& j);

/// Copy of a report JSON with every "millis" field removed.
nlohmann::ordered_json strip_timings(const nlohmann::ordered_json& j);

/// Summary of a construction: plan, measured curves, attempts, stage timings.
nlohmann::ordered_json construction_to_json(const ConstructionResult& result);

/// Aligned text rows in the layout g | d | fX | g' | d' | fX' | l | d''.
std::string plan_table(const std::vector<LiaisonPlan>& plans);

}  // namespace hurwitz
