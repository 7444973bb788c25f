#include "hurwitz/report.hpp"

#include <iomanip>
#include <sstream>

namespace hurwitz {

using nlohmann::ordered_json;

namespace {

ordered_json bideg(const Bidegree& d) { return ordered_json::array({d.a, d.b}); }
ordered_json pair_json(const BidegreePair& p) { return ordered_json::array({bideg(p.first), bideg(p.second)}); }
Bidegree bideg_from(const ordered_json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }
BidegreePair pair_from(const ordered_json& j) { return {bideg_from(j.at(0)), bideg_from(j.at(1))}; }

}  // namespace

ordered_json plan_to_json(const LiaisonPlan& p) {
  return {{"g", p.g},         {"d", p.d},         {"fX", pair_json(p.fX)},   {"g_trigonal", p.g1},
          {"d_trigonal", bideg(p.d1)}, {"lines", p.lines}, {"fX_trigonal", pair_json(p.fX1)},
          {"d_rational", bideg(p.d2)}, {"dRat", pair_json(p.dRat)}, {"delta", p.delta}};
}

LiaisonPlan plan_from_json(const ordered_json& j) {
  LiaisonPlan p;
  p.g = j.at("g").get<int>();
  p.d = j.at("d").get<int>();
  p.fX = pair_from(j.at("fX"));
  p.g1 = j.at("g_trigonal").get<int>();
  p.d1 = bideg_from(j.at("d_trigonal"));
  p.lines = j.at("lines").get<int>();
  p.fX1 = pair_from(j.at("fX_trigonal"));
  p.d2 = bideg_from(j.at("d_rational"));
  p.dRat = pair_from(j.at("dRat"));
  p.delta = j.at("delta").get<int>();
  return p;
}

ordered_json report_to_json(const VerificationReport& report) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"measured", c.measured},
                      {"expected", c.expected},
                      {"millis", c.millis}});
  return {{"genus", report.genus},
          {"prime", report.prime},
          {"seed", report.seed},
          {"plan", plan_to_json(report.plan)},
          {"checks", checks},
          {"verdict", report.verdict() ? "pass" : "fail"}};
}

VerificationReport report_from_json(const ordered_json& j) {
  VerificationReport r;
  r.genus = j.at("genus").get<int>();
  r.prime = j.at("prime").get<std::uint32_t>();
  r.seed = j.at("seed").get<std::string>();
  r.plan = plan_from_json(j.at("plan"));
  for (const auto& c : j.at("checks")) {
    CheckRecord rec;
    rec.name = c.at("name").get<std::string>();
    rec.pass = c.at("pass").get<bool>();
    rec.measured = c.at("measured");
    rec.expected = c.at("expected");
    rec.millis = c.value("millis", 0.0);
    r.checks.push_back(std::move(rec));
  }
  return r;
}

ordered_json strip_timings(const ordered_json& j) {
  if (j.is_object()) {
    ordered_json out = ordered_json::object();
    for (const auto& [key, value] : j.items())
      if (key != "millis" && key != "timings") out[key] = strip_timings(value);
    return out;
  }
  if (j.is_array()) {
    ordered_json out = ordered_json::array();
    for (const auto& v : j) out.push_back(strip_timings(v));
    return out;
  }
  return j;
}

ordered_json construction_to_json(const ConstructionResult& r) {
  auto curve = [](const CurveMeasure& m) { return ordered_json{{"bidegree", bideg(m.bidegree)}, {"genus", m.genus}}; };
  ordered_json timings = ordered_json::array();
  for (const auto& t : r.timings) timings.push_back({{"stage", t.stage}, {"millis", t.millis}});
  return {{"genus", r.plan.g},
          {"prime", r.prime},
          {"seed", r.seed},
          {"plan", plan_to_json(r.plan)},
          {"attempts", r.attempts},
          {"failures", r.failures},
          {"curves",
           {{"union", curve(r.measured_C2)}, {"trigonal", curve(r.measured_Cp)}, {"hexagonal", curve(r.measured_C)}}},
          {"generators",
           {{"IC2", r.IC2.generators().size()},
            {"IXp", r.IXp.generators().size()},
            {"ICp", r.ICp.generators().size()},
            {"IX", r.IX.generators().size()},
            {"IC", r.IC.generators().size()}}},
          {"timings", timings}};
}

std::string plan_table(const std::vector<LiaisonPlan>& plans) {
  std::ostringstream out;
  auto pair_text = [](const BidegreePair& p) { return to_string(p.first) + ", " + to_string(p.second); };
  out << std::setw(3) << "g" << " | " << std::setw(3) << "d" << " | " << std::setw(16) << "(a1,b1), (a2,b2)" << " | "
      << std::setw(3) << "g'" << " | " << std::setw(3) << "d'" << " | " << std::setw(20) << "(a1',b1'), (a2',b2')"
      << " | " << std::setw(3) << "l" << " | " << std::setw(3) << "d''" << '\n';
  for (const auto& p : plans)
    out << std::setw(3) << p.g << " | " << std::setw(3) << p.d << " | " << std::setw(16) << pair_text(p.fX) << " | "
        << std::setw(3) << p.g1 << " | " << std::setw(3) << p.d1.b << " | " << std::setw(20) << pair_text(p.fX1)
        << " | " << std::setw(3) << p.lines << " | " << std::setw(3) << p.d2.b << '\n';
  return out.str();
}

}  // namespace hurwitz
