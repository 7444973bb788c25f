#include "hurwitz/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "hurwitz/binary_form.hpp"

namespace hurwitz {

using nlohmann::ordered_json;

namespace {

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

ordered_json degree_map(const std::map<int, std::int64_t>& m) {
  ordered_json j = ordered_json::object();
  for (const auto& [deg, count] : m) j[std::to_string(deg)] = count;
  return j;
}

ordered_json degree_map(const std::map<int, int>& m) {
  ordered_json j = ordered_json::object();
  for (const auto& [deg, count] : m) j[std::to_string(deg)] = count;
  return j;
}

ordered_json tally_json(const Ideal& ideal) {
  ordered_json j = ordered_json::array();
  for (const auto& [deg, count] : minimal_generator_degrees(ideal)) j.push_back({{"degree", deg}, {"count", count}});
  return j;
}

std::vector<int> y_variables(const PolyRing& ring) {
  std::vector<int> ys;
  for (const char* y : {"y0", "y1", "y2"}) {
    int v = ring.variable_index(y);
    if (v < 0) throw std::invalid_argument("ring lacks variable " + std::string(y));
    ys.push_back(v);
  }
  return ys;
}

// 2x2 minors of the matrix with rows d(f_i)/d(v_j)
std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& fs, const std::vector<int>& vars) {
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& f : fs) {
    std::vector<Polynomial> row;
    for (int v : vars) row.push_back(f.derivative(v));
    jac.push_back(std::move(row));
  }
  std::vector<Polynomial> minors;
  for (std::size_t i = 0; i < jac.size(); ++i)
    for (std::size_t k = i + 1; k < jac.size(); ++k)
      for (std::size_t a = 0; a < vars.size(); ++a)
        for (std::size_t b = a + 1; b < vars.size(); ++b) {
          Polynomial m = jac[i][a] * jac[k][b] - jac[i][b] * jac[k][a];
          if (!m.is_zero()) minors.push_back(std::move(m));
        }
  return minors;
}

Ideal maximal_ideal(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (int v = 0; v < ring->num_vars(); ++v) vars.push_back(Polynomial::variable(ring, v));
  return Ideal(ring, std::move(vars));
}

template <class Fn>
CheckRecord timed_check(const std::string& name, Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  CheckRecord rec;
  try {
    rec = fn();
  } catch (const std::exception& e) {
    rec = CheckRecord{};
    rec.pass = false;
    rec.measured["error"] = e.what();
  }
  rec.name = name;
  rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

}  // namespace

bool VerificationReport::verdict() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

const CheckRecord* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

CheckRecord max_rank_check(const Ideal& ic_sat, const LiaisonPlan& plan) {
  CheckRecord rec;
  rec.name = "max_rank";
  const int top = std::max(plan.fX.first.a, plan.fX.second.a) + 1;
  ordered_json measured = ordered_json::object(), expected = ordered_json::object();
  bool pass = true;
  for (int a = 1; a <= top; ++a) {
    MultiDegree deg{a, 3};
    auto sections = static_cast<std::int64_t>(monomial_basis(ic_sat.ring(), deg).size());
    std::int64_t h0 = sections - hilbert_function(ic_sat, deg);
    std::int64_t want = exp_h0_ideal(plan.g, {6, plan.d}, {a, 3});
    measured[std::to_string(a)] = h0;
    expected[std::to_string(a)] = want;
    pass = pass && h0 == want;
  }
  rec.measured["h0_ideal_a3"] = measured;
  rec.measured["mingens"] = tally_json(ic_sat);
  rec.expected["h0_ideal_a3"] = expected;
  rec.pass = pass;
  return rec;
}

Ideal plane_model(const Ideal& ic_sat) {
  return eliminate(ic_sat, 2, PolyRing::plane(ic_sat.ring().modulus()));
}

Ideal node_scheme(const Ideal& gamma) {
  std::vector<Polynomial> gens;
  for (const auto& f : gamma.generators()) {
    gens.push_back(f);
    for (int v = 0; v < gamma.ring().num_vars(); ++v) gens.push_back(f.derivative(v));
  }
  return Ideal(gamma.ring_ptr(), std::move(gens));
}

bool distinct_points_check(const Ideal& delta) {
  std::vector<int> vars;
  for (int v = 0; v < delta.ring().num_vars(); ++v) vars.push_back(v);
  std::vector<Polynomial> gens = jacobian_minors(delta.generators(), vars);
  gens.insert(gens.end(), delta.generators().begin(), delta.generators().end());
  return dimension_codim(Ideal(delta.ring_ptr(), std::move(gens))).codim == 3;
}

CheckRecord degree_genus_check(const Ideal& gamma, const Ideal& delta_sat, const LiaisonPlan& plan) {
  CheckRecord rec;
  rec.name = "plane_degree_genus";
  const auto principal = static_cast<std::int64_t>(gamma.minimal_generators().size());
  const std::int64_t d = multiplicity_degree(gamma);
  const std::int64_t delta = multiplicity_degree(delta_sat);
  const std::int64_t genus = choose2(d - 1) - delta;
  rec.measured = {{"generators", principal}, {"degree", d}, {"delta", delta}, {"genus", genus}};
  rec.expected = {{"generators", 1}, {"degree", plan.d}, {"delta", plan.delta}, {"genus", plan.g}};
  rec.pass = principal == 1 && d == plan.d && genus == plan.g && delta == plan.delta;
  return rec;
}

CheckRecord gaeta_check(const Ideal& delta_sat, std::int64_t delta) {
  CheckRecord rec;
  rec.name = "gaeta_resolution";
  BettiTable betti = betti_table(delta_sat);
  GaetaShape shape = gaeta_shape(static_cast<int>(delta));
  const std::int64_t measured_delta = multiplicity_degree(delta_sat);
  rec.measured = {{"delta", measured_delta},
                  {"generators", degree_map(betti.row(0))},
                  {"syzygies", degree_map(betti.row(1))},
                  {"length", betti.length() + 1}};
  rec.expected = {{"delta", delta},
                  {"k", shape.k},
                  {"epsilon", shape.epsilon},
                  {"generators", degree_map(shape.generators)},
                  {"syzygies", degree_map(shape.syzygies)},
                  {"length", 2}};
  bool same = betti.length() == 1 && measured_delta == delta;
  std::map<int, int> gens, syz;
  for (const auto& [deg, c] : betti.row(0)) gens[deg] = static_cast<int>(c);
  for (const auto& [deg, c] : betti.row(1)) syz[deg] = static_cast<int>(c);
  same = same && gens == shape.generators && syz == shape.syzygies;
  same = same && betti.total(1) == betti.total(0) - 1;
  rec.pass = same;
  return rec;
}

Ideal ramification_scheme(const Ideal& ic_sat, const Ideal& irrelevant) {
  const RingPtr& ring = ic_sat.ring_ptr();
  std::vector<Polynomial> cubics;
  for (const auto& f : ic_sat.minimal_generators())
    if (f.multidegree()[1] == 3) cubics.push_back(f);
  if (cubics.size() < 2)
    throw ConstructionError("ramification", "only " + std::to_string(cubics.size()) + " generators of y-degree 3");
  std::vector<Polynomial> gens = jacobian_minors(cubics, y_variables(*ring));
  gens.insert(gens.end(), cubics.begin(), cubics.end());
  return saturate(Ideal(ring, std::move(gens)), irrelevant);
}

bool smoothness_check(const Ideal& delta_sat, const Ideal& graph_b_sat, const Ideal& irrelevant, int probe) {
  const RingPtr& ring = graph_b_sat.ring_ptr();
  std::vector<int> ys = y_variables(*ring);
  std::vector<Polynomial> gens;
  for (const auto& f : delta_sat.generators()) gens.push_back(f.map_to(ring, ys));
  gens.insert(gens.end(), graph_b_sat.generators().begin(), graph_b_sat.generators().end());
  Ideal sing = saturate(Ideal(ring, std::move(gens)), irrelevant);
  return hilbert_function(sing, {probe, probe}) == 0;
}

BranchData branch_data(const Ideal& graph_b_sat) {
  const PolyRing& ring = graph_b_sat.ring();
  RingPtr binary = PolyRing::binary(ring.modulus());
  std::vector<int> var_map(static_cast<std::size_t>(ring.num_vars()), -1);
  var_map[static_cast<std::size_t>(ring.variable_index("x0"))] = 0;
  var_map[static_cast<std::size_t>(ring.variable_index("x1"))] = 1;
  std::vector<Polynomial> forms;
  for (const auto& f : graph_b_sat.minimal_generators())
    if (f.multidegree()[1] == 0) forms.push_back(f.map_to(binary, var_map));
  BranchData out;
  if (forms.empty()) return out;
  Polynomial f = binary_gcd(forms);
  if (f.is_zero()) return out;
  out.gcd_degree = f.lead_monomial().total_degree();
  out.squarefree_degree = squarefree_part(f).lead_monomial().total_degree();
  return out;
}

bool simple_branching_check(const Ideal& graph_b_sat, int g) {
  if (graph_b_sat.ring().modulus() <= static_cast<std::uint32_t>(2 * g + 10))
    throw std::invalid_argument("simple branching test needs p > 2g+10");
  return branch_data(graph_b_sat).squarefree_degree == 2 * g + 10;
}

VerificationReport verify_curve(const Ideal& ic_sat, const LiaisonPlan& plan, const VerifyOptions& options) {
  VerificationReport report;
  report.genus = plan.g;
  report.prime = ic_sat.ring().modulus();
  report.plan = plan;
  const Ideal irrelevant = irrelevant_ideal(ic_sat.ring_ptr(), options.strict_saturation);

  report.checks.push_back(timed_check("max_rank", [&] { return max_rank_check(ic_sat, plan); }));

  std::optional<Ideal> gamma, delta, delta_sat, graph_b;
  bool distinct = false;
  CheckRecord points = timed_check("distinct_points", [&] {
    gamma = plane_model(ic_sat);
    delta = node_scheme(*gamma);
    distinct = distinct_points_check(*delta);
    CheckRecord r;
    r.measured = {{"codim_singular_locus_of_delta", distinct ? 3 : -1}, {"reduced", distinct}};
    r.expected = {{"reduced", true}};
    r.pass = distinct;
    return r;
  });
  report.checks.push_back(points);

  report.checks.push_back(timed_check("plane_degree_genus", [&] {
    if (!gamma) throw std::runtime_error("no plane model");
    delta_sat = saturate(*delta, maximal_ideal(delta->ring_ptr()));
    return degree_genus_check(*gamma, *delta_sat, plan);
  }));

  CheckRecord gaeta = timed_check("gaeta_resolution", [&] {
    if (!delta_sat) throw std::runtime_error("no node scheme");
    return gaeta_check(*delta_sat, plan.delta);
  });
  report.checks.push_back(gaeta);

  const GaetaShape shape = gaeta_shape(plan.delta);
  report.checks.push_back(timed_check("irreducibility_preconditions", [&] {
    CheckRecord r;
    const bool bound = 2 * plan.delta <= plan.d * (plan.d - 3);
    r.measured = {{"delta", plan.delta}, {"delta_bound", plan.d * (plan.d - 3) / 2}, {"ordinary_nodes", distinct},
                  {"gaeta_resolution", gaeta.pass}};
    r.expected = {{"delta_le_bound", true}, {"ordinary_nodes", true}, {"gaeta_resolution", true}};
    r.pass = bound && distinct && gaeta.pass;
    return r;
  }));

  report.checks.push_back(timed_check("petri_smoothness", [&] {
    CheckRecord r;
    // injectivity of H^0(O(1)) x H^0(I(k)) -> H^0(I(k+1)) means no syzygies in degree k+1
    const bool no_linear_syzygies = 2 * shape.epsilon >= shape.k;
    const bool min_degree = shape.k == plan.d - 4;
    r.measured = {{"k", shape.k},
                  {"epsilon", shape.epsilon},
                  {"two_epsilon_le_k", 2 * shape.epsilon <= shape.k},
                  {"two_epsilon_ge_k", no_linear_syzygies},
                  {"k_equals_d_minus_4", min_degree},
                  {"gaeta_resolution", gaeta.pass}};
    r.expected = {{"two_epsilon_ge_k", true}, {"k_equals_d_minus_4", true}, {"gaeta_resolution", true}};
    r.pass = no_linear_syzygies && min_degree && gaeta.pass;
    return r;
  }));

  report.checks.push_back(timed_check("curve_smoothness", [&] {
    graph_b = ramification_scheme(ic_sat, irrelevant);
    if (!delta_sat) throw std::runtime_error("no node scheme");
    CheckRecord r;
    const bool smooth = smoothness_check(*delta_sat, *graph_b, irrelevant, options.probe);
    r.measured = {{"probe", {options.probe, options.probe}}, {"nodes_meet_ramification", !smooth}};
    r.expected = {{"nodes_meet_ramification", false}};
    r.pass = smooth;
    return r;
  }));

  report.checks.push_back(timed_check("simple_branching", [&] {
    if (!graph_b) graph_b = ramification_scheme(ic_sat, irrelevant);
    CheckRecord r;
    BranchData b = branch_data(*graph_b);
    r.measured = {{"gcd_degree", b.gcd_degree}, {"squarefree_degree", b.squarefree_degree}};
    r.expected = {{"squarefree_degree", 2 * plan.g + 10}};
    r.pass = simple_branching_check(*graph_b, plan.g);
    return r;
  }));
  return report;
}

VerificationReport verify_all(const ConstructionResult& result, const VerifyOptions& options) {
  VerificationReport report = verify_curve(result.IC, result.plan, options);
  report.seed = result.seed;
  return report;
}

}  // namespace hurwitz
