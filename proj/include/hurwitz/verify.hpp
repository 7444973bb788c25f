#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hurwitz/homological.hpp"
#include "hurwitz/ideal.hpp"
#include "hurwitz/liaison.hpp"
#include "hurwitz/pipeline.hpp"
#include "json.hpp"

namespace hurwitz {

struct CheckRecord {
  std::string name;
  bool pass = false;
  nlohmann::ordered_json measured = nlohmann::ordered_json::object();
  nlohmann::ordered_json expected = nlohmann::ordered_json::object();
  double millis = 0;
};

struct VerificationReport {
  int genus = 0;
  std::uint32_t prime = 0;
  std::string seed;
  LiaisonPlan plan;
  std::vector<CheckRecord> checks;

  bool verdict() const;
  const CheckRecord* find(const std::string& name) const;
};

struct VerifyOptions {
  bool strict_saturation = false;
  int probe = 40;  // emptiness probe bidegree (N,N)
};

/// h^0(I_C(a,3)) against the expected count for a = 1 .. max a of fX + 1.
CheckRecord max_rank_check(const Ideal& ic_sat, const LiaisonPlan& plan);

/// Image of the curve in P^2: elimination of x0, x1, in K[y0,y1,y2].
Ideal plane_model(const Ideal& ic_sat);

/// The form together with its three partial derivatives.
Ideal node_scheme(const Ideal& gamma);

/// The scheme is reduced: 2x2 minors of the Jacobian plus the ideal have codim 3.
bool distinct_points_check(const Ideal& delta);

/// Degree of the plane model and its geometric genus binom(d-1,2) - deg(Delta).
CheckRecord degree_genus_check(const Ideal& gamma, const Ideal& delta_sat, const LiaisonPlan& plan);

/// The Betti table of the node scheme matches gaeta_shape(delta).
CheckRecord gaeta_check(const Ideal& delta_sat, std::int64_t delta);

/// Saturation of the 2x2 minors of the y-Jacobian of the minimal generators
/// of y-degree 3, plus those generators.
Ideal ramification_scheme(const Ideal& ic_sat, const Ideal& irrelevant);

/// No fibre over the branch points meets the preimage of a node.
bool smoothness_check(const Ideal& delta_sat, const Ideal& graph_b_sat, const Ideal& irrelevant, int probe = 40);

struct BranchData {
  int gcd_degree = -1;         // -1 when there is no y-free generator
  int squarefree_degree = -1;
};
BranchData branch_data(const Ideal& graph_b_sat);
/// The branch divisor is reduced of degree 2g+10.
bool simple_branching_check(const Ideal& graph_b_sat, int g);

VerificationReport verify_curve(const Ideal& ic_sat, const LiaisonPlan& plan, const VerifyOptions& options = {});
VerificationReport verify_all(const ConstructionResult& result, const VerifyOptions& options = {});

}  // namespace hurwitz
