#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/field.hpp"
#include "hurwitz/ideal.hpp"
#include "hurwitz/liaison.hpp"

namespace hurwitz {

struct PipelineOptions {
  bool strict_saturation = false;  // saturate by all six x_i*y_j instead of x0*y0
  int max_retries = 5;
  int probe = 40;                  // Hilbert polynomial probe bidegree (N,N)
};

/// A generic-position assumption failed; `stage` names the step.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct CurveMeasure {
  Bidegree bidegree;
  std::int64_t genus = 0;
  friend bool operator==(const CurveMeasure&, const CurveMeasure&) = default;
};

struct StageTiming {
  std::string stage;
  double millis = 0;
};

struct ConstructionResult {
  LiaisonPlan plan;
  std::uint32_t prime = 0;
  std::string seed;
  int attempts = 0;  // 1 when the first draw succeeded
  Ideal IC2;         // C'' = rational curve + lines, saturated
  Ideal IXp;         // complete intersection linking C'' and C'
  Ideal ICp_raw;
  Ideal ICp;         // trigonal curve, saturated
  Ideal IX;          // complete intersection linking C' and C
  Ideal IC_raw;
  Ideal IC;          // the 6-gonal curve, saturated
  CurveMeasure measured_C2, measured_Cp, measured_C;
  std::vector<StageTiming> timings;
  std::vector<std::string> failures;  // one line per discarded attempt
};

/// <x0*y0>, or the six products x_i*y_j when strict.
Ideal irrelevant_ideal(const RingPtr& ring, bool strict);

/// Saturated ideal of the complete intersection of two random forms of the
/// given bidegrees (saturated by all six x_i*y_j).
Ideal random_rational_curve(const RingPtr& ring, const BidegreePair& dRat, SeededRng& rng);

/// Ideals <random (1,0)-form, random (0,1)-form>, one per line.
std::vector<Ideal> random_lines(const RingPtr& ring, int count, SeededRng& rng);

/// Saturation of the intersection of the components.
Ideal union_curve(std::span<const Ideal> components, const Ideal& irrelevant);

/// Two forms sum_j h_ij g_j over the minimal generators g_j of the ideal, with
/// random coefficient forms h_ij of complementary bidegree. Throws
/// ConstructionError unless they cut out a complete intersection of codim 2.
Ideal random_ci_in(const Ideal& ideal, const BidegreePair& degs, SeededRng& rng);

struct LinkResult {
  Ideal raw;
  Ideal saturated;
};

/// Successive quotients of the complete intersection by the components, then
/// saturation.
LinkResult link(const Ideal& ci, std::span<const Ideal> components, const Ideal& irrelevant);

/// Bidegree and arithmetic genus read off the Hilbert polynomial
/// h(a,b) = d1*a + d2*b + 1 - g at (N,N), (N+1,N), (N,N+1).
CurveMeasure measure_curve(const Ideal& saturated, int probe);

ConstructionResult construct(int g, std::uint32_t p, const std::string& seed, const PipelineOptions& options = {});

/// Writes IC2.txt, IXp.txt, ICp.txt, IX.txt and IC.txt into `dir`.
void dump_ideals(const ConstructionResult& result, const std::string& dir);

}  // namespace hurwitz
