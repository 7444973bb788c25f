#include "hurwitz/pipeline.hpp"

#include <chrono>
#include <filesystem>

#include "hurwitz/homological.hpp"

namespace hurwitz {

namespace {

Polynomial product(const RingPtr& ring, int i, int j) {
  return Polynomial::variable(ring, i) * Polynomial::variable(ring, j);
}

void expect_measure(const std::string& stage, const CurveMeasure& got, Bidegree bidegree, std::int64_t genus) {
  if (got.bidegree != bidegree || got.genus != genus)
    throw ConstructionError(stage, "curve has bidegree " + to_string(got.bidegree) + " and genus " +
                                       std::to_string(got.genus) + ", expected " + to_string(bidegree) +
                                       " and genus " + std::to_string(genus));
}

MultiDegree minus(const Bidegree& d, const MultiDegree& e) { return {d.a - e[0], d.b - e[1]}; }

}  // namespace

Ideal irrelevant_ideal(const RingPtr& ring, bool strict) {
  const int x0 = ring->variable_index("x0"), y0 = ring->variable_index("y0");
  if (!strict) return Ideal(ring, {product(ring, x0, y0)});
  std::vector<Polynomial> gens;
  for (const char* x : {"x0", "x1"})
    for (const char* y : {"y0", "y1", "y2"}) gens.push_back(product(ring, ring->variable_index(x), ring->variable_index(y)));
  return Ideal(ring, std::move(gens));
}

Ideal random_rational_curve(const RingPtr& ring, const BidegreePair& dRat, SeededRng& rng) {
  const Ideal m = irrelevant_ideal(ring, true);
  for (int draw = 0; draw < 3; ++draw) {
    Ideal ci(ring, {random_form(ring, {dRat.first.a, dRat.first.b}, rng),
                    random_form(ring, {dRat.second.a, dRat.second.b}, rng)});
    if (ci.generators().size() == 2 && dimension_codim(ci).codim == 2) return saturate(ci, m);
  }
  throw ConstructionError("rational curve", "random forms of bidegrees " + to_string(dRat) +
                                                " keep failing to intersect properly");
}

std::vector<Ideal> random_lines(const RingPtr& ring, int count, SeededRng& rng) {
  std::vector<Ideal> lines;
  for (int k = 0; k < count; ++k) {
    Polynomial point = random_form(ring, {1, 0}, rng);
    Polynomial line = random_form(ring, {0, 1}, rng);
    lines.emplace_back(ring, std::vector<Polynomial>{point, line});
  }
  return lines;
}

Ideal union_curve(std::span<const Ideal> components, const Ideal& irrelevant) {
  return saturate(ideal_intersect(components), irrelevant);
}

Ideal random_ci_in(const Ideal& ideal, const BidegreePair& degs, SeededRng& rng) {
  const RingPtr& ring = ideal.ring_ptr();
  const auto& gens = ideal.minimal_generators();
  std::vector<Polynomial> forms;
  for (const Bidegree& target : {degs.first, degs.second}) {
    Polynomial f(ring);
    for (const auto& g : gens) {
      MultiDegree rest = minus(target, g.multidegree());
      if (rest[0] < 0 || rest[1] < 0) continue;
      f = f + random_form(ring, rest, rng) * g;
    }
    if (f.is_zero()) throw ConstructionError("complete intersection", "ideal has no forms of bidegree " + to_string(target));
    if (!ideal.contains(f)) throw std::logic_error("combination of generators left the ideal");
    forms.push_back(std::move(f));
  }
  Ideal ci(ring, std::move(forms));
  if (dimension_codim(ci).codim != 2)
    throw ConstructionError("complete intersection", "forms of bidegrees " + to_string(degs) + " have codimension " +
                                                         std::to_string(dimension_codim(ci).codim));
  return ci;
}

LinkResult link(const Ideal& ci, std::span<const Ideal> components, const Ideal& irrelevant) {
  Ideal raw = ci;
  for (const auto& c : components) raw = ideal_quotient(raw, c);
  return {raw, saturate(raw, irrelevant)};
}

CurveMeasure measure_curve(const Ideal& saturated, int probe) {
  const std::int64_t n = probe;
  std::int64_t h = hilbert_function(saturated, {probe, probe});
  std::int64_t d1 = hilbert_function(saturated, {probe + 1, probe}) - h;
  std::int64_t d2 = hilbert_function(saturated, {probe, probe + 1}) - h;
  std::int64_t chi = h - n * d1 - n * d2;
  return {{static_cast<int>(d1), static_cast<int>(d2)}, 1 - chi};
}

ConstructionResult construct(int g, std::uint32_t p, const std::string& seed, const PipelineOptions& options) {
  const LiaisonPlan plan = derive_plan(g);
  if (!is_prime(p) || p == 2) throw std::invalid_argument("modulus must be an odd prime");
  if (p <= static_cast<std::uint32_t>(2 * g + 10))
    throw std::invalid_argument("prime must exceed 2g+10 = " + std::to_string(2 * g + 10));
  const RingPtr ring = PolyRing::bigraded(p);
  const Ideal irrelevant = irrelevant_ideal(ring, options.strict_saturation);
  const SeededRng base(seed);
  std::vector<std::string> failures;

  for (int attempt = 1; attempt <= options.max_retries; ++attempt) {
    SeededRng rng = base.derive("attempt-" + std::to_string(attempt));
    std::vector<StageTiming> timings;
    auto timed = [&timings](const std::string& name, auto&& fn) {
      auto t0 = std::chrono::steady_clock::now();
      auto out = fn();
      timings.push_back({name, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count()});
      return out;
    };
    try {
      SeededRng rat_rng = rng.derive("rational");
      SeededRng line_rng = rng.derive("lines");
      SeededRng ci1_rng = rng.derive("trigonal-ci");
      SeededRng ci2_rng = rng.derive("final-ci");

      Ideal rational = timed("rational", [&] { return random_rational_curve(ring, plan.dRat, rat_rng); });
      std::vector<Ideal> lines = random_lines(ring, plan.lines, line_rng);
      std::vector<Ideal> parts = lines;
      parts.push_back(rational);
      Ideal ic2 = timed("union", [&] { return union_curve(parts, irrelevant); });
      CurveMeasure m2 = measure_curve(ic2, options.probe);
      expect_measure("union", m2, {1, plan.d2.b + plan.lines}, -plan.lines);

      Ideal ixp = timed("trigonal-ci", [&] { return random_ci_in(ic2, plan.fX1, ci1_rng); });
      std::vector<Ideal> residual{rational};
      residual.insert(residual.end(), lines.begin(), lines.end());
      LinkResult trig = timed("trigonal-link", [&] { return link(ixp, residual, irrelevant); });
      CurveMeasure mp = measure_curve(trig.saturated, options.probe);
      expect_measure("trigonal-link", mp, plan.d1, plan.g1);

      Ideal ix = timed("final-ci", [&] { return random_ci_in(trig.saturated, plan.fX, ci2_rng); });
      std::vector<Ideal> trig_part{trig.saturated};
      LinkResult fin = timed("final-link", [&] { return link(ix, trig_part, irrelevant); });
      CurveMeasure mc = measure_curve(fin.saturated, options.probe);
      expect_measure("final-link", mc, {6, plan.d}, plan.g);

      return ConstructionResult{.plan = plan,
                                .prime = p,
                                .seed = seed,
                                .attempts = attempt,
                                .IC2 = ic2,
                                .IXp = ixp,
                                .ICp_raw = trig.raw,
                                .ICp = trig.saturated,
                                .IX = ix,
                                .IC_raw = fin.raw,
                                .IC = fin.saturated,
                                .measured_C2 = m2,
                                .measured_Cp = mp,
                                .measured_C = mc,
                                .timings = std::move(timings),
                                .failures = failures};
    } catch (const ConstructionError& e) {
      failures.push_back("attempt " + std::to_string(attempt) + ": " + e.what());
    }
  }
  std::string msg = "all " + std::to_string(options.max_retries) + " attempts failed";
  for (const auto& f : failures) msg += "; " + f;
  throw ConstructionError("construct", msg);
}

void dump_ideals(const ConstructionResult& result, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  write_ideal_file((base / "IC2.txt").string(), result.IC2);
  write_ideal_file((base / "IXp.txt").string(), result.IXp);
  write_ideal_file((base / "ICp.txt").string(), result.ICp);
  write_ideal_file((base / "IX.txt").string(), result.IX);
  write_ideal_file((base / "IC.txt").string(), result.IC);
}

}  // namespace hurwitz
