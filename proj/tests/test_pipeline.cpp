#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hurwitz/homological.hpp"
#include "hurwitz/pipeline.hpp"

using namespace hurwitz;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("pipeline") {
  TEST_CASE("irrelevant ideal") {
    auto R = PolyRing::bigraded(101);
    CHECK(irrelevant_ideal(R, false).generators().size() == 1);
    CHECK(irrelevant_ideal(R, false).generators()[0] == Polynomial::parse(R, "x0*y0"));
    CHECK(irrelevant_ideal(R, true).generators().size() == 6);
  }

  TEST_CASE("lines") {
    auto R = PolyRing::bigraded(32009);
    SeededRng rng("lines");
    auto lines = random_lines(R, 3, rng);
    REQUIRE(lines.size() == 3);
    for (const auto& l : lines) {
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) CHECK(hilbert_function(l, {a, b}) == b + 1);
      CurveMeasure m = measure_curve(l, 40);
      CHECK(m.bidegree == Bidegree{0, 1});
      CHECK(m.genus == 0);
    }
    CHECK(random_lines(R, 0, rng).empty());
  }

  TEST_CASE("rational curve") {
    auto R = PolyRing::bigraded(32009);
    SeededRng rng("rational");
    // forms of bidegree (a1,1), (a2,1) cut the graph of a rational curve of degree a1 + a2
    for (auto dRat : {BidegreePair{{1, 1}, {1, 1}}, BidegreePair{{2, 1}, {1, 1}}, BidegreePair{{4, 1}, {3, 1}}}) {
      Ideal c = random_rational_curve(R, dRat, rng);
      CurveMeasure m = measure_curve(c, 40);
      CHECK(m.bidegree == Bidegree{1, dRat.first.a + dRat.second.a});
      CHECK(m.genus == 0);
      CHECK(dimension_codim(c).codim == 2);
    }
  }

  TEST_CASE("union of lines has genus 1 - components") {
    auto R = PolyRing::bigraded(32009);
    SeededRng rng("union");
    auto lines = random_lines(R, 4, rng);
    Ideal u = union_curve(lines, irrelevant_ideal(R, false));
    CurveMeasure m = measure_curve(u, 40);
    CHECK(m.bidegree == Bidegree{0, 4});
    CHECK(m.genus == -3);
  }

  TEST_CASE("complete intersections inside an ideal") {
    auto R = PolyRing::bigraded(32009);
    SeededRng rng("ci");
    auto lines = random_lines(R, 2, rng);
    Ideal u = union_curve(lines, irrelevant_ideal(R, false));
    Ideal ci = random_ci_in(u, {{1, 1}, {1, 1}}, rng);
    CHECK(ci.generators().size() == 2);
    CHECK(u.contains_ideal(ci));
    CHECK(dimension_codim(ci).codim == 2);
    // a principal ideal cannot contain a complete intersection
    Ideal principal(R, {random_form(R, {1, 1}, rng)});
    CHECK_THROWS_AS(random_ci_in(principal, {{2, 1}, {1, 2}}, rng), ConstructionError);
    CHECK_THROWS_AS(random_ci_in(u, {{0, 0}, {1, 1}}, rng), ConstructionError);
  }

  TEST_CASE("link by no components is the saturation") {
    auto R = PolyRing::bigraded(32009);
    SeededRng rng("link0");
    Ideal ci(R, {random_form(R, {1, 2}, rng), random_form(R, {2, 1}, rng)});
    LinkResult r = link(ci, {}, irrelevant_ideal(R, false));
    CHECK(r.raw.equals(ci));
    CHECK(r.saturated.equals(saturate(ci, irrelevant_ideal(R, false))));
  }

  TEST_CASE("linking two lines through a complete intersection") {
    auto R = PolyRing::bigraded(32009);
    SeededRng rng("link2");
    auto lines = random_lines(R, 2, rng);
    Ideal irr = irrelevant_ideal(R, false);
    Ideal u = union_curve(lines, irr);
    BidegreePair F{{2, 1}, {1, 2}};
    Ideal ci = random_ci_in(u, F, rng);
    LinkResult res = link(ci, lines, irr);
    CurveMeasure m = measure_curve(res.saturated, 40);
    Bidegree expect = linked_degree({0, 2}, F.first, F.second);
    CHECK(m.bidegree == expect);
    CHECK(m.genus == linked_genus(-1, {0, 2}, F.first, F.second));
    // linking back recovers the two lines
    LinkResult back = link(ci, std::vector<Ideal>{res.saturated}, irr);
    CHECK(back.saturated.equals(u));
  }

  TEST_CASE("construction for genus 6") {
    ConstructionResult r = construct(6, 32009, "HurwitzSpaces");
    CHECK(r.attempts >= 1);
    CHECK(r.attempts <= 5);
    CHECK(r.measured_C == CurveMeasure{{6, 6}, 6});
    CHECK(r.measured_Cp == CurveMeasure{{3, 3}, 0});
    CHECK(r.measured_C2 == CurveMeasure{{1, 1}, -1});
    CHECK(r.IX.generators().size() == 2);
    CHECK(r.IXp.generators().size() == 2);
    CHECK(r.ICp.contains_ideal(r.IX));
    CHECK(r.IC.contains_ideal(r.IX));
    CHECK(r.IC2.contains_ideal(r.IXp));
    CHECK(r.failures.size() == static_cast<std::size_t>(r.attempts - 1));
  }

  TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(construct(29, 32009, "x"), PlanError);
    CHECK_THROWS(construct(6, 21, "x"));
    CHECK_THROWS(construct(6, 22, "x"));
  }

  TEST_CASE("construction is deterministic") {
    ConstructionResult a = construct(6, 101, "X");
    ConstructionResult b = construct(6, 101, "X");
    CHECK(format_ideal(a.IC) == format_ideal(b.IC));
    CHECK(format_ideal(a.IX) == format_ideal(b.IX));
    auto dir = std::filesystem::temp_directory_path() / "hurwitz_pipeline_dump";
    std::filesystem::remove_all(dir);
    dump_ideals(a, dir.string());
    for (const char* f : {"IC2.txt", "IXp.txt", "ICp.txt", "IX.txt", "IC.txt"}) CHECK(std::filesystem::exists(dir / f));
    CHECK(read_ideal_file((dir / "IC.txt").string()).equals(a.IC));
    CHECK(slurp(dir / "IC.txt") == format_ideal(a.IC));
    std::filesystem::remove_all(dir);
  }
}
