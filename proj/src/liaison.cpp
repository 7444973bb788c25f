#include "hurwitz/liaison.hpp"

#include <algorithm>
#include <cstdlib>

namespace hurwitz {

namespace {

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw PlanError(what);
}

}  // namespace

std::string to_string(const Bidegree& d) { return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")"; }

std::string to_string(const BidegreePair& p) { return to_string(p.first) + "," + to_string(p.second); }

const std::vector<int>& good_genera() {
  static const std::vector<int> list = [] {
    std::vector<int> v;
    for (int g = 5; g <= 28; ++g) v.push_back(g);
    for (int g : {30, 31, 33, 35, 36, 40, 45}) v.push_back(g);
    return v;
  }();
  return list;
}

bool is_good_genus(int g) {
  const auto& l = good_genera();
  return std::binary_search(l.begin(), l.end(), g);
}

int plane_degree(int g) { return static_cast<int>(ceil_div(2 * g, 3)) + 2; }

std::int64_t exp_h0_ideal(int g, Bidegree d, Bidegree delta) {
  std::int64_t a = delta.a, b = delta.b;
  std::int64_t sections = (a + 1) * (b + 2) * (b + 1) / 2;
  std::int64_t chi = a * d.a + b * d.b + 1 - g;
  return std::max<std::int64_t>(0, sections - chi);
}

BidegreePair ci_bidegrees(int g, Bidegree d, int b) {
  require(b >= 1, "fibre degree must be positive");
  const int limit = 64 + 4 * std::abs(g) + 4 * (d.a + d.b);
  for (int a = 0; a <= limit; ++a) {
    std::int64_t h = exp_h0_ideal(g, d, {a, b});
    if (h == 0) continue;
    if (h == 1) return {{a + 1, b}, {a, b}};
    return {{a, b}, {a, b}};
  }
  throw PlanError("no twist (a," + std::to_string(b) + ") with expected sections for genus " + std::to_string(g) +
                  " and bidegree " + to_string(d));
}

Bidegree linked_degree(Bidegree d, Bidegree F, Bidegree G) {
  Bidegree out{F.b * G.b - d.a, F.a * G.b + G.a * F.b - d.b};
  require(out.a >= 0 && out.b >= 0, "linked bidegree " + to_string(out) + " is negative: " + to_string(d) +
                                        " does not fit in a complete intersection of type " + to_string({F, G}));
  return out;
}

std::int64_t complete_intersection_genus(Bidegree F, Bidegree G) {
  return static_cast<std::int64_t>(F.a + G.a - 1) * choose2(F.b + G.b - 1) -
         static_cast<std::int64_t>(F.a - 1) * choose2(F.b - 1) - static_cast<std::int64_t>(G.a - 1) * choose2(G.b - 1);
}

std::int64_t linked_genus(std::int64_t g, Bidegree d, Bidegree F, Bidegree G) {
  linked_degree(d, F, G);
  return complete_intersection_genus(F, G) - static_cast<std::int64_t>(d.a) * (F.a + G.a - 2) -
         static_cast<std::int64_t>(d.b) * (F.b + G.b - 3) - 1 + g;
}

std::int64_t brill_noether_rho(std::int64_t g, std::int64_t r, std::int64_t d) { return g - (r + 1) * (g - d + r); }

GaetaShape gaeta_shape(int delta) {
  require(delta >= 1, "gaeta_shape needs at least one point");
  GaetaShape s;
  int k = 0;
  while ((k + 2) * (k + 1) / 2 <= delta) ++k;
  s.k = k;
  s.epsilon = delta - k * (k + 1) / 2;
  const int e = s.epsilon;
  if (2 * e <= k) {
    s.generators[k] = k + 1 - e;
    if (k - 2 * e > 0) s.syzygies[k + 1] = k - 2 * e;
    if (e > 0) s.syzygies[k + 2] = e;
  } else {
    s.generators[k] = k + 1 - e;
    s.generators[k + 1] = 2 * e - k;
    s.syzygies[k + 2] = e;
  }
  for (auto* m : {&s.generators, &s.syzygies})
    std::erase_if(*m, [](const auto& kv) { return kv.second == 0; });
  return s;
}

int conic_floor(int d2, int lines) { return static_cast<int>(ceil_div(2 * d2 + 3 * lines, 5)) - 1; }

LiaisonPlan derive_plan(int g) {
  if (!is_good_genus(g)) {
    const auto& l = good_genera();
    auto it = std::lower_bound(l.begin(), l.end(), g);
    std::string near;
    if (it != l.begin()) near += std::to_string(*std::prev(it));
    if (it != l.end()) near += (near.empty() ? "" : " and ") + std::to_string(*it);
    throw PlanError("genus " + std::to_string(g) + " is not covered by the construction; nearest covered genera: " +
                    near);
  }
  LiaisonPlan p;
  p.g = g;
  p.d = plane_degree(g);
  const Bidegree dC{6, p.d};
  p.fX = ci_bidegrees(g, dC, 3);
  p.d1 = linked_degree(dC, p.fX.first, p.fX.second);
  p.g1 = static_cast<int>(linked_genus(g, dC, p.fX.first, p.fX.second));
  p.lines = p.d1.b - p.g1 - 2;
  require(p.lines >= 0, "negative number of lines");
  p.fX1 = ci_bidegrees(p.g1, p.d1, 2);
  p.d2 = linked_degree({p.d1.a, p.d1.b + p.lines}, p.fX1.first, p.fX1.second);
  p.dRat = {{static_cast<int>(ceil_div(p.d2.b, 2)), 1}, {static_cast<int>(floor_div(p.d2.b, 2)), 1}};
  p.delta = static_cast<int>(choose2(p.d - 1)) - g;

  require(p.d1.a == 3, "linked curve is not trigonal");
  require(conic_floor(p.d2.b, p.lines) <= std::min(p.fX1.first.a, p.fX1.second.a),
          "conic forms of the union curve start above the linking degree");
  require(2 * p.delta <= p.d * (p.d - 3), "too many nodes for an irreducible plane curve");
  return p;
}

}  // namespace hurwitz
