#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

struct Bidegree {
  int a = 0;
  int b = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

using BidegreePair = std::pair<Bidegree, Bidegree>;

std::string to_string(const Bidegree& d);
std::string to_string(const BidegreePair& p);

class PlanError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// 5..28, 30, 31, 33, 35, 36, 40, 45.
const std::vector<int>& good_genera();
bool is_good_genus(int g);

/// ceil(2g/3) + 2.
int plane_degree(int g);

/// Expected h^0 of the ideal sheaf of a curve of genus g and bidegree d,
/// twisted by delta, on P^1 x P^2.
std::int64_t exp_h0_ideal(int g, Bidegree d, Bidegree delta);

/// Bidegrees of the two forms of a complete intersection containing the
/// curve, with fibre degree b.
BidegreePair ci_bidegrees(int g, Bidegree d, int b);

/// Bidegree and arithmetic genus of the curve linked to (d, g) by a complete
/// intersection of forms of bidegrees F and G.
Bidegree linked_degree(Bidegree d, Bidegree F, Bidegree G);
std::int64_t linked_genus(std::int64_t g, Bidegree d, Bidegree F, Bidegree G);
/// Arithmetic genus of the complete intersection itself.
std::int64_t complete_intersection_genus(Bidegree F, Bidegree G);

std::int64_t brill_noether_rho(std::int64_t g, std::int64_t r, std::int64_t d);

struct GaetaShape {
  int k = 0;
  int epsilon = 0;
  std::map<int, int> generators;  // degree -> count
  std::map<int, int> syzygies;    // degree -> count
  friend bool operator==(const GaetaShape&, const GaetaShape&) = default;
};

/// Minimal resolution shape of delta general points in P^2.
GaetaShape gaeta_shape(int delta);

/// ceil((2 d'' + 3 l) / 5) - 1.
int conic_floor(int d2, int lines);

/// One row of the construction's numerical data.
struct LiaisonPlan {
  int g = 0;
  int d = 0;             // plane degree; the curve has bidegree (6, d)
  BidegreePair fX;       // link between C and C'
  int g1 = 0;            // genus of the trigonal curve C'
  Bidegree d1;           // bidegree of C' = (3, d')
  int lines = 0;         // number of lines in C''
  BidegreePair fX1;      // link between C' and C''
  Bidegree d2;           // bidegree of the rational component of C''
  BidegreePair dRat;     // forms cutting out the rational curve
  int delta = 0;         // nodes of the plane model
  friend bool operator==(const LiaisonPlan&, const LiaisonPlan&) = default;
};

/// Throws PlanError (naming the nearest covered genera) for genera outside
/// good_genera().
LiaisonPlan derive_plan(int g);

}  // namespace hurwitz
