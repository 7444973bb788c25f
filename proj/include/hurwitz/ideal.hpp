#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/groebner.hpp"
#include "hurwitz/poly.hpp"

namespace hurwitz {

/// Homogeneous ideal given by generators, with Groebner bases computed on
/// demand and cached per monomial order.
///
/// Copies share the mutex-protected cache.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> gens = {});

  const RingPtr& ring_ptr() const { return ring_; }
  const PolyRing& ring() const { return *ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  /// Reduced GB in the ring's own order.
  const std::vector<Polynomial>& groebner_basis() const;
  /// Reduced GB in another order; polynomials live in ring().with_order(order).
  std::vector<Polynomial> groebner_basis(const MonomialOrder& order) const;

  /// Minimal homogeneous generators, sorted by (multidegree, lead monomial).
  const std::vector<Polynomial>& minimal_generators() const;
  /// Same ideal presented by its minimal generators.
  Ideal trim() const;

  bool is_unit() const;
  bool is_zero() const;
  bool contains(const Polynomial& f) const;
  /// Same ideal (compares reduced GBs).
  bool equals(const Ideal& other) const;
  bool contains_ideal(const Ideal& other) const;

  Ideal operator+(const Ideal& other) const;

 private:
  struct Cache {
    std::mutex mutex;
    bool have_gb = false;
    std::vector<Polynomial> gb;
    bool have_mingens = false;
    std::vector<Polynomial> mingens;
    std::vector<std::pair<MonomialOrder, std::vector<Polynomial>>> other_orders;
  };
  void compute_default() const;

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// f in I iff normal_form(f, GB(I)) == 0.
bool ideal_member(const Polynomial& f, const Ideal& ideal);

/// I ∩ J: eliminate t from t*I + (1-t)*J in ring ⊗ K[t] (t of degree zero).
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(std::span<const Ideal> ideals);

/// I : J as the intersection of I : g over the generators g of J.
Ideal ideal_quotient(const Ideal& ideal, const Ideal& by);
/// I : g. Monomials go through variable-by-variable division of a reverse-lex
/// basis with that variable last; other g through (I ∩ <g>) / g.
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& g);

/// I : J^∞ as the intersection of I : g^∞ over the generators g of J.
Ideal saturate(const Ideal& ideal, const Ideal& by);
/// I : g^∞; iterated quotient until stable.
Ideal saturate(const Ideal& ideal, const Polynomial& g);

/// I ∩ K[last n-k variables], returned in `target` (a ring over exactly those
/// variables, same names). Uses the Eliminate(k) order.
Ideal eliminate(const Ideal& ideal, int block, const RingPtr& target);

/// Degree tally of a minimal generating set, sorted by multidegree.
std::vector<std::pair<MultiDegree, int>> minimal_generator_degrees(const Ideal& ideal);

/// Maps generators along a variable map (see Polynomial::map_to).
Ideal map_ideal(const Ideal& ideal, const RingPtr& target, std::span<const int> var_map);

/// Ideal text format: ring header line, then one polynomial per line.
std::string format_ideal(const Ideal& ideal);
Ideal parse_ideal(std::string_view text);
void write_ideal_file(const std::string& path, const Ideal& ideal);
Ideal read_ideal_file(const std::string& path);

}  // namespace hurwitz
