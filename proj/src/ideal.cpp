#include "hurwitz/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace hurwitz {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    require_same_ring(g.ring(), *ring_);
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("ideal generator is not homogeneous: " + g.to_string());
    gens_.push_back(std::move(g));
  }
}

void Ideal::compute_default() const {
  // caller holds the lock
  GroebnerResult res = compute_groebner(ring_, gens_);
  cache_->gb = std::move(res.basis);
  cache_->have_gb = true;
  std::vector<Polynomial> mins;
  for (std::size_t k : res.minimal_inputs) mins.push_back(gens_[k]);
  const PolyRing& r = *ring_;
  std::stable_sort(mins.begin(), mins.end(), [&r](const Polynomial& a, const Polynomial& b) {
    MultiDegree da = a.multidegree(), db = b.multidegree();
    if (da != db) return da < db;
    return r.greater(b.lead_monomial(), a.lead_monomial());
  });
  cache_->mingens = std::move(mins);
  cache_->have_mingens = true;
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->have_gb) compute_default();
  return cache_->gb;
}

std::vector<Polynomial> Ideal::groebner_basis(const MonomialOrder& order) const {
  if (order == ring_->order()) return groebner_basis();
  std::lock_guard lock(cache_->mutex);
  for (const auto& [o, gb] : cache_->other_orders)
    if (o == order) return gb;
  RingPtr target = ring_->with_order(order);
  std::vector<Polynomial> mapped;
  mapped.reserve(gens_.size());
  for (const auto& g : gens_) mapped.push_back(g.in_ring(target));
  auto gb = compute_groebner(target, mapped).basis;
  cache_->other_orders.emplace_back(order, gb);
  return gb;
}

const std::vector<Polynomial>& Ideal::minimal_generators() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->have_mingens) compute_default();
  return cache_->mingens;
}

Ideal Ideal::trim() const {
  Ideal out(ring_, minimal_generators());
  std::lock_guard lock(cache_->mutex);
  out.cache_->gb = cache_->gb;
  out.cache_->have_gb = true;
  out.cache_->mingens = cache_->mingens;
  out.cache_->have_mingens = true;
  return out;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero();
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(f.ring(), *ring_);
  return normal_form(f, groebner_basis()).is_zero();
}

bool Ideal::equals(const Ideal& other) const {
  require_same_ring(*ring_, other.ring());
  const auto& a = groebner_basis();
  const auto& b = other.groebner_basis();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool Ideal::contains_ideal(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

Ideal Ideal::operator+(const Ideal& other) const {
  require_same_ring(*ring_, other.ring());
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(g));
}

bool ideal_member(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

// ------------------------------------------------------------ intersection

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const RingPtr& ring = a.ring_ptr();
  if (a.is_zero() || b.is_zero()) return Ideal(ring);
  RingPtr aux = ring->with_ghost_variable("t_aux");
  const int n = ring->num_vars();
  std::vector<int> up(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> down(static_cast<std::size_t>(n + 1));
  down[0] = -1;
  for (int i = 0; i < n; ++i) down[static_cast<std::size_t>(i + 1)] = i;

  Polynomial t = Polynomial::variable(aux, 0);
  Polynomial one_minus_t = Polynomial::constant(aux, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * g.map_to(aux, up));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.map_to(aux, up));
  GroebnerResult gb = compute_groebner(aux, gens);
  std::vector<Polynomial> out;
  for (const auto& g : gb.basis)
    if (g.lead_monomial()[0] == 0) out.push_back(g.map_to(ring, down));
  return Ideal(ring, std::move(out));
}

Ideal ideal_intersect(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of no ideals");
  Ideal acc = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k) acc = ideal_intersect(acc, ideals[k]);
  return acc;
}

// ------------------------------------------------------ quotient/saturation

namespace {

MonomialOrder revlex_last(int var) { return MonomialOrder::grevlex().with_last_variable(var); }

// I : v^k for k = 1, or I : v^∞ when `saturate` is set.
Ideal divide_out_variable(const Ideal& ideal, int var, bool saturate) {
  const RingPtr& ring = ideal.ring_ptr();
  if (ideal.is_zero()) return ideal;
  for (int v = 0; v < ring->num_vars(); ++v)
    if (ring->heft(v) == 0) throw std::invalid_argument("variable quotient in a ring with a degree-zero variable");
  std::vector<Polynomial> gb = ideal.groebner_basis(revlex_last(var));
  std::vector<Polynomial> out;
  out.reserve(gb.size());
  for (const auto& g : gb) {
    int k = g.lead_monomial()[var];
    if (!saturate) k = std::min(k, 1);
    Polynomial h = g;
    if (k > 0) {
      Monomial m;
      m.set(var, k);
      std::vector<Term> terms;
      for (const auto& t : g.terms()) terms.push_back({t.mono / m, t.coeff});
      h = Polynomial::from_sorted_terms(g.ring_ptr(), std::move(terms));
    }
    out.push_back(h.in_ring(ring));
  }
  return Ideal(ring, std::move(out));
}

bool is_monomial(const Polynomial& g) { return g.size() == 1; }

}  // namespace

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& g) {
  require_same_ring(ideal.ring(), g.ring());
  const RingPtr& ring = ideal.ring_ptr();
  if (g.is_zero()) return Ideal(ring, {Polynomial::constant(ring, 1)});
  if (g.is_constant()) return ideal;
  if (is_monomial(g)) {
    Ideal cur = ideal;
    for (int v = 0; v < ring->num_vars(); ++v)
      for (int e = 0; e < g.lead_monomial()[v]; ++e) cur = divide_out_variable(cur, v, false);
    return cur;
  }
  Ideal meet = ideal_intersect(ideal, Ideal(ring, {g}));
  std::vector<Polynomial> out;
  for (const auto& h : meet.generators()) out.push_back(exact_divide(h, g));
  return Ideal(ring, std::move(out));
}

Ideal ideal_quotient(const Ideal& ideal, const Ideal& by) {
  require_same_ring(ideal.ring(), by.ring());
  if (by.is_zero()) return Ideal(ideal.ring_ptr(), {Polynomial::constant(ideal.ring_ptr(), 1)});
  std::vector<Ideal> parts;
  for (const auto& g : by.generators()) parts.push_back(ideal_quotient(ideal, g));
  return ideal_intersect(parts);
}

Ideal saturate(const Ideal& ideal, const Polynomial& g) {
  require_same_ring(ideal.ring(), g.ring());
  const RingPtr& ring = ideal.ring_ptr();
  if (g.is_zero()) return Ideal(ring, {Polynomial::constant(ring, 1)});
  if (g.is_constant()) return ideal;
  if (is_monomial(g)) {
    Ideal cur = ideal;
    for (int v = 0; v < ring->num_vars(); ++v)
      if (g.lead_monomial()[v] > 0) cur = divide_out_variable(cur, v, true);
    return cur;
  }
  Ideal cur = ideal;
  for (int iter = 0; iter < 256; ++iter) {
    Ideal next = ideal_quotient(cur, g);
    if (next.equals(cur)) return cur;
    cur = next;
  }
  throw std::logic_error("saturation did not stabilize");
}

Ideal saturate(const Ideal& ideal, const Ideal& by) {
  require_same_ring(ideal.ring(), by.ring());
  if (by.is_zero()) return Ideal(ideal.ring_ptr(), {Polynomial::constant(ideal.ring_ptr(), 1)});
  std::vector<Ideal> parts;
  for (const auto& g : by.generators()) parts.push_back(saturate(ideal, g));
  return ideal_intersect(parts);
}

// -------------------------------------------------------------- elimination

Ideal eliminate(const Ideal& ideal, int block, const RingPtr& target) {
  const PolyRing& r = ideal.ring();
  const int n = r.num_vars();
  if (block < 1 || block >= n) throw std::invalid_argument("eliminate: block out of range");
  if (target->num_vars() != n - block) throw std::invalid_argument("eliminate: target ring has wrong size");
  std::vector<int> var_map(static_cast<std::size_t>(n), -1);
  for (int i = block; i < n; ++i) {
    if (target->names()[static_cast<std::size_t>(i - block)] != r.names()[static_cast<std::size_t>(i)])
      throw std::invalid_argument("eliminate: target variable names do not match");
    var_map[static_cast<std::size_t>(i)] = i - block;
  }
  std::vector<Polynomial> out;
  for (const auto& g : ideal.groebner_basis(MonomialOrder::eliminate(block))) {
    bool free = true;
    for (int i = 0; i < block; ++i) free = free && g.lead_monomial()[i] == 0;
    if (free) out.push_back(g.map_to(target, var_map));
  }
  return Ideal(target, std::move(out));
}

std::vector<std::pair<MultiDegree, int>> minimal_generator_degrees(const Ideal& ideal) {
  std::vector<std::pair<MultiDegree, int>> tally;
  for (const auto& g : ideal.minimal_generators()) {
    MultiDegree d = g.multidegree();
    if (!tally.empty() && tally.back().first == d) {
      ++tally.back().second;
    } else {
      tally.emplace_back(d, 1);
    }
  }
  return tally;
}

Ideal map_ideal(const Ideal& ideal, const RingPtr& target, std::span<const int> var_map) {
  std::vector<Polynomial> out;
  for (const auto& g : ideal.generators()) out.push_back(g.map_to(target, var_map));
  return Ideal(target, std::move(out));
}

}  // namespace hurwitz
