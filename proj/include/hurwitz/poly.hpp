#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/field.hpp"

namespace hurwitz {

inline constexpr int kMaxVars = 8;

using MultiDegree = std::vector<int>;

/// Exponent vector, at most kMaxVars variables, 16 bits per exponent.
class Monomial {
 public:
  Monomial() = default;
  static Monomial from_exponents(std::span<const int> exps);

  int operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }
  void set(int i, int e);

  int total_degree() const {
    int d = 0;
    for (auto e : exp_) d += e;
    return d;
  }
  bool is_one() const { return total_degree() == 0; }

  /// Bit i set iff variable i occurs; cheap pre-filter for divisibility.
  std::uint32_t support_mask() const {
    std::uint32_t m = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if (exp_[static_cast<std::size_t>(i)] != 0) m |= 1u << i;
    return m;
  }

  bool divides(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exp_[static_cast<std::size_t>(i)] > other.exp_[static_cast<std::size_t>(i)]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exp_[static_cast<std::size_t>(i)] != 0 && other.exp_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const;
  /// this / other; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  std::size_t hash() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Global monomial orders.
///
/// GradedReverseLex compares the weighted total degree (weights = sum of the
/// variable's degree vector) and breaks ties reverse-lexicographically.
/// Eliminate(k) first compares the ordinary degree in the first k variables.
/// `with_last_variable` moves one variable to the end of the reverse-lex
/// tie-break, which makes "divisible by v" detectable from lead terms.
class MonomialOrder {
 public:
  enum class Kind { GradedReverseLex, Eliminate };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::GradedReverseLex, 0, -1); }
  static MonomialOrder eliminate(int block) { return MonomialOrder(Kind::Eliminate, block, -1); }
  MonomialOrder with_last_variable(int var) const { return MonomialOrder(kind_, block_, var); }

  Kind kind() const { return kind_; }
  int block() const { return block_; }
  int last_variable() const { return last_; }

  std::string describe() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, int block, int last) : kind_(k), block_(block), last_(last) {}
  Kind kind_;
  int block_;
  int last_;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Variables, their (multi)degrees, the coefficient field and the term order.
class PolyRing {
 public:
  static RingPtr create(std::uint32_t p, std::vector<std::string> names, std::vector<MultiDegree> degrees,
                        MonomialOrder order = MonomialOrder::grevlex());

  /// K[x0,x1,y0,y1,y2], degrees (1,0),(1,0),(0,1),(0,1),(0,1).
  static RingPtr bigraded(std::uint32_t p, MonomialOrder order = MonomialOrder::grevlex());
  /// K[y0,y1,y2], standard grading.
  static RingPtr plane(std::uint32_t p);
  /// K[x0,x1], standard grading.
  static RingPtr binary(std::uint32_t p);

  RingPtr with_order(MonomialOrder order) const;
  /// Prepends a degree-zero variable and uses Eliminate(1); for intersections.
  RingPtr with_ghost_variable(std::string name) const;

  const PrimeField& field() const { return field_; }
  std::uint32_t modulus() const { return field_.modulus(); }
  int num_vars() const { return static_cast<int>(names_.size()); }
  int grading_rank() const { return grading_rank_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<MultiDegree>& degrees() const { return degrees_; }
  const MonomialOrder& order() const { return order_; }
  int heft(int var) const { return heft_[static_cast<std::size_t>(var)]; }
  int variable_index(std::string_view name) const;

  /// -1, 0, 1 for less, equal, greater.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  MultiDegree multidegree(const Monomial& m) const;
  int heft_degree(const Monomial& m) const;

  bool same_variables(const PolyRing& other) const;
  friend bool operator==(const PolyRing& a, const PolyRing& b);

  std::string header() const;

 private:
  PolyRing(PrimeField field, std::vector<std::string> names, std::vector<MultiDegree> degrees,
           MonomialOrder order, bool allow_ghost);
  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<MultiDegree> degrees_;
  MonomialOrder order_;
  int grading_rank_;
  std::vector<int> heft_;
  std::vector<int> revlex_sequence_;
};

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Term {
  Monomial mono;
  std::uint32_t coeff;
};

/// Sparse polynomial: terms strictly decreasing in the ring order, no zero
/// coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, std::uint32_t coeff = 1);
  /// Sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Terms already canonical; checked only in debug builds.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const PolyRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }

  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead_term() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  std::uint32_t lead_coeff() const { return terms_.front().coeff; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// True iff every term has the same multidegree (zero counts as homogeneous).
  bool is_homogeneous() const;
  /// Multidegree of the lead term; throws on zero.
  MultiDegree multidegree() const;
  int heft_degree() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(std::uint32_t c) const;
  Polynomial times_term(const Monomial& m, std::uint32_t c) const;
  Polynomial monic() const;

  Polynomial derivative(int var) const;

  /// Same polynomial viewed in a ring with the same variables (re-sorts terms).
  Polynomial in_ring(const RingPtr& target) const;
  /// Renames variables: var i goes to var_map[i] of `target` (-1: must not occur).
  Polynomial map_to(const RingPtr& target, std::span<const int> var_map) const;

  std::string to_string() const;
  static Polynomial parse(const RingPtr& ring, std::string_view text);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}
  RingPtr ring_;
  std::vector<Term> terms_;
};

void require_same_ring(const PolyRing& a, const PolyRing& b);

/// Every monomial of multidegree `deg`, sorted decreasingly in the ring order.
std::vector<Monomial> monomial_basis(const PolyRing& ring, const MultiDegree& deg);

/// Form of multidegree `deg` with iid uniform coefficients, one draw per
/// basis monomial in decreasing order.
Polynomial random_form(const RingPtr& ring, const MultiDegree& deg, SeededRng& rng);

/// Exact quotient f / g; throws if g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

std::string format_degree(const MultiDegree& deg);

}  // namespace hurwitz
