#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/ideal.hpp"

namespace hurwitz {

/// dim_K (R/I)_deg, counted as the standard monomials of GB(I).
std::int64_t hilbert_function(const Ideal& ideal, const MultiDegree& deg);

/// Same number from a different route: rank of the multiplication map
/// (generators x complementary monomials) into R_deg.
std::int64_t hilbert_function_by_matrix(const Ideal& ideal, const MultiDegree& deg);

struct DimensionInfo {
  int dim;    // Krull dimension of R/I
  int codim;  // number of variables minus dim
};

/// Maximal independent sets of the lead-term ideal. The unit ideal reports
/// dim 0.
DimensionInfo dimension_codim(const Ideal& ideal);

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of R/I, singly graded
/// by heft degree. Coefficient k is the coefficient of t^k.
std::vector<std::int64_t> hilbert_numerator(const Ideal& ideal);

/// Degree (multiplicity) of R/I for a standard-graded ring; 0 for the unit ideal.
std::int64_t multiplicity_degree(const Ideal& ideal);

/// Graded Betti numbers of the ideal I itself: index 0 counts minimal
/// generators, index 1 their syzygies, and so on.
class BettiTable {
 public:
  void add(int index, int twist, std::int64_t rank);
  std::int64_t at(int index, int twist) const;
  /// twist -> rank for one homological index (zero entries omitted).
  std::map<int, std::int64_t> row(int index) const;
  std::int64_t total(int index) const;
  int length() const;  // largest index with a nonzero entry, -1 if empty
  const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }

  /// Macaulay2-style display of the resolution of R/I (rows are twist - column).
  std::string display() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, std::int64_t> entries_;
};

/// Minimal graded Betti numbers of a homogeneous ideal in a standard-graded
/// ring, from the homology of the Koszul complex of R/I.
BettiTable betti_table(const Ideal& ideal);

}  // namespace hurwitz
