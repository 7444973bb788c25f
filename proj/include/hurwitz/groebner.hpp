#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hurwitz/poly.hpp"

namespace hurwitz {

struct GroebnerResult {
  /// Reduced Groebner basis, monic, sorted increasingly by lead monomial.
  std::vector<Polynomial> basis;
  /// Indices into the input of the generators that were not redundant when
  /// processed degree by degree (only meaningful for homogeneous input).
  std::vector<std::size_t> minimal_inputs;
};

/// Groebner basis of the ideal generated by `gens` in the order of `ring`.
///
/// Pairs are processed degree by degree (heft degree of the lcm) with
/// Gebauer-Moeller pair elimination; all S-polynomials of one degree are
/// reduced together against a shared set of reducer rows (F4-style). Input
/// generators are fed in at their own degree after that degree's S-pairs,
/// which is what makes `minimal_inputs` come out right.
GroebnerResult compute_groebner(const RingPtr& ring, std::span<const Polynomial> gens);

/// Fully reduces f by G: no term of the result is divisible by a lead term of G.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

/// S-polynomial of two nonzero polynomials (both scaled monic first).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Every S-polynomial of `basis` reduces to zero (no pair criteria applied).
bool satisfies_buchberger_criterion(std::span<const Polynomial> basis);

}  // namespace hurwitz
