#pragma once

#include <span>

#include "hurwitz/poly.hpp"

namespace hurwitz {

/// Forms in K[x0,x1]. Computations dehomogenize at x1 = 1 and track the
/// root at infinity (the power of x1) separately.

/// Monic gcd of binary forms; zero forms are ignored, all-zero input gives 0.
Polynomial binary_gcd(std::span<const Polynomial> forms);

/// Product of the distinct linear factors of f (over the algebraic closure),
/// as a monic form. Requires char K > deg f.
Polynomial squarefree_part(const Polynomial& f);

}  // namespace hurwitz
