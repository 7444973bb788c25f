#include "hurwitz/binary_form.hpp"

#include <stdexcept>
#include <vector>

namespace hurwitz {

namespace {

// coefficients in x0, lowest first, no trailing zeros
using Uni = std::vector<std::uint32_t>;

void normalize(Uni& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

struct Dehomogenized {
  Uni u;
  int x1_power = 0;  // multiplicity of the root at infinity
  int degree = 0;
};

void require_binary(const PolyRing& ring) {
  if (ring.num_vars() != 2 || ring.grading_rank() != 1) throw std::invalid_argument("expected a form in K[x0,x1]");
}

Dehomogenized dehomogenize(const Polynomial& f) {
  require_binary(f.ring());
  if (!f.is_homogeneous()) throw std::invalid_argument("binary form is not homogeneous");
  Dehomogenized d;
  d.degree = f.lead_monomial().total_degree();
  d.u.assign(static_cast<std::size_t>(d.degree + 1), 0);
  for (const auto& t : f.terms()) d.u[static_cast<std::size_t>(t.mono[0])] = t.coeff;
  normalize(d.u);
  d.x1_power = d.degree - (static_cast<int>(d.u.size()) - 1);
  return d;
}

Polynomial homogenize(const RingPtr& ring, const Uni& u, int x1_power) {
  const int deg = static_cast<int>(u.size()) - 1 + x1_power;
  std::vector<Term> terms;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    Monomial m;
    m.set(0, static_cast<int>(i));
    m.set(1, deg - static_cast<int>(i));
    terms.push_back({m, u[i]});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Uni make_monic(Uni u, const PrimeField& F) {
  if (u.empty()) return u;
  std::uint32_t inv = F.inv(u.back());
  for (auto& c : u) c = F.mul(c, inv);
  return u;
}

// remainder of a by b (b nonzero)
Uni rem(Uni a, const Uni& b, const PrimeField& F) {
  std::uint32_t inv = F.inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    std::uint32_t q = F.mul(a.back(), inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(q, b[i]));
    normalize(a);
  }
  return a;
}

Uni quotient(Uni a, const Uni& b, const PrimeField& F) {
  if (a.size() < b.size()) return {};
  std::uint32_t inv = F.inv(b.back());
  Uni q(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size() && !a.empty()) {
    std::uint32_t c = F.mul(a.back(), inv);
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    normalize(a);
  }
  if (!a.empty()) throw std::logic_error("inexact univariate division");
  return q;
}

Uni gcd(Uni a, Uni b, const PrimeField& F) {
  while (!b.empty()) {
    Uni r = rem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), F);
}

Uni derivative(const Uni& u, const PrimeField& F) {
  Uni d;
  for (std::size_t i = 1; i < u.size(); ++i) d.push_back(F.mul(F.from_int(static_cast<std::int64_t>(i)), u[i]));
  normalize(d);
  return d;
}

}  // namespace

Polynomial binary_gcd(std::span<const Polynomial> forms) {
  if (forms.empty()) throw std::invalid_argument("gcd of no forms");
  const RingPtr& ring = forms.front().ring_ptr();
  const PrimeField& F = ring->field();
  bool any = false;
  Uni g;
  int x1_power = 0;
  for (const auto& f : forms) {
    require_same_ring(f.ring(), *ring);
    if (f.is_zero()) continue;
    Dehomogenized d = dehomogenize(f);
    if (!any) {
      g = make_monic(d.u, F);
      x1_power = d.x1_power;
      any = true;
    } else {
      g = gcd(g, d.u, F);
      x1_power = std::min(x1_power, d.x1_power);
    }
  }
  if (!any) return Polynomial(ring);
  return homogenize(ring, g, x1_power);
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree part of zero");
  const PrimeField& F = f.ring().field();
  Dehomogenized d = dehomogenize(f);
  if (static_cast<std::uint32_t>(d.degree) >= F.modulus())
    throw std::invalid_argument("squarefree part needs characteristic above the degree");
  Uni u = make_monic(d.u, F);
  Uni r = u.size() > 1 ? quotient(u, gcd(u, derivative(u, F), F), F) : u;
  return homogenize(f.ring_ptr(), make_monic(r, F), d.x1_power > 0 ? 1 : 0);
}

}  // namespace hurwitz
