#include "hurwitz/field.hpp"

#include <limits>

namespace hurwitz {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not an odd prime");
  }
  if (p >= (1u << 31)) {
    throw std::invalid_argument("modulus must be below 2^31");
  }
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw ArithmeticError("division by zero in F_" + std::to_string(p_));
  // extended Euclid on (a, p)
  std::int64_t r0 = p_, r1 = a % p_;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  return from_int(s0);
}

std::uint32_t PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::int64_t PrimeField::to_symmetric(std::uint32_t a) const {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
}

FpElem::FpElem(std::uint32_t value, std::uint32_t modulus) : value_(value % modulus), modulus_(modulus) {}

namespace {
void check_same(FpElem a, FpElem b) {
  if (a.modulus() != b.modulus()) {
    throw ArithmeticError("modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                          std::to_string(b.modulus()));
  }
}
}  // namespace

FpElem FpElem::inverse() const { return FpElem(PrimeField(modulus_).inv(value_), modulus_); }

FpElem operator+(FpElem a, FpElem b) {
  check_same(a, b);
  return FpElem(static_cast<std::uint32_t>((std::uint64_t{a.value_} + b.value_) % a.modulus_), a.modulus_);
}

FpElem operator-(FpElem a, FpElem b) {
  check_same(a, b);
  return FpElem(static_cast<std::uint32_t>((std::uint64_t{a.value_} + a.modulus_ - b.value_) % a.modulus_),
                a.modulus_);
}

FpElem operator*(FpElem a, FpElem b) {
  check_same(a, b);
  return FpElem(static_cast<std::uint32_t>(std::uint64_t{a.value_} * b.value_ % a.modulus_), a.modulus_);
}

FpElem operator/(FpElem a, FpElem b) {
  check_same(a, b);
  if (b.value_ == 0) throw ArithmeticError("division by zero");
  return a * b.inverse();
}

std::uint64_t stable_hash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

SeededRng::SeededRng(std::string_view seed) : key_(seed), engine_(stable_hash(seed)) {}

SeededRng::SeededRng(std::uint64_t seed) : SeededRng(std::to_string(seed)) {}

SeededRng SeededRng::derive(std::string_view label) const {
  std::string k = key_;
  k += '/';
  k += label;
  return SeededRng(k);
}

std::uint32_t SeededRng::uniform_below(std::uint32_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return static_cast<std::uint32_t>(v % bound);
}

FpElem fp_random(const PrimeField& field, SeededRng& rng) {
  return FpElem(rng.uniform_below(field.modulus()), field.modulus());
}

}  // namespace hurwitz
