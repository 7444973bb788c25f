#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hurwitz {

/// Raised for division by zero and for mixing residues of different moduli.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic trial division up to sqrt(n).
bool is_prime(std::uint64_t n);

/// Arithmetic on raw residues in [0, p) for an odd prime p < 2^31.
///
/// Polynomials store bare `uint32_t` coefficients and carry the field through
/// their ring.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

  /// Reduces an arbitrary signed integer into [0, p).
  std::uint32_t from_int(std::int64_t v) const;
  /// Representative in (-p/2, p/2], used for printing.
  std::int64_t to_symmetric(std::uint32_t a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// A residue together with its modulus; operations check that moduli agree.
class FpElem {
 public:
  FpElem(std::uint32_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  FpElem inverse() const;

  friend FpElem operator+(FpElem a, FpElem b);
  friend FpElem operator-(FpElem a, FpElem b);
  friend FpElem operator*(FpElem a, FpElem b);
  friend FpElem operator/(FpElem a, FpElem b);
  friend bool operator==(FpElem a, FpElem b) = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

/// Seedable generator with a platform-independent draw sequence.
///
/// Seeds are strings (integers are keyed by their decimal form). `derive`
/// produces an independent stream keyed by (seed, label), which is how
/// pipeline stages get their own randomness.
class SeededRng {
 public:
  explicit SeededRng(std::string_view seed);
  explicit SeededRng(std::uint64_t seed);

  SeededRng derive(std::string_view label) const;

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, bound) by rejection sampling.
  std::uint32_t uniform_below(std::uint32_t bound);

  const std::string& key() const { return key_; }

 private:
  std::string key_;
  std::mt19937_64 engine_;
};

/// Uniform element of F_p, zero included.
FpElem fp_random(const PrimeField& field, SeededRng& rng);

/// 64-bit FNV-1a; stable across platforms, used for seeding.
std::uint64_t stable_hash(std::string_view text);

}  // namespace hurwitz
