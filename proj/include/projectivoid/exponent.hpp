#pragma once

// Exponents of perfectoid series: the group Z[1/p] of rationals a/p^b.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "projectivoid/error.hpp"

namespace projectivoid {

/// A validated prime. Constructing one from a composite number throws.
class Prime {
 public:
  explicit Prime(unsigned long value);

  unsigned long value() const noexcept { return value_; }
  friend bool operator==(Prime, Prime) = default;

 private:
  unsigned long value_;
};

bool is_prime(unsigned long n) noexcept;

/// An element num / p^pow of Z[1/p], always stored in canonical form
/// (pow == 0 or p does not divide num). Integers carry no prime, so the
/// same integer exponent compares equal under every prime.
class PExp {
 public:
  PExp() = default;
  PExp(long n) : num_(n) {}  // NOLINT(google-explicit-constructor): integers embed
  explicit PExp(mpz_class n) : num_(std::move(n)) {}

  static PExp canon(const mpz_class& num, unsigned long pow, Prime p);

  const mpz_class& num() const noexcept { return num_; }
  unsigned long pow() const noexcept { return pow_; }
  /// The prime of the denominator, or nullopt for integers.
  std::optional<Prime> prime() const;

  bool is_zero() const noexcept { return sgn(num_) == 0; }
  bool is_integer() const noexcept { return pow_ == 0; }
  int sign() const noexcept { return sgn(num_); }

  /// Exact rational value num / p^pow.
  mpq_class to_rational() const;

  friend bool operator==(const PExp&, const PExp&) = default;
  friend std::strong_ordering operator<=>(const PExp& x, const PExp& y);

  friend PExp operator+(const PExp& x, const PExp& y);
  friend PExp operator-(const PExp& x, const PExp& y);
  friend PExp operator-(const PExp& x);

 private:
  mpz_class num_{0};
  unsigned long pow_ = 0;
  unsigned long prime_ = 0;  // 0 iff pow_ == 0
};

inline PExp canon(const mpz_class& num, unsigned long pow, Prime p) {
  return PExp::canon(num, pow, p);
}
inline PExp exp_add(const PExp& x, const PExp& y) { return x + y; }
inline PExp exp_neg(const PExp& x) { return -x; }
inline std::strong_ordering exp_cmp(const PExp& x, const PExp& y) { return x <=> y; }

/// Converts an exact rational to Z[1/p]; nullopt when the denominator is not
/// a power of p.
std::optional<PExp> exponent_from_rational(const mpq_class& q, Prime p);

enum class EnumKind { Antidiagonal, CalkinWilf };

struct EnumOrder {
  EnumKind kind = EnumKind::Antidiagonal;
  std::optional<Prime> prime;
};

/// First `count` distinct values a/p^b, walking antidiagonals a+b = k from
/// (0,k) to (k,0) and skipping values already produced.
std::vector<PExp> enumerate_antidiagonal(Prime p, std::size_t count);

/// First `count` terms of the Calkin-Wilf sequence 1, 1/2, 2, 1/3, 3/2, ...
std::vector<mpq_class> enumerate_calkin_wilf(std::size_t count);

/// Walks `count` Calkin-Wilf terms and keeps those whose denominator is a
/// power of `p_filter`.
std::vector<PExp> enumerate_calkin_wilf(std::size_t count, Prime p_filter);

}  // namespace projectivoid
