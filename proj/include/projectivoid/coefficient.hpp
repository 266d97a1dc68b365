#pragma once

// The coefficient field: rationals with the p-adic absolute value.
//
// |x| = p^(-v_p(x)) is never materialised; everything is phrased through
// Valuation comparisons, so |x| > |y| iff valuation(x) < valuation(y).

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "projectivoid/exponent.hpp"

namespace projectivoid {

class Valuation {
 public:
  constexpr explicit Valuation(long v) : value_(v), infinite_(false) {}
  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }
  /// Finite value; throws for infinity.
  long value() const;

  friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
  friend constexpr std::strong_ordering operator<=>(const Valuation& x, const Valuation& y) {
    if (x.infinite_ || y.infinite_) {
      return x.infinite_ == y.infinite_ ? std::strong_ordering::equal
                                       : (x.infinite_ ? std::strong_ordering::greater
                                                      : std::strong_ordering::less);
    }
    return x.value_ <=> y.value_;
  }

  friend constexpr Valuation operator+(const Valuation& x, const Valuation& y) {
    if (x.infinite_ || y.infinite_) return infinity();
    return Valuation(x.value_ + y.value_);
  }

  std::string to_string() const;

 private:
  constexpr Valuation() : value_(0), infinite_(true) {}
  long value_;
  bool infinite_;
};

inline constexpr Valuation min(const Valuation& x, const Valuation& y) { return x < y ? x : y; }

/// v_p of a nonzero integer or rational; infinity for zero.
Valuation padic_valuation(const mpz_class& x, Prime p);
Valuation padic_valuation(const mpq_class& x, Prime p);

/// An element of k = R/m, i.e. F_p.
class ResidueElem {
 public:
  ResidueElem(unsigned long r, Prime p) : r_(r % p.value()), p_(p) {}

  unsigned long value() const noexcept { return r_; }
  Prime prime() const noexcept { return p_; }
  bool is_zero() const noexcept { return r_ == 0; }

  ResidueElem inverse() const;

  friend bool operator==(const ResidueElem&, const ResidueElem&) = default;
  friend ResidueElem operator+(const ResidueElem& x, const ResidueElem& y);
  friend ResidueElem operator*(const ResidueElem& x, const ResidueElem& y);
  friend ResidueElem operator-(const ResidueElem& x);

 private:
  unsigned long r_;
  Prime p_;
};

/// A coefficient of K = (Q, |.|_p).
class PadicCoeff {
 public:
  PadicCoeff(mpq_class value, Prime p) : value_(std::move(value)), p_(p) { value_.canonicalize(); }
  PadicCoeff(long value, Prime p) : value_(value), p_(p) {}

  const mpq_class& value() const noexcept { return value_; }
  Prime prime() const noexcept { return p_; }
  bool is_zero() const noexcept { return sgn(value_) == 0; }

  Valuation valuation() const { return padic_valuation(value_, p_); }
  /// Residue in F_p; throws NegativeValuation when |x| > 1.
  ResidueElem reduce() const;
  /// Throws DivisionByZero for zero.
  PadicCoeff inverse() const;

  friend bool operator==(const PadicCoeff& x, const PadicCoeff& y) {
    return x.p_ == y.p_ && x.value_ == y.value_;
  }
  friend PadicCoeff operator+(const PadicCoeff& x, const PadicCoeff& y);
  friend PadicCoeff operator-(const PadicCoeff& x, const PadicCoeff& y);
  friend PadicCoeff operator*(const PadicCoeff& x, const PadicCoeff& y);
  friend PadicCoeff operator-(const PadicCoeff& x);

 private:
  mpq_class value_;
  Prime p_;
};

inline Valuation valuation(const PadicCoeff& x) { return x.valuation(); }
inline ResidueElem reduce(const PadicCoeff& x) { return x.reduce(); }

/// Ordering of |x| against |y|: the reverse of the valuation ordering.
std::strong_ordering abs_cmp(const PadicCoeff& x, const PadicCoeff& y);

/// num * den^{-1} mod p for a rational of non-negative valuation.
unsigned long residue_of(const mpq_class& x, Prime p);

}  // namespace projectivoid
