#pragma once

// Finite-support elements of the perfectoid Tate algebras
//
//   K<v^{1/p^inf}>    exponents >= 0   (Subring::NonNeg)
//   K<v^{-1/p^inf}>   exponents <= 0   (Subring::NonPos)
//   K<v^{+-1/p^inf}>  any exponent     (Subring::Full)
//
// An element is a finite map exponent -> nonzero rational coefficient plus an
// optional precision V: an inexact series is only known modulo terms whose
// coefficient valuation is >= V. Exact series have V = infinity.

#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "projectivoid/coefficient.hpp"
#include "projectivoid/exponent.hpp"

namespace projectivoid {

enum class Subring { NonNeg, NonPos, Full };

class PSeries {
 public:
  using Terms = std::map<PExp, mpq_class>;

  explicit PSeries(Prime p) : p_(p) {}
  PSeries(Prime p, Terms terms, Valuation precision = Valuation::infinity());

  static PSeries constant(Prime p, const mpq_class& c);
  static PSeries monomial(Prime p, const mpq_class& c, const PExp& e);
  static PSeries one(Prime p) { return constant(p, 1); }

  Prime prime() const noexcept { return p_; }
  const Terms& terms() const noexcept { return terms_; }
  Valuation precision() const noexcept { return precision_; }
  bool is_exact() const noexcept { return precision_.is_infinite(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of v^e (zero when absent).
  mpq_class coefficient(const PExp& e) const;
  PadicCoeff coeff(const PExp& e) const { return PadicCoeff(coefficient(e), p_); }

  /// Lowers the precision to `v` (never raises it), dropping terms that fall
  /// below the new cutoff.
  PSeries truncated(Valuation v) const;

  /// v^e * f
  PSeries shifted(const PExp& e) const;
  /// c * f
  PSeries scaled(const mpq_class& c) const;

  friend bool operator==(const PSeries& x, const PSeries& y) {
    return x.p_ == y.p_ && x.precision_ == y.precision_ && x.terms_ == y.terms_;
  }

  friend PSeries operator+(const PSeries& f, const PSeries& g);
  friend PSeries operator-(const PSeries& f, const PSeries& g);
  friend PSeries operator*(const PSeries& f, const PSeries& g);
  friend PSeries operator-(const PSeries& f);
  PSeries& operator+=(const PSeries& g) { return *this = *this + g; }
  PSeries& operator*=(const PSeries& g) { return *this = *this * g; }

 private:
  void drop_below_precision();

  Prime p_;
  Terms terms_;
  Valuation precision_ = Valuation::infinity();
};

inline PSeries s_add(const PSeries& f, const PSeries& g) { return f + g; }
inline PSeries s_neg(const PSeries& f) { return -f; }
inline PSeries s_mul(const PSeries& f, const PSeries& g) { return f * g; }

/// f = v^e * u with u dominated by its constant term.
struct UnitDecomposition {
  PExp e;
  PSeries u;
};

/// Residue reduction of a series with Gauss norm <= 1: a finite map
/// exponent -> nonzero element of F_p.
class ResiduePoly {
 public:
  using Terms = std::map<PExp, unsigned long>;

  explicit ResiduePoly(Prime p) : p_(p) {}
  ResiduePoly(Prime p, Terms terms);

  Prime prime() const noexcept { return p_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// c * v^e with c != 0.
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  friend bool operator==(const ResiduePoly&, const ResiduePoly&) = default;
  friend ResiduePoly operator*(const ResiduePoly& x, const ResiduePoly& y);

 private:
  Prime p_;
  Terms terms_;
};

/// Minimum coefficient valuation, i.e. -log_p of the Gauss norm.
Valuation gauss_valuation(const PSeries& f);

/// Exponents whose coefficient attains the Gauss norm, ascending.
/// Throws ZeroSeries.
std::vector<PExp> dominant_terms(const PSeries& f);

bool subring_check(const PSeries& f, Subring ring);

/// NonNeg/NonPos: the constant coefficient strictly dominates every other
/// coefficient. Full: a single dominant exponent, which a monomial divides
/// out. Throws SubringViolation if f has exponents outside `ring`.
bool is_unit(const PSeries& f, Subring ring);

/// Throws NotAUnit unless is_unit(f, Full).
UnitDecomposition monomial_factor(const PSeries& f);

/// Truncated geometric-series inverse: f * invert(f, target) == 1 modulo
/// terms of coefficient valuation >= target. Monomials invert exactly.
PSeries invert(const PSeries& f, long target);

/// Largest dominant exponent. For a unit this is monomial_factor(f).e.
PExp degree(const PSeries& f);

/// Term-wise reduction mod the maximal ideal. Throws NormExceedsOne.
ResiduePoly reduce_series(const PSeries& f);

/// p^{-gauss_valuation(f)} * f, a series of Gauss norm exactly 1.
PSeries gauss_normalized(const PSeries& f);

/// True when f - g vanishes modulo coefficient valuation >= v.
bool congruent(const PSeries& f, const PSeries& g, Valuation v);

}  // namespace projectivoid
