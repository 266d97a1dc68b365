#pragma once

// Classical baseline: Laurent polynomial matrices over a field k and the
// Grothendieck/Birkhoff splitting
//
//   V(s^-1) A(s, s^-1) U(s) = diag(s^d1, ..., s^dm),
//
// with U over k[s] and V over k[s^-1], both of nonzero constant determinant.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "projectivoid/exponent.hpp"

namespace projectivoid {

/// Q (characteristic 0) or F_p. Elements are stored as rationals; over F_p
/// they are kept as integers in [0, p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field finite(Prime p) { return Field(p.value()); }

  unsigned long characteristic() const noexcept { return char_; }
  bool is_finite() const noexcept { return char_ != 0; }

  /// Maps a rational into the field. Throws DivisionByZero when the
  /// denominator vanishes mod p.
  mpq_class element(const mpq_class& q) const;
  mpq_class inverse(const mpq_class& x) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(unsigned long characteristic) : char_(characteristic) {}
  unsigned long char_;
};

class LaurentPoly {
 public:
  using Terms = std::map<long, mpq_class>;

  explicit LaurentPoly(Field k) : k_(k) {}
  LaurentPoly(Field k, const Terms& terms);

  static LaurentPoly constant(Field k, const mpq_class& c) { return monomial(k, c, 0); }
  static LaurentPoly monomial(Field k, const mpq_class& c, long n);

  const Field& field() const noexcept { return k_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  mpq_class coefficient(long n) const;
  /// Lowest / highest exponent; the polynomial must be nonzero.
  long low() const { return terms_.begin()->first; }
  long high() const { return terms_.rbegin()->first; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator-(const LaurentPoly& f);

 private:
  Field k_;
  Terms terms_;
};

/// u s^n, u != 0: the units of k[s, s^-1].
struct LaurentUnit {
  mpq_class coefficient;
  long exponent;
};

std::optional<LaurentUnit> lp_is_unit(const LaurentPoly& f);

class LMatrix {
 public:
  LMatrix(Field k, std::size_t m);
  LMatrix(Field k, std::size_t m, std::vector<LaurentPoly> entries);

  static LMatrix identity(Field k, std::size_t m);
  static LMatrix diagonal_powers(Field k, const std::vector<long>& degrees);

  const Field& field() const noexcept { return k_; }
  std::size_t rank() const noexcept { return m_; }
  const std::vector<LaurentPoly>& entries() const noexcept { return entries_; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * m_ + j]; }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * m_ + j]; }

  /// All exponents >= 0 (a matrix over k[s]) or <= 0 (over k[s^-1]).
  bool is_polynomial_in_s() const;
  bool is_polynomial_in_s_inverse() const;

  friend bool operator==(const LMatrix&, const LMatrix&) = default;
  friend LMatrix operator*(const LMatrix& x, const LMatrix& y);

 private:
  Field k_;
  std::size_t m_;
  std::vector<LaurentPoly> entries_;
};

LaurentPoly lp_det(const LMatrix& a);

/// Sorted splitting degrees d1 <= ... <= dm.
struct SplittingType {
  std::vector<long> degrees;
  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

struct FactorizationCertificate {
  LMatrix v;  // over k[s^-1]
  LMatrix u;  // over k[s]
  LMatrix d;  // diag(s^d1, ..., s^dm)
};

struct Splitting {
  SplittingType type;
  FactorizationCertificate certificate;
};

/// True when V*A*U == D, U is over k[s], V over k[s^-1], both with nonzero
/// constant determinant, and D is the diagonal of `type`.
bool check_certificate(const LMatrix& a, const Splitting& s);

/// Birkhoff factorisation. Throws NotInvertibleOverRing unless det A = c s^n,
/// IterationLimitExceeded past the reduction cap (default 10 m (span+1)),
/// CertificateFailure if the result does not re-multiply exactly.
Splitting split(const LMatrix& a, std::optional<std::size_t> iteration_cap = std::nullopt);

/// split(V A U).type == split(A).type after checking U over k[s] and V over
/// k[s^-1] with nonzero constant determinants (InvalidAutomorphism).
bool splitting_invariance_check(const LMatrix& a, const LMatrix& u, const LMatrix& v);

std::string to_string(const LaurentPoly& f);
std::string to_string(const SplittingType& t);

}  // namespace projectivoid
