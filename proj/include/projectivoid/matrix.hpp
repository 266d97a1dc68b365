#pragma once

// Transition matrices of rank-m bundles on the projectivoid line, glued from
// trivialisations over K<v^{1/p^inf}> and K<v^{-1/p^inf}>, and the action
// A' = V(s^-1) A(s,s^-1) U(s) of automorphisms on each chart.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "projectivoid/series.hpp"

namespace projectivoid {

class SMatrix {
 public:
  /// m x m zero matrix.
  SMatrix(Prime p, std::size_t m);
  /// Row-major entries; throws DimensionMismatch unless entries.size() == m*m
  /// and PrimeMismatch if an entry uses another prime.
  SMatrix(Prime p, std::size_t m, std::vector<PSeries> entries);

  static SMatrix identity(Prime p, std::size_t m);
  static SMatrix diagonal(Prime p, const std::vector<PSeries>& diag);
  /// I + f E_{ij}, i != j.
  static SMatrix shear(Prime p, std::size_t m, std::size_t i, std::size_t j, const PSeries& f);

  Prime prime() const noexcept { return p_; }
  std::size_t rank() const noexcept { return m_; }
  const std::vector<PSeries>& entries() const noexcept { return entries_; }

  const PSeries& operator()(std::size_t i, std::size_t j) const { return entries_[i * m_ + j]; }
  PSeries& operator()(std::size_t i, std::size_t j) { return entries_[i * m_ + j]; }

  bool is_exact() const;

  friend bool operator==(const SMatrix&, const SMatrix&) = default;
  friend SMatrix operator*(const SMatrix& x, const SMatrix& y);

 private:
  Prime p_;
  std::size_t m_;
  std::vector<PSeries> entries_;
};

inline SMatrix mat_mul(const SMatrix& x, const SMatrix& y) { return x * y; }

/// The exponent n/p^b of the monomial factor of det A.
struct BundleDegree {
  PExp value;
  friend bool operator==(const BundleDegree&, const BundleDegree&) = default;
  friend auto operator<=>(const BundleDegree&, const BundleDegree&) = default;
};

/// Division-free determinant. Throws InexactSeries for inexact entries.
PSeries det(const SMatrix& a);

/// det is a unit of K<v^{+-1/p^inf}>.
bool is_transition(const SMatrix& a);

/// Throws NotATransitionMatrix.
BundleDegree bundle_degree(const SMatrix& a);

/// Entries lie in the `side` subring and det is a unit there, with its
/// constant term dominant.
bool validate_automorphism(const SMatrix& m, Subring side);

/// V * A * U after checking U over NonNeg, V over NonPos and A a transition
/// matrix. Throws InvalidAutomorphism or NotATransitionMatrix.
SMatrix act(const SMatrix& v, const SMatrix& a, const SMatrix& u);

struct AutomorphismOptions {
  std::size_t shears = 3;
  /// Multiply in a diagonal of random one-sided units; off gives a pure
  /// product of shears.
  bool diagonal = true;
};

/// Seeded random element of GL_m over the `side` subring with unit
/// determinant: a diagonal of one-sided units times `shears` elementary
/// shears. `side` must be NonNeg or NonPos.
SMatrix random_automorphism(Prime p, std::size_t m, Subring side, AutomorphismOptions options,
                            std::uint64_t seed);

/// diag(v^a, v^{1-a}) for a = k / p^max_pow, k = 0..p^max_pow.
std::vector<SMatrix> degree_one_family(Prime p, unsigned max_pow);

}  // namespace projectivoid
