#pragma once

// Seeded random inputs shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "projectivoid/classical.hpp"
#include "projectivoid/matrix.hpp"
#include "projectivoid/series.hpp"

namespace projectivoid::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return rng_; }

  mpz_class power(Prime p, long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p.value(), static_cast<unsigned long>(k));
    return r;
  }

  /// Nonzero integer coprime to p, |n| <= bound.
  long p_unit_int(Prime p, long bound = 6) {
    long n;
    do {
      n = uniform(-bound, bound);
    } while (n == 0 || n % static_cast<long>(p.value()) == 0);
    return n;
  }

  /// Rational of valuation exactly v.
  mpq_class coefficient_with_valuation(Prime p, long v) {
    mpq_class c(mpz_class(p_unit_int(p)), mpz_class(std::labs(p_unit_int(p))));
    c.canonicalize();
    if (v >= 0) {
      c *= mpq_class(power(p, v));
    } else {
      c /= mpq_class(power(p, -v));
    }
    return c;
  }

  /// Exponent k / p^b with b <= max_pow and |value| <= bound.
  PExp exponent(Prime p, unsigned long max_pow = 2, long bound = 2) {
    const long b = uniform(0, static_cast<long>(max_pow));
    const long scale = power(p, b).get_si();
    return PExp::canon(mpz_class(uniform(-bound * scale, bound * scale)), static_cast<unsigned long>(b), p);
  }

  PExp nonneg_exponent(Prime p, unsigned long max_pow = 2, long bound = 2) {
    PExp e = exponent(p, max_pow, bound);
    return e.sign() < 0 ? -e : e;
  }

  /// Arbitrary exact series with up to `max_terms` terms.
  PSeries series(Prime p, std::size_t max_terms = 4, Subring ring = Subring::Full) {
    PSeries::Terms t;
    const long n = uniform(0, static_cast<long>(max_terms));
    for (long i = 0; i < n; ++i) {
      PExp e = exponent(p);
      if (ring == Subring::NonNeg && e.sign() < 0) e = -e;
      if (ring == Subring::NonPos && e.sign() > 0) e = -e;
      t[e] += coefficient_with_valuation(p, uniform(-1, 2));
    }
    return PSeries(p, std::move(t));
  }

  /// v^e (a0 + sum a_i v^{e_i}) with |a_i| < |a0|, at most `max_terms` terms.
  PSeries unit(Prime p, std::size_t max_terms = 6, PExp* shift = nullptr) {
    const long v0 = uniform(-2, 2);
    PSeries::Terms t;
    t[PExp(0)] = coefficient_with_valuation(p, v0);
    const long others = uniform(0, static_cast<long>(max_terms) - 1);
    for (long i = 0; i < others; ++i) {
      PExp e = exponent(p, 3);
      if (e.is_zero() || t.count(e)) continue;
      t[e] = coefficient_with_valuation(p, v0 + 1 + uniform(0, 2));
    }
    PExp e = exponent(p, 3);
    if (shift) *shift = e;
    return PSeries(p, std::move(t)).shifted(e);
  }

  /// Series with at least two exponents attaining the Gauss norm.
  PSeries non_unit(Prime p, std::size_t max_terms = 6) {
    const long v0 = uniform(-2, 2);
    PSeries::Terms t;
    const long dominant = uniform(2, std::min<long>(4, static_cast<long>(max_terms)));
    while (static_cast<long>(t.size()) < dominant) {
      PExp e = exponent(p, 3);
      if (!t.count(e)) t[e] = coefficient_with_valuation(p, v0);
    }
    const long others = uniform(0, static_cast<long>(max_terms) - dominant);
    for (long i = 0; i < others; ++i) {
      PExp e = exponent(p, 3);
      if (!t.count(e)) t[e] = coefficient_with_valuation(p, v0 + 1 + uniform(0, 2));
    }
    return PSeries(p, std::move(t));
  }

  /// Small entries for determinant tests: up to `max_terms` terms.
  SMatrix matrix(Prime p, std::size_t m, std::size_t max_terms = 3) {
    std::vector<PSeries> entries;
    for (std::size_t i = 0; i < m * m; ++i) entries.push_back(series(p, max_terms));
    return SMatrix(p, m, std::move(entries));
  }

  /// A transition matrix S1 diag(v^{e_i} u_i) S2 with full-ring shears;
  /// `degree` receives sum e_i.
  SMatrix transition(Prime p, std::size_t m, PExp* degree = nullptr) {
    std::vector<PSeries> diag;
    PExp total(0);
    for (std::size_t i = 0; i < m; ++i) {
      PExp e;
      diag.push_back(unit(p, 2, &e));
      total = total + e;
    }
    SMatrix a = SMatrix::diagonal(p, diag);
    if (m > 1) {
      for (int side = 0; side < 2; ++side) {
        const long shears = uniform(0, 2);
        for (long k = 0; k < shears; ++k) {
          auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(m) - 1));
          auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(m) - 2));
          if (j >= i) ++j;
          PSeries f = PSeries::monomial(p, p_unit_int(p, 3), exponent(p, 1, 1));
          SMatrix s = SMatrix::shear(p, m, i, j, f);
          a = side == 0 ? s * a : a * s;
        }
      }
    }
    if (degree) *degree = total;
    return a;
  }

  /// Classical shear I + f E_ij with f in k[s] (or k[s^-1] when `inverse`),
  /// entry degree <= max_deg.
  LMatrix classical_shear(const Field& k, std::size_t m, bool inverse, long max_deg = 2) {
    LMatrix g = LMatrix::identity(k, m);
    if (m < 2) return g;
    auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(m) - 1));
    auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(m) - 2));
    if (j >= i) ++j;
    LaurentPoly::Terms t;
    for (long d = 0; d <= max_deg; ++d) {
      if (coin()) t[inverse ? -d : d] = uniform(1, 5);
    }
    g(i, j) = LaurentPoly(k, t);
    return g;
  }

  /// Product of `count` classical shears on one side.
  LMatrix classical_automorphism(const Field& k, std::size_t m, bool inverse, long count,
                                 long max_deg = 2) {
    LMatrix g = LMatrix::identity(k, m);
    for (long c = 0; c < count; ++c) g = g * classical_shear(k, m, inverse, max_deg);
    return g;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace projectivoid::testing
