#pragma once

// Independent reference computations. None of these call into the library's
// exponent arithmetic, series multiplication or determinant code paths they
// are used to check.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "projectivoid/series.hpp"

namespace projectivoid::oracle {

/// Series keyed by plain rationals.
using RationalSeries = std::map<mpq_class, mpq_class>;

inline RationalSeries from_series(const PSeries& f) {
  RationalSeries r;
  for (const auto& [e, c] : f.terms()) r[e.to_rational()] = c;
  return r;
}

inline RationalSeries multiply(const RationalSeries& f, const RationalSeries& g) {
  RationalSeries r;
  for (const auto& [e1, c1] : f) {
    for (const auto& [e2, c2] : g) r[mpq_class(e1 + e2)] += c1 * c2;
  }
  std::erase_if(r, [](const auto& kv) { return sgn(kv.second) == 0; });
  return r;
}

/// v_p by repeated division; large sentinel for zero.
inline long valuation(const mpq_class& x, unsigned long p) {
  if (sgn(x) == 0) return 1L << 40;
  long v = 0;
  mpz_class n = x.get_num(), d = x.get_den();
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

/// f == 1 modulo coefficient valuation >= target.
inline bool congruent_to_one(RationalSeries f, unsigned long p, long target) {
  f[mpq_class(0)] -= 1;
  return std::all_of(f.begin(), f.end(),
                     [&](const auto& kv) { return valuation(kv.second, p) >= target; });
}

/// Antidiagonal walk over pairs (a, b) with duplicate skipping on rationals.
inline std::vector<mpq_class> antidiagonal(unsigned long p, std::size_t count) {
  std::vector<mpq_class> out;
  std::set<mpq_class> seen;
  for (unsigned long k = 0; out.size() < count; ++k) {
    for (unsigned long a = 0; a <= k && out.size() < count; ++a) {
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), p, k - a);
      mpq_class q(mpz_class(a), den);
      q.canonicalize();
      if (seen.insert(q).second) out.push_back(q);
    }
  }
  return out;
}

/// Stern's diatomic sequence: the n-th Calkin-Wilf term is fusc(n)/fusc(n+1).
inline unsigned long fusc(unsigned long n) {
  unsigned long a = 1, b = 0;
  while (n) {
    if (n & 1) {
      b += a;
    } else {
      a += b;
    }
    n >>= 1;
  }
  return b;
}

inline std::vector<mpq_class> calkin_wilf(std::size_t count) {
  std::vector<mpq_class> out;
  for (unsigned long n = 1; n <= count; ++n) {
    mpq_class q(mpz_class(fusc(n)), mpz_class(fusc(n + 1)));
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

/// Modular inverse by exhaustive search.
inline unsigned long inverse_mod(unsigned long x, unsigned long p) {
  for (unsigned long y = 1; y < p; ++y) {
    if ((x * y) % p == 1) return y;
  }
  return 0;
}

/// Plain Leibniz determinant over all permutations.
template <typename R>
R leibniz_det(const std::vector<R>& a, std::size_t m, const R& zero, const R& one) {
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  R total = zero;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) inversions += perm[i] > perm[j];
    }
    R term = one;
    for (std::size_t i = 0; i < m; ++i) term = term * a[i * m + perm[i]];
    total = inversions % 2 == 0 ? total + term : total - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace projectivoid::oracle
