#pragma once

// Division-free determinants over a commutative ring R. R needs +, -, *,
// and copies; `zero` and `one` are passed in because ring elements here
// carry runtime context (a prime, a base field).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace projectivoid::detail {

/// Laplace expansion along rows, memoising the minor of the bottom rows for
/// every column subset. O(m 2^m) ring multiplications; used for small m.
template <typename R>
R det_by_minors(std::span<const R> a, std::size_t m, const R& zero, const R& one) {
  if (m == 0) return one;
  const std::uint32_t full = (1u << m) - 1;
  // minor[S] = det of rows (m - |S|) .. m-1 restricted to the columns in S.
  std::vector<R> minor(std::size_t{1} << m, zero);
  minor[0] = one;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::size_t k = static_cast<std::size_t>(__builtin_popcount(s));
    const std::size_t row = m - k;
    R acc = zero;
    std::size_t position = 0;
    for (std::size_t c = 0; c < m; ++c) {
      if (!(s & (1u << c))) continue;
      const R& sub = minor[s & ~(1u << c)];
      const R& entry = a[row * m + c];
      if (position % 2 == 0) {
        acc = acc + entry * sub;
      } else {
        acc = acc - entry * sub;
      }
      ++position;
    }
    minor[s] = std::move(acc);
  }
  return minor[full];
}

/// Berkowitz's algorithm: the characteristic polynomial det(xI - A) by
/// Toeplitz products, returning det(A) = (-1)^m c_m. O(m^4) multiplications.
template <typename R>
R det_berkowitz(std::span<const R> a, std::size_t m, const R& zero, const R& one) {
  if (m == 0) return one;
  auto at = [&](std::size_t i, std::size_t j) -> const R& { return a[i * m + j]; };
  std::vector<R> v{one, zero - at(0, 0)};
  for (std::size_t r = 1; r < m; ++r) {
    // Leading r x r block M, column S = A[0..r)[r], row R = A[r][0..r).
    std::vector<R> c;
    c.reserve(r + 2);
    c.push_back(one);
    c.push_back(zero - at(r, r));
    std::vector<R> ms(r, zero);  // M^k S
    for (std::size_t i = 0; i < r; ++i) ms[i] = at(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      R dot = zero;
      for (std::size_t i = 0; i < r; ++i) dot = dot + at(r, i) * ms[i];
      c.push_back(zero - dot);
      if (k + 1 < r) {
        std::vector<R> next(r, zero);
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) next[i] = next[i] + at(i, j) * ms[j];
        }
        ms = std::move(next);
      }
    }
    // v <- T v, T lower-triangular Toeplitz with first column c.
    std::vector<R> w(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= i && j < v.size(); ++j) w[i] = w[i] + c[i - j] * v[j];
    }
    v = std::move(w);
  }
  return m % 2 == 0 ? v[m] : zero - v[m];
}

template <typename R>
R determinant(std::span<const R> a, std::size_t m, const R& zero, const R& one) {
  return m <= 4 ? det_by_minors(a, m, zero, one) : det_berkowitz(a, m, zero, one);
}

}  // namespace projectivoid::detail
