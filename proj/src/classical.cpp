#include "projectivoid/classical.hpp"

#include <algorithm>
#include <numeric>

#include "projectivoid/detail/determinant.hpp"
#include "projectivoid/literal.hpp"

namespace projectivoid {

mpq_class Field::element(const mpq_class& q) const {
  if (char_ == 0) {
    mpq_class r = q;
    r.canonicalize();
    return r;
  }
  mpz_class p(char_);
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), p.get_mpz_t()) == 0) {
    throw Error(ErrorCode::DivisionByZero, "denominator vanishes in F_" + std::to_string(char_));
  }
  mpz_class r = q.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
  return mpq_class(r);
}

mpq_class Field::inverse(const mpq_class& x) const {
  mpq_class e = element(x);
  if (sgn(e) == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return element(mpq_class(1 / e));
}

LaurentPoly::LaurentPoly(Field k, const Terms& terms) : k_(k) {
  for (const auto& [n, c] : terms) {
    mpq_class e = k_.element(c);
    if (sgn(e) != 0) terms_.emplace_hint(terms_.end(), n, std::move(e));
  }
}

LaurentPoly LaurentPoly::monomial(Field k, const mpq_class& c, long n) {
  return LaurentPoly(k, Terms{{n, c}});
}

mpq_class LaurentPoly::coefficient(long n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

namespace {

void check_field(const Field& a, const Field& b) {
  if (!(a == b)) throw Error(ErrorCode::PrimeMismatch, "polynomials over different fields");
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) {
  check_field(f.k_, g.k_);
  LaurentPoly::Terms t = f.terms_;
  for (const auto& [n, c] : g.terms_) t[n] += c;
  return LaurentPoly(f.k_, t);
}

LaurentPoly operator-(const LaurentPoly& f) {
  LaurentPoly::Terms t = f.terms_;
  for (auto& kv : t) kv.second = -kv.second;
  return LaurentPoly(f.k_, t);
}

LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g) { return f + (-g); }

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  check_field(f.k_, g.k_);
  LaurentPoly::Terms t;
  for (const auto& [n1, c1] : f.terms_) {
    for (const auto& [n2, c2] : g.terms_) t[n1 + n2] += c1 * c2;
  }
  return LaurentPoly(f.k_, t);
}

std::optional<LaurentUnit> lp_is_unit(const LaurentPoly& f) {
  if (f.terms().size() != 1) return std::nullopt;
  const auto& [n, c] = *f.terms().begin();
  return LaurentUnit{c, n};
}

LMatrix::LMatrix(Field k, std::size_t m) : k_(k), m_(m), entries_(m * m, LaurentPoly(k)) {
  if (m == 0) throw Error(ErrorCode::DimensionMismatch, "rank must be positive");
}

LMatrix::LMatrix(Field k, std::size_t m, std::vector<LaurentPoly> entries)
    : k_(k), m_(m), entries_(std::move(entries)) {
  if (m == 0 || entries_.size() != m * m) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(m * m) + " entries");
  }
  for (const auto& f : entries_) check_field(k_, f.field());
}

LMatrix LMatrix::identity(Field k, std::size_t m) {
  LMatrix r(k, m);
  for (std::size_t i = 0; i < m; ++i) r(i, i) = LaurentPoly::constant(k, 1);
  return r;
}

LMatrix LMatrix::diagonal_powers(Field k, const std::vector<long>& degrees) {
  LMatrix r(k, degrees.size());
  for (std::size_t i = 0; i < degrees.size(); ++i) r(i, i) = LaurentPoly::monomial(k, 1, degrees[i]);
  return r;
}

bool LMatrix::is_polynomial_in_s() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const LaurentPoly& f) { return f.is_zero() || f.low() >= 0; });
}

bool LMatrix::is_polynomial_in_s_inverse() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const LaurentPoly& f) { return f.is_zero() || f.high() <= 0; });
}

LMatrix operator*(const LMatrix& x, const LMatrix& y) {
  if (x.m_ != y.m_) throw Error(ErrorCode::DimensionMismatch, "matrix ranks differ");
  check_field(x.k_, y.k_);
  LMatrix r(x.k_, x.m_);
  for (std::size_t i = 0; i < x.m_; ++i) {
    for (std::size_t k = 0; k < x.m_; ++k) {
      if (x(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < x.m_; ++j) r(i, j) = r(i, j) + x(i, k) * y(k, j);
    }
  }
  return r;
}

LaurentPoly lp_det(const LMatrix& a) {
  const Field& k = a.field();
  return detail::determinant<LaurentPoly>(a.entries(), a.rank(), LaurentPoly(k),
                                          LaurentPoly::constant(k, 1));
}

namespace {

// A nonzero kernel vector of the square matrix `a` over k, or nullopt when
// it is nonsingular.
std::optional<std::vector<mpq_class>> kernel_vector(std::vector<mpq_class> a, std::size_t m,
                                                    const Field& k) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  std::vector<bool> is_pivot(m, false);
  for (std::size_t col = 0; col < m && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && sgn(a[sel * m + col]) == 0) ++sel;
    if (sel == m) continue;
    for (std::size_t j = 0; j < m; ++j) std::swap(a[row * m + j], a[sel * m + j]);
    const mpq_class inv = k.inverse(a[row * m + col]);
    for (std::size_t j = 0; j < m; ++j) a[row * m + j] = k.element(a[row * m + j] * inv);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || sgn(a[i * m + col]) == 0) continue;
      const mpq_class factor = a[i * m + col];
      for (std::size_t j = 0; j < m; ++j) {
        a[i * m + j] = k.element(a[i * m + j] - factor * a[row * m + j]);
      }
    }
    pivot_col.push_back(col);
    is_pivot[col] = true;
    ++row;
  }
  if (pivot_col.size() == m) return std::nullopt;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<mpq_class> x(m, mpq_class(0));
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = k.element(-a[r * m + free_col]);
  return x;
}

long column_degree(const LMatrix& a, std::size_t j) {
  long d = 0;
  bool any = false;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    const LaurentPoly& f = a(i, j);
    if (f.is_zero()) continue;
    d = any ? std::max(d, f.high()) : f.high();
    any = true;
  }
  return d;
}

LMatrix adjugate(const LMatrix& w) {
  const std::size_t m = w.rank();
  const Field& k = w.field();
  LMatrix adj(k, m);
  if (m == 1) {
    adj(0, 0) = LaurentPoly::constant(k, 1);
    return adj;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      // adj(i, j) = (-1)^{i+j} det of w without row j and column i
      std::vector<LaurentPoly> minor;
      minor.reserve((m - 1) * (m - 1));
      for (std::size_t r = 0; r < m; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0; c < m; ++c) {
          if (c != i) minor.push_back(w(r, c));
        }
      }
      LaurentPoly d = lp_det(LMatrix(k, m - 1, std::move(minor)));
      adj(i, j) = (i + j) % 2 == 0 ? d : -d;
    }
  }
  return adj;
}

}  // namespace

bool check_certificate(const LMatrix& a, const Splitting& s) {
  const auto& cert = s.certificate;
  const Field& k = a.field();
  if (!std::is_sorted(s.type.degrees.begin(), s.type.degrees.end())) return false;
  if (s.type.degrees.size() != a.rank()) return false;
  if (!(cert.d == LMatrix::diagonal_powers(k, s.type.degrees))) return false;
  if (!cert.u.is_polynomial_in_s() || !cert.v.is_polynomial_in_s_inverse()) return false;
  for (const LMatrix* g : {&cert.u, &cert.v}) {
    auto unit = lp_is_unit(lp_det(*g));
    if (!unit || unit->exponent != 0) return false;
  }
  return cert.v * a * cert.u == cert.d;
}

Splitting split(const LMatrix& a, std::optional<std::size_t> iteration_cap) {
  const std::size_t m = a.rank();
  const Field& k = a.field();
  if (!lp_is_unit(lp_det(a))) {
    throw Error(ErrorCode::NotInvertibleOverRing, "det A is not of the form c s^n");
  }

  // P = s^shift A is a polynomial matrix.
  long lowest = 0, highest = 0;
  bool any = false;
  for (const auto& f : a.entries()) {
    if (f.is_zero()) continue;
    lowest = any ? std::min(lowest, f.low()) : f.low();
    highest = any ? std::max(highest, f.high()) : f.high();
    any = true;
  }
  const long shift = std::max(0L, -lowest);
  LMatrix p(k, m);
  const LaurentPoly s_shift = LaurentPoly::monomial(k, 1, shift);
  for (std::size_t i = 0; i < m * m; ++i) p(i / m, i % m) = a.entries()[i] * s_shift;
  const long span = highest - lowest;
  const std::size_t cap = iteration_cap.value_or(10 * m * static_cast<std::size_t>(span + 1));

  // Column reduction over k[s]: while the leading column coefficient matrix
  // is singular, a kernel combination lowers the degree of one column.
  LMatrix u = LMatrix::identity(k, m);
  std::vector<long> deg(m);
  for (std::size_t iteration = 0;; ++iteration) {
    std::vector<mpq_class> lead(m * m);
    for (std::size_t j = 0; j < m; ++j) {
      deg[j] = column_degree(p, j);
      for (std::size_t i = 0; i < m; ++i) lead[i * m + j] = p(i, j).coefficient(deg[j]);
    }
    auto kernel = kernel_vector(lead, m, k);
    if (!kernel) break;
    if (iteration >= cap) {
      throw Error(ErrorCode::IterationLimitExceeded,
                  "column reduction did not finish within " + std::to_string(cap) + " steps");
    }
    const auto& c = *kernel;
    std::size_t target = m;
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(c[j]) != 0 && (target == m || deg[j] > deg[target])) target = j;
    }
    const mpq_class inv = k.inverse(c[target]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == target || sgn(c[i]) == 0) continue;
      const LaurentPoly factor = LaurentPoly::monomial(k, c[i] * inv, deg[target] - deg[i]);
      for (std::size_t r = 0; r < m; ++r) {
        p(r, target) = p(r, target) + factor * p(r, i);
        u(r, target) = u(r, target) + factor * u(r, i);
      }
    }
  }

  // P = W diag(s^deg) with W invertible over k[s^-1].
  LMatrix w(k, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      w(i, j) = p(i, j) * LaurentPoly::monomial(k, 1, -deg[j]);
    }
  }
  auto det_w = lp_is_unit(lp_det(w));
  if (!det_w || det_w->exponent != 0) {
    throw Error(ErrorCode::CertificateFailure, "reduced matrix is not column proper");
  }
  LMatrix v = adjugate(w);
  const LaurentPoly inv_det = LaurentPoly::constant(k, k.inverse(det_w->coefficient));
  for (std::size_t i = 0; i < m * m; ++i) v(i / m, i % m) = v(i / m, i % m) * inv_det;

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return deg[x] < deg[y]; });
  Splitting out{SplittingType{}, FactorizationCertificate{LMatrix(k, m), LMatrix(k, m), LMatrix(k, m)}};
  for (std::size_t t = 0; t < m; ++t) {
    out.type.degrees.push_back(deg[order[t]] - shift);
    for (std::size_t r = 0; r < m; ++r) {
      out.certificate.u(r, t) = u(r, order[t]);
      out.certificate.v(t, r) = v(order[t], r);
    }
  }
  out.certificate.d = LMatrix::diagonal_powers(k, out.type.degrees);
  if (!check_certificate(a, out)) {
    throw Error(ErrorCode::CertificateFailure, "V A U does not re-multiply to the diagonal");
  }
  return out;
}

bool splitting_invariance_check(const LMatrix& a, const LMatrix& u, const LMatrix& v) {
  auto constant_det = [](const LMatrix& g) {
    auto unit = lp_is_unit(lp_det(g));
    return unit && unit->exponent == 0;
  };
  if (!u.is_polynomial_in_s() || !constant_det(u)) {
    throw Error(ErrorCode::InvalidAutomorphism, "U is not invertible over k[s]");
  }
  if (!v.is_polynomial_in_s_inverse() || !constant_det(v)) {
    throw Error(ErrorCode::InvalidAutomorphism, "V is not invertible over k[s^-1]");
  }
  return split(v * a * u).type == split(a).type;
}

std::string to_string(const LaurentPoly& f) {
  PSeries::Terms terms;
  for (const auto& [n, c] : f.terms()) terms.emplace(PExp(n), c);
  return to_string(PSeries(Prime(2), std::move(terms)), 's');
}

std::string to_string(const SplittingType& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.degrees.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(t.degrees[i]);
  }
  return out + ")";
}

}  // namespace projectivoid
