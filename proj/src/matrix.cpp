#include "projectivoid/matrix.hpp"

#include <random>
#include <set>

#include "projectivoid/detail/determinant.hpp"

namespace projectivoid {

SMatrix::SMatrix(Prime p, std::size_t m) : p_(p), m_(m), entries_(m * m, PSeries(p)) {
  if (m == 0) throw Error(ErrorCode::DimensionMismatch, "rank must be positive");
}

SMatrix::SMatrix(Prime p, std::size_t m, std::vector<PSeries> entries)
    : p_(p), m_(m), entries_(std::move(entries)) {
  if (m == 0 || entries_.size() != m * m) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(m * m) + " entries");
  }
  for (const auto& f : entries_) {
    if (!(f.prime() == p_)) throw Error(ErrorCode::PrimeMismatch, "entry over a different prime");
  }
}

SMatrix SMatrix::identity(Prime p, std::size_t m) {
  SMatrix r(p, m);
  for (std::size_t i = 0; i < m; ++i) r(i, i) = PSeries::one(p);
  return r;
}

SMatrix SMatrix::diagonal(Prime p, const std::vector<PSeries>& diag) {
  SMatrix r(p, diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) r(i, i) = diag[i];
  return SMatrix(p, diag.size(), std::move(r.entries_));
}

SMatrix SMatrix::shear(Prime p, std::size_t m, std::size_t i, std::size_t j, const PSeries& f) {
  if (i == j || i >= m || j >= m) throw Error(ErrorCode::DimensionMismatch, "invalid shear position");
  SMatrix r = identity(p, m);
  r(i, j) = f;
  return SMatrix(p, m, std::move(r.entries_));
}

bool SMatrix::is_exact() const {
  for (const auto& f : entries_) {
    if (!f.is_exact()) return false;
  }
  return true;
}

SMatrix operator*(const SMatrix& x, const SMatrix& y) {
  if (x.m_ != y.m_) throw Error(ErrorCode::DimensionMismatch, "matrix ranks differ");
  if (!(x.p_ == y.p_)) throw Error(ErrorCode::PrimeMismatch, "matrices over different primes");
  const std::size_t m = x.m_;
  SMatrix r(x.p_, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      const PSeries& a = x(i, k);
      if (a.is_zero() && a.is_exact()) continue;
      for (std::size_t j = 0; j < m; ++j) r(i, j) += a * y(k, j);
    }
  }
  return r;
}

PSeries det(const SMatrix& a) {
  if (!a.is_exact()) throw Error(ErrorCode::InexactSeries, "determinant needs exact entries");
  const PSeries zero(a.prime());
  return detail::determinant<PSeries>(a.entries(), a.rank(), zero, PSeries::one(a.prime()));
}

bool is_transition(const SMatrix& a) { return is_unit(det(a), Subring::Full); }

BundleDegree bundle_degree(const SMatrix& a) {
  PSeries d = det(a);
  if (!is_unit(d, Subring::Full)) {
    throw Error(ErrorCode::NotATransitionMatrix, "determinant is not a unit");
  }
  return BundleDegree{monomial_factor(d).e};
}

bool validate_automorphism(const SMatrix& m, Subring side) {
  for (const auto& f : m.entries()) {
    if (!subring_check(f, side)) return false;
  }
  return is_unit(det(m), side);
}

SMatrix act(const SMatrix& v, const SMatrix& a, const SMatrix& u) {
  if (!validate_automorphism(u, Subring::NonNeg)) {
    throw Error(ErrorCode::InvalidAutomorphism, "U(s) is not invertible over K<v^{1/p^inf}>");
  }
  if (!validate_automorphism(v, Subring::NonPos)) {
    throw Error(ErrorCode::InvalidAutomorphism, "V(s^-1) is not invertible over K<v^{-1/p^inf}>");
  }
  if (!is_transition(a)) throw Error(ErrorCode::NotATransitionMatrix, "det A is not a unit");
  return v * a * u;
}

namespace {

class SeriesSampler {
 public:
  SeriesSampler(Prime p, std::uint64_t seed) : p_(p), rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  // Nonzero exponent k/p^b in (0, 2], negated for NonPos.
  PExp exponent(Subring side) {
    const unsigned long b = static_cast<unsigned long>(uniform(0, 2));
    long scale = 1;
    for (unsigned long i = 0; i < b; ++i) scale *= static_cast<long>(p_.value());
    PExp e = PExp::canon(mpz_class(uniform(1, 2 * scale)), b, p_);
    return side == Subring::NonPos ? -e : e;
  }

  // Coefficient of valuation exactly 0.
  mpq_class unit_coefficient() {
    long c;
    do {
      c = uniform(-4, 4);
    } while (c == 0 || c % static_cast<long>(p_.value()) == 0);
    return mpq_class(c);
  }

  // One or two terms, exponents in the side's subring.
  PSeries shear_entry(Subring side) {
    PSeries::Terms t;
    const long n = uniform(1, 2);
    for (long i = 0; i < n; ++i) {
      PExp e = uniform(0, 3) == 0 ? PExp(0) : exponent(side);
      t[e] += mpq_class(uniform(1, 3) * (uniform(0, 1) ? 1 : -1));
    }
    return PSeries(p_, std::move(t));
  }

  // c0 + p*c1*v^e: the constant term strictly dominates.
  PSeries one_sided_unit(Subring side) {
    PSeries u = PSeries::constant(p_, unit_coefficient());
    if (uniform(0, 1)) {
      mpq_class c1 = unit_coefficient() * static_cast<long>(p_.value());
      u += PSeries::monomial(p_, c1, exponent(side));
    }
    return u;
  }

 private:
  Prime p_;
  std::mt19937_64 rng_;
};

}  // namespace

SMatrix random_automorphism(Prime p, std::size_t m, Subring side, AutomorphismOptions options,
                            std::uint64_t seed) {
  if (side == Subring::Full) {
    throw Error(ErrorCode::SubringViolation, "automorphisms live over NonNeg or NonPos");
  }
  SeriesSampler sample(p, seed);
  SMatrix result = SMatrix::identity(p, m);
  if (options.diagonal) {
    std::vector<PSeries> diag;
    for (std::size_t i = 0; i < m; ++i) diag.push_back(sample.one_sided_unit(side));
    result = SMatrix::diagonal(p, diag);
  }
  if (m < 2) return result;
  for (std::size_t k = 0; k < options.shears; ++k) {
    auto i = static_cast<std::size_t>(sample.uniform(0, static_cast<long>(m) - 1));
    auto j = static_cast<std::size_t>(sample.uniform(0, static_cast<long>(m) - 2));
    if (j >= i) ++j;
    result = result * SMatrix::shear(p, m, i, j, sample.shear_entry(side));
  }
  return result;
}

std::vector<SMatrix> degree_one_family(Prime p, unsigned max_pow) {
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), p.value(), max_pow);
  std::vector<SMatrix> out;
  std::set<PExp> seen;
  const PExp one(1);
  for (mpz_class k = 0; k <= denom; ++k) {
    PExp a = PExp::canon(k, max_pow, p);
    if (!seen.insert(a).second) continue;
    out.push_back(SMatrix::diagonal(
        p, {PSeries::monomial(p, 1, a), PSeries::monomial(p, 1, one - a)}));
  }
  return out;
}

}  // namespace projectivoid
