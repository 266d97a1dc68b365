#include "projectivoid/series.hpp"

#include <algorithm>

namespace projectivoid {

namespace {

void check_prime(const PSeries& f, const PSeries& g) {
  if (!(f.prime() == g.prime())) {
    throw Error(ErrorCode::PrimeMismatch, "series over different primes");
  }
}

// Lower bound on the valuation of the true element represented by f.
Valuation effective_valuation(const PSeries& f) {
  return min(gauss_valuation(f), f.precision());
}

}  // namespace

PSeries::PSeries(Prime p, Terms terms, Valuation precision)
    : p_(p), terms_(std::move(terms)), precision_(precision) {
  std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
  for (auto& [e, c] : terms_) {
    if (auto ep = e.prime(); ep && !(*ep == p_)) {
      throw Error(ErrorCode::PrimeMismatch, "exponent denominator is not a power of the series prime");
    }
    c.canonicalize();
  }
  drop_below_precision();
}

PSeries PSeries::constant(Prime p, const mpq_class& c) { return monomial(p, c, PExp(0)); }

PSeries PSeries::monomial(Prime p, const mpq_class& c, const PExp& e) {
  Terms t;
  if (sgn(c) != 0) t.emplace(e, c);
  return PSeries(p, std::move(t));
}

mpq_class PSeries::coefficient(const PExp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void PSeries::drop_below_precision() {
  if (precision_.is_infinite()) return;
  std::erase_if(terms_, [&](const auto& kv) {
    return padic_valuation(kv.second, p_) >= precision_;
  });
}

PSeries PSeries::truncated(Valuation v) const {
  PSeries r = *this;
  r.precision_ = min(precision_, v);
  r.drop_below_precision();
  return r;
}

PSeries PSeries::shifted(const PExp& e) const {
  Terms t;
  for (const auto& [x, c] : terms_) t.emplace_hint(t.end(), x + e, c);
  return PSeries(p_, std::move(t), precision_);
}

PSeries PSeries::scaled(const mpq_class& c) const {
  if (sgn(c) == 0) return PSeries(p_);
  Terms t;
  for (const auto& [x, a] : terms_) t.emplace_hint(t.end(), x, a * c);
  return PSeries(p_, std::move(t), precision_ + padic_valuation(c, p_));
}

PSeries operator+(const PSeries& f, const PSeries& g) {
  check_prime(f, g);
  PSeries::Terms t = f.terms_;
  for (const auto& [e, c] : g.terms_) {
    auto [it, inserted] = t.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) t.erase(it);
    }
  }
  return PSeries(f.p_, std::move(t), min(f.precision_, g.precision_));
}

PSeries operator-(const PSeries& f) {
  PSeries r = f;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

PSeries operator-(const PSeries& f, const PSeries& g) { return f + (-g); }

PSeries operator*(const PSeries& f, const PSeries& g) {
  check_prime(f, g);
  Valuation prec = min(f.precision_ + effective_valuation(g), g.precision_ + effective_valuation(f));
  PSeries::Terms t;
  mpq_class prod;
  for (const auto& [e1, c1] : f.terms_) {
    for (const auto& [e2, c2] : g.terms_) {
      prod = c1 * c2;
      auto [it, inserted] = t.try_emplace(e1 + e2, prod);
      if (!inserted) it->second += prod;
    }
  }
  return PSeries(f.p_, std::move(t), prec);
}

ResiduePoly::ResiduePoly(Prime p, Terms terms) : p_(p), terms_(std::move(terms)) {
  for (auto& kv : terms_) kv.second %= p_.value();
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

ResiduePoly operator*(const ResiduePoly& x, const ResiduePoly& y) {
  if (!(x.p_ == y.p_)) throw Error(ErrorCode::PrimeMismatch, "residues over different primes");
  const unsigned long p = x.p_.value();
  ResiduePoly::Terms t;
  for (const auto& [e1, c1] : x.terms_) {
    for (const auto& [e2, c2] : y.terms_) {
      unsigned long prod = (ResidueElem(c1, x.p_) * ResidueElem(c2, x.p_)).value();
      auto& slot = t[e1 + e2];
      slot = (slot + prod) % p;
    }
  }
  return ResiduePoly(x.p_, std::move(t));
}

Valuation gauss_valuation(const PSeries& f) {
  Valuation v = Valuation::infinity();
  for (const auto& kv : f.terms()) v = min(v, padic_valuation(kv.second, f.prime()));
  return v;
}

std::vector<PExp> dominant_terms(const PSeries& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroSeries, "dominant terms of the zero series");
  const Valuation g = gauss_valuation(f);
  std::vector<PExp> out;
  for (const auto& [e, c] : f.terms()) {
    if (padic_valuation(c, f.prime()) == g) out.push_back(e);
  }
  return out;
}

bool subring_check(const PSeries& f, Subring ring) {
  if (f.is_zero() || ring == Subring::Full) return true;
  // Terms are sorted by exponent, so the extremes decide.
  if (ring == Subring::NonNeg) return f.terms().begin()->first.sign() >= 0;
  return f.terms().rbegin()->first.sign() <= 0;
}

bool is_unit(const PSeries& f, Subring ring) {
  if (!subring_check(f, ring)) {
    throw Error(ErrorCode::SubringViolation, "series has exponents outside the subring");
  }
  if (f.is_zero()) return false;
  auto dom = dominant_terms(f);
  if (dom.size() != 1) return false;
  return ring == Subring::Full || dom.front().is_zero();
}

UnitDecomposition monomial_factor(const PSeries& f) {
  if (!is_unit(f, Subring::Full)) throw Error(ErrorCode::NotAUnit, "series is not a unit");
  PExp e = dominant_terms(f).front();
  PSeries u = f.shifted(-e);
  return {std::move(e), std::move(u)};
}

PSeries invert(const PSeries& f, long target) {
  if (target <= 0) throw Error(ErrorCode::NonpositivePrecision, "target precision must be positive");
  auto [e, u] = monomial_factor(f);
  const mpq_class a0_inv = 1 / u.coefficient(PExp(0));
  const Prime p = f.prime();

  // u / a0 = 1 - g with |g| < 1
  PSeries g = PSeries::one(p) - u.scaled(a0_inv);
  PSeries sum = PSeries::one(p);
  if (!g.is_zero()) {
    const long w = gauss_valuation(g).value();
    const long terms = (target + w - 1) / w;  // ceil(target / w)
    PSeries power = PSeries::one(p);
    const Valuation cut(target);
    for (long i = 1; i <= terms; ++i) {
      power = (power * g).truncated(cut);
      sum = sum + power;
    }
    sum = sum.truncated(cut);
  } else if (!u.is_exact()) {
    sum = sum.truncated(u.precision() + padic_valuation(a0_inv, p));
  }
  return sum.scaled(a0_inv).shifted(-e);
}

PExp degree(const PSeries& f) { return dominant_terms(f).back(); }

ResiduePoly reduce_series(const PSeries& f) {
  if (gauss_valuation(f) < Valuation(0)) {
    throw Error(ErrorCode::NormExceedsOne, "Gauss norm exceeds 1");
  }
  if (f.precision() < Valuation(1)) {
    throw Error(ErrorCode::InexactSeries, "precision too low to determine the reduction");
  }
  ResiduePoly::Terms t;
  for (const auto& [e, c] : f.terms()) {
    if (unsigned long r = residue_of(c, f.prime()); r != 0) t.emplace(e, r);
  }
  return ResiduePoly(f.prime(), std::move(t));
}

PSeries gauss_normalized(const PSeries& f) {
  if (f.is_zero()) return f;
  const long v = gauss_valuation(f).value();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), f.prime().value(), static_cast<unsigned long>(v < 0 ? -v : v));
  return v >= 0 ? f.scaled(mpq_class(1, scale)) : f.scaled(mpq_class(scale));
}

bool congruent(const PSeries& f, const PSeries& g, Valuation v) {
  PSeries d = f - g;
  if (d.precision() < v) return false;
  return std::all_of(d.terms().begin(), d.terms().end(), [&](const auto& kv) {
    return padic_valuation(kv.second, d.prime()) >= v;
  });
}

}  // namespace projectivoid
