#include "projectivoid/coefficient.hpp"

namespace projectivoid {

long Valuation::value() const {
  if (infinite_) throw std::logic_error("valuation of zero is infinite");
  return value_;
}

std::string Valuation::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

Valuation padic_valuation(const mpz_class& x, Prime p) {
  if (sgn(x) == 0) return Valuation::infinity();
  mpz_class rest;
  mpz_class prime(p.value());
  auto v = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
  return Valuation(static_cast<long>(v));
}

Valuation padic_valuation(const mpq_class& x, Prime p) {
  if (sgn(x) == 0) return Valuation::infinity();
  return Valuation(padic_valuation(x.get_num(), p).value() -
                   padic_valuation(x.get_den(), p).value());
}

unsigned long residue_of(const mpq_class& x, Prime p) {
  Valuation v = padic_valuation(x, p);
  if (v < Valuation(0)) {
    throw Error(ErrorCode::NegativeValuation, "coefficient is not in the valuation ring");
  }
  if (v > Valuation(0)) return 0;
  mpz_class mod(p.value());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), x.get_den_mpz_t(), mod.get_mpz_t());
  mpz_class r = x.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return r.get_ui();
}

ResidueElem ResidueElem::inverse() const {
  if (r_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero residue");
  mpz_class inv;
  mpz_class r(r_), mod(p_.value());
  mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return ResidueElem(inv.get_ui(), p_);
}

ResidueElem operator+(const ResidueElem& x, const ResidueElem& y) {
  if (!(x.p_ == y.p_)) throw Error(ErrorCode::PrimeMismatch, "residues over different primes");
  unsigned long p = x.p_.value();
  return ResidueElem((x.r_ + y.r_) % p, x.p_);
}

ResidueElem operator*(const ResidueElem& x, const ResidueElem& y) {
  if (!(x.p_ == y.p_)) throw Error(ErrorCode::PrimeMismatch, "residues over different primes");
  mpz_class prod = mpz_class(x.r_) * y.r_;
  return ResidueElem(mpz_class(prod % x.p_.value()).get_ui(), x.p_);
}

ResidueElem operator-(const ResidueElem& x) {
  return ResidueElem((x.p_.value() - x.r_) % x.p_.value(), x.p_);
}

ResidueElem PadicCoeff::reduce() const { return ResidueElem(residue_of(value_, p_), p_); }

PadicCoeff PadicCoeff::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero coefficient");
  return PadicCoeff(mpq_class(1 / value_), p_);
}

namespace {
void check_same(const PadicCoeff& x, const PadicCoeff& y) {
  if (!(x.prime() == y.prime())) {
    throw Error(ErrorCode::PrimeMismatch, "coefficients over different primes");
  }
}
}  // namespace

PadicCoeff operator+(const PadicCoeff& x, const PadicCoeff& y) {
  check_same(x, y);
  return PadicCoeff(mpq_class(x.value_ + y.value_), x.p_);
}

PadicCoeff operator-(const PadicCoeff& x, const PadicCoeff& y) {
  check_same(x, y);
  return PadicCoeff(mpq_class(x.value_ - y.value_), x.p_);
}

PadicCoeff operator*(const PadicCoeff& x, const PadicCoeff& y) {
  check_same(x, y);
  return PadicCoeff(mpq_class(x.value_ * y.value_), x.p_);
}

PadicCoeff operator-(const PadicCoeff& x) { return PadicCoeff(mpq_class(-x.value_), x.p_); }

std::strong_ordering abs_cmp(const PadicCoeff& x, const PadicCoeff& y) {
  check_same(x, y);
  return y.valuation() <=> x.valuation();
}

}  // namespace projectivoid
