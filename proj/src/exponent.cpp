#include "projectivoid/exponent.hpp"

#include <set>
#include <utility>

namespace projectivoid {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPrime: return "InvalidPrime";
    case ErrorCode::PrimeMismatch: return "PrimeMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NegativeValuation: return "NegativeValuation";
    case ErrorCode::ZeroSeries: return "ZeroSeries";
    case ErrorCode::SubringViolation: return "SubringViolation";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NonpositivePrecision: return "NonpositivePrecision";
    case ErrorCode::NormExceedsOne: return "NormExceedsOne";
    case ErrorCode::InexactSeries: return "InexactSeries";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotATransitionMatrix: return "NotATransitionMatrix";
    case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorCode::NotInvertibleOverRing: return "NotInvertibleOverRing";
    case ErrorCode::IterationLimitExceeded: return "IterationLimitExceeded";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::WrongPrimeDenominator: return "WrongPrimeDenominator";
    case ErrorCode::RaggedMatrix: return "RaggedMatrix";
  }
  return "UnknownError";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPrime:
    case ErrorCode::PrimeMismatch:
    case ErrorCode::NonpositivePrecision:
    case ErrorCode::SyntaxError:
    case ErrorCode::WrongPrimeDenominator:
    case ErrorCode::RaggedMatrix:
      return true;
    default:
      return false;
  }
}

bool is_prime(unsigned long n) noexcept {
  if (n < 2) return false;
  for (unsigned long d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(unsigned long value) : value_(value) {
  if (!is_prime(value)) {
    throw Error(ErrorCode::InvalidPrime, std::to_string(value) + " is not prime");
  }
}

namespace {

mpz_class prime_power(unsigned long p, unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, k);
  return r;
}

// Returns the common prime of two exponents being aligned; `hi` has the
// larger pow.
unsigned long common_prime(const PExp& lo, const PExp& hi) {
  auto hp = hi.prime();
  auto lp = lo.prime();
  if (lp && hp && !(*lp == *hp)) {
    throw Error(ErrorCode::PrimeMismatch, "exponents over different primes");
  }
  return hp ? hp->value() : 0;
}

}  // namespace

PExp PExp::canon(const mpz_class& num, unsigned long pow, Prime p) {
  PExp r;
  r.num_ = num;
  if (sgn(num) == 0) return r;
  r.pow_ = pow;
  while (r.pow_ > 0 && mpz_divisible_ui_p(r.num_.get_mpz_t(), p.value())) {
    mpz_divexact_ui(r.num_.get_mpz_t(), r.num_.get_mpz_t(), p.value());
    --r.pow_;
  }
  r.prime_ = r.pow_ == 0 ? 0 : p.value();
  return r;
}

std::optional<Prime> PExp::prime() const {
  if (prime_ == 0) return std::nullopt;
  return Prime(prime_);
}

mpq_class PExp::to_rational() const {
  if (pow_ == 0) return mpq_class(num_);
  mpq_class q(num_, prime_power(prime_, pow_));
  q.canonicalize();
  return q;
}

std::strong_ordering operator<=>(const PExp& x, const PExp& y) {
  if (x.pow_ == y.pow_) {
    if (x.pow_ > 0 && x.prime_ != y.prime_) {
      throw Error(ErrorCode::PrimeMismatch, "exponents over different primes");
    }
    int c = cmp(x.num_, y.num_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  const bool x_lo = x.pow_ < y.pow_;
  const PExp& lo = x_lo ? x : y;
  const PExp& hi = x_lo ? y : x;
  unsigned long p = common_prime(lo, hi);
  mpz_class scaled = lo.num_ * prime_power(p, hi.pow_ - lo.pow_);
  int c = x_lo ? cmp(scaled, hi.num_) : cmp(hi.num_, scaled);
  // Canonical forms with different pow are never equal.
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

PExp operator+(const PExp& x, const PExp& y) {
  if (x.pow_ == 0 && y.pow_ == 0) return PExp(mpz_class(x.num_ + y.num_));
  const bool x_lo = x.pow_ <= y.pow_;
  const PExp& lo = x_lo ? x : y;
  const PExp& hi = x_lo ? y : x;
  unsigned long p = common_prime(lo, hi);
  mpz_class sum = lo.num_ * prime_power(p, hi.pow_ - lo.pow_) + hi.num_;
  return PExp::canon(sum, hi.pow_, Prime(p));
}

PExp operator-(const PExp& x) {
  PExp r = x;
  r.num_ = -r.num_;
  return r;
}

PExp operator-(const PExp& x, const PExp& y) { return x + (-y); }

std::optional<PExp> exponent_from_rational(const mpq_class& q, Prime p) {
  mpz_class den = q.get_den();
  unsigned long pow = 0;
  while (den != 1) {
    if (!mpz_divisible_ui_p(den.get_mpz_t(), p.value())) return std::nullopt;
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p.value());
    ++pow;
  }
  return PExp::canon(q.get_num(), pow, p);
}

std::vector<PExp> enumerate_antidiagonal(Prime p, std::size_t count) {
  std::vector<PExp> out;
  std::set<PExp> seen;
  out.reserve(count);
  for (unsigned long k = 0; out.size() < count; ++k) {
    for (unsigned long a = 0; a <= k && out.size() < count; ++a) {
      PExp e = PExp::canon(mpz_class(a), k - a, p);
      if (seen.insert(e).second) out.push_back(std::move(e));
    }
  }
  return out;
}

namespace {

// q -> 1 / (2 floor(q) - q + 1)
mpq_class calkin_wilf_next(const mpq_class& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  mpq_class next = 1 / (2 * mpq_class(fl) - q + 1);
  next.canonicalize();
  return next;
}

}  // namespace

std::vector<mpq_class> enumerate_calkin_wilf(std::size_t count) {
  std::vector<mpq_class> out;
  out.reserve(count);
  mpq_class q(1);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(q);
    q = calkin_wilf_next(q);
  }
  return out;
}

std::vector<PExp> enumerate_calkin_wilf(std::size_t count, Prime p_filter) {
  std::vector<PExp> out;
  mpq_class q(1);
  for (std::size_t i = 0; i < count; ++i) {
    if (auto e = exponent_from_rational(q, p_filter)) out.push_back(std::move(*e));
    q = calkin_wilf_next(q);
  }
  return out;
}

}  // namespace projectivoid
