#include "projectivoid/literal.hpp"

#include <cctype>

namespace projectivoid {

namespace {

class Parser {
 public:
  Parser(std::string_view text, Prime p, char variable) : text_(text), p_(p), var_(variable) {}

  PSeries series() {
    PSeries::Terms terms;
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
    }
    add_term(terms, negative);
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        get();
        add_term(terms, c == '-');
      } else {
        break;
      }
    }
    Valuation precision = Valuation::infinity();
    skip_ws();
    if (peek() == '(') precision = precision_clause();
    expect_end();
    return PSeries(p_, std::move(terms), precision);
  }

  PExp exponent_only() {
    PExp e = exponent();
    expect_end();
    return e;
  }

  mpq_class coefficient_only() {
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = get() == '-';
    mpq_class c = coefficient();
    expect_end();
    return negative ? mpq_class(-c) : c;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char get() {
    char c = peek();
    if (c != '\0') ++pos_;
    return c;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect_end() {
    if (peek() != '\0') fail("unexpected trailing input");
  }
  void expect_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }

  mpz_class unsigned_int() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  mpz_class signed_int() {
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = get() == '-';
    mpz_class n = unsigned_int();
    return negative ? mpz_class(-n) : n;
  }

  mpq_class coefficient() {
    mpz_class num = unsigned_int();
    if (peek() != '/') return mpq_class(num);
    get();
    mpz_class den = unsigned_int();
    if (den == 0) fail("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  PExp exponent() {
    mpz_class num = signed_int();
    if (peek() != '/') return PExp(num);
    get();
    std::size_t base_pos = pos_;
    mpz_class base = unsigned_int();
    expect('^');
    mpz_class power = unsigned_int();
    if (base != p_.value()) {
      throw Error(ErrorCode::WrongPrimeDenominator,
                  "denominator base " + base.get_str() + " is not the session prime " +
                      std::to_string(p_.value()) + " at position " + std::to_string(base_pos));
    }
    if (!power.fits_ulong_p()) fail("exponent denominator too large");
    return PExp::canon(num, power.get_ui(), p_);
  }

  PExp monomial_exponent() {
    expect(var_);
    if (peek() != '^') return PExp(1);
    get();
    if (peek() == '(') {
      get();
      PExp e = exponent();
      expect(')');
      return e;
    }
    return exponent();
  }

  void add_term(PSeries::Terms& terms, bool negative) {
    mpq_class c(1);
    PExp e(0);
    char first = peek();
    if (std::isdigit(static_cast<unsigned char>(first))) {
      c = coefficient();
      if (peek() == '*') {
        get();
        e = monomial_exponent();
      }
    } else if (first == var_) {
      e = monomial_exponent();
    } else {
      fail("expected a term");
    }
    if (negative) c = -c;
    terms[e] += c;
  }

  Valuation precision_clause() {
    expect('(');
    expect_word("mod");
    expect_word("val");
    expect_word(">=");
    mpz_class v = signed_int();
    if (!v.fits_slong_p()) fail("precision out of range");
    expect(')');
    return Valuation(v.get_si());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Prime p_;
  char var_;
};

std::string monomial(const PExp& e, char variable) {
  if (e.is_zero()) return {};
  std::string v(1, variable);
  if (e == PExp(1)) return v;
  if (e.is_integer() && e.sign() > 0) return v + "^" + to_string(e);
  return v + "^(" + to_string(e) + ")";
}

template <typename Terms, typename Abs, typename Negative>
std::string print_terms(const Terms& terms, char variable, Abs abs_string, Negative is_negative) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool neg = is_negative(c);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string coeff = abs_string(c);
    std::string mono = monomial(e, variable);
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

}  // namespace

PExp parse_exponent(std::string_view text, Prime p) { return Parser(text, p, 'v').exponent_only(); }

mpq_class parse_coefficient(std::string_view text) {
  return Parser(text, Prime(2), 'v').coefficient_only();
}

PSeries parse_series(std::string_view text, Prime p, char variable) {
  return Parser(text, p, variable).series();
}

std::string to_string(const PExp& e) {
  if (e.is_integer()) return e.num().get_str();
  return e.num().get_str() + "/" + std::to_string(e.prime()->value()) + "^" + std::to_string(e.pow());
}

std::string to_string(const mpq_class& c) { return c.get_str(); }

std::string to_string(const PSeries& f, char variable) {
  std::string out = print_terms(
      f.terms(), variable, [](const mpq_class& c) { return mpq_class(abs(c)).get_str(); },
      [](const mpq_class& c) { return sgn(c) < 0; });
  if (!f.is_exact()) out += " (mod val >= " + f.precision().to_string() + ")";
  return out;
}

std::string to_string(const ResiduePoly& f) {
  return print_terms(
      f.terms(), 'v', [](unsigned long c) { return std::to_string(c); },
      [](unsigned long) { return false; });
}

}  // namespace projectivoid
