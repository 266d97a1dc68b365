#include <doctest.h>

#include "projectivoid/detail/determinant.hpp"
#include "projectivoid/literal.hpp"
#include "projectivoid/matrix.hpp"
#include "projectivoid/matrix_io.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace projectivoid;

namespace {
const Prime p2(2);
PSeries s(const char* text, Prime p = p2) { return parse_series(text, p); }
PExp ex(long num, unsigned long pow, Prime p = p2) { return canon(mpz_class(num), pow, p); }

SMatrix mat(std::initializer_list<const char*> entries, Prime p = p2) {
  std::vector<PSeries> v;
  for (const char* e : entries) v.push_back(s(e, p));
  std::size_t m = 1;
  while (m * m < v.size()) ++m;
  return SMatrix(p, m, std::move(v));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::SyntaxError;
}
}  // namespace

TEST_CASE("determinant examples") {
  CHECK(det(mat({"1", "v", "v", "1"})) == s("1 - v^2"));
  CHECK(det(SMatrix::identity(p2, 4)) == s("1"));
  CHECK(det(mat({"v^(-1/2^2)", "0", "0", "v"})) == s("v^(3/2^2)"));
  CHECK(det(mat({"1", "2", "3", "4", "5", "6", "7", "8", "10"})) == s("-3"));
  CHECK(code_of([] { (void)det(mat({"1 (mod val >= 2)", "0", "0", "1"})); }) == ErrorCode::InexactSeries);
}

TEST_CASE("determinant routes agree with Leibniz") {
  testing::Gen gen(41);
  for (std::size_t m = 1; m <= 6; ++m) {
    for (int trial = 0; trial < (m <= 4 ? 25 : 4); ++trial) {
      SMatrix a = gen.matrix(p2, m, 2);
      const PSeries zero(p2), one = PSeries::one(p2);
      PSeries leibniz = oracle::leibniz_det(a.entries(), m, zero, one);
      std::span<const PSeries> span(a.entries());
      CHECK(detail::det_by_minors(span, m, zero, one) == leibniz);
      CHECK(detail::det_berkowitz(span, m, zero, one) == leibniz);
      CHECK(det(a) == leibniz);
    }
  }
}

TEST_CASE("bundle degree") {
  CHECK(bundle_degree(mat({"v^(-1/2^2)", "0", "0", "v"})).value == ex(3, 2));
  CHECK(bundle_degree(mat({"v", "1", "0", "1"})).value == PExp(1));
  CHECK(is_transition(SMatrix::identity(p2, 3)));
  CHECK_FALSE(is_transition(mat({"1", "v", "v", "1"})));
  CHECK(code_of([] { (void)bundle_degree(mat({"1", "v", "v", "1"})); }) == ErrorCode::NotATransitionMatrix);
  CHECK(code_of([] { (void)bundle_degree(SMatrix(p2, 2)); }) == ErrorCode::NotATransitionMatrix);
}

TEST_CASE("action of automorphisms") {
  SMatrix a = SMatrix::diagonal(p2, {s("v"), s("1")});
  SMatrix u = SMatrix::shear(p2, 2, 0, 1, s("v^(1/2^2)"));
  SMatrix b = act(SMatrix::identity(p2, 2), a, u);
  CHECK(b == mat({"v", "v^(5/2^2)", "0", "1"}));
  CHECK(bundle_degree(b) == bundle_degree(a));

  SMatrix bad_u = SMatrix::shear(p2, 2, 0, 1, s("v^(-1)"));
  CHECK(code_of([&] { (void)act(SMatrix::identity(p2, 2), a, bad_u); }) == ErrorCode::InvalidAutomorphism);
  SMatrix bad_v = SMatrix::shear(p2, 2, 0, 1, s("v"));
  CHECK(code_of([&] { (void)act(bad_v, a, SMatrix::identity(p2, 2)); }) == ErrorCode::InvalidAutomorphism);
  // det 1 + v is not a unit of the positive ring
  CHECK_FALSE(validate_automorphism(SMatrix::diagonal(p2, {s("1 + v"), s("1")}), Subring::NonNeg));
  CHECK(validate_automorphism(SMatrix::diagonal(p2, {s("1 + 2*v"), s("3")}), Subring::NonNeg));
  CHECK(code_of([&] { (void)act(SMatrix::identity(p2, 2), mat({"1", "v", "v", "1"}), u); }) ==
        ErrorCode::NotATransitionMatrix);
  CHECK(code_of([&] { (void)act(SMatrix::identity(p2, 3), a, u); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("random automorphisms") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Prime p = seed % 2 ? Prime(3) : Prime(2);
    const std::size_t m = 1 + seed % 4;
    const Subring side = seed % 3 ? Subring::NonNeg : Subring::NonPos;
    SMatrix g = random_automorphism(p, m, side, {}, seed);
    CHECK(g == random_automorphism(p, m, side, {}, seed));
    CHECK(validate_automorphism(g, side));
    CHECK(bundle_degree(g).value == PExp(0));
  }
  CHECK(random_automorphism(p2, 3, Subring::NonNeg, {.shears = 0, .diagonal = false}, 5) ==
        SMatrix::identity(p2, 3));
  CHECK(random_automorphism(p2, 3, Subring::NonNeg, {}, 1) != random_automorphism(p2, 3, Subring::NonNeg, {}, 2));
  CHECK(code_of([] { (void)random_automorphism(p2, 2, Subring::Full, {}, 0); }) == ErrorCode::SubringViolation);
}

TEST_CASE("degree invariance under the action") {
  testing::Gen gen(42);
  for (int trial = 0; trial < 40; ++trial) {
    const Prime p = trial % 2 ? Prime(3) : Prime(2);
    const std::size_t m = 1 + trial % 3;
    PExp expected;
    SMatrix a = gen.transition(p, m, &expected);
    CHECK(bundle_degree(a).value == expected);
    SMatrix u = random_automorphism(p, m, Subring::NonNeg, {.shears = 2}, trial);
    SMatrix v = random_automorphism(p, m, Subring::NonPos, {.shears = 2}, trial + 1000);
    CHECK(bundle_degree(act(v, a, u)).value == expected);
  }
}

TEST_CASE("determinant is multiplicative") {
  testing::Gen gen(43);
  for (int trial = 0; trial < 40; ++trial) {
    const Prime p = trial % 2 ? Prime(3) : Prime(2);
    const std::size_t m = 1 + trial % 4;
    SMatrix a = gen.matrix(p, m), b = gen.matrix(p, m);
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("degree one family") {
  CHECK(degree_one_family(p2, 0).size() == 2);
  CHECK(degree_one_family(p2, 4).size() == 17);
  auto fam = degree_one_family(Prime(3), 1);
  REQUIRE(fam.size() == 4);
  CHECK(fam[1] == SMatrix::diagonal(Prime(3), {s("v^(1/3^1)", Prime(3)), s("v^(2/3^1)", Prime(3))}));
  for (const SMatrix& a : degree_one_family(p2, 3)) CHECK(bundle_degree(a).value == PExp(1));
}

TEST_CASE("matrix documents") {
  SMatrix a = parse_matrix(R"j({"p": 2, "m": 2, "entries": [["1", "v^(1/2^1)"], ["0", "v"]]})j");
  CHECK(a == mat({"1", "v^(1/2^1)", "0", "v"}));
  CHECK(parse_matrix(to_json(a)) == a);
  CHECK(code_of([] { (void)parse_matrix(R"j({"p": 2, "m": 2, "entries": [["1"], ["0", "v"]]})j"); }) ==
        ErrorCode::RaggedMatrix);
  CHECK(code_of([] { (void)parse_matrix(R"j({"p": 2, "m": 3, "entries": [["1", "0"], ["0", "v"]]})j"); }) ==
        ErrorCode::RaggedMatrix);
  CHECK(code_of([] { (void)parse_matrix(R"j({"p": 2, "entries": []})j"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { (void)parse_matrix("[1, 2"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { (void)parse_matrix(R"j({"p": 4, "m": 1, "entries": [["1"]]})j"); }) == ErrorCode::InvalidPrime);
  CHECK(code_of([] { (void)parse_matrix(R"j({"p": 2, "m": 1, "entries": [["1"]]})j", Prime(3)); }) ==
        ErrorCode::PrimeMismatch);
}
