#include <boost/multiprecision/cpp_bin_float.hpp>
#include <random>

#include "doctest.h"
#include "subsol/error.hpp"
#include "subsol/scalar.hpp"

using namespace subsol;

namespace {

using Float256 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<256>>;

// Independent high-precision evaluation of a + b*sqrt5.
int oracle_sign(const Golden& x) {
  auto to_f = [](const Rational& r) { return Float256(r.num().get_str()) / Float256(r.den().get_str()); };
  Float256 v = to_f(x.a()) + to_f(x.b()) * boost::multiprecision::sqrt(Float256(5));
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

Rational random_rational(std::mt19937_64& rng, std::int64_t span) {
  std::int64_t num = static_cast<std::int64_t>(rng() % (2 * span + 1)) - span;
  std::int64_t den = static_cast<std::int64_t>(rng() % span) + 1;
  return Rational(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
}

Golden random_golden(std::mt19937_64& rng) { return {random_rational(rng, 40), random_rational(rng, 40)}; }

}  // namespace

TEST_CASE("rational canonical form") {
  Rational r(BigInt(6), BigInt(-4));
  CHECK(r.str() == "-3/2");
  CHECK(Rational::parse("-3/2") == r);
  CHECK(Rational::parse("4") == Rational(4));
  CHECK(Rational::parse("0/7").str() == "0/1");
  CHECK(Rational::parse(r.str()).str() == r.str());
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("golden arithmetic examples") {
  Golden phi = Golden::phi();
  CHECK(golden_arith(Op::Mul, phi, phi) == Golden(Rational(3, 2), Rational(1, 2)));
  CHECK(golden_arith(Op::Mul, phi, phi) == phi + Golden(1));
  CHECK(golden_arith(Op::Mul, Golden::sqrt5(), Golden::sqrt5()) == Golden(5));
  Golden x(Rational(7, 3), Rational(-2, 5));
  CHECK(golden_arith(Op::Mul, Golden(1), x) == x);
  CHECK(golden_arith(Op::Div, x, x) == Golden(1));
  CHECK_THROWS_AS(golden_arith(Op::Div, x, Golden(0)), Error);
  try {
    golden_arith(Op::Div, x, Golden(0));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
}

TEST_CASE("scalar_sign examples against the 256-bit oracle") {
  Golden a(Rational(-1), Rational(1, 2));
  Golden b(Rational(3), Rational(-1));
  CHECK(oracle_sign(a) == 1);
  CHECK(oracle_sign(b) == 1);
  CHECK(scalar_sign(a) == 1);
  CHECK(scalar_sign(Golden(0)) == 0);
  CHECK(scalar_sign(b) == 1);
  CHECK(scalar_sign(-b) == -1);
  CHECK(scalar_sign(Golden(Rational(2), Rational(-1))) == -1);
}

TEST_CASE("scalar_sign agrees with 256-bit evaluation on random inputs") {
  std::mt19937_64 rng(7);
  int disagreements = 0;
  for (int i = 0; i < 10000; ++i) {
    Golden g = random_golden(rng);
    if (scalar_sign(g) != oracle_sign(g)) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("field axioms hold exactly on sampled triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Golden x = random_golden(rng), y = random_golden(rng), z = random_golden(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    if (!x.is_zero()) CHECK(x * x.inverse() == Golden(1));
    CHECK(x - x == Golden(0));
  }
}

TEST_CASE("canonical form is idempotent") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Rational r = random_rational(rng, 1000);
    Rational again(r.num(), r.den());
    CHECK(again.str() == r.str());
    CHECK(Rational::parse(r.str()) == r);
    CHECK(r.den() > 0);
  }
}

TEST_CASE("golden ordering is exact") {
  Golden phi = Golden::phi();
  CHECK(phi > Golden(Rational(161803, 100000)));
  CHECK(phi < Golden(Rational(161804, 100000)));
  CHECK(Golden::sqrt5() * Golden::sqrt5() == Golden(5));
}

TEST_CASE("float tolerance and kind mixing") {
  Scalar a = Scalar::floating(1.0), b = Scalar::floating(1.0 + 5e-10);
  CHECK(a.equals(b));
  CHECK_FALSE(a.equals(Scalar::floating(1.0 + 5e-9)));
  CHECK_THROWS_AS(a.equals(Scalar::rational(1)), Error);
  CHECK_THROWS_AS(Scalar::floating(1.0, 0.0), Error);
  Scalar r = Scalar::rational(Rational(1, 2)) + Scalar::golden(Golden::phi());
  CHECK(r.kind() == ScalarKind::Golden);
  CHECK((Scalar::rational(2) * Scalar::rational(3)).kind() == ScalarKind::Rational);
}
