#pragma once

// Exact and tolerance-tagged scalars used for every coordinate and distance.
//
// Rational and Golden (elements of Q(sqrt 5) written a + b*sqrt5) are exact;
// FloatTol carries an absolute tolerance and is only used by the planar
// trapezium pipeline and general k-gons.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace subsol {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "n" or "n/d" with optional sign on n; den must be nonzero.
  static Rational parse(std::string_view text);
  // Exact value of a finite double. Throws InvalidArgument otherwise.
  static Rational from_double(double v);

  const BigInt& num() const { return value_.get_num(); }
  const BigInt& den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  // Canonical "num/den" with den > 0, always including the denominator.
  std::string str() const;
  double to_double() const { return value_.get_d(); }
  std::size_t hash() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational abs() const;

 private:
  explicit Rational(mpq_class v);
  mpq_class value_{0};
};

// a + b*sqrt(5). Basis (1, sqrt5), so phi = (1/2, 1/2).
class Golden {
 public:
  Golden() = default;
  Golden(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Golden(std::int64_t a) : a_(a) {}         // NOLINT(google-explicit-constructor)
  Golden(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Golden phi();
  static Golden sqrt5() { return {Rational(0), Rational(1)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  // Exact sign of a + b*sqrt5, decided from the signs of a, b and a^2 - 5b^2.
  int sign() const;
  Rational norm() const { return a_ * a_ - Rational(5) * b_ * b_; }
  Golden conjugate() const { return {a_, -b_}; }
  Golden inverse() const;
  double to_double() const;
  std::size_t hash() const;
  std::string str() const;

  Golden operator-() const { return {-a_, -b_}; }
  Golden& operator+=(const Golden& o);
  Golden& operator-=(const Golden& o);
  Golden& operator*=(const Golden& o);
  Golden& operator/=(const Golden& o);

  friend Golden operator+(Golden x, const Golden& y) { return x += y; }
  friend Golden operator-(Golden x, const Golden& y) { return x -= y; }
  friend Golden operator*(Golden x, const Golden& y) { return x *= y; }
  friend Golden operator/(Golden x, const Golden& y) { return x /= y; }

  friend bool operator==(const Golden& x, const Golden& y) = default;
  friend std::strong_ordering operator<=>(const Golden& x, const Golden& y);

 private:
  Rational a_;
  Rational b_;
};

enum class Op { Add, Sub, Mul, Div };

Golden golden_arith(Op op, const Golden& x, const Golden& y);
int scalar_sign(const Golden& x);

inline constexpr double kDefaultTol = 1e-9;

struct FloatTol {
  double value = 0.0;
  double tol = kDefaultTol;

  // |x - y| <= tol using the larger of the two tolerances.
  bool equals(const FloatTol& o) const;
};

enum class ScalarKind { Rational, Golden, Float };

std::string_view to_string(ScalarKind kind);
ScalarKind scalar_kind_from_string(std::string_view s);
bool is_exact(ScalarKind kind);

// Kind-tagged scalar. Rational-kind values are Golden values with b = 0.
class Scalar {
 public:
  Scalar() = default;
  static Scalar rational(Rational r);
  static Scalar golden(Golden g);
  static Scalar floating(double v, double tol = kDefaultTol);

  ScalarKind kind() const { return kind_; }
  bool exact() const { return kind_ != ScalarKind::Float; }
  const Golden& golden_value() const;
  const FloatTol& float_value() const;
  double to_double() const;
  std::string str() const;

  // Exact equality for exact kinds; tolerance equality for floats.
  // Mixing an exact and a float scalar throws ScalarKindMismatch.
  bool equals(const Scalar& o) const;

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);

 private:
  ScalarKind kind_ = ScalarKind::Rational;
  Golden exact_;
  FloatTol approx_;
};

}  // namespace subsol
