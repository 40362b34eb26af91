#include "subsol/scalar.hpp"

#include <cmath>
#include <functional>

#include "subsol/error.hpp"

namespace subsol {

Rational::Rational(std::int64_t n) : value_(BigInt(std::to_string(n))) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite value");
  return Rational(mpq_class(v));
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw Error(ErrorCode::InvalidArgument, "empty integer in '" + s + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw Error(ErrorCode::InvalidArgument, "bad integer in '" + s + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9')
        throw Error(ErrorCode::InvalidArgument, "bad integer in '" + s + "'");
    }
    return BigInt(part[0] == '+' ? part.substr(1) : part, 10);
  };
  if (slash == std::string::npos) return Rational(parse_int(s), BigInt(1));
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string Rational::str() const { return num().get_str() + "/" + den().get_str(); }

std::size_t Rational::hash() const {
  std::size_t h = std::hash<std::string>{}(num().get_str(16));
  return h * 1000003u ^ std::hash<std::string>{}(den().get_str(16));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Golden Golden::phi() { return {Rational(1, 2), Rational(1, 2)}; }

int Golden::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with 5 b^2. Never equal since sqrt5 is irrational.
  int n = norm().sign();
  return sa > 0 ? n : -n;
}

Golden Golden::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(sqrt5)");
  Rational n = norm();
  return {a_ / n, -b_ / n};
}

double Golden::to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(5.0); }

std::size_t Golden::hash() const { return a_.hash() * 31u + b_.hash(); }

std::string Golden::str() const {
  if (b_.is_zero()) return a_.str();
  return a_.str() + " + " + b_.str() + "*sqrt5";
}

Golden& Golden::operator+=(const Golden& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Golden& Golden::operator-=(const Golden& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Golden& Golden::operator*=(const Golden& o) {
  // (a + b s)(c + d s) = (ac + 5bd) + (ad + bc) s
  Rational a = a_ * o.a_ + Rational(5) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Golden& Golden::operator/=(const Golden& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const Golden& x, const Golden& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Golden golden_arith(Op op, const Golden& x, const Golden& y) {
  switch (op) {
    case Op::Add: return x + y;
    case Op::Sub: return x - y;
    case Op::Mul: return x * y;
    case Op::Div: return x / y;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown op");
}

int scalar_sign(const Golden& x) { return x.sign(); }

bool FloatTol::equals(const FloatTol& o) const {
  return std::abs(value - o.value) <= std::max(tol, o.tol);
}

std::string_view to_string(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::Rational: return "rational";
    case ScalarKind::Golden: return "golden";
    case ScalarKind::Float: return "float";
  }
  return "?";
}

ScalarKind scalar_kind_from_string(std::string_view s) {
  if (s == "rational") return ScalarKind::Rational;
  if (s == "golden") return ScalarKind::Golden;
  if (s == "float") return ScalarKind::Float;
  throw Error(ErrorCode::InvalidArgument, "unknown scalar kind '" + std::string(s) + "'");
}

bool is_exact(ScalarKind kind) { return kind != ScalarKind::Float; }

Scalar Scalar::rational(Rational r) {
  Scalar s;
  s.kind_ = ScalarKind::Rational;
  s.exact_ = Golden(std::move(r));
  return s;
}

Scalar Scalar::golden(Golden g) {
  Scalar s;
  s.kind_ = ScalarKind::Golden;
  s.exact_ = std::move(g);
  return s;
}

Scalar Scalar::floating(double v, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  Scalar s;
  s.kind_ = ScalarKind::Float;
  s.approx_ = {v, tol};
  return s;
}

const Golden& Scalar::golden_value() const {
  if (!exact()) throw Error(ErrorCode::ScalarKindMismatch, "float scalar has no exact value");
  return exact_;
}

const FloatTol& Scalar::float_value() const {
  if (exact()) throw Error(ErrorCode::ScalarKindMismatch, "exact scalar is not a float");
  return approx_;
}

double Scalar::to_double() const { return exact() ? exact_.to_double() : approx_.value; }

std::string Scalar::str() const {
  return exact() ? exact_.str() : std::to_string(approx_.value);
}

namespace {

void require_compatible(const Scalar& x, const Scalar& y) {
  if (x.exact() != y.exact())
    throw Error(ErrorCode::ScalarKindMismatch, "cannot mix exact and float scalars");
}

Scalar combine_exact(const Scalar& x, const Scalar& y, Golden v) {
  bool golden = x.kind() == ScalarKind::Golden || y.kind() == ScalarKind::Golden;
  return golden ? Scalar::golden(std::move(v)) : Scalar::rational(v.a());
}

}  // namespace

bool Scalar::equals(const Scalar& o) const {
  require_compatible(*this, o);
  return exact() ? exact_ == o.exact_ : approx_.equals(o.approx_);
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  require_compatible(x, y);
  if (x.exact()) return combine_exact(x, y, x.exact_ + y.exact_);
  return Scalar::floating(x.approx_.value + y.approx_.value, std::max(x.approx_.tol, y.approx_.tol));
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  require_compatible(x, y);
  if (x.exact()) return combine_exact(x, y, x.exact_ - y.exact_);
  return Scalar::floating(x.approx_.value - y.approx_.value, std::max(x.approx_.tol, y.approx_.tol));
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  require_compatible(x, y);
  if (x.exact()) return combine_exact(x, y, x.exact_ * y.exact_);
  return Scalar::floating(x.approx_.value * y.approx_.value, std::max(x.approx_.tol, y.approx_.tol));
}

}  // namespace subsol
