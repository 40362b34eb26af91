#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "subsol/action.hpp"
#include "subsol/error.hpp"
#include "subsol/trapezium.hpp"

using namespace subsol;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

double len(const Point2& p, const Point2& q) { return std::hypot(p[0] - q[0], p[1] - q[1]); }

// Angle at the centre between A and B' by the law of cosines.
double central_angle(const ArcSolution& s, const Point2& a) {
  double r2 = s.circle.radius_sq;
  double chord = len(a, s.b_prime);
  return std::acos(1 - chord * chord / (2 * r2));
}

void check_certificate(const Certificate& c) {
  INFO(c.name);
  REQUIRE(c.y.has_value());
  Action a{*c.y, c.generators, c.spec, {}};
  CHECK(check_action(a).ok());
  CHECK(is_transitive(a));
  CHECK(check_realization(c.spec, c.generators).ok);
  CHECK(check_proof(c.spec, c.solubility).ok);
  CHECK(check_embedding(c.x, *c.y, c.embedding).ok);
  CHECK(c.residuals.at("distance") < 1e-8);
  CHECK(c.residuals.at("circle") < 1e-8);
}

// Independent check of the four lifted images against the input distances.
void check_lift(const Trapezium& t, const ArcSolution& s) {
  auto d3 = [](const Point2& p, double zp, const Point2& q, double zq) {
    return std::sqrt(std::pow(p[0] - q[0], 2) + std::pow(p[1] - q[1], 2) + std::pow(zp - zq, 2));
  };
  CHECK(std::abs(d3(t.a, s.x, s.b_prime, -s.x) - len(t.a, t.b)) < 1e-9);
  CHECK(std::abs(d3(t.d, s.x, s.c_prime, -s.x) - len(t.c, t.d)) < 1e-9);
  CHECK(std::abs(d3(t.a, s.x, s.c_prime, -s.x) - len(t.a, t.c)) < 1e-9);
  CHECK(std::abs(d3(t.d, s.x, s.b_prime, -s.x) - len(t.b, t.d)) < 1e-9);
  CHECK(std::abs(len(s.b_prime, s.c_prime) - len(t.b, t.c)) < 1e-9);
}

Trapezium random_trapezium(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  double a = 0.5 + 2.5 * u(rng), b = a * (0.05 + 0.9 * u(rng)), h = 0.2 + 3 * u(rng);
  double t = 2 * std::numbers::pi * u(rng), ox = 10 * u(rng) - 5, oy = 10 * u(rng) - 5;
  auto place = [&](double x, double y) {
    return Point2{ox + std::cos(t) * x - std::sin(t) * y, oy + std::sin(t) * x + std::cos(t) * y};
  };
  return validate_trapezium(place(-a, 0), place(-b, h), place(b, h), place(a, 0));
}

}  // namespace

TEST_CASE("validation") {
  auto t = validate_trapezium({-2, 0}, {-1, 1}, {1, 1}, {2, 0});
  CHECK_FALSE(t.rectangle);
  CHECK(validate_trapezium({0, 0}, {0, 1}, {3, 1}, {3, 0}).rectangle);
  CHECK(code_of([] { validate_trapezium({0, 0}, {1, 0}, {2, 0}, {3, 0}); }) == ErrorCode::Degenerate);
  CHECK(code_of([] { validate_trapezium({0, 0}, {0, 0}, {2, 1}, {3, 0}); }) == ErrorCode::Degenerate);
  CHECK(code_of([] { validate_trapezium({0, 0}, {1, 1}, {3, 1}, {2, 0}); }) == ErrorCode::NotIsoscelesTrapezium);
  CHECK(code_of([] { validate_trapezium({-2, 0}, {-1, 1}, {1, 2}, {2, 0}); }) == ErrorCode::NotIsoscelesTrapezium);
  CHECK(code_of([] { validate_trapezium({-2, 0}, {1, 1}, {-1, 1}, {2, 0}); }) == ErrorCode::NotIsoscelesTrapezium);

  auto flipped = validate_trapezium({-1, 1}, {-2, 0}, {2, 0}, {1, 1});
  CHECK(flipped.a == Point2{-2, 0});
  CHECK(flipped.input == std::array<std::uint32_t, 4>{1, 0, 3, 2});
}

TEST_CASE("square is a planar 4-gon") {
  auto t = validate_trapezium({0, 0}, {0, 1}, {1, 1}, {1, 0});
  auto s = solve_arc(t);
  CHECK(s.planar);
  CHECK(s.k == 4);
  auto c = build_trapezium_certificate(t);
  CHECK(c.y->size() <= 8);
  CHECK(c.y->dim() == 2);
  check_certificate(c);
}

TEST_CASE("the (-2,0),(-1,1),(1,1),(2,0) trapezium needs k = 10") {
  auto t = validate_trapezium({-2, 0}, {-1, 1}, {1, 1}, {2, 0});
  auto s = solve_arc(t);
  CHECK_FALSE(s.planar);
  CHECK(std::abs(std::cos(s.theta0) - 0.8) < 1e-12);
  CHECK(s.k == 10);
  CHECK(std::abs(central_angle(s, t.a) - 2 * std::numbers::pi / 10) < 1e-9);
  CHECK(s.angle_residual < 1e-9);
  check_lift(t, s);
  auto c = build_trapezium_certificate(t);
  CHECK(c.y->size() <= 40);
  CHECK(c.y->dim() == 3);
  check_certificate(c);
  auto finer = solve_arc(t, 1e-16);
  CHECK(finer.k == s.k);
}

TEST_CASE("regular polygon cases stay planar") {
  for (std::uint64_t k : {5u, 6u, 8u, 12u}) {
    double step = 2 * std::numbers::pi / static_cast<double>(k);
    auto at = [](double a) { return Point2{std::cos(a), std::sin(a)}; };
    // A, B consecutive vertices; D, C their mirror images across the y axis
    double a0 = -std::numbers::pi / 2 - 1.5 * step;
    auto t = validate_trapezium(at(a0), at(a0 + step), at(-std::numbers::pi - a0 - step), at(-std::numbers::pi - a0));
    auto s = solve_arc(t);
    CHECK(s.planar);
    CHECK(s.k == k);
    check_certificate(build_trapezium_certificate(t));
  }
}

TEST_CASE("rectangles become products of segments") {
  auto t = validate_trapezium({0, 0}, {0, 1}, {3, 1}, {3, 0});
  auto c = build_trapezium_certificate(t);
  CHECK(c.x.exact());
  CHECK(c.y->size() == 4);
  CHECK(c.spec == GroupSpec::direct({GroupSpec::c2_power(1), GroupSpec::c2_power(1)}));
  CHECK(c.residuals.at("distance") == 0.0);
  check_certificate(c);

  double r = std::sqrt(0.5);
  auto tilted = validate_trapezium({0, 0}, {-r, r}, {3 * r - r, 3 * r + r}, {3 * r, 3 * r});
  auto ct = build_trapezium_certificate(tilted);
  CHECK_FALSE(ct.x.exact());
  check_certificate(ct);
  CHECK(code_of([&] { solve_arc(t); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("seeded random trapezia") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 25; ++i) {
    auto t = random_trapezium(rng);
    auto s = solve_arc(t);
    if (!s.planar) check_lift(t, s);
    check_certificate(build_trapezium_certificate(t));
  }
}

TEST_CASE("thin trapezia") {
  for (double h : {1e-2, 1e-3}) {
    auto t = validate_trapezium({-2, 0}, {-1, h}, {1, h}, {2, 0});
    auto s = solve_arc(t);
    CHECK(s.k > 100);
    check_lift(t, s);
    check_certificate(build_trapezium_certificate(t));
  }
  auto t = validate_trapezium({-2, 0}, {-1, 1e-6}, {1, 1e-6}, {2, 0});
  auto s = solve_arc(t);
  CHECK(s.k > 1'000'000);
  CHECK(s.angle_residual < 1e-9);
  CHECK(std::abs(central_angle(s, t.a) - 2 * std::numbers::pi / static_cast<double>(s.k)) < 1e-9);
  CHECK(code_of([&] { build_trapezium_certificate(t); }) == ErrorCode::TooLarge);
}
