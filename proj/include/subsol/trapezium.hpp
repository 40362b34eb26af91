#pragma once

// Isosceles trapezia inside soluble sets: a planar double k-gon when the leg
// subtends 2*pi/k at the circumcentre, otherwise a two-layer lift of the
// double k-gon through a lowered copy of the short side. Rectangles that are
// not regular-polygon cases become products of two segments.

#include <array>
#include <cstdint>

#include "subsol/certificate.hpp"
#include "subsol/geometry.hpp"

namespace subsol {

struct Trapezium {
  // Canonical labels: AD parallel to BC, |BC| <= |AD|, legs AB and CD.
  Point2 a{}, b{}, c{}, d{};
  // input[i] is the input position of canonical point i (A, B, C, D).
  std::array<std::uint32_t, 4> input{0, 1, 2, 3};
  bool rectangle = false;
  double tol = kDefaultTol;
};

// Throws Degenerate (coincident or collinear points) and
// NotIsoscelesTrapezium naming the failed condition.
Trapezium validate_trapezium(const Point2& a, const Point2& b, const Point2& c, const Point2& d,
                             double tol = kDefaultTol);

struct ArcSolution {
  std::uint64_t k = 0;
  bool planar = false;
  double theta0 = 0.0;  // angle AOB on the original circumcircle
  double height = 0.0;  // distance from B' to line AD
  Point2 b_prime{}, c_prime{};
  Circle circle;        // through A, B', C', D
  double x = 0.0;       // half the layer separation
  double angle_residual = 0.0;
};

// bisection_tol is relative to the original height. Throws BisectionFailed.
ArcSolution solve_arc(const Trapezium& t, double bisection_tol = 1e-15);

// Throws TooLarge when the containing set would exceed max_points.
Certificate build_trapezium_certificate(const Trapezium& t, std::uint64_t max_points = 2'000'000);

}  // namespace subsol
