#pragma once

// Cartesian products of certificates and the small certificates used as
// product factors.

#include "subsol/certificate.hpp"

namespace subsol {

// X1 x X2 inside Y1 x Y2 with concatenated coordinates; point (i, j) has
// index i * |second| + j. Both factors need an explicit Y. Throws
// ScaleMismatch, ScalarKindMismatch, InvalidArgument.
Certificate product_certificate(const Certificate& a, const Certificate& b);

// {0, length} on a line, acted on by the swap.
Certificate segment_certificate(const Rational& length);
Certificate segment_certificate(double length, double tol = kDefaultTol);

// A single point at the origin of R^dim with the trivial group.
Certificate point_certificate(std::size_t dim = 1);

}  // namespace subsol
