#pragma once

// Point sets, squared distances, sub-isometry search and distance-matrix
// automorphism groups, plus a planar circumcircle helper.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "subsol/groupspec.hpp"
#include "subsol/perm.hpp"
#include "subsol/scalar.hpp"

namespace subsol {

// n x n matrix of distance-class ids; equal ids mean equal squared distance.
struct DistanceClasses {
  std::size_t n = 0;
  std::vector<std::uint32_t> ids;
  std::vector<Scalar> values;  // indexed by id

  std::uint32_t at(std::size_t i, std::size_t j) const { return ids[i * n + j]; }
};

class PointSet {
 public:
  PointSet();

  // Throws InvalidArgument on ragged input, duplicate points, or a rational
  // kind holding an irrational coordinate.
  static PointSet exact(ScalarKind kind, std::size_t dim, std::vector<std::vector<Golden>> points);
  static PointSet floating(std::size_t dim, std::vector<std::vector<double>> points,
                           double tol = kDefaultTol);

  ScalarKind kind() const;
  bool exact() const { return kind() != ScalarKind::Float; }
  std::size_t dim() const;
  std::size_t size() const;
  double tol() const;

  std::span<const Golden> golden_point(std::size_t i) const;
  std::span<const double> float_point(std::size_t i) const;
  Scalar coord(std::size_t i, std::size_t k) const;
  double real(std::size_t i, std::size_t k) const;

  Scalar sqdist(std::size_t i, std::size_t j) const;
  Golden golden_sqdist(std::size_t i, std::size_t j) const;
  double float_sqdist(std::size_t i, std::size_t j) const;

  // Exact lookup, or the unique point within 5*tol for float sets.
  std::optional<std::uint32_t> index_of(std::span<const Golden> p) const;
  std::optional<std::uint32_t> index_of(std::span<const double> p) const;

  // Computed on first use and cached; not safe to first-call concurrently.
  const DistanceClasses& distance_classes() const;

  // True when exact coordinates fit a common-denominator integer lattice.
  bool has_lattice() const;

  friend bool operator==(const PointSet& a, const PointSet& b);

  struct Data;
  const Data& data() const { return *data_; }

 private:
  std::shared_ptr<Data> data_;
};

struct EmbeddingMap {
  std::vector<std::uint32_t> map;
  Scalar scale_sq;

  friend bool operator==(const EmbeddingMap& a, const EmbeddingMap& b) {
    return a.map == b.map && a.scale_sq.kind() == b.scale_sq.kind() && a.scale_sq.str() == b.scale_sq.str();
  }
};

// Relative comparison max(tol, tol*magnitude) used for float distances.
bool float_close(double a, double b, double tol);

// Throws NotFound, ScalarKindMismatch (exact against float).
EmbeddingMap find_subisometry(const PointSet& x, const PointSet& y, const Scalar& scale_sq);

// Injectivity plus the scaled-distance identity for every pair.
CheckResult check_embedding(const PointSet& x, const PointSet& y, const EmbeddingMap& e);

// All distance-preserving index permutations. Throws CapExceeded,
// InvalidArgument for float sets.
PermGroup symmetry_group(const PointSet& x, std::size_t cap = 1'000'000);

// Points spanning the affine hull, chosen greedily.
std::vector<std::uint32_t> affine_anchors(const PointSet& x);

// Whether p preserves every squared distance. Large sets are checked against
// the anchors only, which determines an isometry of the affine hull.
CheckResult check_isometry(const PointSet& x, const Perm& p);
CheckResult check_isometry(const PointSet& x, const Perm& p, std::span<const std::uint32_t> anchors);

using Point2 = std::array<double, 2>;

struct Circle {
  Point2 center{};
  double radius_sq = 0.0;
};

// Throws Collinear when the signed area is within tolerance of zero.
Circle circumcircle(const Point2& a, const Point2& b, const Point2& c, double tol = kDefaultTol);

}  // namespace subsol
