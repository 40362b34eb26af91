#include "subsol/product.hpp"

#include <algorithm>

#include "subsol/error.hpp"

namespace subsol {

namespace {

PointSet product_set(const PointSet& a, const PointSet& b) {
  std::size_t dim = a.dim() + b.dim();
  if (a.exact() != b.exact())
    throw Error(ErrorCode::ScalarKindMismatch, "cannot combine exact and floating point sets");
  if (a.exact()) {
    ScalarKind kind =
        a.kind() == ScalarKind::Golden || b.kind() == ScalarKind::Golden ? ScalarKind::Golden : ScalarKind::Rational;
    std::vector<std::vector<Golden>> pts;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::vector<Golden> p(a.golden_point(i).begin(), a.golden_point(i).end());
        p.insert(p.end(), b.golden_point(j).begin(), b.golden_point(j).end());
        pts.push_back(std::move(p));
      }
    return PointSet::exact(kind, dim, std::move(pts));
  }
  std::vector<std::vector<double>> pts;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::vector<double> p(a.float_point(i).begin(), a.float_point(i).end());
      p.insert(p.end(), b.float_point(j).begin(), b.float_point(j).end());
      pts.push_back(std::move(p));
    }
  return PointSet::floating(dim, std::move(pts), std::max(a.tol(), b.tol()));
}

// g acting on the first block, or on the second when second is set.
Perm block_perm(const Perm& g, std::size_t n1, std::size_t n2, bool second) {
  std::vector<std::uint32_t> img(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      img[i * n2 + j] = static_cast<std::uint32_t>(second ? i * n2 + g(j) : g(i) * n2 + j);
  return Perm(std::move(img));
}

}  // namespace

Certificate product_certificate(const Certificate& a, const Certificate& b) {
  if (!a.y || !b.y) throw Error(ErrorCode::InvalidArgument, "products need explicit point sets");
  if (a.x.exact() != b.x.exact() || a.y->exact() != b.y->exact())
    throw Error(ErrorCode::ScalarKindMismatch, "cannot combine exact and floating certificates");
  if (!a.embedding.scale_sq.equals(b.embedding.scale_sq))
    throw Error(ErrorCode::ScaleMismatch,
                "scales " + a.embedding.scale_sq.str() + " and " + b.embedding.scale_sq.str() + " differ");
  Certificate c;
  c.name = a.name + " x " + b.name;
  c.x = product_set(a.x, b.x);
  c.y = product_set(*a.y, *b.y);
  std::size_t n1 = a.y->size(), n2 = b.y->size();
  for (std::size_t i = 0; i < a.x.size(); ++i)
    for (std::size_t j = 0; j < b.x.size(); ++j)
      c.embedding.map.push_back(static_cast<std::uint32_t>(a.embedding.map[i] * n2 + b.embedding.map[j]));
  c.embedding.scale_sq = a.embedding.scale_sq;
  for (const auto& g : a.generators) c.generators.push_back(block_perm(g, n1, n2, false));
  for (const auto& g : b.generators) c.generators.push_back(block_perm(g, n1, n2, true));
  c.spec = GroupSpec::direct({a.spec, b.spec});
  c.solubility = prove_soluble(c.spec);
  c.transitivity.mode = Transitivity::Mode::OrbitChecked;
  for (const auto& [k, v] : a.residuals) c.residuals[k] = v;
  for (const auto& [k, v] : b.residuals) c.residuals[k] = std::max(c.residuals[k], v);
  return c;
}

Certificate segment_certificate(const Rational& length) {
  if (length.is_zero()) throw Error(ErrorCode::InvalidArgument, "segment length must be nonzero");
  Certificate c;
  c.name = "segment(" + length.str() + ")";
  c.x = PointSet::exact(ScalarKind::Rational, 1, {{Golden(0)}, {Golden(length)}});
  c.y = c.x;
  c.embedding = {{0, 1}, Scalar::rational(1)};
  c.generators = {Perm({1, 0})};
  c.spec = GroupSpec::c2_power(1);
  c.solubility = prove_soluble(c.spec);
  return c;
}

Certificate segment_certificate(double length, double tol) {
  if (!(length > tol)) throw Error(ErrorCode::InvalidArgument, "segment length must exceed the tolerance");
  Certificate c;
  c.name = "segment(" + std::to_string(length) + ")";
  c.x = PointSet::floating(1, {{0.0}, {length}}, tol);
  c.y = c.x;
  c.embedding = {{0, 1}, Scalar::floating(1.0, tol)};
  c.generators = {Perm({1, 0})};
  c.spec = GroupSpec::c2_power(1);
  c.solubility = prove_soluble(c.spec);
  return c;
}

Certificate point_certificate(std::size_t dim) {
  Certificate c;
  c.name = "point";
  c.x = PointSet::exact(ScalarKind::Rational, dim, {std::vector<Golden>(dim, Golden(0))});
  c.y = c.x;
  c.embedding = {{0}, Scalar::rational(1)};
  c.generators = {Perm::identity(1)};
  c.spec = GroupSpec::cyclic(1);
  c.solubility = prove_soluble(c.spec);
  return c;
}

}  // namespace subsol
