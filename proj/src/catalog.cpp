#include "subsol/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "subsol/error.hpp"

namespace subsol {

namespace {

using Coords = std::vector<Golden>;
using CoordMap = std::function<Coords(std::span<const Golden>)>;

Perm induced(const PointSet& x, const CoordMap& f) {
  std::vector<std::uint32_t> img(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Coords q = f(x.golden_point(i));
    auto j = x.index_of(std::span<const Golden>(q));
    if (!j) throw Error(ErrorCode::InvalidArgument, "coordinate map leaves the point set");
    img[i] = *j;
  }
  return Perm(img);
}

CoordMap flip(std::size_t c) {
  return [c](std::span<const Golden> p) {
    Coords q(p.begin(), p.end());
    q[c] = -q[c];
    return q;
  };
}

// (x_0, ..., x_{n-1}) -> (x_1, ..., x_{n-1}, x_0)
CoordMap cyclic_shift() {
  return [](std::span<const Golden> p) {
    Coords q(p.begin() + 1, p.end());
    q.push_back(p[0]);
    return q;
  };
}

CoordMap swap_coords(std::size_t a, std::size_t b) {
  return [a, b](std::span<const Golden> p) {
    Coords q(p.begin(), p.end());
    std::swap(q[a], q[b]);
    return q;
  };
}

CoordMap negate() {
  return [](std::span<const Golden> p) {
    Coords q;
    for (const auto& g : p) q.push_back(-g);
    return q;
  };
}

std::vector<Coords> signed_vectors(std::size_t d) {
  std::vector<Coords> pts;
  for (std::size_t m = 0; m < (std::size_t{1} << d); ++m) {
    Coords p;
    for (std::size_t c = 0; c < d; ++c) p.emplace_back((m >> c) & 1 ? -1 : 1);
    pts.push_back(std::move(p));
  }
  return pts;
}

// Cyclic coordinate shifts of (0, +-a, +-b).
void cyclic_signed(std::vector<Coords>& out, const Golden& a, const Golden& b) {
  for (int sa : {1, -1})
    for (int sb : {1, -1}) {
      Coords v{Golden(0), a * Golden(sa), b * Golden(sb)};
      for (int r = 0; r < 3; ++r) {
        out.push_back(v);
        std::rotate(v.begin(), v.begin() + 2, v.end());
      }
    }
}

CatalogEntry finish(std::string name, PointSet set, std::vector<Perm> gens, GroupSpec spec) {
  CatalogEntry e;
  e.name = std::move(name);
  e.proof = prove_soluble(spec);
  e.action = Action{std::move(set), std::move(gens), std::move(spec), {}};
  return e;
}

void require_at_least(std::size_t v, std::size_t lo, const char* what) {
  if (v < lo)
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be at least " + std::to_string(lo));
}

CatalogEntry simplex(std::size_t d) {
  require_at_least(d, 1, "d");
  std::vector<Coords> pts;
  for (std::size_t i = 0; i <= d; ++i) {
    Coords p(d + 1, Golden(0));
    p[i] = Golden(1);
    pts.push_back(std::move(p));
  }
  auto x = PointSet::exact(ScalarKind::Rational, d + 1, pts);
  auto g = induced(x, cyclic_shift());
  return finish("simplex(" + std::to_string(d) + ")", x, {g}, GroupSpec::cyclic(d + 1));
}

CatalogEntry cube(std::size_t d) {
  require_at_least(d, 1, "d");
  auto x = PointSet::exact(ScalarKind::Rational, d, signed_vectors(d));
  std::vector<Perm> gens;
  for (std::size_t c = 0; c < d; ++c) gens.push_back(induced(x, flip(c)));
  return finish("cube(" + std::to_string(d) + ")", x, gens, GroupSpec::c2_power(d));
}

CatalogEntry orthoplex(std::size_t d) {
  require_at_least(d, 1, "d");
  std::vector<Coords> pts;
  for (std::size_t i = 0; i < d; ++i)
    for (int s : {1, -1}) {
      Coords p(d, Golden(0));
      p[i] = Golden(s);
      pts.push_back(std::move(p));
    }
  auto x = PointSet::exact(ScalarKind::Rational, d, pts);
  std::vector<Perm> gens{induced(x, negate()), induced(x, cyclic_shift())};
  auto spec = GroupSpec::direct({GroupSpec::c2_power(1), GroupSpec::cyclic(d)});
  return finish("orthoplex(" + std::to_string(d) + ")", x, gens, spec);
}

CatalogEntry kgon(std::size_t k) {
  require_at_least(k, 3, "k");
  std::vector<std::uint32_t> rot(k);
  std::vector<std::uint32_t> ref(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    rot[i] = static_cast<std::uint32_t>((i + 1) % k);
    ref[i] = static_cast<std::uint32_t>((k - i) % k);
  }
  PointSet x;
  if (k == 4) {
    x = PointSet::exact(ScalarKind::Rational, 2,
                        {{Golden(1), Golden(0)}, {Golden(0), Golden(1)}, {Golden(-1), Golden(0)}, {Golden(0), Golden(-1)}});
  } else {
    std::vector<std::vector<double>> pts;
    for (std::size_t i = 0; i < k; ++i) {
      double t = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(k);
      pts.push_back({std::cos(t), std::sin(t)});
    }
    x = PointSet::floating(2, pts);
  }
  return finish("kgon(" + std::to_string(k) + ")", x, {Perm(rot), Perm(ref)}, GroupSpec::dihedral(k));
}

PointSet icosahedron_points() {
  std::vector<Coords> pts;
  cyclic_signed(pts, Golden(1), Golden::phi());
  return PointSet::exact(ScalarKind::Golden, 3, pts);
}

CatalogEntry icosahedron() {
  auto x = icosahedron_points();
  CoordMap double_flip = [](std::span<const Golden> p) { return Coords{-p[0], -p[1], p[2]}; };
  std::vector<Perm> gens{induced(x, cyclic_shift()), induced(x, double_flip), induced(x, negate())};
  auto group = enumerate_group(x.size(), gens);
  return finish("icosahedron", x, gens, GroupSpec::enumerated(group));
}

CatalogEntry cell24() {
  std::vector<Coords> pts;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b)
      for (int sa : {1, -1})
        for (int sb : {1, -1}) {
          Coords p(4, Golden(0));
          p[a] = Golden(sa);
          p[b] = Golden(sb);
          pts.push_back(std::move(p));
        }
  auto x = PointSet::exact(ScalarKind::Rational, 4, pts);
  std::vector<Perm> gens{induced(x, swap_coords(0, 1)), induced(x, swap_coords(1, 2)),
                         induced(x, swap_coords(2, 3)), induced(x, flip(0))};
  auto group = enumerate_group(x.size(), gens);
  return finish("cell24", x, gens, GroupSpec::enumerated(group));
}

std::vector<std::uint32_t> complement(std::size_t n, const std::vector<std::uint32_t>& part) {
  std::vector<std::uint32_t> rest;
  for (std::uint32_t i = 0; i < n; ++i)
    if (!std::binary_search(part.begin(), part.end(), i)) rest.push_back(i);
  return rest;
}

TwoOrbitInput stabilizer_input(std::string name, PointSet x, std::vector<std::uint32_t> o1) {
  std::sort(o1.begin(), o1.end());
  PermGroup h = symmetry_group(x);
  PermGroup g = setwise_stabilizer(h, o1);
  auto o2 = complement(x.size(), o1);
  return {std::move(name), std::move(x), std::move(h), std::move(g), std::move(o1), std::move(o2)};
}

}  // namespace

std::string_view to_string(Shape s) {
  switch (s) {
    case Shape::Simplex: return "simplex";
    case Shape::Cube: return "cube";
    case Shape::Orthoplex: return "orthoplex";
    case Shape::Kgon: return "kgon";
    case Shape::Icosahedron: return "icosahedron";
    case Shape::Cell24: return "cell24";
  }
  return "?";
}

Shape shape_from_string(std::string_view s) {
  for (Shape sh : {Shape::Simplex, Shape::Cube, Shape::Orthoplex, Shape::Kgon, Shape::Icosahedron, Shape::Cell24})
    if (to_string(sh) == s) return sh;
  throw Error(ErrorCode::UnsupportedShape, "unknown shape '" + std::string(s) + "'");
}

CatalogEntry catalog_build(Shape shape, std::size_t param) {
  switch (shape) {
    case Shape::Simplex: return simplex(param);
    case Shape::Cube: return cube(param);
    case Shape::Orthoplex: return orthoplex(param);
    case Shape::Kgon: return kgon(param);
    case Shape::Icosahedron: return icosahedron();
    case Shape::Cell24: return cell24();
  }
  throw Error(ErrorCode::UnsupportedShape, "unknown shape");
}

Certificate catalog_certificate(const CatalogEntry& e) {
  Certificate c;
  c.name = e.name;
  c.x = e.action.set;
  c.y = e.action.set;
  c.embedding.map.resize(c.x.size());
  for (std::uint32_t i = 0; i < c.x.size(); ++i) c.embedding.map[i] = i;
  c.embedding.scale_sq = c.x.exact() ? Scalar::rational(1) : Scalar::floating(1.0, c.x.tol());
  c.generators = e.action.gens;
  c.spec = e.action.spec;
  c.solubility = e.proof;
  return c;
}

TwoOrbitInput dodecahedron_input() {
  std::vector<Coords> pts = signed_vectors(3);
  cyclic_signed(pts, Golden::phi().inverse(), Golden::phi());
  auto x = PointSet::exact(ScalarKind::Golden, 3, pts);
  return stabilizer_input("dodecahedron", x, {0, 1, 2, 3, 4, 5, 6, 7});
}

TwoOrbitInput octahedron_input() {
  auto x = orthoplex(3).action.set;
  return stabilizer_input("octahedron", x, {0, 1});
}

TwoOrbitInput two_orbit_input(std::string_view name) {
  if (name == "dodecahedron") return dodecahedron_input();
  if (name == "octahedron") return octahedron_input();
  throw Error(ErrorCode::InvalidArgument, "unknown two-orbit input '" + std::string(name) + "'");
}

}  // namespace subsol
