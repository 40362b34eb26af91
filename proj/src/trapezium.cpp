#include "subsol/trapezium.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "subsol/error.hpp"
#include "subsol/product.hpp"

namespace subsol {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

Point2 sub(const Point2& p, const Point2& q) { return {p[0] - q[0], p[1] - q[1]}; }
Point2 add(const Point2& p, const Point2& q) { return {p[0] + q[0], p[1] + q[1]}; }
Point2 scale(const Point2& p, double s) { return {p[0] * s, p[1] * s}; }
double dot(const Point2& p, const Point2& q) { return p[0] * q[0] + p[1] * q[1]; }
double cross(const Point2& p, const Point2& q) { return p[0] * q[1] - p[1] * q[0]; }
double norm(const Point2& p) { return std::hypot(p[0], p[1]); }
double dist(const Point2& p, const Point2& q) { return norm(sub(p, q)); }

Point2 rotate(const Point2& p, const Point2& centre, double angle) {
  Point2 v = sub(p, centre);
  double c = std::cos(angle), s = std::sin(angle);
  return {centre[0] + c * v[0] - s * v[1], centre[1] + s * v[0] + c * v[1]};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// A at (-a, 0), D at (a, 0), B at (-b, h), C at (b, h) in the frame
// m + u*e1 + v*e2.
struct Frame {
  Point2 m{}, e1{}, e2{};
  double a = 0, b = 0, h0 = 0;
  double eps = 0;

  explicit Frame(const Trapezium& t) {
    m = scale(add(t.a, t.d), 0.5);
    double len = dist(t.a, t.d);
    e1 = scale(sub(t.d, t.a), 1.0 / len);
    e2 = {-e1[1], e1[0]};
    if (dot(sub(t.b, m), e2) < 0) e2 = scale(e2, -1.0);
    a = len / 2;
    b = (dot(sub(t.c, m), e1) - dot(sub(t.b, m), e1)) / 2;
    h0 = (dot(sub(t.b, m), e2) + dot(sub(t.c, m), e2)) / 2;
    double span = std::max({len, dist(t.a, t.c), dist(t.b, t.d)});
    eps = t.tol * std::max(1.0, span);
  }

  Point2 world(double u, double v) const { return add(m, add(scale(e1, u), scale(e2, v))); }
  Point2 reflect(const Point2& p) const { return sub(p, scale(e1, 2 * dot(sub(p, m), e1))); }

  // centre of the circle through A, D and (-b, h) lies at (0, centre(h))
  double centre(double h) const { return (h * h + b * b - a * a) / (2 * h); }

  double angle(double h) const {
    double c = centre(h);
    Point2 oa{-a, -c}, ob{-b, h - c};
    return std::atan2(std::abs(cross(oa, ob)), dot(oa, ob));
  }
};

// k with theta0 = 2*pi/k up to eps in position, if any.
std::optional<std::uint64_t> regular_match(const Frame& f) {
  double theta = f.angle(f.h0);
  double kn = std::round(kTwoPi / theta);
  if (kn < 3) return std::nullopt;
  double c = f.centre(f.h0);
  double r = std::hypot(f.a, c);
  if (r * std::abs(theta - kTwoPi / kn) > f.eps) return std::nullopt;
  return static_cast<std::uint64_t>(kn);
}

std::optional<Rational> rational_sqrt(const Rational& v) {
  if (v.sign() < 0) return std::nullopt;
  if (!mpz_perfect_square_p(v.num().get_mpz_t()) || !mpz_perfect_square_p(v.den().get_mpz_t())) return std::nullopt;
  BigInt n, d;
  mpz_sqrt(n.get_mpz_t(), v.num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v.den().get_mpz_t());
  return Rational(n, d);
}

Rational exact_sqdist(const std::array<Rational, 2>& p, const std::array<Rational, 2>& q) {
  Rational dx = p[0] - q[0], dy = p[1] - q[1];
  return dx * dx + dy * dy;
}

double max_distance_residual(const PointSet& x, const PointSet& y, const EmbeddingMap& e) {
  double worst = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      double dx = std::sqrt(x.sqdist(i, j).to_double());
      double dy = std::sqrt(y.sqdist(e.map[i], e.map[j]).to_double());
      worst = std::max(worst, std::abs(dx - dy));
    }
  return worst;
}

Certificate rectangle_certificate(const Trapezium& t, const std::array<Point2, 4>& in) {
  std::array<Point2, 4> canon{t.a, t.b, t.c, t.d};
  std::array<std::array<Rational, 2>, 4> q;
  for (int i = 0; i < 4; ++i) q[i] = {Rational::from_double(canon[i][0]), Rational::from_double(canon[i][1])};
  Rational ad = exact_sqdist(q[0], q[3]), ab = exact_sqdist(q[0], q[1]);
  bool right = (q[3][0] - q[0][0]) * (q[1][0] - q[0][0]) + (q[3][1] - q[0][1]) * (q[1][1] - q[0][1]) == Rational(0);
  bool closed = q[2][0] == q[1][0] + q[3][0] - q[0][0] && q[2][1] == q[1][1] + q[3][1] - q[0][1];
  auto l1 = rational_sqrt(ad), l2 = rational_sqrt(ab);

  Certificate c;
  if (right && closed && l1 && l2) {
    c = product_certificate(segment_certificate(*l1), segment_certificate(*l2));
    std::vector<std::vector<Golden>> pts;
    for (const auto& p : in) pts.push_back({Golden(Rational::from_double(p[0])), Golden(Rational::from_double(p[1]))});
    c.x = PointSet::exact(ScalarKind::Rational, 2, pts);
    c.embedding = find_subisometry(c.x, *c.y, Scalar::rational(1));
    c.notes.push_back("rectangle with rational sides: exact product of two segments");
  } else {
    c = product_certificate(segment_certificate(dist(t.a, t.d), t.tol), segment_certificate(dist(t.a, t.b), t.tol));
    std::vector<std::vector<double>> pts;
    for (const auto& p : in) pts.push_back({p[0], p[1]});
    c.x = PointSet::floating(2, pts, t.tol);
    c.embedding = find_subisometry(c.x, *c.y, Scalar::floating(1.0, t.tol));
    c.notes.push_back("rectangle: floating product of two segments");
  }
  c.name = "trapezium(rectangle)";
  c.residuals["distance"] = max_distance_residual(c.x, *c.y, c.embedding);
  // all four corners lie on the circle about the centre of the rectangle
  std::vector<double> centre(c.y->dim(), 0.0);
  for (std::size_t i = 0; i < c.y->size(); ++i)
    for (std::size_t k = 0; k < centre.size(); ++k) centre[k] += c.y->real(i, k) / static_cast<double>(c.y->size());
  std::vector<double> radii;
  for (std::size_t i = 0; i < c.y->size(); ++i) {
    double s = 0;
    for (std::size_t k = 0; k < centre.size(); ++k) s += std::pow(c.y->real(i, k) - centre[k], 2);
    radii.push_back(std::sqrt(s));
  }
  auto [lo, hi] = std::minmax_element(radii.begin(), radii.end());
  c.residuals["circle"] = *hi - *lo;
  return c;
}

}  // namespace

Trapezium validate_trapezium(const Point2& a, const Point2& b, const Point2& c, const Point2& d, double tol) {
  std::array<Point2, 4> p{a, b, c, d};
  double span = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) span = std::max(span, dist(p[i], p[j]));
  double eps = tol * std::max(1.0, span);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (dist(p[i], p[j]) <= eps) throw Error(ErrorCode::Degenerate, "coincident points");

  auto fail = [](const std::string& why) { throw Error(ErrorCode::NotIsoscelesTrapezium, why); };
  Point2 ad = sub(d, a);
  double sb = cross(ad, sub(b, a)) / norm(ad);
  double sc = cross(ad, sub(c, a)) / norm(ad);
  if (std::abs(sb) <= eps && std::abs(sc) <= eps) throw Error(ErrorCode::Degenerate, "all four points are collinear");
  if (std::abs(sb - sc) > eps) fail("AD is not parallel to BC");
  if (std::abs(sb) <= eps) throw Error(ErrorCode::Degenerate, "B and C lie on line AD");
  if (dot(ad, sub(c, b)) <= 0) fail("BC runs against AD");
  if (std::abs(dist(a, b) - dist(c, d)) > eps) fail("legs AB and CD differ in length");
  if (std::abs(dist(a, c) - dist(b, d)) > eps) fail("diagonals AC and BD differ in length");

  Trapezium t;
  t.tol = tol;
  double long_side = dist(a, d), short_side = dist(b, c);
  if (short_side > long_side + eps) {
    t.a = b, t.b = a, t.c = d, t.d = c;
    t.input = {1, 0, 3, 2};
  } else {
    t.a = a, t.b = b, t.c = c, t.d = d;
  }
  t.rectangle = std::abs(short_side - long_side) <= eps;
  return t;
}

ArcSolution solve_arc(const Trapezium& t, double bisection_tol) {
  Frame f(t);
  ArcSolution s;
  s.theta0 = f.angle(f.h0);
  if (auto k = regular_match(f)) {
    double c = f.centre(f.h0);
    s.k = *k;
    s.planar = true;
    s.height = f.h0;
    s.b_prime = t.b;
    s.c_prime = t.c;
    s.circle = {f.world(0, c), f.a * f.a + c * c};
    s.angle_residual = std::abs(s.theta0 - kTwoPi / static_cast<double>(*k));
    return s;
  }
  if (t.rectangle) throw Error(ErrorCode::InvalidArgument, "rectangles take the product route");

  s.k = static_cast<std::uint64_t>(std::floor(kTwoPi / s.theta0)) + 1;
  double target = kTwoPi / static_cast<double>(s.k);
  auto gap = [&](double h) { return f.angle(h) - target; };

  double hi = f.h0, lo = -1;
  for (int i = 63; i >= 1 && lo < 0; --i) {
    double h = f.h0 * i / 64.0;
    if (gap(h) <= 0) lo = h;
    else hi = h;
  }
  for (double h = f.h0 / 128.0; lo < 0 && h > 1e-300; h /= 2) {
    if (gap(h) <= 0) lo = h;
    else hi = h;
  }
  if (lo < 0)
    throw Error(ErrorCode::BisectionFailed, "no sign change below height " + fmt(f.h0) + " for k = " +
                                                std::to_string(s.k) + ", theta0 = " + fmt(s.theta0));
  for (int it = 0; it < 2000 && hi - lo > bisection_tol * f.h0; ++it) {
    double mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    if (gap(mid) <= 0) lo = mid;
    else hi = mid;
  }
  double h = (lo + hi) / 2;
  s.height = h;
  s.angle_residual = std::abs(gap(h));

  double c = f.centre(h);
  Point2 centre = f.world(0, c);
  Point2 lowered = f.world(-f.b, h);
  Point2 up = rotate(t.a, centre, target), down = rotate(t.a, centre, -target);
  s.b_prime = dist(up, lowered) <= dist(down, lowered) ? up : down;
  s.c_prime = f.reflect(s.b_prime);
  s.circle = {centre, f.a * f.a + c * c};
  double ab = dist(t.a, t.b), abp = dist(t.a, s.b_prime);
  s.x = std::sqrt(std::max(0.0, ab * ab - abp * abp)) / 2;
  if (s.x <= 5 * f.eps) {
    s.planar = true;
    s.x = 0;
  }
  return s;
}

Certificate build_trapezium_certificate(const Trapezium& t, std::uint64_t max_points) {
  std::array<Point2, 4> in;
  std::array<Point2, 4> canon{t.a, t.b, t.c, t.d};
  for (int i = 0; i < 4; ++i) in[t.input[i]] = canon[i];
  Frame f(t);
  if (t.rectangle && !regular_match(f)) return rectangle_certificate(t, in);

  ArcSolution s = solve_arc(t);
  bool lifted = !s.planar;
  std::uint64_t layers = lifted ? 2 : 1;
  if (2 * s.k * layers > max_points)
    throw Error(ErrorCode::TooLarge, "containing set would have up to " + std::to_string(2 * s.k * layers) +
                                         " points, above the cap of " + std::to_string(max_points));

  double target = kTwoPi / static_cast<double>(s.k);
  const Point2& centre = s.circle.center;
  double step =
      dist(rotate(t.a, centre, target), s.b_prime) <= dist(rotate(t.a, centre, -target), s.b_prime) ? target : -target;
  double eps = f.eps;

  // the k-gon through A and its mirror image, merging coincident points
  std::vector<Point2> ring;
  for (std::uint64_t j = 0; j < s.k; ++j) ring.push_back(rotate(t.a, centre, step * static_cast<double>(j)));
  std::vector<Point2> ys = ring;
  double start = std::atan2(t.a[1] - centre[1], t.a[0] - centre[0]);
  std::size_t merged = 0;
  for (const auto& p : ring) {
    Point2 q = f.reflect(p);
    double turns = (std::atan2(q[1] - centre[1], q[0] - centre[0]) - start) / step;
    auto near = static_cast<std::int64_t>(std::llround(turns)) % static_cast<std::int64_t>(s.k);
    if (near < 0) near += static_cast<std::int64_t>(s.k);
    double gap = dist(q, ring[static_cast<std::size_t>(near)]);
    if (gap <= 5 * eps) {
      ++merged;
    } else if (gap <= 10 * eps) {
      throw Error(ErrorCode::Degenerate, "mirrored polygon is within " + fmt(gap) + " of the original");
    } else {
      ys.push_back(q);
    }
  }

  std::vector<std::vector<double>> pts;
  for (double z : lifted ? std::vector<double>{s.x, -s.x} : std::vector<double>{})
    for (const auto& p : ys) pts.push_back({p[0], p[1], z});
  if (!lifted)
    for (const auto& p : ys) pts.push_back({p[0], p[1]});
  std::size_t dim = lifted ? 3 : 2;
  auto y = PointSet::floating(dim, pts, eps);

  auto induced = [&](auto&& map, const char* what) {
    std::vector<std::uint32_t> img(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
      std::vector<double> q = map(y.float_point(i));
      auto j = y.index_of(std::span<const double>(q));
      if (!j) throw Error(ErrorCode::Degenerate, std::string(what) + " image of point " + std::to_string(i) + " not found");
      img[i] = *j;
    }
    return Perm(std::move(img));
  };
  auto rot = induced(
      [&](std::span<const double> p) {
        Point2 r = rotate({p[0], p[1]}, centre, step);
        std::vector<double> out{r[0], r[1]};
        if (lifted) out.push_back(p[2]);
        return out;
      },
      "rotation");
  auto ref = induced(
      [&](std::span<const double> p) {
        Point2 r = f.reflect({p[0], p[1]});
        std::vector<double> out{r[0], r[1]};
        if (lifted) out.push_back(p[2]);
        return out;
      },
      "reflection");

  Certificate c;
  c.name = lifted ? "trapezium(lifted)" : "trapezium(planar)";
  c.generators = {rot, ref};
  c.spec = GroupSpec::dihedral(s.k);
  if (lifted) {
    c.generators.push_back(induced(
        [](std::span<const double> p) { return std::vector<double>{p[0], p[1], -p[2]}; }, "layer swap"));
    c.spec = GroupSpec::direct({GroupSpec::dihedral(s.k), GroupSpec::c2_power(1)});
  }
  c.solubility = prove_soluble(c.spec);

  std::vector<std::vector<double>> xs;
  for (const auto& p : in) xs.push_back({p[0], p[1]});
  c.x = PointSet::floating(2, xs, t.tol);

  std::array<Point2, 4> images{t.a, s.b_prime, s.c_prime, t.d};
  std::array<double, 4> layer{s.x, -s.x, -s.x, s.x};
  c.embedding.map.assign(4, 0);
  for (int i = 0; i < 4; ++i) {
    std::vector<double> q{images[i][0], images[i][1]};
    if (lifted) q.push_back(layer[i]);
    auto j = y.index_of(std::span<const double>(q));
    if (!j) throw Error(ErrorCode::Degenerate, "image of vertex " + std::to_string(i) + " is not in the set");
    c.embedding.map[t.input[i]] = *j;
  }
  c.embedding.scale_sq = Scalar::floating(1.0, t.tol);
  c.y = y;

  c.residuals["distance"] = max_distance_residual(c.x, y, c.embedding);
  double r = std::sqrt(s.circle.radius_sq), worst = 0;
  for (const auto& p : ys) worst = std::max(worst, std::abs(dist(p, centre) - r));
  c.residuals["circle"] = worst;
  c.residuals["angle"] = s.angle_residual;

  c.notes.push_back("k = " + std::to_string(s.k) + ", angle AOB = " + fmt(s.theta0));
  if (t.input != std::array<std::uint32_t, 4>{0, 1, 2, 3})
    c.notes.push_back("relabelled so that the shorter parallel side is BC");
  if (lifted)
    c.notes.push_back("B and C lowered to height " + fmt(s.height) + "; layers at +-" + fmt(s.x));
  if (merged > 0) c.notes.push_back("mirrored polygon coincides with the original");
  return c;
}

}  // namespace subsol
