#include "subsol/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

#include "subsol/error.hpp"

namespace subsol {

namespace {

using i128 = __int128;

// r + s*sqrt5 scaled by the lattice denominator squared.
struct LKey {
  i128 r = 0;
  i128 s = 0;
  friend bool operator==(const LKey&, const LKey&) = default;
  friend auto operator<=>(const LKey&, const LKey&) = default;
};

struct LKeyHash {
  std::size_t operator()(const LKey& k) const {
    auto mix = [](std::uint64_t h, std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    };
    std::uint64_t h = 0;
    h = mix(h, static_cast<std::uint64_t>(k.r));
    h = mix(h, static_cast<std::uint64_t>(k.r >> 64));
    h = mix(h, static_cast<std::uint64_t>(k.s));
    h = mix(h, static_cast<std::uint64_t>(k.s >> 64));
    return h;
  }
};

BigInt to_mpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  BigInt out = (hi << 64) + lo;
  return neg ? BigInt(-out) : out;
}

std::optional<i128> from_mpz(const BigInt& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 120) return std::nullopt;
  BigInt a = abs(v);
  BigInt hi = a >> 64;
  BigInt lo = a - (hi << 64);
  unsigned __int128 u = (static_cast<unsigned __int128>(hi.get_ui()) << 64) | lo.get_ui();
  i128 r = static_cast<i128>(u);
  return sgn(v) < 0 ? -r : r;
}

constexpr std::int64_t kLatticeBound = std::int64_t{1} << 40;

std::uint64_t mix64(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

struct PointSet::Data {
  ScalarKind kind = ScalarKind::Rational;
  std::size_t dim = 0;
  std::size_t n = 0;
  double tol = kDefaultTol;
  std::vector<Golden> golden;
  std::vector<double> reals;

  bool lattice = false;
  BigInt denom{1};
  std::vector<std::int64_t> rat;
  std::vector<std::int64_t> irr;

  std::unordered_multimap<std::size_t, std::uint32_t> exact_index;
  std::vector<double> weights;
  std::vector<double> proj;
  std::vector<std::uint32_t> by_proj;

  mutable std::shared_ptr<DistanceClasses> classes;

  LKey lattice_dist(std::size_t i, std::size_t j) const {
    LKey k;
    const std::int64_t* ri = &rat[i * dim];
    const std::int64_t* rj = &rat[j * dim];
    const std::int64_t* si = &irr[i * dim];
    const std::int64_t* sj = &irr[j * dim];
    for (std::size_t c = 0; c < dim; ++c) {
      i128 dr = ri[c] - rj[c];
      i128 ds = si[c] - sj[c];
      k.r += dr * dr + 5 * ds * ds;
      k.s += 2 * dr * ds;
    }
    return k;
  }

  Golden lattice_to_golden(const LKey& k) const {
    BigInt d2 = denom * denom;
    return {Rational(to_mpz(k.r), d2), Rational(to_mpz(k.s), d2)};
  }

  std::optional<LKey> golden_to_lattice(const Golden& g) const {
    BigInt d2 = denom * denom;
    Rational a = g.a() * Rational(d2, 1);
    Rational b = g.b() * Rational(d2, 1);
    if (!a.is_integer() || !b.is_integer()) return std::nullopt;
    auto r = from_mpz(a.num());
    auto s = from_mpz(b.num());
    if (!r || !s) return std::nullopt;
    return LKey{*r, *s};
  }

  Golden exact_dist(std::size_t i, std::size_t j) const {
    if (lattice) return lattice_to_golden(lattice_dist(i, j));
    Golden acc;
    for (std::size_t c = 0; c < dim; ++c) {
      Golden diff = golden[i * dim + c] - golden[j * dim + c];
      acc += diff * diff;
    }
    return acc;
  }

  double float_dist(std::size_t i, std::size_t j) const {
    double acc = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
      double diff = reals[i * dim + c] - reals[j * dim + c];
      acc += diff * diff;
    }
    return acc;
  }

  std::size_t exact_hash(std::span<const Golden> p) const {
    std::uint64_t h = 0;
    for (const auto& g : p) h = mix64(h, g.hash());
    return h;
  }

  double project(std::span<const double> p) const {
    double s = 0.0;
    for (std::size_t c = 0; c < dim; ++c) s += weights[c] * p[c];
    return s;
  }

  double weight_sum() const {
    double s = 0.0;
    for (double w : weights) s += std::abs(w);
    return s;
  }
};

namespace {

// Distance access in the cheapest exact or float representation.
struct LatticeMetric {
  const PointSet::Data* d;
  using Value = LKey;
  Value dist(std::size_t i, std::size_t j) const { return d->lattice_dist(i, j); }
  bool same(const Value& a, const Value& b) const { return a == b; }
  std::optional<Value> convert(const Scalar& s) const { return d->golden_to_lattice(s.golden_value()); }
};

struct GoldenMetric {
  const PointSet::Data* d;
  using Value = Golden;
  Value dist(std::size_t i, std::size_t j) const { return d->exact_dist(i, j); }
  bool same(const Value& a, const Value& b) const { return a == b; }
  std::optional<Value> convert(const Scalar& s) const { return s.golden_value(); }
};

struct FloatMetric {
  const PointSet::Data* d;
  double tol;
  using Value = double;
  Value dist(std::size_t i, std::size_t j) const { return d->float_dist(i, j); }
  bool same(double a, double b) const { return float_close(a, b, tol); }
  std::optional<Value> convert(const Scalar& s) const { return s.float_value().value; }
};

template <class F>
decltype(auto) with_metric(const PointSet& ps, double tol, F&& f) {
  const auto& d = ps.data();
  if (d.kind == ScalarKind::Float) return f(FloatMetric{&d, tol});
  if (d.lattice) return f(LatticeMetric{&d});
  return f(GoldenMetric{&d});
}

Scalar exact_scalar(ScalarKind kind, Golden g) {
  if (kind == ScalarKind::Rational && g.is_rational()) return Scalar::rational(g.a());
  return Scalar::golden(std::move(g));
}

std::vector<double> projection_weights(std::size_t dim) {
  std::vector<double> w(dim);
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  for (std::size_t c = 0; c < dim; ++c) {
    double f = static_cast<double>(c + 1) * phi;
    w[c] = 0.5 + (f - std::floor(f));
  }
  return w;
}

void build_lattice(PointSet::Data& d) {
  BigInt l = 1;
  for (const auto& g : d.golden) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g.a().den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g.b().den().get_mpz_t());
  }
  std::vector<std::int64_t> rat(d.golden.size());
  std::vector<std::int64_t> irr(d.golden.size());
  for (std::size_t i = 0; i < d.golden.size(); ++i) {
    BigInt a = d.golden[i].a().num() * (l / d.golden[i].a().den());
    BigInt b = d.golden[i].b().num() * (l / d.golden[i].b().den());
    if (abs(a) > kLatticeBound || abs(b) > kLatticeBound) return;
    rat[i] = a.get_si();
    irr[i] = b.get_si();
  }
  if (d.dim > 64) return;
  d.lattice = true;
  d.denom = l;
  d.rat = std::move(rat);
  d.irr = std::move(irr);
}

}  // namespace

bool float_close(double a, double b, double tol) {
  double mag = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= std::max(tol, tol * mag);
}

PointSet::PointSet() : data_(std::make_shared<Data>()) {}

PointSet PointSet::exact(ScalarKind kind, std::size_t dim, std::vector<std::vector<Golden>> points) {
  if (!is_exact(kind)) throw Error(ErrorCode::InvalidArgument, "exact point set needs an exact kind");
  auto d = std::make_shared<Data>();
  d->kind = kind;
  d->dim = dim;
  d->n = points.size();
  d->golden.reserve(points.size() * dim);
  for (auto& p : points) {
    if (p.size() != dim) throw Error(ErrorCode::InvalidArgument, "point has wrong dimension");
    for (auto& g : p) {
      if (kind == ScalarKind::Rational && !g.is_rational())
        throw Error(ErrorCode::InvalidArgument, "irrational coordinate in a rational point set");
      d->golden.push_back(std::move(g));
    }
  }
  d->reals.reserve(d->golden.size());
  for (const auto& g : d->golden) d->reals.push_back(g.to_double());
  build_lattice(*d);
  for (std::uint32_t i = 0; i < d->n; ++i) {
    std::span<const Golden> p(d->golden.data() + i * dim, dim);
    std::size_t h = d->exact_hash(p);
    auto [lo, hi] = d->exact_index.equal_range(h);
    for (auto it = lo; it != hi; ++it)
      if (std::equal(p.begin(), p.end(), d->golden.begin() + it->second * dim))
        throw Error(ErrorCode::InvalidArgument, "duplicate point " + std::to_string(i));
    d->exact_index.emplace(h, i);
  }
  PointSet ps;
  ps.data_ = std::move(d);
  return ps;
}

PointSet PointSet::floating(std::size_t dim, std::vector<std::vector<double>> points, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  auto d = std::make_shared<Data>();
  d->kind = ScalarKind::Float;
  d->dim = dim;
  d->n = points.size();
  d->tol = tol;
  for (const auto& p : points) {
    if (p.size() != dim) throw Error(ErrorCode::InvalidArgument, "point has wrong dimension");
    for (double v : p) {
      if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite coordinate");
      d->reals.push_back(v);
    }
  }
  d->weights = projection_weights(dim);
  d->proj.resize(d->n);
  for (std::size_t i = 0; i < d->n; ++i)
    d->proj[i] = d->project(std::span<const double>(d->reals.data() + i * dim, dim));
  d->by_proj.resize(d->n);
  std::iota(d->by_proj.begin(), d->by_proj.end(), 0u);
  std::sort(d->by_proj.begin(), d->by_proj.end(),
            [&](std::uint32_t a, std::uint32_t b) { return d->proj[a] < d->proj[b]; });
  double sep = 10 * tol;
  double window = sep * d->weight_sum();
  for (std::size_t a = 0; a < d->n; ++a)
    for (std::size_t b = a + 1; b < d->n; ++b) {
      std::uint32_t i = d->by_proj[a];
      std::uint32_t j = d->by_proj[b];
      if (d->proj[j] - d->proj[i] > window) break;
      if (d->float_dist(i, j) <= sep * sep)
        throw Error(ErrorCode::InvalidArgument,
                    "points " + std::to_string(std::min(i, j)) + " and " + std::to_string(std::max(i, j)) +
                        " closer than 10*tol");
    }
  PointSet ps;
  ps.data_ = std::move(d);
  return ps;
}

ScalarKind PointSet::kind() const { return data_->kind; }
std::size_t PointSet::dim() const { return data_->dim; }
std::size_t PointSet::size() const { return data_->n; }
double PointSet::tol() const { return data_->tol; }
bool PointSet::has_lattice() const { return data_->lattice; }

std::span<const Golden> PointSet::golden_point(std::size_t i) const {
  if (!exact()) throw Error(ErrorCode::ScalarKindMismatch, "float point set has no exact coordinates");
  return {data_->golden.data() + i * data_->dim, data_->dim};
}

std::span<const double> PointSet::float_point(std::size_t i) const {
  return {data_->reals.data() + i * data_->dim, data_->dim};
}

Scalar PointSet::coord(std::size_t i, std::size_t k) const {
  if (exact()) return exact_scalar(kind(), data_->golden[i * data_->dim + k]);
  return Scalar::floating(data_->reals[i * data_->dim + k], data_->tol);
}

double PointSet::real(std::size_t i, std::size_t k) const { return data_->reals[i * data_->dim + k]; }

Scalar PointSet::sqdist(std::size_t i, std::size_t j) const {
  if (exact()) return exact_scalar(kind(), golden_sqdist(i, j));
  return Scalar::floating(float_sqdist(i, j), data_->tol);
}

Golden PointSet::golden_sqdist(std::size_t i, std::size_t j) const {
  if (!exact()) throw Error(ErrorCode::ScalarKindMismatch, "float point set has no exact distances");
  return data_->exact_dist(i, j);
}

double PointSet::float_sqdist(std::size_t i, std::size_t j) const { return data_->float_dist(i, j); }

std::optional<std::uint32_t> PointSet::index_of(std::span<const Golden> p) const {
  if (!exact() || p.size() != dim()) return std::nullopt;
  auto [lo, hi] = data_->exact_index.equal_range(data_->exact_hash(p));
  for (auto it = lo; it != hi; ++it)
    if (std::equal(p.begin(), p.end(), data_->golden.begin() + it->second * dim())) return it->second;
  return std::nullopt;
}

std::optional<std::uint32_t> PointSet::index_of(std::span<const double> p) const {
  if (exact() || p.size() != dim()) return std::nullopt;
  const auto& d = *data_;
  double radius = 5 * d.tol;
  double key = d.project(p);
  double window = radius * d.weight_sum();
  auto it = std::lower_bound(d.by_proj.begin(), d.by_proj.end(), key - window,
                             [&](std::uint32_t idx, double v) { return d.proj[idx] < v; });
  for (; it != d.by_proj.end() && d.proj[*it] <= key + window; ++it) {
    double acc = 0.0;
    for (std::size_t c = 0; c < d.dim; ++c) {
      double diff = d.reals[*it * d.dim + c] - p[c];
      acc += diff * diff;
    }
    if (acc <= radius * radius) return *it;
  }
  return std::nullopt;
}

const DistanceClasses& PointSet::distance_classes() const {
  if (data_->classes) return *data_->classes;
  auto dc = std::make_shared<DistanceClasses>();
  std::size_t n = size();
  dc->n = n;
  dc->ids.assign(n * n, 0);
  const auto& d = *data_;
  if (d.kind == ScalarKind::Float) {
    std::vector<std::pair<double, std::size_t>> vals;
    vals.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) vals.emplace_back(d.float_dist(i, j), i * n + j);
    std::sort(vals.begin(), vals.end());
    double anchor = 0.0;
    for (std::size_t t = 0; t < vals.size(); ++t) {
      if (t == 0 || !float_close(anchor, vals[t].first, d.tol)) {
        anchor = vals[t].first;
        dc->values.push_back(Scalar::floating(anchor, d.tol));
      }
      auto id = static_cast<std::uint32_t>(dc->values.size() - 1);
      std::size_t i = vals[t].second / n;
      std::size_t j = vals[t].second % n;
      dc->ids[i * n + j] = dc->ids[j * n + i] = id;
    }
  } else if (d.lattice) {
    std::unordered_map<LKey, std::uint32_t, LKeyHash> seen;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        LKey k = d.lattice_dist(i, j);
        auto [it, fresh] = seen.emplace(k, static_cast<std::uint32_t>(dc->values.size()));
        if (fresh) dc->values.push_back(exact_scalar(d.kind, d.lattice_to_golden(k)));
        dc->ids[i * n + j] = dc->ids[j * n + i] = it->second;
      }
  } else {
    std::map<Golden, std::uint32_t> seen;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Golden g = d.exact_dist(i, j);
        auto [it, fresh] = seen.emplace(g, static_cast<std::uint32_t>(dc->values.size()));
        if (fresh) dc->values.push_back(exact_scalar(d.kind, g));
        dc->ids[i * n + j] = dc->ids[j * n + i] = it->second;
      }
  }
  data_->classes = std::move(dc);
  return *data_->classes;
}

bool operator==(const PointSet& a, const PointSet& b) {
  const auto& x = *a.data_;
  const auto& y = *b.data_;
  if (x.kind != y.kind || x.dim != y.dim || x.n != y.n) return false;
  if (x.kind == ScalarKind::Float) return x.tol == y.tol && x.reals == y.reals;
  return x.golden == y.golden;
}

namespace {

template <class M>
std::size_t count_distinct(const M& m, std::vector<typename M::Value> vals) {
  std::sort(vals.begin(), vals.end());
  std::size_t count = 0;
  for (std::size_t t = 0; t < vals.size(); ++t)
    if (t == 0 || !m.same(vals[t - 1], vals[t])) ++count;
  return count;
}

template <class M>
class SubisometrySearch {
 public:
  using Value = typename M::Value;

  SubisometrySearch(const M& m, std::size_t n, std::size_t targets, std::vector<Value> req)
      : m_(m), n_(n), targets_(targets), req_(std::move(req)), assign_(n) {}

  std::optional<std::vector<std::uint32_t>> run() {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0u);
    std::vector<std::size_t> distinct(n_);
    for (std::size_t u = 0; u < n_; ++u) {
      std::vector<Value> row;
      for (std::size_t w = 0; w < n_; ++w)
        if (w != u) row.push_back(req_[u * n_ + w]);
      distinct[u] = count_distinct(m_, std::move(row));
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return distinct[a] > distinct[b]; });
    std::vector<std::vector<std::uint32_t>> dom(n_);
    std::vector<std::uint32_t> all(targets_);
    std::iota(all.begin(), all.end(), 0u);
    for (auto& d : dom) d = all;
    if (n_ == 0 || dfs(0, dom)) return assign_;
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t depth, std::vector<std::vector<std::uint32_t>>& dom) {
    if (depth == n_) return true;
    std::uint32_t u = order_[depth];
    const std::vector<std::uint32_t> cands = dom[u];
    for (std::uint32_t y : cands) {
      std::vector<std::vector<std::uint32_t>> next(n_);
      bool ok = true;
      for (std::size_t t = depth + 1; t < n_ && ok; ++t) {
        std::uint32_t w = order_[t];
        const Value& want = req_[w * n_ + u];
        auto& out = next[w];
        for (std::uint32_t c : dom[w])
          if (c != y && m_.same(m_.dist(c, y), want)) out.push_back(c);
        ok = !out.empty();
      }
      if (!ok) continue;
      assign_[u] = y;
      if (dfs(depth + 1, next)) return true;
    }
    return false;
  }

  const M& m_;
  std::size_t n_;
  std::size_t targets_;
  std::vector<Value> req_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> assign_;
};

void require_same_exactness(const PointSet& x, const PointSet& y, const Scalar& scale_sq) {
  if (x.exact() != y.exact() || x.exact() != scale_sq.exact())
    throw Error(ErrorCode::ScalarKindMismatch, "point sets and scale must be all exact or all float");
}

}  // namespace

EmbeddingMap find_subisometry(const PointSet& x, const PointSet& y, const Scalar& scale_sq) {
  require_same_exactness(x, y, scale_sq);
  if (x.size() > y.size()) throw Error(ErrorCode::NotFound, "source larger than target");
  std::size_t n = x.size();
  double tol = std::max(x.tol(), y.tol());
  auto found = with_metric(y, tol, [&](const auto& m) -> std::optional<std::vector<std::uint32_t>> {
    using M = std::decay_t<decltype(m)>;
    std::vector<typename M::Value> req(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        auto v = m.convert(scale_sq * x.sqdist(i, j));
        if (!v) return std::nullopt;
        req[i * n + j] = *v;
        req[j * n + i] = *v;
      }
    return SubisometrySearch<M>(m, n, y.size(), std::move(req)).run();
  });
  if (!found) throw Error(ErrorCode::NotFound, "no sub-isometry at scale " + scale_sq.str());
  EmbeddingMap e{std::move(*found), scale_sq};
  if (auto chk = check_embedding(x, y, e); !chk.ok)
    throw Error(ErrorCode::InvalidArgument, "search produced an invalid embedding: " + chk.detail);
  return e;
}

CheckResult check_embedding(const PointSet& x, const PointSet& y, const EmbeddingMap& e) {
  if (x.exact() != y.exact() || x.exact() != e.scale_sq.exact())
    return CheckResult::fail("scalar kinds disagree");
  if (e.map.size() != x.size())
    return CheckResult::fail("map has " + std::to_string(e.map.size()) + " entries for " +
                             std::to_string(x.size()) + " points");
  std::vector<bool> used(y.size(), false);
  for (std::size_t i = 0; i < e.map.size(); ++i) {
    if (e.map[i] >= y.size()) return CheckResult::fail("map[" + std::to_string(i) + "] out of range");
    if (used[e.map[i]]) return CheckResult::fail("map not injective at " + std::to_string(i));
    used[e.map[i]] = true;
  }
  double tol = std::max(x.tol(), y.tol());
  return with_metric(y, tol, [&](const auto& m) {
    std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        auto want = m.convert(e.scale_sq * x.sqdist(i, j));
        if (!want || !m.same(m.dist(e.map[i], e.map[j]), *want))
          return CheckResult::fail("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") not scaled by " + e.scale_sq.str());
      }
    return CheckResult::pass();
  });
}

PermGroup symmetry_group(const PointSet& x, std::size_t cap) {
  if (!x.exact()) throw Error(ErrorCode::InvalidArgument, "symmetry_group needs exact coordinates");
  const auto& dc = x.distance_classes();
  std::size_t n = x.size();
  std::vector<std::vector<std::uint32_t>> sig(n);
  for (std::size_t i = 0; i < n; ++i) {
    sig[i].assign(dc.ids.begin() + i * n, dc.ids.begin() + (i + 1) * n);
    std::sort(sig[i].begin(), sig[i].end());
  }
  std::vector<std::uint32_t> img(n);
  std::vector<bool> used(n, false);
  std::vector<Perm> found;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (found.size() >= cap) throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " symmetries");
      found.emplace_back(img);
      return;
    }
    for (std::uint32_t j = 0; j < n; ++j) {
      if (used[j] || sig[i] != sig[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) ok = dc.at(i, k) == dc.at(j, img[k]);
      if (!ok) continue;
      img[i] = j;
      used[j] = true;
      self(self, i + 1);
      used[j] = false;
    }
  };
  rec(rec, 0);
  return PermGroup::from_elements(n, std::move(found));
}

std::vector<std::uint32_t> affine_anchors(const PointSet& x) {
  std::vector<std::uint32_t> anchors;
  std::size_t n = x.size();
  std::size_t dim = x.dim();
  if (n == 0) return anchors;
  anchors.push_back(0);
  if (x.exact()) {
    std::vector<std::vector<Golden>> rows;
    std::vector<std::size_t> pivots;
    auto p0 = x.golden_point(0);
    for (std::uint32_t i = 1; i < n && rows.size() < dim; ++i) {
      auto p = x.golden_point(i);
      std::vector<Golden> v(dim);
      for (std::size_t c = 0; c < dim; ++c) v[c] = p[c] - p0[c];
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (v[pivots[r]].is_zero()) continue;
        Golden f = v[pivots[r]] / rows[r][pivots[r]];
        for (std::size_t c = 0; c < dim; ++c) v[c] -= f * rows[r][c];
      }
      auto nz = std::find_if(v.begin(), v.end(), [](const Golden& g) { return !g.is_zero(); });
      if (nz == v.end()) continue;
      pivots.push_back(static_cast<std::size_t>(nz - v.begin()));
      rows.push_back(std::move(v));
      anchors.push_back(i);
    }
    return anchors;
  }
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::sqrt(x.float_sqdist(0, i)));
  double floor_norm = 1e-7 * std::max(1.0, scale);
  std::vector<std::vector<double>> basis;
  while (basis.size() < dim) {
    double best = floor_norm;
    std::optional<std::uint32_t> pick;
    std::vector<double> best_res;
    for (std::uint32_t i = 1; i < n; ++i) {
      std::vector<double> v(dim);
      for (std::size_t c = 0; c < dim; ++c) v[c] = x.real(i, c) - x.real(0, c);
      for (const auto& q : basis) {
        double dot = std::inner_product(v.begin(), v.end(), q.begin(), 0.0);
        for (std::size_t c = 0; c < dim; ++c) v[c] -= dot * q[c];
      }
      double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
      if (norm > best) {
        best = norm;
        pick = i;
        best_res = std::move(v);
      }
    }
    if (!pick) break;
    for (double& c : best_res) c /= best;
    basis.push_back(std::move(best_res));
    anchors.push_back(*pick);
  }
  return anchors;
}

CheckResult check_isometry(const PointSet& x, const Perm& p) {
  constexpr std::size_t kAllPairs = 400;
  if (x.size() <= kAllPairs) return check_isometry(x, p, {});
  auto anchors = affine_anchors(x);
  return check_isometry(x, p, anchors);
}

CheckResult check_isometry(const PointSet& x, const Perm& p, std::span<const std::uint32_t> anchors) {
  if (p.degree() != x.size())
    return CheckResult::fail("permutation degree " + std::to_string(p.degree()) + " differs from " +
                             std::to_string(x.size()) + " points");
  return with_metric(x, x.tol(), [&](const auto& m) {
    auto test = [&](std::size_t i, std::size_t j) { return m.same(m.dist(i, j), m.dist(p(i), p(j))); };
    auto fail = [](std::size_t i, std::size_t j) {
      return CheckResult::fail("pair (" + std::to_string(i) + "," + std::to_string(j) + ") distance changed");
    };
    std::size_t n = x.size();
    if (anchors.empty()) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!test(i, j)) return fail(i, j);
      return CheckResult::pass();
    }
    for (std::size_t i = 0; i < n; ++i)
      for (auto a : anchors)
        if (!test(i, a)) return fail(i, a);
    return CheckResult::pass();
  });
}

Circle circumcircle(const Point2& a, const Point2& b, const Point2& c, double tol) {
  double bx = b[0] - a[0], by = b[1] - a[1];
  double cx = c[0] - a[0], cy = c[1] - a[1];
  double det = 2.0 * (bx * cy - by * cx);
  double scale = std::max({1.0, bx * bx + by * by, cx * cx + cy * cy});
  if (std::abs(det) <= tol * scale) throw Error(ErrorCode::Collinear, "points are collinear");
  double b2 = bx * bx + by * by;
  double c2 = cx * cx + cy * cy;
  double ux = (cy * b2 - by * c2) / det;
  double uy = (bx * c2 - cx * b2) / det;
  return {{a[0] + ux, a[1] + uy}, ux * ux + uy * uy};
}

}  // namespace subsol
