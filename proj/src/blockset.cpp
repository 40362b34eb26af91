#include "subsol/blockset.hpp"

#include <algorithm>
#include <numeric>

#include "subsol/error.hpp"

namespace subsol {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

using Row = std::vector<Rational>;

PointSet rational_points(std::size_t dim, std::vector<Row> rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::vector<std::vector<Golden>> pts;
  pts.reserve(rows.size());
  for (auto& r : rows) pts.emplace_back(r.begin(), r.end());
  return PointSet::exact(ScalarKind::Rational, dim, std::move(pts));
}

Perm induced(const PointSet& y, const SignedElement& e) {
  std::vector<std::uint32_t> img(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    auto q = apply_signed(e, y.golden_point(i));
    auto j = y.index_of(std::span<const Golden>(q));
    if (!j) throw Error(ErrorCode::InvalidArgument, "signed element leaves the set");
    img[i] = *j;
  }
  return Perm(img);
}

std::string label(const Rational& a, const Rational& b, const Rational& c) {
  return a.str() + "," + b.str() + "," + c.str();
}

std::vector<std::string> signed_notes(const SignedPermSet& s) {
  std::vector<std::string> notes{
      "sign group elements are taken as {1,-1}",
      "positions are 0-based residues mod p; the witness position map psi(a) = (a - t)/(s - t) sends the "
      "beta entry at t to 0 and the gamma entry at s to 1",
  };
  if (s.degenerate())
    notes.push_back("parameters coincide or vanish in absolute value; the set collapses to " +
                    std::to_string(s.points.size()) + " points and the action is not free");
  return notes;
}

}  // namespace

PointSet signed_pattern_points(const Rational& alpha, const Rational& beta, const Rational& gamma, std::size_t len) {
  if (len < 2) throw Error(ErrorCode::InvalidArgument, "signed pattern needs at least two entries");
  std::vector<Row> rows;
  for (std::size_t t = 0; t < len; ++t)
    for (std::size_t s = 0; s < len; ++s) {
      if (s == t) continue;
      for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
        Row r(len);
        for (std::size_t c = 0; c < len; ++c) {
          const Rational& v = c == t ? beta : c == s ? gamma : alpha;
          r[c] = (mask >> c) & 1 ? -v : v;
        }
        rows.push_back(std::move(r));
      }
    }
  return rational_points(len, std::move(rows));
}

std::vector<Golden> SignedPermSet::base() const {
  std::vector<Golden> b(p, Golden(alpha));
  b[0] = Golden(beta);
  b[1] = Golden(gamma);
  return b;
}

bool SignedPermSet::degenerate() const {
  Rational a = alpha.abs(), b = beta.abs(), c = gamma.abs();
  return a == b || b == c || a == c || a.is_zero() || b.is_zero() || c.is_zero();
}

SignedPermSet signed_perm_set(const Rational& alpha, const Rational& beta, const Rational& gamma, std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  return {alpha, beta, gamma, p, signed_pattern_points(alpha, beta, gamma, p)};
}

std::vector<Golden> apply_signed(const SignedElement& e, std::span<const Golden> x) {
  std::size_t p = x.size();
  if (e.signs.size() != p) throw Error(ErrorCode::InvalidArgument, "sign vector length differs from point length");
  std::vector<Golden> out(p);
  for (std::size_t i = 0; i < p; ++i) {
    std::size_t src = (static_cast<std::uint64_t>(e.mul) * i + e.add) % p;
    out[i] = e.signs[i] < 0 ? -x[src] : x[src];
  }
  return out;
}

SignedElement signed_perm_witness(const SignedPermSet& s, std::span<const Golden> target) {
  std::uint32_t p = s.p;
  if (target.size() != p) throw Error(ErrorCode::BadTarget, "target has wrong length");
  if (!s.points.index_of(target)) throw Error(ErrorCode::BadTarget, "target is not in the set");
  auto mag = [](const Golden& g) { return g.sign() < 0 ? -g : g; };
  Golden a(s.alpha.abs()), b(s.beta.abs()), c(s.gamma.abs());
  auto base = s.base();
  for (std::uint32_t t = 0; t < p; ++t) {
    if (mag(target[t]) != b) continue;
    for (std::uint32_t u = 0; u < p; ++u) {
      if (u == t || mag(target[u]) != c) continue;
      bool rest = true;
      for (std::uint32_t i = 0; i < p && rest; ++i)
        if (i != t && i != u) rest = mag(target[i]) == a;
      if (!rest) continue;
      // psi(a) = (a - t) * (u - t)^-1 sends t to 0 and u to 1.
      SignedElement e;
      e.mul = inverse_mod((u + p - t) % p, p);
      e.add = static_cast<std::uint32_t>((static_cast<std::uint64_t>(p - t) * e.mul) % p);
      e.signs.resize(p);
      for (std::uint32_t i = 0; i < p; ++i) {
        std::size_t src = (static_cast<std::uint64_t>(e.mul) * i + e.add) % p;
        e.signs[i] = (base[src].is_zero() || base[src] == target[i]) ? 1 : -1;
      }
      return e;
    }
  }
  throw Error(ErrorCode::BadTarget, "no beta/gamma placement matches the target");
}

std::vector<Perm> signed_perm_generators(const SignedPermSet& s) {
  std::uint32_t p = s.p;
  std::vector<int> plus(p, 1);
  std::uint32_t g = static_cast<std::uint32_t>(smallest_primitive_root(p));
  std::vector<Perm> gens;
  gens.push_back(induced(s.points, {1, p - 1, plus}));
  gens.push_back(induced(s.points, {inverse_mod(g, p), 0, plus}));
  for (std::uint32_t j = 0; j < p; ++j) {
    auto signs = plus;
    signs[j] = -1;
    gens.push_back(induced(s.points, {1, 0, signs}));
  }
  return gens;
}

std::uint32_t smallest_prime_above(std::uint32_t n) {
  std::uint32_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

Certificate signed_perm_certificate(const Rational& alpha, const Rational& beta, const Rational& gamma,
                                    std::uint32_t l, std::optional<std::uint32_t> p) {
  std::uint32_t prime = p.value_or(smallest_prime_above(l + 2));
  if (prime <= l + 2)
    throw Error(ErrorCode::InvalidArgument, "p must exceed " + std::to_string(l + 2));
  auto set = signed_perm_set(alpha, beta, gamma, prime);
  Certificate c;
  c.name = "signed-perm(" + label(alpha, beta, gamma) + ";l=" + std::to_string(l) + ",p=" + std::to_string(prime) + ")";
  c.x = signed_pattern_points(alpha, beta, gamma, l + 2);
  c.y = set.points;
  std::size_t pad = prime - l - 2;
  c.embedding.scale_sq = Scalar::rational(1);
  for (std::size_t i = 0; i < c.x.size(); ++i) {
    std::vector<Golden> q(pad, Golden(alpha));
    auto xi = c.x.golden_point(i);
    q.insert(q.end(), xi.begin(), xi.end());
    auto j = set.points.index_of(std::span<const Golden>(q));
    if (!j) throw Error(ErrorCode::InvalidArgument, "padded point missing from the signed set");
    c.embedding.map.push_back(*j);
  }
  c.generators = signed_perm_generators(set);
  c.spec = GroupSpec::wreath(GroupSpec::c2_power(1), GroupSpec::agl1(prime));
  c.solubility = prove_soluble(c.spec);
  c.transitivity.mode = Transitivity::Mode::OrbitChecked;
  c.notes = signed_notes(set);
  return c;
}

PointSet block_pattern_points(const BlockPattern& b) {
  Row r;
  for (std::uint32_t t = 0; t < b.i; ++t) r.push_back(b.alpha);
  for (std::uint32_t t = 0; t < b.j; ++t) r.push_back(b.beta);
  for (std::uint32_t t = 0; t < b.k; ++t) r.push_back(b.gamma);
  for (std::uint32_t t = 0; t < b.l; ++t) r.push_back(b.delta);
  std::sort(r.begin(), r.end());
  std::vector<Row> rows;
  do rows.push_back(r);
  while (std::next_permutation(r.begin(), r.end()));
  return rational_points(r.size(), std::move(rows));
}

Certificate block_embed(const Rational& alpha, const Rational& beta, const Rational& gamma, const Rational& delta,
                        std::uint32_t i, std::uint32_t j, std::optional<std::uint32_t> p) {
  Rational half(1, 2);
  Rational mid = (alpha + beta) * half;
  Rational a2 = (alpha - beta) * half;
  Certificate c = signed_perm_certificate(a2, gamma - mid, delta - mid, i + j, p);
  const PointSet& y = *c.y;
  std::size_t pad = y.dim() - (i + j + 2);
  c.x = block_pattern_points({alpha, beta, gamma, delta, i, j, 1, 1});
  c.embedding.map.clear();
  for (std::size_t t = 0; t < c.x.size(); ++t) {
    std::vector<Golden> q(pad, Golden(a2));
    for (const auto& v : c.x.golden_point(t)) q.push_back(v - Golden(mid));
    auto idx = y.index_of(std::span<const Golden>(q));
    if (!idx) throw Error(ErrorCode::InvalidArgument, "translated pattern point missing from the signed set");
    c.embedding.map.push_back(*idx);
  }
  if (auto chk = check_embedding(c.x, y, c.embedding); !chk.ok)
    throw Error(ErrorCode::InvalidArgument, "translated embedding is not an isometry: " + chk.detail);
  c.name = "block(" + alpha.str() + "," + beta.str() + "," + gamma.str() + "," + delta.str() + ";" +
           std::to_string(i) + "," + std::to_string(j) + ",1,1)";
  c.notes.push_back("pattern translated by -(alpha+beta)/2 in every coordinate and padded with (alpha-beta)/2");
  return c;
}

EmbeddingMap subpattern_embed(const BlockPattern& from, const BlockPattern& to) {
  if (from.alpha != to.alpha || from.beta != to.beta || from.gamma != to.gamma || from.delta != to.delta)
    throw Error(ErrorCode::NotSubpattern, "patterns use different values");
  if (from.i > to.i || from.j > to.j || from.k > to.k || from.l > to.l)
    throw Error(ErrorCode::NotSubpattern, "source multiplicities exceed the target's");
  std::vector<Golden> prefix;
  for (std::uint32_t t = from.i; t < to.i; ++t) prefix.emplace_back(to.alpha);
  for (std::uint32_t t = from.j; t < to.j; ++t) prefix.emplace_back(to.beta);
  for (std::uint32_t t = from.k; t < to.k; ++t) prefix.emplace_back(to.gamma);
  for (std::uint32_t t = from.l; t < to.l; ++t) prefix.emplace_back(to.delta);
  auto xs = block_pattern_points(from);
  auto ys = block_pattern_points(to);
  EmbeddingMap e{{}, Scalar::rational(1)};
  for (std::size_t t = 0; t < xs.size(); ++t) {
    auto q = prefix;
    for (const auto& v : xs.golden_point(t)) q.push_back(v);
    auto idx = ys.index_of(std::span<const Golden>(q));
    if (!idx) throw Error(ErrorCode::NotSubpattern, "prefixed point missing from the target pattern");
    e.map.push_back(*idx);
  }
  return e;
}

Certificate block_family_certificate(const BlockPattern& b, std::optional<std::uint32_t> p) {
  if (b.k + b.l > 2) throw Error(ErrorCode::InvalidArgument, "patterns need k + l <= 2");
  if (b.k == 1 && b.l == 1) return block_embed(b.alpha, b.beta, b.gamma, b.delta, b.i, b.j, p);
  if (b.k == 2 || b.l == 2) {
    const Rational& v = b.k == 2 ? b.gamma : b.delta;
    Certificate c = block_embed(b.alpha, b.beta, v, v, b.i, b.j, p);
    c.x = block_pattern_points(b);
    c.notes.push_back("repeated entry handled by taking gamma = delta");
    return c;
  }
  BlockPattern host = b;
  host.k = 1;
  host.l = 1;
  auto inner = subpattern_embed(b, host);
  Certificate c = block_embed(b.alpha, b.beta, b.gamma, b.delta, b.i, b.j, p);
  std::vector<std::uint32_t> map;
  for (auto t : inner.map) map.push_back(c.embedding.map[t]);
  c.x = block_pattern_points(b);
  c.embedding.map = std::move(map);
  c.notes.push_back("pattern embedded in X(i,j,1,1) by fixing the leading surplus entries");
  return c;
}

}  // namespace subsol
