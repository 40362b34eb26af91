#include "subsol/verify.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "subsol/action.hpp"
#include "subsol/error.hpp"
#include "subsol/implicit.hpp"

namespace subsol {

namespace {

struct Failure {
  std::string detail;
};

[[noreturn]] void reject(std::string detail) { throw Failure{std::move(detail)}; }

template <class F>
ClauseReport run_clause(std::string name, F&& body) {
  ClauseReport r{std::move(name), true, ""};
  try {
    r.detail = body();
  } catch (const Failure& f) {
    r.ok = false;
    r.detail = f.detail;
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = e.what();
  }
  return r;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  // Returns false when a and b were already joined.
  bool join(std::uint32_t a, std::uint32_t b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

std::string tuple_str(std::span<const std::uint32_t> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

// ---- amplified structure

struct Amplified {
  const ImplicitY* y = nullptr;
  std::vector<Perm> elements;  // sorted elements of the base group
};

std::optional<Amplified> amplified_structure(const Certificate& c) {
  if (!c.y_implicit) return std::nullopt;
  const GroupSpec& s = c.spec;
  if (s.kind != GroupSpec::Kind::Wreath || s.children.size() != 2) reject("spec is not base^q extended by AGL(1,q)");
  const GroupSpec& base = s.children[0];
  const GroupSpec& top = s.children[1];
  if (base.kind != GroupSpec::Kind::Enumerated) reject("wreath base must be an enumerated group");
  if (top.kind != GroupSpec::Kind::Agl1 || top.param != c.y_implicit->q)
    reject("wreath top must be AGL(1,q) with q = " + std::to_string(c.y_implicit->q));
  if (base.degree != c.y_implicit->base.size()) reject("base group degree differs from |X|");
  Amplified a;
  a.y = &*c.y_implicit;
  a.elements = enumerate_group(base.degree, base.generators).elements();
  return a;
}

void check_implicit_shape(const ImplicitY& y) {
  std::size_t n = y.base.size();
  if (!is_prime(y.q)) reject("q = " + std::to_string(y.q) + " is not prime");
  if (y.r == 0 || y.r > y.q) reject("r out of range");
  if (y.o1.empty() || y.o1.size() >= n) reject("first orbit must be a proper nonempty subset");
  for (std::size_t i = 0; i < y.o1.size(); ++i) {
    if (y.o1[i] >= n) reject("first orbit index out of range");
    if (i > 0 && y.o1[i] <= y.o1[i - 1]) reject("first orbit is not sorted and unique");
  }
  if (!std::binary_search(y.o1.begin(), y.o1.end(), y.y)) reject("base entry y is not in the first orbit");
  if (y.z >= n || std::binary_search(y.o1.begin(), y.o1.end(), y.z)) reject("base entry z is not in the second orbit");
}

void check_top(std::uint32_t mul, std::uint32_t add, std::size_t slots, std::uint32_t q, const std::string& what) {
  if (slots != q) reject(what + " has " + std::to_string(slots) + " slots, expected " + std::to_string(q));
  if (mul == 0 || mul >= q || add >= q) reject(what + " has an affine part outside AGL(1,q)");
}

// ---- clauses

std::string clause_solubility(const Certificate& c, const std::optional<Amplified>& amp) {
  auto proof = check_proof(c.spec, c.solubility);
  if (!proof.ok) reject(proof.detail);
  if (!amp) {
    auto real = check_realization(c.spec, c.generators);
    if (!real.ok) reject("generators do not realize the spec: " + real.detail);
    return "proof valid; generators satisfy the relations of " + std::string(to_string(c.spec.kind));
  }
  std::uint32_t q = amp->y->q;
  for (std::size_t g = 0; g < c.amplified_generators.size(); ++g) {
    const auto& gen = c.amplified_generators[g];
    std::string what = "generator " + std::to_string(g);
    check_top(gen.mul, gen.add, gen.slots.size(), q, what);
    for (std::size_t i = 0; i < gen.slots.size(); ++i)
      if (!std::binary_search(amp->elements.begin(), amp->elements.end(), gen.slots[i]))
        reject(what + " slot " + std::to_string(i) + " is not in the base group");
  }
  return "proof valid; " + std::to_string(c.amplified_generators.size()) + " generators lie in the declared group";
}

std::string clause_action(const Certificate& c, const std::optional<Amplified>& amp, const VerifyOptions& opts) {
  if (!amp) {
    auto rep = check_action(Action{*c.y, c.generators, c.spec, {}});
    if (!rep.ok())
      reject("generator " + std::to_string(rep.violations[0].generator) + ": " + rep.violations[0].detail);
    return std::to_string(c.generators.size()) + " generators act by isometries on " + std::to_string(c.y->size()) +
           " points";
  }
  const ImplicitY& y = *amp->y;
  check_implicit_shape(y);
  for (std::size_t g = 0; g < c.amplified_generators.size(); ++g) {
    const auto& gen = c.amplified_generators[g];
    std::string what = "generator " + std::to_string(g);
    check_top(gen.mul, gen.add, gen.slots.size(), y.q, what);
    for (std::size_t i = 0; i < gen.slots.size(); ++i) {
      const Perm& p = gen.slots[i];
      if (p.degree() != y.base.size()) reject(what + " slot " + std::to_string(i) + " has the wrong degree");
      auto iso = check_isometry(y.base, p);
      if (!iso.ok) reject(what + " slot " + std::to_string(i) + ": " + iso.detail);
      for (auto v : y.o1)
        if (!std::binary_search(y.o1.begin(), y.o1.end(), p(v)))
          reject(what + " slot " + std::to_string(i) + " moves " + std::to_string(v) + " out of the first orbit");
    }
  }
  auto pts = sample_implicit(y, c.transitivity.seed + 1, opts.closure_samples);
  for (const auto& t : pts)
    for (std::size_t g = 0; g < c.amplified_generators.size(); ++g)
      if (!implicit_member(y, apply_amplified(c.amplified_generators[g], t)))
        reject("generator " + std::to_string(g) + " sends " + tuple_str(t) + " outside Y");
  return "slots are isometries preserving the first orbit; closure holds on " + std::to_string(pts.size()) +
         " sampled points";
}

std::string full_sweep(const Certificate& c, const ImplicitY& y, const VerifyOptions& opts) {
  auto codes = materialize_implicit(y, opts.full_cap);
  UnionFind uf(codes.size());
  std::size_t joins = 0;
  for (std::uint32_t i = 0; i < codes.size(); ++i) {
    Tuple t = decode_tuple(y, codes[i]);
    for (std::size_t g = 0; g < c.amplified_generators.size(); ++g) {
      Tuple img = apply_amplified(c.amplified_generators[g], t);
      if (!implicit_member(y, img)) reject("generator " + std::to_string(g) + " sends " + tuple_str(t) + " outside Y");
      auto code = encode_tuple(y, img);
      auto it = std::lower_bound(codes.begin(), codes.end(), code);
      if (it == codes.end() || *it != code)
        reject("generator " + std::to_string(g) + " sends " + tuple_str(t) + " outside Y");
      joins += uf.join(i, static_cast<std::uint32_t>(it - codes.begin()));
    }
  }
  if (joins + 1 != codes.size())
    reject(std::to_string(codes.size() - joins) + " orbits on " + std::to_string(codes.size()) + " points");
  return "full sweep: " + std::to_string(codes.size()) + " points, closed and one orbit";
}

std::string clause_transitivity(const Certificate& c, const std::optional<Amplified>& amp, const VerifyOptions& opts) {
  using Mode = Transitivity::Mode;
  if (!amp) {
    if (c.transitivity.mode != Mode::OrbitChecked) reject("explicit sets must be orbit-checked");
    auto o = orbits(c.y->size(), c.generators);
    if (o.size() != 1)
      reject(std::to_string(o.size()) + " orbits; points " + std::to_string(o[0][0]) + " and " +
             std::to_string(o[1][0]) + " are not connected");
    return "single orbit of size " + std::to_string(c.y->size());
  }
  const ImplicitY& y = *amp->y;
  check_implicit_shape(y);
  if (opts.escalate_full || c.transitivity.mode != Mode::WitnessSampled) return full_sweep(c, y, opts);

  const auto& ws = c.transitivity.witnesses;
  if (ws.size() != c.transitivity.samples)
    reject("declared " + std::to_string(c.transitivity.samples) + " samples but " + std::to_string(ws.size()) +
           " witnesses");
  auto targets = sample_implicit(y, c.transitivity.seed, c.transitivity.samples);
  auto base = implicit_base_point(y);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    std::string what = "witness " + std::to_string(i);
    check_top(ws[i].mul, ws[i].add, ws[i].slots.size(), y.q, what);
    for (auto k : ws[i].slots)
      if (k >= amp->elements.size()) reject(what + " names a group element out of range");
    auto img = apply_witness(ws[i], amp->elements, base);
    if (img != targets[i]) reject(what + " reaches " + tuple_str(img) + " instead of " + tuple_str(targets[i]));
  }
  return std::to_string(ws.size()) + " seeded targets reached from the base point";
}

std::string clause_embedding(const Certificate& c, const std::optional<Amplified>& amp) {
  if (!amp) {
    auto r = check_embedding(c.x, *c.y, c.embedding);
    if (!r.ok) reject(r.detail);
    return "all " + std::to_string(c.x.size()) + " points map with squared distances scaled by " +
           c.embedding.scale_sq.str();
  }
  const ImplicitY& y = *amp->y;
  const auto& t = c.tuples;
  if (t.size() != c.x.size()) reject("expected " + std::to_string(c.x.size()) + " tuples");
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!implicit_member(y, t[i])) reject("tuple " + std::to_string(i) + " is not a point of Y");
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) reject("points " + std::to_string(i) + " and " + std::to_string(j) + " share an image");
      Scalar d = y.base.sqdist(t[i][0], t[j][0]);
      for (std::size_t k = 1; k < y.q; ++k) d = d + y.base.sqdist(t[i][k], t[j][k]);
      if (!d.equals(c.embedding.scale_sq * c.x.sqdist(i, j)))
        reject("pair (" + std::to_string(i) + "," + std::to_string(j) + "): " + d.str() + " != " +
               c.embedding.scale_sq.str() + " * " + c.x.sqdist(i, j).str());
    }
  return "all " + std::to_string(t.size()) + " tuples distinct with squared distances scaled by " +
         c.embedding.scale_sq.str();
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseReport& c) { return c.ok; });
}

std::string VerifyReport::summary() const {
  std::string s;
  for (const auto& c : clauses) s += (c.ok ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
  return s;
}

VerifyReport verify_certificate(const Certificate& c, const VerifyOptions& opts) {
  VerifyReport r;
  std::optional<Amplified> amp;
  ClauseReport shape = run_clause("structure", [&]() -> std::string {
    if (c.version != Certificate::kVersion) reject("unsupported version " + std::to_string(c.version));
    if (c.y.has_value() == c.y_implicit.has_value()) reject("exactly one of y and y_implicit is required");
    amp = amplified_structure(c);
    return "";
  });
  auto guarded = [&](const char* name, auto&& body) {
    if (!shape.ok) return ClauseReport{name, false, shape.detail};
    return run_clause(name, body);
  };
  r.clauses[0] = guarded("solubility", [&] { return clause_solubility(c, amp); });
  r.clauses[1] = guarded("action", [&] { return clause_action(c, amp, opts); });
  r.clauses[2] = guarded("transitivity", [&] { return clause_transitivity(c, amp, opts); });
  r.clauses[3] = guarded("embedding", [&] { return clause_embedding(c, amp); });
  return r;
}

}  // namespace subsol
