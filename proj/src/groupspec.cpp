#include "subsol/groupspec.hpp"

#include <functional>

#include "subsol/error.hpp"

namespace subsol {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1u) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (auto f : factors)
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return g;
  }
  throw Error(ErrorCode::NotPrime, "no primitive root");
}

GroupSpec GroupSpec::cyclic(std::uint64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclic order must be positive");
  GroupSpec s;
  s.kind = Kind::Cyclic;
  s.param = n;
  return s;
}

GroupSpec GroupSpec::dihedral(std::uint64_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "dihedral k must be positive");
  GroupSpec s;
  s.kind = Kind::Dihedral;
  s.param = k;
  return s;
}

GroupSpec GroupSpec::c2_power(std::uint64_t d) {
  GroupSpec s;
  s.kind = Kind::C2Power;
  s.param = d;
  return s;
}

GroupSpec GroupSpec::agl1(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  GroupSpec s;
  s.kind = Kind::Agl1;
  s.param = p;
  return s;
}

GroupSpec GroupSpec::direct(std::vector<GroupSpec> factors) {
  GroupSpec s;
  s.kind = Kind::Direct;
  s.param = 0;
  s.children = std::move(factors);
  return s;
}

GroupSpec GroupSpec::power(GroupSpec base, std::uint64_t exp) {
  GroupSpec s;
  s.kind = Kind::Power;
  s.param = exp;
  s.children.push_back(std::move(base));
  return s;
}

GroupSpec GroupSpec::enumerated(const PermGroup& g) {
  GroupSpec s;
  s.kind = Kind::Enumerated;
  s.param = 0;
  s.degree = g.degree();
  s.order = *g.order();
  s.generators = g.generators();
  return s;
}

GroupSpec GroupSpec::wreath(GroupSpec base, GroupSpec top) {
  if (top.kind != Kind::Agl1) throw Error(ErrorCode::InvalidArgument, "wreath top must be AGL(1,q)");
  GroupSpec s;
  s.kind = Kind::Wreath;
  s.param = 0;
  s.children.push_back(std::move(base));
  s.children.push_back(std::move(top));
  return s;
}

std::string_view to_string(GroupSpec::Kind kind) {
  switch (kind) {
    case GroupSpec::Kind::Cyclic: return "cyclic";
    case GroupSpec::Kind::Dihedral: return "dihedral";
    case GroupSpec::Kind::C2Power: return "c2power";
    case GroupSpec::Kind::Agl1: return "agl";
    case GroupSpec::Kind::Direct: return "direct";
    case GroupSpec::Kind::Power: return "power";
    case GroupSpec::Kind::Enumerated: return "enumerated";
    case GroupSpec::Kind::Wreath: return "wreath";
  }
  return "?";
}

std::string_view to_string(SolubilityProof::Node node) {
  using N = SolubilityProof::Node;
  switch (node) {
    case N::CyclicLeaf: return "cyclic";
    case N::DihedralLeaf: return "dihedral";
    case N::C2PowerLeaf: return "c2power";
    case N::Agl1Leaf: return "agl";
    case N::EnumeratedLeaf: return "enumerated";
    case N::Product: return "product";
    case N::Power: return "power";
    case N::Extension: return "extension";
  }
  return "?";
}

namespace {

using Kind = GroupSpec::Kind;
using Node = SolubilityProof::Node;

SolubilityProof prove_at(const GroupSpec& s, const std::string& path) {
  SolubilityProof p;
  switch (s.kind) {
    case Kind::Cyclic:
      p.node = Node::CyclicLeaf;
      p.param = s.param;
      return p;
    case Kind::Dihedral:
      p.node = Node::DihedralLeaf;
      p.param = s.param;
      return p;
    case Kind::C2Power:
      p.node = Node::C2PowerLeaf;
      p.param = s.param;
      return p;
    case Kind::Agl1:
      if (!is_prime(s.param))
        throw Error(ErrorCode::NotPrime, path + ": AGL(1," + std::to_string(s.param) + ")");
      p.node = Node::Agl1Leaf;
      p.param = s.param;
      return p;
    case Kind::Enumerated: {
      PermGroup g = enumerate_group(s.degree, s.generators);
      if (*g.order() != s.order)
        throw Error(ErrorCode::InvalidArgument, path + ": declared order " + std::to_string(s.order) +
                                                    " but generators give " + std::to_string(*g.order()));
      DerivedSeries ds = derived_series(g);
      if (!ds.soluble)
        throw Error(ErrorCode::NotSoluble, path + ": derived series of the order-" + std::to_string(s.order) +
                                               " group stabilises at order " +
                                               std::to_string(ds.orders().back()));
      p.node = Node::EnumeratedLeaf;
      p.derived_orders = ds.orders();
      return p;
    }
    case Kind::Direct:
      p.node = Node::Product;
      for (std::size_t i = 0; i < s.children.size(); ++i)
        p.children.push_back(prove_at(s.children[i], path + ".factors[" + std::to_string(i) + "]"));
      return p;
    case Kind::Power:
      p.node = Node::Power;
      p.param = s.param;
      p.children.push_back(prove_at(s.children.at(0), path + ".base"));
      return p;
    case Kind::Wreath:
      p.node = Node::Extension;
      p.children.push_back(prove_at(s.children.at(0), path + ".base"));
      p.children.push_back(prove_at(s.children.at(1), path + ".top"));
      return p;
  }
  throw Error(ErrorCode::InvalidArgument, path + ": unknown spec kind");
}

CheckResult check_at(const GroupSpec& s, const SolubilityProof& p, const std::string& path) {
  auto fail = [&](const std::string& why) { return CheckResult::fail(path + ": " + why); };
  auto leaf = [&](Node expected) -> CheckResult {
    if (p.node != expected) return fail("proof node does not match spec kind");
    if (p.param != s.param) return fail("proof parameter differs from spec");
    if (!p.children.empty() || !p.derived_orders.empty()) return fail("leaf carries children");
    return CheckResult::pass();
  };
  switch (s.kind) {
    case Kind::Cyclic:
      if (s.param < 1) return fail("cyclic order must be positive");
      return leaf(Node::CyclicLeaf);
    case Kind::Dihedral:
      if (s.param < 1) return fail("dihedral k must be positive");
      return leaf(Node::DihedralLeaf);
    case Kind::C2Power: return leaf(Node::C2PowerLeaf);
    case Kind::Agl1:
      if (!is_prime(s.param)) return fail("AGL(1,p) with p = " + std::to_string(s.param) + " not prime");
      return leaf(Node::Agl1Leaf);
    case Kind::Enumerated: {
      if (p.node != Node::EnumeratedLeaf) return fail("proof node does not match spec kind");
      if (!p.children.empty()) return fail("leaf carries children");
      PermGroup g;
      try {
        g = enumerate_group(s.degree, s.generators);
      } catch (const Error& e) {
        return fail(e.what());
      }
      if (*g.order() != s.order) return fail("declared order differs from enumeration");
      DerivedSeries ds = derived_series(g);
      if (!ds.soluble) return fail("NotSoluble: derived series does not reach the trivial group");
      if (ds.orders() != p.derived_orders) return fail("derived series orders do not match");
      return CheckResult::pass();
    }
    case Kind::Direct: {
      if (p.node != Node::Product) return fail("expected product node");
      if (p.children.size() != s.children.size()) return fail("factor count mismatch");
      for (std::size_t i = 0; i < s.children.size(); ++i) {
        auto r = check_at(s.children[i], p.children[i], path + ".factors[" + std::to_string(i) + "]");
        if (!r.ok) return r;
      }
      return CheckResult::pass();
    }
    case Kind::Power: {
      if (p.node != Node::Power || p.param != s.param || p.children.size() != 1)
        return fail("expected power node");
      return check_at(s.children.at(0), p.children[0], path + ".base");
    }
    case Kind::Wreath: {
      if (p.node != Node::Extension || p.children.size() != 2) return fail("expected extension node");
      if (s.children.size() != 2 || s.children[1].kind != Kind::Agl1) return fail("wreath top must be AGL");
      auto r = check_at(s.children[0], p.children[0], path + ".base");
      if (!r.ok) return r;
      return check_at(s.children[1], p.children[1], path + ".top");
    }
  }
  return fail("unknown spec kind");
}

}  // namespace

SolubilityProof prove_soluble(const GroupSpec& spec) { return prove_at(spec, "$"); }

CheckResult check_proof(const GroupSpec& spec, const SolubilityProof& proof) {
  try {
    return check_at(spec, proof, "$");
  } catch (const Error& e) {
    return CheckResult::fail(e.what());
  }
}

BigInt spec_order(const GroupSpec& s) {
  switch (s.kind) {
    case Kind::Cyclic: return BigInt(std::to_string(s.param));
    case Kind::Dihedral: return BigInt(std::to_string(s.param)) * 2;
    case Kind::C2Power: {
      BigInt r;
      mpz_ui_pow_ui(r.get_mpz_t(), 2, s.param);
      return r;
    }
    case Kind::Agl1: {
      BigInt p(std::to_string(s.param));
      return p * (p - 1);
    }
    case Kind::Direct: {
      BigInt r = 1;
      for (const auto& c : s.children) r *= spec_order(c);
      return r;
    }
    case Kind::Power: {
      BigInt base = spec_order(s.children.at(0));
      BigInt r;
      mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), s.param);
      return r;
    }
    case Kind::Enumerated: return BigInt(std::to_string(s.order));
    case Kind::Wreath: {
      BigInt base = spec_order(s.children.at(0));
      std::uint64_t q = s.children.at(1).param;
      BigInt r;
      mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), q);
      return r * spec_order(s.children[1]);
    }
  }
  return 0;
}

std::vector<Perm> agl_generators(std::uint64_t p) {
  std::uint64_t g = smallest_primitive_root(p);
  std::vector<std::uint32_t> shift(p), scale(p);
  for (std::uint64_t a = 0; a < p; ++a) {
    shift[a] = static_cast<std::uint32_t>((a + 1) % p);
    scale[a] = static_cast<std::uint32_t>((g * a) % p);
  }
  return {Perm(std::move(shift)), Perm(std::move(scale))};
}

std::size_t spec_generator_count(const GroupSpec& s) {
  switch (s.kind) {
    case Kind::Cyclic: return 1;
    case Kind::Dihedral: return 2;
    case Kind::C2Power: return s.param;
    case Kind::Agl1: return 2;
    case Kind::Direct: {
      std::size_t n = 0;
      for (const auto& c : s.children) n += spec_generator_count(c);
      return n;
    }
    case Kind::Power: return s.param * spec_generator_count(s.children.at(0));
    case Kind::Enumerated: return s.generators.size();
    case Kind::Wreath: return 2 + s.children.at(1).param * spec_generator_count(s.children.at(0));
  }
  return 0;
}

namespace {

// A word in the global generator list; each letter is (generator index, exponent).
using Word = std::vector<std::pair<std::size_t, std::int64_t>>;

struct Relator {
  Word word;
  std::string label;
};

struct HomCheck {
  std::size_t offset;
  const GroupSpec* spec;
  std::string path;
};

struct Presentation {
  std::vector<Relator> relators;
  std::vector<HomCheck> homs;
};

void add_commuting(std::size_t a0, std::size_t na, std::size_t b0, std::size_t nb, const std::string& label,
                   Presentation& out) {
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      out.relators.push_back({{{a0 + i, -1}, {b0 + j, -1}, {a0 + i, 1}, {b0 + j, 1}}, label});
}

void collect(const GroupSpec& s, std::size_t off, const std::string& path, Presentation& out) {
  switch (s.kind) {
    case Kind::Cyclic:
      out.relators.push_back({{{off, static_cast<std::int64_t>(s.param)}}, path + " g^n"});
      return;
    case Kind::Dihedral:
      out.relators.push_back({{{off, static_cast<std::int64_t>(s.param)}}, path + " r^k"});
      out.relators.push_back({{{off + 1, 2}}, path + " s^2"});
      out.relators.push_back({{{off + 1, 1}, {off, 1}, {off + 1, 1}, {off, 1}}, path + " (sr)^2"});
      return;
    case Kind::C2Power:
      for (std::size_t i = 0; i < s.param; ++i) out.relators.push_back({{{off + i, 2}}, path + " g^2"});
      for (std::size_t i = 0; i < s.param; ++i)
        add_commuting(off + i, 1, off + i + 1, s.param - i - 1, path + " commute", out);
      return;
    case Kind::Agl1: {
      auto p = static_cast<std::int64_t>(s.param);
      auto g = static_cast<std::int64_t>(smallest_primitive_root(s.param));
      out.relators.push_back({{{off, p}}, path + " t^p"});
      out.relators.push_back({{{off + 1, p - 1}}, path + " m^(p-1)"});
      out.relators.push_back({{{off + 1, 1}, {off, 1}, {off + 1, -1}, {off, -g}}, path + " m t m^-1 = t^g"});
      return;
    }
    case Kind::Direct: {
      std::vector<std::pair<std::size_t, std::size_t>> blocks;
      std::size_t o = off;
      for (std::size_t i = 0; i < s.children.size(); ++i) {
        std::size_t n = spec_generator_count(s.children[i]);
        collect(s.children[i], o, path + ".factors[" + std::to_string(i) + "]", out);
        blocks.emplace_back(o, n);
        o += n;
      }
      for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
          add_commuting(blocks[i].first, blocks[i].second, blocks[j].first, blocks[j].second,
                        path + " factors commute", out);
      return;
    }
    case Kind::Power: {
      std::size_t n = spec_generator_count(s.children.at(0));
      for (std::size_t c = 0; c < s.param; ++c)
        collect(s.children[0], off + c * n, path + ".copy[" + std::to_string(c) + "]", out);
      for (std::size_t a = 0; a < s.param; ++a)
        for (std::size_t b = a + 1; b < s.param; ++b)
          add_commuting(off + a * n, n, off + b * n, n, path + " copies commute", out);
      return;
    }
    case Kind::Enumerated:
      out.homs.push_back({off, &s, path});
      return;
    case Kind::Wreath: {
      const GroupSpec& base = s.children.at(0);
      const GroupSpec& top = s.children.at(1);
      std::uint64_t q = top.param;
      std::uint64_t g = smallest_primitive_root(q);
      std::size_t n = spec_generator_count(base);
      std::size_t b0 = off + 2;
      collect(top, off, path + ".top", out);
      for (std::size_t c = 0; c < q; ++c) collect(base, b0 + c * n, path + ".slot[" + std::to_string(c) + "]", out);
      for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = a + 1; b < q; ++b)
          add_commuting(b0 + a * n, n, b0 + b * n, n, path + " slots commute", out);
      // t B_j(x) t^-1 = B_{pi_t(j)}(x) for the two slot maps j -> j+1 and j -> g j.
      for (std::size_t j = 0; j < q; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          std::size_t shifted = (j + 1) % q;
          std::size_t scaled = (g * j) % q;
          out.relators.push_back({{{off, 1}, {b0 + j * n + k, 1}, {off, -1}, {b0 + shifted * n + k, -1}},
                                  path + " translation permutes slots"});
          out.relators.push_back({{{off + 1, 1}, {b0 + j * n + k, 1}, {off + 1, -1}, {b0 + scaled * n + k, -1}},
                                  path + " scaling permutes slots"});
        }
      return;
    }
  }
}

Perm evaluate(const Word& w, std::span<const Perm> gens) {
  Perm r = Perm::identity(gens.front().degree());
  for (const auto& [idx, e] : w) r = r * gens[idx].pow(e);
  return r;
}

// Diagonal test: the pairs (a_i, b_i) generate a group of order |<a>| iff a_i -> b_i
// extends to a homomorphism.
CheckResult check_hom(const HomCheck& h, std::span<const Perm> gens) {
  const GroupSpec& s = *h.spec;
  std::size_t m = s.degree;
  std::size_t n = gens.front().degree();
  PermGroup source;
  try {
    source = enumerate_group(m, s.generators);
  } catch (const Error& e) {
    return CheckResult::fail(h.path + ": " + e.what());
  }
  if (*source.order() != s.order) return CheckResult::fail(h.path + ": declared order differs from enumeration");
  std::vector<Perm> diag;
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    std::vector<std::uint32_t> img(m + n);
    for (std::size_t x = 0; x < m; ++x) img[x] = s.generators[i](x);
    const Perm& b = gens[h.offset + i];
    for (std::size_t x = 0; x < n; ++x) img[m + x] = static_cast<std::uint32_t>(m + b(x));
    diag.emplace_back(std::move(img));
  }
  try {
    enumerate_group(m + n, diag, s.order);
  } catch (const Error&) {
    return CheckResult::fail(h.path + ": generators do not define a homomorphic image of the enumerated group");
  }
  return CheckResult::pass();
}

}  // namespace

CheckResult check_realization(const GroupSpec& spec, std::span<const Perm> gens) {
  std::size_t expected = spec_generator_count(spec);
  if (gens.size() != expected)
    return CheckResult::fail("spec needs " + std::to_string(expected) + " generators, got " +
                             std::to_string(gens.size()));
  if (gens.empty()) return CheckResult::pass();
  for (const auto& g : gens)
    if (g.degree() != gens.front().degree()) return CheckResult::fail("generator degrees differ");
  Presentation pres;
  try {
    collect(spec, 0, "$", pres);
  } catch (const Error& e) {
    return CheckResult::fail(e.what());
  }
  for (const auto& r : pres.relators) {
    if (!evaluate(r.word, gens).is_identity()) return CheckResult::fail("relation fails: " + r.label);
  }
  for (const auto& h : pres.homs) {
    auto r = check_hom(h, gens);
    if (!r.ok) return r;
  }
  return CheckResult::pass();
}

namespace {

void append_shifted(const Realization& part, std::size_t shift, std::size_t total, std::vector<Perm>& out) {
  for (const auto& g : part.generators) {
    std::vector<std::uint32_t> img(total);
    for (std::size_t x = 0; x < total; ++x) img[x] = static_cast<std::uint32_t>(x);
    for (std::size_t x = 0; x < part.degree; ++x) img[shift + x] = static_cast<std::uint32_t>(shift + g(x));
    out.emplace_back(std::move(img));
  }
}

Realization disjoint_union(const std::vector<Realization>& parts) {
  Realization r;
  for (const auto& p : parts) r.degree += p.degree;
  std::size_t shift = 0;
  for (const auto& p : parts) {
    append_shifted(p, shift, r.degree, r.generators);
    shift += p.degree;
  }
  return r;
}

}  // namespace

Realization realize(const GroupSpec& s) {
  Realization r;
  switch (s.kind) {
    case Kind::Cyclic: {
      r.degree = s.param;
      std::vector<std::uint32_t> img(s.param);
      for (std::size_t i = 0; i < s.param; ++i) img[i] = static_cast<std::uint32_t>((i + 1) % s.param);
      r.generators.emplace_back(std::move(img));
      return r;
    }
    case Kind::Dihedral: {
      // Left-regular action on r^i s^e, stored as i + e*k.
      std::size_t k = s.param;
      r.degree = 2 * k;
      std::vector<std::uint32_t> rot(2 * k), ref(2 * k);
      for (std::size_t e = 0; e < 2; ++e)
        for (std::size_t i = 0; i < k; ++i) {
          rot[i + e * k] = static_cast<std::uint32_t>((i + 1) % k + e * k);
          ref[i + e * k] = static_cast<std::uint32_t>((k - i) % k + (1 - e) * k);
        }
      r.generators.emplace_back(std::move(rot));
      r.generators.emplace_back(std::move(ref));
      return r;
    }
    case Kind::C2Power: {
      r.degree = std::max<std::size_t>(1, 2 * s.param);
      for (std::size_t i = 0; i < s.param; ++i)
        r.generators.push_back(Perm::transposition(r.degree, static_cast<std::uint32_t>(2 * i),
                                                   static_cast<std::uint32_t>(2 * i + 1)));
      return r;
    }
    case Kind::Agl1:
      r.degree = s.param;
      r.generators = agl_generators(s.param);
      return r;
    case Kind::Direct: {
      std::vector<Realization> parts;
      for (const auto& c : s.children) parts.push_back(realize(c));
      return disjoint_union(parts);
    }
    case Kind::Power: {
      Realization base = realize(s.children.at(0));
      return disjoint_union(std::vector<Realization>(s.param, base));
    }
    case Kind::Enumerated:
      r.degree = s.degree;
      r.generators = s.generators;
      return r;
    case Kind::Wreath: {
      Realization base = realize(s.children.at(0));
      std::uint64_t q = s.children.at(1).param;
      std::uint64_t g = smallest_primitive_root(q);
      std::size_t m = base.degree;
      r.degree = q * m;
      // Top generators move block j to block pi(j).
      for (auto slot_map : {std::function<std::size_t(std::size_t)>([&](std::size_t j) { return (j + 1) % q; }),
                            std::function<std::size_t(std::size_t)>([&](std::size_t j) { return (g * j) % q; })}) {
        std::vector<std::uint32_t> img(r.degree);
        for (std::size_t j = 0; j < q; ++j)
          for (std::size_t x = 0; x < m; ++x) img[j * m + x] = static_cast<std::uint32_t>(slot_map(j) * m + x);
        r.generators.emplace_back(std::move(img));
      }
      for (std::size_t j = 0; j < q; ++j) append_shifted(base, j * m, r.degree, r.generators);
      return r;
    }
  }
  return r;
}

}  // namespace subsol
