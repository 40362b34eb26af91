#pragma once

#include <cmath>
#include <random>
#include <set>

#include "subsol/certificate.hpp"
#include "subsol/error.hpp"
#include "subsol/groupspec.hpp"

namespace subsol::testing {

inline void collect_leaves(SolubilityProof& p, std::vector<SolubilityProof*>& out) {
  if (p.children.empty()) out.push_back(&p);
  for (auto& c : p.children) collect_leaves(c, out);
}

enum class Target { Generator, Embedding, Leaf };

// One random change to a generator image, an embedding entry or a proof leaf.
inline Certificate mutate(Certificate c, Target what, std::mt19937_64& rng) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto swap_two = [&](const Perm& p) {
    auto img = p.images();
    std::size_t a = pick(img.size()), b = pick(img.size() - 1);
    if (b >= a) ++b;
    std::swap(img[a], img[b]);
    return Perm(img);
  };
  switch (what) {
    case Target::Generator:
      if (c.y_implicit) {
        auto& g = c.amplified_generators[pick(c.amplified_generators.size())];
        auto& s = g.slots[pick(g.slots.size())];
        s = swap_two(s);
      } else {
        auto& g = c.generators[pick(c.generators.size())];
        g = swap_two(g);
      }
      break;
    case Target::Embedding:
      if (c.y_implicit) {
        auto& t = c.tuples[pick(c.tuples.size())];
        auto& e = t[pick(t.size())];
        e = static_cast<std::uint32_t>((e + 1 + pick(c.y_implicit->base.size() - 1)) % c.y_implicit->base.size());
      } else {
        auto& e = c.embedding.map[pick(c.embedding.map.size())];
        e = static_cast<std::uint32_t>((e + 1 + pick(c.y->size() - 1)) % c.y->size());
      }
      break;
    case Target::Leaf: {
      std::vector<SolubilityProof*> leaves;
      collect_leaves(c.solubility, leaves);
      auto* leaf = leaves[pick(leaves.size())];
      using N = SolubilityProof::Node;
      if (leaf->node == N::EnumeratedLeaf) {
        leaf->derived_orders[pick(leaf->derived_orders.size())] += 1 + pick(5);
      } else if (pick(2) == 0) {
        leaf->param += 1 + pick(5);
      } else {
        std::vector<N> others;
        for (N n : {N::CyclicLeaf, N::DihedralLeaf, N::C2PowerLeaf, N::Agl1Leaf})
          if (n != leaf->node) others.push_back(n);
        leaf->node = others[pick(others.size())];
      }
      break;
    }
  }
  return c;
}

// True when an accepted mutant is still a correct certificate: the only
// change is an amplified slot that remains an isometry of the base set and an
// element of the base group. Closure is recomputed here by breadth-first search.
inline bool equivalent_slot_mutant(const Certificate& original, const Certificate& mutant) {
  if (!original.y_implicit || original.spec.children.empty()) return false;
  const auto& base = original.y_implicit->base;
  const GroupSpec& e = original.spec.children[0];
  using Images = std::vector<std::uint32_t>;
  std::set<Images> group{Perm::identity(e.degree).images()};
  std::vector<Images> frontier(group.begin(), group.end());
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& x : frontier)
      for (const auto& g : e.generators) {
        Images y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = g(x[i]);
        if (group.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  if (original.amplified_generators.size() != mutant.amplified_generators.size()) return false;
  int changed = 0;
  for (std::size_t g = 0; g < original.amplified_generators.size(); ++g) {
    const auto& a = original.amplified_generators[g];
    const auto& b = mutant.amplified_generators[g];
    if (a.mul != b.mul || a.add != b.add || a.slots.size() != b.slots.size()) return false;
    for (std::size_t s = 0; s < a.slots.size(); ++s) {
      if (a.slots[s] == b.slots[s]) continue;
      ++changed;
      const Perm& p = b.slots[s];
      if (!group.count(p.images())) return false;
      for (std::uint32_t i = 0; i < base.size(); ++i)
        for (std::uint32_t j = 0; j < base.size(); ++j)
          if (!base.sqdist(i, j).equals(base.sqdist(p(i), p(j)))) return false;
    }
  }
  return changed == 1;
}

// Brute-force validity of an explicit certificate: canonical proof, spec
// relations, one orbit by breadth-first search, the embedding checked pair by
// pair, and every generator preserving every distance class.
inline bool oracle_valid_explicit(const Certificate& c) {
  if (!c.y) return false;
  const PointSet& y = *c.y;
  try {
    if (!(prove_soluble(c.spec) == c.solubility)) return false;
  } catch (const Error&) {
    return false;
  }
  if (!check_realization(c.spec, c.generators).ok) return false;
  auto same = [](const Scalar& a, const Scalar& b) {
    if (a.exact()) return a.golden_value() == b.golden_value();
    double x = a.to_double(), z = b.to_double();
    return std::abs(x - z) <= 1e-9 * std::max(1.0, std::max(std::abs(x), std::abs(z)));
  };
  for (const auto& g : c.generators)
    if (g.degree() != y.size()) return false;
  std::vector<bool> seen(y.size(), false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (const auto& g : c.generators)
      if (!seen[g(v)]) {
        seen[g(v)] = true;
        ++reached;
        stack.push_back(g(v));
      }
  }
  if (reached != y.size()) return false;
  const auto& m = c.embedding.map;
  if (m.size() != c.x.size()) return false;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m[i] == m[j] || m[i] >= y.size() || m[j] >= y.size()) return false;
      if (!same(y.sqdist(m[i], m[j]), c.embedding.scale_sq * c.x.sqdist(i, j))) return false;
    }
  const auto& classes = y.distance_classes();
  for (const auto& g : c.generators)
    for (std::uint32_t i = 0; i < y.size(); ++i)
      for (std::uint32_t j = i + 1; j < y.size(); ++j)
        if (classes.at(i, j) != classes.at(g(i), g(j))) return false;
  return true;
}

// Whether a mutant is still a correct certificate by the oracles above.
inline bool mutant_still_correct(const Certificate& original, const Certificate& mutant) {
  return mutant.y_implicit ? equivalent_slot_mutant(original, mutant) : oracle_valid_explicit(mutant);
}

}  // namespace subsol::testing
