#include "subsol/action.hpp"

#include <algorithm>
#include <numeric>

#include "subsol/error.hpp"

namespace subsol {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Keeps the smaller root so every root is the least member of its class.
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

ActionReport check_action(const Action& a) {
  ActionReport report;
  std::size_t n = a.set.size();
  if (!a.gen_map.empty() && a.gen_map.size() != a.gens.size())
    report.violations.push_back({0, "gen_map length differs from generator count"});
  std::vector<std::uint32_t> anchors;
  constexpr std::size_t kAllPairs = 400;
  if (n > kAllPairs) anchors = affine_anchors(a.set);
  for (std::size_t g = 0; g < a.gens.size(); ++g) {
    if (a.gens[g].degree() != n) {
      report.violations.push_back({g, "degree " + std::to_string(a.gens[g].degree()) + " on " +
                                          std::to_string(n) + " points"});
      continue;
    }
    auto res = check_isometry(a.set, a.gens[g], anchors);
    if (!res.ok) report.violations.push_back({g, res.detail});
  }
  return report;
}

Orbits orbits(std::size_t n, std::span<const Perm> gens) {
  UnionFind uf(n);
  for (const auto& g : gens) {
    if (g.degree() != n) throw Error(ErrorCode::DegreeMismatch, "generator degree differs from point count");
    for (std::uint32_t i = 0; i < n; ++i) uf.unite(i, g(i));
  }
  Orbits out;
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t r = uf.find(i);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

Orbits orbits(const Action& a) { return orbits(a.set.size(), a.gens); }

bool is_transitive(const Action& a) { return orbits(a).size() == 1; }

BigInt stabilizer_order(const Action& a, std::uint32_t point, const BigInt& group_order) {
  if (point >= a.set.size()) throw Error(ErrorCode::InvalidArgument, "point index out of range");
  for (const auto& orb : orbits(a)) {
    if (std::find(orb.begin(), orb.end(), point) == orb.end()) continue;
    BigInt size(static_cast<unsigned long>(orb.size()));
    if (group_order % size != 0)
      throw Error(ErrorCode::NotDivisible,
                  "orbit of size " + size.get_str() + " does not divide group order " + group_order.get_str());
    return group_order / size;
  }
  throw Error(ErrorCode::InvalidArgument, "point not found in any orbit");
}

}  // namespace subsol
