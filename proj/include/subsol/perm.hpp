#pragma once

// Permutations of {0..n-1}, breadth-first group enumeration and the derived
// series used as the generic solubility oracle.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace subsol {

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

class Perm {
 public:
  Perm() = default;
  // Throws InvalidArgument unless images is a bijection of {0..n-1}.
  explicit Perm(std::vector<std::uint32_t> images);

  static Perm identity(std::size_t n);
  static Perm transposition(std::size_t n, std::uint32_t a, std::uint32_t b);
  // Cycle notation helper: each inner list is one cycle.
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm pow(std::int64_t e) const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }
  friend Perm compose(const Perm& p, const Perm& q);

 private:
  std::vector<std::uint32_t> images_;
};

// (p o q)(i) = p(q(i)). Throws DegreeMismatch.
Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }
// g^-1 h^-1 g h
Perm commutator(const Perm& g, const Perm& h);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  bool enumerated() const { return elements_.has_value(); }
  // Sorted lexicographically on image arrays; identity first.
  const std::vector<Perm>& elements() const;
  std::optional<std::uint64_t> order() const;
  bool is_trivial() const { return order() == 1u; }

  bool contains(const Perm& p) const;
  // Position of p in elements(); throws NotFound.
  std::size_t index_of(const Perm& p) const;

  // Wraps a complete element list (closed under composition); generators are
  // recomputed greedily and closure is re-checked. Throws InvalidArgument.
  static PermGroup from_elements(std::size_t degree, std::vector<Perm> elements);

  friend PermGroup enumerate_group(std::size_t degree, std::span<const Perm> gens, std::size_t cap);

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::optional<std::vector<Perm>> elements_;
};

// Breadth-first closure under composition. Throws CapExceeded past cap elements.
PermGroup enumerate_group(std::size_t degree, std::span<const Perm> gens,
                          std::size_t cap = kDefaultGroupCap);

struct DerivedSeries {
  std::vector<PermGroup> series;
  bool soluble = false;

  std::vector<std::uint64_t> orders() const;
};

// [G,G] as the normal closure of commutators of generators; G must be enumerated.
PermGroup commutator_subgroup(const PermGroup& g, std::size_t cap = kDefaultGroupCap);
DerivedSeries derived_series(const PermGroup& g, std::size_t cap = kDefaultGroupCap);

PermGroup setwise_stabilizer(const PermGroup& h, std::span<const std::uint32_t> points);
// One representative per right coset G*f of G in H, identity first. Throws NotSubgroup.
std::vector<Perm> coset_representatives(const PermGroup& h, const PermGroup& g);
// Greedy generating set over the sorted element list.
std::vector<Perm> small_generating_set(const PermGroup& g);

}  // namespace subsol
