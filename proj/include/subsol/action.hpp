#pragma once

// Group actions on point sets given by generator permutations of the indices.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "subsol/geometry.hpp"
#include "subsol/groupspec.hpp"
#include "subsol/perm.hpp"

namespace subsol {

struct Action {
  PointSet set;
  std::vector<Perm> gens;
  GroupSpec spec;
  // gen_map[i] is the GroupSpec generator realized by gens[i]; empty means identity.
  std::vector<std::size_t> gen_map;
};

struct ActionViolation {
  std::size_t generator = 0;
  std::string detail;
};

struct ActionReport {
  std::vector<ActionViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Each generator must be a permutation of the point indices preserving all
// squared distances.
ActionReport check_action(const Action& a);

using Orbits = std::vector<std::vector<std::uint32_t>>;

// Components under the generators, each sorted, ordered by smallest member.
Orbits orbits(std::size_t n, std::span<const Perm> gens);
Orbits orbits(const Action& a);
bool is_transitive(const Action& a);

// group_order / |orbit(point)|. Throws NotDivisible, InvalidArgument.
BigInt stabilizer_order(const Action& a, std::uint32_t point, const BigInt& group_order);

}  // namespace subsol
