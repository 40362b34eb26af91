#pragma once

// Compositional group descriptions. Solubility of a spec follows from a proof
// tree whose leaves are abelian, dihedral or affine groups (soluble by
// structure) or explicitly enumerated groups (soluble by derived series).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "subsol/perm.hpp"
#include "subsol/scalar.hpp"

namespace subsol {

bool is_prime(std::uint64_t n);
// Smallest generator of the multiplicative group mod p. Throws NotPrime.
std::uint64_t smallest_primitive_root(std::uint64_t p);

struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, C2Power, Agl1, Direct, Power, Enumerated, Wreath };

  Kind kind = Kind::Cyclic;
  // Cyclic: n. Dihedral: k (order 2k). C2Power: d. Agl1: p. Power: exponent.
  std::uint64_t param = 1;
  // Direct: factors. Power: {base}. Wreath: {base, top}.
  std::vector<GroupSpec> children;
  // Enumerated only.
  std::size_t degree = 0;
  std::uint64_t order = 0;
  std::vector<Perm> generators;

  static GroupSpec cyclic(std::uint64_t n);
  static GroupSpec dihedral(std::uint64_t k);
  static GroupSpec c2_power(std::uint64_t d);
  static GroupSpec agl1(std::uint64_t p);
  static GroupSpec direct(std::vector<GroupSpec> factors);
  static GroupSpec power(GroupSpec base, std::uint64_t exp);
  static GroupSpec enumerated(const PermGroup& g);
  // base^q extended by AGL(1,q) permuting the q copies; top must be Agl1(q).
  static GroupSpec wreath(GroupSpec base, GroupSpec top);

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

std::string_view to_string(GroupSpec::Kind kind);

struct SolubilityProof {
  enum class Node {
    CyclicLeaf,
    DihedralLeaf,
    C2PowerLeaf,
    Agl1Leaf,
    EnumeratedLeaf,
    Product,
    Power,
    Extension,
  };

  Node node = Node::CyclicLeaf;
  std::uint64_t param = 0;
  std::vector<std::uint64_t> derived_orders;  // EnumeratedLeaf only
  std::vector<SolubilityProof> children;

  friend bool operator==(const SolubilityProof&, const SolubilityProof&) = default;
};

std::string_view to_string(SolubilityProof::Node node);

// Throws NotSoluble naming the offending subtree, NotPrime for a bad AGL leaf.
SolubilityProof prove_soluble(const GroupSpec& spec);

struct CheckResult {
  bool ok = true;
  std::string detail;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

// Re-checks a proof against its spec, re-running derived series on enumerated leaves.
CheckResult check_proof(const GroupSpec& spec, const SolubilityProof& proof);

BigInt spec_order(const GroupSpec& spec);

// Translation a -> a+1 and scaling a -> g*a (smallest primitive root g).
std::vector<Perm> agl_generators(std::uint64_t p);

// Number of generators a realization of spec must supply, in canonical order:
// Cyclic 1; Dihedral (rotation, reflection); C2Power d; Agl1 (translation,
// scaling); Direct and Power concatenate; Enumerated its own list; Wreath the
// two top generators followed by the base generators of copy 0, 1, ...
std::size_t spec_generator_count(const GroupSpec& spec);

// Checks that gens satisfy the defining relations of spec, so that the group
// they generate is a quotient of the group spec describes.
CheckResult check_realization(const GroupSpec& spec, std::span<const Perm> gens);

struct Realization {
  std::size_t degree = 0;
  std::vector<Perm> generators;
};

// Faithful permutation representation of spec in canonical generator order.
Realization realize(const GroupSpec& spec);

}  // namespace subsol
