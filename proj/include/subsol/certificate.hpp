#pragma once

// Witness that a point set X embeds (up to scale) into a set Y carrying a
// transitive action of a soluble group.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subsol/geometry.hpp"
#include "subsol/groupspec.hpp"
#include "subsol/perm.hpp"

namespace subsol {

// Y = all q-tuples of base indices with exactly r entries in o1. The base
// point has y in positions 0..r-1 and z elsewhere.
struct ImplicitY {
  PointSet base;
  std::uint32_t q = 0;
  std::uint32_t r = 0;
  std::vector<std::uint32_t> o1;
  std::uint32_t y = 0;
  std::uint32_t z = 0;

  friend bool operator==(const ImplicitY&, const ImplicitY&) = default;
};

// Element (phi; g_0..g_{q-1}) with phi(a) = mul*a + add mod q. Position i of
// the image receives slots[i] applied to entry phi(i).
struct AmplifiedGenerator {
  std::uint32_t mul = 1;
  std::uint32_t add = 0;
  std::vector<Perm> slots;

  friend bool operator==(const AmplifiedGenerator&, const AmplifiedGenerator&) = default;
};

// As AmplifiedGenerator, with slots given as indices into the sorted
// element list of the base group.
struct AmplifiedWitness {
  std::uint32_t mul = 1;
  std::uint32_t add = 0;
  std::vector<std::uint32_t> slots;

  friend bool operator==(const AmplifiedWitness&, const AmplifiedWitness&) = default;
};

struct Transitivity {
  enum class Mode { OrbitChecked, WitnessSampled, WitnessFull };

  Mode mode = Mode::OrbitChecked;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::vector<AmplifiedWitness> witnesses;

  friend bool operator==(const Transitivity&, const Transitivity&) = default;
};

std::string_view to_string(Transitivity::Mode m);
Transitivity::Mode transitivity_mode_from_string(std::string_view s);

struct Certificate {
  static constexpr int kVersion = 1;

  int version = kVersion;
  std::string name;
  PointSet x;
  std::optional<PointSet> y;
  std::optional<ImplicitY> y_implicit;
  // Explicit Y: embedding.map indexes Y. Implicit Y: tuples[i] is the image of x_i.
  EmbeddingMap embedding;
  std::vector<std::vector<std::uint32_t>> tuples;
  std::vector<Perm> generators;
  std::vector<AmplifiedGenerator> amplified_generators;
  GroupSpec spec;
  SolubilityProof solubility;
  Transitivity transitivity;
  std::vector<std::string> notes;
  std::map<std::string, double> residuals;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

}  // namespace subsol
