#pragma once

// Two-orbit amplification: from X with a transitive group H and a soluble
// subgroup G with two orbits, build Y inside X^q (tuples with exactly r
// entries in the first orbit) carrying a transitive action of G^q extended
// by AGL(1,q), and a copy of X scaled by sqrt(|H|/|G|) inside Y.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "subsol/catalog.hpp"
#include "subsol/certificate.hpp"
#include "subsol/implicit.hpp"

namespace subsol {

// r = |H||O1| / (|G||X|) after validating the input's structure. Throws
// RatioOutOfRange, NotSubgroup, InvalidArgument.
std::uint32_t two_orbit_ratio(const TwoOrbitInput& in);

struct PaddingReport {
  bool ok = true;
  std::uint32_t r = 0;
  std::vector<std::uint32_t> counts;  // entries of v(x) in O1, per x
  std::optional<std::uint32_t> witness;
  std::string detail;
};

// Checks that every v(x) has exactly r entries in O1. Reports instead of throwing.
PaddingReport coset_rep_padding_check(const TwoOrbitInput& in, std::uint32_t q);

class Amplifier {
 public:
  // Throws RatioOutOfRange, NotPrime, QTooSmall and the errors of two_orbit_ratio.
  Amplifier(const TwoOrbitInput& in, std::uint32_t q);

  std::uint32_t q() const { return y_.q; }
  std::uint32_t r() const { return y_.r; }
  std::uint32_t s() const { return static_cast<std::uint32_t>(reps_.size()); }
  const ImplicitY& implicit_y() const { return y_; }
  const std::vector<Perm>& coset_reps() const { return reps_; }
  const std::vector<Perm>& g_elements() const { return g_elements_; }

  // v(x) = (f_1(x), ..., f_s(x), z, ..., z)
  Tuple copy_of(std::uint32_t x) const;
  // Translation, scaling, then each G generator in each slot.
  std::vector<AmplifiedGenerator> generators() const;
  // Element taking the base point to target. Throws BadTarget.
  AmplifiedWitness witness(std::span<const std::uint32_t> target) const;
  AmplifiedGenerator expand(const AmplifiedWitness& w) const;

 private:
  TwoOrbitInput in_;
  ImplicitY y_;
  std::vector<Perm> reps_;
  std::vector<Perm> g_elements_;
  std::vector<std::uint32_t> from_y_;  // first element index sending y to each point of O1
  std::vector<std::uint32_t> from_z_;  // first element index sending z to each point of O2
};

AmplifiedGenerator amplify_witness(const TwoOrbitInput& in, std::uint32_t q, std::span<const std::uint32_t> target);

struct AmplifyOptions {
  enum class Mode { Sample, Full };
  Mode mode = Mode::Sample;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
  std::uint64_t cap = 2'000'000;
};

// Full mode materializes Y, checks every witness and generator image, and
// records WitnessFull; sample mode stores seeded witnesses.
Certificate two_orbit_amplify(const TwoOrbitInput& in, std::uint32_t q, const AmplifyOptions& opts = {});

}  // namespace subsol
