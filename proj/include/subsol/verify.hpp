#pragma once

// Independent re-check of a certificate. Uses only point sets, permutations,
// the group-description checker, actions and implicit-set helpers; never a
// construction.

#include <array>
#include <cstdint>
#include <string>

#include "subsol/certificate.hpp"

namespace subsol {

struct ClauseReport {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct VerifyReport {
  // solubility, action, transitivity, embedding
  std::array<ClauseReport, 4> clauses;

  bool ok() const;
  std::string summary() const;
};

struct VerifyOptions {
  // Exhaustive sweep of an implicit set regardless of its declared mode.
  bool escalate_full = false;
  std::uint64_t full_cap = 5'000'000;
  std::uint64_t closure_samples = 2'000;
};

VerifyReport verify_certificate(const Certificate& c, const VerifyOptions& opts = {});

}  // namespace subsol
