#include "subsol/certificate.hpp"

#include "subsol/error.hpp"

namespace subsol {

std::string_view to_string(Transitivity::Mode m) {
  switch (m) {
    case Transitivity::Mode::OrbitChecked: return "orbit_checked";
    case Transitivity::Mode::WitnessSampled: return "witness_sampled";
    case Transitivity::Mode::WitnessFull: return "witness_full";
  }
  return "?";
}

Transitivity::Mode transitivity_mode_from_string(std::string_view s) {
  if (s == "orbit_checked") return Transitivity::Mode::OrbitChecked;
  if (s == "witness_sampled") return Transitivity::Mode::WitnessSampled;
  if (s == "witness_full") return Transitivity::Mode::WitnessFull;
  throw Error(ErrorCode::SchemaError, "unknown transitivity mode '" + std::string(s) + "'");
}

}  // namespace subsol
