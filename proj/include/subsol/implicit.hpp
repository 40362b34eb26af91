#pragma once

// Operations on implicitly described sets Y of q-tuples: membership, the
// amplified action, seeded uniform sampling and full materialization.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "subsol/certificate.hpp"

namespace subsol {

using Tuple = std::vector<std::uint32_t>;

std::vector<std::uint32_t> implicit_o2(const ImplicitY& y);
Tuple implicit_base_point(const ImplicitY& y);
// Entries in range and exactly r of them in o1.
bool implicit_member(const ImplicitY& y, std::span<const std::uint32_t> t);
// C(q, r) * |o1|^r * |o2|^(q-r).
BigInt implicit_size(const ImplicitY& y);

// Throws InvalidArgument on length or degree mismatch.
Tuple apply_amplified(const AmplifiedGenerator& g, std::span<const std::uint32_t> t);
// Slots index into elements.
Tuple apply_witness(const AmplifiedWitness& w, std::span<const Perm> elements, std::span<const std::uint32_t> t);

// Unbiased draw from [0, n) by rejection; platform independent.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

// n independent uniform points of Y from the given seed.
std::vector<Tuple> sample_implicit(const ImplicitY& y, std::uint64_t seed, std::uint64_t n);

// Every point of Y encoded as sum t_i * |base|^i, sorted. Throws TooLarge
// when |Y| exceeds cap or the code does not fit 64 bits.
std::vector<std::uint64_t> materialize_implicit(const ImplicitY& y, std::uint64_t cap);
std::uint64_t encode_tuple(const ImplicitY& y, std::span<const std::uint32_t> t);
Tuple decode_tuple(const ImplicitY& y, std::uint64_t code);

}  // namespace subsol
