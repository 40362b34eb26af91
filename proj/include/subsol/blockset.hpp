#pragma once

// Signed-permutation sets with a regular soluble action, and embeddings of
// block patterns (all permutations of a multiset of four values) into them.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "subsol/certificate.hpp"
#include "subsol/geometry.hpp"
#include "subsol/scalar.hpp"

namespace subsol {

// All coordinate permutations of (+-alpha x (len-2), +-beta, +-gamma),
// deduplicated and sorted. Throws InvalidArgument for len < 2.
PointSet signed_pattern_points(const Rational& alpha, const Rational& beta, const Rational& gamma,
                               std::size_t len);

struct SignedPermSet {
  Rational alpha;
  Rational beta;
  Rational gamma;
  std::uint32_t p = 0;
  PointSet points;

  // (beta, gamma, alpha, ..., alpha)
  std::vector<Golden> base() const;
  // Some of |alpha|, |beta|, |gamma| coincide or vanish.
  bool degenerate() const;
};

// Throws NotPrime.
SignedPermSet signed_perm_set(const Rational& alpha, const Rational& beta, const Rational& gamma, std::uint32_t p);

// Position i of the image receives signs[i] * x[phi(i)], phi(a) = mul*a + add mod p.
struct SignedElement {
  std::uint32_t mul = 1;
  std::uint32_t add = 0;
  std::vector<int> signs;
};

std::vector<Golden> apply_signed(const SignedElement& e, std::span<const Golden> x);

// Element taking the base point to the given point. Throws BadTarget.
SignedElement signed_perm_witness(const SignedPermSet& s, std::span<const Golden> target);

// Translation, scaling, then one sign flip per position.
std::vector<Perm> signed_perm_generators(const SignedPermSet& s);

// Smallest prime strictly greater than n.
std::uint32_t smallest_prime_above(std::uint32_t n);

// Soluble set for the l-fold signed pattern; p defaults to the smallest prime
// above l + 2. Throws NotPrime or InvalidArgument for an inadmissible p.
Certificate signed_perm_certificate(const Rational& alpha, const Rational& beta, const Rational& gamma,
                                    std::uint32_t l, std::optional<std::uint32_t> p = std::nullopt);

struct BlockPattern {
  Rational alpha;
  Rational beta;
  Rational gamma;
  Rational delta;
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint32_t k = 0;
  std::uint32_t l = 0;
};

// Distinct permutations of (alpha x i, beta x j, gamma x k, delta x l), sorted.
PointSet block_pattern_points(const BlockPattern& b);

// X(i,j,1,1) translated into the signed set with parameters
// ((alpha-beta)/2, gamma-(alpha+beta)/2, delta-(alpha+beta)/2).
Certificate block_embed(const Rational& alpha, const Rational& beta, const Rational& gamma, const Rational& delta,
                        std::uint32_t i, std::uint32_t j, std::optional<std::uint32_t> p = std::nullopt);

// Copy of `from` inside `to` obtained by fixing the surplus entries first.
// Throws NotSubpattern.
EmbeddingMap subpattern_embed(const BlockPattern& from, const BlockPattern& to);

// Certificate for X(i,j,k,l) with k + l <= 2: directly for (1,1), by setting
// delta = gamma for (2,0) and (0,2), through a subpattern otherwise.
// Throws InvalidArgument outside that range.
Certificate block_family_certificate(const BlockPattern& b, std::optional<std::uint32_t> p = std::nullopt);

}  // namespace subsol
