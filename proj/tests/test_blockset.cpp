#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "subsol/action.hpp"
#include "subsol/blockset.hpp"
#include "subsol/error.hpp"

using namespace subsol;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

// Independent application: entry i of the image is sign_i * x[(mul*i + add) mod p].
std::vector<Golden> apply_oracle(const SignedElement& e, std::span<const Golden> x) {
  std::vector<Golden> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Golden& v = x[(e.mul * i + e.add) % x.size()];
    out.push_back(e.signs[i] > 0 ? v : -v);
  }
  return out;
}

void check_certificate(const Certificate& c) {
  INFO(c.name);
  REQUIRE(c.y.has_value());
  Action a{*c.y, c.generators, c.spec, {}};
  CHECK(check_action(a).ok());
  CHECK(is_transitive(a));
  CHECK(check_proof(c.spec, c.solubility).ok);
  CHECK(check_realization(c.spec, c.generators).ok);
  CHECK(check_embedding(c.x, *c.y, c.embedding).ok);
  CHECK(c.embedding.scale_sq.str() == "1/1");
}

BlockPattern pattern(std::uint32_t i, std::uint32_t j, std::uint32_t k, std::uint32_t l) {
  return {R(3), R(1), R(4), R(6), i, j, k, l};
}

}  // namespace

TEST_CASE("signed permutation set for l = 1") {
  auto c = signed_perm_certificate(R(1), R(2), R(3), 1);
  CHECK(c.y->size() == 640);
  CHECK(c.y->dim() == 5);
  CHECK(c.x.size() == 48);
  CHECK(spec_order(c.spec) == 640);
  check_certificate(c);
  Action a{*c.y, c.generators, c.spec, {}};
  for (std::uint32_t i = 0; i < c.y->size(); ++i) CHECK(stabilizer_order(a, i, spec_order(c.spec)) == 1);
}

TEST_CASE("signed permutation set for l = 0") {
  auto c = signed_perm_certificate(R(1), R(2), R(3), 0);
  CHECK(c.y->size() == 48);
  check_certificate(c);
}

TEST_CASE("constructive witnesses reach every point") {
  auto s = signed_perm_set(R(1), R(2), R(3), 5);
  auto base = s.base();
  REQUIRE(s.points.index_of(std::span<const Golden>(base)).has_value());
  std::size_t hits = 0;
  for (std::uint32_t i = 0; i < s.points.size(); ++i) {
    auto target = s.points.golden_point(i);
    auto w = signed_perm_witness(s, target);
    auto img = apply_oracle(w, base);
    hits += std::equal(img.begin(), img.end(), target.begin());
    CHECK(apply_signed(w, base) == img);
  }
  CHECK(hits == 640);
  auto id = signed_perm_witness(s, base);
  CHECK(id.mul == 1);
  CHECK(id.add == 0);
  CHECK(std::all_of(id.signs.begin(), id.signs.end(), [](int v) { return v == 1; }));
}

TEST_CASE("witness rejects points outside the set") {
  auto s = signed_perm_set(R(1), R(2), R(3), 5);
  std::vector<Golden> bad(5, Golden(7));
  CHECK_THROWS_AS(signed_perm_witness(s, bad), Error);
}

TEST_CASE("prime override and validation") {
  auto c = signed_perm_certificate(R(1), R(2), R(3), 1, 7);
  CHECK(c.y->size() == 7 * 6 * 128);
  CHECK(check_embedding(c.x, *c.y, c.embedding).ok);
  try {
    signed_perm_certificate(R(1), R(2), R(3), 1, 9);
    FAIL("expected NotPrime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrime);
  }
  CHECK_THROWS_AS(signed_perm_certificate(R(1), R(2), R(3), 1, 3), Error);
  CHECK(smallest_prime_above(3) == 5);
  CHECK(smallest_prime_above(5) == 7);
}

TEST_CASE("colliding parameters collapse the set but keep a valid action") {
  auto c = signed_perm_certificate(R(1), R(1), R(2), 1);
  CHECK(c.y->size() < 640);
  check_certificate(c);
  CHECK(std::any_of(c.notes.begin(), c.notes.end(),
                    [](const std::string& n) { return n.find("collapses") != std::string::npos; }));
  auto z = signed_perm_certificate(R(0), R(1), R(2), 0);
  check_certificate(z);
}

TEST_CASE("block embedding of permutations of (3,1,4,6)") {
  auto c = block_embed(R(3), R(1), R(4), R(6), 1, 1);
  CHECK(c.x.size() == 24);
  check_certificate(c);
  // The image distance matrix equals the pattern's, entry by entry.
  for (std::size_t a = 0; a < c.x.size(); ++a)
    for (std::size_t b = 0; b < c.x.size(); ++b)
      CHECK(c.y->golden_sqdist(c.embedding.map[a], c.embedding.map[b]) == c.x.golden_sqdist(a, b));
  // An unconstrained search also finds a copy.
  auto found = find_subisometry(c.x, *c.y, Scalar::rational(1));
  CHECK(check_embedding(c.x, *c.y, found).ok);
}

TEST_CASE("block embedding edge cases") {
  auto two = block_embed(R(3), R(1), R(4), R(6), 0, 0);
  CHECK(two.x.size() == 2);
  check_certificate(two);
  auto rep = block_embed(R(3), R(1), R(4), R(4), 1, 1);
  CHECK(rep.x.size() == 12);
  check_certificate(rep);
}

TEST_CASE("subpattern embeddings") {
  auto e = subpattern_embed(pattern(1, 1, 0, 0), pattern(1, 1, 1, 1));
  CHECK(e.map.size() == 2);
  CHECK(check_embedding(block_pattern_points(pattern(1, 1, 0, 0)), block_pattern_points(pattern(1, 1, 1, 1)), e).ok);

  auto id = subpattern_embed(pattern(2, 1, 1, 0), pattern(2, 1, 1, 0));
  std::vector<std::uint32_t> iota(id.map.size());
  std::iota(iota.begin(), iota.end(), 0u);
  CHECK(id.map == iota);

  auto big = subpattern_embed(pattern(2, 1, 1, 0), pattern(2, 2, 1, 1));
  CHECK(check_embedding(block_pattern_points(pattern(2, 1, 1, 0)), block_pattern_points(pattern(2, 2, 1, 1)), big).ok);

  try {
    subpattern_embed(pattern(2, 2, 1, 1), pattern(1, 1, 1, 1));
    FAIL("expected NotSubpattern");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotSubpattern);
  }
}

TEST_CASE("all four pattern families certify for small multiplicities") {
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> families{{0, 0}, {1, 0}, {2, 0}, {1, 1}};
  for (std::uint32_t i = 0; i <= 2; ++i)
    for (std::uint32_t j = 0; j <= 2; ++j)
      for (auto [k, l] : families) {
        auto b = pattern(i, j, k, l);
        auto c = block_family_certificate(b);
        CHECK(c.x == block_pattern_points(b));
        check_certificate(c);
      }
  CHECK_THROWS_AS(block_family_certificate(pattern(1, 1, 2, 1)), Error);
}
