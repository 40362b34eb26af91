#include <algorithm>
#include <set>

#include "doctest.h"
#include "subsol/action.hpp"
#include "subsol/amplify.hpp"
#include "subsol/error.hpp"

using namespace subsol;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

// Image of t under (phi; g) computed position by position from the definition.
Tuple oracle_apply(const AmplifiedGenerator& g, const Tuple& t) {
  std::size_t q = t.size();
  Tuple out(q);
  for (std::size_t i = 0; i < q; ++i) {
    std::size_t j = 0;
    while (j != (g.mul * i + g.add) % q) ++j;
    out[i] = g.slots[i].images()[t[j]];
  }
  return out;
}

Golden tuple_sqdist(const PointSet& x, const Tuple& a, const Tuple& b) {
  Golden d(0);
  for (std::size_t i = 0; i < a.size(); ++i) d = d + x.golden_sqdist(a[i], b[i]);
  return d;
}

// H = G = rotations of a square acting on its vertices.
TwoOrbitInput toy_input() {
  std::vector<std::vector<Golden>> pts{{Golden(1), Golden(0)}, {Golden(0), Golden(1)},
                                       {Golden(-1), Golden(0)}, {Golden(0), Golden(-1)}};
  auto x = PointSet::exact(ScalarKind::Rational, 2, pts);
  std::vector<Perm> gens{Perm({1, 2, 3, 0})};
  auto c4 = enumerate_group(4, gens);
  TwoOrbitInput in{"toy", x, c4, c4, {0, 1, 2, 3}, {}};
  return in;
}

}  // namespace

TEST_CASE("dodecahedron amplification sizes") {
  auto in = dodecahedron_input();
  CHECK(two_orbit_ratio(in) == 2);
  Amplifier a(in, 5);
  CHECK(a.s() == 5);
  CHECK(a.r() == 2);
  CHECK(implicit_size(a.implicit_y()) == 1105920);
  auto c = two_orbit_amplify(in, 5, {AmplifyOptions::Mode::Sample, 100, 1});
  CHECK(spec_order(c.spec) == BigInt("159252480"));
  CHECK(check_proof(c.spec, c.solubility).ok);
  CHECK(c.transitivity.witnesses.size() == 100);
  CHECK(c.embedding.scale_sq.str() == "5/1");
}

TEST_CASE("coset padding counts") {
  auto dod = coset_rep_padding_check(dodecahedron_input(), 5);
  CHECK(dod.ok);
  CHECK(dod.counts.size() == 20);
  CHECK(std::all_of(dod.counts.begin(), dod.counts.end(), [](auto c) { return c == 2; }));
  auto big = coset_rep_padding_check(dodecahedron_input(), 11);
  CHECK(big.ok);

  auto oct = octahedron_input();
  auto rep = coset_rep_padding_check(oct, 3);
  CHECK(rep.ok);
  CHECK(rep.r == 1);
  CHECK(std::all_of(rep.counts.begin(), rep.counts.end(), [](auto c) { return c == 1; }));
  Amplifier a(oct, 3);
  CHECK(implicit_size(a.implicit_y()) == 96);
}

TEST_CASE("corrupted first orbit is reported with a witness") {
  auto in = dodecahedron_input();
  std::swap(in.o1.back(), in.o2.front());
  auto rep = coset_rep_padding_check(in, 5);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.counts[*rep.witness] != 2);
  CHECK(code_of([&] { two_orbit_ratio(in); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("input validation") {
  CHECK(code_of([] { two_orbit_ratio(toy_input()); }) == ErrorCode::RatioOutOfRange);
  auto in = dodecahedron_input();
  CHECK(code_of([&] { Amplifier(in, 6); }) == ErrorCode::NotPrime);
  CHECK(code_of([&] { Amplifier(in, 3); }) == ErrorCode::QTooSmall);
  auto swapped = in;
  std::swap(swapped.g, swapped.h);
  CHECK(code_of([&] { two_orbit_ratio(swapped); }) == ErrorCode::NotSubgroup);
}

TEST_CASE("witnesses for the base point and a chosen target") {
  auto in = dodecahedron_input();
  Amplifier a(in, 5);
  auto base = implicit_base_point(a.implicit_y());
  auto w = a.witness(base);
  CHECK(w.mul == 1);
  CHECK(w.add == 0);
  for (auto k : w.slots) CHECK(a.g_elements()[k].is_identity());

  const auto& y = a.implicit_y();
  auto o2 = implicit_o2(y);
  Tuple t{o2[3], y.o1[5], o2[7], y.o1[2], o2[0]};
  REQUIRE(implicit_member(y, t));
  auto g = a.expand(a.witness(t));
  CHECK(oracle_apply(g, base) == t);
  CHECK(apply_amplified(g, base) == t);
  CHECK(code_of([&] { a.witness(Tuple{0, 1, 2, 3, 4}); }) == ErrorCode::BadTarget);
}

TEST_CASE("sampled witnesses reach their targets") {
  auto in = dodecahedron_input();
  Amplifier a(in, 5);
  auto base = implicit_base_point(a.implicit_y());
  auto targets = sample_implicit(a.implicit_y(), 42, 10000);
  std::size_t hits = 0;
  for (const auto& t : targets) hits += oracle_apply(a.expand(a.witness(t)), base) == t;
  CHECK(hits == 10000);
  CHECK(sample_implicit(a.implicit_y(), 42, 5) == std::vector<Tuple>(targets.begin(), targets.begin() + 5));
}

TEST_CASE("generators are isometries of Y") {
  auto in = dodecahedron_input();
  Amplifier a(in, 5);
  auto gens = a.generators();
  CHECK(gens.size() == 2 + 5 * in.g.generators().size());
  auto pts = sample_implicit(a.implicit_y(), 7, 50);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto gi = oracle_apply(g, pts[i]);
      CHECK(implicit_member(a.implicit_y(), gi));
      auto j = (i + 1) % pts.size();
      CHECK(tuple_sqdist(in.x, gi, oracle_apply(g, pts[j])) == tuple_sqdist(in.x, pts[i], pts[j]));
    }
}

TEST_CASE("scaled distances are exact") {
  auto in = dodecahedron_input();
  Amplifier a(in, 7);
  for (std::uint32_t i = 0; i < in.x.size(); ++i)
    for (std::uint32_t j = 0; j < in.x.size(); ++j)
      CHECK(tuple_sqdist(in.x, a.copy_of(i), a.copy_of(j)) == Golden(5) * in.x.golden_sqdist(i, j));
  std::set<Tuple> distinct;
  for (std::uint32_t i = 0; i < in.x.size(); ++i) distinct.insert(a.copy_of(i));
  CHECK(distinct.size() == 20);
}

TEST_CASE("full mode on the octahedron") {
  auto in = octahedron_input();
  for (std::uint32_t q : {3u, 5u, 7u}) {
    auto c = two_orbit_amplify(in, q, {AmplifyOptions::Mode::Full});
    CHECK(c.transitivity.mode == Transitivity::Mode::WitnessFull);
    CHECK(c.transitivity.samples == implicit_size(*c.y_implicit).get_ui());
    CHECK(c.tuples.size() == 6);
  }
  auto c = two_orbit_amplify(in, 3, {AmplifyOptions::Mode::Full});
  CHECK(std::any_of(c.notes.begin(), c.notes.end(), [](const std::string& n) { return n.find("equals") != std::string::npos; }));
}

TEST_CASE("full mode refuses oversized sets") {
  AmplifyOptions opts{AmplifyOptions::Mode::Full, 0, 0, 1000};
  CHECK(code_of([&] { two_orbit_amplify(dodecahedron_input(), 5, opts); }) == ErrorCode::TooLarge);
}
