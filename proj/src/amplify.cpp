#include "subsol/amplify.hpp"

#include <algorithm>

#include "subsol/error.hpp"

namespace subsol {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

bool is_partition(std::size_t n, std::vector<std::uint32_t> a, std::vector<std::uint32_t> b) {
  std::vector<std::uint32_t> all = std::move(a);
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  if (all.size() != n) return false;
  for (std::uint32_t i = 0; i < n; ++i)
    if (all[i] != i) return false;
  return true;
}

std::uint32_t count_in(const std::vector<std::uint32_t>& sorted, std::span<const std::uint32_t> t) {
  std::uint32_t c = 0;
  for (auto v : t) c += std::binary_search(sorted.begin(), sorted.end(), v);
  return c;
}

// v(x) for every x, padded with z to length q.
std::vector<Tuple> copies(const std::vector<Perm>& reps, std::size_t n, std::uint32_t q, std::uint32_t z) {
  std::vector<Tuple> out;
  for (std::uint32_t x = 0; x < n; ++x) {
    Tuple t(q, z);
    for (std::size_t i = 0; i < reps.size() && i < q; ++i) t[i] = reps[i](x);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::uint32_t> sorted_copy(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::uint32_t two_orbit_ratio(const TwoOrbitInput& in) {
  std::size_t n = in.x.size();
  if (in.o1.empty() || in.o2.empty())
    throw Error(ErrorCode::RatioOutOfRange, "amplification needs two nonempty orbits");
  if (!is_partition(n, in.o1, in.o2)) throw Error(ErrorCode::InvalidArgument, "orbits do not partition X");
  if (in.h.degree() != n || in.g.degree() != n) throw Error(ErrorCode::DegreeMismatch, "groups do not act on X");
  for (const auto& e : in.g.elements())
    if (!in.h.contains(e)) throw Error(ErrorCode::NotSubgroup, "G is not contained in H");
  if (orbits(n, in.h.generators()).size() != 1) throw Error(ErrorCode::InvalidArgument, "H is not transitive on X");
  auto go = orbits(n, in.g.generators());
  auto o1 = sorted_copy(in.o1);
  auto o2 = sorted_copy(in.o2);
  if (go.size() != 2 || !((go[0] == o1 && go[1] == o2) || (go[0] == o2 && go[1] == o1)))
    throw Error(ErrorCode::InvalidArgument, "G does not have exactly the orbits O1 and O2");
  std::uint64_t num = *in.h.order() * in.o1.size();
  std::uint64_t den = *in.g.order() * n;
  if (num % den != 0 || num / den < 1 || num / den > 2)
    throw Error(ErrorCode::RatioOutOfRange, "|H||O1|/(|G||X|) = " + std::to_string(num) + "/" +
                                                std::to_string(den) + " is not 1 or 2");
  return static_cast<std::uint32_t>(num / den);
}

PaddingReport coset_rep_padding_check(const TwoOrbitInput& in, std::uint32_t q) {
  PaddingReport rep;
  std::uint64_t num = *in.h.order() * in.o1.size();
  std::uint64_t den = *in.g.order() * in.x.size();
  if (den == 0 || num % den != 0) {
    rep.ok = false;
    rep.detail = "ratio is not an integer";
    return rep;
  }
  rep.r = static_cast<std::uint32_t>(num / den);
  auto reps = coset_representatives(in.h, in.g);
  if (reps.size() > q || in.o2.empty()) {
    rep.ok = false;
    rep.detail = reps.size() > q ? "q is smaller than the number of cosets" : "O2 is empty";
    return rep;
  }
  auto o1 = sorted_copy(in.o1);
  auto vs = copies(reps, in.x.size(), q, in.o2.front());
  for (std::uint32_t x = 0; x < vs.size(); ++x) {
    std::uint32_t c = count_in(o1, vs[x]);
    rep.counts.push_back(c);
    if (c != rep.r && rep.ok) {
      rep.ok = false;
      rep.witness = x;
      rep.detail = "v(" + std::to_string(x) + ") has " + std::to_string(c) + " entries in O1, expected " +
                   std::to_string(rep.r);
    }
  }
  return rep;
}

Amplifier::Amplifier(const TwoOrbitInput& in, std::uint32_t q) : in_(in) {
  std::uint32_t r = two_orbit_ratio(in_);
  if (!is_prime(q)) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not prime");
  reps_ = coset_representatives(in_.h, in_.g);
  if (q < reps_.size())
    throw Error(ErrorCode::QTooSmall, "q = " + std::to_string(q) + " is below s = " + std::to_string(reps_.size()));
  y_.base = in_.x;
  y_.q = q;
  y_.r = r;
  y_.o1 = sorted_copy(in_.o1);
  auto o2 = sorted_copy(in_.o2);
  y_.y = y_.o1.front();
  y_.z = o2.front();
  g_elements_ = in_.g.elements();
  std::size_t n = in_.x.size();
  from_y_.assign(n, UINT32_MAX);
  from_z_.assign(n, UINT32_MAX);
  for (std::uint32_t k = 0; k < g_elements_.size(); ++k) {
    auto a = g_elements_[k](y_.y);
    auto b = g_elements_[k](y_.z);
    if (from_y_[a] == UINT32_MAX) from_y_[a] = k;
    if (from_z_[b] == UINT32_MAX) from_z_[b] = k;
  }
}

Tuple Amplifier::copy_of(std::uint32_t x) const {
  Tuple t(y_.q, y_.z);
  for (std::size_t i = 0; i < reps_.size(); ++i) t[i] = reps_[i](x);
  return t;
}

std::vector<AmplifiedGenerator> Amplifier::generators() const {
  std::uint32_t q = y_.q;
  std::size_t n = in_.x.size();
  std::vector<Perm> ids(q, Perm::identity(n));
  std::uint32_t g = static_cast<std::uint32_t>(smallest_primitive_root(q));
  std::vector<AmplifiedGenerator> out;
  out.push_back({1, q - 1, ids});
  out.push_back({inverse_mod(g, q), 0, ids});
  for (std::uint32_t j = 0; j < q; ++j)
    for (const auto& h : in_.g.generators()) {
      auto slots = ids;
      slots[j] = h;
      out.push_back({1, 0, std::move(slots)});
    }
  return out;
}

AmplifiedWitness Amplifier::witness(std::span<const std::uint32_t> target) const {
  if (!implicit_member(y_, target)) throw Error(ErrorCode::BadTarget, "target is not a point of Y");
  std::uint32_t q = y_.q;
  std::vector<std::uint32_t> hits;
  for (std::uint32_t i = 0; i < q; ++i)
    if (std::binary_search(y_.o1.begin(), y_.o1.end(), target[i])) hits.push_back(i);
  AmplifiedWitness w;
  if (y_.r == 1) {
    // a -> a - t sends the O1 position to 0
    w.mul = 1;
    w.add = (q - hits[0]) % q;
  } else {
    // a -> (a - t)/(s - t) sends t to 0 and s to 1
    std::uint32_t t = hits[0], s = hits[1];
    w.mul = inverse_mod(s - t, q);
    w.add = static_cast<std::uint32_t>(static_cast<std::uint64_t>(q - t) * w.mul % q);
  }
  w.slots.resize(q);
  for (std::uint32_t i = 0; i < q; ++i) {
    std::uint32_t src = static_cast<std::uint32_t>((static_cast<std::uint64_t>(w.mul) * i + w.add) % q);
    bool from_y = src < y_.r;
    std::uint32_t k = from_y ? from_y_[target[i]] : from_z_[target[i]];
    if (k == UINT32_MAX) throw Error(ErrorCode::BadTarget, "G does not reach target entry " + std::to_string(i));
    w.slots[i] = k;
  }
  return w;
}

AmplifiedGenerator Amplifier::expand(const AmplifiedWitness& w) const {
  AmplifiedGenerator g{w.mul, w.add, {}};
  for (auto k : w.slots) g.slots.push_back(g_elements_.at(k));
  return g;
}

AmplifiedGenerator amplify_witness(const TwoOrbitInput& in, std::uint32_t q, std::span<const std::uint32_t> target) {
  Amplifier a(in, q);
  return a.expand(a.witness(target));
}

Certificate two_orbit_amplify(const TwoOrbitInput& in, std::uint32_t q, const AmplifyOptions& opts) {
  Amplifier amp(in, q);
  auto pad = coset_rep_padding_check(in, q);
  if (!pad.ok) throw Error(ErrorCode::InvalidArgument, "coset padding check failed: " + pad.detail);
  const ImplicitY& y = amp.implicit_y();
  Certificate c;
  c.name = "amplified(" + in.name + ",q=" + std::to_string(q) + ")";
  c.x = in.x;
  c.y_implicit = y;
  for (std::uint32_t x = 0; x < in.x.size(); ++x) c.tuples.push_back(amp.copy_of(x));
  c.embedding.scale_sq = Scalar::rational(Rational(amp.s()));
  c.amplified_generators = amp.generators();
  c.spec = GroupSpec::wreath(GroupSpec::enumerated(in.g), GroupSpec::agl1(q));
  c.solubility = prove_soluble(c.spec);
  c.transitivity.seed = opts.seed;
  if (opts.mode == AmplifyOptions::Mode::Sample) {
    c.transitivity.mode = Transitivity::Mode::WitnessSampled;
    c.transitivity.samples = opts.samples;
    auto base = implicit_base_point(y);
    for (const auto& t : sample_implicit(y, opts.seed, opts.samples)) {
      auto w = amp.witness(t);
      if (apply_witness(w, amp.g_elements(), base) != t)
        throw Error(ErrorCode::InvalidArgument, "witness does not reach its target");
      c.transitivity.witnesses.push_back(std::move(w));
    }
  } else {
    c.transitivity.mode = Transitivity::Mode::WitnessFull;
    auto codes = materialize_implicit(y, opts.cap);
    c.transitivity.samples = codes.size();
    auto base = implicit_base_point(y);
    auto gens = c.amplified_generators;
    for (auto code : codes) {
      auto t = decode_tuple(y, code);
      if (apply_witness(amp.witness(t), amp.g_elements(), base) != t)
        throw Error(ErrorCode::InvalidArgument, "witness does not reach its target");
      for (const auto& g : gens)
        if (!implicit_member(y, apply_amplified(g, t)))
          throw Error(ErrorCode::InvalidArgument, "generator image leaves Y");
    }
  }
  c.notes.push_back("position i of an image receives g_i applied to entry phi(i)");
  c.notes.push_back("positions are 0-based residues mod q; witnesses use a -> a - t when r = 1 and "
                    "a -> (a - t)/(s - t) when r = 2");
  if (q == amp.s())
    c.notes.push_back("q equals s = |H|/|G|; the construction only needs q >= s, so the padding is empty");
  return c;
}

}  // namespace subsol
