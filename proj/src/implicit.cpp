#include "subsol/implicit.hpp"

#include <algorithm>

#include "subsol/error.hpp"

namespace subsol {

std::vector<std::uint32_t> implicit_o2(const ImplicitY& y) {
  std::vector<bool> in(y.base.size(), false);
  for (auto i : y.o1)
    if (i < in.size()) in[i] = true;
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < in.size(); ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

Tuple implicit_base_point(const ImplicitY& y) {
  Tuple t(y.q, y.z);
  for (std::uint32_t i = 0; i < y.r && i < y.q; ++i) t[i] = y.y;
  return t;
}

bool implicit_member(const ImplicitY& y, std::span<const std::uint32_t> t) {
  if (t.size() != y.q) return false;
  std::uint32_t count = 0;
  for (auto v : t) {
    if (v >= y.base.size()) return false;
    if (std::binary_search(y.o1.begin(), y.o1.end(), v)) ++count;
  }
  return count == y.r;
}

BigInt implicit_size(const ImplicitY& y) {
  BigInt choose;
  mpz_bin_uiui(choose.get_mpz_t(), y.q, y.r);
  BigInt a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), y.o1.size(), y.r);
  mpz_ui_pow_ui(b.get_mpz_t(), y.base.size() - y.o1.size(), y.q - y.r);
  return choose * a * b;
}

Tuple apply_amplified(const AmplifiedGenerator& g, std::span<const std::uint32_t> t) {
  std::size_t q = t.size();
  if (g.slots.size() != q) throw Error(ErrorCode::InvalidArgument, "slot count differs from tuple length");
  Tuple out(q);
  for (std::size_t i = 0; i < q; ++i) {
    std::size_t src = (static_cast<std::uint64_t>(g.mul) * i + g.add) % q;
    if (t[src] >= g.slots[i].degree()) throw Error(ErrorCode::InvalidArgument, "tuple entry out of range");
    out[i] = g.slots[i](t[src]);
  }
  return out;
}

Tuple apply_witness(const AmplifiedWitness& w, std::span<const Perm> elements, std::span<const std::uint32_t> t) {
  std::size_t q = t.size();
  if (w.slots.size() != q) throw Error(ErrorCode::InvalidArgument, "slot count differs from tuple length");
  Tuple out(q);
  for (std::size_t i = 0; i < q; ++i) {
    std::size_t src = (static_cast<std::uint64_t>(w.mul) * i + w.add) % q;
    if (w.slots[i] >= elements.size()) throw Error(ErrorCode::InvalidArgument, "slot element index out of range");
    const Perm& g = elements[w.slots[i]];
    if (t[src] >= g.degree()) throw Error(ErrorCode::InvalidArgument, "tuple entry out of range");
    out[i] = g(t[src]);
  }
  return out;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty range");
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    std::uint64_t v = rng();
    if (v < limit) return v % n;
  }
}

std::vector<Tuple> sample_implicit(const ImplicitY& y, std::uint64_t seed, std::uint64_t n) {
  auto o2 = implicit_o2(y);
  if (y.r > y.q || y.o1.empty() || (y.r < y.q && o2.empty()))
    throw Error(ErrorCode::InvalidArgument, "implicit set is empty");
  std::mt19937_64 rng(seed);
  std::vector<Tuple> out;
  out.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    // r distinct positions by partial Fisher-Yates
    std::vector<std::uint32_t> pos(y.q);
    for (std::uint32_t i = 0; i < y.q; ++i) pos[i] = i;
    for (std::uint32_t i = 0; i < y.r; ++i) std::swap(pos[i], pos[i + uniform_below(rng, y.q - i)]);
    std::vector<bool> chosen(y.q, false);
    for (std::uint32_t i = 0; i < y.r; ++i) chosen[pos[i]] = true;
    Tuple t(y.q);
    for (std::uint32_t i = 0; i < y.q; ++i)
      t[i] = chosen[i] ? y.o1[uniform_below(rng, y.o1.size())] : o2[uniform_below(rng, o2.size())];
    out.push_back(std::move(t));
  }
  return out;
}

std::uint64_t encode_tuple(const ImplicitY& y, std::span<const std::uint32_t> t) {
  std::uint64_t code = 0;
  for (std::size_t i = t.size(); i-- > 0;) code = code * y.base.size() + t[i];
  return code;
}

Tuple decode_tuple(const ImplicitY& y, std::uint64_t code) {
  Tuple t(y.q);
  for (std::uint32_t i = 0; i < y.q; ++i) {
    t[i] = static_cast<std::uint32_t>(code % y.base.size());
    code /= y.base.size();
  }
  return t;
}

std::vector<std::uint64_t> materialize_implicit(const ImplicitY& y, std::uint64_t cap) {
  BigInt size = implicit_size(y);
  if (size > BigInt(static_cast<unsigned long>(cap)))
    throw Error(ErrorCode::TooLarge, "implicit set has " + size.get_str() + " points, cap " + std::to_string(cap));
  BigInt span;
  mpz_ui_pow_ui(span.get_mpz_t(), y.base.size(), y.q);
  if (mpz_sizeinbase(span.get_mpz_t(), 2) > 63) throw Error(ErrorCode::TooLarge, "tuple codes exceed 64 bits");
  auto o2 = implicit_o2(y);
  std::vector<std::uint64_t> codes;
  codes.reserve(size.get_ui());
  Tuple t(y.q);
  auto rec = [&](auto&& self, std::uint32_t i, std::uint32_t left) -> void {
    if (i == y.q) {
      if (left == 0) codes.push_back(encode_tuple(y, t));
      return;
    }
    if (left > 0)
      for (auto v : y.o1) {
        t[i] = v;
        self(self, i + 1, left - 1);
      }
    if (y.q - i > left)
      for (auto v : o2) {
        t[i] = v;
        self(self, i + 1, left);
      }
  };
  rec(rec, 0, y.r);
  std::sort(codes.begin(), codes.end());
  return codes;
}

}  // namespace subsol
