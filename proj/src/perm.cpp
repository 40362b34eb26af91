#include "subsol/perm.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "subsol/error.hpp"

namespace subsol {

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v])
      throw Error(ErrorCode::InvalidArgument, "image array is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  Perm p;
  p.images_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.images_[i] = static_cast<std::uint32_t>(i);
  return p;
}

Perm Perm::transposition(std::size_t n, std::uint32_t a, std::uint32_t b) {
  Perm p = identity(n);
  std::swap(p.images_.at(a), p.images_.at(b));
  return p;
}

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> img = identity(n).images_;
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) img.at(c[i]) = c[(i + 1) % c.size()];
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return r;
}

Perm Perm::pow(std::int64_t e) const {
  Perm base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Perm result = identity(degree());
  while (n > 0) {
    if (n & 1u) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw Error(ErrorCode::DegreeMismatch,
                std::to_string(p.degree()) + " vs " + std::to_string(q.degree()));
  Perm r;
  r.images_.resize(q.degree());
  for (std::size_t i = 0; i < r.images_.size(); ++i) r.images_[i] = p.images_[q.images_[i]];
  return r;
}

Perm commutator(const Perm& g, const Perm& h) { return g.inverse() * h.inverse() * g * h; }

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw Error(ErrorCode::DegreeMismatch, "generator degree");
}

const std::vector<Perm>& PermGroup::elements() const {
  if (!elements_) throw Error(ErrorCode::NotEnumerated, "group is not enumerated");
  return *elements_;
}

std::optional<std::uint64_t> PermGroup::order() const {
  if (!elements_) return std::nullopt;
  return elements_->size();
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup whole(degree, {});
  whole.elements_ = std::move(elements);
  if (whole.elements_->empty() || !whole.elements_->front().is_identity())
    throw Error(ErrorCode::InvalidArgument, "element list lacks the identity");
  std::vector<Perm> gens = small_generating_set(whole);
  PermGroup g = enumerate_group(degree, gens, whole.elements_->size());
  if (g.elements() != *whole.elements_) throw Error(ErrorCode::InvalidArgument, "element list is not a group");
  return g;
}

bool PermGroup::contains(const Perm& p) const {
  const auto& els = elements();
  return std::binary_search(els.begin(), els.end(), p);
}

std::size_t PermGroup::index_of(const Perm& p) const {
  const auto& els = elements();
  auto it = std::lower_bound(els.begin(), els.end(), p);
  if (it == els.end() || *it != p) throw Error(ErrorCode::NotFound, "element not in group");
  return static_cast<std::size_t>(it - els.begin());
}

PermGroup enumerate_group(std::size_t degree, std::span<const Perm> gens, std::size_t cap) {
  if (cap < 1) throw Error(ErrorCode::InvalidArgument, "cap must be at least 1");
  PermGroup g(degree, std::vector<Perm>(gens.begin(), gens.end()));
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> elements;
  std::deque<std::size_t> queue;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  elements.push_back(id);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      Perm next = s * elements[idx];
      if (seen.insert(next).second) {
        if (elements.size() >= cap)
          throw Error(ErrorCode::CapExceeded, "group exceeds cap of " + std::to_string(cap));
        elements.push_back(std::move(next));
        queue.push_back(elements.size() - 1);
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  g.elements_ = std::move(elements);
  return g;
}

std::vector<std::uint64_t> DerivedSeries::orders() const {
  std::vector<std::uint64_t> out;
  for (const auto& g : series) out.push_back(*g.order());
  return out;
}

PermGroup commutator_subgroup(const PermGroup& g, std::size_t cap) {
  const auto& gens = g.generators();
  std::vector<Perm> ngens;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) ngens.push_back(std::move(c));
    }
  PermGroup n = enumerate_group(g.degree(), ngens, cap);
  // Close under conjugation by the generators of g until normal.
  for (bool grown = true; grown;) {
    grown = false;
    for (std::size_t k = 0; k < ngens.size() && !grown; ++k) {
      for (const auto& x : gens) {
        Perm c = x * ngens[k] * x.inverse();
        if (!n.contains(c)) {
          ngens.push_back(std::move(c));
          n = enumerate_group(g.degree(), ngens, cap);
          grown = true;
          break;
        }
      }
    }
  }
  return n;
}

DerivedSeries derived_series(const PermGroup& g, std::size_t cap) {
  if (!g.enumerated()) throw Error(ErrorCode::NotEnumerated, "derived series needs an enumerated group");
  DerivedSeries ds;
  ds.series.push_back(g);
  while (true) {
    const PermGroup& cur = ds.series.back();
    if (cur.is_trivial()) break;
    PermGroup next = commutator_subgroup(cur, cap);
    bool stable = next.order() == cur.order();
    ds.series.push_back(std::move(next));
    if (stable) break;
  }
  ds.soluble = ds.series.back().is_trivial();
  return ds;
}

PermGroup setwise_stabilizer(const PermGroup& h, std::span<const std::uint32_t> points) {
  std::vector<bool> in_set(h.degree(), false);
  for (auto p : points) in_set.at(p) = true;
  std::vector<Perm> kept;
  for (const auto& e : h.elements()) {
    bool ok = true;
    for (auto p : points)
      if (!in_set[e(p)]) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(e);
  }
  return PermGroup::from_elements(h.degree(), std::move(kept));
}

std::vector<Perm> coset_representatives(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) throw Error(ErrorCode::DegreeMismatch, "coset degree");
  for (const auto& e : g.elements())
    if (!h.contains(e)) throw Error(ErrorCode::NotSubgroup, "G is not contained in H");
  if (*h.order() % *g.order() != 0) throw Error(ErrorCode::NotSubgroup, "|G| does not divide |H|");
  std::vector<bool> covered(h.elements().size(), false);
  std::vector<Perm> reps;
  for (std::size_t i = 0; i < h.elements().size(); ++i) {
    if (covered[i]) continue;
    const Perm& f = h.elements()[i];
    reps.push_back(f);
    for (const auto& x : g.elements()) covered[h.index_of(x * f)] = true;
  }
  return reps;
}

std::vector<Perm> small_generating_set(const PermGroup& g) {
  std::vector<Perm> gens;
  PermGroup sub = enumerate_group(g.degree(), gens);
  for (const auto& e : g.elements()) {
    if (sub.contains(e)) continue;
    gens.push_back(e);
    // elements outside g would make the closure overrun; report that as a non-group
    try {
      sub = enumerate_group(g.degree(), gens, g.elements().size());
    } catch (const Error&) {
      throw Error(ErrorCode::InvalidArgument, "element list is not closed");
    }
  }
  return gens;
}

}  // namespace subsol
