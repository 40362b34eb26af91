#include "subsol/codec.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace subsol {

using nlohmann::json;

SchemaError::SchemaError(std::string path, const std::string& what)
    : Error(ErrorCode::SchemaError, (path.empty() ? std::string("/") : path) + ": " + what), path_(std::move(path)) {}

namespace {

// ---- emit

json emit_golden(const Golden& g) { return {{"a", g.a().str()}, {"b", g.b().str()}}; }

json emit_scalar(const Scalar& s) {
  json j{{"kind", std::string(to_string(s.kind()))}};
  switch (s.kind()) {
    case ScalarKind::Rational: j["value"] = s.golden_value().a().str(); break;
    case ScalarKind::Golden: j["value"] = emit_golden(s.golden_value()); break;
    case ScalarKind::Float:
      j["value"] = s.float_value().value;
      j["tol"] = s.float_value().tol;
      break;
  }
  return j;
}

json emit_points(const PointSet& p) {
  json j{{"kind", std::string(to_string(p.kind()))}, {"dim", p.dim()}};
  json pts = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json row = json::array();
    if (p.kind() == ScalarKind::Float) {
      for (double v : p.float_point(i)) row.push_back(v);
    } else {
      for (const auto& v : p.golden_point(i))
        row.push_back(p.kind() == ScalarKind::Rational ? json(v.a().str()) : emit_golden(v));
    }
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  if (p.kind() == ScalarKind::Float) j["tol"] = p.tol();
  return j;
}

json emit_perm(const Perm& p) { return p.images(); }

json emit_spec(const GroupSpec& s) {
  json j{{"kind", std::string(to_string(s.kind))}, {"param", s.param}};
  if (s.kind == GroupSpec::Kind::Enumerated) {
    j["degree"] = s.degree;
    j["order"] = s.order;
    json gens = json::array();
    for (const auto& g : s.generators) gens.push_back(emit_perm(g));
    j["generators"] = std::move(gens);
  }
  if (!s.children.empty()) {
    json ch = json::array();
    for (const auto& c : s.children) ch.push_back(emit_spec(c));
    j["children"] = std::move(ch);
  }
  return j;
}

json emit_proof(const SolubilityProof& p) {
  json j{{"node", std::string(to_string(p.node))}, {"param", p.param}};
  if (!p.derived_orders.empty()) j["derived_orders"] = p.derived_orders;
  if (!p.children.empty()) {
    json ch = json::array();
    for (const auto& c : p.children) ch.push_back(emit_proof(c));
    j["children"] = std::move(ch);
  }
  return j;
}

json emit_witness(const AmplifiedWitness& w) { return {{"mul", w.mul}, {"add", w.add}, {"slots", w.slots}}; }

json emit_amplified(const AmplifiedGenerator& g) {
  json slots = json::array();
  for (const auto& p : g.slots) slots.push_back(emit_perm(p));
  return {{"mul", g.mul}, {"add", g.add}, {"slots", std::move(slots)}};
}

// ---- parse

struct Node {
  const json& j;
  std::string path;

  [[noreturn]] void fail(const std::string& why) const { throw SchemaError(path, why); }

  Node at(const std::string& key) const {
    if (!j.is_object()) fail("expected an object");
    auto it = j.find(key);
    if (it == j.end()) Node{j, path + "/" + key}.fail("missing field");
    return {*it, path + "/" + key};
  }
  bool has(const std::string& key) const { return j.is_object() && j.contains(key); }
  Node at(std::size_t i) const { return {j[i], path + "/" + std::to_string(i)}; }

  std::size_t size() const {
    if (!j.is_array()) fail("expected an array");
    return j.size();
  }
  std::string str() const {
    if (!j.is_string()) fail("expected a string");
    return j.get<std::string>();
  }
  std::uint64_t uint() const {
    if (!j.is_number_unsigned()) fail("expected a non-negative integer");
    return j.get<std::uint64_t>();
  }
  std::uint32_t u32() const {
    auto v = uint();
    if (v > UINT32_MAX) fail("value out of range");
    return static_cast<std::uint32_t>(v);
  }
  double number() const {
    if (!j.is_number()) fail("expected a number");
    return j.get<double>();
  }
  template <class F>
  auto guard(F&& f) const {
    try {
      return f();
    } catch (const SchemaError&) {
      throw;
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }
};

template <class E>
E enum_from(const Node& n, std::initializer_list<E> values) {
  auto s = n.str();
  for (E v : values)
    if (to_string(v) == s) return v;
  n.fail("unknown value '" + s + "'");
}

Rational parse_rational(const Node& n) {
  return n.guard([&] { return Rational::parse(n.str()); });
}

Golden parse_golden(const Node& n) { return Golden(parse_rational(n.at("a")), parse_rational(n.at("b"))); }

ScalarKind parse_kind(const Node& n) {
  return enum_from(n, {ScalarKind::Rational, ScalarKind::Golden, ScalarKind::Float});
}

Scalar parse_scalar(const Node& n) {
  switch (parse_kind(n.at("kind"))) {
    case ScalarKind::Rational: return Scalar::rational(parse_rational(n.at("value")));
    case ScalarKind::Golden: return Scalar::golden(parse_golden(n.at("value")));
    case ScalarKind::Float: return Scalar::floating(n.at("value").number(), n.at("tol").number());
  }
  n.fail("unknown scalar kind");
}

PointSet parse_points(const Node& n) {
  ScalarKind kind = parse_kind(n.at("kind"));
  std::size_t dim = n.at("dim").uint();
  Node pts = n.at("points");
  std::size_t count = pts.size();
  if (kind == ScalarKind::Float) {
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < count; ++i) {
      Node row = pts.at(i);
      std::vector<double> r;
      for (std::size_t k = 0; k < row.size(); ++k) r.push_back(row.at(k).number());
      rows.push_back(std::move(r));
    }
    double tol = n.at("tol").number();
    return n.guard([&] { return PointSet::floating(dim, std::move(rows), tol); });
  }
  std::vector<std::vector<Golden>> rows;
  for (std::size_t i = 0; i < count; ++i) {
    Node row = pts.at(i);
    std::vector<Golden> r;
    for (std::size_t k = 0; k < row.size(); ++k)
      r.push_back(kind == ScalarKind::Rational ? Golden(parse_rational(row.at(k))) : parse_golden(row.at(k)));
    rows.push_back(std::move(r));
  }
  return n.guard([&] { return PointSet::exact(kind, dim, std::move(rows)); });
}

std::vector<std::uint32_t> parse_indices(const Node& n) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < n.size(); ++i) out.push_back(n.at(i).u32());
  return out;
}

Perm parse_perm(const Node& n) {
  auto images = parse_indices(n);
  return n.guard([&] { return Perm(std::move(images)); });
}

std::vector<Perm> parse_perms(const Node& n) {
  std::vector<Perm> out;
  for (std::size_t i = 0; i < n.size(); ++i) out.push_back(parse_perm(n.at(i)));
  return out;
}

GroupSpec parse_spec(const Node& n) {
  using K = GroupSpec::Kind;
  GroupSpec s;
  s.kind = enum_from(n.at("kind"),
                     {K::Cyclic, K::Dihedral, K::C2Power, K::Agl1, K::Direct, K::Power, K::Enumerated, K::Wreath});
  s.param = n.at("param").uint();
  if (s.kind == K::Enumerated) {
    s.degree = n.at("degree").uint();
    s.order = n.at("order").uint();
    s.generators = parse_perms(n.at("generators"));
  }
  if (n.has("children")) {
    Node ch = n.at("children");
    for (std::size_t i = 0; i < ch.size(); ++i) s.children.push_back(parse_spec(ch.at(i)));
  }
  return s;
}

SolubilityProof parse_proof(const Node& n) {
  using N = SolubilityProof::Node;
  SolubilityProof p;
  p.node = enum_from(n.at("node"), {N::CyclicLeaf, N::DihedralLeaf, N::C2PowerLeaf, N::Agl1Leaf, N::EnumeratedLeaf,
                                    N::Product, N::Power, N::Extension});
  p.param = n.at("param").uint();
  if (n.has("derived_orders")) {
    Node d = n.at("derived_orders");
    for (std::size_t i = 0; i < d.size(); ++i) p.derived_orders.push_back(d.at(i).uint());
  }
  if (n.has("children")) {
    Node ch = n.at("children");
    for (std::size_t i = 0; i < ch.size(); ++i) p.children.push_back(parse_proof(ch.at(i)));
  }
  return p;
}

AmplifiedWitness parse_witness(const Node& n) {
  return {n.at("mul").u32(), n.at("add").u32(), parse_indices(n.at("slots"))};
}

AmplifiedGenerator parse_amplified(const Node& n) {
  return {n.at("mul").u32(), n.at("add").u32(), parse_perms(n.at("slots"))};
}

ImplicitY parse_implicit(const Node& n) {
  ImplicitY y;
  y.base = parse_points(n.at("base"));
  y.q = n.at("q").u32();
  y.r = n.at("r").u32();
  y.o1 = parse_indices(n.at("o1"));
  y.y = n.at("y").u32();
  y.z = n.at("z").u32();
  return y;
}

}  // namespace

std::string emit_json(const Certificate& c) {
  json j;
  j["version"] = c.version;
  j["name"] = c.name;
  j["x"] = emit_points(c.x);
  if (c.y) j["y"] = emit_points(*c.y);
  if (c.y_implicit) {
    const auto& y = *c.y_implicit;
    j["y_implicit"] = {{"base", emit_points(y.base)}, {"q", y.q}, {"r", y.r}, {"o1", y.o1}, {"y", y.y}, {"z", y.z}};
  }
  json emb{{"map", c.embedding.map}, {"scale_sq", emit_scalar(c.embedding.scale_sq)}};
  if (!c.tuples.empty()) emb["tuples"] = c.tuples;
  j["embedding"] = std::move(emb);
  json action = json::object();
  if (c.y_implicit) {
    json gens = json::array();
    for (const auto& g : c.amplified_generators) gens.push_back(emit_amplified(g));
    action["amplified_generators"] = std::move(gens);
  } else {
    json gens = json::array();
    for (const auto& g : c.generators) gens.push_back(emit_perm(g));
    action["generators"] = std::move(gens);
  }
  j["action"] = std::move(action);
  j["spec"] = emit_spec(c.spec);
  j["solubility"] = emit_proof(c.solubility);
  json wit = json::array();
  for (const auto& w : c.transitivity.witnesses) wit.push_back(emit_witness(w));
  j["transitivity"] = {{"mode", std::string(to_string(c.transitivity.mode))},
                       {"seed", c.transitivity.seed},
                       {"samples", c.transitivity.samples},
                       {"witnesses", std::move(wit)}};
  j["notes"] = c.notes;
  j["residuals"] = c.residuals;
  return j.dump(1) + "\n";
}

Certificate parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
  Node root{doc, ""};
  if (!doc.is_object()) root.fail("expected an object");
  Certificate c;
  auto version = root.at("version").uint();
  if (version != Certificate::kVersion)
    root.at("version").fail("UnsupportedVersion: " + std::to_string(version));
  c.name = root.at("name").str();
  c.x = parse_points(root.at("x"));
  if (root.has("y")) c.y = parse_points(root.at("y"));
  if (root.has("y_implicit")) c.y_implicit = parse_implicit(root.at("y_implicit"));
  if (c.y.has_value() == c.y_implicit.has_value()) root.fail("exactly one of y and y_implicit is required");

  Node emb = root.at("embedding");
  c.embedding.map = parse_indices(emb.at("map"));
  c.embedding.scale_sq = parse_scalar(emb.at("scale_sq"));
  if (emb.has("tuples")) {
    Node t = emb.at("tuples");
    for (std::size_t i = 0; i < t.size(); ++i) c.tuples.push_back(parse_indices(t.at(i)));
  }

  Node action = root.at("action");
  if (c.y_implicit) {
    Node g = action.at("amplified_generators");
    for (std::size_t i = 0; i < g.size(); ++i) c.amplified_generators.push_back(parse_amplified(g.at(i)));
  } else {
    c.generators = parse_perms(action.at("generators"));
  }
  c.spec = parse_spec(root.at("spec"));
  c.solubility = parse_proof(root.at("solubility"));

  Node tr = root.at("transitivity");
  {
    Node mode = tr.at("mode");
    c.transitivity.mode = mode.guard([&] { return transitivity_mode_from_string(mode.str()); });
  }
  c.transitivity.seed = tr.at("seed").uint();
  c.transitivity.samples = tr.at("samples").uint();
  Node w = tr.at("witnesses");
  for (std::size_t i = 0; i < w.size(); ++i) c.transitivity.witnesses.push_back(parse_witness(w.at(i)));

  Node notes = root.at("notes");
  for (std::size_t i = 0; i < notes.size(); ++i) c.notes.push_back(notes.at(i).str());
  Node res = root.at("residuals");
  if (!res.j.is_object()) res.fail("expected an object");
  for (auto it = res.j.begin(); it != res.j.end(); ++it)
    c.residuals[it.key()] = Node{it.value(), res.path + "/" + it.key()}.number();
  return c;
}

Certificate read_certificate(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void write_certificate(const Certificate& c, const std::string& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + file);
  out << emit_json(c);
}

}  // namespace subsol
