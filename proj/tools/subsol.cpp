#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "subsol/amplify.hpp"
#include "subsol/blockset.hpp"
#include "subsol/catalog.hpp"
#include "subsol/codec.hpp"
#include "subsol/product.hpp"
#include "subsol/trapezium.hpp"
#include "subsol/verify.hpp"

using namespace subsol;

namespace {

enum Exit { kVerified = 0, kRejected = 1, kUsage = 2 };

Point2 parse_point(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::InvalidArgument, "expected X,Y but got '" + s + "'");
  try {
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "bad coordinates '" + s + "'");
  }
}

void emit(const Certificate& c, const std::string& out) {
  if (out.empty()) std::cout << emit_json(c);
  else write_certificate(c, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Soluble containing sets for point configurations, with checkable certificates"};
  app.require_subcommand(1);
  std::string out;

  auto* cat = app.add_subcommand("catalog", "Vertex set of a polytope with a soluble transitive group");
  std::string shape;
  std::size_t param = 0;
  cat->add_option("--shape", shape, "simplex, cube, orthoplex, kgon, icosahedron or cell24")->required();
  cat->add_option("--param", param, "dimension, or k for kgon");
  cat->add_option("--out", out, "output file (default stdout)");

  auto* blk = app.add_subcommand("blockset", "Permutations of a block pattern inside a signed permutation set");
  std::string alpha, beta, gamma, delta;
  std::uint32_t bi = 0, bj = 0;
  std::optional<std::uint32_t> bk, bl, prime;
  blk->add_option("--alpha", alpha)->required();
  blk->add_option("--beta", beta)->required();
  blk->add_option("--gamma", gamma)->required();
  blk->add_option("--delta", delta, "defaults to gamma");
  blk->add_option("--i", bi)->required();
  blk->add_option("--j", bj)->required();
  blk->add_option("--k", bk, "multiplicity of gamma (default 1, or 2 without --delta)");
  blk->add_option("--l", bl, "multiplicity of delta (default 1, or 0 without --delta)");
  blk->add_option("--p", prime, "prime for the containing set");
  blk->add_option("--out", out);

  auto* amp = app.add_subcommand("amplify", "Two-orbit amplification of a polytope");
  std::string input = "dodecahedron", mode = "sample";
  std::uint32_t q = 5;
  AmplifyOptions aopts;
  amp->add_option("--input", input, "dodecahedron or octahedron");
  amp->add_option("--q", q, "prime at least |H|/|G|");
  amp->add_option("--mode", mode, "sample or full")->check(CLI::IsMember({"sample", "full"}));
  amp->add_option("--samples", aopts.samples);
  amp->add_option("--seed", aopts.seed);
  amp->add_option("--out", out);

  auto* trap = app.add_subcommand("trapezium", "Isosceles trapezium inside a soluble set");
  std::string pa, pb, pc, pd;
  double tol = kDefaultTol;
  trap->add_option("--a", pa)->required();
  trap->add_option("--b", pb)->required();
  trap->add_option("--c", pc)->required();
  trap->add_option("--d", pd)->required();
  trap->add_option("--tol", tol);
  trap->add_option("--out", out);

  auto* prod = app.add_subcommand("product", "Product of two certificates");
  std::string fa, fb;
  prod->add_option("first", fa)->required();
  prod->add_option("second", fb)->required();
  prod->add_option("--out", out);

  auto* ver = app.add_subcommand("verify", "Re-check a certificate");
  std::string file, escalate;
  ver->add_option("file", file)->required();
  ver->add_option("--escalate", escalate, "'full' forces the exhaustive sweep")->check(CLI::IsMember({"full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kVerified : kUsage;
  }

  try {
    if (*cat) {
      emit(catalog_certificate(catalog_build(shape_from_string(shape), param)), out);
    } else if (*blk) {
      bool has_delta = !delta.empty();
      BlockPattern b{Rational::parse(alpha), Rational::parse(beta), Rational::parse(gamma),
                     Rational::parse(has_delta ? delta : gamma), bi, bj,
                     bk.value_or(has_delta ? 1 : 2), bl.value_or(has_delta ? 1 : 0)};
      emit(block_family_certificate(b, prime), out);
    } else if (*amp) {
      aopts.mode = mode == "full" ? AmplifyOptions::Mode::Full : AmplifyOptions::Mode::Sample;
      emit(two_orbit_amplify(two_orbit_input(input), q, aopts), out);
    } else if (*trap) {
      auto t = validate_trapezium(parse_point(pa), parse_point(pb), parse_point(pc), parse_point(pd), tol);
      emit(build_trapezium_certificate(t), out);
    } else if (*prod) {
      emit(product_certificate(read_certificate(fa), read_certificate(fb)), out);
    } else if (*ver) {
      auto c = read_certificate(file);
      VerifyOptions opts;
      opts.escalate_full = escalate == "full";
      auto rep = verify_certificate(c, opts);
      std::cout << rep.summary() << (rep.ok() ? "VERIFIED" : "REJECTED") << "\n";
      return rep.ok() ? kVerified : kRejected;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kVerified;
}
