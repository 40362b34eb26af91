#pragma once

// Vertex sets of standard polytopes with soluble transitive actions, and
// two-orbit inputs for amplification.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "subsol/action.hpp"
#include "subsol/certificate.hpp"
#include "subsol/geometry.hpp"
#include "subsol/groupspec.hpp"
#include "subsol/perm.hpp"

namespace subsol {

enum class Shape { Simplex, Cube, Orthoplex, Kgon, Icosahedron, Cell24 };

std::string_view to_string(Shape s);
// Throws UnsupportedShape.
Shape shape_from_string(std::string_view s);

struct CatalogEntry {
  std::string name;
  Action action;  // action.set holds the vertices
  SolubilityProof proof;
};

// param is d for simplex, cube and orthoplex, k for kgon, ignored otherwise.
// Throws UnsupportedShape, InvalidArgument.
CatalogEntry catalog_build(Shape shape, std::size_t param = 0);

// The entry as a certificate whose X is its own vertex set.
Certificate catalog_certificate(const CatalogEntry& e);

// X with a transitive group H and a subgroup G having exactly the two orbits
// o1 and o2.
struct TwoOrbitInput {
  std::string name;
  PointSet x;
  PermGroup h;
  PermGroup g;
  std::vector<std::uint32_t> o1;
  std::vector<std::uint32_t> o2;
};

// Dodecahedron with the stabilizer of an inscribed cube; r = 2.
TwoOrbitInput dodecahedron_input();
// Octahedron with the stabilizer of one antipodal pair; r = 1.
TwoOrbitInput octahedron_input();
// Throws InvalidArgument for unknown names.
TwoOrbitInput two_orbit_input(std::string_view name);

}  // namespace subsol
