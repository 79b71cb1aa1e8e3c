#pragma once

#include <optional>
#include <vector>

#include "realmot/numeric.hpp"
#include "realmot/poly.hpp"

namespace realmot {

using IVec = std::vector<long long>;

struct Face {
  std::size_t id = 0;
  std::vector<Exponent> support_points;  // sorted
  int dim_face = 0;
  std::vector<std::size_t> hyperplane_axes;  // i with the face inside {x_i = 0}
};

struct Facet {
  IVec normal;  // primitive, nonnegative
  long long value = 0;  // min of <normal, nu> over the support
};

struct NewtonPolyhedron {
  std::size_t dim_ambient = 0;
  std::vector<Exponent> support;  // sorted, unique
  std::vector<Facet> facets;      // sorted by normal
  std::vector<Face> compact_faces;  // ordered by (dim, points); id = index

  const Face* find_compact_face(const std::vector<Exponent>& points) const;
};

NewtonPolyhedron newton_polyhedron(const std::vector<Exponent>& support, std::size_t d);

struct MultiplicityResult {
  Rational m;
  std::vector<Exponent> face_points;  // support points of gamma_f(a)
  std::optional<std::size_t> compact_face_id;
};

MultiplicityResult multiplicity(const NewtonPolyhedron& np, const QVec& a);
Rational multiplicity_value(const NewtonPolyhedron& np, const IVec& a);

struct Cone {
  std::vector<IVec> generators;  // sorted
  bool simplicial = false;
  std::vector<IVec> p_gens;  // coordinate vectors with m_f = 0
  std::vector<IVec> v_gens;  // the others (positive multiplicity)
};

struct DualFanEntry {
  Face face;
  Cone cone;
};

struct DualFan {
  std::vector<DualFanEntry> entries;  // one per compact face, same order
};

DualFan dual_fan(const NewtonPolyhedron& np);

// Lattice points sum(lambda_i g_i) with 0 < lambda_i <= 1, sorted.
std::vector<IVec> parallelepiped_points(const std::vector<IVec>& gens);

// Rational coordinates of a in the basis gens, or nullopt if a is not in their span.
std::optional<QVec> cone_coordinates(const std::vector<IVec>& gens, const QVec& a);

}  // namespace realmot
