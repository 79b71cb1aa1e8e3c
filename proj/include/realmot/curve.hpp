#pragma once

#include <vector>

#include "realmot/laurent.hpp"
#include "realmot/motivic.hpp"
#include "realmot/poly.hpp"
#include "realmot/upoly.hpp"

namespace realmot {

// Distinct real roots of a univariate polynomial in the open interval (lo, hi).
int sturm_count(const MultiPoly& p, const Bound& lo, const Bound& hi, bool exclude_zero);

enum class CurveDomain { Plane, Torus };
enum class ComponentKind { Circle, Arc };

struct CurveComponent {
  ComponentKind kind;
  std::vector<Rational> witness;  // rational point within 2^-40 of the component
};

struct CurveTopologyReport {
  std::vector<CurveComponent> components;  // sorted by witness
  // Circles of the normalised closure in P^1 x P^1 (arcs glued along real branches).
  int closure_circles = 0;
  int noncompact_arcs = 0;  // torus arcs, or plane components that are not circles
  int axis_points = 0;      // plane domain only
  LaurentPoly beta;
  Integer chi_c;
};

// Level set {f = level} of a bivariate quasi-homogeneous f; level in {-1, 0, 1}.
CurveTopologyReport curve_components(const MultiPoly& f, int level, CurveDomain domain);

enum class SignTag { Plus, Minus, Zero };
const char* tag_name(SignTag t);

// beta of {f_face = +1 / -1 / 0} inside the torus of the variables f_face involves.
MotivicClass torus_class(const MultiPoly& f_face, SignTag tag, int effective_vars);

}  // namespace realmot
