#pragma once

// Reference implementations, deliberately independent of the engine's algorithms.

#include <vector>

#include "realmot/poly.hpp"
#include "realmot/polyhedra.hpp"
#include "realmot/zeta.hpp"

namespace oracle {

using realmot::Rational;

using QP = std::vector<Rational>;  // dense, low degree first
using Poly = std::vector<realmot::LaurentPoly>;

QP mul(const QP& a, const QP& b);
Rational eval(const QP& p, const Rational& x);
// Distinct real roots in (lo, hi) by Descartes bisection on the square-free part.
int oracle_count(QP p, Rational lo, Rational hi, bool exclude_zero);
Rational cauchy(const QP& p);  // root bound
realmot::MultiPoly to_multi(const QP& p);

// Sign grid of f - level on a 4096^2 grid over [-2, 2]^2 and its marching components.
// Cells whose corner signs differ are nodes; cells sharing a sign-changing edge are
// merged. Torus mode drops the cells touching the coordinate axes.
using SignGrid = std::vector<signed char>;
constexpr int kGrid = 4096;
struct MarchResult {
  int components = 0;
  int closed = 0;  // components not reaching the box boundary
};
SignGrid sign_grid(const realmot::MultiPoly& f, int level);
MarchResult march(const SignGrid& s, bool torus);

Rational det(std::vector<std::vector<Rational>> m);
// Lattice points of the half-open parallelepiped by scanning the bounding box.
std::vector<realmot::IVec> brute_parallelepiped(const std::vector<realmot::IVec>& gens);

// Limit at T = infinity by power-series division in S = 1/T.
realmot::MotivicClass oracle_limit(const realmot::ZetaSeries& z);

}  // namespace oracle
