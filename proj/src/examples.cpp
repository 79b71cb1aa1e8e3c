#include "realmot/examples.hpp"

namespace realmot {

namespace {

Stratum plus_stratum(std::vector<std::string> I, const MotivicClass& c) {
  Stratum s;
  s.I = std::move(I);
  s.plus = c;
  return s;
}

MotivicClass scalar(const char* text) { return MotivicClass::scalar(LaurentPoly::parse(text), "pt"); }

}  // namespace

ShippedExample example_x2y4() {
  ShippedExample e;
  e.name = "x2y4";
  e.poly = "x^2+y^4";
  e.datum.base = "pt";
  e.datum.components = {{"E1", 2, 2}, {"E2", 4, 3}};
  e.datum.strata = {plus_stratum({"E1"}, scalar("2*u")), plus_stratum({"E2"}, scalar("u-1")),
                    plus_stratum({"E1", "E2"}, scalar("2"))};
  return e;
}

ShippedExample example_x6() {
  ShippedExample e;
  e.name = "x6";
  e.poly = "x^6+x^2*y^2+y^6";
  e.datum.base = "pt";
  e.datum.components = {{"E1", 4, 2}, {"E2", 6, 3}};
  e.datum.strata = {plus_stratum({"E1"}, scalar("2*u-2")), plus_stratum({"E2"}, scalar("2*u-2")),
                    plus_stratum({"E1", "E2"}, scalar("4"))};
  return e;
}

ShippedExample example_figure8() {
  ShippedExample e;
  e.name = "figure8";
  e.poly = "y^2+x^2*(x^2-1)";
  auto gen = [&](const char* name, int dim, bool proper, const char* beta, const char* eq = nullptr) {
    Generator g;
    g.name = name;
    g.dim = dim;
    g.base = "X0";
    g.proper = proper;
    g.nonsingular = true;
    g.compact = proper;
    g.beta = LaurentPoly::parse(beta);
    if (eq) g.equals = eq;
    e.ctx.add_generator(g);
  };
  // Strict transform E1 and exceptional divisor E2 are circles meeting in two points.
  gen("E1", 1, true, "u+1");
  gen("E2", 1, true, "u+1");
  gen("E12", 0, true, "2");
  gen("E1o", 1, false, "u-1", "[E1] - [E12]");
  gen("E2o", 1, false, "u-1", "[E2] - [E12]");
  e.ctx.add_morphism({"X0", "pt", true});
  e.datum.base = "X0";
  e.datum.components = {{"E1", 1, 1}, {"E2", 2, 2}};
  e.datum.strata = {plus_stratum({"E1"}, e.ctx.parse("[E1o]", "X0")), plus_stratum({"E2"}, e.ctx.parse("[E2o]", "X0")),
                    plus_stratum({"E1", "E2"}, e.ctx.parse("[E12]", "X0"))};
  return e;
}

std::vector<ShippedExample> shipped_examples() { return {example_x2y4(), example_x6(), example_figure8()}; }

ZetaSeries printed_zeta_x2y4() {
  ZetaSeries z;
  GeomBlock b1{-2, 2, 2}, b2{-3, 4, 4};
  z.summands = {{scalar("2*u-2"), {b1, b2}}, {scalar("2*u"), {b1}}, {scalar("u-1"), {b2}}};
  return z;
}

ZetaSeries printed_zeta_x6() {
  ZetaSeries z;
  GeomBlock b1{-2, 4, 4}, b2{-3, 6, 6};
  z.summands = {{scalar("2*u-2"), {b1}}, {scalar("2*u-2"), {b2}}, {scalar("4*u-4"), {b1, b2}}};
  return z;
}

}  // namespace realmot
