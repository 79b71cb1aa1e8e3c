#pragma once

#include <string>
#include <vector>

#include "realmot/motivic.hpp"
#include "realmot/zeta.hpp"

namespace realmot {

// Resolution data shipped with the library (also under data/ as JSON).
struct ShippedExample {
  std::string name;
  std::string poly;
  int d = 2;
  Context ctx;
  ResolutionDatum datum;
};

ShippedExample example_x2y4();     // x^2+y^4, base pt
ShippedExample example_x6();       // x^6+x^2y^2+y^6, base pt
ShippedExample example_figure8();  // y^2+x^2(x^2-1) over X0
std::vector<ShippedExample> shipped_examples();

// Closed forms of Z^+ as printed for the first two examples.
ZetaSeries printed_zeta_x2y4();
ZetaSeries printed_zeta_x6();

}  // namespace realmot
