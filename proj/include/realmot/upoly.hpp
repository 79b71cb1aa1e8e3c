#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "realmot/numeric.hpp"

namespace realmot {

// Dense univariate polynomial over Q, c[i] is the coefficient of x^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly monomial(const Rational& c, int e);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& lead() const { return c_.back(); }
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;
  int sign_at_pos_inf() const;
  int sign_at_neg_inf() const;
  UPoly derivative() const;
  UPoly monic() const;
  // Multiplicity of x as a root (0 when not a root).
  int root_multiplicity(const Rational& x) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& s, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly gcd(UPoly a, UPoly b);  // monic, gcd(0,0)=0
UPoly squarefree_part(const UPoly& p);

// Extended real endpoint: nullopt means -inf (as lower) or +inf (as upper).
using Bound = std::optional<Rational>;

// Distinct real roots in the open interval (lo, hi).
int count_real_roots(const UPoly& p, const Bound& lo, const Bound& hi, bool exclude_zero);

// Isolating data for the distinct real roots, ascending. Either lo == hi (exact
// rational root) or the open interval (lo, hi) holds exactly one root. Open
// intervals never overlap; an endpoint may coincide with a neighbouring exact root.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};
std::vector<RootInterval> isolate_real_roots(const UPoly& p);

// Shrinks a non-exact interval until hi - lo <= width.
void refine(const UPoly& p, RootInterval& r, const Rational& width);

}  // namespace realmot
