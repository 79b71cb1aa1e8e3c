#pragma once

#include <map>
#include <string>
#include <string_view>

#include "realmot/numeric.hpp"

namespace realmot {

// Element of Z[u, 1/u]. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT: integers embed as constants
  static LaurentPoly constant(const Integer& c);
  static LaurentPoly monomial(const Integer& c, int e);
  static LaurentPoly u() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return c_.size() == 1; }
  int degree() const;      // throws on zero
  int low_degree() const;  // throws on zero
  Integer coeff(int e) const;
  const std::map<int, Integer>& coeffs() const { return c_; }

  LaurentPoly dual() const;  // u -> 1/u
  Rational eval(const Rational& x) const;
  Integer chi_c() const;  // value at u = -1
  LaurentPoly pow(int n) const;  // negative n only for monomials

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ < b.c_; }

  // Descending exponents, e.g. "u^2 - 3 + 2*u^-1".
  std::string to_string(std::string_view var = "u") const;
  static LaurentPoly parse(std::string_view text);

 private:
  std::map<int, Integer> c_;
};

enum class LaurentOp { Add, Sub, Mul };
LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, LaurentOp op);
inline LaurentPoly laurent_dual(const LaurentPoly& p) { return p.dual(); }
Rational laurent_eval(const LaurentPoly& p, const Rational& x);  // x != 0

}  // namespace realmot
