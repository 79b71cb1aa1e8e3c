#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "realmot/numeric.hpp"
#include "realmot/upoly.hpp"

namespace realmot {

using Exponent = std::vector<int>;

// Integer polynomial in d >= 1 named variables. No zero coefficients.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t dim() const { return vars_.size(); }
  const std::map<Exponent, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::vector<Exponent> support() const;
  Integer coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const Integer& c);
  MultiPoly minus_constant(const Integer& c) const;
  MultiPoly derivative(std::size_t var) const;
  Rational eval(const std::vector<Rational>& x) const;
  // Univariate polynomial in variable i after setting all others to zero.
  UPoly axis_restriction(std::size_t i) const;
  UPoly to_upoly() const;  // requires dim() == 1

  // Lex-descending terms, e.g. "x^6 + x^2*y^2 + y^6".
  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);

 private:
  std::vector<std::string> vars_;
  std::map<Exponent, Integer> terms_;
};

// Rational coefficients are cleared by the lcm of denominators; the factor is
// reported through `scale` (result = scale * input).
MultiPoly parse_poly(std::string_view text, const std::optional<std::vector<std::string>>& vars = std::nullopt,
                     Integer* scale = nullptr);

MultiPoly face_restrict(const MultiPoly& f, const std::vector<Exponent>& face_support);

struct WeightVector {
  std::vector<long long> w;
  long long degree = 0;
};

struct WeightAnalysis {
  std::optional<WeightVector> weights;
  bool convenient = false;
};

WeightAnalysis analyze_weights(const MultiPoly& f);

// A bivariate quasi-homogeneous polynomial in torus normal form: after the
// unimodular monomial substitution x = X^M[0][0] Y^M[1][0], y = X^M[0][1] Y^M[1][1]
// it reads X^m * phi(Y) with phi a Laurent polynomial in Y.
struct TorusNormalForm {
  int m = 0;
  std::map<int, Integer> phi;  // Y-exponent -> coefficient
  int M[2][2] = {{1, 0}, {0, 1}};
  int phi_low() const { return phi.begin()->first; }
  int phi_high() const { return phi.rbegin()->first; }
  UPoly phi_poly() const;  // Y^{-phi_low} * phi
  // Point of the original torus for given (X, Y).
  std::vector<Rational> to_xy(const Rational& X, const Rational& Y) const;
};

// Throws Unsupported when f is not bivariate quasi-homogeneous with positive weights.
TorusNormalForm torus_normal_form(const MultiPoly& f);

struct NondegResult {
  bool supported = false;
  bool nondegenerate = false;
  std::vector<std::size_t> degenerate_faces;  // indices into the faces argument
};

NondegResult nondegenerate_check(const MultiPoly& f, const std::vector<std::vector<Exponent>>& faces);

}  // namespace realmot
