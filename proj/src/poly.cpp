#include "realmot/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "expr_parser.hpp"
#include "realmot/error.hpp"

namespace realmot {

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.empty()) fail(Errc::InvalidArgument, "polynomial needs at least one variable");
}

std::vector<Exponent> MultiPoly::support() const {
  std::vector<Exponent> s;
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

Integer MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Integer& c) {
  if (e.size() != vars_.size()) fail(Errc::InvalidArgument, "exponent length does not match variable count");
  for (int x : e)
    if (x < 0) fail(Errc::InvalidArgument, "negative exponent");
  if (c == 0) return;
  Integer& slot = terms_[e];
  slot += c;
  if (slot == 0) terms_.erase(e);
}

MultiPoly MultiPoly::minus_constant(const Integer& c) const {
  MultiPoly r = *this;
  r.add_term(Exponent(dim(), 0), -c);
  return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    r.add_term(d, c * e[var]);
  }
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& x) const {
  if (x.size() != dim()) fail(Errc::InvalidArgument, "point dimension mismatch");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

UPoly MultiPoly::axis_restriction(std::size_t i) const {
  std::vector<Rational> c;
  for (const auto& [e, v] : terms_) {
    bool on_axis = true;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (j != i && e[j] != 0) on_axis = false;
    if (!on_axis) continue;
    if (c.size() <= static_cast<std::size_t>(e[i])) c.resize(e[i] + 1, 0);
    c[e[i]] += v;
  }
  return UPoly(std::move(c));
}

UPoly MultiPoly::to_upoly() const {
  if (dim() != 1) fail(Errc::InvalidArgument, "not a univariate polynomial");
  return axis_restriction(0);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      parts.push_back(e[i] == 1 ? vars_[i] : vars_[i] + "^" + std::to_string(e[i]));
    }
    if (parts.empty()) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
  }
  return os.str();
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) fail(Errc::InvalidArgument, "variable lists differ");
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

namespace {

// Exponent keys are stored without trailing zeros while the variable list grows.
using RPoly = std::map<Exponent, Rational>;

void trim_key(Exponent& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

void radd(RPoly& p, Exponent e, const Rational& c) {
  trim_key(e);
  Rational& slot = p[e];
  slot += c;
  if (slot == 0) p.erase(e);
}

struct PolyAlgebra {
  using Value = RPoly;
  std::vector<std::string> vars;
  bool fixed = false;

  Value number(const Rational& q, std::size_t) {
    RPoly p;
    radd(p, {}, q);
    return p;
  }
  Value ident(const std::string& s, std::size_t pos) {
    auto it = std::find(vars.begin(), vars.end(), s);
    std::size_t idx;
    if (it != vars.end()) {
      idx = static_cast<std::size_t>(it - vars.begin());
    } else {
      if (fixed) detail::parse_error(pos, "unknown variable '" + s + "'");
      idx = vars.size();
      vars.push_back(s);
    }
    Exponent e(idx + 1, 0);
    e[idx] = 1;
    RPoly p;
    radd(p, e, 1);
    return p;
  }
  Value bracket(const std::string&, std::size_t pos) { detail::parse_error(pos, "unexpected '['"); }
  Value add(Value a, Value b) {
    for (auto& [e, c] : b) radd(a, e, c);
    return a;
  }
  Value sub(Value a, Value b) {
    for (auto& [e, c] : b) radd(a, e, -c);
    return a;
  }
  Value mul(Value a, Value b, std::size_t) {
    RPoly r;
    for (const auto& [e1, c1] : a)
      for (const auto& [e2, c2] : b) {
        Exponent e(std::max(e1.size(), e2.size()), 0);
        for (std::size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
        for (std::size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
        radd(r, e, c1 * c2);
      }
    return r;
  }
  Value div(Value a, Value b, std::size_t pos) {
    if (b.size() != 1 || !b.begin()->first.empty()) detail::parse_error(pos, "can only divide by a nonzero constant");
    Rational q = b.begin()->second;
    for (auto& [e, c] : a) c /= q;
    return a;
  }
  Value neg(Value a) {
    for (auto& [e, c] : a) c = -c;
    return a;
  }
  Value power(Value a, long n, std::size_t pos) {
    if (n < 0) detail::parse_error(pos, "negative exponent in a polynomial");
    if (n > 1000) detail::parse_error(pos, "exponent too large");
    RPoly r;
    radd(r, {}, 1);
    for (long i = 0; i < n; ++i) r = mul(r, a, pos);
    return r;
  }
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const std::optional<std::vector<std::string>>& vars, Integer* scale) {
  PolyAlgebra alg;
  if (vars) {
    alg.vars = *vars;
    alg.fixed = true;
    std::set<std::string> seen(vars->begin(), vars->end());
    if (seen.size() != vars->size()) fail(Errc::InvalidArgument, "duplicate variable names");
  }
  RPoly p = detail::ExprParser<PolyAlgebra>(alg, text).parse_all();
  if (alg.vars.empty()) alg.vars.push_back("x");
  Integer l = 1;
  for (const auto& [e, c] : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  MultiPoly f(alg.vars);
  for (const auto& [e, c] : p) {
    Exponent full(alg.vars.size(), 0);
    std::copy(e.begin(), e.end(), full.begin());
    Rational v = c * l;
    f.add_term(full, v.get_num());
  }
  if (scale) *scale = l;
  return f;
}

MultiPoly face_restrict(const MultiPoly& f, const std::vector<Exponent>& face_support) {
  MultiPoly r(f.vars());
  for (const auto& e : face_support) {
    Integer c = f.coeff(e);
    if (c == 0) {
      std::string s;
      for (int x : e) s += (s.empty() ? "" : ",") + std::to_string(x);
      fail(Errc::InvalidArgument, "exponent (" + s + ") is not in the support");
    }
    if (r.coeff(e) != 0) fail(Errc::InvalidArgument, "repeated exponent in face support");
    r.add_term(e, c);
  }
  return r;
}

WeightAnalysis analyze_weights(const MultiPoly& f) {
  if (f.is_zero()) fail(Errc::InvalidArgument, "weights of the zero polynomial");
  WeightAnalysis out;
  const std::size_t d = f.dim();
  auto supp = f.support();

  for (std::size_t i = 0; i < d; ++i) {
    bool hit = false;
    for (const auto& e : supp) {
      bool ok = true;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i && e[j] != 0) ok = false;
      hit = hit || ok;
    }
    if (!hit) {
      out.convenient = false;
      break;
    }
    out.convenient = true;
  }

  auto degree_of = [&](const std::vector<long long>& w) -> std::optional<long long> {
    long long deg = 0;
    for (std::size_t k = 0; k < supp.size(); ++k) {
      long long s = 0;
      for (std::size_t i = 0; i < d; ++i) s += w[i] * supp[k][i];
      if (k == 0)
        deg = s;
      else if (s != deg)
        return std::nullopt;
    }
    if (deg <= 0) return std::nullopt;
    return deg;
  };

  if (d == 1) {
    auto deg = degree_of({1});
    if (deg) out.weights = WeightVector{{1}, *deg};
    return out;
  }
  QMat diffs;
  for (std::size_t k = 1; k < supp.size(); ++k) {
    QVec row;
    for (std::size_t i = 0; i < d; ++i) row.push_back(supp[k][i] - supp[0][i]);
    diffs.push_back(row);
  }
  auto ns = nullspace(diffs, d);
  if (ns.empty()) return out;
  if (ns.size() == 1) {
    auto w = primitive(ns[0]);
    bool all_pos = std::all_of(w.begin(), w.end(), [](long long x) { return x > 0; });
    bool all_neg = std::all_of(w.begin(), w.end(), [](long long x) { return x < 0; });
    if (all_neg)
      for (auto& x : w) x = -x;
    if (all_pos || all_neg) {
      auto deg = degree_of(w);
      if (deg) out.weights = WeightVector{w, *deg};
    }
    return out;
  }
  // Several independent weight directions (the support spans a low-dimensional
  // affine set): take the positive solution of smallest entry sum with entries <= 12.
  std::vector<long long> w(d, 1), best;
  long long best_sum = 0;
  for (;;) {
    long long s = std::accumulate(w.begin(), w.end(), 0LL);
    if ((best.empty() || s < best_sum) && degree_of(w) && std::accumulate(w.begin(), w.end(), 0LL, gcd_ll) == 1) {
      best = w;
      best_sum = s;
    }
    std::size_t i = 0;
    while (i < d && w[i] == 12) w[i++] = 1;
    if (i == d) break;
    ++w[i];
  }
  if (!best.empty()) out.weights = WeightVector{best, *degree_of(best)};
  return out;
}

UPoly TorusNormalForm::phi_poly() const {
  std::vector<Rational> c(static_cast<std::size_t>(phi_high() - phi_low()) + 1, 0);
  for (const auto& [e, v] : phi) c[e - phi_low()] = v;
  return UPoly(std::move(c));
}

namespace {

Rational int_pow(const Rational& b, int e) {
  Rational base = e >= 0 ? b : 1 / b;
  Rational r = 1;
  for (int i = 0; i < std::abs(e); ++i) r *= base;
  return r;
}

}  // namespace

std::vector<Rational> TorusNormalForm::to_xy(const Rational& X, const Rational& Y) const {
  return {int_pow(X, M[0][0]) * int_pow(Y, M[1][0]), int_pow(X, M[0][1]) * int_pow(Y, M[1][1])};
}

TorusNormalForm torus_normal_form(const MultiPoly& f) {
  if (f.dim() != 2) fail(Errc::Unsupported, "torus normal form needs a bivariate polynomial");
  if (f.is_zero()) fail(Errc::InvalidArgument, "zero polynomial");
  auto supp = f.support();
  TorusNormalForm t;
  if (supp.size() == 1) {
    long long a = supp[0][0], b = supp[0][1];
    if (a == 0 && b == 0) fail(Errc::Unsupported, "constant polynomial has no torus normal form");
    long long g = gcd_ll(a, b), ap = a / g, bp = b / g, al, ga;
    ext_gcd(ap, bp, al, ga);
    t.M[0][0] = static_cast<int>(al);
    t.M[0][1] = static_cast<int>(ga);
    t.M[1][0] = static_cast<int>(bp);
    t.M[1][1] = static_cast<int>(-ap);
  } else {
    long long dx = supp.back()[0] - supp.front()[0], dy = supp.back()[1] - supp.front()[1];
    long long g = gcd_ll(std::llabs(dx), std::llabs(dy));
    long long p = dx / g, q = -dy / g;
    if (p < 0) {
      p = -p;
      q = -q;
    }
    if (p <= 0 || q <= 0) fail(Errc::Unsupported, "support is not quasi-homogeneous with positive weights");
    for (const auto& e : supp)
      if ((e[0] - supp[0][0]) * q + (e[1] - supp[0][1]) * p != 0)
        fail(Errc::Unsupported, "support is not quasi-homogeneous");
    long long x, y;
    ext_gcd(q, p, x, y);  // q x + p y = 1
    t.M[0][0] = static_cast<int>(q);
    t.M[0][1] = static_cast<int>(p);
    t.M[1][0] = static_cast<int>(-y);
    t.M[1][1] = static_cast<int>(x);
  }
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    int xe = t.M[0][0] * e[0] + t.M[0][1] * e[1];
    int ye = t.M[1][0] * e[0] + t.M[1][1] * e[1];
    if (first) {
      t.m = xe;
      first = false;
    } else if (xe != t.m) {
      fail(Errc::Internal, "torus normal form: X-degree not constant");
    }
    t.phi[ye] += c;
  }
  if (t.m <= 0) fail(Errc::Unsupported, "nonpositive weighted degree");
  return t;
}

NondegResult nondegenerate_check(const MultiPoly& f, const std::vector<std::vector<Exponent>>& faces) {
  NondegResult r;
  if (f.dim() >= 3) return r;
  r.supported = true;
  r.nondegenerate = true;
  if (f.dim() == 1) return r;  // faces are vertices: monomials vanish nowhere on the torus
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].size() <= 1) continue;
    TorusNormalForm t = torus_normal_form(face_restrict(f, faces[i]));
    UPoly h = t.phi_poly();
    UPoly g = gcd(h, h.derivative());
    if (g.degree() >= 1 && count_real_roots(g, std::nullopt, std::nullopt, true) > 0) {
      r.nondegenerate = false;
      r.degenerate_faces.push_back(i);
    }
  }
  return r;
}

}  // namespace realmot
