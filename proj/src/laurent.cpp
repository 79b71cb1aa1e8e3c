#include "realmot/laurent.hpp"

#include <sstream>

#include "expr_parser.hpp"
#include "realmot/error.hpp"

namespace realmot {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) c_[0] = Integer(static_cast<long>(c));
}

LaurentPoly LaurentPoly::constant(const Integer& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Integer& c, int e) {
  LaurentPoly p;
  if (c != 0) p.c_[e] = c;
  return p;
}

bool LaurentPoly::is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }

int LaurentPoly::degree() const {
  if (c_.empty()) fail(Errc::InvalidArgument, "degree of the zero Laurent polynomial");
  return c_.rbegin()->first;
}

int LaurentPoly::low_degree() const {
  if (c_.empty()) fail(Errc::InvalidArgument, "low degree of the zero Laurent polynomial");
  return c_.begin()->first;
}

Integer LaurentPoly::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Integer(0) : it->second;
}

LaurentPoly LaurentPoly::dual() const {
  LaurentPoly p;
  for (const auto& [e, c] : c_) p.c_[-e] = c;
  return p;
}

Rational LaurentPoly::eval(const Rational& x) const {
  if (x == 0) fail(Errc::InvalidArgument, "Laurent polynomial evaluated at 0");
  Rational acc = 0;
  for (const auto& [e, c] : c_) {
    Rational xe = 1;
    Rational base = e >= 0 ? x : 1 / x;
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) xe *= base;
    acc += c * xe;
  }
  return acc;
}

Integer LaurentPoly::chi_c() const {
  Integer s = 0;
  for (const auto& [e, c] : c_) s += (e % 2 == 0) ? c : Integer(-c);
  return s;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) {
    if (!is_monomial() || abs(c_.begin()->second) != 1)
      fail(Errc::InvalidArgument, "negative power of a non-invertible Laurent polynomial");
    const auto& [e, c] = *c_.begin();
    return monomial((n % 2 == 0) ? Integer(1) : c, e * n);
  }
  LaurentPoly r(1), b = *this;
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) {
    Integer& slot = c_[e];
    slot += c;
    if (slot == 0) c_.erase(e);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) {
    Integer& slot = c_[e];
    slot -= c;
    if (slot == 0) c_.erase(e);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  std::map<int, Integer> r;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) r[e1 + e2] += c1 * c2;
  c_.clear();
  for (auto& [e, c] : r)
    if (c != 0) c_.emplace(e, std::move(c));
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : c_) p.c_[e] = -c;
  return p;
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

namespace {

struct LaurentAlgebra {
  using Value = LaurentPoly;
  Value number(const Rational& q, std::size_t pos) {
    if (q.get_den() != 1) detail::parse_error(pos, "non-integer coefficient");
    return LaurentPoly::constant(q.get_num());
  }
  Value ident(const std::string& s, std::size_t pos) {
    if (s == "u" || s == "L") return LaurentPoly::u();
    detail::parse_error(pos, "unknown symbol '" + s + "' (expected u or L)");
  }
  Value bracket(const std::string&, std::size_t pos) {
    detail::parse_error(pos, "generator not allowed in a Laurent polynomial");
  }
  Value add(Value a, Value b) { return a + b; }
  Value sub(Value a, Value b) { return a - b; }
  Value mul(Value a, Value b, std::size_t) { return a * b; }
  Value div(Value, Value, std::size_t pos) { detail::parse_error(pos, "division is not supported here"); }
  Value neg(Value a) { return -a; }
  Value power(Value a, long e, std::size_t pos) {
    try {
      return a.pow(static_cast<int>(e));
    } catch (const Error& err) {
      detail::parse_error(pos, err.what());
    }
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  LaurentAlgebra alg;
  return detail::ExprParser<LaurentAlgebra>(alg, text).parse_all();
}

LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, LaurentOp op) {
  switch (op) {
    case LaurentOp::Add: return a + b;
    case LaurentOp::Sub: return a - b;
    case LaurentOp::Mul: return a * b;
  }
  return {};
}

Rational laurent_eval(const LaurentPoly& p, const Rational& x) { return p.eval(x); }

}  // namespace realmot
