#include "realmot/motivic.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "expr_parser.hpp"
#include "realmot/error.hpp"

namespace realmot {

MotivicClass MotivicClass::scalar(const LaurentPoly& c, std::string base) {
  MotivicClass x(std::move(base));
  x.add_term(nullptr, c);
  return x;
}

MotivicClass MotivicClass::of(GeneratorPtr g, const LaurentPoly& c) {
  if (!g) fail(Errc::InvalidArgument, "null generator");
  MotivicClass x(g->base);
  x.add_term(std::move(g), c);
  return x;
}

bool MotivicClass::is_scalar() const {
  for (const auto& [k, t] : terms_)
    if (t.gen) return false;
  return true;
}

LaurentPoly MotivicClass::scalar_part() const { return coeff_of(""); }

LaurentPoly MotivicClass::coeff_of(const std::string& gen_name) const {
  auto it = terms_.find(gen_name);
  return it == terms_.end() ? LaurentPoly() : it->second.coeff;
}

void MotivicClass::add_term(GeneratorPtr g, const LaurentPoly& c) {
  if (g && g->base != base_)
    fail(Errc::BaseMismatch, "generator " + g->name + " lives over " + g->base + ", class over " + base_);
  std::string key = g ? g->name : std::string();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(key, Term{std::move(g), c});
    return;
  }
  it->second.coeff += c;
  if (it->second.coeff.is_zero()) terms_.erase(it);
}

MotivicClass MotivicClass::scaled(const LaurentPoly& s) const {
  MotivicClass r(base_);
  for (const auto& [k, t] : terms_) r.add_term(t.gen, t.coeff * s);
  return r;
}

MotivicClass MotivicClass::rebased(const std::string& base) const {
  if (!is_scalar()) fail(Errc::BaseMismatch, "only scalar classes can be moved to another base");
  MotivicClass r(base);
  if (!is_zero()) r.add_term(nullptr, scalar_part());
  return r;
}

namespace {

bool coefficient_needs_parens(const LaurentPoly& c) { return c.coeffs().size() > 1; }

}  // namespace

std::string MotivicClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, t] : terms_) {
    LaurentPoly c = t.coeff;
    bool neg = false;
    if (!t.gen) {
      os << c.to_string("L");
      first = false;
      continue;
    }
    if (c.coeffs().rbegin()->second < 0) {
      neg = true;
      c = -c;
    }
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (c != LaurentPoly(1)) {
      if (coefficient_needs_parens(c))
        os << "(" << c.to_string("L") << ")*";
      else
        os << c.to_string("L") << "*";
    }
    os << "[" << t.gen->name << "]";
  }
  return os.str();
}

bool operator==(const MotivicClass& a, const MotivicClass& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty() && a.base_ != b.base_) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second.coeff != ib->second.coeff) return false;
  return true;
}

MotivicClass class_combine(const MotivicClass& x, const MotivicClass& y, ClassOp op) {
  if (op == ClassOp::Mul) {
    bool xs = x.is_scalar(), ys = y.is_scalar();
    if (!xs && !ys) fail(Errc::UnrepresentableProduct, "product of two generator classes is not representable");
    if (xs && ys) {
      if (x.base() != y.base() && !x.is_zero() && !y.is_zero())
        fail(Errc::BaseMismatch, "scalar classes over " + x.base() + " and " + y.base());
      return MotivicClass::scalar(x.scalar_part() * y.scalar_part(), x.is_zero() ? y.base() : x.base());
    }
    return xs ? y.scaled(x.scalar_part()) : x.scaled(y.scalar_part());
  }
  const std::string& base = x.is_zero() ? y.base() : x.base();
  if (!x.is_zero() && !y.is_zero() && x.base() != y.base())
    fail(Errc::BaseMismatch, "classes over " + x.base() + " and " + y.base());
  MotivicClass r(base);
  for (const auto& [k, t] : x.terms()) r.add_term(t.gen, t.coeff);
  for (const auto& [k, t] : y.terms()) r.add_term(t.gen, op == ClassOp::Add ? t.coeff : -t.coeff);
  return r;
}

MotivicClass operator+(const MotivicClass& x, const MotivicClass& y) { return class_combine(x, y, ClassOp::Add); }
MotivicClass operator-(const MotivicClass& x, const MotivicClass& y) { return class_combine(x, y, ClassOp::Sub); }
MotivicClass operator*(const MotivicClass& x, const MotivicClass& y) { return class_combine(x, y, ClassOp::Mul); }
MotivicClass operator*(const LaurentPoly& s, const MotivicClass& x) { return x.scaled(s); }

BetaResult beta_realize(const MotivicClass& x) {
  BetaResult r;
  LaurentPoly acc;
  for (const auto& [k, t] : x.terms()) {
    if (!t.gen) {
      if (x.base() != "pt") {
        r.unknown.push_back("1@" + x.base());
        continue;
      }
      acc += t.coeff;
    } else if (t.gen->beta) {
      acc += t.coeff * *t.gen->beta;
    } else {
      r.unknown.push_back(t.gen->name);
    }
  }
  if (r.unknown.empty()) r.value = acc;
  return r;
}

MotivicClass dual_class(const MotivicClass& x) {
  std::vector<std::string> bad;
  MotivicClass r(x.base());
  for (const auto& [k, t] : x.terms()) {
    if (!t.gen) {
      if (x.base() != "pt") {
        bad.push_back("1@" + x.base() + " (base not known to be nonsingular)");
        continue;
      }
      r.add_term(nullptr, t.coeff.dual());
      continue;
    }
    const Generator& g = *t.gen;
    bool ok = g.base == "pt" ? (g.compact && g.nonsingular) : (g.proper && g.nonsingular);
    if (!ok) {
      bad.push_back(g.name);
      continue;
    }
    r.add_term(t.gen, t.coeff.dual() * LaurentPoly::monomial(1, -g.dim));
  }
  if (!bad.empty()) {
    std::string msg = "duality undefined for:";
    for (const auto& b : bad) msg += " " + b;
    fail(Errc::DualityUndefined, msg);
  }
  return r;
}

MotivicClass link_relative(const MotivicClass& x) { return x + dual_class(x).scaled(LaurentPoly::u()); }

bool euler_parity_check(const MotivicClass& x) {
  for (const auto& [k, t] : x.terms())
    if (t.coeff.chi_c() % 2 != 0) return false;
  return true;
}

void Context::add_generator(Generator g) {
  if (g.name.empty()) fail(Errc::InvalidArgument, "generator without a name");
  if (gens_.count(g.name)) fail(Errc::InvalidArgument, "duplicate generator name " + g.name);
  if (g.dim < 0) fail(Errc::InvalidArgument, "negative dimension for generator " + g.name);
  if (g.beta && (g.beta->is_zero() || g.beta->degree() != g.dim))
    fail(Errc::InvalidArgument, "beta of generator " + g.name + " must have degree " + std::to_string(g.dim));
  std::string name = g.name;
  gens_.emplace(name, std::make_shared<const Generator>(std::move(g)));
}

void Context::add_morphism(BaseMorphism m) {
  if (morphism(m.source, m.target)) fail(Errc::InvalidArgument, "duplicate morphism " + m.source + "->" + m.target);
  morphs_.push_back(std::move(m));
}

GeneratorPtr Context::find(const std::string& name) const {
  auto it = gens_.find(name);
  return it == gens_.end() ? nullptr : it->second;
}

GeneratorPtr Context::generator(const std::string& name) const {
  auto g = find(name);
  if (!g) fail(Errc::InvalidArgument, "unknown generator " + name);
  return g;
}

const BaseMorphism* Context::morphism(const std::string& source, const std::string& target) const {
  for (const auto& m : morphs_)
    if (m.source == source && m.target == target) return &m;
  return nullptr;
}

namespace {

struct ClassAlgebra {
  using Value = MotivicClass;
  const Context& ctx;
  std::string base;

  Value number(const Rational& q, std::size_t pos) {
    if (q.get_den() != 1) detail::parse_error(pos, "non-integer coefficient");
    return MotivicClass::scalar(LaurentPoly::constant(q.get_num()), base);
  }
  Value ident(const std::string& s, std::size_t pos) {
    if (s == "L" || s == "u") return MotivicClass::scalar(LaurentPoly::u(), base);
    detail::parse_error(pos, "unknown symbol '" + s + "' (generators are written [Name])");
  }
  Value bracket(const std::string& name, std::size_t pos) {
    auto g = ctx.find(name);
    if (!g) detail::parse_error(pos, "unknown generator [" + name + "]");
    if (g->base != base)
      fail(Errc::BaseMismatch, "generator " + name + " lives over " + g->base + ", expression over " + base);
    return MotivicClass::of(g);
  }
  Value add(Value a, Value b) { return a + b; }
  Value sub(Value a, Value b) { return a - b; }
  Value mul(Value a, Value b, std::size_t) { return a * b; }
  Value div(Value, Value, std::size_t pos) { detail::parse_error(pos, "division is not supported here"); }
  Value neg(Value a) { return a.scaled(-1); }
  Value power(Value a, long e, std::size_t pos) {
    if (!a.is_scalar()) detail::parse_error(pos, "power of a generator class");
    try {
      return MotivicClass::scalar(a.scalar_part().pow(static_cast<int>(e)), base);
    } catch (const Error& err) {
      detail::parse_error(pos, err.what());
    }
  }
};

}  // namespace

MotivicClass Context::parse(std::string_view text, std::optional<std::string> base) const {
  if (!base) {
    base = "pt";
    for (const auto& t : detail::tokenize(text)) {
      if (t.kind != detail::Token::Bracket) continue;
      if (auto g = find(t.text)) {
        base = g->base;
        break;
      }
    }
  }
  ClassAlgebra alg{*this, *base};
  MotivicClass r = detail::ExprParser<ClassAlgebra>(alg, text).parse_all();
  if (r.is_zero()) return MotivicClass(*base);
  return r;
}

MotivicClass Context::expand(const MotivicClass& x) const {
  MotivicClass r(x.base());
  std::set<std::string> active;
  // depth-first with cycle detection
  std::function<void(const MotivicClass&, const LaurentPoly&)> walk = [&](const MotivicClass& c,
                                                                         const LaurentPoly& s) {
    for (const auto& [k, t] : c.terms()) {
      if (!t.gen || !t.gen->equals) {
        r.add_term(t.gen, t.coeff * s);
        continue;
      }
      if (!active.insert(t.gen->name).second)
        fail(Errc::InvalidArgument, "cyclic generator definition through " + t.gen->name);
      walk(parse(*t.gen->equals, t.gen->base), t.coeff * s);
      active.erase(t.gen->name);
    }
  };
  walk(x, 1);
  return r;
}

MotivicClass pushforward_class(const MotivicClass& x, const Context& ctx, const std::string& target_base,
                               PushMode mode) {
  if (mode == PushMode::Star)
    return dual_class(pushforward_class(dual_class(x), ctx, target_base, PushMode::Shriek));
  if (target_base == x.base()) return x;
  const BaseMorphism* m = ctx.morphism(x.base(), target_base);
  if (!m) fail(Errc::UnknownBaseMorphism, "no declared morphism " + x.base() + " -> " + target_base);
  MotivicClass r(target_base);
  for (const auto& [k, t] : x.terms()) {
    if (!t.gen)
      fail(Errc::InvalidArgument, "pushforward of the unit class of " + x.base() + " needs a generator for it");
    const Generator& g = *t.gen;
    if (g.proper && !m->proper)
      fail(Errc::PropernessLost, "generator " + g.name + " is proper but " + m->source + " -> " + m->target +
                                     " is not");
    Generator pushed = g;
    pushed.base = target_base;
    pushed.equals.reset();
    if (target_base == "pt") pushed.compact = g.compact || g.proper;
    r.add_term(std::make_shared<const Generator>(std::move(pushed)), t.coeff);
  }
  return r;
}

}  // namespace realmot
