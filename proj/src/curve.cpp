#include "realmot/curve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "realmot/error.hpp"

namespace realmot {

int sturm_count(const MultiPoly& p, const Bound& lo, const Bound& hi, bool exclude_zero) {
  if (p.dim() != 1) fail(Errc::InvalidArgument, "sturm_count needs a univariate polynomial");
  if (p.is_zero()) fail(Errc::InvalidArgument, "zero polynomial has infinitely many roots");
  return count_real_roots(p.to_upoly(), lo, hi, exclude_zero);
}

const char* tag_name(SignTag t) {
  switch (t) {
    case SignTag::Plus: return "+";
    case SignTag::Minus: return "-";
    case SignTag::Zero: return "0";
  }
  return "?";
}

namespace {

// Limit points on the Y line: real roots of phi, Y = 0 and Y = infinity.
enum class LimitKind { Root, Zero, Infinity };

struct LimitPoint {
  LimitKind kind;
  RootInterval iv;  // enclosing interval (Zero: [0,0])
  int order = 0;    // order of phi in the local coordinate t at this point
  int sign = 0;     // sign of Y near the point (Root only)
};

struct Interval {
  int lo_pt;  // index into limit points; -1 means Y -> -infinity
  int hi_pt;  // -1 means Y -> +infinity
  Rational sample;
  int phi_sign;
};

struct Arc {
  int interval;
  int sx;  // sign of X along the arc
};

// An arc end: the limit point it tends to, the side (sign of t) and sign of X.
struct End {
  int point;
  int st;
  int sx;
  auto key() const { return std::tie(point, st, sx); }
  bool operator<(const End& o) const { return key() < o.key(); }
};

Rational ipow(const Rational& b, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Positive rational within 2^-40 of v^(1/m), v > 0.
Rational approx_root(const Rational& v, int m) {
  Rational lo = 0, hi = v > 1 ? v : Rational(1);
  const Rational eps = Rational(1, 1) / (Rational(mpz_class(1) << 40));
  while (hi - lo > eps) {
    Rational mid = (lo + hi) / 2;
    if (ipow(mid, m) > v) hi = mid; else lo = mid;
  }
  return (lo + hi) / 2;
}

struct Analysis {
  TorusNormalForm t;
  std::vector<LimitPoint> pts;  // sorted along R, then infinity last
  int zero_idx = -1;
  int inf_idx = -1;
  std::vector<Interval> ivs;
  std::vector<Arc> arcs;
  std::vector<std::pair<End, End>> ends;  // (lower end, upper end) per arc
};

int phi_sign_at(const TorusNormalForm& t, const UPoly& h, const Rational& y) {
  int s = h.sign_at(y);
  if (t.phi_low() % 2 != 0 && y < 0) s = -s;
  return s;
}

Analysis analyze(const MultiPoly& f, int level) {
  Analysis a;
  a.t = torus_normal_form(f);
  const TorusNormalForm& t = a.t;
  UPoly h = t.phi_poly();
  auto roots = isolate_real_roots(h);
  // h(0) != 0 by construction. Refine until the zero point and all roots are strictly separated.
  std::vector<LimitPoint> finite;
  for (auto& r : roots) {
    LimitPoint p{LimitKind::Root, r, 0, 0};
    finite.push_back(p);
  }
  finite.push_back(LimitPoint{LimitKind::Zero, RootInterval{0, 0}, t.phi_low(), 0});
  auto mid = [](const RootInterval& r) -> Rational { return (r.lo + r.hi) / 2; };
  std::sort(finite.begin(), finite.end(),
            [&](const LimitPoint& x, const LimitPoint& y) { return mid(x.iv) < mid(y.iv); });
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < finite.size(); ++i) {
      auto& p = finite[i];
      auto& q = finite[i + 1];
      if (p.iv.hi < q.iv.lo) continue;
      changed = true;
      LimitPoint& wide = (!p.iv.exact() && (q.iv.exact() || p.iv.hi - p.iv.lo >= q.iv.hi - q.iv.lo)) ? p : q;
      refine(h, wide.iv, (wide.iv.hi - wide.iv.lo) / 2);
    }
    std::sort(finite.begin(), finite.end(),
              [&](const LimitPoint& x, const LimitPoint& y) { return mid(x.iv) < mid(y.iv); });
  }
  for (auto& p : finite) {
    if (p.kind != LimitKind::Root) continue;
    p.sign = p.iv.hi <= 0 ? -1 : 1;
    if (p.iv.exact()) {
      p.order = h.root_multiplicity(p.iv.lo);
    } else {
      // The isolating interval holds exactly one root of h, so any root of gcd(h^(k), h) inside it is that root.
      int mult = 1;
      for (UPoly d = h.derivative(); d.degree() >= 1; d = d.derivative(), ++mult) {
        UPoly g = gcd(d, h);
        if (g.degree() < 1 || count_real_roots(g, p.iv.lo, p.iv.hi, false) == 0) break;
      }
      p.order = mult;
    }
  }
  a.pts = finite;
  for (std::size_t i = 0; i < a.pts.size(); ++i)
    if (a.pts[i].kind == LimitKind::Zero) a.zero_idx = static_cast<int>(i);
  a.inf_idx = static_cast<int>(a.pts.size());
  a.pts.push_back(LimitPoint{LimitKind::Infinity, RootInterval{0, 0}, -t.phi_high(), 0});

  const int n = static_cast<int>(finite.size());
  for (int i = 0; i <= n; ++i) {
    Interval iv;
    iv.lo_pt = i == 0 ? -1 : i - 1;
    iv.hi_pt = i == n ? -1 : i;
    if (i == 0) iv.sample = finite[0].iv.lo - 1;
    else if (i == n) iv.sample = finite[n - 1].iv.hi + 1;
    else iv.sample = (finite[i - 1].iv.hi + finite[i].iv.lo) / 2;
    iv.phi_sign = phi_sign_at(t, h, iv.sample);
    a.ivs.push_back(iv);
  }
  if (level == 0) return a;

  for (int j = 0; j <= n; ++j) {
    int s = a.ivs[j].phi_sign;
    if (t.m % 2 != 0) {
      a.arcs.push_back(Arc{j, level * s});
    } else if (s == level) {
      a.arcs.push_back(Arc{j, -1});
      a.arcs.push_back(Arc{j, 1});
    }
  }
  for (const auto& arc : a.arcs) {
    const Interval& iv = a.ivs[arc.interval];
    End lo = iv.lo_pt < 0 ? End{a.inf_idx, -1, arc.sx} : End{iv.lo_pt, 1, arc.sx};
    End hi = iv.hi_pt < 0 ? End{a.inf_idx, 1, arc.sx} : End{iv.hi_pt, -1, arc.sx};
    a.ends.emplace_back(lo, hi);
  }
  return a;
}

// The end continuing the real branch that arrives through `e`.
End partner(const Analysis& a, const End& e) {
  int order = a.pts[e.point].order;
  if (order == 0) return End{e.point, -e.st, e.sx};
  int ab = std::abs(order);
  int g = std::gcd(a.t.m, ab);
  int m1 = a.t.m / g, a1 = ab / g;
  return End{e.point, (m1 % 2 != 0) ? -e.st : e.st, (a1 % 2 != 0) ? -e.sx : e.sx};
}

std::vector<Rational> arc_witness(const Analysis& a, const Arc& arc, int level) {
  const Rational& y = a.ivs[arc.interval].sample;
  Rational phi = 0;
  for (const auto& [e, c] : a.t.phi) {
    Rational term = Rational(c);
    Rational yy = e >= 0 ? y : 1 / y;
    for (int i = 0; i < std::abs(e); ++i) term *= yy;
    phi += term;
  }
  Rational v = Rational(level) / phi;  // X^m
  Rational x = approx_root(abs(v), a.t.m) * arc.sx;
  return a.t.to_xy(x, y);
}

// Where an end goes in the (x, y) plane: 0 finite nonzero, 1 tends to 0, -1 unbounded.
struct PlaneLimit {
  int ex;
  int ey;
  int sx;  // sign of x near the limit
  int sy;
};

PlaneLimit plane_limit(const Analysis& a, const End& e) {
  const auto& M = a.t.M;
  const LimitPoint& p = a.pts[e.point];
  // Multiply exponents by m to stay integral: X ~ t^(-order/m).
  long long ex_m = -p.order;
  long long ey_m = p.kind == LimitKind::Root ? 0 : p.kind == LimitKind::Zero ? a.t.m : -a.t.m;
  long long xe = M[0][0] * ex_m + M[1][0] * ey_m;
  long long ye = M[0][1] * ex_m + M[1][1] * ey_m;
  int sy_Y = p.kind == LimitKind::Root ? p.sign : e.st;
  auto par = [](long long k, int s) { return (k % 2 != 0) ? s : 1; };
  PlaneLimit r;
  r.ex = xe > 0 ? 1 : xe < 0 ? -1 : 0;
  r.ey = ye > 0 ? 1 : ye < 0 ? -1 : 0;
  r.sx = par(M[0][0], e.sx) * par(M[1][0], sy_Y);
  r.sy = par(M[0][1], e.sx) * par(M[1][1], sy_Y);
  return r;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int x, int y) { p[find(x)] = find(y); }
};

bool witness_less(const CurveComponent& x, const CurveComponent& y) { return x.witness < y.witness; }

CurveTopologyReport level_zero_torus(const Analysis& a) {
  CurveTopologyReport rep;
  // {phi = 0}: one line Y = rho per nonzero real root, split by the sign of X.
  for (const auto& p : a.pts) {
    if (p.kind != LimitKind::Root) continue;
    if (p.order > 1) fail(Errc::SingularLevelCurve, "zero level has a multiple component");
    RootInterval iv = p.iv;
    if (!iv.exact()) refine(a.t.phi_poly(), iv, Rational(1, 1) / Rational(mpz_class(1) << 40));
    Rational y = (iv.lo + iv.hi) / 2;
    for (int sx : {-1, 1}) rep.components.push_back(CurveComponent{ComponentKind::Arc, a.t.to_xy(sx, y)});
  }
  rep.noncompact_arcs = static_cast<int>(rep.components.size());
  int lines = rep.noncompact_arcs / 2;
  rep.beta = LaurentPoly::monomial(lines, 1) - LaurentPoly(lines);
  rep.chi_c = rep.beta.chi_c();
  std::sort(rep.components.begin(), rep.components.end(), witness_less);
  return rep;
}

}  // namespace

CurveTopologyReport curve_components(const MultiPoly& f, int level, CurveDomain domain) {
  if (level < -1 || level > 1) fail(Errc::InvalidArgument, "level must be -1, 0 or 1");
  if (level == 0 && domain == CurveDomain::Plane)
    fail(Errc::Unsupported, "zero level in the plane passes through the singular origin");
  Analysis a = analyze(f, level);
  if (level == 0) return level_zero_torus(a);

  const int na = static_cast<int>(a.arcs.size());
  std::map<End, int> owner;  // end -> arc
  for (int i = 0; i < na; ++i) {
    owner[a.ends[i].first] = i;
    owner[a.ends[i].second] = i;
  }
  // Cycles of the closure: arcs glued along real branches.
  Dsu branch(na);
  for (const auto& [e, i] : owner) {
    End q = partner(a, e);
    auto it = owner.find(q);
    if (it == owner.end()) fail(Errc::Internal, "unpaired arc end");
    branch.unite(i, it->second);
  }
  int cycles = 0;
  for (int i = 0; i < na; ++i)
    if (branch.find(i) == i) ++cycles;

  CurveTopologyReport rep;
  rep.closure_circles = cycles;
  std::vector<std::vector<Rational>> wit;
  for (const auto& arc : a.arcs) wit.push_back(arc_witness(a, arc, level));

  if (domain == CurveDomain::Torus) {
    rep.noncompact_arcs = na;
    for (int i = 0; i < na; ++i) rep.components.push_back(CurveComponent{ComponentKind::Arc, wit[i]});
    rep.beta = LaurentPoly::monomial(cycles, 1) + LaurentPoly(cycles - na);
  } else {
    // Glue torus arcs through the axis points they reach.
    std::map<std::pair<int, int>, std::vector<int>> axis;  // (axis, sign) -> arcs
    std::vector<bool> open(na, false);
    for (int i = 0; i < na; ++i) {
      for (const End& e : {a.ends[i].first, a.ends[i].second}) {
        PlaneLimit pl = plane_limit(a, e);
        if (pl.ex < 0 || pl.ey < 0) {
          open[i] = true;
        } else if (pl.ex == 0 && pl.ey > 0) {
          axis[{0, pl.sx}].push_back(i);
        } else if (pl.ey == 0 && pl.ex > 0) {
          axis[{1, pl.sy}].push_back(i);
        } else {
          fail(Errc::Internal, "arc end reaches the origin or stays in the torus");
        }
      }
    }
    Dsu comp(na);
    for (const auto& [k, arcs] : axis) {
      if (arcs.size() != 2) fail(Errc::SingularLevelCurve, "level curve is singular on a coordinate axis");
      comp.unite(arcs[0], arcs[1]);
    }
    // Independent check of the axis point count.
    for (std::size_t ax = 0; ax < 2; ++ax) {
      UPoly r = f.axis_restriction(ax) - UPoly({Rational(level)});
      int expect = r.is_zero() ? -1 : count_real_roots(r, std::nullopt, std::nullopt, true);
      int got = 0;
      for (const auto& [k, arcs] : axis) got += k.first == static_cast<int>(ax);
      if (expect != got) fail(Errc::Internal, "axis point count mismatch");
    }
    rep.axis_points = static_cast<int>(axis.size());
    std::map<int, bool> comp_open;
    std::map<int, int> comp_first;
    for (int i = 0; i < na; ++i) {
      int r = comp.find(i);
      comp_open[r] = comp_open[r] || open[i];
      if (!comp_first.count(r)) comp_first[r] = i;
    }
    for (const auto& [r, o] : comp_open) {
      rep.components.push_back(CurveComponent{o ? ComponentKind::Arc : ComponentKind::Circle, wit[comp_first[r]]});
      if (o) ++rep.noncompact_arcs;
    }
    rep.beta = LaurentPoly::monomial(cycles, 1) + LaurentPoly(cycles - na + rep.axis_points);
  }
  rep.chi_c = rep.beta.chi_c();
  std::sort(rep.components.begin(), rep.components.end(), witness_less);
  return rep;
}

MotivicClass torus_class(const MultiPoly& f_face, SignTag tag, int effective_vars) {
  if (f_face.is_zero()) fail(Errc::InvalidArgument, "zero face polynomial");
  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < f_face.dim(); ++i) {
    bool any = false;
    for (const auto& [e, c] : f_face.terms()) any = any || e[i] != 0;
    if (any) used.push_back(i);
  }
  if (static_cast<int>(used.size()) != effective_vars)
    fail(Errc::InvalidArgument, "effective variable count does not match the face polynomial");
  if (effective_vars >= 3) fail(Errc::UnsupportedDimension, "torus classes need at most two effective variables");
  if (effective_vars == 0) fail(Errc::InvalidArgument, "constant face polynomial");
  std::vector<std::string> vars;
  for (auto i : used) vars.push_back(f_face.vars()[i]);
  MultiPoly g(vars);
  for (const auto& [e, c] : f_face.terms()) {
    Exponent r;
    for (auto i : used) r.push_back(e[i]);
    g.add_term(r, c);
  }
  int level = tag == SignTag::Plus ? 1 : tag == SignTag::Minus ? -1 : 0;
  if (effective_vars == 1) {
    int n = sturm_count(g.minus_constant(level), std::nullopt, std::nullopt, true);
    return MotivicClass::scalar(LaurentPoly(n));
  }
  return MotivicClass::scalar(curve_components(g, level, CurveDomain::Torus).beta);
}

}  // namespace realmot
