#include "realmot/zeta.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "realmot/error.hpp"

namespace realmot {

GeomBlock geom_block(long long a, long long k, long long l) {
  if (k < 1 || l < 1) fail(Errc::InvalidArgument, "block exponents must be positive");
  if (k > l) fail(Errc::DivergentBlock, "block L^a T^k/(1 - L^a T^l) needs k <= l");
  return GeomBlock{a, k, l};
}

PipedBlock piped_block(std::vector<LatticeTerm> lattice, std::vector<LatticeTerm> denominators) {
  long long total = 0;
  for (const auto& d : denominators) {
    if (d.m <= 0) fail(Errc::InvalidArgument, "denominator generator with nonpositive multiplicity");
    total += d.m;
  }
  for (const auto& t : lattice)
    if (t.m < 0 || t.m > total) fail(Errc::DivergentBlock, "lattice point multiplicity exceeds the denominator degree");
  return PipedBlock{std::move(lattice), std::move(denominators)};
}

const char* sign_name(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

namespace {

LaurentPoly Lpow(long long e) { return LaurentPoly::monomial(1, static_cast<int>(e)); }

std::string mono(long long a, long long k) {
  std::string s;
  if (a != 0) s = a == 1 ? "L" : "L^" + std::to_string(a);
  if (k != 0) {
    if (!s.empty()) s += "*";
    s += k == 1 ? "T" : "T^" + std::to_string(k);
  }
  return s.empty() ? "1" : s;
}

std::string block_string(const Block& b) {
  if (const auto* g = std::get_if<GeomBlock>(&b))
    return mono(g->a, g->k) + "/(1 - " + mono(g->a, g->l) + ")";
  const auto& p = std::get<PipedBlock>(b);
  std::string num, den;
  for (const auto& t : p.lattice) num += (num.empty() ? "" : " + ") + mono(-t.s, t.m);
  for (const auto& t : p.denominators) den += "(1 - " + mono(-t.s, t.m) + ")";
  if (num.empty()) num = "0";
  return "(" + num + ")/(" + (den.empty() ? "1" : den) + ")";
}

MotivicClass on_base(const MotivicClass& c, const std::string& base) {
  if (c.base() == base) return c;
  if (c.is_zero() || c.is_scalar()) return c.rebased(base);
  fail(Errc::BaseMismatch, "class over " + c.base() + " used in a series over " + base);
}

}  // namespace

std::string ZetaSeries::to_string() const {
  if (summands.empty()) return "0";
  std::string out;
  for (const auto& s : summands) {
    std::string c = s.coeff.to_string();
    bool compound = c.find(" + ") != std::string::npos || c.find(" - ") != std::string::npos || c[0] == '-';
    std::string piece = compound ? "(" + c + ")" : c;
    for (const auto& b : s.blocks) piece += " * " + block_string(b);
    out += (out.empty() ? "" : " + ") + piece;
  }
  return out;
}

ZetaSeries normalize(const ZetaSeries& z) {
  std::map<std::vector<Block>, MotivicClass> merged;
  for (const auto& s : z.summands) {
    auto blocks = s.blocks;
    std::sort(blocks.begin(), blocks.end());
    auto it = merged.find(blocks);
    MotivicClass c = on_base(s.coeff, z.base);
    if (it == merged.end()) merged.emplace(blocks, c);
    else it->second = it->second + c;
  }
  ZetaSeries out;
  out.base = z.base;
  for (auto& [b, c] : merged)
    if (!c.is_zero()) out.summands.push_back(Summand{c, b});
  return out;
}

bool same_closed_form(const ZetaSeries& a, const ZetaSeries& b) {
  ZetaSeries x = normalize(a), y = normalize(b);
  if (x.base != y.base || x.summands.size() != y.summands.size()) return false;
  for (std::size_t i = 0; i < x.summands.size(); ++i)
    if (x.summands[i].blocks != y.summands[i].blocks || x.summands[i].coeff != y.summands[i].coeff) return false;
  return true;
}

void ResolutionDatum::validate() const {
  std::set<std::string> ids;
  for (const auto& c : components) {
    if (c.N < 1 || c.nu < 1) fail(Errc::InvalidArgument, "component " + c.id + " needs N >= 1 and nu >= 1");
    if (!ids.insert(c.id).second) fail(Errc::InvalidArgument, "duplicate component " + c.id);
  }
  for (const auto& s : strata) {
    if (s.I.empty()) fail(Errc::InvalidArgument, "empty stratum index set");
    std::set<std::string> seen;
    for (const auto& i : s.I) {
      if (!ids.count(i)) fail(Errc::InvalidArgument, "stratum references unknown component " + i);
      if (!seen.insert(i).second) fail(Errc::InvalidArgument, "repeated component in stratum");
    }
  }
}

namespace {

const ResolutionComponent& component(const ResolutionDatum& res, const std::string& id) {
  for (const auto& c : res.components)
    if (c.id == id) return c;
  fail(Errc::InvalidArgument, "unknown component " + id);
}

const MotivicClass& stratum_class(const Stratum& s, Sign sign) {
  const auto& c = sign == Sign::Plus ? s.plus : s.minus;
  if (!c) {
    std::string name;
    for (const auto& i : s.I) name += (name.empty() ? "" : ",") + i;
    fail(Errc::MissingStratumClass, std::string("stratum {") + name + "} has no " + sign_name(sign) + " class");
  }
  return *c;
}

}  // namespace

ZetaSeries dl_zeta(const ResolutionDatum& res, Sign sign) {
  res.validate();
  ZetaSeries z;
  z.base = res.base;
  for (const auto& s : res.strata) {
    Summand sm{on_base(stratum_class(s, sign), res.base).scaled((Lpow(1) - 1).pow(static_cast<int>(s.I.size()) - 1)),
               {}};
    for (const auto& i : s.I) {
      const auto& c = component(res, i);
      sm.blocks.emplace_back(geom_block(-c.nu, c.N, c.N));
    }
    z.summands.push_back(std::move(sm));
  }
  return z;
}

namespace {

using Series = std::vector<LaurentPoly>;  // index = power of T

Series series_mul(const Series& a, const Series& b) {
  Series r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

// 1 / (1 - L^e T^m)
Series geometric(long long e, long long m, int n) {
  Series r(n + 1);
  for (long long j = 0; j * m <= n; ++j) r[j * m] = Lpow(e * j);
  return r;
}

Series block_series(const Block& b, int n) {
  Series r(n + 1);
  if (const auto* g = std::get_if<GeomBlock>(&b)) {
    for (long long j = 0; g->k + g->l * j <= n; ++j) r[g->k + g->l * j] = Lpow(g->a * (j + 1));
    return r;
  }
  const auto& p = std::get<PipedBlock>(b);
  for (const auto& t : p.lattice)
    if (t.m <= n) r[t.m] += Lpow(-t.s);
  for (const auto& d : p.denominators) r = series_mul(r, geometric(-d.s, d.m, n));
  return r;
}

}  // namespace

std::vector<MotivicClass> expand_series(const ZetaSeries& z, int n) {
  if (n < 1) fail(Errc::InvalidArgument, "expansion order must be positive");
  std::vector<MotivicClass> out(n, MotivicClass(z.base));
  for (const auto& s : z.summands) {
    Series prod(n + 1);
    prod[0] = 1;
    for (const auto& b : s.blocks) prod = series_mul(prod, block_series(b, n));
    MotivicClass c = on_base(s.coeff, z.base);
    for (int i = 1; i <= n; ++i)
      if (!prod[i].is_zero()) out[i - 1] = out[i - 1] + c.scaled(prod[i]);
  }
  return out;
}

LaurentPoly block_limit(const Block& b) {
  if (const auto* g = std::get_if<GeomBlock>(&b)) {
    if (g->k > g->l) fail(Errc::DivergentBlock, "block with k > l has no limit");
    return g->k == g->l ? LaurentPoly(-1) : LaurentPoly(0);
  }
  const auto& p = std::get<PipedBlock>(b);
  const auto& den = p.denominators;
  LaurentPoly total;
  // Tuples j >= 1 with sum j_i m_i = m_a.
  std::function<void(std::size_t, long long, long long)> rec = [&](std::size_t i, long long left, long long exp) {
    if (i == den.size()) {
      if (left == 0) total += Lpow(exp);
      return;
    }
    for (long long j = 1; j * den[i].m <= left; ++j) rec(i + 1, left - j * den[i].m, exp + j * den[i].s);
  };
  for (const auto& t : p.lattice) rec(0, t.m, -t.s);
  return den.size() % 2 == 0 ? total : -total;
}

MotivicClass limit_at_infinity(const ZetaSeries& z) {
  MotivicClass out(z.base);
  for (const auto& s : z.summands) {
    LaurentPoly prod = 1;
    for (const auto& b : s.blocks) prod *= block_limit(b);
    if (!prod.is_zero()) out = out + on_base(s.coeff, z.base).scaled(prod);
  }
  return out;
}

MotivicClass milnor_fibre(const ZetaSeries& z) { return limit_at_infinity(z).scaled(-1); }

MotivicClass milnor_fibre_printed(const ResolutionDatum& res, Sign sign) {
  res.validate();
  MotivicClass out(res.base);
  for (const auto& s : res.strata)
    out = out + on_base(stratum_class(s, sign), res.base).scaled((Lpow(1) - 1).pow(static_cast<int>(s.I.size()) - 1));
  return out;
}

const MotivicClass& TorusClassTable::at(std::size_t face, SignTag tag) const {
  auto it = entries.find({face, tag});
  if (it == entries.end())
    fail(Errc::MissingTableEntry, "no torus class for face " + std::to_string(face) + " tag " + tag_name(tag));
  return it->second;
}

void TorusClassTable::validate(const NewtonPolyhedron& np) const {
  for (const auto& [key, cls] : entries) {
    if (key.first >= np.compact_faces.size())
      fail(Errc::InvalidArgument, "table entry for unknown face " + std::to_string(key.first));
    const Face& f = np.compact_faces[key.first];
    int eff = static_cast<int>(np.dim_ambient - f.hyperplane_axes.size());
    BetaResult b = beta_realize(cls);
    if (b.known() && !b.value->is_zero() && b.value->degree() > eff - 1)
      fail(Errc::InvalidArgument, "torus class of face " + std::to_string(key.first) + " exceeds dimension " +
                                      std::to_string(eff - 1));
  }
}

TorusClassTable compute_torus_table(const MultiPoly& f, const NewtonPolyhedron& np) {
  TorusClassTable t;
  t.provenance = TableProvenance::Computed;
  for (const auto& face : np.compact_faces) {
    MultiPoly g = face_restrict(f, face.support_points);
    int eff = static_cast<int>(np.dim_ambient - face.hyperplane_axes.size());
    for (SignTag tag : {SignTag::Plus, SignTag::Minus, SignTag::Zero}) t.entries[{face.id, tag}] = torus_class(g, tag, eff);
  }
  return t;
}

namespace {

void require_nondegenerate(const MultiPoly& f, const NewtonPolyhedron& np, bool assume) {
  if (f.dim() == 1) return;  // every face is a monomial
  if (f.dim() == 2) {
    std::vector<std::vector<Exponent>> faces;
    for (const auto& face : np.compact_faces) faces.push_back(face.support_points);
    NondegResult r = nondegenerate_check(f, faces);
    if (!r.nondegenerate) fail(Errc::Degenerate, "f is degenerate on a compact face of its Newton polyhedron");
    return;
  }
  if (!assume) fail(Errc::PreconditionFailed, "non-degeneracy cannot be certified for d >= 3; assert it explicitly");
}

void require_vanishing(const MultiPoly& f) {
  if (f.is_zero()) fail(Errc::InvalidArgument, "zero polynomial");
  if (f.coeff(Exponent(f.dim(), 0)) != 0) fail(Errc::InvalidArgument, "f must vanish at the origin");
}

long long to_ll_exact(const Rational& q) {
  if (q.get_den() != 1) fail(Errc::Internal, "non-integral multiplicity at a lattice point");
  return to_ll(q.get_num());
}

SignTag tag_of(Sign s) { return s == Sign::Plus ? SignTag::Plus : SignTag::Minus; }

}  // namespace

ZetaSeries newton_zeta(const MultiPoly& f, const TorusClassTable& table, Sign sign, const NewtonConfig& cfg) {
  require_vanishing(f);
  NewtonPolyhedron np = newton_polyhedron(f.support(), f.dim());
  require_nondegenerate(f, np, cfg.assume_nondegenerate);
  DualFan fan = dual_fan(np);
  ZetaSeries z;
  for (const auto& e : fan.entries) {
    if (!e.cone.simplicial) fail(Errc::NonSimplicialCone, "dual cone of face " + std::to_string(e.face.id) + " is not simplicial");
    const auto& gens = cfg.qsigma == QSigma::PositiveGens ? e.cone.v_gens : e.cone.generators;
    std::vector<LatticeTerm> lattice, den;
    for (const auto& a : parallelepiped_points(gens)) {
      long long s = 0;
      for (auto x : a) s += x;
      lattice.push_back(LatticeTerm{s, to_ll_exact(multiplicity_value(np, a))});
    }
    for (const auto& v : e.cone.v_gens) {
      long long s = 0;
      for (auto x : v) s += x;
      long long m = to_ll_exact(multiplicity_value(np, v));
      if (m <= 0) fail(Errc::InvalidArgument, "denominator generator with zero multiplicity");
      den.push_back(LatticeTerm{s, m});
    }
    PipedBlock P = piped_block(lattice, den);
    const MotivicClass& cpm = table.at(e.face.id, tag_of(sign));
    const MotivicClass& c0 = table.at(e.face.id, SignTag::Zero);
    if (!cpm.is_zero()) z.summands.push_back(Summand{on_base(cpm, "pt"), {P}});
    if (!c0.is_zero()) z.summands.push_back(Summand{on_base(c0, "pt"), {geom_block(-1, 1, 1), P}});
  }
  return z;
}

MotivicClass level_set_class(const MultiPoly& f, const NewtonPolyhedron& np, const TorusClassTable& table,
                             SignTag tag) {
  const std::size_t d = f.dim();
  if (d > 20) fail(Errc::UnsupportedDimension, "too many variables");
  MotivicClass total = tag == SignTag::Zero ? MotivicClass::scalar(1) : MotivicClass();
  for (unsigned long mask = 1; mask < (1UL << d); ++mask) {
    std::vector<Exponent> pts;
    for (const auto& e : np.support) {
      bool inside = true;
      for (std::size_t i = 0; i < d; ++i)
        if (e[i] != 0 && !(mask >> i & 1UL)) inside = false;
      if (inside) pts.push_back(e);
    }
    if (pts.empty()) fail(Errc::NotConvenient, "f does not meet every coordinate subspace");
    const Face* face = np.find_compact_face(pts);
    if (!face) fail(Errc::Internal, "coordinate section is not a compact face");
    total = total + on_base(table.at(face->id, tag), "pt");
  }
  return total;
}

MotivicClass wh_milnor(const MultiPoly& f, const TorusClassTable& table, Sign sign, bool assume_nondegenerate) {
  require_vanishing(f);
  WeightAnalysis w = analyze_weights(f);
  if (!w.weights) fail(Errc::NotWeightedHomogeneous, "f is not weighted homogeneous");
  if (!w.convenient) fail(Errc::NotConvenient, "f is not convenient");
  NewtonPolyhedron np = newton_polyhedron(f.support(), f.dim());
  require_nondegenerate(f, np, assume_nondegenerate);
  return level_set_class(f, np, table, tag_of(sign)) - level_set_class(f, np, table, SignTag::Zero) +
         MotivicClass::scalar(1);
}

DualityCheck duality_milnor_check(const MotivicClass& psi0, int d, const Context* ctx) {
  if (d < 1) fail(Errc::InvalidArgument, "dimension must be positive");
  MotivicClass psi = ctx ? ctx->expand(psi0) : psi0;
  DualityCheck r;
  LaurentPoly shift = Lpow(1 - d);
  BetaResult b = beta_realize(psi);
  if (!b.known()) {
    r.indeterminate = true;
  } else {
    r.beta_ok = b.value->dual() == shift * *b.value;
  }
  try {
    r.symbolic_ok = dual_class(psi) == psi.scaled(shift);
  } catch (const Error& e) {
    if (e.code() != Errc::DualityUndefined) throw;
  }
  return r;
}

SphereLinkCheck sphere_link_check(const MultiPoly& f, const TorusClassTable& table, bool assume_preconditions) {
  SphereLinkCheck r;
  const std::size_t d = f.dim();
  NewtonPolyhedron np = newton_polyhedron(f.support(), d);
  if (!assume_preconditions) {
    if (d > 2) fail(Errc::PreconditionFailed, "nonnegativity and isolated zero cannot be certified for d >= 3");
    WeightAnalysis w = analyze_weights(f);
    if (!w.weights || !w.convenient) fail(Errc::PreconditionFailed, "f is not convenient weighted homogeneous");
    // beta of a nonempty set has a positive leading coefficient, so these pin the sets down.
    BetaResult neg = beta_realize(level_set_class(f, np, table, SignTag::Minus));
    BetaResult zero = beta_realize(level_set_class(f, np, table, SignTag::Zero));
    if (!neg.known() || !neg.value->is_zero()) fail(Errc::PreconditionFailed, "f takes negative values");
    if (!zero.known() || *zero.value != LaurentPoly(1)) fail(Errc::PreconditionFailed, "zero set is not the origin");
    r.certified = true;
  }
  BetaResult b = beta_realize(wh_milnor(f, table, Sign::Plus, assume_preconditions));
  if (!b.known()) fail(Errc::PreconditionFailed, "torus classes lack beta values");
  r.beta = *b.value;
  r.passed = r.beta == LaurentPoly(1) + Lpow(static_cast<long long>(d) - 1);
  return r;
}

ValidationReport cross_validate(const MultiPoly& f, const std::optional<ResolutionDatum>& res,
                                const std::optional<TorusClassTable>& table_in, Sign sign, const NewtonConfig& cfg) {
  ValidationReport rep;
  rep.sign = sign;
  rep.flags.push_back("psi=-lim");
  rep.flags.push_back(cfg.qsigma == QSigma::PositiveGens ? "qsigma=positive-gens" : "qsigma=all-gens");
  auto attempt = [&](const std::string& name, const std::function<MotivicClass()>& fn) {
    try {
      MotivicClass psi = fn();
      rep.routes.push_back(RouteResult{name, psi, beta_realize(psi)});
    } catch (const Error& e) {
      rep.unavailable.push_back(name + ": " + e.what());
    }
  };
  if (res) attempt("dl", [&] { return milnor_fibre(dl_zeta(*res, sign)); });
  else rep.unavailable.push_back("dl: no resolution datum");

  std::optional<TorusClassTable> table = table_in;
  if (!table) {
    try {
      table = compute_torus_table(f, newton_polyhedron(f.support(), f.dim()));
      rep.flags.push_back("table=computed");
    } catch (const Error& e) {
      rep.unavailable.push_back(std::string("table: ") + e.what());
    }
  } else {
    rep.flags.push_back(table->provenance == TableProvenance::Computed ? "table=computed" : "table=user");
  }
  if (table) {
    attempt("newton", [&] { return milnor_fibre(newton_zeta(f, *table, sign, cfg)); });
    attempt("wh", [&] { return wh_milnor(f, *table, sign, cfg.assume_nondegenerate); });
  }
  std::vector<LaurentPoly> betas;
  for (const auto& r : rep.routes)
    if (r.beta.known()) betas.push_back(*r.beta.value);
  if (betas.size() < 2) rep.verdict = "INSUFFICIENT";
  else if (std::all_of(betas.begin(), betas.end(), [&](const LaurentPoly& b) { return b == betas[0]; }))
    rep.verdict = "AGREE";
  else rep.verdict = "DISAGREE";
  return rep;
}

}  // namespace realmot
