#include "realmot/validation.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "realmot/constructible.hpp"
#include "realmot/error.hpp"
#include "realmot/examples.hpp"
#include "realmot/random_complex.hpp"

namespace realmot {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Flagged: return "FLAGGED";
  }
  return "?";
}

const std::vector<std::string>& validation_suites() {
  static const std::vector<std::string> names{"dl", "wh", "dual", "sphere", "torus", "cf", "parity", "flags"};
  return names;
}

namespace {

using Cases = std::vector<ValidationCase>;

LaurentPoly lp(const char* s) { return LaurentPoly::parse(s); }

std::string beta_str(const MotivicClass& x) {
  auto b = beta_realize(x);
  return b.known() ? b.value->to_string() : "unknown";
}

// Runs `body`, which fills expected/got and returns the verdict; exceptions fail the case.
void add(Cases& out, const std::string& suite, const std::string& name, const std::string& routes,
         const std::function<Verdict(ValidationCase&)>& body) {
  ValidationCase c;
  c.suite = suite;
  c.name = name;
  c.routes = routes;
  try {
    c.verdict = body(c);
  } catch (const Error& e) {
    c.verdict = Verdict::Fail;
    c.notes = std::string(errc_name(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    c.verdict = Verdict::Fail;
    c.notes = e.what();
  }
  out.push_back(std::move(c));
}

Verdict pass_if(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

MotivicClass dl_psi(const ShippedExample& e, const ValidationOptions& o) {
  if (o.corfib_printed) return milnor_fibre_printed(e.datum, Sign::Plus);
  return milnor_fibre(dl_zeta(e.datum, Sign::Plus));
}

TorusClassTable table_for(const MultiPoly& f) { return compute_torus_table(f, newton_polyhedron(f.support(), f.dim())); }

void suite_dl(Cases& out, const ValidationOptions& o) {
  const auto x2y4 = example_x2y4(), x6 = example_x6(), eight = example_figure8();
  for (const auto& [ex, printed] : {std::pair{x2y4, printed_zeta_x2y4()}, std::pair{x6, printed_zeta_x6()}}) {
    add(out, "dl", ex.name + ".closed_form", "dl", [&](ValidationCase& c) {
      c.expected = normalize(printed).to_string();
      c.got = normalize(dl_zeta(ex.datum, Sign::Plus)).to_string();
      return pass_if(same_closed_form(dl_zeta(ex.datum, Sign::Plus), printed));
    });
  }
  add(out, "dl", "x2y4.psi", "dl", [&](ValidationCase& c) {
    MotivicClass psi = dl_psi(x2y4, o);
    c.expected = "L + 1 (beta u + 1)";
    c.got = psi.to_string() + " (beta " + beta_str(psi) + ")";
    return pass_if(psi == MotivicClass::scalar(lp("u+1")));
  });
  add(out, "dl", "x6.psi", "dl", [&](ValidationCase& c) {
    MotivicClass psi = dl_psi(x6, o);
    c.expected = "0 (beta 0)";
    c.got = psi.to_string() + " (beta " + beta_str(psi) + ")";
    return pass_if(psi.is_zero());
  });
  add(out, "dl", "figure8.psi", "dl", [&](ValidationCase& c) {
    MotivicClass want = eight.ctx.parse("[E1o] + [E2o] - (L-1)*[E12]", "X0");
    MotivicClass psi = dl_psi(eight, o);
    c.expected = want.to_string();
    c.got = psi.to_string();
    return pass_if(psi == want);
  });
}

void suite_wh(Cases& out, const ValidationOptions& o) {
  NewtonConfig cfg;
  cfg.qsigma = o.qsigma;
  const auto x2y4 = example_x2y4(), x6 = example_x6();
  add(out, "wh", "x2y4.wh", "wh", [&](ValidationCase& c) {
    MultiPoly f = parse_poly(x2y4.poly);
    MotivicClass psi = wh_milnor(f, table_for(f), Sign::Plus);
    c.expected = "u + 1";
    c.got = beta_str(psi);
    return pass_if(beta_realize(psi).value == lp("u+1"));
  });
  add(out, "wh", "x2y4.newton", "newton", [&](ValidationCase& c) {
    MultiPoly f = parse_poly(x2y4.poly);
    MotivicClass psi = milnor_fibre(newton_zeta(f, table_for(f), Sign::Plus, cfg));
    c.expected = "L + 1";
    c.got = psi.to_string();
    return pass_if(psi == MotivicClass::scalar(lp("u+1")));
  });
  for (const auto* ex : {&x2y4, &x6}) {
    add(out, "wh", ex->name + ".cross", "dl,newton,wh", [&](ValidationCase& c) {
      MultiPoly f = parse_poly(ex->poly);
      ValidationReport r = cross_validate(f, ex->datum, std::nullopt, Sign::Plus, cfg);
      c.expected = "AGREE";
      c.got = r.verdict;
      for (const auto& rr : r.routes) c.notes += rr.route + "=" + beta_str(rr.psi) + " ";
      for (const auto& u : r.unavailable) c.notes += "[" + u + "] ";
      return pass_if(r.verdict == "AGREE");
    });
  }
  // Minus sign on x^2+y^4: {f = -1} is empty, the Milnor fibre is 1 - [{f=0}] + ... = 0 by both routes.
  add(out, "wh", "x2y4.minus", "newton,wh", [&](ValidationCase& c) {
    MultiPoly f = parse_poly(x2y4.poly);
    ValidationReport r = cross_validate(f, std::nullopt, std::nullopt, Sign::Minus, cfg);
    c.expected = "AGREE, beta 0";
    c.got = r.verdict + ", beta " + (r.routes.empty() ? "?" : beta_str(r.routes[0].psi));
    return pass_if(r.verdict == "AGREE" && !r.routes.empty() && beta_realize(r.routes[0].psi).value == LaurentPoly());
  });
}

void suite_dual(Cases& out, const ValidationOptions& o) {
  for (const auto& ex : shipped_examples()) {
    add(out, "dual", ex.name, "dl", [&](ValidationCase& c) {
      MotivicClass psi = dl_psi(ex, o);
      DualityCheck dc = duality_milnor_check(psi, ex.d, &ex.ctx);
      c.expected = "D(psi) = L^(1-d) psi";
      c.got = std::string("beta ") + (dc.indeterminate ? "unknown" : dc.beta_ok ? "ok" : "mismatch") + ", symbolic " +
              (dc.symbolic_ok ? (*dc.symbolic_ok ? "ok" : "mismatch") : "n/a");
      return pass_if(dc.passed());
    });
  }
  add(out, "dual", "x2y4.value", "dl", [&](ValidationCase& c) {
    MotivicClass psi = milnor_fibre(dl_zeta(example_x2y4().datum, Sign::Plus));
    MotivicClass d = dual_class(psi);
    c.expected = "L^-1 + 1";
    c.got = d.to_string();
    return pass_if(d == MotivicClass::scalar(lp("u^-1+1")));
  });
}

void suite_sphere(Cases& out, const ValidationOptions&) {
  for (const char* p : {"x^2+y^2", "x^2+y^4", "x^4+y^4"}) {
    add(out, "sphere", p, "wh", [&](ValidationCase& c) {
      MultiPoly f = parse_poly(p);
      SphereLinkCheck s = sphere_link_check(f, table_for(f));
      c.expected = "1 + u";
      c.got = s.beta.to_string() + (s.certified ? "" : " (uncertified)");
      return pass_if(s.passed && s.beta == lp("1+u"));
    });
  }
}

void suite_torus(Cases& out, const ValidationOptions&) {
  const HeightedSurface m = torus16();
  struct Row {
    const char* name;
    std::vector<const char*> levels;
    const char* expected;
    bool link;
  };
  // Critical values -3, -1, 1, 3.
  const std::vector<Row> rows{
      {"link.outside", {"-4", "4", "-7/2"}, "0", true},
      {"link.extremum", {"-3", "3"}, "u+1", true},
      {"link.outer_band", {"-2", "2", "-5/2"}, "2*u+2", true},
      {"link.saddle", {"-1", "1"}, "3*u+3", true},
      {"link.inner_band", {"0", "1/2", "-1/3"}, "4*u+4", true},
      {"fiber.outside", {"-4", "4", "-7/2"}, "0", false},
      {"fiber.extremum", {"-3", "3"}, "1", false},
      {"fiber.outer_band", {"-2", "2", "-5/2"}, "u+1", false},
      {"fiber.saddle", {"-1", "1"}, "u", false},
      {"fiber.inner_band", {"0", "1/2", "-1/3"}, "2*u+2", false},
  };
  for (const auto& r : rows) {
    add(out, "torus", r.name, "level_set", [&](ValidationCase& c) {
      LaurentPoly want = lp(r.expected);
      c.expected = want.to_string();
      bool ok = true;
      for (const char* s : r.levels) {
        LevelSetBeta b = level_set_beta(m, parse_rational(s));
        const LaurentPoly& got = r.link ? b.beta_link : b.beta;
        c.got += std::string(c.got.empty() ? "" : ", ") + "s=" + s + ": " + got.to_string();
        ok = ok && got == want;
      }
      return pass_if(ok);
    });
  }
}

ComplexPtr cplx(std::vector<Simplex> s) {
  return std::make_shared<const SimplicialComplex>(SimplicialComplex::from_simplices(s));
}

SimplicialMap hexagon_cover() {
  SimplicialMap h{cplx({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}), cplx({{0, 1}, {1, 2}, {0, 2}}), {}};
  for (int i = 0; i < 6; ++i) h.vertex_map[i] = i % 3;
  h.validate();
  return h;
}

void suite_cf(Cases& out, const ValidationOptions& o) {
  add(out, "cf", "dual_vertex", "cf", [&](ValidationCase& c) {
    auto k = cplx({{0, 1, 2}});
    ConstructibleFunction f{k, {}};
    f.set({1}, 1);
    c.expected = "1 at vertex 1";
    c.got = cf_dual(f) == f ? "1 at vertex 1" : "different";
    return pass_if(cf_dual(f) == f);
  });
  add(out, "cf", "dual_closed_triangle", "cf", [&](ValidationCase& c) {
    auto k = cplx({{0, 1, 2}});
    auto d = cf_dual(ConstructibleFunction::constant(k, 1));
    c.expected = "1 on the open triangle";
    c.got = std::to_string(d.values.size()) + " nonzero values";
    return pass_if(d.values.size() == 1 && d.at({0, 1, 2}) == 1);
  });
  add(out, "cf", "double_cover", "pi", [&](ValidationCase& c) {
    auto h = hexagon_cover();
    auto pi = pi_realize(h);
    c.expected = "2 on the circle";
    c.got = pi == ConstructibleFunction::constant(h.target, 2) ? "2 on the circle" : "different";
    bool ok = pi == ConstructibleFunction::constant(h.target, 2);
    for (int s : h.target->vertices()) ok = ok && local_link(h, s).chi_c == 4;
    c.notes = "local link chi_c 4 at every vertex";
    return pass_if(ok);
  });
  add(out, "cf", "random_identities", "cf", [&](ValidationCase& c) {
    std::mt19937_64 g(o.seed);
    int bad = 0;
    for (int t = 0; t < o.random_cases; ++t) {
      auto k = cfrandom::random_complex(g);
      auto phi = cfrandom::random_function(g, k);
      auto d = cf_dual(phi);
      auto l = cf_link(phi);
      bool ok = cf_dual(d) == phi && cf_link(l) == Integer(2) * l && cf_link(d) == cf_dual(l) &&
                cf_dual(l) == Integer(-1) * l && cf_integral(l) == 0;
      auto h = cfrandom::random_map_from(g, k);
      ok = ok && cf_pushforward(d, h) == cf_dual(cf_pushforward(phi, h));
      auto lpi = cf_link(pi_realize(h));
      for (int s : h.target->vertices()) ok = ok && lpi.at({s}) == local_link(h, s).chi_c;
      auto g2 = cfrandom::random_map_from(g, h.target);
      ok = ok && cf_pushforward(phi, compose(g2, h)) == cf_pushforward(cf_pushforward(phi, h), g2);
      if (!ok) ++bad;
    }
    c.expected = "0 failures";
    c.got = std::to_string(bad) + " failures in " + std::to_string(o.random_cases);
    c.notes = "D^2=id, L^2=2L, LD=DL=-L, integral of L = 0, push/dual, local link, functoriality";
    return pass_if(bad == 0);
  });
  add(out, "cf", "pi_multiplicative", "pi", [&](ValidationCase& c) {
    std::mt19937_64 g(o.seed + 1);
    int bad = 0, n = std::max(50, o.random_cases / 4);
    for (int t = 0; t < n; ++t) {
      auto s = cfrandom::random_complex(g, 12);
      auto h1 = cfrandom::random_map_to(g, s, 20);
      auto h2 = cfrandom::random_map_to(g, s, 20);
      if (!(pi_realize(fibered_product(h1, h2).projection) == pi_realize(h1) * pi_realize(h2))) ++bad;
    }
    c.expected = "0 failures";
    c.got = std::to_string(bad) + " failures in " + std::to_string(n);
    return pass_if(bad == 0);
  });
}

MotivicClass random_class(std::mt19937_64& g, const Context& ctx) {
  auto coeff = [&] {
    LaurentPoly p;
    int n = static_cast<int>(cfrandom::pick(g, 0, 3));
    for (int i = 0; i < n; ++i)
      p += LaurentPoly::monomial(cfrandom::pick(g, -6, 6), static_cast<int>(cfrandom::pick(g, -3, 3)));
    return p;
  };
  MotivicClass x = MotivicClass::scalar(coeff());
  for (const auto& [name, gen] : ctx.generators()) x = x + MotivicClass::of(gen, coeff());
  return x;
}

void suite_parity(Cases& out, const ValidationOptions& o) {
  add(out, "parity", "link_relative", "motivic", [&](ValidationCase& c) {
    Context ctx;
    for (int d = 0; d <= 3; ++d) {
      Generator gen;
      gen.name = "C" + std::to_string(d);
      gen.dim = d;
      gen.proper = gen.nonsingular = gen.compact = true;
      gen.beta = (LaurentPoly::u() + LaurentPoly(1)).pow(d);
      ctx.add_generator(gen);
    }
    std::mt19937_64 g(o.seed + 2);
    int bad = 0;
    for (int t = 0; t < o.random_cases; ++t)
      if (!euler_parity_check(link_relative(random_class(g, ctx)))) ++bad;
    c.expected = "0 odd outputs";
    c.got = std::to_string(bad) + " odd in " + std::to_string(o.random_cases);
    return pass_if(bad == 0);
  });
  add(out, "parity", "cf_link", "cf", [&](ValidationCase& c) {
    std::mt19937_64 g(o.seed + 3);
    int bad = 0, odd = 0;
    for (int t = 0; t < o.random_cases; ++t) {
      auto k = cfrandom::random_complex(g);
      auto l = cf_link(cfrandom::random_function(g, k));
      if (!cf_is_euler(l)) ++bad;
      for (const auto& [s, v] : l.values)
        if (mpz_odd_p(v.get_mpz_t())) {
          ++odd;
          break;
        }
    }
    c.expected = "every link output is Euler";
    c.got = std::to_string(bad) + " non-Euler in " + std::to_string(o.random_cases);
    c.notes = std::to_string(odd) + " outputs have an odd value; generic simplicial inputs are not algebraic";
    return pass_if(bad == 0);
  });
}

void suite_flags(Cases& out, const ValidationOptions&) {
  add(out, "flags", "corfib_sign", "dl", [&](ValidationCase& c) {
    const auto ex = example_x2y4();
    MotivicClass printed = milnor_fibre_printed(ex.datum, Sign::Plus);
    MotivicClass lim = milnor_fibre(dl_zeta(ex.datum, Sign::Plus));
    c.expected = lim.to_string() + " (minus the limit)";
    c.got = printed.to_string() + " (closed form with (L-1)^(|I|-1))";
    c.notes = "the printed closed form disagrees with the limit convention and with the worked examples";
    return printed == lim ? Verdict::Pass : Verdict::Flagged;
  });
  add(out, "flags", "x6_intermediate", "newton", [&](ValidationCase& c) {
    // Printed per-face terms, as beta values: -[y^6=1]/(L-1), -[x^2y^2+y^6=1], [x^2y^2=1], -[x^6+x^2y^2=1], -[x^6=1]/(L-1).
    MultiPoly f = parse_poly(example_x6().poly);
    auto table = table_for(f);
    const LaurentPoly curve = *beta_realize(torus_class(parse_poly("x^6+x^2*y^2"), SignTag::Plus, 2)).value;
    std::vector<LaurentPoly> printed{LaurentPoly(-2), -curve, lp("2*u-2"), -curve, LaurentPoly(-2)};
    ZetaSeries z = newton_zeta(f, table, Sign::Plus);
    std::vector<LaurentPoly> engine;
    for (const auto& s : z.summands) {
      ZetaSeries one{z.base, {s}};
      engine.push_back(*beta_realize(milnor_fibre(one)).value);
    }
    auto key = [](const LaurentPoly& p) { return p.to_string(); };
    auto sorted = [&](std::vector<LaurentPoly> v) {
      std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
      return v;
    };
    std::vector<LaurentPoly> negated;
    LaurentPoly total_printed, total_engine;
    for (const auto& p : printed) {
      negated.push_back(-p);
      total_printed += p;
    }
    for (const auto& p : engine) total_engine += p;
    c.expected = "per-face terms 2, -(u-3), 2u-2, -(u-3), 2 up to order; total " + total_printed.to_string();
    for (const auto& p : engine) c.got += (c.got.empty() ? "" : ", ") + p.to_string();
    c.got += "; total " + total_engine.to_string();
    c.notes = "printed intermediate terms are the terms of lim Z, i.e. of -psi; both totals are 0 (beta of the curve " +
              curve.to_string() + ")";
    if (sorted(engine) == sorted(printed)) return Verdict::Pass;
    bool explained = sorted(engine) == sorted(negated) && total_engine.is_zero() && total_printed.is_zero();
    return explained ? Verdict::Flagged : Verdict::Fail;
  });
  add(out, "flags", "link_dual_identity", "motivic", [&](ValidationCase& c) {
    Context ctx;
    Generator gen;
    gen.name = "C";
    gen.dim = 1;
    gen.proper = gen.nonsingular = gen.compact = true;
    gen.beta = lp("u+1");
    ctx.add_generator(gen);
    MotivicClass x = ctx.parse("[C]");
    MotivicClass lhs = link_relative(dual_class(x));
    MotivicClass rhs = dual_class(link_relative(x)).scaled(LaurentPoly::u());
    c.expected = "link(D x) = L D(link x)";
    c.got = lhs.to_string() + " vs " + rhs.to_string();
    MotivicClass ld_link = link_relative(x);
    bool derived = link_relative(link_relative(x)) == ld_link.scaled(2) &&
                   dual_class(ld_link).scaled(LaurentPoly::u()) == ld_link &&
                   link_relative(dual_class(x).scaled(LaurentPoly::u())) == ld_link;
    c.notes = std::string("fails on a compact curve; derivable identities ") + (derived ? "hold" : "FAIL");
    if (!derived) return Verdict::Fail;
    return lhs == rhs ? Verdict::Pass : Verdict::Flagged;
  });
}

}  // namespace

std::vector<ValidationCase> run_validation(const std::string& suite, const ValidationOptions& opts) {
  static const std::vector<std::pair<std::string, void (*)(Cases&, const ValidationOptions&)>> table{
      {"dl", suite_dl},         {"wh", suite_wh},       {"dual", suite_dual},   {"sphere", suite_sphere},
      {"torus", suite_torus},   {"cf", suite_cf},       {"parity", suite_parity}, {"flags", suite_flags}};
  Cases out;
  bool found = false;
  for (const auto& [name, fn] : table) {
    if (suite != "all" && suite != name) continue;
    found = true;
    fn(out, opts);
  }
  if (!found) fail(Errc::InvalidArgument, "unknown suite '" + suite + "'");
  return out;
}

}  // namespace realmot
