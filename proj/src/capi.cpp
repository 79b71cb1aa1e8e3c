#include <cstdlib>
#include <cstring>
#include <string>

#include "realmot/constructible.hpp"
#include "realmot/error.hpp"
#include "realmot/examples.hpp"
#include "realmot/io.hpp"
#include "realmot/realmot.h"
#include "realmot/validation.hpp"

using namespace realmot;

struct rm_poly {
  MultiPoly p;
};
struct rm_datum {
  Context ctx;
  ResolutionDatum datum;
  std::string poly;
  int d = 2;
};
struct rm_table {
  TorusClassTable t;
};
struct rm_series {
  ZetaSeries z;
};
struct rm_complex {
  ComplexPtr k;
};
struct rm_cfun {
  ConstructibleFunction f;
};
struct rm_map {
  SimplicialMap h;
};
struct rm_surface {
  HeightedSurface m;
};

namespace {

thread_local std::string last_error;

template <class F>
rm_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return RM_OK;
  } catch (const Error& e) {
    last_error = std::string(errc_name(e.code())) + ": " + e.what();
    return static_cast<rm_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    last_error = "Internal: out of memory";
    return RM_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = std::string("Internal: ") + e.what();
    return RM_E_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) { *out = dup(j.dump(2)); }

Sign to_sign(rm_sign s) { return s == RM_SIGN_MINUS ? Sign::Minus : Sign::Plus; }

rm_options defaults(const rm_options* o) { return o ? *o : rm_options{0, 0, 0}; }

NewtonConfig config(const rm_options& o) {
  NewtonConfig cfg;
  cfg.qsigma = o.qsigma_all_gens ? QSigma::AllGens : QSigma::PositiveGens;
  cfg.assume_nondegenerate = o.assume_nondegenerate != 0;
  return cfg;
}

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

TorusClassTable table_or_computed(const MultiPoly& f, const rm_table* t) {
  if (t) return t->t;
  return compute_torus_table(f, newton_polyhedron(f.support(), f.dim()));
}

}  // namespace

extern "C" {

const char* rm_version(void) { return "1.0.0"; }
const char* rm_last_error(void) { return last_error.c_str(); }

const char* rm_status_name(rm_status s) {
  if (s == RM_OK) return "OK";
  if (s == RM_E_NULL_ARGUMENT) return "NullArgument";
  if (s >= RM_E_PARSE && s <= RM_E_INTERNAL) return errc_name(static_cast<Errc>(static_cast<int>(s)));
  return "Unknown";
}

void rm_string_free(char* s) { std::free(s); }

rm_status rm_poly_parse(const char* text, rm_poly** out) {
  if (!text || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] { *out = new rm_poly{parse_poly(text)}; });
}

rm_status rm_poly_to_string(const rm_poly* p, char** out) {
  if (!p || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] { *out = dup(p->p.to_string()); });
}

void rm_poly_free(rm_poly* p) { delete p; }

rm_status rm_datum_from_json(const char* json, rm_datum** out) {
  if (!json || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] {
    Json j = parse_json(json);
    auto d = std::make_unique<rm_datum>();
    d->ctx = context_from_json(j);
    d->datum = datum_from_json(j, d->ctx);
    if (j.contains("poly") && j.at("poly").is_string()) d->poly = j.at("poly").get<std::string>();
    if (j.contains("d")) {
      if (!j.at("d").is_number_integer() || j.at("d").get<int>() < 1) fail(Errc::Parse, "d must be a positive integer");
      d->d = j.at("d").get<int>();
    } else if (!d->poly.empty()) {
      d->d = static_cast<int>(parse_poly(d->poly).dim());
    }
    *out = d.release();
  });
}

rm_status rm_datum_example(const char* name, rm_datum** out) {
  if (!name || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] {
    for (auto& e : shipped_examples()) {
      if (e.name != name) continue;
      *out = new rm_datum{std::move(e.ctx), std::move(e.datum), e.poly, e.d};
      return;
    }
    fail(Errc::InvalidArgument, std::string("unknown example '") + name + "'");
  });
}

rm_status rm_datum_poly(const rm_datum* d, char** out) {
  if (!d || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] { *out = dup(d->poly); });
}

void rm_datum_free(rm_datum* d) { delete d; }

rm_status rm_table_compute(const rm_poly* f, rm_table** out) {
  if (!f || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] { *out = new rm_table{table_or_computed(f->p, nullptr)}; });
}

rm_status rm_table_from_json(const rm_poly* f, const char* json, rm_table** out) {
  if (!f || !json || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] {
    auto np = newton_polyhedron(f->p.support(), f->p.dim());
    *out = new rm_table{table_from_json(parse_json(json), np)};
  });
}

rm_status rm_table_to_json(const rm_table* t, char** out) {
  if (!t || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] { emit(table_to_json(t->t), out); });
}

void rm_table_free(rm_table* t) { delete t; }

rm_status rm_zeta_dl(const rm_datum* d, rm_sign sign, rm_series** out) {
  if (!d || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] { *out = new rm_series{dl_zeta(d->datum, to_sign(sign))}; });
}

rm_status rm_zeta_newton(const rm_poly* f, const rm_table* table, rm_sign sign, const rm_options* opt,
                         rm_series** out) {
  if (!f || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] {
    *out = new rm_series{newton_zeta(f->p, table_or_computed(f->p, table), to_sign(sign), config(defaults(opt)))};
  });
}

rm_status rm_series_to_json(const rm_series* z, char** out) {
  if (!z || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] { emit(series_to_json(z->z), out); });
}

rm_status rm_series_expand_json(const rm_series* z, int n, char** out) {
  if (!z || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] {
    if (n < 0 || n > 200) fail(Errc::InvalidArgument, "expansion order must be in 0..200");
    Json coeffs = Json::array();
    for (const auto& c : expand_series(z->z, n)) coeffs.push_back(c.to_string());
    MotivicClass lim = limit_at_infinity(z->z);
    emit({{"closed_form", z->z.to_string()}, {"coefficients", coeffs}, {"limit", lim.to_string()},
          {"psi", milnor_fibre(z->z).to_string()}},
         out);
  });
}

void rm_series_free(rm_series* z) { delete z; }

rm_status rm_milnor_json(const char* method, const rm_poly* f, const rm_datum* d, const rm_table* table,
                         rm_sign sign, const rm_options* opt, char** out) {
  if (!method || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] {
    const rm_options o = defaults(opt);
    const std::string m = method;
    MotivicClass psi;
    const Context* ctx = nullptr;
    int dim = 0;
    Json notes = Json::array();
    if (m == "dl") {
      if (!d) fail(Errc::InvalidArgument, "method dl needs a resolution datum");
      if (o.corfib_printed) {
        psi = milnor_fibre_printed(d->datum, to_sign(sign));
        notes.push_back("closed form with the printed coefficient (L-1)^(|I|-1); the limit convention gives (1-L)^(|I|-1)");
      } else {
        psi = milnor_fibre(dl_zeta(d->datum, to_sign(sign)));
      }
      ctx = &d->ctx;
      dim = f ? static_cast<int>(f->p.dim()) : d->d;
    } else if (m == "newton" || m == "wh") {
      if (!f) fail(Errc::InvalidArgument, "method " + m + " needs a polynomial");
      TorusClassTable t = table_or_computed(f->p, table);
      notes.push_back(std::string("table=") + (table ? "user" : "computed"));
      if (m == "newton") {
        psi = milnor_fibre(newton_zeta(f->p, t, to_sign(sign), config(o)));
        notes.push_back(std::string("qsigma=") + (o.qsigma_all_gens ? "all-gens" : "positive-gens"));
      } else {
        psi = wh_milnor(f->p, t, to_sign(sign), o.assume_nondegenerate != 0);
      }
      dim = static_cast<int>(f->p.dim());
    } else {
      fail(Errc::InvalidArgument, "unknown method '" + m + "' (dl, newton, wh)");
    }
    BetaResult b = beta_realize(psi);
    Json j = {{"method", m}, {"sign", sign_name(to_sign(sign))}, {"psi", psi.to_string()}, {"beta", beta_to_json(b)}};
    if (!b.known()) j["beta_unknown"] = b.unknown;
    try {
      j["dual"] = dual_class(ctx ? ctx->expand(psi) : psi).to_string();
    } catch (const Error&) {
      j["dual"] = nullptr;
    }
    DualityCheck dc = duality_milnor_check(psi, dim, ctx);
    Json dj = {{"d", dim}, {"passed", dc.passed()}, {"indeterminate", dc.indeterminate}, {"beta_ok", dc.beta_ok}};
    dj["symbolic_ok"] = dc.symbolic_ok ? Json(*dc.symbolic_ok) : Json(nullptr);
    j["duality"] = dj;
    j["notes"] = notes;
    emit(j, out);
  });
}

rm_status rm_cross_validate_json(const rm_poly* f, const rm_datum* d, const rm_table* table, rm_sign sign,
                                 const rm_options* opt, char** out) {
  if (!f || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] {
    std::optional<ResolutionDatum> res;
    if (d) res = d->datum;
    std::optional<TorusClassTable> t;
    if (table) t = table->t;
    emit(report_to_json(cross_validate(f->p, res, t, to_sign(sign), config(defaults(opt)))), out);
  });
}

rm_status rm_newton_fan_json(const rm_poly* f, char** out) {
  if (!f || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] {
    auto np = newton_polyhedron(f->p.support(), f->p.dim());
    emit(fan_to_json(np, dual_fan(np)), out);
  });
}

rm_status rm_sphere_link_json(const rm_poly* f, const rm_table* table, int assume, char** out) {
  if (!f || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] {
    SphereLinkCheck s = sphere_link_check(f->p, table_or_computed(f->p, table), assume != 0);
    LaurentPoly want = LaurentPoly(1) + LaurentPoly::monomial(1, static_cast<int>(f->p.dim()) - 1);
    emit({{"beta", s.beta.to_string()}, {"expected", want.to_string()}, {"certified", s.certified}, {"passed", s.passed}},
         out);
  });
}

rm_status rm_complex_from_json(const char* json, rm_complex** out) {
  if (!json || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] { *out = new rm_complex{complex_from_json(parse_json(json))}; });
}

void rm_complex_free(rm_complex* k) { delete k; }

rm_status rm_cfun_from_json(const rm_complex* k, const char* json, rm_cfun** out) {
  if (!k || !json || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] { *out = new rm_cfun{function_from_json(parse_json(json), k->k)}; });
}

rm_status rm_cfun_constant(const rm_complex* k, long value, rm_cfun** out) {
  if (!k || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] { *out = new rm_cfun{ConstructibleFunction::constant(k->k, Integer(value))}; });
}

void rm_cfun_free(rm_cfun* f) { delete f; }

rm_status rm_map_from_json(const char* json, rm_map** out) {
  if (!json || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] {
    Json j = parse_json(json);
    if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("map"))
      fail(Errc::Parse, "map JSON needs source, target and map");
    auto src = complex_from_json(j.at("source"));
    auto tgt = complex_from_json(j.at("target"));
    *out = new rm_map{map_from_json(j.at("map"), src, tgt)};
  });
}

rm_status rm_map_source(const rm_map* h, rm_complex** out) {
  if (!h || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] { *out = new rm_complex{h->h.source}; });
}

rm_status rm_map_target(const rm_map* h, rm_complex** out) {
  if (!h || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] { *out = new rm_complex{h->h.target}; });
}

void rm_map_free(rm_map* h) { delete h; }

rm_status rm_cf_apply_json(const char* op, const rm_cfun* fn, const rm_map* h, int at, char** out) {
  if (!op || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] {
    const std::string o = op;
    auto need_fn = [&] {
      if (!fn) fail(Errc::InvalidArgument, "operation " + o + " needs a function");
      return fn->f;
    };
    auto need_map = [&] {
      if (!h) fail(Errc::InvalidArgument, "operation " + o + " needs a map");
      return h->h;
    };
    auto on = [&](const ConstructibleFunction& f, const ComplexPtr& k, const char* where) {
      if (f.complex->simplices() != k->simplices())
        fail(Errc::InvalidArgument, std::string("function must live on the map ") + where);
    };
    Json j = {{"op", o}};
    if (o == "integrate") {
      j["value"] = integer_json(cf_integral(need_fn()));
    } else if (o == "dual") {
      j["result"] = function_to_json(cf_dual(need_fn()));
    } else if (o == "link") {
      j["result"] = function_to_json(cf_link(need_fn()));
    } else if (o == "euler") {
      ConstructibleFunction f = need_fn();
      j["euler"] = cf_is_euler(f);
      j["link"] = function_to_json(cf_link(f));
    } else if (o == "push") {
      SimplicialMap m = need_map();
      ConstructibleFunction f = need_fn();
      on(f, m.source, "source");
      j["result"] = function_to_json(cf_pushforward(f, m));
    } else if (o == "pull") {
      SimplicialMap m = need_map();
      ConstructibleFunction f = need_fn();
      on(f, m.target, "target");
      j["result"] = function_to_json(cf_pullback(f, m));
    } else if (o == "pi") {
      j["result"] = function_to_json(pi_realize(need_map()));
    } else if (o == "locallink") {
      SimplicialMap m = need_map();
      LocalLink ll = local_link(m, at);
      j["at"] = at;
      j["chi_c"] = integer_json(ll.chi_c);
      j["cells"] = ll.cells;
      j["link_of_pi"] = integer_json(cf_link(pi_realize(m)).at({at}));
    } else {
      fail(Errc::InvalidArgument, "unknown op '" + o + "'");
    }
    emit(j, out);
  });
}

rm_status rm_surface_from_json(const char* json, rm_surface** out) {
  if (!json || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] { *out = new rm_surface{surface_from_json(parse_json(json))}; });
}

rm_status rm_surface_torus(rm_surface** out) {
  if (!out) return RM_E_NULL_ARGUMENT;
  return guard([&] { *out = new rm_surface{torus16()}; });
}

rm_status rm_level_set_json(const rm_surface* m, const char* level, char** out) {
  if (!m || !level || !out) return RM_E_NULL_ARGUMENT;
  return guard([&] {
    Rational s = parse_rational(level);
    LevelSetBeta b = level_set_beta(m->m, s);
    emit({{"level", s.get_str()},
          {"beta", b.beta.to_string()},
          {"beta_link", b.beta_link.to_string()},
          {"nodes", b.nodes},
          {"edges", b.edges},
          {"crossings", b.crossings}},
         out);
  });
}

void rm_surface_free(rm_surface* m) { delete m; }

rm_status rm_validate_json(const char* suite, const rm_options* opt, char** out, int* n_fail) {
  if (!suite || !out || !n_fail) return RM_E_NULL_ARGUMENT;
  return guard([&] {
    const rm_options o = defaults(opt);
    ValidationOptions vo;
    vo.corfib_printed = o.corfib_printed != 0;
    vo.qsigma = o.qsigma_all_gens ? QSigma::AllGens : QSigma::PositiveGens;
    auto cases = run_validation(suite, vo);
    Json arr = Json::array();
    int pass = 0, failc = 0, flagged = 0;
    for (const auto& c : cases) {
      arr.push_back({{"suite", c.suite},
                     {"name", c.name},
                     {"routes", c.routes},
                     {"expected", c.expected},
                     {"got", c.got},
                     {"verdict", verdict_name(c.verdict)},
                     {"notes", c.notes}});
      (c.verdict == Verdict::Pass ? pass : c.verdict == Verdict::Fail ? failc : flagged)++;
    }
    *n_fail = failc;
    emit({{"suite", suite}, {"cases", arr}, {"summary", {{"pass", pass}, {"fail", failc}, {"flagged", flagged}}}}, out);
  });
}

}  // extern "C"
