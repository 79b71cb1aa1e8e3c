#include "realmot/io.hpp"

#include <sstream>

#include "realmot/error.hpp"

namespace realmot {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(Errc::Parse, std::string("missing key '") + key + "'");
  return j.at(key);
}

std::string str(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(Errc::Parse, std::string(what) + " must be a string");
}

long long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(Errc::Parse, std::string(what) + " must be an integer");
  return j.get<long long>();
}

// nlohmann type errors become parse errors.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    fail(Errc::Parse, e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(Errc::Parse, e.what());
  }
}

Context context_from_json(const Json& j) {
  return guarded([&] {
    Context ctx;
    if (j.contains("generators")) {
      for (const auto& g : j.at("generators")) {
        Generator gen;
        gen.name = str(need(g, "name"), "generator name");
        gen.dim = static_cast<int>(integer(need(g, "dim"), "dim"));
        gen.base = g.contains("base") ? str(g.at("base"), "base") : "pt";
        gen.proper = g.value("proper", false);
        gen.nonsingular = g.value("nonsingular", false);
        gen.compact = g.value("compact", false);
        if (g.contains("beta") && !g.at("beta").is_null()) gen.beta = LaurentPoly::parse(str(g.at("beta"), "beta"));
        if (g.contains("equals")) gen.equals = str(g.at("equals"), "equals");
        ctx.add_generator(gen);
      }
    }
    if (j.contains("morphisms")) {
      for (const auto& m : j.at("morphisms"))
        ctx.add_morphism({str(need(m, "source"), "source"), str(need(m, "target"), "target"), m.value("proper", false)});
    }
    return ctx;
  });
}

Json context_to_json(const Context& ctx) {
  Json gens = Json::array();
  for (const auto& [name, g] : ctx.generators()) {
    Json x = {{"name", g->name}, {"dim", g->dim},          {"base", g->base},
              {"proper", g->proper}, {"nonsingular", g->nonsingular}, {"compact", g->compact}};
    if (g->beta) x["beta"] = g->beta->to_string();
    if (g->equals) x["equals"] = *g->equals;
    gens.push_back(x);
  }
  Json morphs = Json::array();
  for (const auto& m : ctx.morphisms()) morphs.push_back({{"source", m.source}, {"target", m.target}, {"proper", m.proper}});
  return {{"generators", gens}, {"morphisms", morphs}};
}

ResolutionDatum datum_from_json(const Json& j, const Context& ctx) {
  return guarded([&] {
    ResolutionDatum r;
    r.base = j.contains("base") ? str(j.at("base"), "base") : "pt";
    for (const auto& c : need(j, "components"))
      r.components.push_back({str(need(c, "id"), "component id"), integer(need(c, "N"), "N"), integer(need(c, "nu"), "nu")});
    for (const auto& s : need(j, "strata")) {
      Stratum st;
      for (const auto& i : need(s, "I")) st.I.push_back(str(i, "stratum index"));
      if (s.contains("plus")) st.plus = ctx.parse(str(s.at("plus"), "plus"), r.base);
      if (s.contains("minus")) st.minus = ctx.parse(str(s.at("minus"), "minus"), r.base);
      if (s.contains("unsigned")) st.unsigned_class = ctx.parse(str(s.at("unsigned"), "unsigned"), r.base);
      r.strata.push_back(std::move(st));
    }
    r.validate();
    return r;
  });
}

Json datum_to_json(const ResolutionDatum& r) {
  Json comps = Json::array();
  for (const auto& c : r.components) comps.push_back({{"id", c.id}, {"N", c.N}, {"nu", c.nu}});
  Json strata = Json::array();
  for (const auto& s : r.strata) {
    Json x = {{"I", s.I}};
    if (s.plus) x["plus"] = s.plus->to_string();
    if (s.minus) x["minus"] = s.minus->to_string();
    if (s.unsigned_class) x["unsigned"] = s.unsigned_class->to_string();
    strata.push_back(x);
  }
  return {{"base", r.base}, {"components", comps}, {"strata", strata}};
}

TorusClassTable table_from_json(const Json& j, const NewtonPolyhedron& np) {
  return guarded([&] {
    if (!j.is_object()) fail(Errc::Parse, "torus table must be an object");
    TorusClassTable t;
    t.provenance = TableProvenance::User;
    Context empty;
    for (const auto& [key, val] : j.items()) {
      std::istringstream in(key);
      std::string head, id, tag;
      if (!std::getline(in, head, ':') || !std::getline(in, id, ':') || !std::getline(in, tag) || head != "face")
        fail(Errc::Parse, "bad table key '" + key + "'");
      SignTag st = tag == "plus" ? SignTag::Plus : tag == "minus" ? SignTag::Minus : tag == "zero" ? SignTag::Zero
                   : throw Error(Errc::Parse, "bad sign tag '" + tag + "'");
      std::size_t face = 0;
      try {
        face = std::stoul(id);
      } catch (const std::exception&) {
        fail(Errc::Parse, "bad face id '" + id + "'");
      }
      t.entries[{face, st}] = empty.parse(str(val, "table entry"), "pt");
    }
    t.validate(np);
    return t;
  });
}

Json table_to_json(const TorusClassTable& t) {
  Json j = Json::object();
  for (const auto& [key, cls] : t.entries)
    j["face:" + std::to_string(key.first) + ":" +
      (key.second == SignTag::Plus ? "plus" : key.second == SignTag::Minus ? "minus" : "zero")] = cls.to_string();
  return j;
}

Json fan_to_json(const NewtonPolyhedron& np, const DualFan& fan) {
  Json faces = Json::array();
  for (const auto& f : np.compact_faces)
    faces.push_back({{"id", f.id}, {"dim", f.dim_face}, {"points", f.support_points}, {"hyperplane_axes", f.hyperplane_axes}});
  Json cones = Json::array();
  for (const auto& e : fan.entries)
    cones.push_back({{"face_id", e.face.id},
                     {"gens", e.cone.generators},
                     {"simplicial", e.cone.simplicial},
                     {"v_gens", e.cone.v_gens},
                     {"p_gens", e.cone.p_gens}});
  return {{"faces", faces}, {"cones", cones}};
}

Json series_to_json(const ZetaSeries& z) {
  Json summands = Json::array();
  for (const auto& s : z.summands) {
    Json blocks = Json::array();
    for (const auto& b : s.blocks) {
      if (const auto* g = std::get_if<GeomBlock>(&b)) {
        blocks.push_back({{"kind", "geom"}, {"a", g->a}, {"k", g->k}, {"l", g->l}});
      } else {
        const auto& p = std::get<PipedBlock>(b);
        Json lat = Json::array(), den = Json::array();
        for (const auto& t : p.lattice) lat.push_back({t.s, t.m});
        for (const auto& t : p.denominators) den.push_back({t.s, t.m});
        blocks.push_back({{"kind", "piped"}, {"lattice", lat}, {"denominators", den}});
      }
    }
    summands.push_back({{"coeff", s.coeff.to_string()}, {"blocks", blocks}});
  }
  return {{"base", z.base}, {"closed_form", z.to_string()}, {"summands", summands}};
}

Json beta_to_json(const BetaResult& b) {
  if (b.known()) return b.value->to_string();
  return nullptr;
}

Json report_to_json(const ValidationReport& r) {
  Json routes = Json::object(), beta = Json::object(), unavailable = Json::object();
  for (const auto& rr : r.routes) {
    routes[rr.route] = rr.psi.to_string();
    beta[rr.route] = beta_to_json(rr.beta);
  }
  for (const auto& u : r.unavailable) {
    // Entries read "route: reason".
    auto colon = u.find(": ");
    if (colon == std::string::npos) unavailable[u] = "";
    else unavailable[u.substr(0, colon)] = u.substr(colon + 2);
  }
  return {{"sign", sign_name(r.sign)}, {"routes", routes},        {"beta", beta},
          {"unavailable", unavailable}, {"verdict", r.verdict}, {"flags", r.flags}};
}

std::string simplex_key(const Simplex& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

Simplex simplex_from_key(const std::string& key) {
  Simplex s;
  std::istringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      s.push_back(std::stoi(part, &used));
      if (part.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      fail(Errc::Parse, "bad simplex key '" + key + "'");
    }
  }
  if (s.empty()) fail(Errc::Parse, "empty simplex key");
  return normalize_simplex(s);
}

ComplexPtr complex_from_json(const Json& j) {
  return guarded([&] {
    std::vector<Simplex> simplices;
    for (const auto& s : need(j, "simplices")) simplices.push_back(s.get<Simplex>());
    std::vector<int> extra;
    if (j.contains("vertices")) extra = j.at("vertices").get<std::vector<int>>();
    return std::make_shared<const SimplicialComplex>(SimplicialComplex::from_simplices(simplices, extra));
  });
}

Json complex_to_json(const SimplicialComplex& k) {
  Json simplices = Json::array();
  for (const auto& s : k.simplices())
    if (s.size() > 1) simplices.push_back(s);
  return {{"vertices", k.vertices()}, {"simplices", simplices}};
}

ConstructibleFunction function_from_json(const Json& j, ComplexPtr k) {
  return guarded([&] {
    if (j.contains("constant")) return ConstructibleFunction::constant(k, Z(integer(j.at("constant"), "constant")));
    ConstructibleFunction f{k, {}};
    for (const auto& [key, v] : need(j, "values").items()) {
      Simplex s = simplex_from_key(key);
      if (!k->contains(s)) fail(Errc::InvalidArgument, "simplex " + key + " is not in the complex");
      f.set(s, f.at(s) + Integer(v.is_string() ? v.get<std::string>() : std::to_string(integer(v, "value"))));
    }
    return f;
  });
}

Json function_to_json(const ConstructibleFunction& f) {
  Json values = Json::object();
  for (const auto& [s, v] : f.values) {
    if (v.fits_slong_p()) values[simplex_key(s)] = v.get_si();
    else values[simplex_key(s)] = v.get_str();
  }
  return {{"values", values}};
}

SimplicialMap map_from_json(const Json& j, ComplexPtr source, ComplexPtr target) {
  return guarded([&] {
    const Json& m = j.contains("map") ? j.at("map") : j;
    SimplicialMap h{std::move(source), std::move(target), {}};
    for (const auto& [key, v] : m.items()) h.vertex_map[simplex_from_key(key).at(0)] = static_cast<int>(integer(v, "image"));
    for (int v : h.source->vertices())
      if (!h.vertex_map.count(v)) fail(Errc::InvalidArgument, "vertex " + std::to_string(v) + " has no image");
    h.validate();
    return h;
  });
}

Json map_to_json(const SimplicialMap& h) {
  Json m = Json::object();
  for (const auto& [v, w] : h.vertex_map) m[std::to_string(v)] = w;
  return m;
}

HeightedSurface surface_from_json(const Json& j) {
  return guarded([&] {
    HeightedSurface m;
    m.complex = complex_from_json(j);
    for (const auto& [key, v] : need(j, "heights").items())
      m.heights[simplex_from_key(key).at(0)] = parse_rational(str(v, "height"));
    m.validate();
    return m;
  });
}

Json surface_to_json(const HeightedSurface& m) {
  Json j = complex_to_json(*m.complex);
  Json h = Json::object();
  for (const auto& [v, x] : m.heights) h[std::to_string(v)] = x.get_str();
  j["heights"] = h;
  return j;
}

}  // namespace realmot
