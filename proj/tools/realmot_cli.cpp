// Command-line front end. Talks to the engine only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "realmot/realmot.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kValidationFail = 1;
constexpr int kInputError = 2;

// Thrown on any engine or input error; carries the machine-readable name.
struct CliError {
  std::string name;
  std::string message;
};

void check(rm_status s) {
  if (s == RM_OK) return;
  std::string msg = rm_last_error();
  std::string prefix = std::string(rm_status_name(s)) + ": ";
  if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
  throw CliError{rm_status_name(s), msg};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{"InvalidArgument", "cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string take(char* s) {
  std::string out = s ? s : "";
  rm_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};

using Poly = Handle<rm_poly, rm_poly_free>;
using Datum = Handle<rm_datum, rm_datum_free>;
using Table = Handle<rm_table, rm_table_free>;
using Series = Handle<rm_series, rm_series_free>;
using Complex = Handle<rm_complex, rm_complex_free>;
using Cfun = Handle<rm_cfun, rm_cfun_free>;
using Map = Handle<rm_map, rm_map_free>;
using Surface = Handle<rm_surface, rm_surface_free>;

struct Globals {
  bool json = false;
  std::string qsigma = "positive-gens";
  std::string corfib = "derived";
  bool assume = false;

  rm_options options() const {
    return rm_options{qsigma == "all-gens" ? 1 : 0, assume ? 1 : 0, corfib == "printed" ? 1 : 0};
  }
};

rm_sign parse_sign(const std::string& s) {
  if (s == "plus" || s == "+") return RM_SIGN_PLUS;
  if (s == "minus" || s == "-") return RM_SIGN_MINUS;
  throw CliError{"InvalidArgument", "sign must be plus or minus"};
}

std::string show(const Json& v) { return v.is_null() ? "unknown" : v.get<std::string>(); }

void print_json(const std::string& text) { std::cout << text << "\n"; }

int cmd_milnor(const Globals& g, const std::string& poly_text, const std::string& method, const std::string& datum_path,
               const std::string& table_path, const std::string& sign_text) {
  Datum datum;
  if (!datum_path.empty()) check(rm_datum_from_json(read_file(datum_path).c_str(), datum.out()));
  std::string text = poly_text;
  if (text.empty() && datum.get()) {
    char* s = nullptr;
    check(rm_datum_poly(datum.get(), &s));
    text = take(s);
  }
  Poly f;
  if (!text.empty()) check(rm_poly_parse(text.c_str(), f.out()));
  Table table;
  if (!table_path.empty()) {
    if (!f.get()) throw CliError{"InvalidArgument", "--table needs --poly"};
    check(rm_table_from_json(f.get(), read_file(table_path).c_str(), table.out()));
  }
  const rm_options opt = g.options();
  const rm_sign sign = parse_sign(sign_text);
  char* out = nullptr;
  if (method == "all") {
    if (!f.get()) throw CliError{"InvalidArgument", "--method all needs --poly"};
    check(rm_cross_validate_json(f.get(), datum.get(), table.get(), sign, &opt, &out));
    std::string s = take(out);
    Json r = Json::parse(s);
    if (g.json) {
      print_json(s);
    } else {
      for (const auto& [route, psi] : r["routes"].items())
        std::cout << route << ": psi = " << psi.get<std::string>() << ", beta = " << show(r["beta"][route]) << "\n";
      for (const auto& [route, why] : r["unavailable"].items())
        std::cout << route << ": unavailable (" << why.get<std::string>() << ")\n";
      std::cout << "verdict: " << r["verdict"].get<std::string>() << "\n";
      for (const auto& fl : r["flags"]) std::cout << "flag: " << fl.get<std::string>() << "\n";
    }
    return r["verdict"] == "DISAGREE" ? kValidationFail : kOk;
  }
  if (method != "dl" && !f.get()) throw CliError{"InvalidArgument", "--method " + method + " needs --poly"};
  check(rm_milnor_json(method.c_str(), f.get(), datum.get(), table.get(), sign, &opt, &out));
  std::string s = take(out);
  if (g.json) {
    print_json(s);
    return kOk;
  }
  Json r = Json::parse(s);
  std::cout << "psi = " << r["psi"].get<std::string>() << "\n";
  std::cout << "beta = " << show(r["beta"]) << "\n";
  if (!r["dual"].is_null()) std::cout << "dual = " << r["dual"].get<std::string>() << "\n";
  const auto& d = r["duality"];
  std::cout << "duality (d=" << d["d"].get<int>() << "): "
            << (d["indeterminate"].get<bool>() ? "indeterminate" : d["passed"].get<bool>() ? "ok" : "FAILED") << "\n";
  for (const auto& n : r["notes"]) std::cout << "note: " << n.get<std::string>() << "\n";
  return kOk;
}

int cmd_zeta(const Globals& g, const std::string& datum_path, const std::string& poly_text, const std::string& sign_text,
             int expand) {
  Series z;
  const rm_sign sign = parse_sign(sign_text);
  if (!datum_path.empty()) {
    Datum d;
    check(rm_datum_from_json(read_file(datum_path).c_str(), d.out()));
    check(rm_zeta_dl(d.get(), sign, z.out()));
  } else if (!poly_text.empty()) {
    Poly f;
    check(rm_poly_parse(poly_text.c_str(), f.out()));
    const rm_options opt = g.options();
    check(rm_zeta_newton(f.get(), nullptr, sign, &opt, z.out()));
  } else {
    throw CliError{"InvalidArgument", "zeta needs --datum or --poly"};
  }
  char* out = nullptr;
  check(rm_series_expand_json(z.get(), expand, &out));
  Json r = Json::parse(take(out));
  if (g.json) {
    check(rm_series_to_json(z.get(), &out));
    Json full = Json::parse(take(out));
    full["coefficients"] = r["coefficients"];
    full["limit"] = r["limit"];
    full["psi"] = r["psi"];
    print_json(full.dump(2));
    return kOk;
  }
  std::cout << "Z = " << r["closed_form"].get<std::string>() << "\n";
  int k = 1;
  for (const auto& c : r["coefficients"]) std::cout << "T^" << k++ << ": " << c.get<std::string>() << "\n";
  std::cout << "limit = " << r["limit"].get<std::string>() << "\n";
  std::cout << "psi = " << r["psi"].get<std::string>() << "\n";
  return kOk;
}

std::string points(const Json& a) {
  std::string s;
  for (const auto& p : a) {
    s += s.empty() ? "" : " ";
    s += "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i].get<long long>());
    s += ")";
  }
  return s;
}

int cmd_newton(const Globals& g, const std::string& poly_text) {
  Poly f;
  check(rm_poly_parse(poly_text.c_str(), f.out()));
  char* out = nullptr;
  check(rm_newton_fan_json(f.get(), &out));
  std::string s = take(out);
  if (g.json) {
    print_json(s);
    return kOk;
  }
  Json r = Json::parse(s);
  for (const auto& face : r["faces"]) std::cout << "face " << face["id"] << ": " << points(face["points"]) << "\n";
  for (const auto& c : r["cones"])
    std::cout << "cone of face " << c["face_id"] << ": " << points(c["gens"])
              << (c["simplicial"].get<bool>() ? "" : " (not simplicial)") << "\n";
  return kOk;
}

int cmd_cf(const std::string& complex_path, const std::string& fn_path, const std::string& op,
           const std::string& map_path, int at) {
  Map h;
  if (!map_path.empty()) check(rm_map_from_json(read_file(map_path).c_str(), h.out()));
  Complex k;
  if (!complex_path.empty()) {
    check(rm_complex_from_json(read_file(complex_path).c_str(), k.out()));
  } else if (h.get()) {
    if (op == "pull") check(rm_map_target(h.get(), k.out()));
    else check(rm_map_source(h.get(), k.out()));
  }
  Cfun fn;
  if (k.get()) {
    if (!fn_path.empty()) check(rm_cfun_from_json(k.get(), read_file(fn_path).c_str(), fn.out()));
    else check(rm_cfun_constant(k.get(), 1, fn.out()));
  } else if (op != "pi" && op != "locallink") {
    throw CliError{"InvalidArgument", "cf needs --complex or --map"};
  }
  char* out = nullptr;
  check(rm_cf_apply_json(op.c_str(), fn.get(), h.get(), at, &out));
  print_json(take(out));
  return kOk;
}

int cmd_link(const Globals& g, const std::string& surface_path, const std::vector<std::string>& levels) {
  Surface m;
  if (surface_path.empty() || surface_path == "torus") check(rm_surface_torus(m.out()));
  else check(rm_surface_from_json(read_file(surface_path).c_str(), m.out()));
  Json all = Json::array();
  for (const auto& s : levels) {
    char* out = nullptr;
    check(rm_level_set_json(m.get(), s.c_str(), &out));
    Json r = Json::parse(take(out));
    if (!g.json)
      std::cout << "s = " << r["level"].get<std::string>() << ": beta = " << r["beta"].get<std::string>()
                << ", beta_link = " << r["beta_link"].get<std::string>() << "\n";
    all.push_back(r);
  }
  if (g.json) print_json(all.dump(2));
  return kOk;
}

int cmd_validate(const Globals& g, const std::string& suite) {
  const rm_options opt = g.options();
  char* out = nullptr;
  int fails = 0;
  check(rm_validate_json(suite.c_str(), &opt, &out, &fails));
  std::string s = take(out);
  if (g.json) {
    print_json(s);
  } else {
    Json r = Json::parse(s);
    for (const auto& c : r["cases"]) {
      std::string v = c["verdict"].get<std::string>();
      std::printf("%-8s %-28s expected %s | got %s\n", v.c_str(),
                  (c["suite"].get<std::string>() + "/" + c["name"].get<std::string>()).c_str(),
                  c["expected"].get<std::string>().c_str(), c["got"].get<std::string>().c_str());
      if (!c["notes"].get<std::string>().empty() && v != "PASS")
        std::printf("         note: %s\n", c["notes"].get<std::string>().c_str());
    }
    const auto& sum = r["summary"];
    std::printf("%d PASS, %d FAIL, %d FLAGGED\n", sum["pass"].get<int>(), sum["fail"].get<int>(),
                sum["flagged"].get<int>());
  }
  return fails == 0 ? kOk : kValidationFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real motivic invariants: zeta functions with sign, Milnor fibres, constructible functions"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_option("--qsigma", g.qsigma, "Lattice points of the Newton route")
      ->check(CLI::IsMember({"positive-gens", "all-gens"}));
  app.add_option("--corfib-sign", g.corfib, "Coefficient convention of the DL Milnor fibre")
      ->check(CLI::IsMember({"derived", "printed"}));
  app.add_flag("--assume-nondegenerate", g.assume, "Assert non-degeneracy in dimension >= 3");

  std::string poly, method = "dl", datum, table, sign = "plus", complex, fn, op, map, surface, suite = "all";
  int expand = 6, at = 0;
  std::vector<std::string> levels;

  auto* milnor = app.add_subcommand("milnor", "Motivic Milnor fibre by one route (dl, newton, wh) or all");
  milnor->add_option("--poly", poly, "Polynomial, e.g. x^2+y^4");
  milnor->add_option("--method", method)->check(CLI::IsMember({"dl", "newton", "wh", "all"}));
  milnor->add_option("--datum", datum, "Resolution datum JSON");
  milnor->add_option("--table", table, "Torus class table JSON");
  milnor->add_option("--sign", sign, "plus or minus");

  auto* zeta = app.add_subcommand("zeta", "Print and expand a zeta function (DL datum or Newton route)");
  zeta->add_option("--datum", datum);
  zeta->add_option("--poly", poly);
  zeta->add_option("--sign", sign);
  zeta->add_option("--expand", expand, "Number of coefficients")->check(CLI::Range(0, 200));

  auto* newton = app.add_subcommand("newton", "Newton polyhedron and dual fan");
  newton->add_option("--poly", poly)->required();

  auto* cf = app.add_subcommand("cf", "Constructible function operations");
  cf->add_option("--complex", complex, "Complex JSON");
  cf->add_option("--fn", fn, "Function JSON (default: constant 1)");
  cf->add_option("--op", op)
      ->required()
      ->check(CLI::IsMember({"integrate", "dual", "link", "push", "pull", "euler", "locallink", "pi"}));
  cf->add_option("--map", map, "Map JSON with source, target, map");
  cf->add_option("--at", at, "Target vertex for locallink");

  auto* link = app.add_subcommand("link", "Level-set and link beta on a heighted surface");
  link->add_option("--surface", surface, "Surface JSON (default: the built-in torus)");
  link->add_option("--level", levels, "Levels p/q")->required();

  auto* validate = app.add_subcommand("validate", "Replay the shipped examples");
  validate->add_option("--suite", suite, "all, dl, wh, dual, sphere, torus, cf, parity, flags");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*milnor) return cmd_milnor(g, poly, method, datum, table, sign);
    if (*zeta) return cmd_zeta(g, datum, poly, sign, expand);
    if (*newton) return cmd_newton(g, poly);
    if (*cf) return cmd_cf(complex, fn, op, map, at);
    if (*link) return cmd_link(g, surface, levels);
    if (*validate) return cmd_validate(g, suite);
  } catch (const CliError& e) {
    Json err = {{"error", e.name}, {"message", e.message}};
    std::cerr << err.dump() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    Json err = {{"error", "Internal"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return kInputError;
  }
  return kInputError;
}
