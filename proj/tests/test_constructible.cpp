#include <fstream>

#include "doctest.h"
#include "realmot/constructible.hpp"
#include "realmot/error.hpp"
#include "realmot/random_complex.hpp"
#include "test_support.hpp"

using namespace realmot;

namespace {

ComplexPtr K(std::vector<Simplex> s, std::vector<int> extra = {}) {
  return std::make_shared<const SimplicialComplex>(SimplicialComplex::from_simplices(s, extra));
}

ComplexPtr triangle() { return K({{0, 1, 2}}); }
ComplexPtr circle3() { return K({{0, 1}, {1, 2}, {0, 2}}); }
ComplexPtr hexagon() { return K({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}); }

SimplicialMap double_cover() {
  SimplicialMap h{hexagon(), circle3(), {}};
  for (int i = 0; i < 6; ++i) h.vertex_map[i] = i % 3;
  h.validate();
  return h;
}

SimplicialMap identity(const ComplexPtr& k) {
  SimplicialMap h{k, k, {}};
  for (int v : k->vertices()) h.vertex_map[v] = v;
  return h;
}

ConstructibleFunction single(const ComplexPtr& k, const Simplex& s, long v = 1) {
  ConstructibleFunction f{k, {}};
  f.set(s, v);
  return f;
}

LaurentPoly L(const char* s) { return LaurentPoly::parse(s); }

std::mt19937_64& gen() {
  static std::mt19937_64 g(7041);
  return g;
}

}  // namespace

TEST_CASE("complex construction and links") {
  auto t = triangle();
  CHECK(t->simplices().size() == 7);
  CHECK(t->dim() == 2);
  CHECK(t->link(0).simplices() == std::set<Simplex>{{1}, {2}, {1, 2}});
  CHECK_THROWS_AS(SimplicialComplex::from_simplices({{1, 1}}), Error);
  CHECK(circle3()->is_subcomplex_of(*t));
  CHECK_FALSE(t->is_subcomplex_of(*circle3()));
}

TEST_CASE("integral") {
  auto t = triangle();
  CHECK(cf_integral(ConstructibleFunction::constant(t, 1)) == 1);
  auto c = circle3();
  CHECK(cf_integral(ConstructibleFunction::constant(c, 1)) == 0);
  CHECK(cf_integral(single(t, {0, 1, 2})) == 1);
  CHECK(cf_integral(ConstructibleFunction::constant(t, 1), c.get()) == 0);
  auto other = K({{5, 6}});
  CHECK_THROWS_AS(cf_integral(ConstructibleFunction::constant(t, 1), other.get()), Error);
}

TEST_CASE("pullback") {
  auto t = triangle();
  auto f = single(t, {0, 1}, 3);
  CHECK(cf_pullback(f, identity(t)) == f);

  auto edge = K({{0, 1}});
  auto pt = K({{7}});
  SimplicialMap collapse{edge, pt, {{0, 7}, {1, 7}}};
  CHECK(cf_pullback(ConstructibleFunction::constant(pt, 1), collapse) == ConstructibleFunction::constant(edge, 1));

  auto h = double_cover();
  auto g = cf_pullback(single(h.target, {0, 1}), h);
  CHECK(g.values == std::map<Simplex, Integer>{{{0, 1}, 1}, {{3, 4}, 1}});
}

TEST_CASE("pushforward") {
  auto edge = K({{0, 1}});
  auto pt = K({{7}});
  SimplicialMap collapse{edge, pt, {{0, 7}, {1, 7}}};
  CHECK(cf_pushforward(single(edge, {0, 1}), collapse).at({7}) == -1);
  CHECK(cf_pushforward(ConstructibleFunction::constant(edge, 1), collapse).at({7}) == 1);

  auto h = double_cover();
  CHECK(cf_pushforward(ConstructibleFunction::constant(h.source, 1), h) == ConstructibleFunction::constant(h.target, 2));
  auto t = triangle();
  auto f = single(t, {1, 2}, -4);
  CHECK(cf_pushforward(f, identity(t)) == f);
}

TEST_CASE("dual and link on simplices") {
  auto t = triangle();
  CHECK(cf_dual(single(t, {1})) == single(t, {1}));
  CHECK(cf_dual(single(t, {0, 1, 2})) == ConstructibleFunction::constant(t, 1));
  CHECK(cf_dual(ConstructibleFunction::constant(t, 1)) == single(t, {0, 1, 2}));

  CHECK(cf_link(single(t, {1})).values.empty());
  auto l = cf_link(single(t, {0, 1, 2}));
  CHECK(l.at({0, 1, 2}) == 0);
  for (const auto& s : t->simplices())
    if (s.size() < 3) CHECK(l.at(s) == -1);
  auto c = circle3();
  CHECK(cf_link(ConstructibleFunction::constant(c, 1)) == ConstructibleFunction::constant(c, 2));
  // d-simplex formula: link of the open simplex is (-1)^(d-1) on the closure plus 1 on the simplex.
  auto e = K({{0, 1}});
  CHECK(cf_link(single(e, {0, 1})) == ConstructibleFunction::constant(e, 1) + single(e, {0, 1}));
}

TEST_CASE("anticommutation fails on an open edge") {
  // L D = -D L would force D = id; the open edge is a counterexample.
  auto e = K({{0, 1}});
  auto phi = single(e, {0, 1});
  CHECK_FALSE(cf_link(cf_dual(phi)) == Integer(-1) * cf_dual(cf_link(phi)));
  CHECK(cf_link(cf_dual(phi)) == Integer(-1) * cf_link(phi));
}

TEST_CASE("euler parity") {
  CHECK(cf_is_euler(ConstructibleFunction::constant(circle3(), 1)));
  CHECK_FALSE(cf_is_euler(ConstructibleFunction::constant(K({{0, 1}}), 1)));
  CHECK_FALSE(cf_is_euler(single(triangle(), {0, 1, 2})));
  CHECK(cf_is_euler(ConstructibleFunction::constant(hexagon(), 1)));
}

TEST_CASE("pi realization") {
  auto t = triangle();
  CHECK(pi_realize(identity(t)) == ConstructibleFunction::constant(t, 1));
  auto pt = K({{9}});
  SimplicialMap to_pt{circle3(), pt, {{0, 9}, {1, 9}, {2, 9}}};
  CHECK(pi_realize(to_pt).at({9}) == 0);
  SimplicialMap t_to_pt{t, pt, {{0, 9}, {1, 9}, {2, 9}}};
  CHECK(pi_realize(t_to_pt).at({9}) == 1);
  CHECK(pi_realize(double_cover()) == ConstructibleFunction::constant(circle3(), 2));
}

TEST_CASE("local link") {
  auto c = circle3();
  for (int v : c->vertices()) CHECK(local_link(identity(c), v).chi_c == 2);
  auto h = double_cover();
  for (int v : h.target->vertices()) {
    auto ll = local_link(h, v);
    CHECK(ll.chi_c == 4);
    CHECK(ll.cells.size() == 4);
  }
  auto pt = K({{9}});
  SimplicialMap to_pt{triangle(), pt, {{0, 9}, {1, 9}, {2, 9}}};
  CHECK(local_link(to_pt, 9).chi_c == 0);
  CHECK_THROWS_AS(local_link(to_pt, 3), Error);
}

TEST_CASE("map validation and composition") {
  SimplicialMap bad{triangle(), circle3(), {{0, 0}, {1, 1}, {2, 2}}};
  CHECK_THROWS_AS(bad.validate(), Error);
  auto h = double_cover();
  auto pt = K({{9}});
  SimplicialMap g{h.target, pt, {{0, 9}, {1, 9}, {2, 9}}};
  auto gh = compose(g, h);
  CHECK(gh.vertex_map.size() == 6);
  CHECK(pi_realize(gh).at({9}) == 0);
}

TEST_CASE("random operator identities") {
  auto& g = gen();
  for (int trial = 0; trial < 250; ++trial) {
    auto k = cfrandom::random_complex(g);
    auto phi = cfrandom::random_function(g, k);
    auto d = cf_dual(phi);
    auto l = cf_link(phi);
    CHECK(cf_dual(d) == phi);
    CHECK(cf_link(l) == Integer(2) * l);
    // D and L = id - D commute, and D L = -L since D is an involution.
    CHECK(cf_link(d) == cf_dual(l));
    CHECK(cf_dual(l) == Integer(-1) * l);
    CHECK(cf_integral(l) == 0);
    CHECK(cf_is_euler(l));

    auto h = cfrandom::random_map_from(g, k);
    CHECK(cf_pushforward(cf_dual(phi), h) == cf_dual(cf_pushforward(phi, h)));
    auto pi = pi_realize(h);
    auto lpi = cf_link(pi);
    for (int s : h.target->vertices()) CHECK(lpi.at({s}) == local_link(h, s).chi_c);

    auto g2 = cfrandom::random_map_from(g, h.target);
    CHECK(cf_pushforward(phi, compose(g2, h)) == cf_pushforward(cf_pushforward(phi, h), g2));
    // Euler integral is pushforward to a point.
    CHECK(cf_integral(phi) == cf_integral(cf_pushforward(phi, h)));
  }
}

TEST_CASE("fibered products are multiplicative under pi") {
  auto& g = gen();
  for (int trial = 0; trial < 80; ++trial) {
    auto s = cfrandom::random_complex(g, 12);
    auto h1 = cfrandom::random_map_to(g, s, 20);
    auto h2 = cfrandom::random_map_to(g, s, 20);
    auto fp = fibered_product(h1, h2);
    CHECK(pi_realize(fp.projection) == pi_realize(h1) * pi_realize(h2));
    CHECK(cf_is_euler(cf_link(pi_realize(fp.projection))));
  }
  // Double cover squared: two circles over the base circle.
  auto h = double_cover();
  auto fp = fibered_product(h, h);
  CHECK(pi_realize(fp.projection) == ConstructibleFunction::constant(h.target, 4));
  CHECK(fp.pairs.size() == 12);
}

TEST_CASE("heighted surface validation") {
  HeightedSurface bad{triangle(), {{0, 0}, {1, 1}, {2, 2}}};
  CHECK_THROWS_AS(bad.validate(), Error);
  auto m = torus16();
  CHECK_NOTHROW(m.validate());
  m.heights.erase(0);
  CHECK_THROWS_AS(m.validate(), Error);
}

TEST_CASE("torus height table") {
  auto m = torus16();
  struct Row {
    long level;
    const char* beta;
    const char* link;
  };
  // Minimum -3, saddles -1 and 1, maximum 3.
  const Row rows[] = {{-4, "0", "0"},         {-3, "1", "u+1"},       {-2, "u+1", "2*u+2"},
                      {-1, "u", "3*u+3"},     {0, "2*u+2", "4*u+4"}, {1, "u", "3*u+3"},
                      {2, "u+1", "2*u+2"},    {3, "1", "u+1"},       {4, "0", "0"}};
  for (const auto& r : rows) {
    CAPTURE(r.level);
    auto res = level_set_beta(m, Rational(r.level));
    CHECK(res.beta == L(r.beta));
    CHECK(res.beta_link == L(r.link));
    CHECK(res.beta.eval(Rational(-1)) == Rational(res.nodes - res.edges));
  }
  CHECK(level_set_beta(m, Rational(-1)).crossings == 1);
  CHECK(level_set_beta(m, Rational(0)).crossings == 0);
}

TEST_CASE("level set euler characteristic at sampled levels") {
  auto m = torus16();
  std::set<Rational> hs;
  for (const auto& [v, h] : m.heights) hs.insert(h);
  std::vector<Rational> levels(hs.begin(), hs.end());
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    Rational mid = (levels[i] + levels[i + 1]) / 2;
    for (const auto& s : {levels[i], mid}) {
      auto r = level_set_beta(m, s);
      CHECK(r.beta.eval(Rational(-1)) == Rational(r.nodes - r.edges));
      // Regular levels are disjoint unions of circles.
      if (s == mid) CHECK(r.beta.eval(Rational(-1)) == 0);
    }
  }
}

TEST_CASE("monkey saddle is rejected") {
  // Hexagonal star around vertex 0 on an octahedron-like closed surface.
  // Suspension of a hexagon: apexes 7 (top) and 8 (bottom); heights alternate around the ring.
  std::vector<Simplex> tris;
  for (int i = 0; i < 6; ++i) {
    tris.push_back({1 + i, 1 + (i + 1) % 6, 7});
    tris.push_back({1 + i, 1 + (i + 1) % 6, 8});
  }
  HeightedSurface m{K(tris), {}};
  for (int i = 0; i < 6; ++i) m.heights[1 + i] = i % 2 == 0 ? 1 : -1;
  m.heights[7] = 0;
  m.heights[8] = 5;
  CHECK_THROWS_WITH_AS(level_set_beta(m, Rational(0)), doctest::Contains("saddle"), Error);
}

TEST_CASE("shipped torus data matches the generator") {
  std::ifstream in(testsupport::data_path("torus16.json"));
  REQUIRE(in.good());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto m = torus16();
  for (const auto& [v, h] : m.heights) {
    std::string needle = "\"" + std::to_string(v) + "\": \"" + h.get_str() + "\"";
    CHECK_MESSAGE(text.find(needle) != std::string::npos, needle);
  }
}
