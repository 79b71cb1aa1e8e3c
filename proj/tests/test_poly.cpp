#include "doctest.h"
#include "realmot/error.hpp"
#include "realmot/poly.hpp"
#include "test_support.hpp"

using namespace realmot;
using testsupport::uniform;

TEST_CASE("parse polynomials") {
  MultiPoly f = parse_poly("x^2+y^4");
  CHECK(f.vars() == std::vector<std::string>{"x", "y"});
  CHECK(f.support() == std::vector<Exponent>{{0, 4}, {2, 0}});
  CHECK(f.coeff({2, 0}) == 1);
  CHECK(parse_poly("x^6+x^2*y^2+y^6").support() == std::vector<Exponent>{{0, 6}, {2, 2}, {6, 0}});
  MultiPoly g = parse_poly("y^2+x^2*(x^2-1)");
  CHECK(g.vars() == std::vector<std::string>{"y", "x"});
  CHECK(g.coeff({2, 0}) == 1);
  CHECK(g.coeff({0, 4}) == 1);
  CHECK(g.coeff({0, 2}) == -1);
  MultiPoly h = parse_poly("y^2+x^2*(x^2-1)", std::vector<std::string>{"x", "y"});
  CHECK(h.to_string() == "x^4 - x^2 + y^2");
  CHECK(parse_poly("2x y + 3").to_string() == "2*x*y + 3");
  CHECK(parse_poly("x^6+x^2*y^2+y^6").to_string() == "x^6 + x^2*y^2 + y^6");
  Integer scale;
  MultiPoly r = parse_poly("x^2/2 + y/3", std::nullopt, &scale);
  CHECK(scale == 6);
  CHECK(r.to_string() == "3*x^2 + 2*y");
  CHECK_THROWS_AS(parse_poly("x^2 + z", std::vector<std::string>{"x", "y"}), Error);
  CHECK_THROWS_AS(parse_poly("x^-1"), Error);
  CHECK_THROWS_AS(parse_poly("x + * y"), Error);
  try {
    parse_poly("x + $");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
}

TEST_CASE("print parse roundtrip") {
  for (int i = 0; i < 200; ++i) {
    MultiPoly f({"x", "y", "z"});
    int n = static_cast<int>(uniform(1, 6));
    for (int k = 0; k < n; ++k)
      f.add_term({static_cast<int>(uniform(0, 5)), static_cast<int>(uniform(0, 5)), static_cast<int>(uniform(0, 5))},
                 static_cast<long>(uniform(-7, 7)));
    if (f.is_zero()) continue;
    CHECK(parse_poly(f.to_string(), f.vars()) == f);
  }
}

TEST_CASE("face restriction") {
  MultiPoly f = parse_poly("x^6+x^2*y^2+y^6");
  CHECK(face_restrict(f, {{2, 2}, {0, 6}}).to_string() == "x^2*y^2 + y^6");
  CHECK(face_restrict(parse_poly("x^2+y^4"), {{2, 0}}).to_string() == "x^2");
  CHECK(face_restrict(f, f.support()) == f);
  CHECK_THROWS_AS(face_restrict(f, {{1, 1}}), Error);
  auto s1 = std::vector<Exponent>{{6, 0}};
  auto s2 = std::vector<Exponent>{{2, 2}, {0, 6}};
  auto both = std::vector<Exponent>{{6, 0}, {2, 2}, {0, 6}};
  CHECK(face_restrict(f, both) == face_restrict(f, s1) + face_restrict(f, s2));
}

TEST_CASE("weights and convenience") {
  auto a = analyze_weights(parse_poly("x^2+y^4"));
  REQUIRE(a.weights);
  CHECK(a.weights->w == std::vector<long long>{2, 1});
  CHECK(a.weights->degree == 4);
  CHECK(a.convenient);
  auto b = analyze_weights(parse_poly("x^6+x^2*y^2+y^6"));
  CHECK(!b.weights);
  CHECK(b.convenient);
  auto c = analyze_weights(parse_poly("y^2+x^2*(x^2-1)"));
  CHECK(!c.weights);
  CHECK(c.convenient);
  auto d = analyze_weights(parse_poly("x^3"));
  CHECK(d.weights->w == std::vector<long long>{1});
  CHECK(d.weights->degree == 3);
  CHECK_FALSE(analyze_weights(parse_poly("x^2*y + y^3")).convenient);
  auto e = analyze_weights(parse_poly("x^2*y^2"));
  CHECK(e.weights->w == std::vector<long long>{1, 1});
  for (const auto& p : {"x^2+y^4", "x^4+y^4", "x^3*y + y^5 + x^6", "x^2+y^2+z^2"}) {
    MultiPoly f = parse_poly(p);
    auto w = analyze_weights(f);
    if (!w.weights) continue;
    for (const auto& nu : f.support()) {
      long long s = 0;
      for (std::size_t i = 0; i < nu.size(); ++i) s += w.weights->w[i] * nu[i];
      CHECK(s == w.weights->degree);
    }
  }
}

TEST_CASE("torus normal form") {
  MultiPoly f = parse_poly("x^2+y^4");
  TorusNormalForm t = torus_normal_form(f);
  CHECK(t.m == 4);
  CHECK(t.phi.size() == 2);
  CHECK(std::abs(t.M[0][0] * t.M[1][1] - t.M[0][1] * t.M[1][0]) == 1);
  // f(x(X,Y), y(X,Y)) == X^m phi(Y) at sample points
  for (auto [X, Y] : {std::pair<Rational, Rational>{2, 3}, {Rational(-1, 2), Rational(5, 3)}}) {
    auto xy = t.to_xy(X, Y);
    Rational lhs = f.eval(xy);
    Rational rhs = 0;
    for (const auto& [e, c] : t.phi) {
      Rational yy = 1;
      for (int i = 0; i < std::abs(e); ++i) yy *= (e > 0 ? Y : 1 / Y);
      rhs += c * yy;
    }
    Rational xm = 1;
    for (int i = 0; i < t.m; ++i) xm *= X;
    CHECK(lhs == xm * rhs);
  }
  TorusNormalForm mono = torus_normal_form(parse_poly("x^2*y^4"));
  CHECK(mono.m == 2);
  CHECK(mono.phi.size() == 1);
  CHECK(mono.phi.begin()->first == 0);
  CHECK_THROWS_AS(torus_normal_form(parse_poly("x^2+y^4+x*y")), Error);
  CHECK_THROWS_AS(torus_normal_form(parse_poly("x^2 + x^3*y")), Error);
}

TEST_CASE("non-degeneracy") {
  MultiPoly f = parse_poly("x^2+y^4");
  auto r = nondegenerate_check(f, {{{2, 0}}, {{0, 4}}, {{2, 0}, {0, 4}}});
  CHECK(r.supported);
  CHECK(r.nondegenerate);
  MultiPoly g = parse_poly("x^2+2*x*y+y^2");
  auto s = nondegenerate_check(g, {{{2, 0}}, {{0, 2}}, {{2, 0}, {1, 1}, {0, 2}}});
  CHECK(s.supported);
  CHECK_FALSE(s.nondegenerate);
  CHECK(s.degenerate_faces == std::vector<std::size_t>{2});
  // (x - y)(x - 2y) has simple torus zeros only
  MultiPoly h = parse_poly("x^2 - 3*x*y + 2*y^2");
  CHECK(nondegenerate_check(h, {{{2, 0}, {1, 1}, {0, 2}}}).nondegenerate);
  // (x^2 + y^2)^2 is degenerate only over C; no real torus zero
  MultiPoly k = parse_poly("(x^2+y^2)^2");
  CHECK(nondegenerate_check(k, {k.support()}).nondegenerate);
  CHECK_FALSE(nondegenerate_check(parse_poly("x^2+y^2+z^2"), {}).supported);
}
