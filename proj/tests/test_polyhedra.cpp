#include <set>

#include "doctest.h"
#include "realmot/error.hpp"
#include "realmot/polyhedra.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace realmot;
using namespace oracle;
using testsupport::uniform;

namespace {

std::vector<std::vector<Exponent>> face_sets(const NewtonPolyhedron& np) {
  std::vector<std::vector<Exponent>> out;
  for (const auto& f : np.compact_faces) out.push_back(f.support_points);
  return out;
}

// Minimizer sets over strictly positive integer weights with entries <= bound.
std::set<std::vector<Exponent>> brute_force_faces(const std::vector<Exponent>& supp, std::size_t d, int bound) {
  std::set<std::vector<Exponent>> out;
  std::vector<long long> a(d, 1);
  for (;;) {
    long long mn = LLONG_MAX;
    for (const auto& e : supp) {
      long long s = 0;
      for (std::size_t i = 0; i < d; ++i) s += a[i] * e[i];
      mn = std::min(mn, s);
    }
    std::vector<Exponent> on;
    for (const auto& e : supp) {
      long long s = 0;
      for (std::size_t i = 0; i < d; ++i) s += a[i] * e[i];
      if (s == mn) on.push_back(e);
    }
    std::sort(on.begin(), on.end());
    on.erase(std::unique(on.begin(), on.end()), on.end());
    out.insert(on);
    std::size_t i = 0;
    while (i < d && a[i] == bound) a[i++] = 1;
    if (i == d) break;
    ++a[i];
  }
  return out;
}

}  // namespace

TEST_CASE("newton polyhedron examples") {
  auto np = newton_polyhedron({{2, 0}, {0, 4}}, 2);
  CHECK(face_sets(np) == std::vector<std::vector<Exponent>>{{{0, 4}}, {{2, 0}}, {{0, 4}, {2, 0}}});
  CHECK(np.compact_faces[2].dim_face == 1);
  CHECK(np.compact_faces[0].hyperplane_axes == std::vector<std::size_t>{0});

  auto np2 = newton_polyhedron({{6, 0}, {2, 2}, {0, 6}}, 2);
  CHECK(np2.compact_faces.size() == 5);
  int edges = 0;
  for (const auto& f : np2.compact_faces) edges += f.dim_face == 1;
  CHECK(edges == 2);
  CHECK(np2.find_compact_face({{2, 2}}) != nullptr);

  auto np3 = newton_polyhedron({{0, 2}, {2, 0}, {4, 0}}, 2);
  CHECK(face_sets(np3) == std::vector<std::vector<Exponent>>{{{0, 2}}, {{2, 0}}, {{0, 2}, {2, 0}}});
}

TEST_CASE("compact faces match brute-force normal enumeration") {
  std::vector<std::vector<Exponent>> cases = {
      {{2, 0}, {0, 4}}, {{6, 0}, {2, 2}, {0, 6}}, {{0, 2}, {2, 0}, {4, 0}}, {{1, 1}},
      {{3, 0}, {1, 1}, {0, 3}, {2, 2}}, {{5, 0}, {3, 1}, {1, 2}, {0, 7}}, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}},
      {{4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {1, 1, 1}}};
  for (int i = 0; i < 40; ++i) {
    std::size_t d = uniform(2, 3);
    std::vector<Exponent> s;
    int n = static_cast<int>(uniform(1, 6));
    for (int k = 0; k < n; ++k) {
      Exponent e(d);
      for (auto& x : e) x = static_cast<int>(uniform(0, 5));
      s.push_back(e);
    }
    cases.push_back(s);
  }
  for (const auto& s : cases) {
    std::size_t d = s[0].size();
    auto np = newton_polyhedron(s, d);
    auto fs = face_sets(np);
    std::set<std::vector<Exponent>> got(fs.begin(), fs.end());
    auto brute = brute_force_faces(np.support, d, d == 2 ? 60 : 30);
    CHECK(got == brute);
  }
}

TEST_CASE("multiplicity") {
  auto np = newton_polyhedron({{2, 0}, {0, 4}}, 2);
  auto r = multiplicity(np, {2, 1});
  CHECK(r.m == 4);
  CHECK(r.face_points == std::vector<Exponent>{{0, 4}, {2, 0}});
  auto r2 = multiplicity(np, {1, 0});
  CHECK(r2.m == 0);
  CHECK(r2.face_points == std::vector<Exponent>{{0, 4}});
  CHECK(!r2.compact_face_id);
  auto np2 = newton_polyhedron({{6, 0}, {2, 2}, {0, 6}}, 2);
  auto r3 = multiplicity(np2, {2, 1});
  CHECK(r3.m == 6);
  CHECK(r3.face_points == std::vector<Exponent>{{0, 6}, {2, 2}});
  CHECK_THROWS_AS(multiplicity(np2, {0, 0}), Error);
  CHECK_THROWS_AS(multiplicity(np2, {-1, 2}), Error);
}

TEST_CASE("dual fan examples") {
  auto fan = dual_fan(newton_polyhedron({{6, 0}, {2, 2}, {0, 6}}, 2));
  std::set<std::vector<IVec>> cones;
  for (const auto& e : fan.entries) {
    CHECK(e.cone.simplicial);
    cones.insert(e.cone.generators);
  }
  std::set<std::vector<IVec>> expect = {{{1, 0}, {2, 1}}, {{2, 1}}, {{1, 2}, {2, 1}}, {{1, 2}}, {{0, 1}, {1, 2}}};
  CHECK(cones == expect);

  auto fan2 = dual_fan(newton_polyhedron({{2, 0}, {0, 4}}, 2));
  std::set<std::vector<IVec>> c2;
  for (const auto& e : fan2.entries) c2.insert(e.cone.generators);
  CHECK(c2 == std::set<std::vector<IVec>>{{{0, 1}, {2, 1}}, {{2, 1}}, {{1, 0}, {2, 1}}});
  for (const auto& e : fan2.entries)
    if (e.face.support_points == std::vector<Exponent>{{0, 4}}) {
      CHECK(e.cone.p_gens == std::vector<IVec>{{1, 0}});
      CHECK(e.cone.v_gens == std::vector<IVec>{{2, 1}});
    }

  auto fan3 = dual_fan(newton_polyhedron({{1, 1}}, 2));
  REQUIRE(fan3.entries.size() == 1);
  CHECK(fan3.entries[0].cone.generators == std::vector<IVec>{{0, 1}, {1, 0}});
  CHECK(fan3.entries[0].cone.p_gens.empty());

  // a vertex of a 3d polyhedron lying on four facets
  auto fan4 = dual_fan(newton_polyhedron({{4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {1, 1, 1}}, 3));
  int nonsimplicial = 0;
  for (const auto& e : fan4.entries) nonsimplicial += !e.cone.simplicial;
  CHECK(nonsimplicial > 0);
}

TEST_CASE("fan partition and cone membership") {
  std::vector<std::vector<Exponent>> cases = {
      {{2, 0}, {0, 4}}, {{6, 0}, {2, 2}, {0, 6}}, {{0, 2}, {2, 0}, {4, 0}}, {{5, 0}, {3, 1}, {1, 2}, {0, 7}},
      {{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}, {{4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {1, 1, 1}}};
  for (const auto& s : cases) {
    std::size_t d = s[0].size();
    auto np = newton_polyhedron(s, d);
    auto fan = dual_fan(np);
    std::vector<long long> a(d, 1);
    int bound = d == 2 ? 10 : 6;
    for (;;) {
      QVec q = to_qvec(a);
      auto mr = multiplicity(np, q);
      int relint_hits = 0;
      bool minimizer_simplicial = false;
      for (const auto& e : fan.entries)
        if (e.face.support_points == mr.face_points) minimizer_simplicial = e.cone.simplicial;
      for (const auto& e : fan.entries) {
        if (!e.cone.simplicial) continue;
        auto lam = cone_coordinates(e.cone.generators, q);
        bool in_cone = lam && std::all_of(lam->begin(), lam->end(), [](const Rational& x) { return x >= 0; });
        bool in_relint = lam && std::all_of(lam->begin(), lam->end(), [](const Rational& x) { return x > 0; });
        bool contains = std::includes(mr.face_points.begin(), mr.face_points.end(), e.face.support_points.begin(),
                                      e.face.support_points.end());
        CHECK(in_cone == contains);
        CHECK(in_relint == (e.face.support_points == mr.face_points));
        relint_hits += in_relint;
      }
      CHECK(relint_hits == (minimizer_simplicial ? 1 : 0));
      std::size_t i = 0;
      while (i < d && a[i] == bound) a[i++] = 1;
      if (i == d) break;
      ++a[i];
    }
  }
}

TEST_CASE("parallelepiped points") {
  CHECK(parallelepiped_points({{2, 1}}) == std::vector<IVec>{{2, 1}});
  CHECK(parallelepiped_points({{1, 0}, {1, 2}}) == std::vector<IVec>{{1, 1}, {2, 2}});
  CHECK(parallelepiped_points({{2, 1}, {1, 2}}) == std::vector<IVec>{{1, 1}, {2, 2}, {3, 3}});
  CHECK_THROWS_AS(parallelepiped_points({{1, 2}, {2, 4}}), Error);
}

TEST_CASE("parallelepiped points match brute force and index formula") {
  int done = 0;
  while (done < 100) {
    std::size_t d = uniform(1, 3);
    std::size_t l = uniform(1, d);
    std::vector<IVec> gens(l, IVec(d));
    for (auto& g : gens)
      for (auto& x : g) x = uniform(0, 3);
    QMat m;
    for (const auto& g : gens) m.push_back(to_qvec(g));
    if (rank(m) != static_cast<int>(l)) continue;
    auto got = parallelepiped_points(gens);
    CHECK(got == brute_parallelepiped(gens));
    if (l == d) {
      std::vector<std::vector<Rational>> sq(d, std::vector<Rational>(d));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) sq[i][j] = Q(gens[i][j]);
      CHECK(Rational(static_cast<long>(got.size())) == abs(det(sq)));
    }
    ++done;
  }
}
