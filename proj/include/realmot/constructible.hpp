#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "realmot/laurent.hpp"
#include "realmot/numeric.hpp"

namespace realmot {

using Simplex = std::vector<int>;  // sorted vertex ids

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Closes the given simplices under faces. Vertices are those appearing plus `extra_vertices`.
  static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices,
                                          const std::vector<int>& extra_vertices = {});

  const std::vector<int>& vertices() const { return vertices_; }
  const std::set<Simplex>& simplices() const { return simplices_; }
  bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
  int dim() const;
  // Simplices tau with v not in tau and tau + v in the complex.
  SimplicialComplex link(int v) const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;

 private:
  std::vector<int> vertices_;
  std::set<Simplex> simplices_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }
Simplex normalize_simplex(Simplex s);

// Values on open simplices; missing entries read 0.
struct ConstructibleFunction {
  ComplexPtr complex;
  std::map<Simplex, Integer> values;

  Integer at(const Simplex& s) const;
  void set(const Simplex& s, const Integer& v);  // throws when s is not a simplex
  static ConstructibleFunction constant(ComplexPtr k, const Integer& c);
  static ConstructibleFunction indicator_closed(ComplexPtr k, const Simplex& s);
  bool operator==(const ConstructibleFunction& o) const;
};

ConstructibleFunction operator+(const ConstructibleFunction& a, const ConstructibleFunction& b);
ConstructibleFunction operator-(const ConstructibleFunction& a, const ConstructibleFunction& b);
ConstructibleFunction operator*(const Integer& c, const ConstructibleFunction& a);
ConstructibleFunction operator*(const ConstructibleFunction& a, const ConstructibleFunction& b);

struct SimplicialMap {
  ComplexPtr source;
  ComplexPtr target;
  std::map<int, int> vertex_map;

  Simplex image(const Simplex& s) const;
  void validate() const;  // every simplex maps onto a simplex
};

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& h);  // g after h

Integer cf_integral(const ConstructibleFunction& phi, const SimplicialComplex* over = nullptr);
ConstructibleFunction cf_pullback(const ConstructibleFunction& phi, const SimplicialMap& h);
ConstructibleFunction cf_pushforward(const ConstructibleFunction& phi, const SimplicialMap& h);
ConstructibleFunction cf_dual(const ConstructibleFunction& phi);
ConstructibleFunction cf_link(const ConstructibleFunction& phi);
bool cf_is_euler(const ConstructibleFunction& phi);
ConstructibleFunction pi_realize(const SimplicialMap& h);

struct LocalLink {
  Integer chi_c;
  // Open cells of h^-1(lk(s)): one per source simplex whose image contains s
  // and is larger than {s}; the cell has dimension dim(simplex) - 1.
  std::vector<Simplex> cells;
};
LocalLink local_link(const SimplicialMap& h, int s);

// X x_S Y for simplicial maps h1: X -> S, h2: Y -> S, triangulated by chains
// in the product order (source vertices ordered by their image, then id).
// Vertex ids of the result index `pairs`.
struct FiberedProduct {
  SimplicialMap projection;  // to S
  std::vector<std::pair<int, int>> pairs;
};
FiberedProduct fibered_product(const SimplicialMap& h1, const SimplicialMap& h2);

struct HeightedSurface {
  ComplexPtr complex;
  std::map<int, Rational> heights;

  void validate() const;  // closed surface, heights on every vertex
};

struct LevelSetBeta {
  LaurentPoly beta;
  LaurentPoly beta_link;
  // Fiber graph at the level itself.
  int nodes = 0;
  int edges = 0;
  int crossings = 0;
};
LevelSetBeta level_set_beta(const HeightedSurface& m, const Rational& s);

// 16 x 16 grid triangulation of the flat torus with h(i,j) = -c_i (2 + c_j),
// c_i a 6-digit rational approximation of cos(2 pi i / 16).
HeightedSurface torus16();

}  // namespace realmot
