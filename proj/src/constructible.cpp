#include "realmot/constructible.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>

#include "realmot/error.hpp"

namespace realmot {

Simplex normalize_simplex(Simplex s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

namespace {

// All nonempty faces of s, including s.
std::vector<Simplex> faces_of(const Simplex& s) {
  std::vector<Simplex> out;
  const std::size_t n = s.size();
  if (n > 20) fail(Errc::InvalidArgument, "simplex too large");
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    Simplex f;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1UL) f.push_back(s[i]);
    out.push_back(f);
  }
  return out;
}

int sgn_pow(int d) { return d % 2 == 0 ? 1 : -1; }

void same_complex(const ConstructibleFunction& a, const ConstructibleFunction& b) {
  if (a.complex != b.complex && !(a.complex && b.complex && a.complex->simplices() == b.complex->simplices()))
    fail(Errc::InvalidArgument, "constructible functions live on different complexes");
}

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& simplices,
                                                    const std::vector<int>& extra_vertices) {
  SimplicialComplex k;
  std::set<int> verts(extra_vertices.begin(), extra_vertices.end());
  for (const auto& raw : simplices) {
    Simplex s = normalize_simplex(raw);
    if (s.empty()) fail(Errc::InvalidArgument, "empty simplex");
    if (s.size() != raw.size()) fail(Errc::InvalidArgument, "simplex with repeated vertices");
    for (const auto& f : faces_of(s)) k.simplices_.insert(f);
    verts.insert(s.begin(), s.end());
  }
  for (int v : verts) k.simplices_.insert({v});
  k.vertices_.assign(verts.begin(), verts.end());
  return k;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const auto& s : simplices_) d = std::max(d, simplex_dim(s));
  return d;
}

SimplicialComplex SimplicialComplex::link(int v) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_) {
    if (!std::binary_search(s.begin(), s.end(), v)) continue;
    Simplex t;
    for (int x : s)
      if (x != v) t.push_back(x);
    if (!t.empty()) out.push_back(t);
  }
  return from_simplices(out);
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::all_of(simplices_.begin(), simplices_.end(), [&](const Simplex& s) { return other.contains(s); });
}

Integer ConstructibleFunction::at(const Simplex& s) const {
  auto it = values.find(s);
  return it == values.end() ? Integer(0) : it->second;
}

void ConstructibleFunction::set(const Simplex& s, const Integer& v) {
  if (!complex || !complex->contains(s)) fail(Errc::InvalidArgument, "value on a simplex outside the complex");
  if (v == 0) values.erase(s);
  else values[s] = v;
}

ConstructibleFunction ConstructibleFunction::constant(ComplexPtr k, const Integer& c) {
  ConstructibleFunction f{std::move(k), {}};
  for (const auto& s : f.complex->simplices()) f.set(s, c);
  return f;
}

ConstructibleFunction ConstructibleFunction::indicator_closed(ComplexPtr k, const Simplex& s) {
  ConstructibleFunction f{std::move(k), {}};
  for (const auto& t : faces_of(normalize_simplex(s))) f.set(t, 1);
  return f;
}

bool ConstructibleFunction::operator==(const ConstructibleFunction& o) const {
  same_complex(*this, o);
  return values == o.values;
}

ConstructibleFunction operator+(const ConstructibleFunction& a, const ConstructibleFunction& b) {
  same_complex(a, b);
  ConstructibleFunction r = a;
  for (const auto& [s, v] : b.values) r.set(s, r.at(s) + v);
  return r;
}

ConstructibleFunction operator-(const ConstructibleFunction& a, const ConstructibleFunction& b) {
  return a + Integer(-1) * b;
}

ConstructibleFunction operator*(const Integer& c, const ConstructibleFunction& a) {
  ConstructibleFunction r{a.complex, {}};
  for (const auto& [s, v] : a.values) r.set(s, c * v);
  return r;
}

ConstructibleFunction operator*(const ConstructibleFunction& a, const ConstructibleFunction& b) {
  same_complex(a, b);
  ConstructibleFunction r{a.complex, {}};
  for (const auto& [s, v] : a.values) r.set(s, v * b.at(s));
  return r;
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex out;
  for (int v : s) {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end()) fail(Errc::InvalidArgument, "vertex " + std::to_string(v) + " has no image");
    out.push_back(it->second);
  }
  return normalize_simplex(out);
}

void SimplicialMap::validate() const {
  if (!source || !target) fail(Errc::InvalidArgument, "simplicial map without complexes");
  for (const auto& s : source->simplices())
    if (!target->contains(image(s))) fail(Errc::InvalidArgument, "image of a simplex is not a simplex");
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& h) {
  if (h.target->simplices() != g.source->simplices()) fail(Errc::InvalidArgument, "maps do not compose");
  SimplicialMap r{h.source, g.target, {}};
  for (const auto& [v, w] : h.vertex_map) r.vertex_map[v] = g.image({w})[0];
  return r;
}

Integer cf_integral(const ConstructibleFunction& phi, const SimplicialComplex* over) {
  if (over && !over->is_subcomplex_of(*phi.complex)) fail(Errc::InvalidArgument, "subcomplex not contained in the complex");
  Integer total = 0;
  for (const auto& [s, v] : phi.values)
    if (!over || over->contains(s)) total += v * sgn_pow(simplex_dim(s));
  return total;
}

ConstructibleFunction cf_pullback(const ConstructibleFunction& phi, const SimplicialMap& h) {
  ConstructibleFunction r{h.source, {}};
  for (const auto& s : h.source->simplices()) r.set(s, phi.at(h.image(s)));
  return r;
}

ConstructibleFunction cf_pushforward(const ConstructibleFunction& phi, const SimplicialMap& h) {
  ConstructibleFunction r{h.target, {}};
  for (const auto& [s, v] : phi.values) {
    Simplex t = h.image(s);
    r.set(t, r.at(t) + v * sgn_pow(simplex_dim(s) - simplex_dim(t)));
  }
  return r;
}

ConstructibleFunction cf_dual(const ConstructibleFunction& phi) {
  ConstructibleFunction r{phi.complex, {}};
  for (const auto& [s, v] : phi.values) {
    Integer c = v * sgn_pow(simplex_dim(s));
    for (const auto& f : faces_of(s)) r.set(f, r.at(f) + c);
  }
  return r;
}

ConstructibleFunction cf_link(const ConstructibleFunction& phi) { return phi - cf_dual(phi); }

bool cf_is_euler(const ConstructibleFunction& phi) {
  for (const auto& [s, v] : cf_link(phi).values)
    if (mpz_odd_p(v.get_mpz_t())) return false;
  return true;
}

ConstructibleFunction pi_realize(const SimplicialMap& h) {
  return cf_pushforward(ConstructibleFunction::constant(h.source, 1), h);
}

LocalLink local_link(const SimplicialMap& h, int s) {
  if (!h.target->contains({s})) fail(Errc::InvalidArgument, "link point is not a vertex of the target");
  LocalLink r;
  r.chi_c = 0;
  for (const auto& rho : h.source->simplices()) {
    Simplex img = h.image(rho);
    if (img.size() < 2 || !std::binary_search(img.begin(), img.end(), s)) continue;
    r.cells.push_back(rho);
    r.chi_c += sgn_pow(simplex_dim(rho) - 1);
  }
  return r;
}

FiberedProduct fibered_product(const SimplicialMap& h1, const SimplicialMap& h2) {
  if (h1.target->simplices() != h2.target->simplices()) fail(Errc::InvalidArgument, "maps have different targets");
  FiberedProduct fp;
  std::map<std::pair<int, int>, int> id;
  for (int x : h1.source->vertices())
    for (int y : h2.source->vertices())
      if (h1.vertex_map.at(x) == h2.vertex_map.at(y)) {
        id[{x, y}] = static_cast<int>(fp.pairs.size());
        fp.pairs.emplace_back(x, y);
      }
  // Order keys making both maps monotone.
  auto key1 = [&](int x) { return std::make_pair(h1.vertex_map.at(x), x); };
  auto key2 = [&](int y) { return std::make_pair(h2.vertex_map.at(y), y); };
  std::vector<Simplex> simplices;
  std::set<Simplex> seen;
  for (const auto& r1 : h1.source->simplices()) {
    for (const auto& r2 : h2.source->simplices()) {
      if (h1.image(r1) != h2.image(r2)) continue;
      // Maximal chains in r1 x r2 that cover both simplices and stay over S.
      Simplex a = r1, b = r2;
      std::sort(a.begin(), a.end(), [&](int x, int y) { return key1(x) < key1(y); });
      std::sort(b.begin(), b.end(), [&](int x, int y) { return key2(x) < key2(y); });
      std::vector<int> chain;
      std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t j) {
        chain.push_back(id.at({a[i], b[j]}));
        if (i + 1 == a.size() && j + 1 == b.size()) {
          Simplex s = normalize_simplex(chain);
          if (seen.insert(s).second) simplices.push_back(s);
        } else {
          if (i + 1 < a.size() && id.count({a[i + 1], b[j]})) walk(i + 1, j);
          if (j + 1 < b.size() && id.count({a[i], b[j + 1]})) walk(i, j + 1);
          if (i + 1 < a.size() && j + 1 < b.size() && id.count({a[i + 1], b[j + 1]})) walk(i + 1, j + 1);
        }
        chain.pop_back();
      };
      if (id.count({a[0], b[0]})) walk(0, 0);
    }
  }
  std::vector<int> all_ids(fp.pairs.size());
  std::iota(all_ids.begin(), all_ids.end(), 0);
  auto k = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_simplices(simplices, all_ids));
  fp.projection.source = k;
  fp.projection.target = h1.target;
  for (std::size_t i = 0; i < fp.pairs.size(); ++i)
    fp.projection.vertex_map[static_cast<int>(i)] = h1.vertex_map.at(fp.pairs[i].first);
  fp.projection.validate();
  return fp;
}

void HeightedSurface::validate() const {
  if (!complex) fail(Errc::NonSurface, "no complex");
  const auto& k = *complex;
  if (k.dim() != 2) fail(Errc::NonSurface, "surface must be 2-dimensional");
  std::map<Simplex, int> edge_count;
  for (const auto& s : k.simplices())
    if (s.size() == 3)
      for (const auto& f : faces_of(s))
        if (f.size() == 2) ++edge_count[f];
  for (const auto& s : k.simplices())
    if (s.size() == 2 && edge_count[s] != 2) fail(Errc::NonSurface, "edge not in exactly two triangles");
  for (int v : k.vertices()) {
    if (!heights.count(v)) fail(Errc::InvalidArgument, "vertex " + std::to_string(v) + " has no height");
    SimplicialComplex lk = k.link(v);
    // A single cycle: every vertex of the link has degree 2 and it is connected.
    std::map<int, std::vector<int>> adj;
    for (const auto& e : lk.simplices())
      if (e.size() == 2) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
      }
    if (adj.size() < 3) fail(Errc::NonSurface, "vertex link is not a cycle");
    for (const auto& [x, n] : adj)
      if (n.size() != 2) fail(Errc::NonSurface, "vertex link is not a cycle");
    std::set<int> seen{adj.begin()->first};
    std::vector<int> stack{adj.begin()->first};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (seen.insert(y).second) stack.push_back(y);
    }
    if (seen.size() != adj.size()) fail(Errc::NonSurface, "vertex link is not connected");
  }
}

namespace {

struct FiberResult {
  LaurentPoly beta;
  int nodes = 0;
  int edges = 0;
  int crossings = 0;
};

// Cyclic order of the neighbours of v (the link cycle).
std::vector<int> link_cycle(const SimplicialComplex& k, int v) {
  std::map<int, std::vector<int>> adj;
  for (const auto& s : k.simplices()) {
    if (s.size() != 3 || !std::binary_search(s.begin(), s.end(), v)) continue;
    int a = -1, b = -1;
    for (int x : s)
      if (x != v) (a < 0 ? a : b) = x;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> cyc{adj.begin()->first};
  int prev = -1;
  while (true) {
    int cur = cyc.back();
    int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    if (next == cyc[0]) break;
    prev = cur;
    cyc.push_back(next);
  }
  return cyc;
}

FiberResult fiber(const HeightedSurface& m, const Rational& s) {
  const auto& k = *m.complex;
  auto sg = [&](int v) { return cmp(m.heights.at(v), s) > 0 ? 1 : cmp(m.heights.at(v), s) < 0 ? -1 : 0; };
  // Node keys: {v} for on-level vertices, {a, b} for crossing points on edges.
  std::map<Simplex, int> node;
  auto node_id = [&](const Simplex& key) {
    auto it = node.find(key);
    if (it != node.end()) return it->second;
    int id = static_cast<int>(node.size());
    node.emplace(key, id);
    return id;
  };
  for (int v : k.vertices())
    if (sg(v) == 0) node_id({v});
  struct GEdge {
    int a, b;
  };
  std::vector<GEdge> edges;
  // Branch positions around on-level vertices: (vertex, graph edge, position key).
  std::map<int, std::vector<std::pair<Simplex, int>>> branches;  // vertex -> (other simplex, edge)
  for (const auto& s : k.simplices()) {
    if (s.size() == 2 && sg(s[0]) == 0 && sg(s[1]) == 0) {
      int e = static_cast<int>(edges.size());
      edges.push_back({node_id({s[0]}), node_id({s[1]})});
      branches[s[0]].push_back({{s[1]}, e});
      branches[s[1]].push_back({{s[0]}, e});
    }
    if (s.size() != 3) continue;
    std::vector<int> zero, pos, neg;
    for (int v : s) (sg(v) == 0 ? zero : sg(v) > 0 ? pos : neg).push_back(v);
    if (zero.size() == 3) fail(Errc::InvalidArgument, "level contains a whole triangle");
    if (zero.size() == 1 && pos.size() == 1 && neg.size() == 1) {
      int e = static_cast<int>(edges.size());
      Simplex opp = normalize_simplex({pos[0], neg[0]});
      edges.push_back({node_id({zero[0]}), node_id(opp)});
      branches[zero[0]].push_back({opp, e});
    } else if (zero.empty() && !pos.empty() && !neg.empty()) {
      int apex = pos.size() == 1 ? pos[0] : neg[0];
      const auto& other = pos.size() == 1 ? neg : pos;
      edges.push_back({node_id(normalize_simplex({apex, other[0]})), node_id(normalize_simplex({apex, other[1]}))});
    }
  }
  FiberResult r;
  r.nodes = static_cast<int>(node.size());
  r.edges = static_cast<int>(edges.size());
  std::vector<int> valence(node.size(), 0);
  for (const auto& e : edges) {
    ++valence[e.a];
    ++valence[e.b];
  }
  std::vector<int> par(edges.size());
  std::iota(par.begin(), par.end(), 0);
  std::function<int(int)> find = [&](int x) { return par[x] == x ? x : par[x] = find(par[x]); };
  auto unite = [&](int x, int y) { par[find(x)] = find(y); };
  std::vector<std::vector<int>> incident(node.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].a].push_back(static_cast<int>(i));
    incident[edges[i].b].push_back(static_cast<int>(i));
  }
  int isolated = 0;
  for (const auto& [key, id] : node) {
    int val = valence[id];
    if (val == 0) {
      ++isolated;
      continue;
    }
    if (val % 2 != 0) fail(Errc::NonSurface, "level set has a vertex of odd valence");
    if (val >= 6) fail(Errc::MonkeySaddle, "degenerate saddle on the level set");
    if (val == 2) {
      unite(incident[id][0], incident[id][1]);
      continue;
    }
    // Transverse crossing: pair opposite branches in the cyclic star order.
    int v = key[0];
    std::vector<int> cyc = link_cycle(k, v);
    const int n = static_cast<int>(cyc.size());
    auto pos_of = [&](const Simplex& other) {
      auto idx = [&](int x) { return static_cast<int>(std::find(cyc.begin(), cyc.end(), x) - cyc.begin()); };
      if (other.size() == 1) return 2 * idx(other[0]);
      int i = idx(other[0]), j = idx(other[1]);
      if ((i + 1) % n == j) return 2 * i + 1;
      return 2 * j + 1;
    };
    std::vector<std::pair<int, int>> ordered;
    for (const auto& [other, e] : branches[v]) ordered.emplace_back(pos_of(other), e);
    std::sort(ordered.begin(), ordered.end());
    unite(ordered[0].second, ordered[2].second);
    unite(ordered[1].second, ordered[3].second);
    ++r.crossings;
  }
  int circles = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++circles;
  r.beta = LaurentPoly::monomial(circles, 1) + LaurentPoly(circles - r.crossings + isolated);
  return r;
}

}  // namespace

LevelSetBeta level_set_beta(const HeightedSurface& m, const Rational& s) {
  m.validate();
  std::optional<Rational> below, above;
  for (const auto& [v, h] : m.heights) {
    if (h < s && (!below || h > *below)) below = h;
    if (h > s && (!above || h < *above)) above = h;
  }
  Rational lo = below ? Rational((*below + s) / 2) : Rational(s - 1);
  Rational hi = above ? Rational((*above + s) / 2) : Rational(s + 1);
  FiberResult at = fiber(m, s);
  LevelSetBeta r;
  r.beta = at.beta;
  r.beta_link = fiber(m, lo).beta + fiber(m, hi).beta;
  r.nodes = at.nodes;
  r.edges = at.edges;
  r.crossings = at.crossings;
  return r;
}

HeightedSurface torus16() {
  const int n = 16;
  auto c = [](int i) {
    auto micro = [](long p) {
      Rational q(p, 1000000);
      q.canonicalize();
      return q;
    };
    static const Rational base[5] = {Rational(1), micro(923880), micro(707107), micro(382683), Rational(0)};
    int k = ((i % 16) + 16) % 16;
    if (k > 8) k = 16 - k;
    return k > 4 ? Rational(-base[8 - k]) : base[k];
  };
  auto vid = [&](int i, int j) { return ((i + n) % n) * n + (j + n) % n; };
  std::vector<Simplex> tris;
  HeightedSurface m;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      tris.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      tris.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
      m.heights[vid(i, j)] = -c(i) * (2 + c(j));
    }
  m.complex = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_simplices(tris));
  return m;
}

}  // namespace realmot
