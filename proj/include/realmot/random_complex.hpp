#pragma once

// Random simplicial complexes, functions and maps for property checks.

#include <algorithm>
#include <memory>
#include <random>

#include "realmot/constructible.hpp"

namespace realmot::cfrandom {

inline long pick(std::mt19937_64& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

// Closure of a few random simplices on n vertices, at most max_simplices faces in total.
inline ComplexPtr random_complex(std::mt19937_64& g, int max_simplices = 30, int max_dim = 2) {
  while (true) {
    int n = static_cast<int>(pick(g, 2, 7));
    std::vector<Simplex> gens;
    int count = static_cast<int>(pick(g, 1, 6));
    for (int i = 0; i < count; ++i) {
      std::vector<int> vs(n);
      for (int v = 0; v < n; ++v) vs[v] = v;
      std::shuffle(vs.begin(), vs.end(), g);
      int size = static_cast<int>(pick(g, 1, std::min(max_dim + 1, n)));
      gens.push_back(normalize_simplex(Simplex(vs.begin(), vs.begin() + size)));
    }
    std::vector<int> extra;
    if (pick(g, 0, 3) == 0) extra.push_back(n);
    auto k = SimplicialComplex::from_simplices(gens, extra);
    if (static_cast<int>(k.simplices().size()) <= max_simplices) return std::make_shared<const SimplicialComplex>(k);
  }
}

inline ConstructibleFunction random_function(std::mt19937_64& g, const ComplexPtr& k) {
  ConstructibleFunction f{k, {}};
  for (const auto& s : k->simplices())
    if (pick(g, 0, 2) > 0) f.set(s, pick(g, -5, 5));
  return f;
}

// Random map out of `source`: vertices go to 1..m targets, target = closure of the images.
inline SimplicialMap random_map_from(std::mt19937_64& g, const ComplexPtr& source) {
  int m = static_cast<int>(pick(g, 1, std::max<long>(1, static_cast<long>(source->vertices().size()))));
  SimplicialMap h;
  h.source = source;
  for (int v : source->vertices()) h.vertex_map[v] = 100 + static_cast<int>(pick(g, 0, m - 1));
  std::vector<Simplex> imgs;
  for (const auto& s : source->simplices()) imgs.push_back(h.image(s));
  h.target = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_simplices(imgs));
  h.validate();
  return h;
}

// Random complex over a given target: vertices mapped at random into target
// vertices, simplices drawn as preimage lifts of target simplices.
inline SimplicialMap random_map_to(std::mt19937_64& g, const ComplexPtr& target, int max_simplices = 30) {
  const auto& tv = target->vertices();
  std::vector<Simplex> tsimp(target->simplices().begin(), target->simplices().end());
  while (true) {
    int n = static_cast<int>(pick(g, 1, 6));
    SimplicialMap h;
    h.target = target;
    for (int v = 0; v < n; ++v) h.vertex_map[v] = tv[pick(g, 0, static_cast<long>(tv.size()) - 1)];
    std::vector<Simplex> gens;
    std::vector<int> extra;
    for (int v = 0; v < n; ++v) extra.push_back(v);
    int count = static_cast<int>(pick(g, 0, 5));
    for (int i = 0; i < count; ++i) {
      std::vector<int> vs(n);
      for (int v = 0; v < n; ++v) vs[v] = v;
      std::shuffle(vs.begin(), vs.end(), g);
      int size = static_cast<int>(pick(g, 2, std::min(3, std::max(2, n))));
      if (size > n) continue;
      Simplex s = normalize_simplex(Simplex(vs.begin(), vs.begin() + size));
      Simplex img;
      for (int v : s) img.push_back(h.vertex_map[v]);
      if (target->contains(normalize_simplex(img))) gens.push_back(s);
    }
    auto k = SimplicialComplex::from_simplices(gens, extra);
    if (static_cast<int>(k.simplices().size()) > max_simplices) continue;
    h.source = std::make_shared<const SimplicialComplex>(k);
    h.validate();
    return h;
  }
}

}  // namespace realmot::cfrandom
