#include "realmot/polyhedra.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <map>
#include <set>

#include "realmot/error.hpp"

namespace realmot {

namespace {

long long dot(const IVec& a, const Exponent& e) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * e[i];
  return s;
}

QVec to_q(const IVec& v) { return to_qvec(v); }

IVec unit(std::size_t d, std::size_t k) {
  IVec e(d, 0);
  e[k] = 1;
  return e;
}

// Affine rank of a point set plus a set of direction vectors.
int affine_rank(const std::vector<Exponent>& pts, const std::vector<IVec>& dirs, std::size_t d) {
  QMat m;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    QVec row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = pts[i][j] - pts[0][j];
    m.push_back(row);
  }
  for (const auto& v : dirs) m.push_back(to_q(v));
  return rank(m);
}

struct FaceKey {
  std::vector<std::size_t> pts;  // indices into support
  std::vector<std::size_t> rec;  // recession coordinate directions
  bool operator<(const FaceKey& o) const { return std::tie(pts, rec) < std::tie(o.pts, o.rec); }
};

template <class T>
std::vector<T> intersect(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

const Face* NewtonPolyhedron::find_compact_face(const std::vector<Exponent>& points) const {
  std::vector<Exponent> p = points;
  std::sort(p.begin(), p.end());
  for (const auto& f : compact_faces)
    if (f.support_points == p) return &f;
  return nullptr;
}

NewtonPolyhedron newton_polyhedron(const std::vector<Exponent>& support_in, std::size_t d) {
  if (support_in.empty()) fail(Errc::InvalidArgument, "empty support");
  if (d == 0 || d > 4) fail(Errc::UnsupportedDimension, "Newton polyhedra are supported for 1 <= d <= 4");
  NewtonPolyhedron np;
  np.dim_ambient = d;
  std::set<Exponent> uniq;
  for (const auto& e : support_in) {
    if (e.size() != d) fail(Errc::InvalidArgument, "support vector of wrong length");
    for (int x : e)
      if (x < 0) fail(Errc::InvalidArgument, "negative exponent in support");
    uniq.insert(e);
  }
  np.support.assign(uniq.begin(), uniq.end());
  const auto& S = np.support;

  std::set<IVec> normals;
  auto consider = [&](const IVec& n) {
    bool nonneg = std::all_of(n.begin(), n.end(), [](long long x) { return x >= 0; });
    bool nonpos = std::all_of(n.begin(), n.end(), [](long long x) { return x <= 0; });
    if (!nonneg && !nonpos) return;
    IVec v = n;
    if (!nonneg)
      for (auto& x : v) x = -x;
    if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) return;
    long long mn = dot(v, S[0]);
    for (const auto& e : S) mn = std::min(mn, dot(v, e));
    std::vector<Exponent> on;
    for (const auto& e : S)
      if (dot(v, e) == mn) on.push_back(e);
    std::vector<IVec> rec;
    for (std::size_t k = 0; k < d; ++k)
      if (v[k] == 0) rec.push_back(unit(d, k));
    if (affine_rank(on, rec, d) == static_cast<int>(d) - 1) normals.insert(v);
  };

  if (d == 1) {
    normals.insert(IVec{1});
  } else {
    std::set<IVec> dirs;
    for (std::size_t i = 0; i < S.size(); ++i)
      for (std::size_t j = i + 1; j < S.size(); ++j) {
        QVec diff(d);
        for (std::size_t k = 0; k < d; ++k) diff[k] = S[j][k] - S[i][k];
        IVec p = primitive(diff);
        auto first = std::find_if(p.begin(), p.end(), [](long long x) { return x != 0; });
        if (*first < 0)
          for (auto& x : p) x = -x;
        dirs.insert(p);
      }
    for (std::size_t k = 0; k < d; ++k) dirs.insert(unit(d, k));
    std::vector<IVec> D(dirs.begin(), dirs.end());
    for_each_subset(D.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
      QMat m;
      for (auto i : idx) m.push_back(to_q(D[i]));
      auto ns = nullspace(m, d);
      if (ns.size() == 1) consider(primitive(ns[0]));
    });
  }

  std::vector<FaceKey> facet_keys;
  for (const auto& n : normals) {
    long long mn = dot(n, S[0]);
    for (const auto& e : S) mn = std::min(mn, dot(n, e));
    np.facets.push_back({n, mn});
    FaceKey key;
    for (std::size_t i = 0; i < S.size(); ++i)
      if (dot(n, S[i]) == mn) key.pts.push_back(i);
    for (std::size_t k = 0; k < d; ++k)
      if (n[k] == 0) key.rec.push_back(k);
    facet_keys.push_back(key);
  }

  std::set<FaceKey> faces(facet_keys.begin(), facet_keys.end());
  std::vector<FaceKey> frontier(faces.begin(), faces.end());
  while (!frontier.empty()) {
    std::vector<FaceKey> next;
    for (const auto& f : frontier)
      for (const auto& g : facet_keys) {
        FaceKey h{intersect(f.pts, g.pts), intersect(f.rec, g.rec)};
        if (h.pts.empty()) continue;
        if (faces.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }

  std::vector<Face> compact;
  for (const auto& k : faces) {
    if (!k.rec.empty()) continue;
    Face f;
    for (auto i : k.pts) f.support_points.push_back(S[i]);
    f.dim_face = affine_rank(f.support_points, {}, d);
    for (std::size_t i = 0; i < d; ++i) {
      bool all_zero = std::all_of(f.support_points.begin(), f.support_points.end(),
                                  [&](const Exponent& e) { return e[i] == 0; });
      if (all_zero) f.hyperplane_axes.push_back(i);
    }
    compact.push_back(std::move(f));
  }
  std::sort(compact.begin(), compact.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dim_face, a.support_points) < std::tie(b.dim_face, b.support_points);
  });
  for (std::size_t i = 0; i < compact.size(); ++i) compact[i].id = i;
  np.compact_faces = std::move(compact);
  return np;
}

MultiplicityResult multiplicity(const NewtonPolyhedron& np, const QVec& a) {
  if (a.size() != np.dim_ambient) fail(Errc::InvalidArgument, "weight vector of wrong length");
  bool nonzero = false;
  for (const auto& x : a) {
    if (x < 0) fail(Errc::InvalidArgument, "weight vector must be nonnegative");
    if (x != 0) nonzero = true;
  }
  if (!nonzero) fail(Errc::InvalidArgument, "weight vector must be nonzero");
  MultiplicityResult r;
  std::vector<Rational> vals;
  for (const auto& e : np.support) {
    Rational s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += a[i] * e[i];
    vals.push_back(s);
  }
  r.m = *std::min_element(vals.begin(), vals.end());
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (vals[i] == r.m) r.face_points.push_back(np.support[i]);
  bool compact = std::all_of(a.begin(), a.end(), [](const Rational& x) { return x > 0; });
  if (compact) {
    const Face* f = np.find_compact_face(r.face_points);
    if (!f) fail(Errc::Internal, "minimizing face missing from the face list");
    r.compact_face_id = f->id;
  }
  return r;
}

Rational multiplicity_value(const NewtonPolyhedron& np, const IVec& a) {
  long long best = 0;
  bool first = true;
  for (const auto& e : np.support) {
    long long s = dot(a, e);
    if (first || s < best) best = s;
    first = false;
  }
  return Q(best);
}

DualFan dual_fan(const NewtonPolyhedron& np) {
  DualFan fan;
  const std::size_t d = np.dim_ambient;
  for (const auto& face : np.compact_faces) {
    Cone c;
    for (const auto& fct : np.facets) {
      bool contains = std::all_of(face.support_points.begin(), face.support_points.end(),
                                  [&](const Exponent& e) { return dot(fct.normal, e) == fct.value; });
      if (contains) c.generators.push_back(fct.normal);
    }
    std::sort(c.generators.begin(), c.generators.end());
    QMat m;
    for (const auto& g : c.generators) m.push_back(to_q(g));
    c.simplicial = rank(m) == static_cast<int>(c.generators.size());
    for (const auto& g : c.generators) {
      bool is_unit = std::count(g.begin(), g.end(), 0) == static_cast<long>(d) - 1 &&
                     std::count(g.begin(), g.end(), 1) == 1;
      if (is_unit && multiplicity_value(np, g) == 0)
        c.p_gens.push_back(g);
      else
        c.v_gens.push_back(g);
    }
    fan.entries.push_back({face, std::move(c)});
  }
  return fan;
}

std::optional<QVec> cone_coordinates(const std::vector<IVec>& gens, const QVec& a) {
  if (gens.empty()) return std::nullopt;
  const std::size_t d = gens[0].size(), l = gens.size();
  // Augmented system [G | a] with G = columns gens.
  QMat m(d, QVec(l + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < l; ++j) m[i][j] = Q(gens[j][i]);
    m[i][l] = a[i];
  }
  auto ns = nullspace(m, l + 1);
  // Solution exists iff some null vector has nonzero last coordinate; unique when
  // the gens are independent (then the null space is one-dimensional).
  for (const auto& v : ns) {
    if (v[l] == 0) continue;
    if (ns.size() != 1) fail(Errc::NonSimplicialCone, "generators are linearly dependent");
    QVec lam(l);
    for (std::size_t j = 0; j < l; ++j) lam[j] = -v[j] / v[l];
    return lam;
  }
  return std::nullopt;
}

std::vector<IVec> parallelepiped_points(const std::vector<IVec>& gens) {
  if (gens.empty()) return {IVec{}};
  const std::size_t d = gens[0].size();
  QMat m;
  for (const auto& g : gens) {
    if (g.size() != d) fail(Errc::InvalidArgument, "generators of different lengths");
    m.push_back(to_q(g));
  }
  if (rank(m) != static_cast<int>(gens.size()))
    fail(Errc::NonSimplicialCone, "parallelepiped needs linearly independent generators");
  IVec lo(d, 0), hi(d, 0);
  long double volume = 1;
  for (std::size_t j = 0; j < d; ++j) {
    for (const auto& g : gens) {
      lo[j] += std::min(0LL, g[j]);
      hi[j] += std::max(0LL, g[j]);
    }
    volume *= static_cast<long double>(hi[j] - lo[j] + 1);
  }
  if (volume > 2e7) fail(Errc::InvalidArgument, "parallelepiped bounding box too large");
  std::vector<IVec> out;
  IVec a = lo;
  for (;;) {
    QVec q = to_q(a);
    auto lam = cone_coordinates(gens, q);
    if (lam && std::all_of(lam->begin(), lam->end(), [](const Rational& x) { return x > 0 && x <= 1; }))
      out.push_back(a);
    std::size_t j = 0;
    while (j < d && a[j] == hi[j]) a[j] = lo[j], ++j;
    if (j == d) break;
    ++a[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace realmot
