#include "realmot/upoly.hpp"

#include <algorithm>

#include "realmot/error.hpp"

namespace realmot {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, int e) {
  std::vector<Rational> v(static_cast<std::size_t>(e) + 1, 0);
  v[e] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int UPoly::sign_at(const Rational& x) const { return sgn(eval(x)); }

int UPoly::sign_at_pos_inf() const { return is_zero() ? 0 : sgn(lead()); }

int UPoly::sign_at_neg_inf() const {
  if (is_zero()) return 0;
  return (degree() % 2 == 0) ? sgn(lead()) : -sgn(lead());
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / lead();
  return inv * *this;
}

int UPoly::root_multiplicity(const Rational& x) const {
  if (is_zero()) fail(Errc::InvalidArgument, "root multiplicity of zero polynomial");
  int m = 0;
  UPoly p = *this;
  while (!p.is_zero() && p.eval(x) == 0) {
    ++m;
    p = p.derivative();
  }
  return m;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + Rational(-1) * b; }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(v));
}

UPoly operator*(const Rational& s, const UPoly& a) {
  std::vector<Rational> v = a.c_;
  for (auto& x : v) x *= s;
  return UPoly(std::move(v));
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) fail(Errc::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  std::vector<Rational> quo(std::max(0, a.degree() - db + 1), 0);
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / b.lead();
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero()) return p;
  UPoly g = gcd(p, p.derivative());
  UPoly q, r;
  divmod(p, g, q, r);
  return q.monic();
}

namespace {

std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    UPoly q, r;
    divmod(chain[chain.size() - 2], chain.back(), q, r);
    if (r.is_zero()) break;
    chain.push_back(Rational(-1) * r);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at(const std::vector<UPoly>& chain, const Bound& x, bool upper) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& p : chain) {
    if (x)
      s.push_back(p.sign_at(*x));
    else
      s.push_back(upper ? p.sign_at_pos_inf() : p.sign_at_neg_inf());
  }
  return variations(s);
}

// Distinct roots of squarefree q in (lo, hi); endpoints may be roots.
int count_open(const std::vector<UPoly>& chain, const Bound& lo, const Bound& hi) {
  int n = variations_at(chain, lo, false) - variations_at(chain, hi, true);
  if (hi && chain[0].eval(*hi) == 0) --n;
  return n;
}

}  // namespace

int count_real_roots(const UPoly& p, const Bound& lo, const Bound& hi, bool exclude_zero) {
  if (p.is_zero()) fail(Errc::InvalidArgument, "root count of the zero polynomial");
  if (lo && hi && *lo >= *hi) return 0;
  UPoly q = squarefree_part(p);
  if (q.degree() == 0) return 0;
  auto chain = sturm_chain(q);
  int n = count_open(chain, lo, hi);
  if (exclude_zero && q.eval(0) == 0 && (!lo || *lo < 0) && (!hi || *hi > 0)) --n;
  return n;
}

std::vector<RootInterval> isolate_real_roots(const UPoly& p) {
  if (p.is_zero()) fail(Errc::InvalidArgument, "root isolation of the zero polynomial");
  UPoly q = squarefree_part(p);
  std::vector<RootInterval> out;
  if (q.degree() <= 0) return out;
  auto chain = sturm_chain(q);
  // Cauchy bound: every root lies in (-B, B).
  Rational B = 0;
  for (int i = 0; i < q.degree(); ++i) {
    Rational a = abs(q.coeffs()[i] / q.lead());
    if (a > B) B = a;
  }
  B += 1;
  std::vector<std::pair<Rational, Rational>> stack{{-B, B}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int n = count_open(chain, lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back({lo, hi});
      continue;
    }
    Rational mid = (lo + hi) / 2;
    if (q.eval(mid) == 0) out.push_back({mid, mid});
    stack.push_back({lo, mid});
    stack.push_back({mid, hi});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

void refine(const UPoly& p, RootInterval& r, const Rational& width) {
  if (r.exact()) return;
  UPoly q = squarefree_part(p);
  auto chain = sturm_chain(q);
  while (r.hi - r.lo > width) {
    Rational mid = (r.lo + r.hi) / 2;
    if (q.eval(mid) == 0) {
      r.lo = r.hi = mid;
      return;
    }
    if (count_open(chain, r.lo, mid) == 1)
      r.hi = mid;
    else
      r.lo = mid;
  }
}

}  // namespace realmot
