#include "realmot/numeric.hpp"

#include <cstdlib>
#include <numeric>

#include "realmot/error.hpp"

namespace realmot {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Parse: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::UnrepresentableProduct: return "UnrepresentableProduct";
    case Errc::DualityUndefined: return "DualityUndefined";
    case Errc::UnknownBaseMorphism: return "UnknownBaseMorphism";
    case Errc::PropernessLost: return "PropernessLost";
    case Errc::NotWeightedHomogeneous: return "NotWeightedHomogeneous";
    case Errc::NotConvenient: return "NotConvenient";
    case Errc::NonSimplicialCone: return "NonSimplicialCone";
    case Errc::MissingTableEntry: return "MissingTableEntry";
    case Errc::MissingStratumClass: return "MissingStratumClass";
    case Errc::UnsupportedDimension: return "UnsupportedDimension";
    case Errc::SingularLevelCurve: return "SingularLevelCurve";
    case Errc::MonkeySaddle: return "MonkeySaddle";
    case Errc::NonSurface: return "NonSurface";
    case Errc::DivergentBlock: return "DivergentBlock";
    case Errc::Degenerate: return "Degenerate";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::Unsupported: return "Unsupported";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(Errc::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    std::size_t a = t.find_first_not_of(" \t");
    std::size_t b = t.find_last_not_of(" \t");
    t = a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
  };
  trim(s);
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto to_int = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return Integer(t);
  };
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) fail(Errc::Parse, "not a rational number: '" + s + "'");
    return Rational(to_int(s));
  }
  std::string n = s.substr(0, slash), d = s.substr(slash + 1);
  trim(n);
  trim(d);
  if (!valid_int(n) || !valid_int(d) || d[0] == '-' || d[0] == '+')
    fail(Errc::Parse, "not a rational number: '" + s + "'");
  return make_rational(to_int(n), to_int(d));
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

long long to_ll(const Integer& x) {
  if (!x.fits_slong_p()) fail(Errc::InvalidArgument, "integer out of machine range: " + x.get_str());
  return x.get_si();
}

int sign(const Integer& x) { return sgn(x); }
int sign(const Rational& x) { return sgn(x); }

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  long long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    long long q = old_r / r;
    long long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMat& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

QVec to_qvec(const std::vector<long long>& v) {
  QVec q;
  q.reserve(v.size());
  for (long long x : v) q.push_back(Q(x));
  return q;
}

int rank(QMat m) {
  if (m.empty()) return 0;
  return static_cast<int>(rref(m, m[0].size()).size());
}

std::vector<QVec> nullspace(QMat m, std::size_t cols) {
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<long long> primitive(const QVec& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> iv;
  Integer g = 0;
  for (const auto& x : v) {
    Integer n = x.get_num() * (l / x.get_den());
    iv.push_back(n);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  std::vector<long long> out;
  for (auto& n : iv) out.push_back(g == 0 ? 0 : to_ll(n / g));
  return out;
}

}  // namespace realmot
