#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace realmot {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

long long to_ll(const Integer& x);  // throws InvalidArgument when out of range
int sign(const Integer& x);
int sign(const Rational& x);

long long gcd_ll(long long a, long long b);
// Returns g = gcd(a, b) >= 0 and sets x, y with a*x + b*y = g.
long long ext_gcd(long long a, long long b, long long& x, long long& y);

inline Integer Z(long long x) { return Integer(static_cast<long>(x)); }
inline Rational Q(long long x) { return Rational(static_cast<long>(x)); }

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row-major

QVec to_qvec(const std::vector<long long>& v);

int rank(QMat m);
// Basis of {x : m x = 0}; cols is the number of columns (needed when m has no rows).
std::vector<QVec> nullspace(QMat m, std::size_t cols);
// Scale a rational vector to a primitive integer vector with the same direction.
std::vector<long long> primitive(const QVec& v);

}  // namespace realmot
