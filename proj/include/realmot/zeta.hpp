#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "realmot/curve.hpp"
#include "realmot/motivic.hpp"
#include "realmot/poly.hpp"
#include "realmot/polyhedra.hpp"

namespace realmot {

// L^a T^k / (1 - L^a T^l), 1 <= k <= l.
struct GeomBlock {
  long long a = 0;
  long long k = 1;
  long long l = 1;
  auto operator<=>(const GeomBlock&) const = default;
};
GeomBlock geom_block(long long a, long long k, long long l);  // throws DivergentBlock

// L^{-s} T^m
struct LatticeTerm {
  long long s = 0;
  long long m = 0;
  auto operator<=>(const LatticeTerm&) const = default;
};

// sum_a L^{-s_a} T^{m_a} / prod_v (1 - L^{-s_v} T^{m_v})
struct PipedBlock {
  std::vector<LatticeTerm> lattice;
  std::vector<LatticeTerm> denominators;
  auto operator<=>(const PipedBlock&) const = default;
};
PipedBlock piped_block(std::vector<LatticeTerm> lattice, std::vector<LatticeTerm> denominators);

using Block = std::variant<GeomBlock, PipedBlock>;

struct Summand {
  MotivicClass coeff;
  std::vector<Block> blocks;
};

struct ZetaSeries {
  std::string base = "pt";
  std::vector<Summand> summands;

  std::string to_string() const;
};

// Sorted blocks, merged equal block lists, zero summands dropped.
ZetaSeries normalize(const ZetaSeries& z);
bool same_closed_form(const ZetaSeries& a, const ZetaSeries& b);

enum class Sign { Plus, Minus };
const char* sign_name(Sign s);

struct ResolutionComponent {
  std::string id;
  long long N = 1;
  long long nu = 1;
};

struct Stratum {
  std::vector<std::string> I;
  std::optional<MotivicClass> plus;
  std::optional<MotivicClass> minus;
  std::optional<MotivicClass> unsigned_class;
};

struct ResolutionDatum {
  std::string base = "pt";
  std::vector<ResolutionComponent> components;
  std::vector<Stratum> strata;

  void validate() const;
};

ZetaSeries dl_zeta(const ResolutionDatum& res, Sign sign);
// Coefficients of T^1 .. T^n.
std::vector<MotivicClass> expand_series(const ZetaSeries& z, int n);
LaurentPoly block_limit(const Block& b);
MotivicClass limit_at_infinity(const ZetaSeries& z);
MotivicClass milnor_fibre(const ZetaSeries& z);
// The closed form with the printed coefficient (L-1)^{|I|-1}; for comparison only.
MotivicClass milnor_fibre_printed(const ResolutionDatum& res, Sign sign);

enum class TableProvenance { Computed, User };

struct TorusClassTable {
  std::map<std::pair<std::size_t, SignTag>, MotivicClass> entries;
  TableProvenance provenance = TableProvenance::User;

  const MotivicClass& at(std::size_t face, SignTag tag) const;  // throws MissingTableEntry
  void validate(const NewtonPolyhedron& np) const;
};

// Torus classes of every compact face; faces with more than two effective
// variables raise UnsupportedDimension.
TorusClassTable compute_torus_table(const MultiPoly& f, const NewtonPolyhedron& np);

enum class QSigma { PositiveGens, AllGens };

struct NewtonConfig {
  QSigma qsigma = QSigma::PositiveGens;
  bool assume_nondegenerate = false;  // required when d >= 3
};

ZetaSeries newton_zeta(const MultiPoly& f, const TorusClassTable& table, Sign sign, const NewtonConfig& cfg = {});

// Class of {f = +1 / -1 / 0} in R^d assembled from the torus pieces of the
// coordinate faces; f must be convenient weighted homogeneous.
MotivicClass level_set_class(const MultiPoly& f, const NewtonPolyhedron& np, const TorusClassTable& table,
                             SignTag tag);

// [{f = +-1}] - [{f = 0}] + 1 for convenient weighted homogeneous f.
MotivicClass wh_milnor(const MultiPoly& f, const TorusClassTable& table, Sign sign, bool assume_nondegenerate = false);

struct DualityCheck {
  bool indeterminate = false;  // beta unknown
  bool beta_ok = false;
  std::optional<bool> symbolic_ok;  // when every generator is dualizable
  bool passed() const { return !indeterminate && beta_ok && symbolic_ok.value_or(true); }
};
// With a context, generators carrying definitions are expanded first.
DualityCheck duality_milnor_check(const MotivicClass& psi, int d, const Context* ctx = nullptr);

struct SphereLinkCheck {
  bool certified = false;  // nonnegativity and isolated zero
  LaurentPoly beta;
  bool passed = false;
};
SphereLinkCheck sphere_link_check(const MultiPoly& f, const TorusClassTable& table, bool assume_preconditions = false);

struct RouteResult {
  std::string route;  // "dl", "newton", "wh"
  MotivicClass psi;
  BetaResult beta;
};

struct ValidationReport {
  Sign sign = Sign::Plus;
  std::vector<RouteResult> routes;
  std::vector<std::string> unavailable;  // route: reason
  std::string verdict;  // AGREE, DISAGREE or INSUFFICIENT
  std::vector<std::string> flags;
};

ValidationReport cross_validate(const MultiPoly& f, const std::optional<ResolutionDatum>& res,
                                const std::optional<TorusClassTable>& table, Sign sign,
                                const NewtonConfig& cfg = {});

}  // namespace realmot
