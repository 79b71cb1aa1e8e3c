#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "realmot/laurent.hpp"

namespace realmot {

struct Generator {
  std::string name;
  int dim = 0;
  std::string base = "pt";
  bool proper = false;
  bool nonsingular = false;
  bool compact = false;
  std::optional<LaurentPoly> beta;
  // Optional definition as a class expression in other generators, e.g. an
  // open stratum written as its compactification minus boundary points.
  std::optional<std::string> equals;
};

using GeneratorPtr = std::shared_ptr<const Generator>;

struct BaseMorphism {
  std::string source;
  std::string target;
  bool proper = false;
};

class MotivicClass {
 public:
  struct Term {
    GeneratorPtr gen;  // null for the unit class [S -> S]
    LaurentPoly coeff;
  };

  explicit MotivicClass(std::string base = "pt") : base_(std::move(base)) {}
  static MotivicClass scalar(const LaurentPoly& c, std::string base = "pt");
  static MotivicClass of(GeneratorPtr g, const LaurentPoly& c = 1);

  const std::string& base() const { return base_; }
  // Keyed by generator name; "" is the unit term.
  const std::map<std::string, Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  LaurentPoly scalar_part() const;
  LaurentPoly coeff_of(const std::string& gen_name) const;

  void add_term(GeneratorPtr g, const LaurentPoly& c);
  MotivicClass scaled(const LaurentPoly& s) const;
  MotivicClass rebased(const std::string& base) const;  // scalars only

  std::string to_string() const;

  friend bool operator==(const MotivicClass& a, const MotivicClass& b);
  friend bool operator!=(const MotivicClass& a, const MotivicClass& b) { return !(a == b); }

 private:
  std::string base_;
  std::map<std::string, Term> terms_;
};

enum class ClassOp { Add, Sub, Mul };
MotivicClass class_combine(const MotivicClass& x, const MotivicClass& y, ClassOp op);
MotivicClass operator+(const MotivicClass& x, const MotivicClass& y);
MotivicClass operator-(const MotivicClass& x, const MotivicClass& y);
MotivicClass operator*(const MotivicClass& x, const MotivicClass& y);
MotivicClass operator*(const LaurentPoly& s, const MotivicClass& x);

struct BetaResult {
  std::optional<LaurentPoly> value;
  std::vector<std::string> unknown;  // generators lacking beta
  bool known() const { return value.has_value(); }
};
BetaResult beta_realize(const MotivicClass& x);

MotivicClass dual_class(const MotivicClass& x);
MotivicClass link_relative(const MotivicClass& x);

enum class PushMode { Shriek, Star };

// Registry of generators and base morphisms. Built once, then read-only.
class Context {
 public:
  void add_generator(Generator g);
  void add_morphism(BaseMorphism m);
  GeneratorPtr find(const std::string& name) const;
  GeneratorPtr generator(const std::string& name) const;  // throws when unknown
  const BaseMorphism* morphism(const std::string& source, const std::string& target) const;
  const std::map<std::string, GeneratorPtr>& generators() const { return gens_; }
  const std::vector<BaseMorphism>& morphisms() const { return morphs_; }

  // Class-expression grammar. Without a base, it is taken from the first
  // generator mentioned, else "pt".
  MotivicClass parse(std::string_view text, std::optional<std::string> base = std::nullopt) const;
  // Replaces generators carrying a definition, recursively.
  MotivicClass expand(const MotivicClass& x) const;

 private:
  std::map<std::string, GeneratorPtr> gens_;
  std::vector<BaseMorphism> morphs_;
};

MotivicClass pushforward_class(const MotivicClass& x, const Context& ctx, const std::string& target_base,
                               PushMode mode);

// True iff every term's coefficient is even at u = -1.
bool euler_parity_check(const MotivicClass& x);

}  // namespace realmot
