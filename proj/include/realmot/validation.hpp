#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "realmot/zeta.hpp"

namespace realmot {

enum class Verdict { Pass, Fail, Flagged };
const char* verdict_name(Verdict v);

struct ValidationCase {
  std::string suite;
  std::string name;
  std::string routes;
  std::string expected;
  std::string got;
  Verdict verdict = Verdict::Fail;
  std::string notes;
};

struct ValidationOptions {
  bool corfib_printed = false;  // evaluate DL Milnor fibres with the (L-1) coefficient
  QSigma qsigma = QSigma::PositiveGens;
  int random_cases = 200;
  std::uint64_t seed = 1729;
};

// dl, wh, dual, sphere, torus, cf, parity, flags
const std::vector<std::string>& validation_suites();

// `suite` is one of validation_suites() or "all"; unknown names throw InvalidArgument.
std::vector<ValidationCase> run_validation(const std::string& suite, const ValidationOptions& opts = {});

}  // namespace realmot
