#pragma once

#include <stdexcept>
#include <string>

namespace realmot {

enum class Errc {
  Parse = 1,
  InvalidArgument,
  BaseMismatch,
  UnrepresentableProduct,
  DualityUndefined,
  UnknownBaseMorphism,
  PropernessLost,
  NotWeightedHomogeneous,
  NotConvenient,
  NonSimplicialCone,
  MissingTableEntry,
  MissingStratumClass,
  UnsupportedDimension,
  SingularLevelCurve,
  MonkeySaddle,
  NonSurface,
  DivergentBlock,
  Degenerate,
  PreconditionFailed,
  Unsupported,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace realmot
