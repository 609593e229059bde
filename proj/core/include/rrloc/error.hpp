#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rrloc {

/// Failure categories. The CLI maps these onto exit statuses.
enum class ErrorKind {
  Config,                 // unsupported group type/rank, bad run configuration
  Input,                  // malformed or out-of-contract arguments
  DegenerateOrbit,        // covector on a Weyl wall where a regular one is required
  SingularValue,          // 0 is not a regular value of the moment map
  Inadmissible,           // prequantization condition violated
  GeneratorDeficiency,    // invariant generators cannot express the requested class
  NonGeneric,             // pole collision / non-generic direction or coordinates
  Convergence,            // zero-phase residue term without enough decay
  ExactDivision,          // caller asked for a division that leaves a remainder
  InternalInconsistency,  // an identity that must hold exactly did not
  CalibrationDrift,       // frozen normalization constant changed
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace rrloc
