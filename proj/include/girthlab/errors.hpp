#pragma once

#include <stdexcept>
#include <string>

namespace girthlab {

// Machine-readable failure codes. The CLI maps these to stable identifiers in
// JSON error objects; tests match on them instead of message text.
enum class ErrorCode {
  UnknownSymbol,
  ParseError,
  ValidationError,
  NotMember,
  NonBasis,
  DuplicateElement,
  IdentityGenerator,
  GeneratorInSubgroup,
  PreconditionViolated,
  PhiInverseUnavailable,
  NotAscending,
  SubgroupNotProper,
  SearchExhausted,
  NoPairFound,
  SubstitutionCollapsed,
  CorpusMissing,
  Unsupported,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace girthlab
