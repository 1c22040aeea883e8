#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kci {

/// Machine-readable failure classes surfaced by every module and by the CLI.
enum class ErrorCode {
  NonPrimeModulus,
  InhomogeneousRelation,
  InhomogeneousInput,
  InhomogeneousElement,
  NotAChainMap,
  NotInIdeal,
  NotKoszulResolution,
  NotSemiprojective,
  TruncationTooSmall,
  HypothesisViolated,
  NotCertifiedCI,
  WindowTooSmall,
  NotPerfectAtBound,
  ParseError,
  UnknownVariable,
  InhomogeneousEntry,
  DimensionMismatch,
  InvariantViolated,
  TooManyVariables,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// ParseError carrying a 1-based line/column of the offending token.
class ParseFailure : public Error {
 public:
  ParseFailure(ErrorCode code, int line, int column, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace kci
