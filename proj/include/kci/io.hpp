#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kci/errors.hpp"
#include "kci/field.hpp"

namespace kci {

inline constexpr const char* kVersion = "1.0.0";

/// One batch job. Polynomial strings are stored in canonical form so that
/// parse_input(print_job(j)) == j.
struct JobSpec {
  std::string command;
  Coeff p = kDefaultPrime;
  std::vector<std::string> vars;
  std::vector<int> degs;
  std::vector<std::string> relations;

  bool has_module = false;
  std::vector<std::vector<std::string>> matrix;
  std::vector<int> row_twists;
  std::vector<int> col_twists;

  std::optional<int> n_bound;
  std::optional<int> smax;
  std::vector<std::string> g;
  std::string order = "degrevlex";

  bool operator==(const JobSpec&) const = default;
};

/// Sectioned text format:
///
///   [ring]
///   p = 32003
///   vars = x, y
///   degs = 1, 1
///   relations = x^2, x*y
///   [module]
///   matrix = x, y
///   row_twists = 0
///   col_twists = 1, 1
///   [params]
///   N = 8
///   smax = 8
///   g = chi1
///
/// Blank lines and lines starting with '#' are ignored. Throws ParseFailure
/// with ParseError, UnknownVariable or InhomogeneousEntry.
JobSpec parse_input(const std::string& text);

/// Canonical text; the command is not part of the file.
std::string print_job(const JobSpec& job);

inline constexpr const char* kCommands[] = {"ci-check",         "koszul-homology", "ext-kk",
                                            "ext-module",       "support-variety", "c-tilde-variety",
                                            "proxy-witness",    "verify-witness",  "selftest"};

/// Report as JSON text with sorted keys:
/// {command, input_echo, result, provenance{N, smax, stable, order, version}}.
/// Throws the underlying module's Error on failure.
std::string run_command(const JobSpec& job);

/// The same report rendered as indented "key: value" lines.
std::string report_as_text(const std::string& json_report);

/// Process exit status for an error code: 2 parse errors, 3
/// HypothesisViolated, 4 NotPerfectAtBound, 1 anything else.
int exit_status(ErrorCode code);

}  // namespace kci
