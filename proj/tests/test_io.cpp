#include "doctest.h"
#include "json.hpp"
#include "kci/errors.hpp"
#include "kci/io.hpp"

using namespace kci;
using nlohmann::json;

namespace {

const char* kNonCI = R"([ring]
p = 32003
vars = x, y
degs = 1, 1
relations = x^2, x*y
)";

template <class F>
std::pair<ErrorCode, std::pair<int, int>> parse_error(F&& f) {
  try {
    f();
  } catch (const ParseFailure& e) {
    return {e.code(), {e.line(), e.column()}};
  }
  FAIL("expected a parse failure");
  return {ErrorCode::InvariantViolated, {0, 0}};
}

JobSpec job_for(const std::string& cmd, const std::string& text) {
  JobSpec j = parse_input(text);
  j.command = cmd;
  return j;
}

}  // namespace

TEST_CASE("parse_input examples") {
  JobSpec j = parse_input(kNonCI);
  CHECK(j.vars == std::vector<std::string>{"x", "y"});
  CHECK(j.relations == std::vector<std::string>{"x^2", "x*y"});
  CHECK_FALSE(j.has_module);

  auto [code, pos] = parse_error([] { parse_input("[ring]\nvars = x, y\nrelations = x^2, x*z\n"); });
  CHECK(code == ErrorCode::UnknownVariable);
  CHECK(pos == std::pair<int, int>{3, 20});

  JobSpec poly = parse_input("[ring]\nvars = x, y\nrelations =\n");
  CHECK(poly.relations.empty());
  CHECK(poly.degs == std::vector<int>{1, 1});

  CHECK(parse_error([] { parse_input("[ring]\nvars = x\nrelations = x^2 + x\n"); }).first ==
        ErrorCode::InhomogeneousEntry);
  CHECK(parse_error([] { parse_input("[ring]\nvars = x\n[module]\nmatrix = x, x^2\nrow_twists = 0\ncol_twists = 1, 1\n"); })
            .first == ErrorCode::InhomogeneousEntry);
  CHECK(parse_error([] { parse_input("[ring]\nvars = x\ndegs = 0\n"); }).first == ErrorCode::ParseError);
  CHECK(parse_error([] { parse_input("[ring]\nvars = x\nbogus = 1\n"); }).second == std::pair<int, int>{3, 1});
  CHECK(parse_error([] { parse_input("vars = x\n"); }).first == ErrorCode::ParseError);
  CHECK(parse_error([] { parse_input("[ring]\nvars = x\nrelations = x^2\n[params]\ng = chi3\n"); }).first ==
        ErrorCode::UnknownVariable);
}

TEST_CASE("canonical printing round-trips") {
  const char* messy = "# comment\n[ring]\nvars = y,x\nrelations = x*y+ 2*y^2 , 3*x^2\n[module]\nmatrix = x, y; 0, x\n"
                      "[params]\nN = 6\ng = chi2+chi1\n";
  JobSpec j = parse_input(messy);
  CHECK(j.col_twists == std::vector<int>{1, 1});
  CHECK(j.relations[0] == "2*y^2 + y*x");
  CHECK(j.g[0] == "chi1 + chi2");
  CHECK(parse_input(print_job(j)) == j);
  CHECK(print_job(parse_input(print_job(j))) == print_job(j));
  JobSpec free = parse_input("[ring]\nvars = x\nrelations = x^2\n[module]\nmatrix =\nrow_twists = 0, 1\n");
  CHECK(free.matrix.size() == 2);
  CHECK(parse_input(print_job(free)) == free);
}

TEST_CASE("run_command reports") {
  const std::string ci = "[ring]\nvars = x, y\nrelations = x^2, y^2\n[params]\nN = 8\ng = chi1\n";
  auto r = json::parse(run_command(job_for("ci-check", ci)));
  CHECK(r["result"]["verdict"] == "CI");
  CHECK(r["result"]["agreement"] == true);
  CHECK(r["provenance"]["stable"] == true);
  CHECK(r["provenance"]["version"] == kVersion);

  auto kk = json::parse(run_command(job_for("ext-kk", ci)));
  CHECK(kk["result"]["resolution"]["rank"] == 4);
  CHECK(kk["result"]["resolution"]["generator_degrees"] == json({0, 1, 1, 2}));

  auto ct = json::parse(run_command(job_for("c-tilde-variety", ci)));
  CHECK(ct["result"]["cones"][0]["ideal"] == "(chi1)");
  CHECK(ct["result"]["cones"][0]["equals_V_g"] == true);

  auto non = json::parse(run_command(job_for("ci-check", kNonCI)));
  CHECK(non["result"]["verdict"] == "not CI");
  CHECK(non["result"]["agreement"] == true);

  const std::string text = run_command(job_for("support-variety", ci));
  CHECK(text == run_command(job_for("support-variety", ci)));
  auto keys = json::parse(text);
  std::vector<std::string> top;
  for (auto& [k, v] : keys.items()) top.push_back(k);
  CHECK(top == std::vector<std::string>{"command", "input_echo", "provenance", "result"});
  CHECK(report_as_text(text).find("variety: Proj A") != std::string::npos);
}

TEST_CASE("exit statuses") {
  CHECK(exit_status(ErrorCode::ParseError) == 2);
  CHECK(exit_status(ErrorCode::UnknownVariable) == 2);
  CHECK(exit_status(ErrorCode::HypothesisViolated) == 3);
  CHECK(exit_status(ErrorCode::NotPerfectAtBound) == 4);
  CHECK(exit_status(ErrorCode::NotCertifiedCI) == 1);
  try {
    run_command(job_for("ci-check", "[ring]\nvars = x, y\nrelations = x, y^2\n"));
    FAIL("expected HypothesisViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesisViolated);
  }
}
