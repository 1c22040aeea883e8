#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kci/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Koszul support varieties and complete intersection witnesses"};
  std::string command, input, order = "degrevlex";
  std::optional<int> n_bound, smax;
  bool as_json = false, as_text = false;

  std::vector<std::string> names(std::begin(kci::kCommands), std::end(kci::kCommands));
  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(names));
  app.add_option("--input", input, "Job file")->required();
  app.add_option("--N", n_bound, "Truncation bound for E-free resolutions");
  app.add_option("--smax", smax, "Resolution window for proxy witnesses");
  app.add_option("--order", order, "Monomial order")->check(CLI::IsMember({"degrevlex"}));
  auto* j = app.add_flag("--json", as_json, "JSON report (default)");
  app.add_flag("--text", as_text, "Plain text report")->excludes(j);
  CLI11_PARSE(app, argc, argv);

  try {
    std::ifstream in(input);
    if (!in) throw kci::Error(kci::ErrorCode::ParseError, "cannot read " + input);
    std::stringstream buf;
    buf << in.rdbuf();
    kci::JobSpec job = kci::parse_input(buf.str());
    job.command = command;
    job.order = order;
    if (n_bound) job.n_bound = *n_bound;
    if (smax) job.smax = *smax;
    const std::string report = kci::run_command(job);
    std::cout << (as_text ? kci::report_as_text(report) : report);
    if (command == "selftest" && !nlohmann::json::parse(report)["result"]["ok"].get<bool>()) return 1;
    return 0;
  } catch (const kci::Error& e) {
    nlohmann::json err{{"error", {{"code", std::string(kci::error_code_name(e.code()))}, {"message", e.what()}}}};
    if (auto* pf = dynamic_cast<const kci::ParseFailure*>(&e)) {
      err["error"]["line"] = pf->line();
      err["error"]["column"] = pf->column();
    }
    if (as_text)
      std::cerr << e.what() << "\n";
    else
      std::cout << err.dump(2) << "\n";
    return kci::exit_status(e.code());
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
