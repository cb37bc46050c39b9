// ppav-lab: runs the verification checks and prints one JSON object per check.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ppav/checks.hpp"

namespace {

int run(const std::vector<std::string>& ids, const ppav::CheckOptions& options, const std::string& json_path) {
  std::vector<ppav::CheckResult> results;
  try {
    results = ppav::run_checks(ids, options);
  } catch (const ppav::Error& e) {
    std::cerr << e.what() << '\n';
    return e.kind() == ppav::ErrorKind::UnknownCheck ? 2 : 1;
  }
  std::ofstream file;
  if (!json_path.empty()) {
    file.open(json_path);
    if (!file) {
      std::cerr << "cannot write " << json_path << '\n';
      return 1;
    }
  }
  bool all_pass = true;
  for (const auto& r : results) {
    const std::string line = ppav::to_json(r).dump();
    std::cout << line << '\n';
    if (file) file << line << '\n';
    all_pass = all_pass && r.status == ppav::CheckStatus::Pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for polarized abelian varieties with group actions"};
  app.require_subcommand(1);

  ppav::CheckOptions options;
  std::vector<std::string> ids;
  std::vector<std::size_t> factors;
  std::size_t ydim = 0;
  std::string json_path;

  CLI::App* run_cmd = app.add_subcommand("run", "run checks (all by default)");
  run_cmd->add_option("--check", ids, "check id; repeatable");
  run_cmd->add_option("--gmax", options.gmax, "largest g for the per-dimension checks")
      ->check(CLI::Range(1, 12));
  run_cmd->add_option("--factors", factors, "factor dimensions for standard-build, e.g. 2,3")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  CLI::Option* ydim_opt = run_cmd->add_option("--ydim", ydim, "dimension of Y (default: minimal)");
  run_cmd->add_option("--seed", options.seed, "seed for randomized checks");
  run_cmd->add_option("--json", json_path, "also write the JSON lines to this file");

  CLI::App* list_cmd = app.add_subcommand("list", "list check ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (list_cmd->parsed()) {
    for (const auto& c : ppav::check_catalog()) std::cout << c.id << "  " << c.summary << '\n';
    return 0;
  }
  if (!factors.empty()) options.factors = factors;
  if (ydim_opt->count() > 0) options.ydim = ydim;
  return run(ids, options, json_path);
}
