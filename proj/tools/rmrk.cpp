#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rmrk/acceptance.hpp"
#include "rmrk/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Alternating conditional-gradient / proximal solvers for robust PCA"};
  app.require_subcommand(1);

  std::string config_path;
  int jobs = 1;
  CLI::App* run = app.add_subcommand("run", "Run the experiment described by a config file");
  run->add_option("--config", config_path, "Config file")->required();
  run->add_option("--jobs", jobs, "Repeats solved concurrently")->check(CLI::PositiveNumber);

  std::string suite;
  CLI::App* acceptance = app.add_subcommand("acceptance", "Run an acceptance suite");
  acceptance->add_option("suite", suite, "oracles | rates | table2 | comparative | all")->required();

  std::string spec_path;
  std::string out_dir;
  CLI::App* gen = app.add_subcommand("gen", "Write a generated instance as Matrix Market files");
  gen->add_option("--spec", spec_path, "Config file whose [instance] section is used")->required();
  gen->add_option("--out", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*run) return rmrk::run_command(config_path, jobs, std::cerr);
  if (*acceptance) return rmrk::acceptance_command(suite, std::cout, std::cerr);
  return rmrk::gen_command(spec_path, out_dir, std::cerr);
}
