#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ftrunc/cli.hpp"

namespace {

void add_common(CLI::App* cmd, ftrunc::RunConfig& config, std::string& convention,
                std::string& out_path) {
  cmd->add_option("--order", config.order, "Gauss-Legendre order per panel")
      ->check(CLI::Range(2, 64));
  cmd->add_option("--panels", config.panels, "starting panels per unit length");
  cmd->add_option("--convention", convention, "analyst | paper-raw");
  cmd->add_option("--format", config.format, "json | csv");
  cmd->add_option("--out", out_path, "write the report to this file instead of stdout");
  cmd->add_option("--seed", config.seed, "seed for deterministic test families");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for truncated Fourier operators"};
  app.require_subcommand(1);

  ftrunc::RunConfig config;
  std::string convention = "analyst";
  std::string out_path;

  auto* spectrum = app.add_subcommand("spectrum", "singular spectrum and norms of F_E");
  spectrum->add_option("--set", config.set_literal, "interval set literal")->required();
  add_common(spectrum, config, convention, out_path);

  auto* normality = app.add_subcommand("normality", "commutator defect and normality verdict");
  normality->add_option("--set", config.set_literal)->required();
  add_common(normality, config, convention, out_path);

  auto* fuchs = app.add_subcommand("fuchs", "largest sinc-kernel eigenvalue vs the asymptotic law");
  fuchs->add_option("--l", config.l_values, "bandwidth parameters")->delimiter(',');
  fuchs->add_option("--n", config.nodes, "number of quadrature nodes");
  add_common(fuchs, config, convention, out_path);

  auto* traceclass = app.add_subcommand("traceclass", "trace-class criterion and trace-norm bounds");
  traceclass->add_option("--set", config.set_literal)->required();
  traceclass->add_option("--A", config.A, "constant for the contraction bound");
  add_common(traceclass, config, convention, out_path);

  auto* nazarov = app.add_subcommand("nazarov", "empirical uncertainty-constant estimation");
  nazarov->add_option("--set", config.set_literal)->required();
  nazarov->add_option("--A", config.A, "constant for the contraction bound");
  add_common(nazarov, config, convention, out_path);

  auto* example = app.add_subcommand("example", "isometric / null vectors on the periodic set");
  example->add_option("--mode", config.mode, "iso | null");
  example->add_option("--a", config.a, "bump half-width");
  example->add_option("--P", config.P, "kept periods: |p| <= P");
  example->add_option("--h", config.h, "modulation shift for the null vector");
  add_common(example, config, convention, out_path);

  CLI11_PARSE(app, argc, argv);

  config.command = app.get_subcommands().front()->get_name();
  try {
    config.convention = ftrunc::convention_from_string(convention);
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }

  const ftrunc::CommandResult result = ftrunc::run_command(config);
  if (result.exit_code != 0) {
    std::cerr << "error: " << result.message << "\n";
    return result.exit_code;
  }
  if (out_path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return 2;
    }
    out << result.output;
  }
  return 0;
}
