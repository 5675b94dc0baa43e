#pragma once

// Command layer shared by the ftrunc binary and the tests: a RunConfig fully
// determines one command run, and identical configs produce byte-identical
// reports (fixed alphabetical field order, shortest round-trip floats, no
// wall-clock content).

#include <string>
#include <vector>

#include "json.hpp"

#include "ftrunc/bounds.hpp"
#include "ftrunc/spectral.hpp"

namespace ftrunc {

struct RunConfig {
  std::string command;  // spectrum | normality | fuchs | traceclass | nazarov | example
  std::string set_literal;
  Convention convention = Convention::analyst;
  int order = 8;
  double panels = 4.0;
  std::string format = "json";  // json | csv
  unsigned seed = 1;
  // fuchs
  std::vector<double> l_values{3.0, 4.0, 5.0};
  int nodes = 400;
  // example
  std::string mode = "iso";  // iso | null
  double a = 0.5;
  int P = 6;
  double h = 1.2533141373155003;  // sqrt(2pi)/2
  // nazarov / bounds
  double A = 1.0;
};

struct CommandResult {
  int exit_code = 0;     // 0 ok, 2 parse/validation error, 3 numerical failure
  std::string output;    // report body (json or csv)
  std::string message;   // diagnostic on failure
};

CommandResult run_command(const RunConfig& config);

nlohmann::json resolution_to_json(const ResolutionInfo& info);
nlohmann::json spectral_report_to_json(const SpectralReport& report);

// Singular values, one per line, descending.
std::string singular_values_csv(const SpectralReport& report);

}  // namespace ftrunc
