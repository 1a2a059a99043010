#pragma once

#include <optional>
#include <string>

namespace eqdc::cli {

inline constexpr const char* kSchema = "eqdc-report/1";

struct Options {
  std::string command;
  std::string target;      // model name or path
  std::string model_path;  // --model, exclusive with target
  std::optional<int> max_degree;
  std::optional<int> degree;
  std::string poly;
  std::string coeff = "z-in-q";
  std::string json_path;
  bool expand = false;
};

struct Outcome {
  int exit_code = 0;
  std::string output;   // JSON report, or the canonical text for `print`
  std::string summary;  // one or more lines for standard error
};

/// Commands: check-gstar, weil-cohomology, chern-simons, equiv-cw, diffcoh,
/// verify-ses, witness-inj, print, run. Never throws; failures are encoded in
/// the exit code (0 success, 1 verification failure, 2 input error).
Outcome run(const Options& options);

/// $EQDC_DATA_DIR if set, else the directory compiled in.
std::string data_dir();

}  // namespace eqdc::cli
