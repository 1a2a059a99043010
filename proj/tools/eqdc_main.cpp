#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "eqdc/cli/runner.hpp"

int main(int argc, char** argv) {
  eqdc::cli::Options o;
  CLI::App app{"Exact equivariant de Rham and differential cohomology computations"};
  app.add_option("command", o.command,
                 "check-gstar | weil-cohomology | chern-simons | equiv-cw | diffcoh | verify-ses | witness-inj | "
                 "print | run")
      ->required();
  app.add_option("target", o.target, "model name (looked up in the data directory) or path");
  app.add_option("--model", o.model_path, "model file path");
  app.add_option("--max-degree", o.max_degree, "highest degree to compute")->check(CLI::NonNegativeNumber);
  app.add_option("--degree", o.degree, "single degree")->check(CLI::NonNegativeNumber);
  app.add_option("--poly", o.poly, "invariant polynomial in u or u1, u2, ...");
  app.add_option("--coeff", o.coeff, "coefficient system (only z-in-q)");
  app.add_option("--json", o.json_path, "write the report here instead of standard output");
  app.add_flag("--expand", o.expand, "print builtins in full");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  eqdc::cli::Outcome out = eqdc::cli::run(o);
  if (!o.json_path.empty() && o.command != "print") {
    std::ofstream file(o.json_path, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write " << o.json_path << "\n";
      return 2;
    }
    file << out.output;
  } else {
    std::cout << out.output;
  }
  std::cerr << out.summary << "\n";
  return out.exit_code;
}
