// wavekin command line: stationary | evolve | compare | bench | quadcheck
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "wavekin/cli_io.hpp"
#include "wavekin/error.hpp"

using namespace wavekin;

int main(int argc, char** argv) {
  CLI::App app{"Fourier spectral solver for the 4-wave kinetic equation"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  int threads = 0;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--set", overrides, "override one key, e.g. --set N=32 (repeatable)");
  app.add_option("--threads", threads, "worker threads for kernel evaluations")->check(CLI::PositiveNumber);

  struct Command {
    const char* name;
    const char* help;
    int (*fn)(const RunConfig&, std::ostream&);
  };
  const Command commands[] = {
      {"stationary", "collision residual of a Rayleigh-Jeans state", cmd_stationary},
      {"evolve", "RK4 evolution with time series, snapshots and slice CSVs", cmd_evolve},
      {"compare", "fast vs direct kernel on seeded random coefficients", cmd_compare},
      {"bench", "per-term and total kernel timings over bench.sizes", cmd_bench},
      {"quadcheck", "exactness checks of the quadrature rules", cmd_quadcheck},
  };
  std::vector<CLI::App*> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitValidation;
  }

  try {
    RunConfig config;
    if (const char* env = std::getenv("WAVEKIN_THREADS")) set_config_value(config, "threads", env);
    if (!config_path.empty()) config = load_config(config_path, config);
    for (const auto& o : overrides) apply_override(config, o);
    if (threads > 0) config.threads = threads;

    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i]->parsed()) return commands[i].fn(config, std::cout);
    }
    return kExitValidation;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
