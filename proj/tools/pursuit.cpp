#include <omp.h>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pursuit/cli.hpp"

namespace {

// PURSUIT_THREADS caps the OpenMP worker count.
void apply_thread_cap() {
  const char* env = std::getenv("PURSUIT_THREADS");
  if (!env) return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (end != env && *end == '\0' && n > 0) {
    omp_set_num_threads(static_cast<int>(n));
  } else {
    std::cerr << "warning: ignoring PURSUIT_THREADS='" << env << "'\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cops and robber on compact geodesic spaces"};
  app.require_subcommand(1);
  std::string config;
  std::string out = "pursuit_out";
  std::optional<std::uint64_t> seed;

  for (const char* name : {"solve", "play", "copnumber", "verify"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config, "config JSON path (verify also takes \"default\")")->required();
    sub->add_option("--out", out, "output directory");
    sub->add_option("--seed", seed, "seed for randomized strategies and probes");
  }
  CLI11_PARSE(app, argc, argv);
  apply_thread_cap();
  return pursuit::run_command(app.get_subcommands().front()->get_name(), config, out, seed, std::cout, std::cerr);
}
