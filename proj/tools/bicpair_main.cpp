#include <CLI11.hpp>

#include "bicpair/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"bicpair: BIC-mediated two-emitter rates, dynamics and entanglement"};
  app.require_subcommand(1);

  bicpair::cli::Options opt;
  std::string command;

  for (const char* name : {"rates", "lattice-coeffs", "cdos-model", "simulate",
                           "sweep", "fit", "validity"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", opt.config_path, "run configuration file")->required();
    sub->add_option("--out", opt.out_dir, "output directory");
    sub->add_option("--seed", opt.seed, "random seed for synthetic noise");
    sub->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->callback([&command, name] { command = name; });
  }

  CLI11_PARSE(app, argc, argv);
  return bicpair::cli::run_command(command, opt);
}
