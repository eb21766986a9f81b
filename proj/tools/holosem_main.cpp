// Command-line front end. Subcommands: petfish, learn, capacity, bench,
// demo-sentence. Each takes an optional JSON config file plus flag
// overrides, runs deterministically from its seed, writes versioned report
// files, and prints a summary table. Exit codes: 0 ok, 2 bad config,
// 3 I/O failure, 4 internal numeric check failure.

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <string>

#include "holosem/harness.hpp"

namespace {

using holosem::harness::FlagOverrides;

struct CommonArgs {
  std::string config_path;
  FlagOverrides flags;
};

void add_common_options(CLI::App& cmd, CommonArgs& args) {
  // --h is a real option (learning rate), so help is --help only.
  cmd.set_help_flag("--help", "Print help");
  cmd.add_option("--config", args.config_path, "JSON config file");
  cmd.add_option_function<std::uint64_t>(
      "--seed", [&args](std::uint64_t v) { args.flags.seed = v; }, "Base seed");
  cmd.add_option_function<std::string>(
      "--out", [&args](const std::string& v) { args.flags.out = v; }, "Report path");
  cmd.add_option_function<std::vector<std::size_t>>(
         "--dims", [&args](const std::vector<std::size_t>& v) { args.flags.dims = v; },
         "Dimension list")
      ->delimiter(',');
  cmd.add_option_function<int>(
      "--trials", [&args](int v) { args.flags.trials = v; }, "Trial count");
  cmd.add_option_function<double>(
      "--h", [&args](double v) { args.flags.h = v; }, "Learning rate");
  cmd.add_option_function<double>(
      "--noise", [&args](double v) { args.flags.noise = v; }, "Percept noise std");
  cmd.add_option_function<std::string>(
      "--format", [&args](const std::string& v) { args.flags.format = v; },
      "Report format: json|csv|both");
}

}  // namespace

int main(int argc, char** argv) {
  namespace harness = holosem::harness;

  CLI::App app{"vector-symbolic compositional semantics experiments"};
  app.set_help_flag("--help", "Print help");
  app.require_subcommand(1);

  CommonArgs petfish_args;
  CLI::App* petfish = app.add_subcommand("petfish", "Pet-fish concept combination");
  add_common_options(*petfish, petfish_args);

  CommonArgs learn_args;
  CLI::App* learn = app.add_subcommand("learn", "Grounded lexicon learning");
  add_common_options(*learn, learn_args);

  CommonArgs capacity_args;
  CLI::App* capacity = app.add_subcommand("capacity", "Binding capacity study");
  add_common_options(*capacity, capacity_args);

  CommonArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Convolution timing sweep");
  add_common_options(*bench, bench_args);

  CommonArgs demo_args;
  CLI::App* demo = app.add_subcommand("demo-sentence", "Role unbinding demo");
  add_common_options(*demo, demo_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : harness::kExitConfig;
  }

  try {
    if (petfish->parsed()) {
      harness::cmd_petfish(
          harness::resolve_petfish_config(petfish_args.config_path, petfish_args.flags),
          std::cout);
    } else if (learn->parsed()) {
      harness::cmd_learn(
          harness::resolve_learn_config(learn_args.config_path, learn_args.flags),
          std::cout);
    } else if (capacity->parsed()) {
      harness::cmd_capacity(
          harness::resolve_capacity_config(capacity_args.config_path, capacity_args.flags),
          std::cout);
    } else if (bench->parsed()) {
      harness::cmd_bench(
          harness::resolve_bench_config(bench_args.config_path, bench_args.flags),
          std::cout);
    } else if (demo->parsed()) {
      harness::cmd_demo_sentence(
          harness::resolve_demo_sentence_config(demo_args.config_path, demo_args.flags),
          std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return harness::exit_code_for_current_exception();
  }
  return harness::kExitOk;
}
