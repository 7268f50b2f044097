#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ftau/cli.hpp"

namespace {

std::size_t max_atoms_default() {
  // FTAU_MAX_ATOMS overrides the built-in explicit-enumeration bound.
  if (const char* env = std::getenv("FTAU_MAX_ATOMS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    std::cerr << "warning: ignoring invalid FTAU_MAX_ATOMS value \"" << env << "\"\n";
  }
  return ftau::kDefaultMaxAtoms;
}

void add_gen_flags(CLI::App* cmd, ftau::GenConfig& cfg) {
  cmd->add_option("--gen-seed", cfg.seed, "Generator seed");
  cmd->add_option("--outcomes", cfg.n_outcomes, "Number of outcomes")->check(CLI::PositiveNumber);
  cmd->add_option("--times", cfg.n_times, "Number of time points")->check(CLI::PositiveNumber);
  cmd->add_option("--split-prob", cfg.split_prob, "Block split probability per level step")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--stop-prob", cfg.stop_prob, "Block stop probability per time")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--infinity-prob", cfg.infinity_prob,
                  "Probability a block left after max T never stops")
      ->check(CLI::Range(0.0, 1.0));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stopping-time sigma-algebras over finite filtered spaces"};
  app.require_subcommand(1);

  ftau::cli::GlobalOptions global;
  global.max_atoms = max_atoms_default();
  app.add_flag("--json", global.json, "Machine-readable output");
  app.add_flag("--quiet", global.quiet, "Suppress warnings and notes");
  app.add_option("--max-atoms", global.max_atoms,
                 "Explicit-enumeration bound (atoms); env FTAU_MAX_ATOMS")
      ->check(CLI::PositiveNumber);
  bool strict_keys = false;
  app.add_flag("--strict-keys", strict_keys, "Reject unknown instance-file keys");

  ftau::cli::AtomsOptions atoms;
  CLI::App* atoms_cmd = app.add_subcommand("atoms", "Print level, stopped, or sigma(tau) atoms");
  atoms_cmd->add_option("instance", atoms.instance_path, "Instance file")->required();
  std::string time_arg;
  CLI::Option* time_opt =
      atoms_cmd->add_option("--time", time_arg, "Level atoms at this time (or \"inf\")");
  CLI::Option* stopped_opt =
      atoms_cmd->add_flag("--stopped", atoms.stopped, "Atoms of the stopped sigma-algebra");
  CLI::Option* sigma_tau_opt =
      atoms_cmd->add_flag("--sigma-tau", atoms.sigma_tau, "Atoms of sigma(tau)");
  atoms_cmd->add_flag("--force", atoms.force,
                      "Compute layers even when tau is not a stopping time");
  time_opt->excludes(stopped_opt)->excludes(sigma_tau_opt);
  stopped_opt->excludes(sigma_tau_opt);

  ftau::cli::CheckOptions check;
  CLI::App* check_cmd = app.add_subcommand("check", "Verify the stopped sigma-algebra claims");
  check_cmd->add_option("instance", check.instance_path, "Instance file")->required();

  ftau::cli::RenderOptions render;
  CLI::App* render_cmd = app.add_subcommand("render", "Render the filtration tree");
  render_cmd->add_option("instance", render.instance_path, "Instance file")->required();
  render_cmd->add_option("--format", render.format, "Output format")
      ->check(CLI::IsMember({"ascii", "dot"}));

  ftau::cli::GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Emit a random instance file");
  add_gen_flags(gen_cmd, gen.cfg);
  std::string gen_out;
  CLI::Option* gen_out_opt = gen_cmd->add_option("-o,--output", gen_out, "Output path");

  ftau::cli::FuzzOptions fuzz;
  CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "Generate and verify random instances");
  fuzz_cmd->add_option("--seed", fuzz.seed, "Master seed");
  fuzz_cmd->add_option("--iterations", fuzz.iterations, "Number of instances");
  fuzz_cmd->add_option("--max-outcomes", fuzz.max_outcomes, "Upper bound on |Omega|")
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--max-times", fuzz.max_times, "Upper bound on |T|")
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--split-prob", fuzz.base.split_prob, "Block split probability")
      ->check(CLI::Range(0.0, 1.0));
  fuzz_cmd->add_option("--stop-prob", fuzz.base.stop_prob, "Block stop probability")
      ->check(CLI::Range(0.0, 1.0));
  fuzz_cmd->add_option("--infinity-prob", fuzz.base.infinity_prob,
                       "Never-stop probability after max T")
      ->check(CLI::Range(0.0, 1.0));
  std::string dump_dir;
  CLI::Option* dump_opt =
      fuzz_cmd->add_option("--dump-dir", dump_dir, "Directory for failing instances");
  fuzz_cmd->add_flag("--mutant", fuzz.mutant,
                     "Self-test: run with a deliberately broken layer rule");

  CLI11_PARSE(app, argc, argv);

  if (strict_keys) global.parse.unknown_keys = ftau::ParseOptions::UnknownKeys::error;
  atoms.time = time_opt->count() > 0 ? std::optional<std::string>(time_arg) : std::nullopt;
  gen.output_path = gen_out_opt->count() > 0 ? std::optional<std::string>(gen_out) : std::nullopt;
  fuzz.dump_dir = dump_opt->count() > 0 ? std::optional<std::string>(dump_dir) : std::nullopt;

  if (atoms_cmd->parsed()) return ftau::cli::run_atoms(atoms, global, std::cout, std::cerr);
  if (check_cmd->parsed()) return ftau::cli::run_check(check, global, std::cout, std::cerr);
  if (render_cmd->parsed()) return ftau::cli::run_render(render, global, std::cout, std::cerr);
  if (gen_cmd->parsed()) return ftau::cli::run_gen(gen, global, std::cout, std::cerr);
  if (fuzz_cmd->parsed()) return ftau::cli::run_fuzz(fuzz, global, std::cout, std::cerr);
  return 0;
}
