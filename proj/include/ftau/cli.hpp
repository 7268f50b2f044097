#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "ftau/generator.hpp"
#include "ftau/instance_io.hpp"
#include "ftau/stopped.hpp"

namespace ftau::cli {

// Exit-code contract, shared by every subcommand.
inline constexpr int kExitOk = 0;              // all work done, all checks passed
inline constexpr int kExitCheckFailed = 1;     // a verification property failed
inline constexpr int kExitInvalidInstance = 2; // unparseable or invalid instance
inline constexpr int kExitBadStoppingTime = 3; // tau missing or not a stopping time

struct GlobalOptions {
  bool json = false;
  bool quiet = false;
  std::size_t max_atoms = kDefaultMaxAtoms;
  ParseOptions parse;
};

struct AtomsOptions {
  std::string instance_path;
  std::optional<std::string> time;  // finite time or "inf"
  bool stopped = false;
  bool sigma_tau = false;
  bool force = false;  // compute layers even when tau is not a stopping time
};
int run_atoms(const AtomsOptions& opts, const GlobalOptions& g, std::ostream& out,
              std::ostream& err);

struct CheckOptions {
  std::string instance_path;
};
int run_check(const CheckOptions& opts, const GlobalOptions& g, std::ostream& out,
              std::ostream& err);

struct RenderOptions {
  std::string instance_path;
  std::string format = "ascii";  // "ascii" or "dot"
};
int run_render(const RenderOptions& opts, const GlobalOptions& g, std::ostream& out,
               std::ostream& err);

struct GenOptions {
  GenConfig cfg;
  std::optional<std::string> output_path;  // stdout when absent
};
int run_gen(const GenOptions& opts, const GlobalOptions& g, std::ostream& out,
            std::ostream& err);

struct FuzzOptions {
  std::uint64_t seed = 42;
  std::size_t iterations = 1000;
  std::size_t max_outcomes = 10;
  std::size_t max_times = 5;
  GenConfig base;       // probability knobs applied to every iteration
  bool mutant = false;  // self-test: run with the deliberately broken layer rule
  std::optional<std::string> dump_dir;  // where failing instances are written
};
int run_fuzz(const FuzzOptions& opts, const GlobalOptions& g, std::ostream& out,
             std::ostream& err);

}  // namespace ftau::cli
