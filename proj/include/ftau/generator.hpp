#pragma once

#include <cstdint>
#include <optional>

#include "ftau/stopping.hpp"

namespace ftau {

// splitmix64: the standard 64-bit mixer (increment 0x9E3779B97F4A7C15,
// mix constants 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB). Chosen for
// reproducibility across implementations; all derived draws below are
// defined exactly so that instances replay bit-for-bit from a seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // next() mod n. The modulo bias is irrelevant for test-instance shapes.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // 53-bit uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::uint64_t state_;
};

struct GenConfig {
  std::uint64_t seed = 42;
  std::size_t n_outcomes = 8;   // exact |Omega|
  std::size_t n_times = 4;      // exact |T|; times are 0..n_times-1
  double split_prob = 0.45;     // chance a block splits at each level step
  double stop_prob = 0.35;      // chance an unassigned block stops at each t
  double infinity_prob = 0.25;  // chance a block left after max T gets tau = inf
};

// Random filtration: level 0 is {Omega}; each later level refines the
// previous one by splitting each block of size >= 2 into a uniform random
// bipartition with probability split_prob; the terminal partition applies
// one more such round to the last level. Deterministic given cfg.
Filtration gen_filtration(const GenConfig& cfg);

// Random stopping time, valid by construction: walking times in order,
// each fully-unassigned level block stops wholesale with probability
// stop_prob; blocks still unassigned after the last time get tau = inf
// with probability infinity_prob, else tau = max T (decided per block of
// the last level, which keeps {tau <= max T} measurable).
StoppingTime gen_stopping_time(const GenConfig& cfg, const Filtration& f);

// A near-miss: perturbs a valid stopping time by moving one outcome to an
// earlier time s inside a level-s block where at least one other member
// still has tau > s, which splits that block in {tau <= s}. Returns
// nullopt when no such perturbation exists (e.g. all levels singleton).
std::optional<StoppingTime> gen_non_stopping_time(const GenConfig& cfg,
                                                  const Filtration& f);

// Per-iteration config used by the fuzz harness and the acceptance suite:
// sizes are drawn uniformly in [1, max] from the iteration's own stream,
// probabilities are copied from base.
GenConfig derive_instance_config(std::uint64_t master_seed, std::uint64_t iteration,
                                 std::size_t max_outcomes, std::size_t max_times,
                                 const GenConfig& base = GenConfig{});

}  // namespace ftau
