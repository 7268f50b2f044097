#include "ftau/generator.hpp"

#include <utility>

namespace ftau {

namespace {

// Distinct stream offsets keep filtration, stopping-time, and perturbation
// draws independent for one seed.
constexpr std::uint64_t kFiltrationStream = 0x66696c7472617469ull;
constexpr std::uint64_t kTauStream = 0x7461752d73747265ull;
constexpr std::uint64_t kPerturbStream = 0x7065727475726221ull;

void check_config(const GenConfig& cfg) {
  auto prob_ok = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!prob_ok(cfg.split_prob) || !prob_ok(cfg.stop_prob) || !prob_ok(cfg.infinity_prob))
    throw BadConfigError("probabilities must lie in [0,1]");
  if (cfg.n_outcomes < 1) throw BadConfigError("n_outcomes must be >= 1");
  if (cfg.n_times < 1) throw BadConfigError("n_times must be >= 1");
}

// Uniform random bipartition of the block, both sides nonempty. Each
// member draws a side bit in ascending index order; all-one-side draws are
// rejected and redrawn.
std::pair<Bits, Bits> split_block(SplitMix64& rng, const Event& block) {
  const auto members = block.members();
  const std::size_t n = block.space().size();
  for (;;) {
    Bits left(n);
    Bits right(n);
    for (std::size_t m : members) {
      if (rng.next() & 1u)
        left.set(m);
      else
        right.set(m);
    }
    if (left.any() && right.any()) return {std::move(left), std::move(right)};
  }
}

}  // namespace

Filtration gen_filtration(const GenConfig& cfg) {
  check_config(cfg);
  SplitMix64 rng(cfg.seed ^ kFiltrationStream);
  SpacePtr space = make_space(cfg.n_outcomes);
  std::vector<Rational> times;
  times.reserve(cfg.n_times);
  for (std::size_t i = 0; i < cfg.n_times; ++i) times.emplace_back(static_cast<long long>(i));
  TimeAxis axis(std::move(times));

  auto refine = [&](const Partition& prev) {
    std::vector<Event> blocks;
    for (const Event& b : prev.blocks()) {
      if (b.count() >= 2 && rng.bernoulli(cfg.split_prob)) {
        auto [left, right] = split_block(rng, b);
        blocks.emplace_back(space, std::move(left));
        blocks.emplace_back(space, std::move(right));
      } else {
        blocks.push_back(b);
      }
    }
    return Partition(space, std::move(blocks));
  };

  std::vector<Partition> levels;
  levels.reserve(cfg.n_times);
  levels.push_back(Partition::trivial(space));
  for (std::size_t i = 1; i < cfg.n_times; ++i) levels.push_back(refine(levels.back()));
  Partition terminal = refine(levels.back());
  return Filtration(space, axis, std::move(levels), std::move(terminal));
}

StoppingTime gen_stopping_time(const GenConfig& cfg, const Filtration& f) {
  check_config(cfg);
  SplitMix64 rng(cfg.seed ^ kTauStream);
  const std::size_t n = f.space().size();
  std::vector<std::optional<TimePoint>> assigned(n);
  auto block_unassigned = [&](const Event& b) {
    for (std::size_t m : b.members())
      if (assigned[m]) return false;
    return true;
  };
  auto assign_block = [&](const Event& b, const TimePoint& t) {
    for (std::size_t m : b.members()) assigned[m] = t;
  };
  for (std::size_t ti = 0; ti < f.axis().size(); ++ti) {
    const TimePoint t(f.axis().at(ti));
    for (const Event& b : f.level(ti).blocks())
      if (block_unassigned(b) && rng.bernoulli(cfg.stop_prob)) assign_block(b, t);
  }
  // Leftovers stop at max T or never; decided per block of the last level
  // so that {tau <= max T} stays a union of its blocks.
  const TimePoint last(f.axis().back());
  for (const Event& b : f.level(f.axis().size() - 1).blocks())
    if (block_unassigned(b))
      assign_block(b, rng.bernoulli(cfg.infinity_prob) ? TimePoint::infinity() : last);
  std::vector<TimePoint> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) values.push_back(*assigned[i]);
  return StoppingTime(f.space_ptr(), f.axis(), std::move(values));
}

std::optional<StoppingTime> gen_non_stopping_time(const GenConfig& cfg,
                                                  const Filtration& f) {
  const StoppingTime base = gen_stopping_time(cfg, f);
  SplitMix64 rng(cfg.seed ^ kPerturbStream);
  // Candidate moves: outcome w with tau(w) > t_s inside a level-s block
  // holding at least two such members. Moving w to t_s then splits the
  // block in {tau <= t_s}.
  struct Move {
    std::size_t outcome;
    std::size_t time_index;
  };
  std::vector<Move> moves;
  for (std::size_t si = 0; si < f.axis().size(); ++si) {
    const TimePoint s(f.axis().at(si));
    for (const Event& b : f.level(si).blocks()) {
      std::vector<std::size_t> late;
      for (std::size_t m : b.members())
        if (base.value(m) > s) late.push_back(m);
      if (late.size() >= 2)
        for (std::size_t m : late) moves.push_back({m, si});
    }
  }
  if (moves.empty()) return std::nullopt;
  const Move& mv = moves[rng.below(moves.size())];
  std::vector<TimePoint> values = base.values();
  values[mv.outcome] = TimePoint(f.axis().at(mv.time_index));
  return StoppingTime(f.space_ptr(), f.axis(), std::move(values));
}

GenConfig derive_instance_config(std::uint64_t master_seed, std::uint64_t iteration,
                                 std::size_t max_outcomes, std::size_t max_times,
                                 const GenConfig& base) {
  SplitMix64 rng(master_seed + iteration);
  GenConfig cfg = base;
  cfg.n_outcomes = 1 + static_cast<std::size_t>(rng.below(max_outcomes));
  cfg.n_times = 1 + static_cast<std::size_t>(rng.below(max_times));
  cfg.seed = rng.next();
  return cfg;
}

}  // namespace ftau
