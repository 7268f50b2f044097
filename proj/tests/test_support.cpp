#include "test_support.hpp"

#include <algorithm>
#include <numeric>

namespace ftau::test {

Fig1 make_fig1() {
  SpacePtr space = make_space({"w1", "w2", "w3", "w4", "w5", "w6", "w7", "w8"});
  TimeAxis axis({Rational(0), Rational(1), Rational(2), Rational(3)});
  std::vector<Partition> levels;
  levels.push_back(Partition::trivial(space));
  levels.push_back(partition_of(space, {{"w1", "w2"}, {"w3", "w4"}, {"w5", "w6", "w7", "w8"}}));
  levels.push_back(
      partition_of(space, {{"w1"}, {"w2"}, {"w3", "w4"}, {"w5", "w6"}, {"w7", "w8"}}));
  levels.push_back(Partition::singletons(space));
  Partition terminal = Partition::singletons(space);
  Filtration filtration(space, axis, std::move(levels), std::move(terminal));
  StoppingTime tau(space, axis,
                   {TimePoint(1), TimePoint(1), TimePoint(3), TimePoint(3), TimePoint(2),
                    TimePoint(2), TimePoint(3), TimePoint(3)});
  return Fig1{space, axis, std::move(filtration), std::move(tau)};
}

Partition partition_of(const SpacePtr& space,
                       const std::vector<std::vector<std::string>>& blocks) {
  std::vector<Event> events;
  events.reserve(blocks.size());
  for (const auto& labels : blocks) events.push_back(Event::of_labels(space, labels));
  return Partition(space, std::move(events));
}

Event event_of(const SpacePtr& space, const std::vector<std::string>& labels) {
  return Event::of_labels(space, labels);
}

Partition random_partition(SplitMix64& rng, const SpacePtr& space, std::size_t max_blocks) {
  const std::size_t n = space->size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n; i > 1; --i)
    std::swap(order[i - 1], order[rng.below(i)]);
  const std::size_t k = 1 + rng.below(std::min(n, max_blocks));
  // k-1 distinct cut points inside 1..n-1.
  std::vector<std::size_t> cuts{0, n};
  while (cuts.size() < k + 1) {
    const std::size_t c = 1 + rng.below(n - 1);
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<Event> blocks;
  for (std::size_t b = 0; b + 1 < cuts.size(); ++b) {
    Bits bits(n);
    for (std::size_t i = cuts[b]; i < cuts[b + 1]; ++i) bits.set(order[i]);
    blocks.emplace_back(space, std::move(bits));
  }
  return Partition(space, std::move(blocks));
}

std::string data_path(const std::string& name) { return std::string(FTAU_DATA_DIR) + "/" + name; }

std::string fixture_path(const std::string& name) {
  return std::string(FTAU_FIXTURE_DIR) + "/" + name;
}

}  // namespace ftau::test
