#pragma once

#include <string>
#include <vector>

#include "ftau/generator.hpp"
#include "ftau/instance_io.hpp"

namespace ftau::test {

// The worked example: 8 outcomes, T = {0,1,2,3}, tau = (1,1,3,3,2,2,3,3),
// terminal = level 3 = all singletons. Built in code so that fixture-file
// tests have an independent reference.
struct Fig1 {
  SpacePtr space;
  TimeAxis axis;
  Filtration filtration;
  StoppingTime tau;
};

Fig1 make_fig1();

// Shorthand partition builder from label blocks.
Partition partition_of(const SpacePtr& space,
                       const std::vector<std::vector<std::string>>& blocks);

Event event_of(const SpacePtr& space, const std::vector<std::string>& labels);

// Uniform-ish random partition with at most max_blocks blocks, drawn from
// rng by shuffling outcomes and cutting the sequence.
Partition random_partition(SplitMix64& rng, const SpacePtr& space, std::size_t max_blocks);

std::string data_path(const std::string& name);
std::string fixture_path(const std::string& name);

}  // namespace ftau::test
