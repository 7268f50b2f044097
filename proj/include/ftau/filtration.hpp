#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftau/partition.hpp"
#include "ftau/time_axis.hpp"

namespace ftau {

// A filtration over a finite time axis, represented by the atom partition
// of each level plus the atoms of the terminal sigma-algebra. The terminal
// partition is supplied explicitly rather than forced to equal the last
// level; set it equal to the last level to model that common case.
//
// Construction checks only structural consistency (sizes and spaces); the
// refinement chain is checked by validate_filtration, so that deliberately
// broken chains can be built and diagnosed.
class Filtration {
 public:
  Filtration(SpacePtr space, TimeAxis axis, std::vector<Partition> levels,
             Partition terminal);

  const SampleSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const TimeAxis& axis() const { return axis_; }
  const std::vector<Partition>& levels() const { return levels_; }
  const Partition& level(std::size_t i) const { return levels_.at(i); }
  const Partition& terminal() const { return terminal_; }

  // Level atoms at t, where t = inf selects the terminal partition.
  // Throws TimeNotOnAxisError for finite t off the axis.
  const Partition& atoms_at(const TimePoint& t) const;

  friend bool operator==(const Filtration& a, const Filtration& b) {
    return same_space(*a.space_, *b.space_) && a.axis_ == b.axis_ &&
           a.levels_ == b.levels_ && a.terminal_ == b.terminal_;
  }

 private:
  SpacePtr space_;
  TimeAxis axis_;
  std::vector<Partition> levels_;
  Partition terminal_;
};

struct FiltrationReport {
  bool ok = true;
  std::string detail;  // empty when ok
  // First offending pair of times (coarse, fine) and the fine-level block
  // that is not contained in any coarse-level block.
  std::optional<TimePoint> coarse_time;
  std::optional<TimePoint> fine_time;
  std::optional<Event> block;
};

// Checks that each level refines all earlier ones and that the terminal
// partition refines every level.
FiltrationReport validate_filtration(const Filtration& f);

}  // namespace ftau
