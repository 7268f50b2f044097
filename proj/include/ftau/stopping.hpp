#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftau/filtration.hpp"

namespace ftau {

// A random time: a map from outcomes to points of T ∪ {inf}. Whether it is
// an actual stopping time for a given filtration is a property checked by
// is_stopping_time, not assumed by the type.
class StoppingTime {
 public:
  StoppingTime(SpacePtr space, TimeAxis axis, std::vector<TimePoint> values);

  static StoppingTime constant(SpacePtr space, TimeAxis axis, TimePoint value);

  const SampleSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const TimeAxis& axis() const { return axis_; }
  const std::vector<TimePoint>& values() const { return values_; }
  const TimePoint& value(std::size_t outcome) const { return values_.at(outcome); }

  friend bool operator==(const StoppingTime& a, const StoppingTime& b) {
    return same_space(*a.space_, *b.space_) && a.axis_ == b.axis_ && a.values_ == b.values_;
  }

 private:
  SpacePtr space_;
  TimeAxis axis_;
  std::vector<TimePoint> values_;
};

struct StoppingTimeReport {
  bool ok = true;
  std::string detail;  // empty when ok
  std::optional<Rational> violating_time;  // smallest t with {tau<=t} not in F_t
  std::optional<Event> split_block;        // the level block that gets split
};

// The defining condition: {tau <= t} is a union of level-t atoms for every
// t on the axis. Nothing needs to be checked at t = inf.
StoppingTimeReport is_stopping_time(const StoppingTime& tau, const Filtration& f);

// {tau = t}. Throws TimeNotOnAxisError when t is neither on tau's axis
// nor infinity.
Event level_set(const StoppingTime& tau, const TimePoint& t);

// {tau <= t} for finite t on tau's axis.
Event stopped_by(const StoppingTime& tau, const Rational& t);

// Atoms of the sigma-algebra generated by tau alone: the nonempty level
// sets {tau = t} over T ∪ {inf}.
Partition sigma_of_tau(const StoppingTime& tau, const Filtration& f);

// The indicator process X_t = 1 while tau > t, 0 from the stopping instant
// on. Stored as the per-time alive events {tau > t}.
class StoppingProcess {
 public:
  StoppingProcess(SpacePtr space, TimeAxis axis, std::vector<Event> alive);

  const SampleSpace& space() const { return *space_; }
  const TimeAxis& axis() const { return axis_; }
  const std::vector<Event>& alive() const { return alive_; }
  const Event& alive_at(std::size_t time_index) const { return alive_.at(time_index); }

  int value(std::size_t time_index, std::size_t outcome) const {
    return alive_.at(time_index).contains(outcome) ? 1 : 0;
  }

 private:
  SpacePtr space_;
  TimeAxis axis_;
  std::vector<Event> alive_;
};

StoppingProcess stopping_process(const StoppingTime& tau, const Filtration& f);

// Adaptedness: each time-t slice is a union of level-t atoms. Equivalent
// to is_stopping_time when the process is stopping_process(tau, f); the
// two are computed independently so they can cross-check each other.
bool is_adapted(const StoppingProcess& proc, const Filtration& f);

}  // namespace ftau
