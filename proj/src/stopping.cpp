#include "ftau/stopping.hpp"

#include <map>
#include <utility>

namespace ftau {

namespace {

void require_compatible(const StoppingTime& tau, const Filtration& f) {
  if (!same_space(tau.space(), f.space()))
    throw MixedSpacesError("stopping time and filtration reference different sample spaces");
  if (!(tau.axis() == f.axis()))
    throw MixedSpacesError("stopping time and filtration use different time axes");
}

}  // namespace

StoppingTime::StoppingTime(SpacePtr space, TimeAxis axis, std::vector<TimePoint> values)
    : space_(std::move(space)), axis_(std::move(axis)), values_(std::move(values)) {
  if (values_.size() != space_->size())
    throw Error("stopping time must assign a value to every outcome");
  for (const TimePoint& v : values_)
    if (!axis_.contains(v))
      throw TimeNotOnAxisError("stopping time value " + v.to_string() + " is not on the axis");
}

StoppingTime StoppingTime::constant(SpacePtr space, TimeAxis axis, TimePoint value) {
  std::vector<TimePoint> values(space->size(), value);
  return StoppingTime(std::move(space), std::move(axis), std::move(values));
}

StoppingTimeReport is_stopping_time(const StoppingTime& tau, const Filtration& f) {
  require_compatible(tau, f);
  StoppingTimeReport r;
  for (std::size_t ti = 0; ti < f.axis().size(); ++ti) {
    const Rational& t = f.axis().at(ti);
    const Event reached = stopped_by(tau, t);
    if (auto split = f.level(ti).find_split_block(reached)) {
      r.ok = false;
      r.violating_time = t;
      r.split_block = f.level(ti).block(*split);
      r.detail = "{tau<=" + t.to_string() + "} = " + reached.to_string() +
                 " splits level block " + r.split_block->to_string();
      return r;
    }
  }
  return r;
}

Event level_set(const StoppingTime& tau, const TimePoint& t) {
  if (!tau.axis().contains(t))
    throw TimeNotOnAxisError("time " + t.to_string() + " is not on the axis");
  Bits b(tau.space().size());
  for (std::size_t i = 0; i < tau.space().size(); ++i)
    if (tau.value(i) == t) b.set(i);
  return Event(tau.space_ptr(), std::move(b));
}

Event stopped_by(const StoppingTime& tau, const Rational& t) {
  if (!tau.axis().index_of(t))
    throw TimeNotOnAxisError("time " + t.to_string() + " is not on the axis");
  const TimePoint bound(t);
  Bits b(tau.space().size());
  for (std::size_t i = 0; i < tau.space().size(); ++i)
    if (tau.value(i) <= bound) b.set(i);
  return Event(tau.space_ptr(), std::move(b));
}

Partition sigma_of_tau(const StoppingTime& tau, const Filtration& f) {
  require_compatible(tau, f);
  std::map<TimePoint, Bits> groups;
  for (std::size_t i = 0; i < tau.space().size(); ++i) {
    auto [it, inserted] = groups.try_emplace(tau.value(i), tau.space().size());
    it->second.set(i);
  }
  std::vector<Event> blocks;
  blocks.reserve(groups.size());
  for (auto& [t, bits] : groups) blocks.emplace_back(tau.space_ptr(), std::move(bits));
  return Partition(tau.space_ptr(), std::move(blocks));
}

StoppingProcess::StoppingProcess(SpacePtr space, TimeAxis axis, std::vector<Event> alive)
    : space_(std::move(space)), axis_(std::move(axis)), alive_(std::move(alive)) {
  if (alive_.size() != axis_.size())
    throw Error("stopping process needs one slice per time point");
  for (const Event& e : alive_)
    if (!same_space(e.space(), *space_))
      throw MixedSpacesError("process slice over a different sample space");
}

StoppingProcess stopping_process(const StoppingTime& tau, const Filtration& f) {
  require_compatible(tau, f);
  std::vector<Event> alive;
  alive.reserve(f.axis().size());
  for (std::size_t ti = 0; ti < f.axis().size(); ++ti)
    alive.push_back(stopped_by(tau, f.axis().at(ti)).complement());
  return StoppingProcess(tau.space_ptr(), tau.axis(), std::move(alive));
}

bool is_adapted(const StoppingProcess& proc, const Filtration& f) {
  if (!same_space(proc.space(), f.space()))
    throw MixedSpacesError("process and filtration reference different sample spaces");
  if (!(proc.axis() == f.axis()))
    throw MixedSpacesError("process and filtration use different time axes");
  for (std::size_t ti = 0; ti < f.axis().size(); ++ti)
    if (!f.level(ti).is_union_of_blocks(proc.alive_at(ti))) return false;
  return true;
}

}  // namespace ftau
