#include "ftau/filtration.hpp"

#include <utility>

namespace ftau {

namespace {

// First block of fine not contained in a single block of coarse.
std::optional<Event> refinement_gap(const Partition& fine, const Partition& coarse) {
  for (const Event& b : fine.blocks()) {
    const std::size_t ci = coarse.block_index_of(b.bits().first_set());
    if (!b.bits().is_subset_of(coarse.block(ci).bits())) return b;
  }
  return std::nullopt;
}

}  // namespace

Filtration::Filtration(SpacePtr space, TimeAxis axis, std::vector<Partition> levels,
                       Partition terminal)
    : space_(std::move(space)),
      axis_(std::move(axis)),
      levels_(std::move(levels)),
      terminal_(std::move(terminal)) {
  if (levels_.size() != axis_.size())
    throw Error("filtration has " + std::to_string(levels_.size()) +
                " levels for " + std::to_string(axis_.size()) + " time points");
  for (const Partition& p : levels_)
    if (!same_space(p.space(), *space_))
      throw MixedSpacesError("filtration level over a different sample space");
  if (!same_space(terminal_.space(), *space_))
    throw MixedSpacesError("terminal partition over a different sample space");
}

const Partition& Filtration::atoms_at(const TimePoint& t) const {
  if (t.is_infinite()) return terminal_;
  auto idx = axis_.index_of(t.finite());
  if (!idx) throw TimeNotOnAxisError("time " + t.to_string() + " is not on the axis");
  return levels_[*idx];
}

FiltrationReport validate_filtration(const Filtration& f) {
  FiltrationReport r;
  const auto& axis = f.axis();
  for (std::size_t i = 0; i + 1 < axis.size(); ++i) {
    if (auto gap = refinement_gap(f.level(i + 1), f.level(i))) {
      r.ok = false;
      r.coarse_time = TimePoint(axis.at(i));
      r.fine_time = TimePoint(axis.at(i + 1));
      r.block = gap;
      r.detail = "level at t=" + axis.at(i + 1).to_string() +
                 " does not refine level at t=" + axis.at(i).to_string() +
                 ": block " + gap->to_string() + " splits";
      return r;
    }
  }
  if (auto gap = refinement_gap(f.terminal(), f.level(axis.size() - 1))) {
    r.ok = false;
    r.coarse_time = TimePoint(axis.back());
    r.fine_time = TimePoint::infinity();
    r.block = gap;
    r.detail = "terminal partition does not refine level at t=" +
               axis.back().to_string() + ": block " + gap->to_string() + " splits";
    return r;
  }
  return r;
}

}  // namespace ftau
