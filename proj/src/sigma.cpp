#include "ftau/sigma.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace ftau {

namespace {

bool bits_less(const Event& a, const Event& b) { return a.bits() < b.bits(); }

}  // namespace

SigmaAlgebra::SigmaAlgebra(SpacePtr space, std::vector<Event> events)
    : space_(std::move(space)), events_(std::move(events)) {
  for (const Event& e : events_)
    if (!same_space(e.space(), *space_))
      throw MixedSpacesError("sigma-algebra event from a different sample space");
  std::sort(events_.begin(), events_.end(), bits_less);
  events_.erase(std::unique(events_.begin(), events_.end(),
                            [](const Event& a, const Event& b) { return a.bits() == b.bits(); }),
                events_.end());
}

bool SigmaAlgebra::contains(const Event& e) const {
  if (!same_space(e.space(), *space_))
    throw MixedSpacesError("membership test across sample spaces");
  auto it = std::lower_bound(events_.begin(), events_.end(), e, bits_less);
  return it != events_.end() && it->bits() == e.bits();
}

SigmaCheckResult is_sigma_algebra(const std::vector<Event>& events) {
  SigmaCheckResult r;
  if (events.empty()) {
    r.ok = false;
    r.violation = "event list is empty";
    return r;
  }
  const SpacePtr space = events.front().space_ptr();
  for (const Event& e : events)
    if (!same_space(e.space(), *space))
      throw MixedSpacesError("events reference different sample spaces");

  std::vector<Bits> sorted;
  sorted.reserve(events.size());
  for (const Event& e : events) sorted.push_back(e.bits());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto member = [&](const Bits& b) {
    return std::binary_search(sorted.begin(), sorted.end(), b);
  };

  const std::size_t n = space->size();
  if (!member(Bits(n))) {
    r.ok = false;
    r.violation = "empty event missing";
    return r;
  }
  if (!member(Bits(n).complement())) {
    r.ok = false;
    r.violation = "full space missing";
    return r;
  }
  for (const Bits& b : sorted) {
    if (!member(b.complement())) {
      r.ok = false;
      r.witness_a = Event(space, b);
      r.violation = "complement of " + r.witness_a->to_string() + " missing";
      return r;
    }
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (!member(sorted[i] | sorted[j])) {
        r.ok = false;
        r.witness_a = Event(space, sorted[i]);
        r.witness_b = Event(space, sorted[j]);
        r.violation = "union of " + r.witness_a->to_string() + " and " +
                      r.witness_b->to_string() + " missing";
        return r;
      }
    }
  }
  return r;
}

Partition atoms_of(const SigmaAlgebra& sigma, bool check) {
  if (check) {
    SigmaCheckResult c = is_sigma_algebra(sigma.events());
    if (!c.ok) throw NotASigmaAlgebraError("not a sigma-algebra: " + c.violation);
  }
  const SpacePtr& space = sigma.space_ptr();
  const std::size_t n = space->size();
  // atom(i) = intersection of all events containing outcome i. For a family
  // closed under complement and union this is the minimal element around i.
  std::vector<Bits> atom(n, Bits(n).complement());
  for (const Event& e : sigma.events())
    for (std::size_t i : e.members()) atom[i] = atom[i] & e.bits();
  std::vector<Bits> distinct;
  for (std::size_t i = 0; i < n; ++i)
    if (atom[i].first_set() == i) distinct.push_back(atom[i]);
  std::vector<Event> blocks;
  blocks.reserve(distinct.size());
  for (Bits& b : distinct) blocks.emplace_back(space, std::move(b));
  return Partition(space, std::move(blocks));
}

SigmaAlgebra generate_sigma(const Partition& atoms, std::size_t max_atoms) {
  const std::size_t k = atoms.block_count();
  if (k > max_atoms)
    throw TooManyAtomsError("explicit enumeration refused: " + std::to_string(k) +
                            " atoms exceeds bound " + std::to_string(max_atoms));
  const SpacePtr& space = atoms.space_ptr();
  const std::size_t total = std::size_t{1} << k;
  std::vector<Bits> unions;
  unions.reserve(total);
  unions.push_back(Bits(space->size()));
  for (std::size_t idx = 1; idx < total; ++idx) {
    // Reuse the union over idx with its lowest block removed.
    const std::size_t lowest = static_cast<std::size_t>(std::countr_zero(idx));
    unions.push_back(unions[idx & (idx - 1)] | atoms.block(lowest).bits());
  }
  std::vector<Event> events;
  events.reserve(total);
  for (Bits& b : unions) events.emplace_back(space, std::move(b));
  return SigmaAlgebra(space, std::move(events));
}

}  // namespace ftau
