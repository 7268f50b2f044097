#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ftau/event.hpp"
#include "ftau/partition.hpp"

namespace ftau {

// Explicit enumeration refuses more atoms than this by default (2^20
// events). Oracle paths are meant for desk-scale verification.
inline constexpr std::size_t kDefaultMaxAtoms = 20;

// A finite sigma-algebra in explicit form: the full event list, sorted in
// numeric bit-pattern order and deduplicated. Used by oracle paths; the
// canonical compact form of a sigma-algebra is a Partition of its atoms.
class SigmaAlgebra {
 public:
  SigmaAlgebra(SpacePtr space, std::vector<Event> events);

  const SampleSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const std::vector<Event>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }

  bool contains(const Event& e) const;

  // Equality as event sets (both sides are sorted and deduplicated).
  friend bool operator==(const SigmaAlgebra& a, const SigmaAlgebra& b) {
    return same_space(*a.space_, *b.space_) && a.events_ == b.events_;
  }

 private:
  SpacePtr space_;
  std::vector<Event> events_;
};

struct SigmaCheckResult {
  bool ok = true;
  std::string violation;                // human-readable counterexample
  std::optional<Event> witness_a;       // offending event(s), when applicable
  std::optional<Event> witness_b;
};

// Literal closure check: contains the empty event and the full space, and
// is closed under complement and pairwise union. Quadratic in the number
// of events; intended for small explicit lists.
SigmaCheckResult is_sigma_algebra(const std::vector<Event>& events);

// The minimal nonempty elements of an explicit sigma-algebra, as a
// partition. With check=true the closure properties are verified first
// (NotASigmaAlgebraError on failure); with check=false the input is
// trusted, and the atoms are computed as the per-outcome intersections
// of all containing events.
Partition atoms_of(const SigmaAlgebra& sigma, bool check = true);

// All 2^k unions of the k partition blocks, including the empty union and
// the full space. Throws TooManyAtomsError when k exceeds max_atoms.
SigmaAlgebra generate_sigma(const Partition& atoms,
                            std::size_t max_atoms = kDefaultMaxAtoms);

}  // namespace ftau
