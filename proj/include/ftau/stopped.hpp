#pragma once

#include <map>
#include <string>
#include <vector>

#include "ftau/sigma.hpp"
#include "ftau/stopping.hpp"

namespace ftau {

// Rule for assigning a level-t atom A to the time-t layer of the stopped
// partition. `contained` is the correct rule (A inside {tau = t});
// `touching` is a deliberately broken variant (A merely intersects it)
// kept so the fuzz harness can prove it detects defects. On valid stopping
// times the two coincide, because every level set is itself a union of
// level atoms; the difference shows only on invalid random times.
enum class StopRule { contained, touching };

// Per-time atom layers: for each t in T ∪ {inf}, the level-t atoms that the
// rule assigns to {tau = t}. Every key is present, empty layers included.
// No validity requirement on tau; this is the raw computation.
std::map<TimePoint, std::vector<Event>> stopped_layers(
    const StoppingTime& tau, const Filtration& f,
    StopRule rule = StopRule::contained);

struct StoppedResult {
  enum class Source { constructive, bruteforce };

  std::map<TimePoint, std::vector<Event>> per_time;  // layers, all keys present
  Partition atoms;                                   // their disjoint union
  Source source = Source::constructive;
};

// The constructive route: atoms of the stopped sigma-algebra assembled
// from the per-time layers. Requires a valid filtration and a valid
// stopping time (InvalidFiltrationError / NotAStoppingTimeError).
StoppedResult stopped_atoms(const StoppingTime& tau, const Filtration& f);

// The definitional route: enumerate every event of the terminal
// sigma-algebra and keep F iff {tau <= t} cut down to F stays measurable
// at every t. Feasible only at desk scale (TooManyAtomsError beyond
// max_atoms terminal atoms). The result is verified to be closed.
SigmaAlgebra stopped_sigma_bruteforce(const StoppingTime& tau, const Filtration& f,
                                      std::size_t max_atoms = kDefaultMaxAtoms);

// Decompose an explicitly given stopped sigma-algebra into a StoppedResult
// (atoms per stopping layer), tagged as bruteforce-sourced.
StoppedResult stopped_result_from_sigma(const SigmaAlgebra& stopped_sigma,
                                        const StoppingTime& tau, const Filtration& f);

struct CheckItem {
  std::string name;
  bool pass = true;
  std::string detail;  // counterexample when failing, context otherwise
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool all_pass() const {
    for (const CheckItem& c : items)
      if (!c.pass) return false;
    return true;
  }
  const CheckItem* find(const std::string& name) const {
    for (const CheckItem& c : items)
      if (c.name == name) return &c;
    return nullptr;
  }
};

// Checks the atom characterization of the stopped sigma-algebra against
// the brute-force enumeration:
//   atoms_member_of_sigma  - every constructive atom is in the enumerated algebra
//   atoms_minimal          - no enumerated event is a nonempty strict subset of an atom
//   atoms_match_bruteforce - atoms of the enumeration equal the constructive atoms
//   sigma_match_bruteforce - the algebra generated by the atoms equals the enumeration
// The rule parameter exists for harness self-tests only.
CheckReport verify_theorem1(const StoppingTime& tau, const Filtration& f,
                            std::size_t max_atoms = kDefaultMaxAtoms,
                            StopRule rule = StopRule::contained);

struct Prop3Report {
  CheckReport checks;
  bool strict = false;               // inclusion sigma(tau) ⊂ F_tau is strict
  std::size_t sigma_tau_events = 0;  // |sigma(tau)|
  std::size_t stopped_events = 0;    // |F_tau|
};

// Checks sigma(tau) ⊆ F_tau and reports whether the inclusion is strict.
Prop3Report verify_prop3(const StoppingTime& tau, const Filtration& f,
                         std::size_t max_atoms = kDefaultMaxAtoms);

// Structural postconditions of the layer computation that hold for every
// random time, valid or not: each layer block lies inside its level set,
// and layers at distinct times are pairwise disjoint. Used by the fuzz
// harness; with StopRule::touching these fail on suitable invalid inputs.
CheckReport verify_layers(const StoppingTime& tau, const Filtration& f,
                          StopRule rule = StopRule::contained);

// The invariants of a StoppedResult: layers pairwise disjoint across
// times, the union of the time-t layer equal to {tau = t} for every t,
// and the atoms a partition of the space.
CheckReport verify_structure(const StoppedResult& result, const StoppingTime& tau);

}  // namespace ftau
