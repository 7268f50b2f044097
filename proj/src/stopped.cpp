#include "ftau/stopped.hpp"

#include <algorithm>
#include <utility>

namespace ftau {

namespace {

void require_compatible(const StoppingTime& tau, const Filtration& f) {
  if (!same_space(tau.space(), f.space()))
    throw MixedSpacesError("stopping time and filtration reference different sample spaces");
  if (!(tau.axis() == f.axis()))
    throw MixedSpacesError("stopping time and filtration use different time axes");
}

void require_valid_inputs(const StoppingTime& tau, const Filtration& f) {
  const FiltrationReport fr = validate_filtration(f);
  if (!fr.ok) throw InvalidFiltrationError(fr.detail);
  const StoppingTimeReport sr = is_stopping_time(tau, f);
  if (!sr.ok)
    throw NotAStoppingTimeError("not a stopping time at t=" +
                                sr.violating_time->to_string() + ": " + sr.detail);
}

std::vector<TimePoint> extended_axis(const TimeAxis& axis) {
  std::vector<TimePoint> out;
  out.reserve(axis.size() + 1);
  for (const Rational& t : axis.times()) out.emplace_back(t);
  out.push_back(TimePoint::infinity());
  return out;
}

// Structural closure check for a deduplicated event list: the distinct
// per-outcome intersections must form a partition with 2^k = |S| and every
// event must be a union of them. Linear in |S|, unlike the literal
// quadratic closure scan.
bool is_closed_event_family(const SigmaAlgebra& s) {
  const std::size_t n = s.space().size();
  std::vector<Bits> atom(n, Bits(n).complement());
  for (const Event& e : s.events())
    for (std::size_t i : e.members()) atom[i] = atom[i] & e.bits();
  Bits covered(n);
  std::size_t k = 0;
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!atom[i].test(i)) return false;
    if (atom[i].first_set() == i) {
      ++k;
      total += atom[i].count();
      covered |= atom[i];
    }
  }
  if (total != n || covered.count() != n) return false;
  if (k >= 8 * sizeof(std::size_t) || (std::size_t{1} << k) != s.size()) return false;
  for (const Event& e : s.events())
    for (std::size_t i : e.members())
      if (!atom[i].is_subset_of(e.bits())) return false;
  return true;
}

}  // namespace

std::map<TimePoint, std::vector<Event>> stopped_layers(const StoppingTime& tau,
                                                       const Filtration& f,
                                                       StopRule rule) {
  require_compatible(tau, f);
  std::map<TimePoint, std::vector<Event>> layers;
  for (const TimePoint& t : extended_axis(f.axis())) {
    const Event ls = level_set(tau, t);
    std::vector<Event>& layer = layers[t];
    for (const Event& atom : f.atoms_at(t).blocks()) {
      const bool selected = rule == StopRule::contained
                                ? atom.bits().is_subset_of(ls.bits())
                                : atom.bits().intersects(ls.bits());
      if (selected) layer.push_back(atom);
    }
  }
  return layers;
}

StoppedResult stopped_atoms(const StoppingTime& tau, const Filtration& f) {
  require_valid_inputs(tau, f);
  auto layers = stopped_layers(tau, f);
  std::vector<Event> blocks;
  for (const auto& [t, layer] : layers)
    blocks.insert(blocks.end(), layer.begin(), layer.end());
  return StoppedResult{std::move(layers),
                       Partition(f.space_ptr(), std::move(blocks)),
                       StoppedResult::Source::constructive};
}

SigmaAlgebra stopped_sigma_bruteforce(const StoppingTime& tau, const Filtration& f,
                                      std::size_t max_atoms) {
  require_valid_inputs(tau, f);
  const SigmaAlgebra candidates = generate_sigma(f.terminal(), max_atoms);
  std::vector<Event> reached;
  reached.reserve(f.axis().size());
  for (std::size_t ti = 0; ti < f.axis().size(); ++ti)
    reached.push_back(stopped_by(tau, f.axis().at(ti)));
  std::vector<Event> kept;
  for (const Event& candidate : candidates.events()) {
    bool ok = true;
    for (std::size_t ti = 0; ti < f.axis().size() && ok; ++ti) {
      const Event cut(f.space_ptr(), candidate.bits() & reached[ti].bits());
      ok = f.level(ti).is_union_of_blocks(cut);
    }
    if (ok) kept.push_back(candidate);
  }
  SigmaAlgebra result(f.space_ptr(), std::move(kept));
  if (!is_closed_event_family(result))
    throw Error("internal error: brute-force result is not closed");
  return result;
}

StoppedResult stopped_result_from_sigma(const SigmaAlgebra& stopped_sigma,
                                        const StoppingTime& tau, const Filtration& f) {
  require_compatible(tau, f);
  const Partition atoms = atoms_of(stopped_sigma, /*check=*/false);
  StoppedResult r{{}, atoms, StoppedResult::Source::bruteforce};
  for (const TimePoint& t : extended_axis(f.axis())) r.per_time[t];
  for (const Event& atom : atoms.blocks()) {
    const TimePoint& t = tau.value(atom.bits().first_set());
    r.per_time[t].push_back(atom);
  }
  return r;
}

CheckReport verify_theorem1(const StoppingTime& tau, const Filtration& f,
                            std::size_t max_atoms, StopRule rule) {
  CheckReport report;
  const SigmaAlgebra brute = stopped_sigma_bruteforce(tau, f, max_atoms);

  // Assemble the constructive result under the requested rule. With the
  // correct rule this matches stopped_atoms exactly.
  auto layers = stopped_layers(tau, f, rule);
  std::vector<Event> blocks;
  for (const auto& [t, layer] : layers)
    blocks.insert(blocks.end(), layer.begin(), layer.end());

  {
    CheckItem item{"atoms_member_of_sigma", true, ""};
    for (const Event& a : blocks) {
      if (!brute.contains(a)) {
        item.pass = false;
        item.detail = "constructive atom " + a.to_string() + " not in enumerated algebra";
        break;
      }
    }
    report.items.push_back(std::move(item));
  }
  {
    CheckItem item{"atoms_minimal", true, ""};
    for (const Event& ev : brute.events()) {
      if (ev.is_empty()) continue;
      for (const Event& a : blocks) {
        if (ev.bits() != a.bits() && ev.bits().is_subset_of(a.bits())) {
          item.pass = false;
          item.detail = ev.to_string() + " is a nonempty strict subset of atom " + a.to_string();
          break;
        }
      }
      if (!item.pass) break;
    }
    report.items.push_back(std::move(item));
  }
  {
    CheckItem item{"atoms_match_bruteforce", true, ""};
    const Partition brute_atoms = atoms_of(brute, /*check=*/false);
    std::vector<Event> sorted = blocks;
    std::sort(sorted.begin(), sorted.end(),
              [](const Event& a, const Event& b) { return a.bits().first_set() < b.bits().first_set(); });
    const bool equal = sorted.size() == brute_atoms.block_count() &&
                       std::equal(sorted.begin(), sorted.end(), brute_atoms.blocks().begin());
    if (!equal) {
      item.pass = false;
      item.detail = "constructive atoms differ from atoms of the enumerated algebra";
    }
    report.items.push_back(std::move(item));
  }
  {
    CheckItem item{"sigma_match_bruteforce", true, ""};
    try {
      const SigmaAlgebra generated =
          generate_sigma(Partition(f.space_ptr(), blocks), max_atoms);
      if (!(generated == brute)) {
        item.pass = false;
        item.detail = "generated " + std::to_string(generated.size()) +
                      " events, enumeration has " + std::to_string(brute.size());
      }
    } catch (const NotAPartitionError& e) {
      item.pass = false;
      item.detail = std::string("constructive atoms are not a partition: ") + e.what();
    }
    report.items.push_back(std::move(item));
  }
  return report;
}

Prop3Report verify_prop3(const StoppingTime& tau, const Filtration& f,
                         std::size_t max_atoms) {
  Prop3Report r;
  const SigmaAlgebra brute = stopped_sigma_bruteforce(tau, f, max_atoms);
  const SigmaAlgebra tau_sigma = generate_sigma(sigma_of_tau(tau, f), max_atoms);
  CheckItem item{"sigma_tau_subset_of_stopped_sigma", true, ""};
  for (const Event& e : tau_sigma.events()) {
    if (!brute.contains(e)) {
      item.pass = false;
      item.detail = e.to_string() + " is in sigma(tau) but not in the stopped sigma-algebra";
      break;
    }
  }
  r.checks.items.push_back(std::move(item));
  r.sigma_tau_events = tau_sigma.size();
  r.stopped_events = brute.size();
  r.strict = r.checks.all_pass() && tau_sigma.size() < brute.size();
  return r;
}

CheckReport verify_layers(const StoppingTime& tau, const Filtration& f, StopRule rule) {
  CheckReport report;
  const auto layers = stopped_layers(tau, f, rule);
  {
    CheckItem item{"layers_inside_level_sets", true, ""};
    for (const auto& [t, layer] : layers) {
      const Event ls = level_set(tau, t);
      for (const Event& a : layer) {
        if (!a.bits().is_subset_of(ls.bits())) {
          item.pass = false;
          item.detail = "layer at t=" + t.to_string() + " holds " + a.to_string() +
                        " outside {tau=" + t.to_string() + "}";
          break;
        }
      }
      if (!item.pass) break;
    }
    report.items.push_back(std::move(item));
  }
  {
    CheckItem item{"layers_disjoint_across_times", true, ""};
    Bits seen(f.space().size());
    for (const auto& [t, layer] : layers) {
      Bits mine(f.space().size());
      for (const Event& a : layer) mine |= a.bits();
      if (mine.intersects(seen)) {
        item.pass = false;
        item.detail = "layer at t=" + t.to_string() + " overlaps an earlier layer";
        break;
      }
      seen |= mine;
    }
    report.items.push_back(std::move(item));
  }
  return report;
}

CheckReport verify_structure(const StoppedResult& result, const StoppingTime& tau) {
  CheckReport report;
  const std::size_t n = tau.space().size();
  {
    CheckItem item{"layers_disjoint_across_times", true, ""};
    Bits seen(n);
    for (const auto& [t, layer] : result.per_time) {
      Bits mine(n);
      for (const Event& a : layer) mine |= a.bits();
      if (mine.intersects(seen)) {
        item.pass = false;
        item.detail = "layer at t=" + t.to_string() + " overlaps an earlier layer";
        break;
      }
      seen |= mine;
    }
    report.items.push_back(std::move(item));
  }
  {
    CheckItem item{"layer_union_is_level_set", true, ""};
    for (const auto& [t, layer] : result.per_time) {
      Bits united(n);
      for (const Event& a : layer) united |= a.bits();
      if (united != level_set(tau, t).bits()) {
        item.pass = false;
        item.detail = "union of layer at t=" + t.to_string() + " is not {tau=" +
                      t.to_string() + "}";
        break;
      }
    }
    report.items.push_back(std::move(item));
  }
  {
    CheckItem item{"atoms_partition_space", true, ""};
    std::size_t total = 0;
    Bits covered(n);
    for (const Event& a : result.atoms.blocks()) {
      total += a.count();
      covered |= a.bits();
    }
    if (total != n || covered.count() != n) {
      item.pass = false;
      item.detail = "atom blocks cover " + std::to_string(covered.count()) + " of " +
                    std::to_string(n) + " outcomes (multiplicity " + std::to_string(total) + ")";
    }
    report.items.push_back(std::move(item));
  }
  return report;
}

}  // namespace ftau
