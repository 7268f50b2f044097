#include "ftau/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "ftau/render.hpp"

namespace ftau::cli {

namespace {

using Json = nlohmann::ordered_json;

Json blocks_json(const std::vector<Event>& blocks) {
  Json out = Json::array();
  for (const Event& b : blocks) out.push_back(b.labels());
  return out;
}

void print_blocks(std::ostream& out, const std::vector<Event>& blocks) {
  for (const Event& b : blocks) out << b.to_string() << "\n";
}

ParseResult load_instance(const std::string& path, const GlobalOptions& g,
                          std::ostream& err) {
  ParseResult r = parse_instance_file(path, g.parse);
  if (!g.quiet)
    for (const std::string& w : r.warnings) err << "warning: " << w << "\n";
  return r;
}

Json check_items_json(const CheckReport& report) {
  Json items = Json::array();
  for (const CheckItem& c : report.items) {
    Json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    item["detail"] = c.detail;
    items.push_back(std::move(item));
  }
  return items;
}

}  // namespace

int run_atoms(const AtomsOptions& opts, const GlobalOptions& g, std::ostream& out,
              std::ostream& err) {
  try {
    const ParseResult parsed = load_instance(opts.instance_path, g, err);
    const Instance& inst = parsed.instance;
    const int selected = int(opts.time.has_value()) + int(opts.stopped) + int(opts.sigma_tau);
    if (selected != 1) {
      err << "error: choose exactly one of --time, --stopped, --sigma-tau\n";
      return kExitInvalidInstance;
    }

    if (opts.time) {
      const TimePoint t = *opts.time == "inf"
                              ? TimePoint::infinity()
                              : TimePoint(Rational::parse_decimal(*opts.time));
      const Partition& p = inst.filtration.atoms_at(t);
      if (g.json)
        out << Json{{"blocks", blocks_json(p.blocks())}}.dump(2) << "\n";
      else
        print_blocks(out, p.blocks());
      return kExitOk;
    }

    if (!inst.tau) {
      err << "error: instance has no tau\n";
      return kExitBadStoppingTime;
    }
    if (!parsed.tau_validity->ok && !opts.force) {
      err << "error: tau is not a stopping time: " << parsed.tau_validity->detail << "\n";
      return kExitBadStoppingTime;
    }

    if (opts.sigma_tau) {
      const Partition p = sigma_of_tau(*inst.tau, inst.filtration);
      if (g.json)
        out << Json{{"blocks", blocks_json(p.blocks())}}.dump(2) << "\n";
      else
        print_blocks(out, p.blocks());
      return kExitOk;
    }

    // --stopped
    if (parsed.tau_validity->ok) {
      const StoppedResult r = stopped_atoms(*inst.tau, inst.filtration);
      if (g.json)
        out << Json{{"blocks", blocks_json(r.atoms.blocks())}}.dump(2) << "\n";
      else
        print_blocks(out, r.atoms.blocks());
      return kExitOk;
    }
    // --stopped --force on an invalid random time: the per-time layers are
    // still well defined, but they carry no sigma-algebra guarantee.
    if (!g.quiet)
      err << "warning: tau is not a stopping time; layers computed anyway "
             "(no sigma-algebra guarantee)\n";
    const auto layers = stopped_layers(*inst.tau, inst.filtration);
    if (g.json) {
      Json by_time = Json::object();
      for (const auto& [t, layer] : layers) by_time[t.to_string()] = blocks_json(layer);
      out << Json{{"layers", by_time}}.dump(2) << "\n";
    } else {
      for (const auto& [t, layer] : layers) {
        out << "t=" << t.to_string() << ":";
        if (layer.empty()) out << " (none)";
        for (const Event& b : layer) out << " " << b.to_string();
        out << "\n";
      }
    }
    return kExitOk;
  } catch (const NotAStoppingTimeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadStoppingTime;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInstance;
  }
}

int run_check(const CheckOptions& opts, const GlobalOptions& g, std::ostream& out,
              std::ostream& err) {
  try {
    const ParseResult parsed = load_instance(opts.instance_path, g, err);
    const Instance& inst = parsed.instance;
    if (!inst.tau) {
      err << "error: instance has no tau\n";
      return kExitBadStoppingTime;
    }
    const StoppingTimeReport& st = *parsed.tau_validity;

    CheckReport report;
    report.items.push_back({"stopping_time", st.ok, st.detail});
    if (st.ok) {
      CheckReport t1 = verify_theorem1(*inst.tau, inst.filtration, g.max_atoms);
      report.items.insert(report.items.end(), t1.items.begin(), t1.items.end());
    }

    std::optional<Prop3Report> p3;
    std::optional<std::string> equals_level;
    if (st.ok) {
      p3 = verify_prop3(*inst.tau, inst.filtration, g.max_atoms);
      report.items.insert(report.items.end(), p3->checks.items.begin(),
                          p3->checks.items.end());
      const StoppedResult r = stopped_atoms(*inst.tau, inst.filtration);
      for (std::size_t ti = 0; ti < inst.filtration.axis().size(); ++ti) {
        if (r.atoms == inst.filtration.level(ti)) {
          equals_level = inst.filtration.axis().at(ti).to_string();
          break;
        }
      }
      if (!equals_level && r.atoms == inst.filtration.terminal()) equals_level = "inf";
    }

    if (g.json) {
      Json doc;
      doc["checks"] = check_items_json(report);
      if (p3) {
        doc["sigma_tau_events"] = p3->sigma_tau_events;
        doc["stopped_events"] = p3->stopped_events;
        doc["strict"] = p3->strict;
      }
      doc["equals_level"] = equals_level ? Json(*equals_level) : Json(nullptr);
      doc["all_pass"] = report.all_pass();
      out << doc.dump(2) << "\n";
    } else {
      for (const CheckItem& c : report.items) {
        out << c.name << ": " << (c.pass ? "PASS" : "FAIL");
        if (!c.pass && !c.detail.empty()) out << "  (" << c.detail << ")";
        out << "\n";
      }
      if (p3) {
        out << "sigma(tau) events: " << p3->sigma_tau_events << "\n";
        out << "stopped sigma-algebra events: " << p3->stopped_events << "\n";
        out << "inclusion strict: " << (p3->strict ? "yes" : "no") << "\n";
      }
      if (equals_level)
        out << "note: stopped sigma-algebra equals the level sigma-algebra at t="
            << *equals_level << "\n";
      out << "result: " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
    }
    if (!st.ok) return kExitBadStoppingTime;
    return report.all_pass() ? kExitOk : kExitCheckFailed;
  } catch (const NotAStoppingTimeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadStoppingTime;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInstance;
  }
}

int run_render(const RenderOptions& opts, const GlobalOptions& g, std::ostream& out,
               std::ostream& err) {
  try {
    const ParseResult parsed = load_instance(opts.instance_path, g, err);
    if (opts.format == "dot")
      out << render_dot(parsed.instance);
    else if (opts.format == "ascii")
      out << render_ascii(parsed.instance);
    else {
      err << "error: unknown render format: " << opts.format << "\n";
      return kExitInvalidInstance;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInstance;
  }
}

int run_gen(const GenOptions& opts, const GlobalOptions& g, std::ostream& out,
            std::ostream& err) {
  try {
    const Filtration f = gen_filtration(opts.cfg);
    StoppingTime tau = gen_stopping_time(opts.cfg, f);
    Json meta;
    meta["generator"] = {{"algorithm", "splitmix64"},
                         {"seed", opts.cfg.seed},
                         {"n_outcomes", opts.cfg.n_outcomes},
                         {"n_times", opts.cfg.n_times},
                         {"split_prob", opts.cfg.split_prob},
                         {"stop_prob", opts.cfg.stop_prob},
                         {"infinity_prob", opts.cfg.infinity_prob}};
    const Instance inst{f, std::move(tau), std::move(meta)};
    const std::string text = serialize_instance(inst);
    if (opts.output_path) {
      std::ofstream file(*opts.output_path);
      if (!file) {
        err << "error: cannot write " << *opts.output_path << "\n";
        return kExitInvalidInstance;
      }
      file << text;
      if (!g.quiet) err << "wrote " << *opts.output_path << "\n";
    } else {
      out << text;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInstance;
  }
}

namespace {

struct FuzzTally {
  std::size_t failures = 0;
  std::map<std::string, std::size_t> failed_checks;
  std::size_t infinity_layer = 0;
  std::size_t single_time_layer = 0;
  std::size_t perturbed = 0;

  void record(const CheckReport& report) {
    for (const CheckItem& c : report.items) {
      if (!c.pass) {
        ++failures;
        ++failed_checks[c.name];
      }
    }
  }
  void record(const std::string& name, bool pass) {
    if (!pass) {
      ++failures;
      ++failed_checks[name];
    }
  }
};

void dump_failure(const FuzzOptions& opts, const Filtration& f, const StoppingTime& tau,
                  std::uint64_t iteration, const std::vector<std::string>& failed,
                  std::ostream& err, bool quiet) {
  const std::filesystem::path dir = opts.dump_dir ? *opts.dump_dir : ".";
  const std::filesystem::path path =
      dir / ("fuzz_fail_" + std::to_string(opts.seed) + "_" + std::to_string(iteration) +
             ".json");
  Json meta;
  meta["fuzz"] = {{"master_seed", opts.seed},
                  {"iteration", iteration},
                  {"failed_checks", failed}};
  std::ofstream file(path);
  if (file) file << serialize_instance(Instance{f, tau, std::move(meta)});
  if (!quiet)
    err << "fuzz: iteration " << iteration << " failed; instance dumped to "
        << path.string() << "\n";
}

}  // namespace

int run_fuzz(const FuzzOptions& opts, const GlobalOptions& g, std::ostream& out,
             std::ostream& err) {
  if (opts.iterations == 0 && !g.quiet)
    err << "warning: --iterations 0, nothing to do\n";
  const StopRule rule = opts.mutant ? StopRule::touching : StopRule::contained;
  if (opts.mutant && !g.quiet)
    err << "warning: running with the deliberately broken layer rule (self-test)\n";

  FuzzTally tally;
  for (std::uint64_t i = 0; i < opts.iterations; ++i) {
    const GenConfig cfg =
        derive_instance_config(opts.seed, i, opts.max_outcomes, opts.max_times, opts.base);
    const Filtration f = gen_filtration(cfg);
    const StoppingTime tau = gen_stopping_time(cfg, f);
    std::vector<std::string> failed;
    auto note = [&](const CheckReport& r) {
      tally.record(r);
      for (const CheckItem& c : r.items)
        if (!c.pass) failed.push_back(c.name);
    };

    note(verify_theorem1(tau, f, g.max_atoms, rule));
    note(verify_prop3(tau, f, g.max_atoms).checks);
    note(verify_structure(stopped_atoms(tau, f), tau));

    const bool st_ok = is_stopping_time(tau, f).ok;
    const bool adapted = is_adapted(stopping_process(tau, f), f);
    tally.record("generated_tau_valid", st_ok);
    if (!st_ok) failed.push_back("generated_tau_valid");
    tally.record("adaptedness_equivalence", st_ok == adapted);
    if (st_ok != adapted) failed.push_back("adaptedness_equivalence");

    // Coverage counters, monitored but never asserted.
    {
      const StoppedResult r = stopped_atoms(tau, f);
      std::size_t nonempty = 0;
      for (const auto& [t, layer] : r.per_time)
        if (!layer.empty()) ++nonempty;
      if (!r.per_time.at(TimePoint::infinity()).empty()) ++tally.infinity_layer;
      if (nonempty == 1) ++tally.single_time_layer;
    }

    if (const auto bad = gen_non_stopping_time(cfg, f)) {
      ++tally.perturbed;
      const bool bad_st = is_stopping_time(*bad, f).ok;
      const bool bad_adapted = is_adapted(stopping_process(*bad, f), f);
      tally.record("perturbed_tau_rejected", !bad_st);
      if (bad_st) failed.push_back("perturbed_tau_rejected");
      tally.record("perturbed_adaptedness_equivalence", bad_st == bad_adapted);
      if (bad_st != bad_adapted) failed.push_back("perturbed_adaptedness_equivalence");
      // Layer postconditions hold for any random time under the correct
      // rule; this is where the broken rule shows up.
      note(verify_layers(*bad, f, rule));
    }

    if (!failed.empty()) dump_failure(opts, f, tau, i, failed, err, g.quiet);
  }

  if (g.json) {
    Json doc;
    doc["iterations"] = opts.iterations;
    doc["failures"] = tally.failures;
    Json by_check = Json::object();
    for (const auto& [name, count] : tally.failed_checks) by_check[name] = count;
    doc["failed_checks"] = std::move(by_check);
    doc["coverage"] = {{"infinity_layer", tally.infinity_layer},
                       {"single_time_layer", tally.single_time_layer},
                       {"perturbed", tally.perturbed}};
    out << doc.dump(2) << "\n";
  } else {
    out << "fuzz: " << opts.iterations << " iterations, seed " << opts.seed << "\n";
    out << "failures: " << tally.failures << "\n";
    for (const auto& [name, count] : tally.failed_checks)
      out << "  " << name << ": " << count << "\n";
    out << "coverage: infinity layer " << tally.infinity_layer << ", single-time "
        << tally.single_time_layer << ", perturbed " << tally.perturbed << "\n";
    out << "result: " << (tally.failures == 0 ? "OK" : "FAIL") << "\n";
  }
  return tally.failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace ftau::cli
