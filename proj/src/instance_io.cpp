#include "ftau/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

namespace ftau {

namespace {

using Json = nlohmann::ordered_json;

Rational rational_from_number(const Json& v, const std::string& context) {
  if (v.is_number_unsigned()) {
    const auto u = v.get<unsigned long long>();
    if (u > 0x7fffffffffffffffull) throw ParseError(context + ": number out of range");
    return Rational(static_cast<long long>(u));
  }
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_float()) {
    // nlohmann prints the shortest round-trip decimal; parsing that string
    // recovers the written value exactly for integers and finite decimals.
    return Rational::parse_decimal(v.dump());
  }
  throw ParseError(context + ": expected a number, got " + std::string(v.type_name()));
}

Partition parse_partition(const Json& v, const SpacePtr& space, const std::string& context) {
  if (!v.is_array()) throw ParseError(context + ": expected an array of blocks");
  std::vector<Event> blocks;
  blocks.reserve(v.size());
  for (const Json& block : v) {
    if (!block.is_array()) throw ParseError(context + ": block must be an array of labels");
    std::vector<std::string> labels;
    labels.reserve(block.size());
    for (const Json& l : block) {
      if (!l.is_string()) throw ParseError(context + ": outcome label must be a string");
      labels.push_back(l.get<std::string>());
    }
    try {
      blocks.push_back(Event::of_labels(space, labels));
    } catch (const UnknownLabelError& e) {
      throw UnknownLabelError(context + ": " + e.what());
    }
  }
  try {
    return Partition(space, std::move(blocks));
  } catch (const NotAPartitionError& e) {
    throw NotAPartitionError(context + ": " + e.what());
  }
}

Json number_node(const Rational& r) {
  if (r.den() == 1) return Json(r.num());
  const std::string s = r.to_string();
  if (s.find('/') != std::string::npos)
    throw Error("time value " + s + " has no finite decimal form");
  return Json::parse(s);
}

Json partition_node(const Partition& p) {
  Json out = Json::array();
  for (const Event& b : p.blocks()) out.push_back(b.labels());
  return out;
}

SpacePtr parse_space(const Json& doc) {
  if (!doc["omega"].is_array()) throw ParseError("omega: expected an array of labels");
  try {
    std::vector<std::string> labels;
    for (const Json& l : doc["omega"]) {
      if (!l.is_string()) throw ParseError("omega: labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    return make_space(std::move(labels));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("omega: ") + e.what());
  }
}

TimeAxis parse_axis(const Json& doc) {
  if (!doc["times"].is_array()) throw ParseError("times: expected an array");
  std::vector<Rational> times;
  for (const Json& t : doc["times"]) times.push_back(rational_from_number(t, "times"));
  try {
    return TimeAxis(std::move(times));
  } catch (const Error& e) {
    throw ParseError(std::string("times: ") + e.what());
  }
}

Filtration parse_filtration(const Json& doc, const SpacePtr& space, const TimeAxis& axis) {
  if (!doc["filtration"].is_object())
    throw ParseError("filtration: expected an object keyed by time");
  std::vector<std::optional<Partition>> levels(axis.size());
  for (const auto& [key, value] : doc["filtration"].items()) {
    Rational t;
    try {
      t = Rational::parse_decimal(key);
    } catch (const ParseError& e) {
      throw ParseError("filtration key \"" + key + "\": " + e.what());
    }
    const auto idx = axis.index_of(t);
    if (!idx) throw ParseError("filtration key \"" + key + "\" is not on the time axis");
    if (levels[*idx])
      throw ParseError("filtration key \"" + key + "\" duplicates t=" + t.to_string());
    levels[*idx] = parse_partition(value, space, "filtration level t=" + t.to_string());
  }
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (!levels[i])
      throw ParseError("filtration is missing a level for t=" + axis.at(i).to_string());

  std::vector<Partition> level_list;
  level_list.reserve(levels.size());
  for (auto& p : levels) level_list.push_back(std::move(*p));

  Partition terminal = doc.contains("terminal")
                           ? parse_partition(doc["terminal"], space, "terminal")
                           : level_list.back();

  Filtration f(space, axis, std::move(level_list), std::move(terminal));
  const FiltrationReport report = validate_filtration(f);
  if (!report.ok)
    throw NonRefiningError("filtration does not refine over time between t=" +
                           report.coarse_time->to_string() + " and t=" +
                           report.fine_time->to_string() + ": " + report.detail);
  return f;
}

StoppingTime parse_tau(const Json& tau_doc, const SpacePtr& space, const TimeAxis& axis) {
  if (!tau_doc.is_object()) throw ParseError("tau: expected an object keyed by outcome label");
  std::vector<std::optional<TimePoint>> values(space->size());
  for (const auto& [label, value] : tau_doc.items()) {
    const auto idx = space->index_of(label);
    if (!idx) throw UnknownLabelError("tau: unknown outcome label: " + label);
    TimePoint t;
    if (value.is_string()) {
      if (value.get<std::string>() != "inf")
        throw ParseError("tau." + label + ": the only allowed string value is \"inf\"");
      t = TimePoint::infinity();
    } else {
      t = TimePoint(rational_from_number(value, "tau." + label));
    }
    values[*idx] = t;
  }
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!values[i]) throw ParseError("tau is missing a value for outcome " + space->label(i));
  std::vector<TimePoint> flat;
  flat.reserve(values.size());
  for (auto& v : values) flat.push_back(*v);
  return StoppingTime(space, axis, std::move(flat));
}

}  // namespace

ParseResult parse_instance_text(std::string_view text, const ParseOptions& opts) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object");

  std::vector<std::string> warnings;
  static const std::vector<std::string> known = {"omega", "times", "filtration",
                                                 "terminal", "tau", "meta"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      const std::string msg = "unknown key \"" + key + "\"";
      if (opts.unknown_keys == ParseOptions::UnknownKeys::error) throw ParseError(msg);
      warnings.push_back(msg);
    }
  }
  for (const char* required : {"omega", "times", "filtration"})
    if (!doc.contains(required))
      throw ParseError(std::string("missing required key \"") + required + "\"");

  const SpacePtr space = parse_space(doc);
  const TimeAxis axis = parse_axis(doc);
  Filtration filtration = parse_filtration(doc, space, axis);

  std::optional<StoppingTime> tau;
  std::optional<StoppingTimeReport> tau_validity;
  if (doc.contains("tau")) {
    tau = parse_tau(doc["tau"], space, axis);
    tau_validity = is_stopping_time(*tau, filtration);
  }

  Json meta;
  if (doc.contains("meta")) meta = doc["meta"];

  return ParseResult{Instance{std::move(filtration), std::move(tau), std::move(meta)},
                     std::move(warnings), std::move(tau_validity)};
}

ParseResult parse_instance_file(const std::filesystem::path& path, const ParseOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str(), opts);
}

std::string serialize_instance(const Instance& inst) {
  const Filtration& f = inst.filtration;
  Json doc;
  doc["omega"] = f.space().labels();
  Json times = Json::array();
  for (const Rational& t : f.axis().times()) times.push_back(number_node(t));
  doc["times"] = std::move(times);
  Json filt = Json::object();
  for (std::size_t i = 0; i < f.axis().size(); ++i)
    filt[f.axis().at(i).to_string()] = partition_node(f.level(i));
  doc["filtration"] = std::move(filt);
  doc["terminal"] = partition_node(f.terminal());
  if (inst.tau) {
    Json tau = Json::object();
    for (std::size_t i = 0; i < f.space().size(); ++i) {
      const TimePoint& v = inst.tau->value(i);
      if (v.is_infinite())
        tau[f.space().label(i)] = "inf";
      else
        tau[f.space().label(i)] = number_node(v.finite());
    }
    doc["tau"] = std::move(tau);
  }
  if (!inst.meta.is_null()) doc["meta"] = inst.meta;
  return doc.dump(2) + "\n";
}

}  // namespace ftau
