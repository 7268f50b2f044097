#include "ftau/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace ftau {

namespace {

enum class NodeState { alive, stopped_now, stopped_earlier, mixed, plain };

// Classifies the node (t, block). For a valid stopping time each block sits
// entirely inside one level set, so `mixed` can only appear on invalid
// random times; rendering stays deterministic either way.
NodeState classify(const Event& block, const std::optional<StoppingTime>& tau,
                   const TimePoint& t) {
  if (!tau) return NodeState::plain;
  bool all_after = true;
  bool all_by_now = true;
  bool all_exact = true;
  for (std::size_t m : block.members()) {
    const TimePoint& v = tau->value(m);
    if (v <= t) all_after = false;
    if (v > t) all_by_now = false;
    if (v != t) all_exact = false;
  }
  if (all_after) return NodeState::alive;
  if (all_exact) return NodeState::stopped_now;
  if (all_by_now) return NodeState::stopped_earlier;
  return NodeState::mixed;
}

const char* ascii_marker(NodeState s) {
  switch (s) {
    case NodeState::alive: return "1";
    case NodeState::stopped_now: return "[0]";
    case NodeState::stopped_earlier: return "(0)";
    case NodeState::mixed: return "?";
    case NodeState::plain: return "*";
  }
  return "?";
}

std::string join_row(const std::vector<std::string>& cells,
                     const std::vector<std::size_t>& widths) {
  std::string line;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::string cell = cells[c];
    if (c + 1 < cells.size()) cell.resize(widths[c] + 2, ' ');
    line += cell;
  }
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line;
}

}  // namespace

std::string render_ascii(const Instance& inst) {
  const Filtration& f = inst.filtration;
  const std::size_t n = f.space().size();
  const std::size_t nt = f.axis().size();
  const bool with_tau = inst.tau.has_value();

  std::vector<std::vector<std::string>> rows(1 + n);
  for (std::size_t ti = 0; ti < nt; ++ti)
    rows[0].push_back("t=" + f.axis().at(ti).to_string());
  if (with_tau) rows[0].push_back("tau");
  rows[0].push_back("omega");

  for (std::size_t w = 0; w < n; ++w) {
    auto& row = rows[1 + w];
    for (std::size_t ti = 0; ti < nt; ++ti) {
      const Partition& level = f.level(ti);
      const Event& block = level.block(level.block_index_of(w));
      if (block.bits().first_set() == w)
        row.push_back(ascii_marker(classify(block, inst.tau, TimePoint(f.axis().at(ti)))));
      else
        row.push_back(".");
    }
    if (with_tau) row.push_back(inst.tau->value(w).to_string());
    row.push_back(f.space().label(w));
  }

  std::vector<std::size_t> widths(rows[0].size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());

  std::ostringstream os;
  for (const auto& row : rows) os << join_row(row, widths) << '\n';
  return os.str();
}

std::string render_dot(const Instance& inst) {
  const Filtration& f = inst.filtration;
  const std::size_t nt = f.axis().size();

  std::ostringstream os;
  os << "digraph filtration {\n";
  os << "  rankdir=LR;\n";
  for (std::size_t ti = 0; ti < nt; ++ti) {
    const Partition& level = f.level(ti);
    for (std::size_t bi = 0; bi < level.block_count(); ++bi) {
      const Event& block = level.block(bi);
      os << "  n" << ti << "_" << bi << " [label=\"";
      switch (classify(block, inst.tau, TimePoint(f.axis().at(ti)))) {
        case NodeState::alive:
          os << "1\", shape=circle";
          break;
        case NodeState::stopped_now:
          os << "0\", shape=box";
          break;
        case NodeState::stopped_earlier:
          os << "0\", shape=circle, style=dashed";
          break;
        case NodeState::mixed:
          os << "?\", shape=diamond";
          break;
        case NodeState::plain:
          os << block.to_string() << "\", shape=ellipse";
          break;
      }
      os << "];\n";
    }
  }
  for (std::size_t ti = 0; ti + 1 < nt; ++ti) {
    const Partition& parent_level = f.level(ti);
    const Partition& child_level = f.level(ti + 1);
    for (std::size_t bi = 0; bi < child_level.block_count(); ++bi) {
      const Event& child = child_level.block(bi);
      const std::size_t pi = parent_level.block_index_of(child.bits().first_set());
      os << "  n" << ti << "_" << pi << " -> n" << ti + 1 << "_" << bi;
      const NodeState ps =
          classify(parent_level.block(pi), inst.tau, TimePoint(f.axis().at(ti)));
      if (ps == NodeState::stopped_now || ps == NodeState::stopped_earlier)
        os << " [style=dashed]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace ftau
