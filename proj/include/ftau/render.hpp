#pragma once

#include <string>

#include "ftau/instance_io.hpp"

namespace ftau {

// Stochastic-tree renderings of an instance: one node per (time, level
// block), edges by block inclusion between consecutive times. When the
// instance carries a random time, nodes are labeled with the value of the
// associated indicator process; the node where a path first hits zero is
// boxed and the continuation after it is dashed. Output is deterministic:
// identical instances render to identical bytes.

// One row per outcome, like the Omega column of a stochastic-tree diagram,
// with the random time in a trailing column. Each node appears on the row
// of its block's first member; "." marks continuation rows.
std::string render_ascii(const Instance& inst);

// Plain `digraph` text, no tool-specific extensions.
std::string render_dot(const Instance& inst);

}  // namespace ftau
