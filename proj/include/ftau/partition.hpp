#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ftau/event.hpp"

namespace ftau {

// Partition of a sample space: nonempty, pairwise disjoint blocks whose
// union is the whole space. This is the canonical form of a finite
// sigma-algebra (its atoms). Blocks are kept in canonical order: sorted by
// smallest member index, members ascending.
class Partition {
 public:
  Partition(SpacePtr space, std::vector<Event> blocks);

  // {Omega}: the one-block partition.
  static Partition trivial(SpacePtr space);
  // One block per outcome.
  static Partition singletons(SpacePtr space);

  const SampleSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const std::vector<Event>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  const Event& block(std::size_t i) const { return blocks_.at(i); }

  // Index of the block containing outcome i.
  std::size_t block_index_of(std::size_t outcome) const { return block_of_.at(outcome); }

  // First block that the event e properly splits (intersects without
  // containing), or nullopt when e is a union of blocks. Over a finite
  // space, "e is a union of blocks" is exactly membership of e in the
  // sigma-algebra generated by this partition.
  std::optional<std::size_t> find_split_block(const Event& e) const;
  bool is_union_of_blocks(const Event& e) const { return !find_split_block(e).has_value(); }

  // "{{w1,w2},{w3}}"
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return same_space(*a.space_, *b.space_) && a.blocks_ == b.blocks_;
  }

 private:
  SpacePtr space_;
  std::vector<Event> blocks_;
  std::vector<std::size_t> block_of_;  // outcome index -> block index
};

// True iff every block of p is contained in some block of q, i.e. p is
// finer than q and the sigma-algebra generated by q is contained in the
// one generated by p.
bool refines(const Partition& p, const Partition& q);

// Coarsest common refinement: the nonempty pairwise intersections.
Partition meet(const Partition& p, const Partition& q);

// Finest partition coarser than both: connected components of the
// block-overlap graph.
Partition join(const Partition& p, const Partition& q);

}  // namespace ftau
