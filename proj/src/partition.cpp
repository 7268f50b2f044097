#include "ftau/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace ftau {

namespace {

void require_same_space(const Partition& a, const Partition& b) {
  if (!same_space(a.space(), b.space()))
    throw MixedSpacesError("partitions reference different sample spaces");
}

}  // namespace

Partition::Partition(SpacePtr space, std::vector<Event> blocks)
    : space_(std::move(space)), blocks_(std::move(blocks)) {
  const std::size_t n = space_->size();
  std::size_t total = 0;
  Bits covered(n);
  for (const Event& b : blocks_) {
    if (!same_space(b.space(), *space_))
      throw MixedSpacesError("partition block from a different sample space");
    if (b.is_empty()) throw NotAPartitionError("partition block is empty");
    total += b.count();
    covered |= b.bits();
  }
  // Counting argument: sum of block sizes == n and union == Omega together
  // imply disjointness and coverage.
  if (total != n || covered.count() != n)
    throw NotAPartitionError("blocks do not partition the space (sum " +
                             std::to_string(total) + ", covered " +
                             std::to_string(covered.count()) + ", n " +
                             std::to_string(n) + ")");
  std::sort(blocks_.begin(), blocks_.end(), [](const Event& a, const Event& b) {
    return a.bits().first_set() < b.bits().first_set();
  });
  block_of_.assign(n, 0);
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi)
    for (std::size_t i : blocks_[bi].members()) block_of_[i] = bi;
}

Partition Partition::trivial(SpacePtr space) {
  std::vector<Event> blocks{Event::full(space)};
  return Partition(std::move(space), std::move(blocks));
}

Partition Partition::singletons(SpacePtr space) {
  std::vector<Event> blocks;
  blocks.reserve(space->size());
  for (std::size_t i = 0; i < space->size(); ++i)
    blocks.push_back(Event::of(space, {i}));
  return Partition(std::move(space), std::move(blocks));
}

std::optional<std::size_t> Partition::find_split_block(const Event& e) const {
  if (!same_space(e.space(), *space_))
    throw MixedSpacesError("event and partition reference different sample spaces");
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    const Bits x = blocks_[bi].bits() & e.bits();
    if (x.any() && x != blocks_[bi].bits()) return bi;
  }
  return std::nullopt;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) os << ',';
    os << blocks_[i].to_string();
  }
  os << '}';
  return os.str();
}

bool refines(const Partition& p, const Partition& q) {
  require_same_space(p, q);
  for (const Event& b : p.blocks()) {
    const std::size_t qi = q.block_index_of(b.bits().first_set());
    if (!b.bits().is_subset_of(q.block(qi).bits())) return false;
  }
  return true;
}

Partition meet(const Partition& p, const Partition& q) {
  require_same_space(p, q);
  std::vector<Event> blocks;
  for (const Event& a : p.blocks()) {
    for (const Event& b : q.blocks()) {
      Bits x = a.bits() & b.bits();
      if (x.any()) blocks.emplace_back(p.space_ptr(), std::move(x));
    }
  }
  return Partition(p.space_ptr(), std::move(blocks));
}

Partition join(const Partition& p, const Partition& q) {
  require_same_space(p, q);
  const std::size_t n = p.space().size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  for (const Partition* part : {&p, &q}) {
    for (const Event& b : part->blocks()) {
      const auto mem = b.members();
      for (std::size_t i = 1; i < mem.size(); ++i) unite(mem[0], mem[i]);
    }
  }
  std::vector<Bits> groups(n, Bits());
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    if (groups[r].size() == 0) groups[r] = Bits(n);
    groups[r].set(i);
  }
  std::vector<Event> blocks;
  for (Bits& g : groups)
    if (g.size() != 0 && g.any()) blocks.emplace_back(p.space_ptr(), std::move(g));
  return Partition(p.space_ptr(), std::move(blocks));
}

}  // namespace ftau
