#include "ftau/event.hpp"

#include <sstream>
#include <utility>

namespace ftau {

SampleSpace::SampleSpace(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw EmptySpaceError("sample space has no outcomes");
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw Error("empty outcome label at index " + std::to_string(i));
    auto [it, inserted] = index_.emplace(labels_[i], i);
    if (!inserted) throw Error("duplicate outcome label: " + labels_[i]);
  }
}

std::optional<std::size_t> SampleSpace::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SpacePtr make_space(std::vector<std::string> labels) {
  return std::make_shared<SampleSpace>(std::move(labels));
}

SpacePtr make_space(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("w" + std::to_string(i));
  return make_space(std::move(labels));
}

bool same_space(const SampleSpace& a, const SampleSpace& b) {
  return &a == &b || a.labels() == b.labels();
}

Event::Event(SpacePtr space, Bits bits) : space_(std::move(space)), bits_(std::move(bits)) {
  if (bits_.size() != space_->size())
    throw Error("event width does not match sample space size");
}

Event Event::empty(SpacePtr space) {
  Bits b(space->size());
  return Event(std::move(space), std::move(b));
}

Event Event::full(SpacePtr space) {
  Bits b(space->size());
  return Event(std::move(space), b.complement());
}

Event Event::of(SpacePtr space, std::initializer_list<std::size_t> indices) {
  Bits b(space->size());
  for (std::size_t i : indices) {
    if (i >= space->size()) throw Error("outcome index out of range: " + std::to_string(i));
    b.set(i);
  }
  return Event(std::move(space), std::move(b));
}

Event Event::of_indices(SpacePtr space, std::span<const std::size_t> indices) {
  Bits b(space->size());
  for (std::size_t i : indices) {
    if (i >= space->size()) throw Error("outcome index out of range: " + std::to_string(i));
    b.set(i);
  }
  return Event(std::move(space), std::move(b));
}

Event Event::of_labels(SpacePtr space, std::span<const std::string> labels) {
  Bits b(space->size());
  for (const std::string& l : labels) {
    auto idx = space->index_of(l);
    if (!idx) throw UnknownLabelError("unknown outcome label: " + l);
    b.set(*idx);
  }
  return Event(std::move(space), std::move(b));
}

void require_same_space(const Event& a, const Event& b) {
  if (!same_space(a.space(), b.space()))
    throw MixedSpacesError("events reference different sample spaces");
}

Event Event::operator|(const Event& o) const {
  require_same_space(*this, o);
  return Event(space_, bits_ | o.bits_);
}

Event Event::operator&(const Event& o) const {
  require_same_space(*this, o);
  return Event(space_, bits_ & o.bits_);
}

Event Event::operator-(const Event& o) const {
  require_same_space(*this, o);
  return Event(space_, bits_ - o.bits_);
}

Event Event::complement() const { return Event(space_, bits_.complement()); }

bool Event::is_subset_of(const Event& o) const {
  require_same_space(*this, o);
  return bits_.is_subset_of(o.bits_);
}

bool Event::intersects(const Event& o) const {
  require_same_space(*this, o);
  return bits_.intersects(o.bits_);
}

std::vector<std::string> Event::labels() const {
  std::vector<std::string> out;
  out.reserve(count());
  for (std::size_t i : members()) out.push_back(space_->label(i));
  return out;
}

std::string Event::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t i : members()) {
    if (!first) os << ',';
    os << space_->label(i);
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace ftau
