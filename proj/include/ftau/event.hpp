#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ftau/bits.hpp"
#include "ftau/errors.hpp"

namespace ftau {

// Finite sample space: an ordered list of distinct outcome labels. The
// index <-> label mapping is fixed at construction and never changes.
class SampleSpace {
 public:
  explicit SampleSpace(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

using SpacePtr = std::shared_ptr<const SampleSpace>;

SpacePtr make_space(std::vector<std::string> labels);

// Convenience space with labels "w1".."wn".
SpacePtr make_space(std::size_t n);

// Spaces are interchangeable when they are the same object or carry the
// same label sequence.
bool same_space(const SampleSpace& a, const SampleSpace& b);

// An event: a subset of the outcomes of one sample space.
class Event {
 public:
  Event(SpacePtr space, Bits bits);

  static Event empty(SpacePtr space);
  static Event full(SpacePtr space);
  static Event of(SpacePtr space, std::initializer_list<std::size_t> indices);
  static Event of_indices(SpacePtr space, std::span<const std::size_t> indices);
  static Event of_labels(SpacePtr space, std::span<const std::string> labels);

  const SampleSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const Bits& bits() const { return bits_; }

  std::size_t count() const { return bits_.count(); }
  bool is_empty() const { return bits_.none(); }
  bool is_full() const { return bits_.full(); }
  bool contains(std::size_t i) const { return bits_.test(i); }

  Event operator|(const Event& o) const;
  Event operator&(const Event& o) const;
  Event operator-(const Event& o) const;
  Event complement() const;

  bool is_subset_of(const Event& o) const;
  bool intersects(const Event& o) const;

  std::vector<std::size_t> members() const { return bits_.members(); }
  std::vector<std::string> labels() const;

  // "{w1,w2}"; "{}" for the empty event.
  std::string to_string() const;

  // Events over incompatible spaces are never equal.
  friend bool operator==(const Event& a, const Event& b) {
    return same_space(*a.space_, *b.space_) && a.bits_ == b.bits_;
  }

 private:
  SpacePtr space_;
  Bits bits_;
};

// Throws MixedSpacesError unless both events live on interchangeable spaces.
void require_same_space(const Event& a, const Event& b);

}  // namespace ftau
