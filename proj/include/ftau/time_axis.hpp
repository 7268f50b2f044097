#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ftau/errors.hpp"

namespace ftau {

// Exact rational number. Time points are compared exactly; no floating
// point is involved anywhere on the time axis.
class Rational {
 public:
  Rational() = default;
  Rational(long long num, long long den = 1);  // NOLINT(google-explicit-constructor)

  // Parses "12", "-3.25", "1e3", "2.5e-2". Digits and exponent must stay
  // within 64-bit range; anything else is a ParseError.
  static Rational parse_decimal(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }

  // Exact decimal when the denominator is of the form 2^a 5^b (always the
  // case for values built by parse_decimal); "num/den" otherwise.
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  long long num_ = 0;
  long long den_ = 1;
};

// A point on the extended time axis: a rational, or +infinity.
class TimePoint {
 public:
  TimePoint() = default;
  TimePoint(Rational value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  TimePoint(long long value) : value_(Rational(value)) {}  // NOLINT

  static TimePoint infinity() {
    TimePoint t;
    t.infinite_ = true;
    return t;
  }

  bool is_infinite() const { return infinite_; }
  const Rational& finite() const {
    if (infinite_) throw Error("time point is infinite");
    return value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : value_.to_string(); }

  friend bool operator==(const TimePoint&, const TimePoint&) = default;
  friend std::strong_ordering operator<=>(const TimePoint& a, const TimePoint& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  Rational value_;
  bool infinite_ = false;
};

// Strictly increasing finite list of time points. Infinity is implicit:
// it belongs to every extended axis and compares greater than all points.
class TimeAxis {
 public:
  explicit TimeAxis(std::vector<Rational> times);

  std::size_t size() const { return times_.size(); }
  const std::vector<Rational>& times() const { return times_; }
  const Rational& at(std::size_t i) const { return times_.at(i); }
  const Rational& front() const { return times_.front(); }
  const Rational& back() const { return times_.back(); }

  std::optional<std::size_t> index_of(const Rational& t) const;

  // Membership in T ∪ {inf}.
  bool contains(const TimePoint& t) const;

  friend bool operator==(const TimeAxis&, const TimeAxis&) = default;

 private:
  std::vector<Rational> times_;
};

}  // namespace ftau
