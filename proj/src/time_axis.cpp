#include "ftau/time_axis.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace ftau {

namespace {

using Wide = __int128;

constexpr long long kMaxLL = 0x7fffffffffffffffLL;

long long narrow(Wide v, const char* what) {
  if (v > Wide(kMaxLL) || v < -Wide(kMaxLL))
    throw ParseError(std::string("rational overflow in ") + what);
  return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
  if (den_ == 0) throw Error("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  const auto fail = [&](const std::string& why) -> void {
    throw ParseError("bad number '" + std::string(text) + "': " + why);
  };
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  Wide mantissa = 0;
  int digits = 0;
  int frac_digits = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '.') {
      if (seen_point) fail("second decimal point");
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      seen_digit = true;
      if (++digits > 18) fail("too many digits");
      mantissa = mantissa * 10 + (c - '0');
      if (seen_point) ++frac_digits;
    } else {
      break;
    }
  }
  if (!seen_digit) fail("no digits");
  long long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_neg = text[pos] == '-';
      ++pos;
    }
    if (pos == text.size()) fail("empty exponent");
    long long e = 0;
    for (; pos < text.size(); ++pos) {
      const char c = text[pos];
      if (c < '0' || c > '9') break;
      e = e * 10 + (c - '0');
      if (e > 1000) fail("exponent out of range");
    }
    exponent = exp_neg ? -e : e;
  }
  if (pos != text.size()) fail("trailing characters");

  long long scale10 = exponent - frac_digits;
  Wide num = negative ? -mantissa : mantissa;
  Wide den = 1;
  if (scale10 > 18 || scale10 < -18) fail("exponent out of range");
  for (long long i = 0; i < scale10; ++i) num *= 10;
  for (long long i = 0; i < -scale10; ++i) den *= 10;
  return Rational(narrow(num, "mantissa"), narrow(den, "denominator"));
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  // Exact finite decimal exists iff den = 2^a 5^b.
  long long d = den_;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
  const int k = std::max(twos, fives);
  Wide scale = 1;
  for (int i = 0; i < k; ++i) scale *= 10;
  const Wide scaled = Wide(num_) * (scale / den_);
  const bool neg = scaled < 0;
  Wide abs = neg ? -scaled : scaled;
  std::string digits;
  if (abs == 0) digits = "0";
  while (abs > 0) {
    digits.push_back(static_cast<char>('0' + int(abs % 10)));
    abs /= 10;
  }
  while (static_cast<int>(digits.size()) <= k) digits.push_back('0');
  std::reverse(digits.begin(), digits.end());
  std::string out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return neg ? "-" + out : out;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Wide lhs = Wide(a.num_) * b.den_;
  const Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

TimeAxis::TimeAxis(std::vector<Rational> times) : times_(std::move(times)) {
  if (times_.empty()) throw Error("time axis has no points");
  for (std::size_t i = 1; i < times_.size(); ++i)
    if (!(times_[i - 1] < times_[i]))
      throw Error("time axis not strictly increasing at position " + std::to_string(i));
}

std::optional<std::size_t> TimeAxis::index_of(const Rational& t) const {
  auto it = std::lower_bound(times_.begin(), times_.end(), t);
  if (it == times_.end() || !(*it == t)) return std::nullopt;
  return static_cast<std::size_t>(it - times_.begin());
}

bool TimeAxis::contains(const TimePoint& t) const {
  return t.is_infinite() || index_of(t.finite()).has_value();
}

}  // namespace ftau
