#include "doctest.h"

#include "ftau/bits.hpp"

using ftau::Bits;

TEST_CASE("bits basics within one word") {
  Bits b(8);
  CHECK(b.none());
  CHECK(b.count() == 0);
  b.set(0);
  b.set(7);
  CHECK(b.count() == 2);
  CHECK(b.test(0));
  CHECK(b.test(7));
  CHECK_FALSE(b.test(3));
  b.reset(0);
  CHECK(b.count() == 1);
  CHECK(b.first_set() == 7);
}

TEST_CASE("bits complement masks the top word") {
  Bits b(10);
  b.set(2);
  Bits c = b.complement();
  CHECK(c.count() == 9);
  CHECK_FALSE(c.test(2));
  CHECK(c.test(9));
  CHECK((b | c).count() == 10);
  CHECK((b & c).none());
}

TEST_CASE("bits subset and intersection") {
  Bits a(6), b(6);
  a.set(1);
  a.set(2);
  b.set(1);
  b.set(2);
  b.set(5);
  CHECK(a.is_subset_of(b));
  CHECK_FALSE(b.is_subset_of(a));
  CHECK(a.intersects(b));
  Bits c(6);
  c.set(0);
  CHECK_FALSE(a.intersects(c));
  CHECK((b - a).count() == 1);
  CHECK((b - a).test(5));
}

TEST_CASE("bits beyond one word") {
  Bits b(130);
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.first_set() == 0);
  Bits c = b.complement();
  CHECK(c.count() == 127);
  CHECK_FALSE(c.test(64));
  const auto members = b.members();
  REQUIRE(members.size() == 3);
  CHECK(members[0] == 0);
  CHECK(members[1] == 64);
  CHECK(members[2] == 129);
  Bits full = Bits(130).complement();
  CHECK(full.full());
  CHECK(b.is_subset_of(full));
}

TEST_CASE("bits numeric ordering") {
  Bits a(8), b(8), c(8);
  a.set(0);          // value 1
  b.set(1);          // value 2
  c.set(0);
  c.set(1);          // value 3
  CHECK(a < b);
  CHECK(b < c);
  CHECK(Bits(8) < a);
  Bits hi(130), lo(130);
  hi.set(128);
  lo.set(63);
  CHECK(lo < hi);
}

TEST_CASE("bits equality ignores storage details") {
  Bits a(64), b(64);
  a.set(63);
  b.set(63);
  CHECK(a == b);
  b.reset(63);
  CHECK(a != b);
}
