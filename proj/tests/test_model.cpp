#include <doctest.h>

#include "helpers.hpp"
#include "sdtp/model.hpp"

using namespace sdtp;

TEST_CASE("interval and domain membership") {
  const DomainList d{{{0, 2}, {8, 10}}};
  CHECK(d.contains(0));
  CHECK(d.contains(2));
  CHECK_FALSE(d.contains(5));
  CHECK(d.find_interval(9) == 1);
  CHECK(d.find_interval(3) == -1);
  CHECK(d.lower() == 0);
  CHECK(d.upper() == 10);
}

TEST_CASE("first interval strictly above a value") {
  const DomainList d{{{0, 2}, {8, 10}, {20, 21}}};
  CHECK(d.find_interval_above(-5) == 0);
  CHECK(d.find_interval_above(0) == 1);
  CHECK(d.find_interval_above(9) == 2);
  CHECK(d.find_interval_above(20) == -1);
}

TEST_CASE("make fills default domains") {
  const SdtpInstance inst = SdtpInstance::make(3, {}, {{2, {{1, 4}}}});
  CHECK(inst.domain(2).intervals.size() == 1);
  CHECK(inst.domain(1).lower() == -kDefaultHorizon);
  CHECK(inst.domain(3).upper() == kDefaultHorizon);
  CHECK(inst.explicit_domain[2]);
  CHECK_FALSE(inst.explicit_domain[1]);
}

TEST_CASE("stats of the two-point fixture") {
  const InstanceStats st = stats(testing::ex1());
  CHECK(st.m1 == 1);
  CHECK(st.k == 2);
  CHECK(st.omega == 3);
  CHECK(st.t_d == 1);
}

TEST_CASE("validation flags out-of-range and overlapping data") {
  SdtpInstance bad = testing::ex1();
  bad.type1.push_back({0, 1, 3});
  CHECK_FALSE(validate(bad).empty());

  SdtpInstance overlap = SdtpInstance::make(
      1, {}, {{1, {{0, 5}, {4, 9}}}});
  CHECK_FALSE(validate(overlap).empty());

  CHECK(validate(testing::ex1()).empty());
  CHECK(validate(testing::ex3()).empty());
}
