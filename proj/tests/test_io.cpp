#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "sdtp/io.hpp"

using namespace sdtp;

TEST_CASE("serialize/parse round trip") {
  const SdtpInstance inst = testing::ex1();
  std::stringstream buf;
  serialize_instance(inst, buf);
  const SdtpInstance back = parse_instance(buf);
  CHECK(back.num_time_points == inst.num_time_points);
  CHECK(back.type1 == inst.type1);
  CHECK(back.domains == inst.domains);
}

TEST_CASE("parses the documented text form") {
  std::stringstream in(
      "c a comment line\n"
      "p sdtp 2 1 2\n"
      "a 2 1 5\n"
      "d 1 2 0 2 8 10\n"
      "d 2 1 9 12\n");
  const SdtpInstance inst = parse_instance(in);
  CHECK(inst.type1 == std::vector<Constraint>{{2, 1, 5}});
  CHECK(inst.domain(1).intervals == std::vector<Interval>{{0, 2}, {8, 10}});
}

TEST_CASE("rejects malformed input") {
  std::stringstream no_header("a 1 2 3\n");
  CHECK_THROWS_AS(parse_instance(no_header), ParseError);

  std::stringstream bad_count("p sdtp 2 2 0\na 2 1 5\n");
  CHECK_THROWS_AS(parse_instance(bad_count), ParseError);

  std::stringstream dup(
      "p sdtp 1 0 2\nd 1 1 0 5\nd 1 1 7 9\n");
  CHECK_THROWS_AS(parse_instance(dup), ParseError);
}

TEST_CASE("serialization is deterministic") {
  std::stringstream a, b;
  serialize_instance(testing::ex2(), a);
  serialize_instance(testing::ex2(), b);
  CHECK(a.str() == b.str());
}
