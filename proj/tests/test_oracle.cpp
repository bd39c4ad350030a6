#include <doctest.h>

#include "helpers.hpp"
#include "sdtp/oracle.hpp"

using namespace sdtp;

TEST_CASE("schedule checker catches each violation class") {
  const SdtpInstance inst = testing::ex1();
  CHECK(check_schedule(inst, {0, 8, 9}).empty());
  CHECK_FALSE(check_schedule(inst, {1, 8, 9}).empty());   // origin moved
  CHECK_FALSE(check_schedule(inst, {0, 5, 9}).empty());   // domain gap
  CHECK_FALSE(check_schedule(inst, {0, 0, 9}).empty());   // difference row
  CHECK_FALSE(check_schedule(inst, {0, 8}).empty());      // wrong length
}

TEST_CASE("brute force extremes on the fixture") {
  const OracleOutcome lo = brute_force_solve(testing::ex1());
  REQUIRE(lo.outcome.feasible());
  CHECK_FALSE(lo.capped);
  CHECK(lo.outcome.schedule == Schedule{0, 8, 9});

  const OracleOutcome hi =
      brute_force_solve(testing::ex1(), ScheduleKind::Latest);
  CHECK(hi.outcome.schedule == Schedule{0, 10, 12});
}

TEST_CASE("brute force verdicts on infeasible fixtures") {
  CHECK(brute_force_solve(testing::ex2()).outcome.infeasible());
  const OracleOutcome cyc = brute_force_solve(testing::ex3());
  REQUIRE(cyc.outcome.infeasible());
  CHECK(cyc.outcome.cause == InfeasibleCause::NegativeCycle);
}

TEST_CASE("assignment cap reports itself") {
  // 2 points x 3 intervals each = 9 assignments; cap below that.
  const SdtpInstance inst = SdtpInstance::make(
      2, {}, {{1, {{0, 1}, {3, 4}, {6, 7}}}, {2, {{0, 1}, {3, 4}, {6, 7}}}});
  const OracleOutcome out =
      brute_force_solve(inst, ScheduleKind::Earliest, 4);
  CHECK(out.capped);
  CHECK(out.outcome.timed_out());
}

TEST_CASE("cross check passes on all fixtures") {
  CHECK(cross_check(testing::ex1()).ok);
  CHECK(cross_check(testing::ex2()).ok);
  CHECK(cross_check(testing::ex3()).ok);
}
