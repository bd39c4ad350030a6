#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "sdtp/oracle.hpp"
#include "sdtp/solvers.hpp"

using namespace sdtp;

namespace {
const Schedule kEx1Earliest{0, 8, 9};
const Schedule kEx1Latest{0, 10, 12};
}  // namespace

TEST_CASE("all solvers on the feasible fixture") {
  const SdtpInstance inst = testing::ex1();
  for (const std::string& name : solver_names()) {
    CAPTURE(name);
    const SolveOutcome out = solve_with(name, inst, ScheduleKind::Earliest);
    REQUIRE(out.feasible());
    CHECK(check_schedule(inst, out.schedule).empty());
    if (name != "kab" && name != "kaj")
      CHECK(out.schedule == kEx1Earliest);
  }
}

TEST_CASE("latest schedules agree on the fixture") {
  const SdtpInstance inst = testing::ex1();
  CHECK(solve_bfdc(inst, ScheduleKind::Latest).schedule == kEx1Latest);
  CHECK(solve_rult(inst, ScheduleKind::Latest).schedule == kEx1Latest);
  CHECK(solve_ult(inst, ScheduleKind::Latest).schedule == kEx1Latest);
}

TEST_CASE("unreachable-window fixture causes per solver") {
  const SdtpInstance inst = testing::ex2();
  auto cause = [&inst](const std::string& name) {
    const SolveOutcome out = solve_with(name, inst, ScheduleKind::Earliest);
    REQUIRE(out.infeasible());
    return out.cause;
  };
  CHECK(cause("bfdc") == InfeasibleCause::DomainExhausted);
  CHECK(cause("cra") == InfeasibleCause::DomainExhausted);
  CHECK(cause("rult") == InfeasibleCause::EmptyBound);
  CHECK(cause("ult") == InfeasibleCause::EmptyBound);
  CHECK(cause("kab") == InfeasibleCause::EmptyBound);
  CHECK(cause("kaj") == InfeasibleCause::EmptyBound);
}

TEST_CASE("negative cycle fixture is rejected everywhere") {
  const SdtpInstance inst = testing::ex3();
  for (const std::string& name : solver_names()) {
    CAPTURE(name);
    const SolveOutcome out = solve_with(name, inst, ScheduleKind::Earliest);
    REQUIRE(out.infeasible());
    CHECK(out.cause == InfeasibleCause::NegativeCycle);
  }
}

TEST_CASE("latest is rejected where unsupported") {
  const SdtpInstance inst = testing::ex1();
  for (const char* name : {"cra", "kab", "kaj"})
    CHECK_THROWS_AS(solve_with(name, inst, ScheduleKind::Latest),
                    std::invalid_argument);
  CHECK_THROWS_AS(solve_with("nope", inst, ScheduleKind::Earliest),
                  std::invalid_argument);
}

TEST_CASE("earliest never exceeds latest") {
  const SdtpInstance inst = testing::ex1();
  const Schedule lo = solve_bfdc(inst, ScheduleKind::Earliest).schedule;
  const Schedule hi = solve_bfdc(inst, ScheduleKind::Latest).schedule;
  for (std::size_t i = 0; i < lo.size(); ++i) CHECK(lo[i] <= hi[i]);
}

TEST_CASE("rult reports its iteration count") {
  RultTrace trace;
  const SolveOutcome out =
      solve_rult(testing::ex1(), ScheduleKind::Earliest, Deadline(), trace);
  CHECK(out.feasible());
  CHECK(trace.iterations >= 1);
}

TEST_CASE("expired deadline yields a timeout verdict") {
  const Deadline dead = Deadline::after(std::chrono::microseconds(0));
  const SdtpInstance inst = testing::ex1();
  for (const std::string& name : solver_names()) {
    CAPTURE(name);
    CHECK(solve_with(name, inst, ScheduleKind::Earliest, dead).timed_out());
  }
}
