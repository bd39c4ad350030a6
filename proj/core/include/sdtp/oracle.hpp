#pragma once

#include <string>
#include <vector>

#include "sdtp/model.hpp"

namespace sdtp {

/// Checks a schedule against every constraint of the instance. Returns
/// one message per violation; empty means the schedule is valid.
std::vector<std::string> check_schedule(const SdtpInstance& instance,
                                        const Schedule& schedule);

struct OracleOutcome {
  SolveOutcome outcome;
  bool capped = false;  // enumeration hit the assignment cap
};

/// Reference solver: enumerates every interval assignment and solves the
/// remaining difference system. Feasible schedules of an instance are
/// closed under componentwise min/max, so the extreme schedule over all
/// feasible assignments is itself feasible.
OracleOutcome brute_force_solve(const SdtpInstance& instance,
                                ScheduleKind kind = ScheduleKind::Earliest,
                                std::uint64_t assignment_cap = 1'000'000);

struct CrossCheckReport {
  bool ok = true;
  bool oracle_capped = false;
  std::vector<std::string> mismatches;
};

/// Runs every solver against the brute-force reference: statuses must
/// agree, feasible schedules must validate, and earliest/latest
/// schedules must match the reference exactly.
CrossCheckReport cross_check(const SdtpInstance& instance,
                             const Deadline& deadline = {},
                             std::uint64_t assignment_cap = 1'000'000);

}  // namespace sdtp
