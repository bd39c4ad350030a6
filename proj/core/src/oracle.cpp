#include <sstream>

#include "sdtp/distance_graph.hpp"
#include "sdtp/oracle.hpp"
#include "sdtp/solvers.hpp"

namespace sdtp {

std::vector<std::string> check_schedule(const SdtpInstance& instance,
                                        const Schedule& schedule) {
  std::vector<std::string> issues;
  const NodeId n = instance.num_time_points;
  if (schedule.size() != static_cast<std::size_t>(n) + 1) {
    issues.push_back("schedule has wrong length");
    return issues;
  }
  if (schedule[kAlpha] != 0) issues.push_back("origin is not scheduled at 0");
  for (NodeId i = 1; i <= n; ++i)
    if (!instance.domain(i).contains(schedule[i])) {
      std::ostringstream os;
      os << "s" << i << " = " << schedule[i] << " lies outside its domain";
      issues.push_back(os.str());
    }
  for (const Constraint& t : instance.type1)
    if (schedule[t.i] - schedule[t.j] > t.w) {
      std::ostringstream os;
      os << "s" << t.i << " - s" << t.j << " = "
         << schedule[t.i] - schedule[t.j] << " exceeds " << t.w;
      issues.push_back(os.str());
    }
  return issues;
}

OracleOutcome brute_force_solve(const SdtpInstance& instance,
                                ScheduleKind kind,
                                std::uint64_t assignment_cap) {
  const NodeId n = instance.num_time_points;
  const bool earliest = kind != ScheduleKind::Latest;
  DistanceGraph g = DistanceGraph::build(
      instance, earliest ? Direction::Direct : Direction::Reverse);

  // Bail out early when the relaxation to global bounds already cycles;
  // every assignment would contain the same cycle.
  SsspWorkspace ws;
  if (bellman_ford(g.csr(), kAlpha, ws) == SsspStatus::NegativeCycle)
    return {SolveOutcome::make_infeasible(InfeasibleCause::NegativeCycle),
            false};

  std::uint64_t total = 1;
  for (NodeId i = 1; i <= n; ++i) {
    total *= instance.domain(i).size();
    if (total > assignment_cap)
      return {SolveOutcome::make_timed_out(), true};
  }

  std::vector<std::size_t> pick(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Interval> alpha(static_cast<std::size_t>(n) + 1, Interval{0, 0});
  Schedule best;
  bool any = false;

  for (std::uint64_t it = 0; it < total; ++it) {
    for (NodeId i = 1; i <= n; ++i)
      alpha[i] = instance.domain(i)[pick[i]];
    g.update_alpha_arcs(alpha);
    if (bellman_ford(g.csr(), kAlpha, ws) == SsspStatus::Ok) {
      if (!any) {
        best.assign(static_cast<std::size_t>(n) + 1, 0);
        for (NodeId i = 1; i <= n; ++i)
          best[i] = earliest ? -ws.dist[i] : ws.dist[i];
        any = true;
      } else {
        for (NodeId i = 1; i <= n; ++i) {
          const Weight v = earliest ? -ws.dist[i] : ws.dist[i];
          if (earliest ? v < best[i] : v > best[i]) best[i] = v;
        }
      }
    }
    // advance the mixed-radix counter
    for (NodeId i = 1; i <= n; ++i) {
      if (++pick[i] < instance.domain(i).size()) break;
      pick[i] = 0;
    }
  }

  if (!any)
    return {SolveOutcome::make_infeasible(InfeasibleCause::DomainExhausted),
            false};
  return {SolveOutcome::make_feasible(std::move(best), kind), false};
}

CrossCheckReport cross_check(const SdtpInstance& instance,
                             const Deadline& deadline,
                             std::uint64_t assignment_cap) {
  CrossCheckReport report;
  const OracleOutcome ref =
      brute_force_solve(instance, ScheduleKind::Earliest, assignment_cap);
  if (ref.capped) {
    report.ok = false;
    report.oracle_capped = true;
    report.mismatches.push_back("reference enumeration exceeded its cap");
    return report;
  }
  const bool feasible = ref.outcome.status == SolveOutcome::Status::Feasible;
  const OracleOutcome ref_latest =
      feasible ? brute_force_solve(instance, ScheduleKind::Latest,
                                   assignment_cap)
               : ref;

  auto fail = [&](const std::string& solver, const std::string& what) {
    report.ok = false;
    report.mismatches.push_back(solver + ": " + what);
  };

  for (const std::string& name : solver_names()) {
    const SolveOutcome got =
        solve_with(name, instance, ScheduleKind::Earliest, deadline);
    if (got.status == SolveOutcome::Status::TimedOut) {
      fail(name, "timed out");
      continue;
    }
    const bool got_feasible = got.status == SolveOutcome::Status::Feasible;
    if (got_feasible != feasible) {
      fail(name, got_feasible ? "feasible on an infeasible instance"
                              : "infeasible on a feasible instance");
      continue;
    }
    if (!feasible) continue;
    if (!check_schedule(instance, got.schedule).empty())
      fail(name, "produced an invalid schedule");
    const bool exact = name == "bfdc" || name == "rult" || name == "ult" ||
                       name == "cra";
    if (exact && got.schedule != ref.outcome.schedule)
      fail(name, "earliest schedule differs from reference");
  }

  if (feasible) {
    for (const char* name : {"bfdc", "rult", "ult"}) {
      const SolveOutcome got =
          solve_with(name, instance, ScheduleKind::Latest, deadline);
      if (got.status != SolveOutcome::Status::Feasible)
        fail(name, "latest run disagrees with reference feasibility");
      else if (got.schedule != ref_latest.outcome.schedule)
        fail(name, "latest schedule differs from reference");
    }
  }
  return report;
}

}  // namespace sdtp
