#include <cassert>

#include "sdtp/distance_graph.hpp"
#include "sdtp/solvers.hpp"

namespace sdtp {

namespace {

// Bound list for one time point: the domain clipped to [lo, hi], where
// lo lives in interval lo_idx and hi in interval hi_idx.
struct Bound {
  std::int32_t lo_idx = 0;
  std::int32_t hi_idx = 0;
  Weight lo = 0;
  Weight hi = 0;
};

}  // namespace

SolveOutcome solve_rult(const SdtpInstance& instance, ScheduleKind kind,
                        const Deadline& deadline, RultTrace& trace) {
  assert(kind != ScheduleKind::Unspecified);
  const NodeId n = instance.num_time_points;
  // One-sided graphs: the earliest pass propagates lower bounds, the
  // latest pass upper bounds; the window intersection couples the two.
  DistanceGraph gd =
      DistanceGraph::build(instance, Direction::Direct, AlphaArcs::SourceOnly);
  DistanceGraph gr =
      DistanceGraph::build(instance, Direction::Reverse, AlphaArcs::SourceOnly);

  std::vector<Bound> b(static_cast<std::size_t>(n) + 1);
  std::vector<Interval> alpha(static_cast<std::size_t>(n) + 1, Interval{0, 0});
  for (NodeId i = 1; i <= n; ++i) {
    const DomainList& d = instance.domain(i);
    b[i] = Bound{0, static_cast<std::int32_t>(d.size()) - 1, d.lower(),
                 d.upper()};
    alpha[i] = Interval{b[i].lo, b[i].hi};
  }

  SsspWorkspace ws;
  std::vector<Weight> earliest(static_cast<std::size_t>(n) + 1);
  std::vector<Weight> latest(static_cast<std::size_t>(n) + 1);

  std::size_t iterations = 0;
  bool changed = true;
  while (changed) {
    if (deadline.expired()) return SolveOutcome::make_timed_out();
    ++iterations;
    changed = false;

    gd.update_alpha_arcs(alpha);
    SsspStatus st = bellman_ford(gd.csr(), kAlpha, ws, deadline);
    if (st == SsspStatus::TimedOut) return SolveOutcome::make_timed_out();
    if (st == SsspStatus::NegativeCycle)
      return SolveOutcome::make_infeasible(InfeasibleCause::NegativeCycle);
    for (NodeId i = 1; i <= n; ++i) earliest[i] = -ws.dist[i];

    gr.update_alpha_arcs(alpha);
    st = bellman_ford(gr.csr(), kAlpha, ws, deadline);
    if (st == SsspStatus::TimedOut) return SolveOutcome::make_timed_out();
    if (st == SsspStatus::NegativeCycle)
      return SolveOutcome::make_infeasible(InfeasibleCause::NegativeCycle);
    for (NodeId i = 1; i <= n; ++i) latest[i] = ws.dist[i];

    // Intersect each bound list with its feasibility window; the window
    // lies inside the previous [lo, hi] because the alpha arcs enforce it.
    for (NodeId i = 1; i <= n; ++i) {
      const DomainList& d = instance.domain(i);
      Bound& bi = b[i];
      Weight lo = earliest[i];
      Weight hi = latest[i];
      while (bi.lo_idx <= bi.hi_idx && d[bi.lo_idx].hi < lo) ++bi.lo_idx;
      while (bi.hi_idx >= bi.lo_idx && d[bi.hi_idx].lo > hi) --bi.hi_idx;
      if (bi.lo_idx > bi.hi_idx)
        return SolveOutcome::make_infeasible(InfeasibleCause::EmptyBound);
      if (d[bi.lo_idx].lo > lo) lo = d[bi.lo_idx].lo;
      if (d[bi.hi_idx].hi < hi) hi = d[bi.hi_idx].hi;
      if (lo > hi)
        return SolveOutcome::make_infeasible(InfeasibleCause::EmptyBound);
      if (lo != bi.lo || hi != bi.hi) {
        bi.lo = lo;
        bi.hi = hi;
        alpha[i] = Interval{lo, hi};
        changed = true;
      }
    }
  }

  trace.iterations = iterations;
  Schedule s(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId i = 1; i <= n; ++i)
    s[i] = kind == ScheduleKind::Earliest ? b[i].lo : b[i].hi;
  return SolveOutcome::make_feasible(std::move(s), kind);
}

SolveOutcome solve_rult(const SdtpInstance& instance, ScheduleKind kind,
                        const Deadline& deadline) {
  RultTrace trace;
  return solve_rult(instance, kind, deadline, trace);
}

}  // namespace sdtp
