#include <cassert>
#include <map>
#include <utility>

#include "sdtp/distance_graph.hpp"
#include "sdtp/solvers.hpp"

namespace sdtp {

namespace {

// Difference pair: s_x - s_y constrained to [lo, up]. One entry per
// unordered time-point pair; opposing constraints fold into the two
// bounds. Missing directions stay at the infinity sentinels.
struct DiffPair {
  NodeId x = 0;
  NodeId y = 0;
  Weight lo = -kInfinity;
  Weight up = kInfinity;
};

// Value pair (i, alpha): s_i ranges over the domain list clipped to
// [lo, hi], with lo in interval lo_idx and hi in interval hi_idx.
struct ValueBound {
  std::int32_t lo_idx = 0;
  std::int32_t hi_idx = 0;
  Weight lo = 0;
  Weight hi = 0;
};

}  // namespace

SolveOutcome solve_ult(const SdtpInstance& instance, ScheduleKind kind,
                       const Deadline& deadline) {
  assert(kind != ScheduleKind::Unspecified);
  const NodeId n = instance.num_time_points;

  // A structural cycle in the difference constraints dooms the instance
  // regardless of any domain, and Bellman-Ford finds it far cheaper than
  // the first Floyd-Warshall closure would.
  if (has_c1_negative_cycle(instance, deadline))
    return deadline.expired()
               ? SolveOutcome{}
               : SolveOutcome::make_infeasible(InfeasibleCause::NegativeCycle);

  std::map<std::pair<NodeId, NodeId>, DiffPair> folded;
  for (const Constraint& t : instance.type1) {
    if (t.i == t.j) {
      if (t.w < 0)
        return SolveOutcome::make_infeasible(InfeasibleCause::NegativeCycle);
      continue;  // vacuous
    }
    const NodeId x = std::min(t.i, t.j);
    const NodeId y = std::max(t.i, t.j);
    DiffPair& p = folded[{x, y}];
    p.x = x;
    p.y = y;
    if (t.i == x) {  // s_x - s_y <= w
      if (t.w < p.up) p.up = t.w;
    } else {  // s_y - s_x <= w, so s_x - s_y >= -w
      if (-t.w > p.lo) p.lo = -t.w;
    }
  }
  std::vector<DiffPair> pairs;
  pairs.reserve(folded.size());
  for (auto& [key, p] : folded) pairs.push_back(p);

  std::vector<ValueBound> vb(static_cast<std::size_t>(n) + 1);
  for (NodeId i = 1; i <= n; ++i) {
    const DomainList& d = instance.domain(i);
    vb[i] = ValueBound{0, static_cast<std::int32_t>(d.size()) - 1,
                       d.lower(), d.upper()};
  }

  DistanceMatrix delta = DistanceMatrix::infinite(n + 1);
  for (NodeId v = 0; v <= n; ++v) delta.at(v, v) = 0;

  bool changed = true;
  while (changed) {
    if (deadline.expired()) return SolveOutcome::make_timed_out();
    changed = false;

    for (const DiffPair& p : pairs) {
      if (p.up != kInfinity) delta.at(p.x, p.y) = p.up;
      if (p.lo != -kInfinity) delta.at(p.y, p.x) = -p.lo;
    }
    for (NodeId i = 1; i <= n; ++i) {
      delta.at(i, kAlpha) = vb[i].hi;
      delta.at(kAlpha, i) = -vb[i].lo;
    }

    const SsspStatus st = floyd_warshall(delta, deadline);
    if (st == SsspStatus::TimedOut) return SolveOutcome::make_timed_out();
    if (st == SsspStatus::NegativeCycle)
      // A cycle inside the difference constraints is structural; one that
      // needs the value pairs means some boundary window emptied.
      return SolveOutcome::make_infeasible(
          has_c1_negative_cycle(instance, deadline)
              ? InfeasibleCause::NegativeCycle
              : InfeasibleCause::EmptyBound);

    // Intersect every pair's bound with the window the closure implies.
    for (DiffPair& p : pairs) {
      const Weight up = delta.at(p.x, p.y);
      const Weight lo =
          delta.at(p.y, p.x) == kInfinity ? -kInfinity : -delta.at(p.y, p.x);
      if (up < p.up) {
        p.up = up;
        changed = true;
      }
      if (lo > p.lo) {
        p.lo = lo;
        changed = true;
      }
      if (p.lo > p.up)
        return SolveOutcome::make_infeasible(InfeasibleCause::EmptyBound);
    }
    for (NodeId i = 1; i <= n; ++i) {
      const DomainList& d = instance.domain(i);
      ValueBound& b = vb[i];
      Weight lo = -delta.at(kAlpha, i);
      Weight hi = delta.at(i, kAlpha);
      if (lo < b.lo) lo = b.lo;
      if (hi > b.hi) hi = b.hi;
      while (b.lo_idx <= b.hi_idx && d[b.lo_idx].hi < lo) ++b.lo_idx;
      while (b.hi_idx >= b.lo_idx && d[b.hi_idx].lo > hi) --b.hi_idx;
      if (b.lo_idx > b.hi_idx)
        return SolveOutcome::make_infeasible(InfeasibleCause::EmptyBound);
      if (d[b.lo_idx].lo > lo) lo = d[b.lo_idx].lo;
      if (d[b.hi_idx].hi < hi) hi = d[b.hi_idx].hi;
      if (lo > hi)
        return SolveOutcome::make_infeasible(InfeasibleCause::EmptyBound);
      if (lo != b.lo || hi != b.hi) {
        b.lo = lo;
        b.hi = hi;
        changed = true;
      }
    }
  }

  Schedule s(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId i = 1; i <= n; ++i)
    s[i] = kind == ScheduleKind::Earliest ? vb[i].lo : vb[i].hi;
  return SolveOutcome::make_feasible(std::move(s), kind);
}

}  // namespace sdtp
