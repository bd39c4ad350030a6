#include <cassert>

#include "sdtp/distance_graph.hpp"
#include "sdtp/solvers.hpp"

namespace sdtp {

namespace {

// FIFO of time points whose current value fell outside its domain.
// Membership flags bound occupancy; staleness is re-checked at pop.
struct Fifo {
  std::vector<NodeId> buf;
  std::vector<std::uint8_t> flagged;
  std::size_t head = 0;
  std::size_t count = 0;

  explicit Fifo(NodeId vcount) : buf(vcount), flagged(vcount, 0) {}

  bool empty() const { return count == 0; }
  void push(NodeId i) {
    if (flagged[i]) return;
    flagged[i] = 1;
    std::size_t tail = head + count;
    if (tail >= buf.size()) tail -= buf.size();
    buf[tail] = i;
    ++count;
  }
  NodeId pop() {
    const NodeId i = buf[head];
    head = head + 1 == buf.size() ? 0 : head + 1;
    --count;
    flagged[i] = 0;
    return i;
  }
};

}  // namespace

SolveOutcome solve_cra(const SdtpInstance& instance, const Deadline& deadline) {
  const NodeId n = instance.num_time_points;
  // Lower bounds and difference arcs only; upper-bound violations are the
  // domain checks' business, not the relaxation's.
  const DistanceGraph gd =
      DistanceGraph::build(instance, Direction::Direct, AlphaArcs::SourceOnly);

  SsspWorkspace ws;
  const SsspStatus st = bellman_ford(gd.csr(), kAlpha, ws, deadline);
  if (st == SsspStatus::TimedOut) return SolveOutcome::make_timed_out();
  if (st == SsspStatus::NegativeCycle)
    return SolveOutcome::make_infeasible(InfeasibleCause::NegativeCycle);

  std::vector<Weight> s0(static_cast<std::size_t>(n) + 1);
  for (NodeId i = 0; i <= n; ++i) s0[i] = -ws.dist[i];

  // Difference constraints only, reweighted by the relaxed solution so
  // all weights are nonnegative and Dijkstra applies.
  std::vector<std::tuple<NodeId, NodeId, Weight>> arcs;
  arcs.reserve(instance.type1.size());
  for (const Constraint& t : instance.type1) {
    const Weight w = t.w + s0[t.j] - s0[t.i];
    assert(w >= 0);
    arcs.emplace_back(t.i, t.j, w);
  }
  const Csr g1 = Csr::from_arcs(n + 1, arcs);

  Schedule s = s0;
  Fifo fifo(n + 1);
  for (NodeId i = 1; i <= n; ++i)
    if (!instance.domain(i).contains(s[i])) fifo.push(i);

  // Shortest-path rows are computed on demand and cached; values stay in
  // the reweighted metric until used.
  std::vector<std::vector<Weight>> rows(static_cast<std::size_t>(n) + 1);

  while (!fifo.empty()) {
    if (deadline.expired()) return SolveOutcome::make_timed_out();
    const NodeId i = fifo.pop();
    const DomainList& d = instance.domain(i);
    if (d.contains(s[i])) continue;  // repaired since it was queued

    // Smallest domain value above the current s_i.
    const std::int32_t c = d.find_interval_above(s[i]);
    if (c < 0)
      return SolveOutcome::make_infeasible(InfeasibleCause::DomainExhausted);
    const Weight lambda = d[c].lo;

    if (rows[i].empty()) dijkstra(g1, i, rows[i]);
    const std::vector<Weight>& row = rows[i];
    for (NodeId j = 1; j <= n; ++j) {
      if (row[j] == kInfinity) continue;
      const Weight delta = row[j] - s0[j] + s0[i];  // original metric
      const Weight cand = lambda - delta;
      if (cand > s[j]) {
        s[j] = cand;
        if (!instance.domain(j).contains(s[j])) fifo.push(j);
      }
    }
  }

  s[kAlpha] = 0;
  return SolveOutcome::make_feasible(std::move(s), ScheduleKind::Earliest);
}

}  // namespace sdtp
