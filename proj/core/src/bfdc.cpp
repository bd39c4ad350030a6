#include <cassert>

#include "sdtp/distance_graph.hpp"
#include "sdtp/solvers.hpp"

namespace sdtp {

namespace {

struct BfdcState {
  std::vector<Weight> tau;
  std::vector<std::int32_t> path_len;
  std::vector<std::int32_t> z;  // current domain index, 0-based
  std::vector<std::uint8_t> in_queue;
  std::vector<NodeId> queue;
  std::size_t head = 0;
  std::size_t queued = 0;

  explicit BfdcState(NodeId vcount)
      : tau(vcount, kInfinity),
        path_len(vcount, 0),
        z(vcount, 0),
        in_queue(vcount, 0),
        queue(vcount) {}

  NodeId pop() {
    const NodeId i = queue[head];
    head = head + 1 == queue.size() ? 0 : head + 1;
    --queued;
    in_queue[i] = 0;
    return i;
  }
  void push(NodeId i) {
    in_queue[i] = 1;
    std::size_t tail = head + queued;
    if (tail >= queue.size()) tail -= queue.size();
    queue[tail] = i;
    ++queued;
  }
};

/// Advance z_i upward until the current -tau_i fits; snap tau_i to the
/// interval's lower bound when that is tighter and restart its path
/// counter. Returns false when every domain is exceeded.
bool domain_check_earliest(const DomainList& d, NodeId i, BfdcState& st) {
  const Weight s = -st.tau[i];
  if (s <= d[st.z[i]].hi) return true;
  for (std::int32_t c = st.z[i] + 1; c < static_cast<std::int32_t>(d.size()); ++c) {
    st.z[i] = c;
    if (s <= d[c].hi) {
      if (-d[c].lo < st.tau[i]) {
        st.tau[i] = -d[c].lo;
        st.path_len[i] = 1;
      }
      return true;
    }
  }
  return false;  // s exceeds U(D_i)
}

/// Latest-schedule mirror: s = tau over the reverse graph, domains
/// scanned in descending order, snapping to upper bounds.
bool domain_check_latest(const DomainList& d, NodeId i, BfdcState& st) {
  const Weight s = st.tau[i];
  if (s >= d[st.z[i]].lo) return true;
  for (std::int32_t c = st.z[i] - 1; c >= 0; --c) {
    st.z[i] = c;
    if (s >= d[c].lo) {
      if (d[c].hi < st.tau[i]) {
        st.tau[i] = d[c].hi;
        st.path_len[i] = 1;
      }
      return true;
    }
  }
  return false;  // s below L(D_i)
}

}  // namespace

SolveOutcome solve_bfdc(const SdtpInstance& instance, ScheduleKind kind,
                        const Deadline& deadline) {
  assert(kind != ScheduleKind::Unspecified);
  const bool earliest = kind == ScheduleKind::Earliest;
  const NodeId n = instance.num_time_points;
  const DistanceGraph g = DistanceGraph::build(
      instance, earliest ? Direction::Direct : Direction::Reverse);

  BfdcState st(g.node_count());
  if (!earliest)
    for (NodeId i = 1; i <= n; ++i)
      st.z[i] = static_cast<std::int32_t>(instance.domain(i).size()) - 1;
  st.tau[kAlpha] = 0;
  st.push(kAlpha);

  while (st.queued > 0) {
    if (deadline.expired()) return SolveOutcome::make_timed_out();
    const NodeId i = st.pop();

    if (i != kAlpha) {  // alpha's domain is fixed [0,0]
      const DomainList& d = instance.domain(i);
      const bool ok = earliest ? domain_check_earliest(d, i, st)
                               : domain_check_latest(d, i, st);
      if (!ok) return SolveOutcome::make_infeasible(InfeasibleCause::DomainExhausted);
    }

    const Weight ti = st.tau[i];
    const std::int32_t li = st.path_len[i];
    for (const Arc& a : g.out(i)) {
      const Weight cand = ti + a.weight;
      if (cand < st.tau[a.target]) {
        st.tau[a.target] = cand;
        st.path_len[a.target] = li + 1;
        if (li + 1 > n || a.target == kAlpha)
          return SolveOutcome::make_infeasible(InfeasibleCause::NegativeCycle);
        if (!st.in_queue[a.target]) st.push(a.target);
      }
    }
  }

  Schedule s(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId i = 1; i <= n; ++i) {
    assert(st.tau[i] != kInfinity);  // alpha arcs reach every node
    s[i] = earliest ? -st.tau[i] : st.tau[i];
  }
  return SolveOutcome::make_feasible(std::move(s), kind);
}

}  // namespace sdtp
