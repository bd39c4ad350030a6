#include <cassert>
#include <cstdint>

#include "sdtp/distance_graph.hpp"
#include "sdtp/solvers.hpp"

namespace sdtp {

namespace {

// Plain Dinic on a unit-ish network. Arc pairs are stored adjacently so
// arc ^ 1 is the reverse arc.
class MaxFlowNet {
 public:
  explicit MaxFlowNet(std::int32_t node_count)
      : first_(node_count, -1), level_(node_count), iter_(node_count) {}

  void add_arc(std::int32_t from, std::int32_t to, std::int64_t capacity) {
    to_.push_back(to);
    cap_.push_back(capacity);
    next_.push_back(first_[from]);
    first_[from] = static_cast<std::int32_t>(to_.size()) - 1;
    to_.push_back(from);
    cap_.push_back(0);
    next_.push_back(first_[to]);
    first_[to] = static_cast<std::int32_t>(to_.size()) - 1;
  }

  std::int64_t max_flow(std::int32_t source, std::int32_t sink) {
    std::int64_t total = 0;
    while (build_levels(source, sink)) {
      iter_ = first_;
      while (std::int64_t pushed = augment(source, sink, INT64_MAX))
        total += pushed;
    }
    return total;
  }

  // Nodes reachable from source in the residual network; valid after
  // max_flow, when the last level build failed to reach the sink.
  std::vector<std::uint8_t> residual_reachable(std::int32_t source) const {
    std::vector<std::uint8_t> seen(first_.size(), 0);
    std::vector<std::int32_t> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
      const std::int32_t v = stack.back();
      stack.pop_back();
      for (std::int32_t a = first_[v]; a >= 0; a = next_[a])
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          stack.push_back(to_[a]);
        }
    }
    return seen;
  }

 private:
  bool build_levels(std::int32_t source, std::int32_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<std::int32_t> queue{source};
    level_[source] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const std::int32_t v = queue[h];
      for (std::int32_t a = first_[v]; a >= 0; a = next_[a])
        if (cap_[a] > 0 && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[v] + 1;
          queue.push_back(to_[a]);
        }
    }
    return level_[sink] >= 0;
  }

  std::int64_t augment(std::int32_t v, std::int32_t sink, std::int64_t limit) {
    if (v == sink) return limit;
    for (std::int32_t& a = iter_[v]; a >= 0; a = next_[a]) {
      const std::int32_t u = to_[a];
      if (cap_[a] <= 0 || level_[u] != level_[v] + 1) continue;
      const std::int64_t pushed =
          augment(u, sink, std::min(limit, cap_[a]));
      if (pushed > 0) {
        cap_[a] -= pushed;
        cap_[a ^ 1] += pushed;
        return pushed;
      }
    }
    level_[v] = -1;
    return 0;
  }

  std::vector<std::int32_t> first_;
  std::vector<std::int32_t> to_;
  std::vector<std::int64_t> cap_;
  std::vector<std::int32_t> next_;
  std::vector<std::int32_t> level_;
  std::vector<std::int32_t> iter_;
};

struct Event {
  NodeId tp;
  std::int32_t interval;
};

// All-pairs shortest paths by one Bellman-Ford per source. Running the
// alpha row first catches any negative cycle, since alpha reaches every
// node through its domain arcs.
SsspStatus apsp_repeated_bf(const Csr& g, DistanceMatrix& out,
                            const Deadline& deadline) {
  SsspWorkspace ws;
  const NodeId n = g.node_count();
  for (NodeId src = 0; src < n; ++src) {
    const SsspStatus st = bellman_ford(g, src, ws, deadline);
    if (st != SsspStatus::Ok) return st;
    std::copy(ws.dist.begin(), ws.dist.end(), out.row(src).begin());
  }
  return SsspStatus::Ok;
}

}  // namespace

SolveOutcome solve_ka(const SdtpInstance& instance, KaVariant variant,
                      const Deadline& deadline, std::size_t conflict_cap) {
  const NodeId n = instance.num_time_points;
  DistanceGraph gr = DistanceGraph::build(instance, Direction::Reverse);

  DistanceMatrix delta = DistanceMatrix::infinite(n + 1);
  const SsspStatus st =
      variant == KaVariant::KAB
          ? apsp_repeated_bf(gr.csr(), delta, deadline)
          : johnson_apsp(gr.csr(), delta, deadline);
  if (st == SsspStatus::TimedOut) return SolveOutcome::make_timed_out();
  if (st == SsspStatus::NegativeCycle)
    // Bound-induced cycles mean every interval of some time point is in
    // conflict already; only difference-constraint cycles are structural.
    return SolveOutcome::make_infeasible(
        has_c1_negative_cycle(instance, deadline)
            ? InfeasibleCause::NegativeCycle
            : InfeasibleCause::EmptyBound);

  // Drop intervals that already conflict with the global bounds on their
  // own; a time point losing all intervals is a direct infeasibility.
  std::vector<Event> events;
  std::vector<std::int32_t> tp_event_count(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId i = 1; i <= n; ++i) {
    const DomainList& d = instance.domain(i);
    const Weight d_ia = delta.at(i, kAlpha);
    const Weight d_ai = delta.at(kAlpha, i);
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(d.size()); ++c) {
      const bool dead =
          (d_ia != kInfinity && d_ia + d[c].hi < 0) ||
          (d_ai != kInfinity && d_ai - d[c].lo < 0);
      if (!dead) {
        events.push_back(Event{i, c});
        ++tp_event_count[i];
      }
    }
    if (tp_event_count[i] == 0)
      return SolveOutcome::make_infeasible(InfeasibleCause::EmptyBound);
  }

  // Pairwise conflicts: choosing interval c for i and k for j together
  // violates some path constraint. Same-point interval pairs always
  // conflict in one order, which keeps selections to one per point.
  const std::int32_t ecount = static_cast<std::int32_t>(events.size());
  std::vector<std::pair<std::int32_t, std::int32_t>> conflicts;
  for (std::int32_t a = 0; a < ecount; ++a) {
    if (deadline.expired()) return SolveOutcome::make_timed_out();
    const Event& e = events[a];
    const Weight ue = instance.domain(e.tp)[e.interval].hi;
    const auto row = delta.row(e.tp);
    for (std::int32_t b = 0; b < ecount; ++b) {
      if (b == a) continue;
      const Event& f = events[b];
      const Weight d_ij = row[f.tp];
      if (d_ij == kInfinity) continue;
      if (ue + d_ij - instance.domain(f.tp)[f.interval].lo < 0) {
        conflicts.emplace_back(a, b);
        if (conflicts.size() > conflict_cap)
          return SolveOutcome::make_timed_out();
      }
    }
  }

  // Min vertex cover of the conflict graph via max flow over the usual
  // doubled construction; the complement picks the surviving intervals.
  const std::int32_t source = 2 * ecount;
  const std::int32_t sink = 2 * ecount + 1;
  MaxFlowNet net(2 * ecount + 2);
  for (std::int32_t a = 0; a < ecount; ++a) {
    net.add_arc(source, a, 1);
    net.add_arc(ecount + a, sink, 1);
  }
  for (const auto& [a, b] : conflicts) net.add_arc(a, ecount + b, 1);
  net.max_flow(source, sink);

  const std::vector<std::uint8_t> reach = net.residual_reachable(source);
  std::vector<std::int32_t> chosen(static_cast<std::size_t>(n) + 1, -1);
  std::int32_t picked = 0;
  for (std::int32_t a = 0; a < ecount; ++a) {
    if (reach[a] && !reach[ecount + a]) {
      const Event& e = events[a];
      if (chosen[e.tp] >= 0)
        return SolveOutcome::make_infeasible(InfeasibleCause::CoverTooSmall);
      chosen[e.tp] = e.interval;
      ++picked;
    }
  }
  if (picked != n)
    return SolveOutcome::make_infeasible(InfeasibleCause::CoverTooSmall);

  // Pin each point to its selected interval and extract a schedule.
  std::vector<Interval> alpha(static_cast<std::size_t>(n) + 1, Interval{0, 0});
  for (NodeId i = 1; i <= n; ++i) alpha[i] = instance.domain(i)[chosen[i]];
  gr.update_alpha_arcs(alpha);

  SsspWorkspace ws;
  const SsspStatus fin = bellman_ford(gr.csr(), kAlpha, ws, deadline);
  if (fin == SsspStatus::TimedOut) return SolveOutcome::make_timed_out();
  if (fin == SsspStatus::NegativeCycle)
    return SolveOutcome::make_infeasible(InfeasibleCause::NegativeCycle);

  Schedule s(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId i = 1; i <= n; ++i) s[i] = ws.dist[i];
  return SolveOutcome::make_feasible(std::move(s), ScheduleKind::Unspecified);
}

}  // namespace sdtp
