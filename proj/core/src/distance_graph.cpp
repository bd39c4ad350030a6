#include "sdtp/distance_graph.hpp"

#include <cassert>
#include <ostream>

#include "sdtp/d_ary_heap.hpp"

namespace sdtp {

Csr Csr::from_arcs(NodeId node_count,
                   std::span<const std::tuple<NodeId, NodeId, Weight>> arcs) {
  Csr g;
  g.offset.assign(static_cast<std::size_t>(node_count) + 1, 0);
  for (const auto& [from, to, w] : arcs) g.offset[from + 1]++;
  for (std::size_t v = 1; v < g.offset.size(); ++v) g.offset[v] += g.offset[v - 1];
  g.arcs.resize(arcs.size());
  std::vector<std::int64_t> cursor(g.offset.begin(), g.offset.end() - 1);
  for (const auto& [from, to, w] : arcs) g.arcs[cursor[from]++] = {to, w};
  return g;
}

DistanceGraph DistanceGraph::build(const SdtpInstance& instance, Direction dir,
                                   AlphaArcs alpha_arcs) {
  const NodeId n = instance.num_time_points;
  const bool to_alpha = alpha_arcs == AlphaArcs::Both;
  DistanceGraph g;
  g.dir_ = dir;
  g.alpha_arcs_ = alpha_arcs;

  Csr& csr = g.csr_;
  csr.offset.assign(static_cast<std::size_t>(n) + 2, 0);
  // alpha: one arc per time-point; time-point: alpha arc + C1 out-degree.
  csr.offset[kAlpha + 1] = n;
  if (to_alpha)
    for (NodeId i = 1; i <= n; ++i) csr.offset[i + 1] = 1;
  for (const Constraint& t : instance.type1) {
    const NodeId from = dir == Direction::Direct ? t.i : t.j;
    csr.offset[from + 1]++;
  }
  for (std::size_t v = 1; v < csr.offset.size(); ++v)
    csr.offset[v] += csr.offset[v - 1];
  csr.arcs.resize(csr.offset.back());

  std::vector<std::int64_t> cursor(csr.offset.begin(), csr.offset.end() - 1);
  for (NodeId i = 1; i <= n; ++i) {
    const Interval b = instance.domain(i).global_bounds();
    if (dir == Direction::Direct) {
      csr.arcs[cursor[kAlpha]++] = {i, -b.lo};
      if (to_alpha) csr.arcs[cursor[i]++] = {kAlpha, b.hi};
    } else {
      csr.arcs[cursor[kAlpha]++] = {i, b.hi};
      if (to_alpha) csr.arcs[cursor[i]++] = {kAlpha, -b.lo};
    }
  }
  for (const Constraint& t : instance.type1) {
    if (dir == Direction::Direct)
      csr.arcs[cursor[t.i]++] = {t.j, t.w};
    else
      csr.arcs[cursor[t.j]++] = {t.i, t.w};
  }
  return g;
}

void DistanceGraph::update_alpha_arcs(std::span<const Interval> bounds) {
  const NodeId n = node_count() - 1;
  const bool both = alpha_arcs_ == AlphaArcs::Both;
  for (NodeId i = 1; i <= n; ++i) {
    Arc& from_alpha = csr_.arcs[csr_.offset[kAlpha] + i - 1];
    assert(from_alpha.target == i);
    if (dir_ == Direction::Direct)
      from_alpha.weight = -bounds[i].lo;
    else
      from_alpha.weight = bounds[i].hi;
    if (both) {
      Arc& to_alpha = csr_.arcs[csr_.offset[i]];
      assert(to_alpha.target == kAlpha);
      to_alpha.weight = dir_ == Direction::Direct ? bounds[i].hi : -bounds[i].lo;
    }
  }
}

void DistanceGraph::dump(std::ostream& out) const {
  out << "digraph " << (dir_ == Direction::Direct ? "G_D" : "G_R") << " {\n";
  for (NodeId v = 0; v < node_count(); ++v)
    for (const Arc& a : csr_.out(v))
      out << "  " << v << " -> " << a.target << " [label=" << a.weight << "]\n";
  out << "}\n";
}

void SsspWorkspace::resize(NodeId node_count) {
  const std::size_t n = static_cast<std::size_t>(node_count);
  dist.resize(n);
  path_len.resize(n);
  in_queue.resize(n);
  queue.resize(n);
}

namespace {

/// FIFO relaxation loop over pre-seeded queue contents.
SsspStatus bellman_ford_run(const Csr& g, SsspWorkspace& ws,
                            std::size_t queued, const Deadline& deadline) {
  const NodeId vcount = g.node_count();
  std::size_t head = 0;
  while (queued > 0) {
    if (deadline.expired()) return SsspStatus::TimedOut;
    const NodeId i = ws.queue[head];
    head = head + 1 == static_cast<std::size_t>(vcount) ? 0 : head + 1;
    --queued;
    ws.in_queue[i] = 0;
    const Weight di = ws.dist[i];
    const std::int32_t li = ws.path_len[i];
    for (const Arc& a : g.out(i)) {
      const Weight cand = di + a.weight;
      if (cand < ws.dist[a.target]) {
        ws.dist[a.target] = cand;
        ws.path_len[a.target] = li + 1;
        if (li + 1 >= vcount) return SsspStatus::NegativeCycle;
        if (!ws.in_queue[a.target]) {
          ws.in_queue[a.target] = 1;
          std::size_t tail = head + queued;
          if (tail >= static_cast<std::size_t>(vcount))
            tail -= static_cast<std::size_t>(vcount);
          ws.queue[tail] = a.target;
          ++queued;
        }
      }
    }
  }
  return SsspStatus::Ok;
}

}  // namespace

SsspStatus bellman_ford(const Csr& g, NodeId source, SsspWorkspace& ws,
                        const Deadline& deadline) {
  ws.resize(g.node_count());
  std::fill(ws.dist.begin(), ws.dist.end(), kInfinity);
  std::fill(ws.path_len.begin(), ws.path_len.end(), 0);
  std::fill(ws.in_queue.begin(), ws.in_queue.end(), 0);
  ws.dist[source] = 0;
  ws.in_queue[source] = 1;
  ws.queue[0] = source;
  return bellman_ford_run(g, ws, 1, deadline);
}

void dijkstra(const Csr& g, NodeId source, std::vector<Weight>& dist) {
  const NodeId vcount = g.node_count();
  dist.assign(static_cast<std::size_t>(vcount), kInfinity);
  dist[source] = 0;

  DAryHeap<Weight, NodeId> heap;
  heap.reserve(static_cast<std::size_t>(vcount));
  heap.push(0, source);
  while (!heap.empty()) {
    const auto [d, v] = heap.pop_min();
    if (d != dist[v]) continue;  // stale duplicate
    for (const Arc& a : g.out(v)) {
      assert(a.weight >= 0 && "dijkstra requires nonnegative weights");
      const Weight cand = d + a.weight;
      if (cand < dist[a.target]) {
        dist[a.target] = cand;
        heap.push(cand, a.target);
      }
    }
  }
}

DistanceMatrix DistanceMatrix::infinite(NodeId node_count) {
  DistanceMatrix m;
  m.n = node_count;
  m.delta.assign(static_cast<std::size_t>(node_count) * node_count, kInfinity);
  for (NodeId i = 0; i < node_count; ++i) m.at(i, i) = 0;
  return m;
}

SsspStatus floyd_warshall(DistanceMatrix& m, const Deadline& deadline) {
  const NodeId n = m.n;
  for (NodeId k = 0; k < n; ++k) {
    if (deadline.expired()) return SsspStatus::TimedOut;
    const Weight* row_k = m.row(k).data();
    for (NodeId i = 0; i < n; ++i) {
      const Weight dik = m.at(i, k);
      if (dik == kInfinity) continue;
      Weight* row_i = m.row(i).data();
      for (NodeId j = 0; j < n; ++j) {
        if (row_k[j] == kInfinity) continue;
        const Weight cand = dik + row_k[j];
        if (cand < row_i[j]) row_i[j] = cand;
      }
      if (row_i[i] < 0) return SsspStatus::NegativeCycle;
    }
  }
  return SsspStatus::Ok;
}

SsspStatus johnson_apsp(const Csr& g, DistanceMatrix& out,
                        const Deadline& deadline) {
  const NodeId vcount = g.node_count();

  // Potential phase: Bellman-Ford from a virtual super-source with a
  // zero-weight arc to every node, i.e. all nodes seeded at distance 0.
  SsspWorkspace ws;
  ws.resize(vcount);
  std::fill(ws.dist.begin(), ws.dist.end(), 0);
  std::fill(ws.path_len.begin(), ws.path_len.end(), 0);
  std::fill(ws.in_queue.begin(), ws.in_queue.end(), 1);
  for (NodeId v = 0; v < vcount; ++v) ws.queue[v] = v;
  const SsspStatus pot = bellman_ford_run(g, ws, static_cast<std::size_t>(vcount),
                                          deadline);
  if (pot != SsspStatus::Ok) return pot;
  const std::vector<Weight> h = ws.dist;

  Csr reweighted = g;
  for (NodeId v = 0; v < vcount; ++v)
    for (std::int64_t a = g.offset[v]; a < g.offset[v + 1]; ++a)
      reweighted.arcs[a].weight += h[v] - h[g.arcs[a].target];

  out.n = vcount;
  out.delta.resize(static_cast<std::size_t>(vcount) * vcount);
  std::vector<Weight> dist;
  for (NodeId src = 0; src < vcount; ++src) {
    if (deadline.expired()) return SsspStatus::TimedOut;
    dijkstra(reweighted, src, dist);
    Weight* row = out.row(src).data();
    for (NodeId v = 0; v < vcount; ++v)
      row[v] = dist[v] == kInfinity ? kInfinity : dist[v] - h[src] + h[v];
  }
  return SsspStatus::Ok;
}

bool has_c1_negative_cycle(const SdtpInstance& instance,
                           const Deadline& deadline) {
  const NodeId n = instance.num_time_points;
  std::vector<std::tuple<NodeId, NodeId, Weight>> arcs;
  arcs.reserve(instance.type1.size() + static_cast<std::size_t>(n));
  for (NodeId i = 1; i <= n; ++i) arcs.emplace_back(kAlpha, i, 0);
  for (const Constraint& t : instance.type1) arcs.emplace_back(t.i, t.j, t.w);
  const Csr g = Csr::from_arcs(n + 1, arcs);
  SsspWorkspace ws;
  return bellman_ford(g, kAlpha, ws, deadline) == SsspStatus::NegativeCycle;
}

}  // namespace sdtp
