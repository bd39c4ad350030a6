#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <tuple>
#include <vector>

#include "sdtp/model.hpp"

namespace sdtp {

struct Arc {
  NodeId target = 0;
  Weight weight = 0;
};

/// Compressed adjacency lists. Shared by the distance graphs and by
/// solver-private graphs (e.g. CRA's reweighted C1-only graph).
struct Csr {
  std::vector<std::int64_t> offset;  // size node_count + 1
  std::vector<Arc> arcs;

  NodeId node_count() const { return static_cast<NodeId>(offset.size()) - 1; }
  std::span<const Arc> out(NodeId v) const {
    return {arcs.data() + offset[v], arcs.data() + offset[v + 1]};
  }

  /// Builds from an (unsorted) arc list.
  static Csr from_arcs(NodeId node_count,
                       std::span<const std::tuple<NodeId, NodeId, Weight>> arcs);
};

enum class Direction { Direct, Reverse };

/// Whether the graph carries both alpha-incident arc families or only
/// the arcs leaving alpha. SourceOnly graphs propagate one bound side
/// (lower in Direct, upper in Reverse); alpha is then a pure source, so
/// any negative cycle lies entirely within the difference constraints.
enum class AlphaArcs { Both, SourceOnly };

/// Distance graph of an instance. Node 0 is alpha. The direct graph maps
/// constraint (i,j,w), i.e. s_i - s_j <= w, to arc i->j with weight w and
/// anchors each time-point with (alpha,i,-L(D_i)) and (i,alpha,U(D_i));
/// under s = -tau this makes relaxation enforce exactly the constraint
/// set, so tau from alpha yields the earliest schedule. The reverse graph
/// flips every arc (weights unchanged) and yields the latest via s = tau.
///
/// Arc layout is fixed so that update_alpha_arcs touches known slots:
/// alpha's out-arc k targets time-point k+1, and each time-point's first
/// out-arc targets alpha.
class DistanceGraph {
 public:
  static DistanceGraph build(const SdtpInstance& instance, Direction dir,
                             AlphaArcs alpha_arcs = AlphaArcs::Both);

  NodeId node_count() const { return csr_.node_count(); }
  Direction direction() const { return dir_; }
  const Csr& csr() const { return csr_; }
  std::span<const Arc> out(NodeId v) const { return csr_.out(v); }

  /// Rewrites only the alpha-incident weights from per-time-point [L,U]
  /// bounds (indexed 1..|T|; slot 0 ignored). All other arcs untouched.
  void update_alpha_arcs(std::span<const Interval> bounds);

  /// DOT-like debug dump.
  void dump(std::ostream& out) const;

 private:
  Csr csr_;
  Direction dir_ = Direction::Direct;
  AlphaArcs alpha_arcs_ = AlphaArcs::Both;
};

/// True when the difference constraints alone contain a negative cycle,
/// ignoring every domain bound. Distinguishes structural inconsistency
/// from bound-induced one.
bool has_c1_negative_cycle(const SdtpInstance& instance,
                           const Deadline& deadline = {});

/// Scratch buffers reused across shortest-path calls; sized on first use,
/// never reallocated during a solve.
struct SsspWorkspace {
  std::vector<Weight> dist;
  std::vector<std::int32_t> path_len;
  std::vector<std::uint8_t> in_queue;
  std::vector<NodeId> queue;  // ring buffer of capacity node_count

  void resize(NodeId node_count);
};

enum class SsspStatus { Ok, NegativeCycle, TimedOut };

/// Label-correcting Bellman-Ford with a FIFO queue. On Ok, ws.dist holds
/// single-source shortest paths (kInfinity where unreachable) and
/// ws.path_len the arc counts of the shortest paths found. A path length
/// reaching node_count certifies a negative cycle.
SsspStatus bellman_ford(const Csr& g, NodeId source, SsspWorkspace& ws,
                        const Deadline& deadline = {});

/// Dijkstra over nonnegative weights (asserted), 4-ary heap.
/// dist is resized to node_count; unreachable nodes hold kInfinity.
void dijkstra(const Csr& g, NodeId source, std::vector<Weight>& dist);

struct DistanceMatrix {
  NodeId n = 0;  // node count
  std::vector<Weight> delta;

  static DistanceMatrix infinite(NodeId node_count);  // inf off-diag, 0 diag

  Weight& at(NodeId i, NodeId j) {
    return delta[static_cast<std::size_t>(i) * n + j];
  }
  Weight at(NodeId i, NodeId j) const {
    return delta[static_cast<std::size_t>(i) * n + j];
  }
  std::span<Weight> row(NodeId i) {
    return {delta.data() + static_cast<std::size_t>(i) * n,
            static_cast<std::size_t>(n)};
  }
};

/// In-place all-pairs closure. Aborts with NegativeCycle as soon as a
/// diagonal entry turns negative.
SsspStatus floyd_warshall(DistanceMatrix& m, const Deadline& deadline = {});

/// APSP via Bellman-Ford potentials plus one Dijkstra per source.
/// Potentials come from a virtual super-source (all nodes at 0), so any
/// negative cycle is detected regardless of reachability.
SsspStatus johnson_apsp(const Csr& g, DistanceMatrix& out,
                        const Deadline& deadline = {});

}  // namespace sdtp
