#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "sdtp/distance_graph.hpp"
#include "sdtp/generators.hpp"
#include "sdtp/solvers.hpp"

namespace sdtp {

Family family_from_string(const std::string& name) {
  if (name == "rand") return Family::Rand;
  if (name == "grid") return Family::Grid;
  if (name == "seq") return Family::Seq;
  if (name == "late") return Family::Late;
  throw GenError("unknown family: " + name);
}

const char* to_string(Family family) {
  switch (family) {
    case Family::Rand: return "rand";
    case Family::Grid: return "grid";
    case Family::Seq: return "seq";
    case Family::Late: return "late";
  }
  return "?";
}

NegCycleClass negcycle_from_string(const std::string& name) {
  if (name == "nc02") return NegCycleClass::Nc02;
  if (name == "nc03") return NegCycleClass::Nc03;
  if (name == "nc04") return NegCycleClass::Nc04;
  if (name == "nc05") return NegCycleClass::Nc05;
  throw GenError("unknown negcycle class: " + name);
}

const char* to_string(NegCycleClass cls) {
  switch (cls) {
    case NegCycleClass::Nc02: return "nc02";
    case NegCycleClass::Nc03: return "nc03";
    case NegCycleClass::Nc04: return "nc04";
    case NegCycleClass::Nc05: return "nc05";
  }
  return "?";
}

VlRow vl_row_from_string(const std::string& name) {
  if (name == "vl3" || name == "vl-3") return VlRow::Vl3;
  if (name == "vl4" || name == "vl-4") return VlRow::Vl4;
  if (name == "vl5" || name == "vl-5") return VlRow::Vl5;
  throw GenError("unknown vl row: " + name);
}

namespace {

std::vector<NodeId> random_permutation(NodeId n, Rng& rng) {
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  for (NodeId i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.uniform(0, i)]);
  return perm;
}

/// Dijkstra over the base arcs from `start`; weights are positive by
/// construction for every family.
void base_distances(BaseGraph& g, NodeId start) {
  std::vector<std::tuple<NodeId, NodeId, Weight>> arcs;
  arcs.reserve(g.arcs.size());
  for (const Constraint& a : g.arcs) arcs.emplace_back(a.i, a.j, a.w);
  const Csr csr = Csr::from_arcs(g.n + 1, arcs);
  std::vector<Weight> dist;
  dijkstra(csr, start, dist);
  g.tau.assign(static_cast<std::size_t>(g.n) + 1, 0);
  for (NodeId v = 1; v <= g.n; ++v) {
    if (dist[v] == kInfinity) throw GenError("base graph is not connected");
    g.tau[v] = dist[v];
  }
}

BaseGraph base_rand(NodeId n, std::size_t m1, Rng& rng) {
  if (m1 < static_cast<std::size_t>(n))
    throw GenError("rand base needs m1 >= n for its connectivity cycle");
  BaseGraph g;
  g.n = n;
  g.arcs.reserve(m1);
  const std::vector<NodeId> perm = random_permutation(n, rng);
  for (NodeId i = 0; i < n; ++i)
    g.arcs.push_back({perm[i], perm[(i + 1) % n],
                      rng.uniform(1, 10000)});
  while (g.arcs.size() < m1) {
    const NodeId i = static_cast<NodeId>(rng.uniform(1, n));
    const NodeId j = static_cast<NodeId>(rng.uniform(1, n));
    if (i == j) continue;
    g.arcs.push_back({i, j, rng.uniform(1, 10000)});
  }
  g.source = perm[0];
  base_distances(g, g.source);
  return g;
}

BaseGraph base_seq(NodeId n, std::size_t m1, Rng& rng) {
  if (m1 + 1 < static_cast<std::size_t>(n))
    throw GenError("seq base needs m1 >= n - 1 for its path");
  BaseGraph g;
  g.n = n;
  g.arcs.reserve(m1);
  const std::vector<NodeId> perm = random_permutation(n, rng);
  for (NodeId i = 0; i + 1 < n; ++i)
    g.arcs.push_back({perm[i], perm[i + 1], 1});
  while (g.arcs.size() < m1) {
    const NodeId i = static_cast<NodeId>(rng.uniform(1, n));
    const NodeId j = static_cast<NodeId>(rng.uniform(1, n));
    if (i == j) continue;
    g.arcs.push_back({i, j, rng.uniform(500, 20000)});
  }
  g.source = perm[0];
  base_distances(g, g.source);
  return g;
}

BaseGraph base_grid(NodeId n, std::size_t m1, Rng& rng) {
  constexpr NodeId kLanes = 16;
  if (n % kLanes != 0 || n < 2 * kLanes)
    throw GenError("grid base needs n to be a multiple of 16 (at least 32)");
  const NodeId layers = n / kLanes;
  const std::size_t structural =
      static_cast<std::size_t>(n) + static_cast<std::size_t>(n - kLanes);
  if (m1 < structural)
    throw GenError("grid base needs m1 >= 2n - 16 for its lattice");
  BaseGraph g;
  g.n = n;
  g.arcs.reserve(m1);
  auto node = [](NodeId layer, NodeId lane) { return layer * kLanes + lane + 1; };
  // ring inside each layer, then one forward arc per node
  for (NodeId x = 0; x < layers; ++x)
    for (NodeId y = 0; y < kLanes; ++y)
      g.arcs.push_back(
          {node(x, y), node(x, (y + 1) % kLanes), rng.uniform(1, 10000)});
  for (NodeId x = 0; x + 1 < layers; ++x)
    for (NodeId y = 0; y < kLanes; ++y)
      g.arcs.push_back({node(x, y), node(x + 1, rng.uniform(0, kLanes - 1)),
                        rng.uniform(1, 10000)});
  while (g.arcs.size() < m1) {
    const NodeId xa = static_cast<NodeId>(rng.uniform(0, layers - 1));
    NodeId xb = static_cast<NodeId>(rng.uniform(0, layers - 1));
    if (xa == xb) continue;
    g.arcs.push_back({node(xa, static_cast<NodeId>(rng.uniform(0, kLanes - 1))),
                      node(xb, static_cast<NodeId>(rng.uniform(0, kLanes - 1))),
                      rng.uniform(1, 10000)});
  }
  g.source = node(0, 0);
  base_distances(g, g.source);
  return g;
}

std::vector<NodeId> pick_td_members(NodeId n, double td_fraction, Rng& rng,
                                    NodeId exclude = 0) {
  const auto want = static_cast<std::size_t>(td_fraction * n);
  std::vector<NodeId> perm = random_permutation(n, rng);
  if (exclude != 0)
    std::erase(perm, exclude);
  if (want > perm.size())
    throw GenError("td leaves no room for the anchor time-point");
  perm.resize(want);
  return perm;
}

/// Ascending K-interval list built around the anchor interval at
/// position kappa (1-based), all of the anchor's width.
std::vector<Interval> domain_ladder(Weight anchor_lo, Weight anchor_hi,
                                    int k, int kappa, Rng& rng) {
  std::vector<Interval> d(static_cast<std::size_t>(k));
  const Weight width = anchor_hi - anchor_lo;
  d[kappa - 1] = {anchor_lo, anchor_hi};
  for (int c = kappa - 2; c >= 0; --c) {
    const Weight hi = d[c + 1].lo - rng.uniform(0, 200) - 1;
    d[c] = {hi - width, hi};
  }
  for (int c = kappa; c < k; ++c) {
    const Weight lo = d[c - 1].hi + rng.uniform(0, 200) + 1;
    d[c] = {lo, lo + width};
  }
  return d;
}

SdtpInstance attach_domains_rand(const BaseGraph& g, const GenConfig& cfg,
                                 Rng& rng) {
  std::vector<std::pair<NodeId, std::vector<Interval>>> domains;
  domains.reserve(g.n);
  std::vector<std::uint8_t> multi(static_cast<std::size_t>(g.n) + 1, 0);
  for (NodeId j : pick_td_members(g.n, cfg.td_fraction, rng)) multi[j] = 1;

  for (NodeId i = 1; i <= g.n; ++i) {
    const Weight s0 = -g.tau[i];
    const Weight phi1 = rng.uniform(0, 2000);
    const Weight phi2 = rng.uniform(0, 2000);
    if (multi[i]) {
      const int kappa = static_cast<int>(rng.uniform(1, cfg.k));
      domains.push_back(
          {i, domain_ladder(s0 - phi1, s0 + phi2, cfg.k, kappa, rng)});
    } else {
      domains.push_back({i, {{s0 - phi1, s0 + phi2}}});
    }
  }
  return SdtpInstance::make(g.n, std::vector<Constraint>(g.arcs), domains);
}

/// The dummy source z is mapped onto the base graph's source node: its
/// domain is pinned to [0,0] and its outgoing source arcs (z,i,w_zi)
/// become regular difference constraints. Every pick appends a new top
/// interval [-tau_j+5, -tau_j+6], tightens w_zj to -l, and propagates
/// the distance decrease, so later picks land ever higher.
SdtpInstance attach_domains_late(const BaseGraph& base, const GenConfig& cfg,
                                 Rng& rng) {
  const NodeId n = base.n;
  const NodeId z = base.source;
  // With the zero-weight source arcs in place every initial distance
  // collapses to zero, so all anchors start at the origin.
  std::vector<Weight> tau(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Weight> wz(static_cast<std::size_t>(n) + 1, 0);

  // adjacency for propagating distance decreases
  std::vector<std::tuple<NodeId, NodeId, Weight>> arcs;
  arcs.reserve(base.arcs.size());
  for (const Constraint& a : base.arcs) arcs.emplace_back(a.i, a.j, a.w);
  const Csr csr = Csr::from_arcs(n + 1, arcs);

  std::vector<std::vector<Interval>> d(static_cast<std::size_t>(n) + 1);
  for (NodeId i = 1; i <= n; ++i) {
    if (i == z) {
      d[i] = {{0, 0}};
      continue;
    }
    d[i] = {{-rng.uniform(0, 2000), rng.uniform(0, 2000)}};
  }

  std::vector<NodeId> unfinished =
      cfg.k < 2 ? std::vector<NodeId>{}
                : pick_td_members(n, cfg.td_fraction, rng, z);
  std::vector<NodeId> queue;
  while (!unfinished.empty()) {
    const std::size_t pick = rng.uniform(0, unfinished.size() - 1);
    const NodeId j = unfinished[pick];

    const Weight lo = -tau[j] + 5;
    d[j].push_back({lo, lo + 1});
    // push earlier intervals below the newcomer, widths preserved
    for (std::size_t c = d[j].size() - 1; c > 0; --c) {
      Interval& prev = d[j][c - 1];
      if (prev.hi < d[j][c].lo) break;
      const Weight width = prev.hi - prev.lo;
      prev.hi = d[j][c].lo - 1;
      prev.lo = prev.hi - width;
    }
    if (d[j].size() == static_cast<std::size_t>(cfg.k)) {
      unfinished[pick] = unfinished.back();
      unfinished.pop_back();
    }

    // the dummy-source arc to j now carries weight -lo; propagate the
    // resulting distance decreases (never into the source itself, whose
    // value stays pinned at zero)
    wz[j] = -lo;
    tau[j] = -lo;
    queue.assign(1, j);
    while (!queue.empty()) {
      const NodeId v = queue.back();
      queue.pop_back();
      for (const Arc& a : csr.out(v)) {
        if (a.target == z) continue;
        if (tau[v] + a.weight < tau[a.target]) {
          tau[a.target] = tau[v] + a.weight;
          queue.push_back(a.target);
        }
      }
    }
  }

  // Decreases that arrived after a time-point's final pick can push its
  // earliest value past the top interval; widen that interval so the
  // final distances stay a feasible certificate.
  for (NodeId i = 1; i <= n; ++i) {
    if (i == z) continue;
    if (-tau[i] > d[i].back().hi) d[i].back().hi = -tau[i];
  }

  std::vector<Constraint> constraints(base.arcs);
  // Arcs into the pinned source would cap other time-points from above;
  // relax any that the final distances outgrew.
  for (Constraint& c : constraints)
    if (c.j == z && -tau[c.i] > c.w) c.w = -tau[c.i];
  for (NodeId i = 1; i <= n; ++i)
    if (i != z) constraints.push_back({z, i, wz[i]});

  std::vector<std::pair<NodeId, std::vector<Interval>>> domains;
  domains.reserve(n);
  for (NodeId i = 1; i <= n; ++i) domains.push_back({i, std::move(d[i])});
  return SdtpInstance::make(n, std::move(constraints), domains);
}

/// The family's acceptance rule over the earliest schedule, measured on
/// the multi-domain time points: Rand/Grid/Seq need the landing interval
/// to not be the first one, Late needs it to be the last one.
bool acceptance_holds(const SdtpInstance& inst, const SolveOutcome& earliest,
                      bool last_rule, double threshold) {
  std::size_t members = 0;
  std::size_t good = 0;
  for (NodeId i = 1; i <= inst.num_time_points; ++i) {
    const DomainList& dom = inst.domain(i);
    if (dom.size() < 2) continue;
    ++members;
    const int c = dom.find_interval(earliest.schedule[i]);
    assert(c >= 0);
    if (last_rule ? c == static_cast<int>(dom.size()) - 1 : c > 0) ++good;
  }
  if (members == 0) return true;  // STP: rule is vacuous
  return static_cast<double>(good) >= threshold * static_cast<double>(members);
}

}  // namespace

BaseGraph gen_base_graph(Family family, NodeId n, std::size_t m1, Rng& rng) {
  switch (family) {
    case Family::Rand: return base_rand(n, m1, rng);
    case Family::Seq: return base_seq(n, m1, rng);
    case Family::Grid: return base_grid(n, m1, rng);
    case Family::Late: break;
  }
  throw GenError("late is a domain-attachment family, not a base graph");
}

SdtpInstance generate_instance(const GenConfig& config) {
  if (config.n < 1) throw GenError("n must be positive");
  if (config.k < 1) throw GenError("k must be positive");
  if (config.td_fraction < 0 || config.td_fraction > 1)
    throw GenError("td must lie in [0,1]");

  const bool late = config.family == Family::Late;
  const Family base_family = late ? config.base : config.family;
  // The late family spends n-1 of its constraint budget on the arcs
  // emitted by the pinned source time-point.
  std::size_t base_m1 = config.m1;
  if (late) {
    const auto source_arcs = static_cast<std::size_t>(config.n) - 1;
    if (config.m1 <= source_arcs)
      throw GenError("late needs m1 > n - 1 to fit the source arcs");
    base_m1 = config.m1 - source_arcs;
  }
  Rng base_rng = Rng(config.seed).sub(0);
  const BaseGraph base = gen_base_graph(base_family, config.n, base_m1,
                                        base_rng);

  for (int attempt = 0; attempt <= config.retries; ++attempt) {
    Rng rng = Rng(config.seed).sub(1 + static_cast<std::uint64_t>(attempt));
    SdtpInstance inst = late ? attach_domains_late(base, config, rng)
                             : attach_domains_rand(base, config, rng);
    const SolveOutcome earliest = solve_bfdc(inst);
    if (earliest.status == SolveOutcome::Status::Feasible &&
        acceptance_holds(inst, earliest, late, config.acceptance))
      return inst;
  }
  throw GenError("generation retries exhausted without meeting the "
                 "acceptance rule");
}

SdtpInstance negcycle_filter(const SdtpInstance& feasible, NegCycleClass cls,
                             std::uint64_t seed) {
  const NodeId n = feasible.num_time_points;
  std::size_t cycles = 1;
  std::size_t length = 3;
  switch (cls) {
    case NegCycleClass::Nc02: break;
    case NegCycleClass::Nc03:
      cycles = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
      break;
    case NegCycleClass::Nc04:
      cycles = static_cast<std::size_t>(std::cbrt(static_cast<double>(n)));
      length = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
      break;
    case NegCycleClass::Nc05:
      length = static_cast<std::size_t>(n);
      break;
  }
  if (static_cast<std::size_t>(n) < length || length < 2 || cycles < 1)
    throw GenError("instance too small for the requested cycle class");

  Rng rng(seed);
  SdtpInstance out = feasible;
  for (std::size_t c = 0; c < cycles; ++c) {
    std::vector<NodeId> nodes = random_permutation(n, rng);
    nodes.resize(length);
    Weight total = 0;
    for (std::size_t a = 0; a + 1 < length; ++a) {
      const Weight w = rng.uniform(-100, 100);
      out.type1.push_back({nodes[a], nodes[a + 1], w});
      total += w;
    }
    // close the cycle with whatever makes the total strictly negative
    out.type1.push_back(
        {nodes[length - 1], nodes[0], -total - 1 - rng.uniform(0, 50)});
  }
  return out;
}

VlParams vl_params(VlRow row) {
  VlParams p;
  switch (row) {
    case VlRow::Vl3:
      p.config.family = Family::Seq;
      p.n = 200000;
      p.m1 = 2000000;
      p.k = 100;
      break;
    case VlRow::Vl4:
      p.config.family = Family::Late;
      p.config.base = Family::Rand;
      p.n = 400000;
      p.m1 = 4000000;
      p.k = 180;
      break;
    case VlRow::Vl5:
      p.config.family = Family::Rand;
      p.n = 1000000;
      p.m1 = 10000000;
      p.k = 500;
      break;
  }
  p.config.n = p.n;
  p.config.m1 = p.m1;
  p.config.k = p.k;
  p.config.td_fraction = 0.8;
  p.t_d = static_cast<std::size_t>(0.8 * p.n);
  p.omega = p.n + p.t_d * (static_cast<std::size_t>(p.k) - 1);
  return p;
}

SdtpInstance make_vl(VlRow row, std::uint64_t seed) {
  GenConfig config = vl_params(row).config;
  config.seed = seed;
  config.retries = 5;
  return generate_instance(config);
}

}  // namespace sdtp
