#pragma once

#include <string>
#include <vector>

#include "sdtp/model.hpp"

namespace sdtp {

/// Bellman-Ford with Domain Check: label-correcting shortest paths over
/// the direct graph interleaved with per-dequeue domain advancement.
/// Earliest returns the componentwise-minimal feasible schedule; Latest
/// mirrors the scan over the reverse graph with descending domains.
SolveOutcome solve_bfdc(const SdtpInstance& instance,
                        ScheduleKind kind = ScheduleKind::Earliest,
                        const Deadline& deadline = {});

/// Reduced Upper-Lower Tightening: earliest/latest Bellman-Ford passes
/// shrinking per-time-point global boundaries to a fixpoint.
SolveOutcome solve_rult(const SdtpInstance& instance,
                        ScheduleKind kind = ScheduleKind::Earliest,
                        const Deadline& deadline = {});

/// Reported for empirical scrutiny of the tightening loop.
struct RultTrace {
  std::size_t iterations = 0;
};
SolveOutcome solve_rult(const SdtpInstance& instance, ScheduleKind kind,
                        const Deadline& deadline, RultTrace& trace);

/// Upper-Lower Tightening over pairwise boundary sets with Floyd-Warshall
/// closure each iteration.
SolveOutcome solve_ult(const SdtpInstance& instance,
                       ScheduleKind kind = ScheduleKind::Earliest,
                       const Deadline& deadline = {});

/// Comin-Rizzi: one Bellman-Ford phase, then backtrack-free domain
/// advancement driven by lazily computed Dijkstra rows over the
/// nonnegative reweighted C1 graph.
SolveOutcome solve_cra(const SdtpInstance& instance,
                       const Deadline& deadline = {});

enum class KaVariant { KAB, KAJ };

/// Kumar's algorithm: APSP matrix over the reverse graph, interval
/// conflict analysis, bipartite max-flow min-cut, vertex cover, one final
/// STP solve. The schedule is feasible but not necessarily extremal.
SolveOutcome solve_ka(const SdtpInstance& instance,
                      KaVariant variant = KaVariant::KAB,
                      const Deadline& deadline = {},
                      std::size_t conflict_cap = 100'000'000);

/// Dispatch by CLI algorithm name: bfdc|rult|ult|cra|kab|kaj.
/// Throws std::invalid_argument for unknown names or an unsupported
/// schedule kind (latest is available for bfdc, rult and ult only).
SolveOutcome solve_with(const std::string& algorithm,
                        const SdtpInstance& instance, ScheduleKind kind,
                        const Deadline& deadline = {});

inline const std::vector<std::string>& solver_names() {
  static const std::vector<std::string> names = {"bfdc", "rult", "ult",
                                                 "cra", "kab", "kaj"};
  return names;
}

}  // namespace sdtp
