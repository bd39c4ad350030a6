#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace sdtp {

/// Time values and constraint weights. Integral by design: all solvers
/// compare schedules for exact equality, never within a tolerance.
using Weight = std::int64_t;

/// Node index into a distance graph. 0 is reserved for the time origin
/// alpha; time-points are 1..|T|.
using NodeId = std::int32_t;

inline constexpr NodeId kAlpha = 0;

/// +infinity sentinel for unreachable pairs / one-sided bounds.
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max();

/// Default box for time-points with no stated Type 2 entry.
inline constexpr Weight kDefaultHorizon = Weight{1} << 40;

/// a + b with the infinity sentinel absorbing. Finite operands are assumed
/// to stay far from the representable range (weights are bounded by the
/// horizon), so finite sums never overflow.
constexpr Weight sat_add(Weight a, Weight b) {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  return a + b;
}

struct Interval {
  Weight lo = 0;
  Weight hi = 0;

  bool contains(Weight v) const { return lo <= v && v <= hi; }
  bool operator==(const Interval&) const = default;
};

/// Ascending, pairwise disjoint intervals owned by one time-point.
struct DomainList {
  std::vector<Interval> intervals;

  std::size_t size() const { return intervals.size(); }
  const Interval& operator[](std::size_t c) const { return intervals[c]; }

  Weight lower() const { return intervals.front().lo; }
  Weight upper() const { return intervals.back().hi; }
  Interval global_bounds() const { return {lower(), upper()}; }

  bool contains(Weight v) const;
  /// 0-based index of the interval containing v, or -1.
  int find_interval(Weight v) const;
  /// Index of the first interval whose lower bound exceeds v, or -1.
  int find_interval_above(Weight v) const;

  bool operator==(const DomainList&) const = default;
};

/// s_i - s_j <= w
struct Constraint {
  NodeId i = 0;
  NodeId j = 0;
  Weight w = 0;

  bool operator==(const Constraint&) const = default;
};

/// A simple disjunctive temporal network. Immutable after construction;
/// shared freely across concurrent solver runs.
struct SdtpInstance {
  NodeId num_time_points = 0;
  std::vector<Constraint> type1;
  /// Indexed by time-point; slot 0 holds alpha's fixed [0,0].
  std::vector<DomainList> domains;
  /// Time-points that carried an explicit d line (used by serialization
  /// and stats; defaulted points get the [-H, H] box).
  std::vector<bool> explicit_domain;

  const DomainList& domain(NodeId i) const { return domains[i]; }

  /// Builds an instance, filling in default domains for time-points
  /// absent from `given` (pairs of time-point id and interval list).
  static SdtpInstance make(
      NodeId n, std::vector<Constraint> type1,
      const std::vector<std::pair<NodeId, std::vector<Interval>>>& given);
};

struct InstanceStats {
  std::size_t k = 0;       // max domains per time-point
  std::size_t omega = 0;   // total domain count
  std::size_t t_d = 0;     // time-points with more than one domain
  std::size_t m1 = 0;      // |C1|

  bool operator==(const InstanceStats&) const = default;
};

InstanceStats stats(const SdtpInstance& instance);

struct ValidationIssue {
  std::string message;
};

/// Checks the Definition-2 well-formedness rules. Violations are data,
/// not failures; solvers assume a clean report.
std::vector<ValidationIssue> validate(const SdtpInstance& instance);

/// Assignment indexed by time-point; slot 0 is alpha and always 0.
using Schedule = std::vector<Weight>;

enum class ScheduleKind { Earliest, Latest, Unspecified };

enum class InfeasibleCause {
  NegativeCycle,
  DomainExhausted,
  EmptyBound,
  CoverTooSmall,
};

const char* to_string(ScheduleKind kind);
const char* to_string(InfeasibleCause cause);

struct SolveOutcome {
  enum class Status { Feasible, Infeasible, TimedOut };

  Status status = Status::TimedOut;
  Schedule schedule;                                      // when Feasible
  ScheduleKind kind = ScheduleKind::Unspecified;          // when Feasible
  InfeasibleCause cause = InfeasibleCause::NegativeCycle; // when Infeasible

  bool feasible() const { return status == Status::Feasible; }
  bool infeasible() const { return status == Status::Infeasible; }
  bool timed_out() const { return status == Status::TimedOut; }

  static SolveOutcome make_feasible(Schedule s, ScheduleKind kind) {
    return {Status::Feasible, std::move(s), kind, InfeasibleCause::NegativeCycle};
  }
  static SolveOutcome make_infeasible(InfeasibleCause cause) {
    return {Status::Infeasible, {}, ScheduleKind::Unspecified, cause};
  }
  static SolveOutcome make_timed_out() { return {}; }
};

const char* to_string(SolveOutcome::Status status);

/// Cooperative time budget. Solvers poll at coarse checkpoints (once per
/// dequeue / outer iteration), so detection latency is bounded by one
/// node's out-degree of work.
class Deadline {
 public:
  Deadline() = default;  // unlimited

  static Deadline after(std::chrono::microseconds budget) {
    Deadline d;
    d.enabled_ = true;
    d.at_ = std::chrono::steady_clock::now() + budget;
    return d;
  }
  static Deadline after_ms(std::int64_t ms) {
    return after(std::chrono::milliseconds(ms));
  }

  bool expired() const {
    return enabled_ && std::chrono::steady_clock::now() >= at_;
  }

 private:
  bool enabled_ = false;
  std::chrono::steady_clock::time_point at_{};
};

}  // namespace sdtp
