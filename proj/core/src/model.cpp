#include "sdtp/model.hpp"

#include <algorithm>

namespace sdtp {

bool DomainList::contains(Weight v) const { return find_interval(v) >= 0; }

int DomainList::find_interval(Weight v) const {
  auto it = std::upper_bound(
      intervals.begin(), intervals.end(), v,
      [](Weight x, const Interval& iv) { return x < iv.lo; });
  if (it == intervals.begin()) return -1;
  --it;
  return it->contains(v) ? static_cast<int>(it - intervals.begin()) : -1;
}

int DomainList::find_interval_above(Weight v) const {
  auto it = std::upper_bound(
      intervals.begin(), intervals.end(), v,
      [](Weight x, const Interval& iv) { return x < iv.lo; });
  if (it == intervals.end()) return -1;
  return static_cast<int>(it - intervals.begin());
}

SdtpInstance SdtpInstance::make(
    NodeId n, std::vector<Constraint> type1,
    const std::vector<std::pair<NodeId, std::vector<Interval>>>& given) {
  SdtpInstance inst;
  inst.num_time_points = n;
  inst.type1 = std::move(type1);
  inst.domains.assign(static_cast<std::size_t>(n) + 1,
                      DomainList{{{-kDefaultHorizon, kDefaultHorizon}}});
  inst.domains[kAlpha] = DomainList{{{0, 0}}};
  inst.explicit_domain.assign(static_cast<std::size_t>(n) + 1, false);
  for (const auto& [tp, intervals] : given) {
    inst.domains[tp] = DomainList{intervals};
    inst.explicit_domain[tp] = true;
  }
  return inst;
}

InstanceStats stats(const SdtpInstance& instance) {
  InstanceStats s;
  s.m1 = instance.type1.size();
  s.k = 1;
  for (NodeId i = 1; i <= instance.num_time_points; ++i) {
    const std::size_t d = instance.domain(i).size();
    s.omega += d;
    s.k = std::max(s.k, d);
    if (d > 1) ++s.t_d;
  }
  return s;
}

std::vector<ValidationIssue> validate(const SdtpInstance& instance) {
  std::vector<ValidationIssue> issues;
  const NodeId n = instance.num_time_points;
  auto flag = [&](std::string msg) { issues.push_back({std::move(msg)}); };

  for (std::size_t c = 0; c < instance.type1.size(); ++c) {
    const Constraint& t = instance.type1[c];
    const std::string at = "constraint " + std::to_string(c + 1);
    if (t.i < 1 || t.i > n || t.j < 1 || t.j > n) {
      flag(at + ": time-point index out of range");
      continue;
    }
    if (t.i == t.j) {
      flag(at + (t.w < 0 ? ": self-constraint with negative weight (immediately infeasible)"
                         : ": vacuous self-constraint"));
    }
  }

  for (NodeId i = 1; i <= n; ++i) {
    const DomainList& d = instance.domain(i);
    const std::string at = "time-point " + std::to_string(i);
    if (d.intervals.empty()) {
      flag(at + ": empty domain list");
      continue;
    }
    for (std::size_t c = 0; c < d.size(); ++c) {
      if (d[c].lo > d[c].hi)
        flag(at + ", interval " + std::to_string(c + 1) + ": l > u");
      if (c > 0 && d[c - 1].hi >= d[c].lo)
        flag(at + ", intervals " + std::to_string(c) + "/" +
             std::to_string(c + 1) + ": overlap/adjacency: u_c >= l_c+1");
    }
  }
  return issues;
}

const char* to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::Earliest: return "earliest";
    case ScheduleKind::Latest: return "latest";
    default: return "unspecified";
  }
}

const char* to_string(InfeasibleCause cause) {
  switch (cause) {
    case InfeasibleCause::NegativeCycle: return "negative-cycle";
    case InfeasibleCause::DomainExhausted: return "domain-exhausted";
    case InfeasibleCause::EmptyBound: return "empty-bound";
    case InfeasibleCause::CoverTooSmall: return "cover-too-small";
  }
  return "?";
}

const char* to_string(SolveOutcome::Status status) {
  switch (status) {
    case SolveOutcome::Status::Feasible: return "feasible";
    case SolveOutcome::Status::Infeasible: return "infeasible";
    case SolveOutcome::Status::TimedOut: return "timed-out";
  }
  return "?";
}

}  // namespace sdtp
