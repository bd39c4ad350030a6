#include <stdexcept>

#include "sdtp/solvers.hpp"

namespace sdtp {

SolveOutcome solve_with(const std::string& algorithm,
                        const SdtpInstance& instance, ScheduleKind kind,
                        const Deadline& deadline) {
  if (kind == ScheduleKind::Unspecified) kind = ScheduleKind::Earliest;
  if (algorithm == "bfdc") return solve_bfdc(instance, kind, deadline);
  if (algorithm == "rult") return solve_rult(instance, kind, deadline);
  if (algorithm == "ult") return solve_ult(instance, kind, deadline);
  if (kind == ScheduleKind::Latest)
    throw std::invalid_argument("latest schedules require bfdc, rult or ult");
  if (algorithm == "cra") return solve_cra(instance, deadline);
  if (algorithm == "kab") return solve_ka(instance, KaVariant::KAB, deadline);
  if (algorithm == "kaj") return solve_ka(instance, KaVariant::KAJ, deadline);
  throw std::invalid_argument("unknown solver: " + algorithm);
}

}  // namespace sdtp
