#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "sdtp/model.hpp"

namespace sdtp {

/// Raised when a requested export cannot be produced (for example the
/// simplified form's gap enumeration would be too large).
struct ModelExportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CpForm { Full, Simplified };

/// Tightened big-M coefficients for one time-point's interval rows.
struct BigMPair {
  Weight ml = 0;  // max interval lower bound minus the global lower bound
  Weight mu = 0;  // global upper bound minus the min interval upper bound
};

BigMPair big_m(const DomainList& domain);

/// Integer program in LP file syntax: difference rows, big-M interval
/// activation rows, one selection row per time-point, binary section.
/// The problem is pure feasibility, so the objective is a constant.
std::string export_ilp(const SdtpInstance& instance);

/// Constraint model in the small line-oriented grammar documented in the
/// README: `var`, `diff-leq`, and either per-point `or-block` rows (Full)
/// or `bound` plus `not-in` gap exclusions (Simplified). The simplified
/// form enumerates every integer living in a domain gap and refuses to
/// emit more than `gap_cap` of them across the whole instance.
std::string export_cp(const SdtpInstance& instance, CpForm form,
                      std::size_t gap_cap = 10'000'000);

}  // namespace sdtp
