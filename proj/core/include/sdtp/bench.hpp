#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "sdtp/model.hpp"

namespace sdtp {

/// One instance entered into a benchmark run, under a stable display name
/// (typically the file stem).
struct BenchItem {
  std::string name;
  const SdtpInstance* instance = nullptr;
};

/// One timed solver execution. Elapsed time covers the solve call only;
/// parsing and file handling happen before the clock starts.
struct BenchRecord {
  std::string solver;
  std::string instance;
  int rep = 0;
  SolveOutcome::Status outcome = SolveOutcome::Status::TimedOut;
  std::int64_t elapsed_us = 0;
  bool timed_out = false;
};

/// Per-solver aggregation. Times that hit the limit are charged at the
/// limit; the with- and without-timeout averages are reported separately
/// because partially-timed-out groups are ambiguous otherwise.
struct BenchSummary {
  std::string solver;
  std::size_t runs = 0;
  std::size_t timeouts = 0;
  double max_ms = 0;
  double avg_ms = 0;             // timeouts included, charged at the limit
  double avg_solved_ms = 0;      // timeouts excluded (0 when all timed out)
  double std_ms = 0;             // population sigma, timeouts at the limit
  double total_s = 0;
  double timeout_pct = 0;
};

/// Runs the full solver x instance x repetition matrix with a cooperative
/// per-run time limit (milliseconds; 0 disables the limit). Every run
/// yields exactly one record. `earliest` solvers only; latest-capable
/// solvers are still run for their earliest schedule.
std::vector<BenchRecord> run_bench(const std::vector<BenchItem>& corpus,
                                   const std::vector<std::string>& solvers,
                                   std::int64_t time_limit_ms,
                                   int repetitions);

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records,
                                    std::int64_t time_limit_ms);

/// `solver,instance,rep,outcome,elapsed_us,timed_out`
void write_records_csv(std::ostream& os,
                       const std::vector<BenchRecord>& records);

/// One row per solver, columns mirroring the summary struct.
void write_summary_csv(std::ostream& os,
                       const std::vector<BenchSummary>& summaries);

/// Pivot table for plotting: one row per instance (in corpus order),
/// one column per solver holding the mean elapsed microseconds across
/// repetitions (timeouts charged at the limit).
void write_plot_csv(std::ostream& os, const std::vector<BenchRecord>& records,
                    std::int64_t time_limit_ms);

}  // namespace sdtp
