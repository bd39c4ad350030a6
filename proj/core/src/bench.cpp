#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "sdtp/bench.hpp"
#include "sdtp/solvers.hpp"

namespace sdtp {

std::vector<BenchRecord> run_bench(const std::vector<BenchItem>& corpus,
                                   const std::vector<std::string>& solvers,
                                   std::int64_t time_limit_ms,
                                   int repetitions) {
  std::vector<BenchRecord> records;
  records.reserve(corpus.size() * solvers.size() *
                  static_cast<std::size_t>(repetitions));
  for (const BenchItem& item : corpus) {
    for (const std::string& solver : solvers) {
      for (int rep = 0; rep < repetitions; ++rep) {
        const Deadline deadline = time_limit_ms > 0
                                      ? Deadline::after_ms(time_limit_ms)
                                      : Deadline();
        const auto start = std::chrono::steady_clock::now();
        const SolveOutcome out = solve_with(solver, *item.instance,
                                            ScheduleKind::Earliest, deadline);
        const auto stop = std::chrono::steady_clock::now();
        BenchRecord r;
        r.solver = solver;
        r.instance = item.name;
        r.rep = rep;
        r.outcome = out.status;
        r.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                           stop - start)
                           .count();
        r.timed_out = out.timed_out();
        records.push_back(std::move(r));
      }
    }
  }
  return records;
}

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records,
                                    std::int64_t time_limit_ms) {
  // keyed by solver in first-appearance order
  std::vector<BenchSummary> out;
  auto find = [&out](const std::string& solver) -> BenchSummary& {
    for (BenchSummary& s : out)
      if (s.solver == solver) return s;
    out.push_back({});
    out.back().solver = solver;
    return out.back();
  };

  std::map<std::string, std::vector<double>> charged;  // ms, timeouts at limit
  for (const BenchRecord& r : records) {
    BenchSummary& s = find(r.solver);
    ++s.runs;
    double ms = static_cast<double>(r.elapsed_us) / 1000.0;
    if (r.timed_out) {
      ++s.timeouts;
      if (time_limit_ms > 0) ms = static_cast<double>(time_limit_ms);
    } else {
      s.avg_solved_ms += ms;
    }
    charged[r.solver].push_back(ms);
  }

  for (BenchSummary& s : out) {
    const std::vector<double>& xs = charged[s.solver];
    double sum = 0;
    for (double x : xs) {
      s.max_ms = std::max(s.max_ms, x);
      sum += x;
    }
    s.avg_ms = sum / static_cast<double>(xs.size());
    double var = 0;
    for (double x : xs) var += (x - s.avg_ms) * (x - s.avg_ms);
    s.std_ms = std::sqrt(var / static_cast<double>(xs.size()));
    s.total_s = sum / 1000.0;
    if (s.runs > s.timeouts)
      s.avg_solved_ms /= static_cast<double>(s.runs - s.timeouts);
    s.timeout_pct =
        100.0 * static_cast<double>(s.timeouts) / static_cast<double>(s.runs);
  }
  return out;
}

void write_records_csv(std::ostream& os,
                       const std::vector<BenchRecord>& records) {
  os << "solver,instance,rep,outcome,elapsed_us,timed_out\n";
  for (const BenchRecord& r : records)
    os << r.solver << "," << r.instance << "," << r.rep << ","
       << to_string(r.outcome) << "," << r.elapsed_us << ","
       << (r.timed_out ? 1 : 0) << "\n";
}

void write_summary_csv(std::ostream& os,
                       const std::vector<BenchSummary>& summaries) {
  os << "# std is the population standard deviation; timeouts are charged "
        "at the time limit\n";
  os << "solver,runs,max_ms,avg_ms,avg_solved_ms,std_ms,total_s,"
        "timeout_pct\n";
  for (const BenchSummary& s : summaries)
    os << s.solver << "," << s.runs << "," << s.max_ms << "," << s.avg_ms
       << "," << s.avg_solved_ms << "," << s.std_ms << "," << s.total_s << ","
       << s.timeout_pct << "\n";
}

void write_plot_csv(std::ostream& os, const std::vector<BenchRecord>& records,
                    std::int64_t time_limit_ms) {
  std::vector<std::string> solvers;
  std::vector<std::string> instances;
  std::map<std::pair<std::string, std::string>, std::pair<double, int>> cells;
  for (const BenchRecord& r : records) {
    if (std::find(solvers.begin(), solvers.end(), r.solver) == solvers.end())
      solvers.push_back(r.solver);
    if (std::find(instances.begin(), instances.end(), r.instance) ==
        instances.end())
      instances.push_back(r.instance);
    double us = static_cast<double>(r.elapsed_us);
    if (r.timed_out && time_limit_ms > 0)
      us = static_cast<double>(time_limit_ms) * 1000.0;
    auto& cell = cells[{r.solver, r.instance}];
    cell.first += us;
    ++cell.second;
  }
  os << "instance";
  for (const std::string& s : solvers) os << "," << s << "_avg_us";
  os << "\n";
  for (const std::string& name : instances) {
    os << name;
    for (const std::string& s : solvers) {
      const auto it = cells.find({s, name});
      if (it == cells.end() || it->second.second == 0)
        os << ",";
      else
        os << "," << it->second.first / it->second.second;
    }
    os << "\n";
  }
}

}  // namespace sdtp
