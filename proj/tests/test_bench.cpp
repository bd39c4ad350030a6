#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "sdtp/bench.hpp"

using namespace sdtp;

TEST_CASE("matrix produces one record per run") {
  const SdtpInstance a = testing::ex1();
  const SdtpInstance b = testing::ex3();
  const std::vector<BenchItem> corpus{{"a", &a}, {"b", &b}};
  const std::vector<BenchRecord> records =
      run_bench(corpus, {"bfdc", "rult"}, 2000, 5);
  CHECK(records.size() == 2 * 2 * 5);
  for (const BenchRecord& r : records) {
    CHECK_FALSE(r.timed_out);
    CHECK(r.outcome == (r.instance == "a" ? SolveOutcome::Status::Feasible
                                          : SolveOutcome::Status::Infeasible));
  }
}

TEST_CASE("summary arithmetic on synthetic records") {
  std::vector<BenchRecord> records;
  records.push_back({"x", "i1", 0, SolveOutcome::Status::Feasible, 2000, false});
  records.push_back({"x", "i2", 0, SolveOutcome::Status::Feasible, 4000, false});
  const std::vector<BenchSummary> s = summarize(records, 2000);
  REQUIRE(s.size() == 1);
  CHECK(s[0].runs == 2);
  CHECK(s[0].avg_ms == doctest::Approx(3.0));
  CHECK(s[0].std_ms == doctest::Approx(1.0));  // population sigma
  CHECK(s[0].max_ms == doctest::Approx(4.0));
  CHECK(s[0].timeout_pct == doctest::Approx(0.0));
}

TEST_CASE("timeouts are charged at the limit") {
  std::vector<BenchRecord> records;
  records.push_back({"x", "i1", 0, SolveOutcome::Status::TimedOut, 1999000, true});
  records.push_back({"x", "i2", 0, SolveOutcome::Status::Feasible, 1000, false});
  const std::vector<BenchSummary> s = summarize(records, 2000);
  CHECK(s[0].timeouts == 1);
  CHECK(s[0].timeout_pct == doctest::Approx(50.0));
  CHECK(s[0].avg_ms == doctest::Approx((2000.0 + 1.0) / 2));
  CHECK(s[0].avg_solved_ms == doctest::Approx(1.0));
}

TEST_CASE("csv shapes") {
  std::vector<BenchRecord> records;
  records.push_back({"x", "i1", 0, SolveOutcome::Status::Feasible, 5, false});
  std::ostringstream rec, sum, plot;
  write_records_csv(rec, records);
  CHECK(rec.str().rfind("solver,instance,rep,outcome,elapsed_us,timed_out\n",
                        0) == 0);
  CHECK(rec.str().find("x,i1,0,feasible,5,0") != std::string::npos);
  write_summary_csv(sum, summarize(records, 0));
  CHECK(sum.str().find("solver,runs,max_ms") != std::string::npos);
  write_plot_csv(plot, records, 0);
  CHECK(plot.str().rfind("instance,x_avg_us\n", 0) == 0);
  CHECK(plot.str().find("i1,5") != std::string::npos);
}
