// sdtp: command-line front end for the SDTP toolkit.
//
// Subcommands: generate, solve, verify, crosscheck, bench, export-model.
// Exit status: 0 success / feasible, 1 infeasible (or timed out / invalid
// schedule / failed crosscheck), 2 usage or data errors.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdtp/bench.hpp"
#include "sdtp/generators.hpp"
#include "sdtp/io.hpp"
#include "sdtp/model_export.hpp"
#include "sdtp/oracle.hpp"
#include "sdtp/solvers.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sdtp;

namespace {

int cmd_generate(const std::string& family, GenConfig cfg,
                 const std::string& base, const std::string& negcycle,
                 const std::string& out_path) {
  SdtpInstance inst;
  json manifest;
  if (family == "vl3" || family == "vl4" || family == "vl5") {
    const VlRow row = vl_row_from_string(family);
    inst = make_vl(row, cfg.seed);
    manifest["family"] = family;
    manifest["seed"] = cfg.seed;
  } else {
    cfg.family = family_from_string(family);
    if (!base.empty()) cfg.base = family_from_string(base);
    inst = generate_instance(cfg);
    manifest = {{"family", family},
                {"base", to_string(cfg.base)},
                {"n", cfg.n},
                {"m1", cfg.m1},
                {"td", cfg.td_fraction},
                {"k", cfg.k},
                {"seed", cfg.seed},
                {"acceptance", cfg.acceptance},
                {"retries", cfg.retries}};
  }
  if (!negcycle.empty()) {
    inst = negcycle_filter(inst, negcycle_from_string(negcycle), cfg.seed);
    manifest["negcycle"] = negcycle;
  }

  if (out_path.empty()) {
    serialize_instance(inst, std::cout);
  } else {
    save_instance(inst, out_path);
    std::ofstream mf(out_path + ".manifest");
    mf << manifest.dump(2) << "\n";
  }
  return 0;
}

int cmd_solve(const std::string& algorithm, const std::string& schedule,
              std::int64_t time_limit_ms, const std::string& input,
              const std::string& output) {
  const SdtpInstance inst = load_instance(input);
  const ScheduleKind kind =
      schedule == "latest" ? ScheduleKind::Latest : ScheduleKind::Earliest;
  const Deadline deadline =
      time_limit_ms > 0 ? Deadline::after_ms(time_limit_ms) : Deadline();

  const auto start = std::chrono::steady_clock::now();
  const SolveOutcome out = solve_with(algorithm, inst, kind, deadline);
  const auto stop = std::chrono::steady_clock::now();
  const auto elapsed_us =
      std::chrono::duration_cast<std::chrono::microseconds>(stop - start)
          .count();

  if (output == "json") {
    const InstanceStats st = stats(inst);
    json j = {{"solver", algorithm},
              {"schedule_kind", schedule},
              {"verdict", to_string(out.status)},
              {"elapsed_us", elapsed_us},
              {"instance",
               {{"n", inst.num_time_points},
                {"m1", st.m1},
                {"k", st.k},
                {"omega", st.omega},
                {"td", st.t_d}}}};
    if (out.feasible())
      j["s"] = std::vector<Weight>(out.schedule.begin() + 1,
                                   out.schedule.end());
    if (out.infeasible()) j["cause"] = to_string(out.cause);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(out.status);
    if (out.infeasible()) std::cout << " (" << to_string(out.cause) << ")";
    std::cout << "\n";
    if (out.feasible()) {
      for (NodeId i = 1; i <= inst.num_time_points; ++i)
        std::cout << out.schedule[i] << (i == inst.num_time_points ? "" : " ");
      std::cout << "\n";
    }
  }
  return out.feasible() ? 0 : 1;
}

int cmd_verify(const std::string& input, const std::string& schedule_path) {
  const SdtpInstance inst = load_instance(input);
  std::ifstream in(schedule_path);
  if (!in) throw ParseError("cannot open " + schedule_path);
  std::vector<Weight> values;
  for (Weight v; in >> v;) values.push_back(v);
  const auto n = static_cast<std::size_t>(inst.num_time_points);
  Schedule s;
  if (values.size() == n) {
    s.push_back(0);
    s.insert(s.end(), values.begin(), values.end());
  } else if (values.size() == n + 1) {
    s = values;
  } else {
    throw ParseError("schedule holds " + std::to_string(values.size()) +
                     " values, expected " + std::to_string(n) + " (or " +
                     std::to_string(n + 1) + " including the origin)");
  }
  const std::vector<std::string> issues = check_schedule(inst, s);
  if (issues.empty()) {
    std::cout << "valid\n";
    return 0;
  }
  for (const std::string& msg : issues) std::cout << msg << "\n";
  return 1;
}

int cmd_crosscheck(const std::string& input, bool with_oracle,
                   std::int64_t time_limit_ms) {
  const SdtpInstance inst = load_instance(input);
  const Deadline deadline =
      time_limit_ms > 0 ? Deadline::after_ms(time_limit_ms) : Deadline();

  if (with_oracle) {
    const CrossCheckReport report = cross_check(inst, deadline);
    for (const std::string& m : report.mismatches) std::cout << m << "\n";
    if (report.oracle_capped)
      std::cout << "note: oracle enumeration was capped\n";
    std::cout << (report.ok ? "agree" : "disagree") << "\n";
    return report.ok ? 0 : 1;
  }

  // Solver-only agreement: identical verdicts, valid schedules, and
  // identical earliest schedules for the exact-earliest algorithms.
  bool ok = true;
  SolveOutcome reference;
  bool have_reference = false;
  for (const std::string& name : solver_names()) {
    const SolveOutcome out =
        solve_with(name, inst, ScheduleKind::Earliest, deadline);
    if (out.timed_out()) {
      std::cout << name << ": timed out (skipped)\n";
      continue;
    }
    if (out.feasible() && !check_schedule(inst, out.schedule).empty()) {
      std::cout << name << ": schedule fails verification\n";
      ok = false;
    }
    if (!have_reference) {
      reference = out;
      have_reference = true;
      continue;
    }
    if (out.status != reference.status) {
      std::cout << name << ": verdict differs from bfdc\n";
      ok = false;
    } else if (out.feasible() && name != "kab" && name != "kaj" &&
               out.schedule != reference.schedule) {
      std::cout << name << ": earliest schedule differs from bfdc\n";
      ok = false;
    }
  }
  std::cout << (ok ? "agree" : "disagree") << "\n";
  return ok ? 0 : 1;
}

int cmd_bench(const std::string& corpus_dir, std::vector<std::string> solvers,
              int reps, std::int64_t time_limit_ms,
              const std::string& out_csv) {
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(corpus_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".sdtp")
      paths.push_back(entry.path().string());
  std::sort(paths.begin(), paths.end());

  std::vector<SdtpInstance> instances;
  std::vector<BenchItem> items;
  instances.reserve(paths.size());
  for (const std::string& path : paths) {
    try {
      instances.push_back(load_instance(path));
    } catch (const ParseError& e) {
      std::cerr << "skipping " << path << ": " << e.what() << "\n";
      continue;
    }
    items.push_back({fs::path(path).stem().string(), &instances.back()});
  }
  if (items.empty()) {
    std::cerr << "no usable .sdtp files in " << corpus_dir << "\n";
    return 2;
  }

  const std::vector<BenchRecord> records =
      run_bench(items, solvers, time_limit_ms, reps);
  {
    std::ofstream out(out_csv);
    if (!out) throw ParseError("cannot open " + out_csv + " for writing");
    write_records_csv(out, records);
  }
  const std::vector<BenchSummary> summaries =
      summarize(records, time_limit_ms);
  const std::string stem =
      (fs::path(out_csv).parent_path() / fs::path(out_csv).stem()).string();
  {
    std::ofstream out(stem + "-summary.csv");
    write_summary_csv(out, summaries);
  }
  {
    std::ofstream out(stem + "-plot.csv");
    write_plot_csv(out, records, time_limit_ms);
  }
  write_summary_csv(std::cout, summaries);
  return 0;
}

int cmd_export(const std::string& input, const std::string& format,
               std::string out_path) {
  const SdtpInstance inst = load_instance(input);
  std::string text;
  std::string ext;
  if (format == "lp") {
    text = export_ilp(inst);
    ext = ".lp";
  } else if (format == "cp") {
    text = export_cp(inst, CpForm::Full);
    ext = ".cpm";
  } else {
    text = export_cp(inst, CpForm::Simplified);
    ext = ".cpm";
  }
  if (out_path.empty())
    out_path = (fs::path(input).parent_path() /
                (fs::path(input).stem().string() + ext))
                   .string();
  std::ofstream out(out_path);
  if (!out) throw ParseError("cannot open " + out_path + " for writing");
  out << text;
  std::cout << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SDTP toolkit: generators, solvers, verification, benchmarks"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate an instance");
  std::string gen_family;
  GenConfig cfg;
  std::string gen_base, gen_negcycle, gen_out;
  gen->add_option("family", gen_family,
                  "rand|grid|seq|late|vl3|vl4|vl5")
      ->required();
  gen->add_option("--n", cfg.n, "time-points");
  std::int64_t m1 = 0;
  gen->add_option("--m1", m1, "difference constraints");
  gen->add_option("--td", cfg.td_fraction, "multi-domain fraction");
  gen->add_option("--k", cfg.k, "domains per multi-domain point");
  gen->add_option("--seed", cfg.seed, "64-bit seed");
  gen->add_option("--base", gen_base, "base family for late (rand|seq)");
  gen->add_option("--negcycle", gen_negcycle,
                  "inject negative cycles: nc02|nc03|nc04|nc05");
  gen->add_option("--out", gen_out, "output file (stdout when omitted)");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  std::string algorithm = "bfdc", schedule = "earliest", input,
              output = "text";
  std::int64_t time_limit_ms = 0;
  solve->add_option("--algorithm", algorithm, "bfdc|rult|ult|cra|kab|kaj")
      ->check(CLI::IsMember(solver_names()));
  solve->add_option("--schedule", schedule, "earliest|latest")
      ->check(CLI::IsMember({"earliest", "latest"}));
  solve->add_option("--time-limit", time_limit_ms, "milliseconds, 0 = none");
  solve->add_option("--input", input, "instance file")->required();
  solve->add_option("--output", output, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Check a schedule file");
  std::string v_input, v_schedule;
  verify->add_option("--input", v_input, "instance file")->required();
  verify->add_option("--schedule", v_schedule, "whitespace-separated values")
      ->required();

  // crosscheck
  auto* cross = app.add_subcommand("crosscheck",
                                   "Compare all solvers on one instance");
  std::string c_input;
  bool c_oracle = false;
  std::int64_t c_limit_ms = 0;
  cross->add_option("--input", c_input, "instance file")->required();
  cross->add_flag("--oracle", c_oracle,
                  "also compare against the brute-force reference");
  cross->add_option("--time-limit", c_limit_ms, "milliseconds, 0 = none");

  // bench
  auto* bench = app.add_subcommand("bench", "Run the benchmark matrix");
  std::string b_corpus, b_out = "bench.csv";
  std::vector<std::string> b_solvers = solver_names();
  int b_reps = 20;
  std::int64_t b_limit_ms = 2000;
  bench->add_option("--corpus", b_corpus, "directory of .sdtp files")
      ->required();
  bench->add_option("--solvers", b_solvers, "subset of solvers")
      ->delimiter(',');
  bench->add_option("--reps", b_reps, "repetitions per pair");
  bench->add_option("--time-limit", b_limit_ms, "milliseconds, 0 = none");
  bench->add_option("--out", b_out, "records CSV path");

  // export-model
  auto* exp = app.add_subcommand("export-model",
                                 "Write an ILP/CP model file");
  std::string e_input, e_format = "lp", e_out;
  exp->add_option("--input", e_input, "instance file")->required();
  exp->add_option("--format", e_format, "lp|cp|scp")
      ->check(CLI::IsMember({"lp", "cp", "scp"}));
  exp->add_option("--out", e_out, "output path (derived when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) {
      if (m1 > 0) cfg.m1 = static_cast<std::size_t>(m1);
      return cmd_generate(gen_family, cfg, gen_base, gen_negcycle, gen_out);
    }
    if (solve->parsed())
      return cmd_solve(algorithm, schedule, time_limit_ms, input, output);
    if (verify->parsed()) return cmd_verify(v_input, v_schedule);
    if (cross->parsed()) return cmd_crosscheck(c_input, c_oracle, c_limit_ms);
    if (bench->parsed())
      return cmd_bench(b_corpus, b_solvers, b_reps, b_limit_ms, b_out);
    if (exp->parsed()) return cmd_export(e_input, e_format, e_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
