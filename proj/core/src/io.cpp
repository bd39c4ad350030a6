#include "sdtp/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace sdtp {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

SdtpInstance parse_instance(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  NodeId n = 0;
  std::size_t m1 = 0, m2 = 0;
  std::vector<Constraint> type1;
  std::vector<std::pair<NodeId, std::vector<Interval>>> given;
  std::vector<bool> seen_d;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;

    if (tag == "p") {
      std::string kind;
      if (have_header) fail(line_no, "duplicate problem line");
      if (!(ls >> kind >> n >> m1 >> m2) || kind != "sdtp" || n < 0)
        fail(line_no, "expected 'p sdtp <n> <m1> <m2>'");
      have_header = true;
      type1.reserve(m1);
      given.reserve(m2);
      seen_d.assign(static_cast<std::size_t>(n) + 1, false);
      continue;
    }
    if (!have_header) fail(line_no, "data before problem line");

    if (tag == "a") {
      Constraint t;
      if (!(ls >> t.i >> t.j >> t.w)) fail(line_no, "expected 'a <i> <j> <w>'");
      if (t.i < 1 || t.i > n || t.j < 1 || t.j > n)
        fail(line_no, "arc endpoint out of range");
      type1.push_back(t);
    } else if (tag == "d") {
      NodeId tp = 0;
      std::size_t k = 0;
      if (!(ls >> tp >> k) || k == 0) fail(line_no, "expected 'd <i> <k> ...'");
      if (tp < 1 || tp > n) fail(line_no, "time-point out of range");
      if (seen_d[tp]) fail(line_no, "duplicate d line for time-point " + std::to_string(tp));
      seen_d[tp] = true;
      std::vector<Interval> intervals(k);
      for (auto& iv : intervals)
        if (!(ls >> iv.lo >> iv.hi)) fail(line_no, "truncated interval list");
      given.emplace_back(tp, std::move(intervals));
    } else {
      fail(line_no, "unknown line tag '" + tag + "'");
    }
  }

  if (!have_header) throw ParseError("missing problem line");
  if (type1.size() != m1)
    throw ParseError("declared " + std::to_string(m1) + " a lines, found " +
                     std::to_string(type1.size()));
  if (given.size() != m2)
    throw ParseError("declared " + std::to_string(m2) + " d lines, found " +
                     std::to_string(given.size()));
  return SdtpInstance::make(n, std::move(type1), given);
}

SdtpInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_instance(in);
}

void serialize_instance(const SdtpInstance& instance, std::ostream& out) {
  std::size_t m2 = 0;
  for (NodeId i = 1; i <= instance.num_time_points; ++i)
    if (instance.explicit_domain[i]) ++m2;

  out << "p sdtp " << instance.num_time_points << ' ' << instance.type1.size()
      << ' ' << m2 << '\n';
  for (const Constraint& t : instance.type1)
    out << "a " << t.i << ' ' << t.j << ' ' << t.w << '\n';
  for (NodeId i = 1; i <= instance.num_time_points; ++i) {
    if (!instance.explicit_domain[i]) continue;
    const DomainList& d = instance.domain(i);
    out << "d " << i << ' ' << d.size();
    for (const Interval& iv : d.intervals) out << ' ' << iv.lo << ' ' << iv.hi;
    out << '\n';
  }
}

void save_instance(const SdtpInstance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  serialize_instance(instance, out);
  out.flush();
  if (!out) throw ParseError("write failed: " + path);
}

}  // namespace sdtp
