#include <sstream>

#include "sdtp/model_export.hpp"

namespace sdtp {

BigMPair big_m(const DomainList& domain) {
  BigMPair m;
  for (const Interval& iv : domain.intervals) {
    m.ml = std::max(m.ml, iv.lo - domain.lower());
    m.mu = std::max(m.mu, domain.upper() - iv.hi);
  }
  return m;
}

namespace {

/// LP syntax wants explicit signs on every term after the first.
void put_signed(std::ostream& os, Weight v) {
  if (v < 0)
    os << "- " << -v;
  else
    os << "+ " << v;
}

}  // namespace

std::string export_ilp(const SdtpInstance& instance) {
  const NodeId n = instance.num_time_points;
  std::ostringstream os;
  os << "\\ SDTP feasibility program, " << n << " time-points\n";
  os << "Minimize\n obj: 0\nSubject To\n";

  std::size_t row = 0;
  for (const Constraint& t : instance.type1)
    os << " c" << row++ << ": s" << t.i << " - s" << t.j << " <= " << t.w
       << "\n";

  // Interval activation: l - ML(1-x) <= s and s <= u + MU(1-x),
  // linearized around the tightened coefficients.
  for (NodeId i = 1; i <= n; ++i) {
    const DomainList& d = instance.domain(i);
    const BigMPair m = big_m(d);
    for (std::size_t c = 0; c < d.size(); ++c) {
      const Interval& iv = d.intervals[c];
      os << " lb_" << i << "_" << c << ": s" << i << " ";
      put_signed(os, -m.ml);
      os << " x_" << i << "_" << c << " >= " << (iv.lo - m.ml) << "\n";
      os << " ub_" << i << "_" << c << ": s" << i << " ";
      put_signed(os, m.mu);
      os << " x_" << i << "_" << c << " <= " << (iv.hi + m.mu) << "\n";
    }
  }
  for (NodeId i = 1; i <= n; ++i) {
    const DomainList& d = instance.domain(i);
    os << " sel_" << i << ":";
    for (std::size_t c = 0; c < d.size(); ++c) {
      os << (c == 0 ? " " : " + ") << "x_" << i << "_" << c;
    }
    os << " = 1\n";
  }

  os << "Bounds\n";
  for (NodeId i = 1; i <= n; ++i) os << " s" << i << " free\n";
  os << "Binary\n";
  for (NodeId i = 1; i <= n; ++i)
    for (std::size_t c = 0; c < instance.domain(i).size(); ++c)
      os << " x_" << i << "_" << c << "\n";
  os << "End\n";
  return os.str();
}

std::string export_cp(const SdtpInstance& instance, CpForm form,
                      std::size_t gap_cap) {
  const NodeId n = instance.num_time_points;

  if (form == CpForm::Simplified) {
    std::size_t volume = 0;
    for (NodeId i = 1; i <= n; ++i) {
      const DomainList& d = instance.domain(i);
      for (std::size_t c = 1; c < d.size(); ++c)
        volume += static_cast<std::size_t>(d.intervals[c].lo -
                                           d.intervals[c - 1].hi - 1);
      if (volume > gap_cap)
        throw ModelExportError(
            "simplified form would enumerate more gap values than the cap "
            "allows");
    }
  }

  std::ostringstream os;
  os << "cpm " << (form == CpForm::Full ? "full" : "simplified") << " " << n
     << "\n";
  for (NodeId i = 1; i <= n; ++i) os << "var s" << i << "\n";
  for (const Constraint& t : instance.type1)
    os << "diff-leq " << t.i << " " << t.j << " " << t.w << "\n";

  for (NodeId i = 1; i <= n; ++i) {
    const DomainList& d = instance.domain(i);
    if (form == CpForm::Full) {
      os << "or-block " << i << " " << d.size();
      for (const Interval& iv : d.intervals) os << " " << iv.lo << " " << iv.hi;
      os << "\n";
    } else {
      os << "bound " << i << " " << d.lower() << " " << d.upper() << "\n";
      std::size_t count = 0;
      for (std::size_t c = 1; c < d.size(); ++c)
        count += static_cast<std::size_t>(d.intervals[c].lo -
                                          d.intervals[c - 1].hi - 1);
      if (count == 0) continue;
      os << "not-in " << i << " " << count;
      for (std::size_t c = 1; c < d.size(); ++c)
        for (Weight v = d.intervals[c - 1].hi + 1; v < d.intervals[c].lo; ++v)
          os << " " << v;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace sdtp
