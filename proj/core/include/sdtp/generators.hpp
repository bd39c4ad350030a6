#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdtp/model.hpp"

namespace sdtp {

/// Counter-based splitmix64 generator. Sub-streams for retries are
/// derived reproducibly from (seed, stream) so regeneration never
/// depends on how much randomness a failed attempt consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  Rng sub(std::uint64_t stream) const {
    Rng r(state_ ^ (0xd1b54a32d192ed03ULL * (stream + 1)));
    r.next();
    return r;
  }

 private:
  std::uint64_t state_;
};

enum class Family { Rand, Grid, Seq, Late };
enum class NegCycleClass { Nc02, Nc03, Nc04, Nc05 };

Family family_from_string(const std::string& name);
const char* to_string(Family family);
NegCycleClass negcycle_from_string(const std::string& name);
const char* to_string(NegCycleClass cls);

struct GenError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenConfig {
  Family family = Family::Rand;
  Family base = Family::Rand;  // base graph for Late: Rand or Seq
  NodeId n = 100;
  std::size_t m1 = 600;
  double td_fraction = 0.8;
  int k = 10;
  std::uint64_t seed = 1;
  double acceptance = 0.6;  // fraction threshold of the family's rule
  int retries = 50;
};

/// Base graph for instance generation; arcs double as the C1 set.
struct BaseGraph {
  NodeId n = 0;
  NodeId source = 1;  // the node the dummy source's role is mapped onto
  std::vector<Constraint> arcs;
  std::vector<Weight> tau;  // shortest distances from the dummy source
};

BaseGraph gen_base_graph(Family family, NodeId n, std::size_t m1, Rng& rng);

/// Full pipeline: base graph, domain attachment, acceptance-rule check
/// with sub-seeded retries. Throws GenError on bad parameters or when
/// retries are exhausted.
SdtpInstance generate_instance(const GenConfig& config);

/// Injects negative cycles into a feasible instance, making it
/// infeasible by construction. Cycle arcs are appended to C1.
SdtpInstance negcycle_filter(const SdtpInstance& feasible, NegCycleClass cls,
                             std::uint64_t seed);

enum class VlRow { Vl3, Vl4, Vl5 };
VlRow vl_row_from_string(const std::string& name);

/// Generation parameters of a very-large row plus the instance stats
/// they determine. The stats are exact consequences of the parameters,
/// independent of the seed.
struct VlParams {
  GenConfig config;
  NodeId n = 0;
  std::size_t m1 = 0;
  int k = 1;
  std::size_t t_d = 0;
  std::size_t omega = 0;
};
VlParams vl_params(VlRow row);

/// Materializes a very-large instance; memory-heavy for the biggest row.
SdtpInstance make_vl(VlRow row, std::uint64_t seed);

}  // namespace sdtp
