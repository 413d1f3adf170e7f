#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "xfam/core.hpp"
#include "xfam/genset.hpp"

// Independent maximization of the summed family sizes over non-empty
// cross-(t-)intersecting tuples: an exact L-initial profile search for
// t = 1 and a fully exhaustive micro-scale search for any t, plus a grid
// sweep comparing oracle maxima against the closed-form bound.

namespace xfam {

struct OracleOptions {
  // L-initial search guard; XFAM_MAX_N overrides it in the CLI. Larger
  // universes work but sit outside the tested envelope.
  int max_n = 12;
  // Exhaustive search guard: every layer must satisfy C(n, a) <= this cap,
  // and each family's layers must fit 64 candidate sets in total.
  std::uint64_t max_layer_sets = 12;
};

struct LayerCount {
  int rank;
  std::uint64_t count;
};

enum class OracleMethod { LInitial, Exhaustive };

struct OracleResult {
  std::uint64_t maximum = 0;
  // Per family, ranks in decreasing order (the search's variable order);
  // for the L-initial method this is the lexicographically least
  // maximizing profile under that ordering.
  std::vector<std::vector<LayerCount>> profile;
  FamilyTuple witness;
  OracleMethod method = OracleMethod::LInitial;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

// Largest f such that each of the first f b-sets (lex order) meets every
// member of l_initial(n, a, s) in >= t elements; s = 0 gives C(n, b). The
// scan stops at the first non-transversal b-set, which is exact for prefix
// feasibility.
std::uint64_t transversal_frontier(int n, int a, std::uint64_t s, int b, int t);

// Exact maximum for t = 1 via branch-and-bound over per-layer L-initial
// prefix sizes; each family must end non-empty. Throws std::domain_error
// for t >= 2 (no L-initial reduction is available there) and when n
// exceeds the guard.
OracleResult linitial_oracle(const Instance& inst, const OracleOptions& opts = {});

// Exact maximum over arbitrary families at micro scale, any t >= 1.
// Refuses with a size estimate when the guard is exceeded.
OracleResult exhaustive_oracle(const Instance& inst, const OracleOptions& opts = {});

struct SweepEntry {
  Instance instance;
  std::uint64_t oracle_max = 0;
  std::uint64_t bound_max = 0;
  bool equal = false;
  std::vector<std::vector<LayerCount>> witness_profile;
  std::string classified;  // matched equality cases, e.g. "i" or "ii(gamma=1)+iii"
};

struct SweepSkip {
  Instance instance;
  std::string reason;
};

struct SweepReport {
  std::vector<SweepEntry> entries;
  std::vector<SweepSkip> skipped;
  std::size_t mismatches = 0;
  // maximal witnesses matching no equality case; these are findings worth
  // eyes, not silent noise
  std::size_t unclassified = 0;
};

// Runs bound vs. L-initial oracle on every instance (sorted by instance
// key); instances with t != 1 or n < k1 + k2 are skipped with a reason.
SweepReport verify_sweep(std::span<const Instance> instances,
                         const OracleOptions& opts = {});

}  // namespace xfam
