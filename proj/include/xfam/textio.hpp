#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "xfam/core.hpp"

// Text syntax shared by the CLI: rank-set lists ("2,3;1" is R_1={2,3},
// R_2={1}), inline grid specs ("n=5..8 m=2,3 maxk=4") and instance files
// (one "<n> <ranks>" pair per line, optional trailing t).

namespace xfam {

RankSet parse_rank_set(const std::string& spec);
std::vector<RankSet> parse_rank_sets(const std::string& spec);
std::string format_rank_set(const RankSet& r);
std::string format_rank_sets(std::span<const RankSet> ranks);

// Enumerates instances for n in [n_lo, n_hi], family counts from ms, every
// family rank set a non-empty subset of [1, maxk]; rank-set combinations
// are enumerated as multisets (family order never affects either side of
// the verification) and instances with n < k1 + k2 are dropped.
std::vector<Instance> grid_instances(int n_lo, int n_hi, std::span<const int> ms,
                                     int maxk);

struct GridSpec {
  int n_lo = 0, n_hi = 0;
  std::vector<int> ms;
  int maxk = 0;
};

// Parses "n=5..8 m=2,3 maxk=4" (all three keys required; n accepts a single
// value or lo..hi).
GridSpec parse_grid_spec(const std::string& text);

std::vector<Instance> read_instances(std::istream& in);
std::vector<Instance> read_instances_file(const std::string& path);

}  // namespace xfam
