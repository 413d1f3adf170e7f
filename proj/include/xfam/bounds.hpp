#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "xfam/core.hpp"

// Closed-form quantities: star / M1 / M2 sizes, the candidate totals
// F_gamma(l), the sharp bound on the summed size of non-empty
// cross-intersecting rank-set families with its equality-case prediction,
// the classic uniform bounds it generalizes, and the cross-t conjectured
// value. All arithmetic is exact: binomials are 64-bit (universe cap 62
// keeps them representable) and products/sums accumulate in 128 bits.

namespace xfam {

// Σ_{a∈R} C(n-1, a-1): all R-sets containing a fixed element.
std::uint64_t size_star(int n, const RankSet& r);

// Σ_{a∈R} [C(n,a) - C(n-k,a)]: all R-sets meeting [k].
std::uint64_t size_m1(int n, const RankSet& r, int k);

// Σ_{b∈R} C(n-k, b-k): all R-sets containing [k]. Layers with b < k
// contribute 0.
std::uint64_t size_m2(int n, const RankSet& r, int k);

// size_m1(n, R_gamma, l) + Σ_{α≠γ} size_m2(n, R_α, l): the total attained
// by the (M1, M2, ..., M2) tuple pivoted at gamma with prefix [l].
// Requires 1 <= l <= k_min(gamma).
std::uint64_t m1m2_total(int n, std::span<const RankSet> ranks, int gamma, int l);

enum class EqualityCase { I, II, III, IV };
std::string case_name(EqualityCase c);

struct BoundCandidate {
  int gamma;  // 0-based family index
  int k_min;
  std::uint64_t value;
};

struct PredictedCase {
  EqualityCase kase;
  int gamma = -1;  // meaningful for case II only
};

struct BoundReport {
  int n = 0;
  std::vector<RankSet> ranks;
  int k1 = 0, k2 = 0;
  bool valid = false;  // n >= k1 + k2; when false the bound is not asserted
  std::uint64_t star_total = 0;
  std::vector<BoundCandidate> candidates;
  std::uint64_t maximum = 0;
  bool star_argmax = false;
  std::vector<int> argmax_gammas;
  std::vector<PredictedCase> predicted;
};

// Maximum of the star total and every per-gamma candidate, with every tied
// argmax listed and the equality cases the tie pattern predicts. Computed
// for any n; marked invalid when n < k1 + k2.
BoundReport compute_bound(int n, std::span<const RankSet> ranks);
BoundReport compute_bound(const Instance& inst);  // requires t == 1

// Classic sharp values reproduced for cross-checks.
std::uint64_t ekr_bound(int n, int k);                       // C(n-1, k-1), n >= 2k
std::uint64_t hilton_milner_bound(int n, int k);             // 1 + C(n,k) - C(n-k,k)
std::uint64_t borg_feghali_bound(int n, int r, int s);       // 1 + Σ_{i<=s}[C(n,i)-C(n-r,i)]
std::uint64_t sfq_bound(int n, int k, int m);                // max{m·C(n-1,k-1), C(n,k)-C(n-k,k)+m-1}
// Sharp value for singleton ranks k_1 >= ... >= k_m with n >= k_1 + k_2.
std::uint64_t sfq_problem_bound(int n, std::span<const int> ks);

// True iff F_gamma(l) <= max(F_gamma(1), F_gamma(k_min)) for every l in
// [1, k_min(gamma)].
bool endpoint_check(int n, std::span<const RankSet> ranks, int gamma);

// Compares C(n-l, b-(l+1-u))·C(n-l, a-u) against
// C(n-l, b-(l+1-u)+1)·C(n-l, a-u+1); strictly less whenever n > a + b and
// the live-term ranges u <= a, l+1-u <= b, 1 < u < l hold.
std::strong_ordering logconcavity_check(int n, int l, int u, int a, int b);

struct CrossTBound {
  std::uint64_t maximum = 0;
  std::vector<std::pair<int, std::uint64_t>> frontier_candidates;  // (r, value)
  std::vector<std::pair<int, std::uint64_t>> gamma_candidates;     // (gamma, value)
};

// Conjectured maximum for non-empty cross-t-intersecting rank-set families;
// requires t >= 1 and n >= k1 + k2 - t + 1.
CrossTBound cross_t_bound(int n, std::span<const RankSet> ranks, int t);

}  // namespace xfam
