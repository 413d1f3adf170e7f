#include "xfam/bounds.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace xfam {

namespace {

using U128 = unsigned __int128;

std::uint64_t narrow(U128 v, const char* what) {
  if (v > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error(std::string(what) + " exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

void check_ranks(int n, std::span<const RankSet> ranks) {
  checked_universe(n);
  for (const auto& r : ranks) r.require_universe(n);
}

int max_rank(const RankSet& r) { return r.max(); }

std::pair<int, int> two_largest_maxima(std::span<const RankSet> ranks) {
  int first = 0, second = 0;
  for (const auto& r : ranks) {
    int v = max_rank(r);
    if (v >= first) {
      second = first;
      first = v;
    } else if (v > second) {
      second = v;
    }
  }
  return {first, second};
}

// min over the other families of their largest rank: prefixes longer than
// that force some family empty, so it caps the candidate range.
int ranks_k_min(std::span<const RankSet> ranks, int gamma) {
  int best = kMaxUniverse + 1;
  for (int j = 0; j < static_cast<int>(ranks.size()); ++j) {
    if (j == gamma) continue;
    best = std::min(best, ranks[static_cast<std::size_t>(j)].max());
  }
  return best;
}

}  // namespace

std::uint64_t size_star(int n, const RankSet& r) {
  check_ranks(n, std::span<const RankSet>(&r, 1));
  U128 sum = 0;
  for (int a : r.ranks()) sum += binom(n - 1, a - 1);
  return narrow(sum, "size_star");
}

std::uint64_t size_m1(int n, const RankSet& r, int k) {
  check_ranks(n, std::span<const RankSet>(&r, 1));
  if (k < 1 || k > n) throw std::invalid_argument("size_m1: k must lie in [1, n]");
  U128 sum = 0;
  for (int a : r.ranks()) sum += binom(n, a) - binom(n - k, a);
  return narrow(sum, "size_m1");
}

std::uint64_t size_m2(int n, const RankSet& r, int k) {
  check_ranks(n, std::span<const RankSet>(&r, 1));
  if (k < 1 || k > n) throw std::invalid_argument("size_m2: k must lie in [1, n]");
  U128 sum = 0;
  for (int b : r.ranks()) sum += binom(n - k, b - k);
  return narrow(sum, "size_m2");
}

std::uint64_t m1m2_total(int n, std::span<const RankSet> ranks, int gamma, int l) {
  check_ranks(n, ranks);
  if (ranks.size() < 2)
    throw std::invalid_argument("m1m2_total: at least two families required");
  if (gamma < 0 || gamma >= static_cast<int>(ranks.size()))
    throw std::invalid_argument("m1m2_total: family index out of range");
  int kmin = ranks_k_min(ranks, gamma);
  if (l < 1 || l > kmin)
    throw std::out_of_range("m1m2_total: l=" + std::to_string(l) +
                            " outside [1, k_min=" + std::to_string(kmin) + "]");
  U128 sum = size_m1(n, ranks[static_cast<std::size_t>(gamma)], l);
  for (int j = 0; j < static_cast<int>(ranks.size()); ++j) {
    if (j == gamma) continue;
    sum += size_m2(n, ranks[static_cast<std::size_t>(j)], l);
  }
  return narrow(sum, "m1m2_total");
}

std::string case_name(EqualityCase c) {
  switch (c) {
    case EqualityCase::I: return "i";
    case EqualityCase::II: return "ii";
    case EqualityCase::III: return "iii";
    case EqualityCase::IV: return "iv";
  }
  return "?";
}

BoundReport compute_bound(int n, std::span<const RankSet> ranks) {
  check_ranks(n, ranks);
  if (ranks.size() < 2)
    throw std::invalid_argument("compute_bound: at least two families required");
  BoundReport rep;
  rep.n = n;
  rep.ranks.assign(ranks.begin(), ranks.end());
  auto [k1, k2] = two_largest_maxima(ranks);
  rep.k1 = k1;
  rep.k2 = k2;
  rep.valid = n >= k1 + k2;

  U128 star = 0;
  for (const auto& r : ranks) star += size_star(n, r);
  rep.star_total = narrow(star, "star total");

  int m = static_cast<int>(ranks.size());
  for (int gamma = 0; gamma < m; ++gamma) {
    int kmin = ranks_k_min(ranks, gamma);
    rep.candidates.push_back(
        BoundCandidate{gamma, kmin, m1m2_total(n, ranks, gamma, kmin)});
  }

  rep.maximum = rep.star_total;
  for (const auto& c : rep.candidates) rep.maximum = std::max(rep.maximum, c.value);
  rep.star_argmax = rep.star_total == rep.maximum;
  for (const auto& c : rep.candidates)
    if (c.value == rep.maximum) rep.argmax_gammas.push_back(c.gamma);

  if (rep.star_argmax) rep.predicted.push_back(PredictedCase{EqualityCase::I, -1});
  for (const auto& c : rep.candidates)
    if (c.value == rep.maximum)
      rep.predicted.push_back(PredictedCase{EqualityCase::II, c.gamma});
  if (n == k1 + k2) {
    bool all_singleton = true;
    for (const auto& r : ranks) all_singleton &= r.singleton();
    if (m == 2 && all_singleton)
      rep.predicted.push_back(PredictedCase{EqualityCase::III, -1});
    if (m >= 3 && all_singleton) {
      bool all_equal = true;
      for (const auto& r : ranks) all_equal &= r == ranks[0];
      if (all_equal) rep.predicted.push_back(PredictedCase{EqualityCase::IV, -1});
    }
  }
  return rep;
}

BoundReport compute_bound(const Instance& inst) {
  if (inst.t != 1)
    throw std::invalid_argument("compute_bound applies to t = 1 instances");
  return compute_bound(inst.n, inst.ranks);
}

std::uint64_t ekr_bound(int n, int k) {
  checked_universe(n);
  if (k < 1 || n < 2 * k)
    throw std::invalid_argument("ekr_bound requires 1 <= k and n >= 2k");
  return binom(n - 1, k - 1);
}

std::uint64_t hilton_milner_bound(int n, int k) {
  checked_universe(n);
  if (k < 1 || n < 2 * k)
    throw std::invalid_argument("hilton_milner_bound requires 1 <= k and n >= 2k");
  return 1 + binom(n, k) - binom(n - k, k);
}

std::uint64_t borg_feghali_bound(int n, int r, int s) {
  checked_universe(n);
  if (r < 1 || r > s || s > n)
    throw std::invalid_argument("borg_feghali_bound requires 1 <= r <= s <= n");
  U128 sum = 1;
  for (int i = 1; i <= s; ++i) sum += binom(n, i) - binom(n - r, i);
  return narrow(sum, "borg_feghali_bound");
}

std::uint64_t sfq_bound(int n, int k, int m) {
  checked_universe(n);
  if (k < 1 || n < 2 * k || m < 2)
    throw std::invalid_argument("sfq_bound requires 1 <= k, n >= 2k and m >= 2");
  U128 stars = static_cast<U128>(m) * binom(n - 1, k - 1);
  U128 hm = static_cast<U128>(binom(n, k)) - binom(n - k, k) + m - 1;
  return narrow(stars > hm ? stars : hm, "sfq_bound");
}

std::uint64_t sfq_problem_bound(int n, std::span<const int> ks) {
  checked_universe(n);
  if (ks.size() < 2)
    throw std::invalid_argument("sfq_problem_bound: at least two sizes required");
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 1 || ks[i] > n)
      throw std::invalid_argument("sfq_problem_bound: sizes must lie in [1, n]");
    if (i > 0 && ks[i] > ks[i - 1])
      throw std::invalid_argument("sfq_problem_bound: sizes must be non-increasing");
  }
  if (n < ks[0] + ks[1])
    throw std::invalid_argument("sfq_problem_bound requires n >= k1 + k2");
  int km = ks.back();
  U128 stars = 0;
  for (int k : ks) stars += binom(n - 1, k - 1);
  U128 mixed = static_cast<U128>(binom(n, ks[0])) - binom(n - km, ks[0]);
  for (std::size_t i = 1; i < ks.size(); ++i) mixed += binom(n - km, ks[i] - km);
  return narrow(stars > mixed ? stars : mixed, "sfq_problem_bound");
}

bool endpoint_check(int n, std::span<const RankSet> ranks, int gamma) {
  check_ranks(n, ranks);
  if (gamma < 0 || gamma >= static_cast<int>(ranks.size()))
    throw std::invalid_argument("endpoint_check: family index out of range");
  int kmin = ranks_k_min(ranks, gamma);
  std::uint64_t lo = m1m2_total(n, ranks, gamma, 1);
  std::uint64_t hi = m1m2_total(n, ranks, gamma, kmin);
  std::uint64_t cap = std::max(lo, hi);
  for (int l = 2; l < kmin; ++l)
    if (m1m2_total(n, ranks, gamma, l) > cap) return false;
  return true;
}

std::strong_ordering logconcavity_check(int n, int l, int u, int a, int b) {
  U128 lhs = static_cast<U128>(binom(n - l, b - (l + 1 - u))) * binom(n - l, a - u);
  U128 rhs =
      static_cast<U128>(binom(n - l, b - (l + 1 - u) + 1)) * binom(n - l, a - u + 1);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

CrossTBound cross_t_bound(int n, std::span<const RankSet> ranks, int t) {
  check_ranks(n, ranks);
  if (ranks.size() < 2)
    throw std::invalid_argument("cross_t_bound: at least two families required");
  if (t < 1) throw std::invalid_argument("cross_t_bound: t must be >= 1");
  auto [k1, k2] = two_largest_maxima(ranks);
  if (n < k1 + k2 - t + 1)
    throw std::invalid_argument("cross_t_bound requires n >= k1 + k2 - t + 1");
  // smallest per-family maximum: frontier parameters beyond it would force
  // some family empty
  int k3 = kMaxUniverse + 1;
  for (const auto& r : ranks) k3 = std::min(k3, r.max());

  CrossTBound out;
  for (int r = 0; r <= k3 - t; ++r) {
    U128 sum = 0;
    for (const auto& rs : ranks)
      for (int a : rs.ranks())
        for (int i = r; i <= 2 * r; ++i)
          sum += static_cast<U128>(binom(t + 2 * r, t + i)) *
                 binom(n - t - 2 * r, a - t - i);
    out.frontier_candidates.emplace_back(r, narrow(sum, "cross_t frontier term"));
  }
  int m = static_cast<int>(ranks.size());
  for (int gamma = 0; gamma < m; ++gamma) {
    int kmin = ranks_k_min(ranks, gamma);
    U128 sum = 0;
    for (int a : ranks[static_cast<std::size_t>(gamma)].ranks())
      for (int c = t; c <= a; ++c)
        sum += static_cast<U128>(binom(kmin, c)) * binom(n - kmin, a - c);
    for (int j = 0; j < m; ++j) {
      if (j == gamma) continue;
      for (int b : ranks[static_cast<std::size_t>(j)].ranks())
        sum += binom(n - kmin, b - kmin);
    }
    out.gamma_candidates.emplace_back(gamma, narrow(sum, "cross_t gamma term"));
  }
  for (const auto& [r, v] : out.frontier_candidates)
    out.maximum = std::max(out.maximum, v);
  for (const auto& [g, v] : out.gamma_candidates)
    out.maximum = std::max(out.maximum, v);
  return out;
}

}  // namespace xfam
