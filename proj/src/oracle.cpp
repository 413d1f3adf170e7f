#include "xfam/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <stdexcept>

#include "xfam/bounds.hpp"
#include "xfam/extremal.hpp"

namespace xfam {

namespace {

constexpr std::uint64_t kNoFail = std::numeric_limits<std::uint64_t>::max();

std::vector<SetMask> lex_layer(int n, int k) {
  std::vector<SetMask> out;
  out.reserve(binom(n, k));
  for_each_kset_lex(n, k, [&](SetMask m) { out.push_back(m); });
  return out;
}

// For each b-set position p (1-based lex order), the prefix minimum of the
// first-fail index: the smallest 1-based lex index of an a-set meeting that
// b-set in < t elements, kNoFail when every a-set is fine. The frontier of
// an L-initial a-family of size s is then the longest prefix whose minimum
// stays above s.
class FrontierCache {
 public:
  FrontierCache(int n, int t) : n_(n), t_(t) {}

  std::uint64_t frontier(int a, std::uint64_t s, int b) {
    if (s == 0) return binom(n_, b);
    const auto& table = prefix_min(a, b);
    auto it = std::partition_point(table.begin(), table.end(),
                                   [&](std::uint64_t m) { return m > s; });
    return static_cast<std::uint64_t>(it - table.begin());
  }

 private:
  const std::vector<SetMask>& layer(int k) {
    auto it = layers_.find(k);
    if (it == layers_.end()) it = layers_.emplace(k, lex_layer(n_, k)).first;
    return it->second;
  }

  const std::vector<std::uint64_t>& prefix_min(int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;
    const auto& as = layer(a);
    const auto& bs = layer(b);
    std::vector<std::uint64_t> table;
    table.reserve(bs.size());
    std::uint64_t running = kNoFail;
    for (SetMask bm : bs) {
      std::uint64_t fail = kNoFail;
      for (std::size_t i = 0; i < as.size(); ++i) {
        if (std::popcount(as[i] & bm) < t_) {
          fail = i + 1;
          break;
        }
      }
      running = std::min(running, fail);
      table.push_back(running);
    }
    return tables_.emplace(key, std::move(table)).first->second;
  }

  int n_;
  int t_;
  std::map<int, std::vector<SetMask>> layers_;
  std::map<std::pair<int, int>, std::vector<std::uint64_t>> tables_;
};

}  // namespace

std::uint64_t transversal_frontier(int n, int a, std::uint64_t s, int b, int t) {
  checked_universe(n);
  if (a < 1 || a > n || b < 1 || b > n)
    throw std::invalid_argument("transversal_frontier: ranks must lie in [1, n]");
  if (t < 1) throw std::invalid_argument("transversal_frontier: t must be >= 1");
  if (s > binom(n, a))
    throw std::out_of_range("transversal_frontier: s exceeds C(n, a)");
  FrontierCache cache(n, t);
  return cache.frontier(a, s, b);
}

namespace {

struct Var {
  int family;
  int rank;
  std::uint64_t full;  // C(n, rank)
};

// Branch and bound over per-layer prefix sizes. Variables run family by
// family with ranks in decreasing order; caps carry the frontier
// constraints imposed by assigned layers of other families, so any
// assignment below the caps is feasible.
class LinitialSearch {
 public:
  LinitialSearch(const Instance& inst) : inst_(inst), cache_(inst.n, 1) {
    for (int j = 0; j < inst.m(); ++j) {
      const auto& r = inst.ranks[static_cast<std::size_t>(j)];
      family_first_.push_back(static_cast<int>(vars_.size()));
      for (auto it = r.ranks().rbegin(); it != r.ranks().rend(); ++it)
        vars_.push_back(Var{j, *it, binom(inst.n, *it)});
      family_last_.push_back(static_cast<int>(vars_.size()) - 1);
    }
  }

  std::uint64_t run_max() {
    std::vector<std::uint64_t> caps;
    caps.reserve(vars_.size());
    for (const Var& v : vars_) caps.push_back(v.full);
    std::vector<std::uint64_t> family_sum(static_cast<std::size_t>(inst_.m()), 0);
    best_ = 0;
    dfs_max(0, caps, 0, family_sum);
    return best_;
  }

  // Lexicographically least profile attaining target, in variable order.
  std::vector<std::uint64_t> lex_least(std::uint64_t target) {
    std::vector<std::uint64_t> caps;
    for (const Var& v : vars_) caps.push_back(v.full);
    std::vector<std::uint64_t> family_sum(static_cast<std::size_t>(inst_.m()), 0);
    std::vector<std::uint64_t> profile;
    std::uint64_t needed = target;
    for (std::size_t d = 0; d < vars_.size(); ++d) {
      bool fixed = false;
      for (std::uint64_t s = 0; s <= std::min(caps[d], needed); ++s) {
        if (!feasible_value(d, s, family_sum)) continue;
        auto caps2 = caps;
        apply_value(d, s, caps2);
        auto sums2 = family_sum;
        sums2[static_cast<std::size_t>(vars_[d].family)] += s;
        if (can_reach(d + 1, caps2, sums2, needed - s)) {
          caps = std::move(caps2);
          family_sum = std::move(sums2);
          needed -= s;
          profile.push_back(s);
          fixed = true;
          break;
        }
      }
      if (!fixed)
        throw std::logic_error("lex_least: no value extends to the known maximum");
    }
    return profile;
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Var>& vars() const { return vars_; }

 private:
  bool feasible_value(std::size_t d, std::uint64_t s,
                      const std::vector<std::uint64_t>& family_sum) const {
    const Var& v = vars_[d];
    if (static_cast<int>(d) == family_last_[static_cast<std::size_t>(v.family)] &&
        family_sum[static_cast<std::size_t>(v.family)] + s == 0)
      return false;
    return true;
  }

  void apply_value(std::size_t d, std::uint64_t s, std::vector<std::uint64_t>& caps) {
    if (s == 0) return;
    const Var& v = vars_[d];
    for (std::size_t e = d + 1; e < vars_.size(); ++e) {
      if (vars_[e].family == v.family) continue;
      std::uint64_t f = cache_.frontier(v.rank, s, vars_[e].rank);
      caps[e] = std::min(caps[e], f);
    }
  }

  void dfs_max(std::size_t d, std::vector<std::uint64_t>& caps, std::uint64_t cur,
               std::vector<std::uint64_t>& family_sum) {
    ++nodes_;
    if (d == vars_.size()) {
      best_ = std::max(best_, cur);
      return;
    }
    std::uint64_t optimistic = cur;
    for (std::size_t e = d; e < vars_.size(); ++e) optimistic += caps[e];
    if (optimistic <= best_) return;
    for (std::uint64_t s = caps[d] + 1; s-- > 0;) {
      if (!feasible_value(d, s, family_sum)) continue;
      auto caps2 = caps;
      apply_value(d, s, caps2);
      family_sum[static_cast<std::size_t>(vars_[d].family)] += s;
      dfs_max(d + 1, caps2, cur + s, family_sum);
      family_sum[static_cast<std::size_t>(vars_[d].family)] -= s;
    }
  }

  // Whether some completion adds exactly `needed`. Values above `needed`
  // would overshoot the known maximum, so they are never tried.
  bool can_reach(std::size_t d, std::vector<std::uint64_t>& caps,
                 std::vector<std::uint64_t>& family_sum, std::uint64_t needed) {
    ++nodes_;
    if (d == vars_.size()) return needed == 0;
    std::uint64_t optimistic = 0;
    for (std::size_t e = d; e < vars_.size(); ++e) optimistic += caps[e];
    if (optimistic < needed) return false;
    for (std::uint64_t s = std::min(caps[d], needed) + 1; s-- > 0;) {
      if (!feasible_value(d, s, family_sum)) continue;
      auto caps2 = caps;
      apply_value(d, s, caps2);
      family_sum[static_cast<std::size_t>(vars_[d].family)] += s;
      bool ok = can_reach(d + 1, caps2, family_sum, needed - s);
      family_sum[static_cast<std::size_t>(vars_[d].family)] -= s;
      if (ok) return true;
    }
    return false;
  }

  const Instance& inst_;
  FrontierCache cache_;
  std::vector<Var> vars_;
  std::vector<int> family_first_, family_last_;
  std::uint64_t best_ = 0;
  std::uint64_t nodes_ = 0;
};

FamilyTuple materialize_linitial(const Instance& inst, const std::vector<Var>& vars,
                                 const std::vector<std::uint64_t>& profile) {
  FamilyTuple tuple{inst.n, inst.ranks, {}};
  for (int j = 0; j < inst.m(); ++j) tuple.families.emplace_back(inst.n);
  for (std::size_t d = 0; d < vars.size(); ++d) {
    SetFamily prefix = l_initial(inst.n, vars[d].rank, profile[d]);
    prefix.for_each_mask([&](SetMask m) {
      tuple.families[static_cast<std::size_t>(vars[d].family)].insert_mask(m);
    });
  }
  return tuple;
}

std::vector<std::vector<LayerCount>> profile_by_family(
    const Instance& inst, const std::vector<Var>& vars,
    const std::vector<std::uint64_t>& values) {
  std::vector<std::vector<LayerCount>> out(static_cast<std::size_t>(inst.m()));
  for (std::size_t d = 0; d < vars.size(); ++d)
    out[static_cast<std::size_t>(vars[d].family)].push_back(
        LayerCount{vars[d].rank, values[d]});
  return out;
}

}  // namespace

OracleResult linitial_oracle(const Instance& inst, const OracleOptions& opts) {
  if (inst.t != 1)
    throw std::domain_error(
        "linitial_oracle supports t = 1 only: the L-initial reduction has no "
        "known analogue for cross-t-intersecting families");
  if (inst.n > opts.max_n)
    throw std::domain_error("linitial_oracle: n=" + std::to_string(inst.n) +
                            " exceeds the guard max_n=" + std::to_string(opts.max_n) +
                            " (raise it explicitly to enter untested territory)");
  auto start = std::chrono::steady_clock::now();
  LinitialSearch search(inst);
  std::uint64_t maximum = search.run_max();
  std::vector<std::uint64_t> profile = search.lex_least(maximum);

  OracleResult res;
  res.maximum = maximum;
  res.method = OracleMethod::LInitial;
  res.profile = profile_by_family(inst, search.vars(), profile);
  res.witness = materialize_linitial(inst, search.vars(), profile);
  res.nodes = search.nodes();
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
  return res;
}

namespace {

class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const Instance& inst, const OracleOptions& opts) : inst_(inst) {
    int n = inst.n;
    for (int j = 0; j < inst.m(); ++j) {
      const auto& r = inst.ranks[static_cast<std::size_t>(j)];
      std::vector<SetMask> sets;
      std::uint64_t total = 0;
      for (int a : r.ranks()) {
        std::uint64_t layer_size = binom(n, a);
        if (layer_size > opts.max_layer_sets)
          throw std::domain_error(
              "exhaustive_oracle: layer C(" + std::to_string(n) + "," +
              std::to_string(a) + ")=" + std::to_string(layer_size) +
              " exceeds the per-layer cap " + std::to_string(opts.max_layer_sets) +
              "; the full search space has 2^" + std::to_string(search_bits(inst)) +
              " tuples");
        total += layer_size;
        for_each_kset_lex(n, a, [&](SetMask m) { sets.push_back(m); });
      }
      if (total > 64)
        throw std::domain_error(
            "exhaustive_oracle: family " + std::to_string(j + 1) + " has " +
            std::to_string(total) + " candidate sets; at most 64 are supported");
      universe_.push_back(std::move(sets));
    }
    int m = inst.m();
    compat_.resize(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      compat_[static_cast<std::size_t>(j)].resize(universe_[static_cast<std::size_t>(j)].size());
      for (std::size_t p = 0; p < universe_[static_cast<std::size_t>(j)].size(); ++p) {
        auto& row = compat_[static_cast<std::size_t>(j)][p];
        row.assign(static_cast<std::size_t>(m), 0);
        for (int j2 = j + 1; j2 < m; ++j2) {
          std::uint64_t mask = 0;
          const auto& u2 = universe_[static_cast<std::size_t>(j2)];
          for (std::size_t q = 0; q < u2.size(); ++q)
            if (std::popcount(universe_[static_cast<std::size_t>(j)][p] & u2[q]) >= inst.t)
              mask |= std::uint64_t{1} << q;
          row[static_cast<std::size_t>(j2)] = mask;
        }
      }
    }
  }

  static std::uint64_t search_bits(const Instance& inst) {
    std::uint64_t bits = 0;
    for (const auto& r : inst.ranks)
      for (int a : r.ranks()) bits += binom(inst.n, a);
    return bits;
  }

  void run() {
    std::vector<std::uint64_t> alive;
    for (const auto& u : universe_)
      alive.push_back(u.size() == 64 ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << u.size()) - 1);
    std::vector<std::uint64_t> chosen(universe_.size(), 0);
    dfs_items(0, 0, alive, 0, chosen);
  }

  std::uint64_t best = 0;
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> best_chosen;
  const std::vector<std::vector<SetMask>>& universe() const { return universe_; }

 private:
  void dfs_items(int j, std::size_t p, std::vector<std::uint64_t>& alive,
                 std::uint64_t total, std::vector<std::uint64_t>& chosen) {
    ++nodes;
    int m = inst_.m();
    if (j == m - 1) {
      // the last family takes every set compatible with all earlier choices
      int extra = std::popcount(alive[static_cast<std::size_t>(j)]);
      if (extra == 0) return;
      if (total + static_cast<std::uint64_t>(extra) > best) {
        best = total + static_cast<std::uint64_t>(extra);
        chosen[static_cast<std::size_t>(j)] = alive[static_cast<std::size_t>(j)];
        best_chosen = chosen;
        chosen[static_cast<std::size_t>(j)] = 0;
      }
      return;
    }
    const auto& u = universe_[static_cast<std::size_t>(j)];
    // undecided items of the current family from position p onward
    std::uint64_t rest_here =
        p >= 64 ? 0 : (alive[static_cast<std::size_t>(j)] >> p) << p;
    std::uint64_t optimistic = total + static_cast<std::uint64_t>(std::popcount(rest_here));
    for (int j2 = j + 1; j2 < m; ++j2)
      optimistic += static_cast<std::uint64_t>(
          std::popcount(alive[static_cast<std::size_t>(j2)]));
    if (optimistic <= best) return;
    if (p == u.size()) {
      if (chosen[static_cast<std::size_t>(j)] == 0) return;
      dfs_items(j + 1, 0, alive, total, chosen);
      return;
    }
    if ((alive[static_cast<std::size_t>(j)] >> p & 1) != 0) {
      auto alive2 = alive;
      for (int j2 = j + 1; j2 < m; ++j2)
        alive2[static_cast<std::size_t>(j2)] &=
            compat_[static_cast<std::size_t>(j)][p][static_cast<std::size_t>(j2)];
      chosen[static_cast<std::size_t>(j)] |= std::uint64_t{1} << p;
      dfs_items(j, p + 1, alive2, total + 1, chosen);
      chosen[static_cast<std::size_t>(j)] &= ~(std::uint64_t{1} << p);
      auto alive3 = alive;
      alive3[static_cast<std::size_t>(j)] &= ~(std::uint64_t{1} << p);
      dfs_items(j, p + 1, alive3, total, chosen);
    } else {
      dfs_items(j, p + 1, alive, total, chosen);
    }
  }

  const Instance& inst_;
  std::vector<std::vector<SetMask>> universe_;
  std::vector<std::vector<std::vector<std::uint64_t>>> compat_;
};

}  // namespace

OracleResult exhaustive_oracle(const Instance& inst, const OracleOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  ExhaustiveSearch search(inst, opts);
  search.run();
  if (search.best == 0)
    throw std::domain_error("exhaustive_oracle: no non-empty cross-intersecting tuple exists");

  OracleResult res;
  res.maximum = search.best;
  res.method = OracleMethod::Exhaustive;
  res.witness = FamilyTuple{inst.n, inst.ranks, {}};
  for (int j = 0; j < inst.m(); ++j) {
    SetFamily f(inst.n);
    const auto& u = search.universe()[static_cast<std::size_t>(j)];
    std::uint64_t chosen = search.best_chosen[static_cast<std::size_t>(j)];
    for (std::size_t p = 0; p < u.size(); ++p)
      if ((chosen >> p & 1) != 0) f.insert_mask(u[p]);
    res.witness.families.push_back(std::move(f));
  }
  for (int j = 0; j < inst.m(); ++j) {
    const auto& r = inst.ranks[static_cast<std::size_t>(j)];
    std::vector<LayerCount> counts;
    for (auto it = r.ranks().rbegin(); it != r.ranks().rend(); ++it)
      counts.push_back(LayerCount{
          *it, res.witness.families[static_cast<std::size_t>(j)].layer_masks(*it).size()});
    res.profile.push_back(std::move(counts));
  }
  res.nodes = search.nodes;
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
  return res;
}

SweepReport verify_sweep(std::span<const Instance> instances,
                         const OracleOptions& opts) {
  std::vector<Instance> sorted(instances.begin(), instances.end());
  std::stable_sort(sorted.begin(), sorted.end(), instance_less);

  SweepReport report;
  for (const Instance& inst : sorted) {
    if (inst.t != 1) {
      report.skipped.push_back(SweepSkip{inst, "t != 1"});
      continue;
    }
    if (!inst.bound_applies()) {
      report.skipped.push_back(SweepSkip{inst, "n < k1 + k2"});
      continue;
    }
    if (inst.n > opts.max_n) {
      report.skipped.push_back(SweepSkip{inst, "n exceeds the oracle guard"});
      continue;
    }
    BoundReport bound = compute_bound(inst);
    OracleResult oracle = linitial_oracle(inst, opts);
    bool equal = oracle.maximum == bound.maximum;
    std::string classified;
    if (!equal) {
      ++report.mismatches;
      classified = "none (bound mismatch)";
    } else {
      Classification cls = classify(oracle.witness, inst);
      if (!cls.maximal || cls.matches.empty()) {
        classified = "none";
        ++report.unclassified;
      } else {
        for (const auto& match : cls.matches) {
          if (!classified.empty()) classified += "+";
          classified += case_name(match.kase);
          if (match.kase == EqualityCase::II)
            classified += "(gamma=" + std::to_string(match.gamma + 1) + ")";
        }
      }
    }
    report.entries.push_back(SweepEntry{inst, oracle.maximum, bound.maximum, equal,
                                        oracle.profile, std::move(classified)});
  }
  return report;
}

}  // namespace xfam
