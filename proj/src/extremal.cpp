#include "xfam/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace xfam {

namespace {

SetFamily filter_layers(int n, const RankSet& r, auto pred) {
  SetFamily out(n);
  for (int a : r.ranks())
    for_each_kset_lex(n, a, [&](SetMask m) {
      if (pred(m)) out.insert_mask(m);
    });
  return out;
}

std::vector<int> identity_permutation(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

SetMask apply_permutation(SetMask m, std::span<const int> perm) {
  SetMask out = 0;
  for (SetMask rest = m; rest != 0; rest &= rest - 1) {
    int e = std::countr_zero(rest) + 1;
    out |= element_bit(perm[static_cast<std::size_t>(e - 1)]);
  }
  return out;
}

}  // namespace

SetFamily construct_star(int n, const RankSet& r) {
  checked_universe(n);
  r.require_universe(n);
  return filter_layers(n, r, [](SetMask m) { return (m & element_bit(1)) != 0; });
}

SetFamily construct_m1(int n, const RankSet& r, int k) {
  checked_universe(n);
  r.require_universe(n);
  if (k < 1 || k > n) throw std::invalid_argument("construct_m1: k must lie in [1, n]");
  SetMask prefix = prefix_mask(k);
  return filter_layers(n, r, [prefix](SetMask m) { return (m & prefix) != 0; });
}

SetFamily construct_m2(int n, const RankSet& r, int k) {
  checked_universe(n);
  r.require_universe(n);
  if (k < 1 || k > n) throw std::invalid_argument("construct_m2: k must lie in [1, n]");
  SetMask prefix = prefix_mask(k);
  return filter_layers(n, r,
                       [prefix](SetMask m) { return (m & prefix) == prefix; });
}

FamilyTuple construct_case_iii(int n, int k1, int k2, const SetFamily& f2) {
  checked_universe(n);
  if (k1 < 1 || k2 < 1 || n != k1 + k2)
    throw std::invalid_argument("construct_case_iii requires n = k1 + k2");
  if (f2.universe() != n)
    throw std::invalid_argument("construct_case_iii: F2 universe mismatch");
  for (int card : f2.cardinalities())
    if (card != k2)
      throw std::invalid_argument("construct_case_iii: F2 must consist of k2-sets");
  if (f2.empty() || f2.size() >= binom(n, k2))
    throw std::invalid_argument(
        "construct_case_iii requires 0 < |F2| < C(n, k2)");
  SetMask full = prefix_mask(n);
  SetFamily complements(n);
  f2.for_each_mask([&](SetMask m) { complements.insert_mask(full & ~m); });
  SetFamily f1(n);
  for_each_kset_lex(n, k1, [&](SetMask m) {
    if (!complements.contains_mask(m)) f1.insert_mask(m);
  });
  return FamilyTuple{n, {RankSet{k1}, RankSet{k2}}, {std::move(f1), f2}};
}

FamilyTuple construct_case_iv(int n, int k, int m, const SetFamily& f) {
  checked_universe(n);
  if (k < 1 || n != 2 * k)
    throw std::invalid_argument("construct_case_iv requires n = 2k");
  if (m < 3) throw std::invalid_argument("construct_case_iv requires m >= 3");
  if (f.universe() != n)
    throw std::invalid_argument("construct_case_iv: family universe mismatch");
  for (int card : f.cardinalities())
    if (card != k)
      throw std::domain_error("construct_case_iv: family must consist of k-sets");
  if (!is_intersecting(f, 1))
    throw std::domain_error("construct_case_iv: family is not intersecting");
  if (f.size() != binom(n - 1, k - 1))
    throw std::domain_error("construct_case_iv: family size must be C(n-1, k-1)");
  FamilyTuple out{n, {}, {}};
  for (int j = 0; j < m; ++j) {
    out.ranks.push_back(RankSet{k});
    out.families.push_back(f);
  }
  return out;
}

namespace {

// F equals the family of all R-sets containing pivot iff the size matches
// and every member contains pivot.
bool is_star_at(const SetFamily& f, const RankSet& r, int pivot) {
  if (f.size() != size_star(f.universe(), r)) return false;
  bool ok = true;
  SetMask bit = element_bit(pivot);
  f.for_each_mask([&](SetMask m) { ok &= (m & bit) != 0; });
  return ok;
}

bool is_m1_at(const SetFamily& f, const RankSet& r, SetMask tmask, int l) {
  if (f.size() != size_m1(f.universe(), r, l)) return false;
  bool ok = true;
  f.for_each_mask([&](SetMask m) { ok &= (m & tmask) != 0; });
  return ok;
}

bool is_m2_at(const SetFamily& f, const RankSet& r, SetMask tmask, int l) {
  if (f.size() != size_m2(f.universe(), r, l)) return false;
  bool ok = true;
  f.for_each_mask([&](SetMask m) { ok &= (m & tmask) == tmask; });
  return ok;
}

// Permutation sending the elements of tmask (ascending) to 1..l and the
// remaining elements, in order, to l+1..n.
std::vector<int> prefix_permutation(int n, SetMask tmask, int l) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  int next_low = 1, next_high = l + 1;
  for (int e = 1; e <= n; ++e) {
    if ((tmask & element_bit(e)) != 0)
      perm[static_cast<std::size_t>(e - 1)] = next_low++;
    else
      perm[static_cast<std::size_t>(e - 1)] = next_high++;
  }
  return perm;
}

bool matches_case_iii(const FamilyTuple& tuple, int first, int second, int k1,
                      int k2) {
  const SetFamily& f1 = tuple.families[static_cast<std::size_t>(first)];
  const SetFamily& f2 = tuple.families[static_cast<std::size_t>(second)];
  if (tuple.ranks[static_cast<std::size_t>(first)] != RankSet{k1} ||
      tuple.ranks[static_cast<std::size_t>(second)] != RankSet{k2})
    return false;
  if (f2.empty() || f2.size() >= binom(tuple.n, k2)) return false;
  if (f1.size() + f2.size() != binom(tuple.n, k1)) return false;
  SetMask full = prefix_mask(tuple.n);
  bool ok = true;
  f2.for_each_mask([&](SetMask m) { ok &= !f1.contains_mask(full & ~m); });
  return ok;
}

}  // namespace

Classification classify(const FamilyTuple& tuple, const Instance& inst) {
  validate_tuple(tuple);
  if (tuple.n != inst.n || tuple.m() != inst.m())
    throw std::invalid_argument("classify: tuple does not match the instance shape");
  for (int j = 0; j < tuple.m(); ++j) {
    if (tuple.ranks[static_cast<std::size_t>(j)] !=
        inst.ranks[static_cast<std::size_t>(j)])
      throw std::invalid_argument("classify: tuple rank sets do not match the instance");
    if (tuple.families[static_cast<std::size_t>(j)].empty())
      throw std::domain_error("classify: family " + std::to_string(j + 1) +
                              " is empty");
  }
  if (!is_cross_intersecting(tuple, 1))
    throw std::domain_error("classify: tuple is not cross-intersecting");

  BoundReport bound = compute_bound(inst);
  Classification out;
  out.tuple_total = total_size(tuple);
  out.bound_maximum = bound.maximum;
  out.maximal = out.tuple_total == bound.maximum;
  if (!out.maximal) return out;

  int n = tuple.n;
  int m = tuple.m();

  // case i: a common star after relabeling, i.e. a shared pivot element
  for (int x = 1; x <= n; ++x) {
    bool all = true;
    for (int j = 0; all && j < m; ++j)
      all = is_star_at(tuple.families[static_cast<std::size_t>(j)],
                       tuple.ranks[static_cast<std::size_t>(j)], x);
    if (all) {
      CaseMatch match{EqualityCase::I, -1, identity_permutation(n)};
      if (x != 1) std::swap(match.permutation[0], match.permutation[static_cast<std::size_t>(x - 1)]);
      out.matches.push_back(std::move(match));
      break;
    }
  }

  // case ii: some pivot gamma with a common l-set T, gamma's family meeting
  // T and all others containing T
  for (int gamma = 0; gamma < m; ++gamma) {
    int l = inst.k_min(gamma);
    SetMask common = prefix_mask(n);
    for (int j = 0; j < m; ++j) {
      if (j == gamma) continue;
      tuple.families[static_cast<std::size_t>(j)].for_each_mask(
          [&](SetMask mm) { common &= mm; });
    }
    if (std::popcount(common) < l) continue;
    std::vector<int> pool;
    for (int e = 1; e <= n; ++e)
      if ((common & element_bit(e)) != 0) pool.push_back(e);
    bool found = false;
    for_each_pool_subset(pool, l, SetMask{0}, [&](SetMask tmask) {
      if (found) return;
      if (!is_m1_at(tuple.families[static_cast<std::size_t>(gamma)],
                    tuple.ranks[static_cast<std::size_t>(gamma)], tmask, l))
        return;
      bool others = true;
      for (int j = 0; others && j < m; ++j) {
        if (j == gamma) continue;
        others = is_m2_at(tuple.families[static_cast<std::size_t>(j)],
                          tuple.ranks[static_cast<std::size_t>(j)], tmask, l);
      }
      if (!others) return;
      found = true;
      out.matches.push_back(
          CaseMatch{EqualityCase::II, gamma, prefix_permutation(n, tmask, l)});
    });
  }

  // case iii: uniform pair at the n = k1 + k2 boundary
  if (n == inst.k1() + inst.k2() && m == 2) {
    int k1 = inst.k1(), k2 = inst.k2();
    bool matched = matches_case_iii(tuple, 0, 1, k1, k2);
    if (!matched && k1 != k2) matched = matches_case_iii(tuple, 1, 0, k1, k2);
    if (!matched && k1 == k2) matched = matches_case_iii(tuple, 1, 0, k1, k2);
    if (matched)
      out.matches.push_back(CaseMatch{EqualityCase::III, -1, identity_permutation(n)});
  }

  // case iv: m >= 3 identical intersecting families of k-sets at n = 2k
  if (m >= 3) {
    bool shape = true;
    for (const auto& r : tuple.ranks) shape &= r.singleton() && r == tuple.ranks[0];
    int k = tuple.ranks[0].max();
    if (shape && n == 2 * k) {
      bool same = true;
      for (int j = 1; same && j < m; ++j)
        same = tuple.families[static_cast<std::size_t>(j)] == tuple.families[0];
      if (same && tuple.families[0].size() == binom(n - 1, k - 1) &&
          is_intersecting(tuple.families[0], 1))
        out.matches.push_back(
            CaseMatch{EqualityCase::IV, -1, identity_permutation(n)});
    }
  }
  return out;
}

namespace {

// Per-element signature: for each (family, cardinality) the number of
// members containing the element. Only elements with equal signatures can
// map to each other.
std::vector<std::vector<int>> element_signatures(const FamilyTuple& t) {
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(t.n));
  for (int j = 0; j < t.m(); ++j) {
    for (const auto& [card, masks] : t.families[static_cast<std::size_t>(j)].layers()) {
      std::vector<int> count(static_cast<std::size_t>(t.n), 0);
      for (SetMask m : masks)
        for (SetMask rest = m; rest != 0; rest &= rest - 1)
          ++count[static_cast<std::size_t>(std::countr_zero(rest))];
      for (int e = 0; e < t.n; ++e)
        sig[static_cast<std::size_t>(e)].push_back(count[static_cast<std::size_t>(e)]);
    }
  }
  return sig;
}

struct IsoSearch {
  const FamilyTuple& a;
  const FamilyTuple& b;
  std::vector<std::vector<int>> sig_a, sig_b;
  std::vector<int> image;      // image[e-1] = pi(e), 0 when unassigned
  std::vector<bool> used;      // which elements of b are taken
  bool found = false;
  std::vector<int> witness;

  bool full_check() const {
    for (int j = 0; j < a.m(); ++j) {
      const auto& fb = b.families[static_cast<std::size_t>(j)];
      bool ok = true;
      a.families[static_cast<std::size_t>(j)].for_each_mask([&](SetMask m) {
        ok &= fb.contains_mask(apply_permutation(m, image));
      });
      if (!ok) return false;
    }
    return true;
  }

  void run(int e) {
    if (found) return;
    if (e > a.n) {
      if (full_check()) {
        found = true;
        witness = image;
      }
      return;
    }
    for (int v = 1; v <= a.n && !found; ++v) {
      if (used[static_cast<std::size_t>(v - 1)]) continue;
      if (sig_a[static_cast<std::size_t>(e - 1)] != sig_b[static_cast<std::size_t>(v - 1)])
        continue;
      image[static_cast<std::size_t>(e - 1)] = v;
      used[static_cast<std::size_t>(v - 1)] = true;
      if (partial_ok(e)) run(e + 1);
      used[static_cast<std::size_t>(v - 1)] = false;
      image[static_cast<std::size_t>(e - 1)] = 0;
    }
  }

  // Every member of a whose elements are all assigned must map into b.
  bool partial_ok(int upto) const {
    SetMask assigned = 0;
    for (int e = 1; e <= upto; ++e) assigned |= element_bit(e);
    for (int j = 0; j < a.m(); ++j) {
      const auto& fb = b.families[static_cast<std::size_t>(j)];
      bool ok = true;
      a.families[static_cast<std::size_t>(j)].for_each_mask([&](SetMask m) {
        if (!ok || (m & ~assigned) != 0) return;
        ok = fb.contains_mask(apply_permutation(m, image));
      });
      if (!ok) return false;
    }
    return true;
  }
};

}  // namespace

IsomorphismResult are_isomorphic(const FamilyTuple& a, const FamilyTuple& b) {
  validate_tuple(a);
  validate_tuple(b);
  if (a.n != b.n || a.m() != b.m())
    throw std::invalid_argument("are_isomorphic: tuples differ in shape");
  for (int j = 0; j < a.m(); ++j)
    if (a.ranks[static_cast<std::size_t>(j)] != b.ranks[static_cast<std::size_t>(j)])
      throw std::invalid_argument("are_isomorphic: rank sets differ");
  for (int j = 0; j < a.m(); ++j) {
    const auto& fa = a.families[static_cast<std::size_t>(j)];
    const auto& fb = b.families[static_cast<std::size_t>(j)];
    if (fa.size() != fb.size()) return {};
    for (const auto& [card, masks] : fa.layers())
      if (masks.size() != fb.layer_masks(card).size()) return {};
  }
  IsoSearch search{a, b, element_signatures(a), element_signatures(b),
                   {},    {},    false,         {}};
  {
    auto sorted_a = search.sig_a;
    auto sorted_b = search.sig_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return {};
  }
  search.image.assign(static_cast<std::size_t>(a.n), 0);
  search.used.assign(static_cast<std::size_t>(a.n), false);
  search.run(1);
  if (!search.found) return {};
  return IsomorphismResult{true, search.witness};
}

}  // namespace xfam
