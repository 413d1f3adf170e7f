#include "xfam/compress.hpp"

#include <stdexcept>
#include <string>

namespace xfam {

namespace {

void check_shift_pair(int i, int j, int n) {
  if (i < 1 || j > n || i >= j)
    throw std::invalid_argument("shift requires 1 <= i < j <= n, got i=" +
                                std::to_string(i) + " j=" + std::to_string(j));
}

SetMask shift_mask(SetMask a, int i, int j, const SetFamily& host) {
  SetMask bi = element_bit(i);
  SetMask bj = element_bit(j);
  if ((a & bj) == 0 || (a & bi) != 0) return a;
  SetMask moved = (a & ~bj) | bi;
  return host.contains_mask(moved) ? a : moved;
}

}  // namespace

ElementSet shift_set(const ElementSet& a, int i, int j, const SetFamily& host) {
  check_shift_pair(i, j, host.universe());
  if (!host.contains(a))
    throw std::invalid_argument("shift_set: the set is not a member of the host family");
  return ElementSet(host.universe(), shift_mask(a.mask(), i, j, host));
}

SetFamily shift_family(const SetFamily& f, int i, int j) {
  check_shift_pair(i, j, f.universe());
  SetFamily out(f.universe());
  f.for_each_mask([&](SetMask m) { out.insert_mask(shift_mask(m, i, j, f)); });
  return out;
}

SetFamily left_compress(const SetFamily& f) {
  SetFamily cur = f;
  int n = f.universe();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 2; j <= n; ++j) {
      for (int i = 1; i < j; ++i) {
        SetFamily next = shift_family(cur, i, j);
        if (next != cur) {
          cur = std::move(next);
          changed = true;
        }
      }
    }
  }
  return cur;
}

bool is_left_compressed(const SetFamily& f) {
  int n = f.universe();
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      if (shift_family(f, i, j) != f) return false;
  return true;
}

SetFamily upset(const SetFamily& seeds, const RankSet& r, int n) {
  checked_universe(n);
  r.require_universe(n);
  if (seeds.universe() != n)
    throw std::invalid_argument("upset: seed family universe mismatch");
  for (int card : seeds.cardinalities())
    if (card > r.max())
      throw std::domain_error("upset: seed of cardinality " + std::to_string(card) +
                              " exceeds max rank " + std::to_string(r.max()));
  std::vector<SetMask> seed_masks;
  seed_masks.reserve(seeds.size());
  seeds.for_each_mask([&](SetMask m) { seed_masks.push_back(m); });
  SetFamily out(n);
  for (int a : r.ranks()) {
    for_each_kset_lex(n, a, [&](SetMask m) {
      for (SetMask s : seed_masks) {
        if ((m & s) == s) {
          out.insert_mask(m);
          return;
        }
      }
    });
  }
  return out;
}

bool is_monotone(const SetFamily& f, const RankSet& r) {
  for (int card : f.cardinalities())
    if (!r.contains(card))
      throw std::domain_error("is_monotone: member cardinality " +
                              std::to_string(card) + " not in the rank set");
  return upset(f, r, f.universe()) == f;
}

}  // namespace xfam
