#include "xfam/genset.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "xfam/compress.hpp"

namespace xfam {

void validate_tuple(const FamilyTuple& tuple) {
  checked_universe(tuple.n);
  if (tuple.families.size() != tuple.ranks.size())
    throw std::invalid_argument("tuple: one rank set per family required");
  if (tuple.families.empty())
    throw std::invalid_argument("tuple: at least one family required");
  for (int j = 0; j < tuple.m(); ++j) {
    const auto& f = tuple.families[static_cast<std::size_t>(j)];
    const auto& r = tuple.ranks[static_cast<std::size_t>(j)];
    r.require_universe(tuple.n);
    if (f.universe() != tuple.n)
      throw std::invalid_argument("tuple: family universe mismatch");
    for (int card : f.cardinalities())
      if (!r.contains(card))
        throw std::invalid_argument(
            "tuple: family " + std::to_string(j + 1) + " has a member of cardinality " +
            std::to_string(card) + " outside its rank set");
  }
}

std::uint64_t total_size(const FamilyTuple& tuple) {
  std::uint64_t sum = 0;
  for (const auto& f : tuple.families) sum += f.size();
  return sum;
}

bool is_cross_intersecting(const FamilyTuple& tuple, int t) {
  for (int i = 0; i < tuple.m(); ++i)
    for (int j = i + 1; j < tuple.m(); ++j)
      if (!is_cross_intersecting(tuple.families[static_cast<std::size_t>(i)],
                                 tuple.families[static_cast<std::size_t>(j)], t))
        return false;
  return true;
}

namespace {

// A set E is "good" when every superset with cardinality in r lies in f.
// Goodness is up-closed, so the generating family is exactly the collection
// of minimal good sets; minimality only needs single-element deletions.
class GoodOracle {
 public:
  GoodOracle(const SetFamily& f, const RankSet& r) : f_(f), r_(r) {}

  bool good(SetMask e) {
    auto it = memo_.find(e);
    if (it != memo_.end()) return it->second != 0;
    bool ok = compute(e);
    memo_.emplace(e, ok ? 1 : 0);
    return ok;
  }

 private:
  bool compute(SetMask e) const {
    int n = f_.universe();
    int card = std::popcount(e);
    std::vector<int> pool;
    for (int x = 1; x <= n; ++x)
      if ((e & element_bit(x)) == 0) pool.push_back(x);
    for (int a : r_.ranks()) {
      if (a < card) continue;
      bool ok = true;
      for_each_pool_subset(pool, a - card, e, [&](SetMask sup) {
        if (ok && !f_.contains_mask(sup)) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  }

  const SetFamily& f_;
  const RankSet& r_;
  std::unordered_map<SetMask, char> memo_;
};

void require_monotone(const SetFamily& f, const RankSet& r, const char* who) {
  if (!is_monotone(f, r))
    throw std::domain_error(std::string(who) + ": family is not monotone over R");
}

}  // namespace

bool is_generating(const ElementSet& e, const SetFamily& f, const RankSet& r) {
  r.require_universe(f.universe());
  if (e.universe() != f.universe())
    throw std::invalid_argument("is_generating: universe mismatch");
  if (e.is_empty() || e.size() > r.max())
    throw std::invalid_argument("is_generating: candidate must be non-empty with |E| <= max(R)");
  require_monotone(f, r, "is_generating");
  GoodOracle oracle(f, r);
  if (!oracle.good(e.mask())) return false;
  for (SetMask rest = e.mask(); rest != 0; rest &= rest - 1) {
    SetMask child = e.mask() & ~(rest & (~rest + 1));
    if (child != 0 && oracle.good(child)) return false;
  }
  return true;
}

GeneratingFamily generating_family(const SetFamily& f, const RankSet& r) {
  int n = f.universe();
  r.require_universe(n);
  require_monotone(f, r, "generating_family");
  GoodOracle oracle(f, r);
  SetFamily gens(n);
  std::unordered_set<SetMask> visited;
  std::vector<SetMask> stack;
  f.for_each_mask([&](SetMask m) { stack.push_back(m); });
  while (!stack.empty()) {
    SetMask e = stack.back();
    stack.pop_back();
    if (!visited.insert(e).second) continue;
    bool has_good_child = false;
    for (SetMask rest = e; rest != 0; rest &= rest - 1) {
      SetMask child = e & ~(rest & (~rest + 1));
      if (child == 0) continue;
      if (oracle.good(child)) {
        has_good_child = true;
        if (!visited.contains(child)) stack.push_back(child);
      }
    }
    if (!has_good_child) gens.insert_mask(e);
  }
  return GeneratingFamily{std::move(gens), r};
}

int extent(const GeneratingFamily& g) {
  if (g.generators.empty())
    throw std::domain_error("extent is undefined for an empty generating family");
  int best = 0;
  g.generators.for_each_mask([&](SetMask m) {
    best = std::max(best, 64 - std::countl_zero(m));
  });
  return best;
}

SetFamily cell(const ElementSet& e, const RankSet& r, int n) {
  checked_universe(n);
  r.require_universe(n);
  if (e.universe() != n) throw std::invalid_argument("cell: universe mismatch");
  if (e.is_empty())
    throw std::invalid_argument("cell: the defining set must be non-empty");
  int top = e.max_element();
  std::vector<int> pool;
  for (int x = top + 1; x <= n; ++x) pool.push_back(x);
  SetFamily out(n);
  int card = e.size();
  for (int a : r.ranks()) {
    if (a < card) continue;
    for_each_pool_subset(pool, a - card, e.mask(),
                         [&](SetMask m) { out.insert_mask(m); });
  }
  return out;
}

SetFamily cells_of(const SetFamily& gens, const RankSet& r, int n) {
  SetFamily out(n);
  gens.for_each_mask([&](SetMask g) {
    cell(ElementSet(n, g), r, n).for_each_mask(
        [&](SetMask m) { out.insert_mask(m); });
  });
  return out;
}

std::vector<std::pair<ElementSet, SetFamily>> decompose(const SetFamily& f,
                                                        const RankSet& r) {
  if (!is_monotone(f, r))
    throw std::domain_error("decompose: family is not monotone over R");
  if (!is_left_compressed(f))
    throw std::domain_error("decompose: family is not left-compressed");
  GeneratingFamily g = generating_family(f, r);
  std::vector<std::pair<ElementSet, SetFamily>> out;
  for (const ElementSet& e : g.generators.members())
    out.emplace_back(e, cell(e, r, f.universe()));
  return out;
}

GeneratingFamily boundary_family(const GeneratingFamily& g, int l) {
  if (l < 1 || l > g.universe())
    throw std::invalid_argument("boundary_family: l outside the universe");
  SetFamily out(g.universe());
  g.generators.for_each_mask([&](SetMask m) {
    if ((m & element_bit(l)) != 0) out.insert_mask(m);
  });
  return GeneratingFamily{std::move(out), g.ranks};
}

BoundaryDuality check_boundary_duality(const GeneratingFamily& gi,
                                       const GeneratingFamily& gj, int l) {
  if (gi.universe() != gj.universe())
    throw std::invalid_argument("check_boundary_duality: universe mismatch");
  if (l < 1 || l > gi.universe())
    throw std::invalid_argument("check_boundary_duality: l outside the universe");
  BoundaryDuality result;
  SetMask lbit = element_bit(l);
  SetMask lprefix = prefix_mask(l);
  gi.generators.for_each_mask([&](SetMask e) {
    gj.generators.for_each_mask([&](SetMask f) {
      if ((e & f) != lbit) return;
      bool union_ok = (e | f) == lprefix;
      bool size_ok = std::popcount(e) + std::popcount(f) == l + 1;
      if (!union_ok || !size_ok) result.ok = false;
    });
  });
  GeneratingFamily bi = boundary_family(gi, l);
  GeneratingFamily bj = boundary_family(gj, l);
  for (int u = 1; u <= l; ++u) {
    result.layers.push_back(BoundaryDuality::LayerPair{
        u, bi.generators.layer_masks(u).size(),
        bj.generators.layer_masks(l + 1 - u).size()});
  }
  return result;
}

namespace {

struct SurgeryContext {
  std::vector<GeneratingFamily> gens;
  std::vector<SetFamily> boundary_u;        // size-u boundary layer per family
  std::vector<SetFamily> boundary_dual;     // size-(l+1-u) boundary layer
};

SurgeryContext surgery_context(const FamilyTuple& tuple, int gamma, int u, int l,
                               bool need_one_generator) {
  validate_tuple(tuple);
  if (tuple.m() < 2)
    throw std::invalid_argument("boundary surgery needs at least two families");
  if (gamma < 0 || gamma >= tuple.m())
    throw std::invalid_argument("boundary surgery: family index out of range");
  if (!(u > 1 && u < l))
    throw std::invalid_argument("boundary surgery requires 1 < u < l");
  for (int j = 0; j < tuple.m(); ++j) {
    const auto& f = tuple.families[static_cast<std::size_t>(j)];
    const auto& r = tuple.ranks[static_cast<std::size_t>(j)];
    if (f.empty())
      throw std::domain_error("boundary surgery: family " + std::to_string(j + 1) +
                              " is empty");
    if (!is_monotone(f, r))
      throw std::domain_error("boundary surgery: family " + std::to_string(j + 1) +
                              " is not monotone");
    if (!is_left_compressed(f))
      throw std::domain_error("boundary surgery: family " + std::to_string(j + 1) +
                              " is not left-compressed");
  }
  if (!is_cross_intersecting(tuple, 1))
    throw std::domain_error("boundary surgery: tuple is not cross-intersecting");

  SurgeryContext ctx;
  int max_extent = 0;
  for (int j = 0; j < tuple.m(); ++j) {
    ctx.gens.push_back(generating_family(tuple.families[static_cast<std::size_t>(j)],
                                         tuple.ranks[static_cast<std::size_t>(j)]));
    max_extent = std::max(max_extent, extent(ctx.gens.back()));
  }
  if (max_extent != l)
    throw std::invalid_argument("boundary surgery: l=" + std::to_string(l) +
                                " does not equal the tuple extent " +
                                std::to_string(max_extent));
  for (int j = 0; j < tuple.m(); ++j) {
    GeneratingFamily b = boundary_family(ctx.gens[static_cast<std::size_t>(j)], l);
    SetFamily at_u(tuple.n), at_dual(tuple.n);
    for (SetMask m : b.generators.layer_masks(u)) at_u.insert_mask(m);
    for (SetMask m : b.generators.layer_masks(l + 1 - u)) at_dual.insert_mask(m);
    ctx.boundary_u.push_back(std::move(at_u));
    ctx.boundary_dual.push_back(std::move(at_dual));
  }
  if (ctx.boundary_u[static_cast<std::size_t>(gamma)].empty())
    throw std::domain_error(
        "boundary surgery: family gamma has no boundary generator of size " +
        std::to_string(u));
  if (need_one_generator &&
      !ctx.gens[static_cast<std::size_t>(gamma)].generators.contains_mask(element_bit(1)))
    throw std::domain_error(
        "boundary surgery: {1} must be a generator of family gamma");
  return ctx;
}

SetFamily drop_element(const SetFamily& f, int e) {
  SetFamily out(f.universe());
  f.for_each_mask([&](SetMask m) { out.insert_mask(m & ~element_bit(e)); });
  return out;
}

SetFamily family_union(const SetFamily& a, const SetFamily& b) {
  SetFamily out = a;
  b.for_each_mask([&](SetMask m) { out.insert_mask(m); });
  return out;
}

SetFamily family_minus(const SetFamily& a, const SetFamily& b) {
  SetFamily out(a.universe());
  a.for_each_mask([&](SetMask m) {
    if (!b.contains_mask(m)) out.insert_mask(m);
  });
  return out;
}

}  // namespace

FamilyTuple boundary_surgery_expand(const FamilyTuple& tuple, int gamma, int u,
                                    int l) {
  SurgeryContext ctx = surgery_context(tuple, gamma, u, l, false);
  FamilyTuple out{tuple.n, tuple.ranks, {}};
  for (int j = 0; j < tuple.m(); ++j) {
    const auto& f = tuple.families[static_cast<std::size_t>(j)];
    const auto& r = tuple.ranks[static_cast<std::size_t>(j)];
    if (j == gamma) {
      SetFamily trimmed = drop_element(ctx.boundary_u[static_cast<std::size_t>(j)], l);
      out.families.push_back(
          family_union(f, cells_of(trimmed, r, tuple.n)));
    } else {
      out.families.push_back(family_minus(
          f, cells_of(ctx.boundary_dual[static_cast<std::size_t>(j)], r, tuple.n)));
    }
  }
  return out;
}

FamilyTuple boundary_surgery_contract(const FamilyTuple& tuple, int gamma, int u,
                                      int l) {
  SurgeryContext ctx = surgery_context(tuple, gamma, u, l, true);
  FamilyTuple out{tuple.n, tuple.ranks, {}};
  for (int j = 0; j < tuple.m(); ++j) {
    const auto& f = tuple.families[static_cast<std::size_t>(j)];
    const auto& r = tuple.ranks[static_cast<std::size_t>(j)];
    if (j == gamma) {
      out.families.push_back(family_minus(
          f, cells_of(ctx.boundary_u[static_cast<std::size_t>(j)], r, tuple.n)));
    } else {
      SetFamily trimmed =
          drop_element(ctx.boundary_dual[static_cast<std::size_t>(j)], l);
      out.families.push_back(
          family_union(f, cells_of(trimmed, r, tuple.n)));
    }
  }
  return out;
}

namespace {

std::uint64_t surgery_total(const FamilyTuple& tuple, int gamma, int u, int l,
                            bool expand) {
  SurgeryContext ctx = surgery_context(tuple, gamma, u, l, !expand);
  using I128 = __int128;
  I128 total = static_cast<I128>(total_size(tuple));
  std::uint64_t gamma_count = ctx.boundary_u[static_cast<std::size_t>(gamma)].size();
  const auto& rg = tuple.ranks[static_cast<std::size_t>(gamma)];
  I128 gamma_grow = 0, gamma_shrink = 0;
  for (int a : rg.ranks()) {
    gamma_grow += static_cast<I128>(gamma_count) * binom(tuple.n - l, a - u + 1);
    gamma_shrink += static_cast<I128>(gamma_count) * binom(tuple.n - l, a - u);
  }
  I128 others_grow = 0, others_shrink = 0;
  for (int j = 0; j < tuple.m(); ++j) {
    if (j == gamma) continue;
    std::uint64_t cnt = ctx.boundary_dual[static_cast<std::size_t>(j)].size();
    for (int b : tuple.ranks[static_cast<std::size_t>(j)].ranks()) {
      others_shrink += static_cast<I128>(cnt) * binom(tuple.n - l, b - (l + 1 - u));
      others_grow += static_cast<I128>(cnt) * binom(tuple.n - l, b - (l + 1 - u) + 1);
    }
  }
  I128 result = expand ? total + gamma_grow - others_shrink
                       : total + others_grow - gamma_shrink;
  if (result < 0)
    throw std::domain_error("boundary surgery total is negative; invalid input");
  return static_cast<std::uint64_t>(result);
}

}  // namespace

std::uint64_t boundary_surgery_expand_total(const FamilyTuple& tuple, int gamma,
                                            int u, int l) {
  return surgery_total(tuple, gamma, u, l, true);
}

std::uint64_t boundary_surgery_contract_total(const FamilyTuple& tuple, int gamma,
                                              int u, int l) {
  return surgery_total(tuple, gamma, u, l, false);
}

}  // namespace xfam
