#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "xfam/core.hpp"

// Generating families of monotone set families, their cells, boundary
// structure at the extent, and the two boundary surgeries that trade cells
// between the families of a cross-intersecting tuple.

namespace xfam {

/// The inclusion-minimal sets whose up-sets cover a monotone family. The
/// generators always form an antichain.
struct GeneratingFamily {
  SetFamily generators;
  RankSet ranks;

  int universe() const { return generators.universe(); }
};

/// A tuple of families over a common universe, one rank set per family.
struct FamilyTuple {
  int n = 0;
  std::vector<RankSet> ranks;
  std::vector<SetFamily> families;

  int m() const { return static_cast<int>(families.size()); }
};

// Validates shape: matching counts, universes, and per-family member
// cardinalities inside the family's rank set.
void validate_tuple(const FamilyTuple& tuple);

std::uint64_t total_size(const FamilyTuple& tuple);

// Pairwise cross-intersection at depth t across distinct families.
bool is_cross_intersecting(const FamilyTuple& tuple, int t);

// True iff ⟨{e}⟩_R ⊆ f and no proper non-empty subset of e has that
// property. f must be monotone over r; e must be non-empty with |e| <= max(r).
bool is_generating(const ElementSet& e, const SetFamily& f, const RankSet& r);

// All generating sets of a monotone family. Reconstruction invariant:
// upset(result.generators, r, n) == f.
GeneratingFamily generating_family(const SetFamily& f, const RankSet& r);

// Largest element appearing in any generator; undefined (throws) when the
// generating family is empty.
int extent(const GeneratingFamily& g);

// The cell of e: all sets A with |A| in r and A ∩ [max(e)] = e.
SetFamily cell(const ElementSet& e, const RankSet& r, int n);

// Union of the cells of a collection of generators.
SetFamily cells_of(const SetFamily& gens, const RankSet& r, int n);

// Cells over the generating family of f. For monotone left-compressed f the
// cells are pairwise disjoint and their sizes sum to |f|; both preconditions
// are enforced with distinct diagnostics.
std::vector<std::pair<ElementSet, SetFamily>> decompose(const SetFamily& f,
                                                        const RankSet& r);

// The sub-collection of generators containing l.
GeneratingFamily boundary_family(const GeneratingFamily& g, int l);

struct BoundaryDuality {
  bool ok = true;  // every pair E, F with E ∩ F = {l} has E ∪ F = [l] and
                   // |E| + |F| = l + 1
  struct LayerPair {
    int u;
    std::size_t count_i;  // |(boundary of g_i)_u|
    std::size_t count_j;  // |(boundary of g_j)_{l+1-u}|
  };
  std::vector<LayerPair> layers;
};

BoundaryDuality check_boundary_duality(const GeneratingFamily& gi,
                                       const GeneratingFamily& gj, int l);

// Boundary surgery that grows family gamma: gamma gains the cells of its
// size-u boundary generators with l removed, every other family loses the
// cells of its size-(l+1-u) boundary generators. Requires a monotone,
// left-compressed, cross-intersecting, non-empty tuple whose largest extent
// is l, a non-empty size-u boundary layer for gamma, and 1 < u < l.
FamilyTuple boundary_surgery_expand(const FamilyTuple& tuple, int gamma, int u,
                                    int l);

// The reverse trade: gamma loses the cells of its size-u boundary
// generators, the other families gain the cells of their size-(l+1-u)
// boundary generators with l removed. Additionally requires {1} to be a
// generator of family gamma.
FamilyTuple boundary_surgery_contract(const FamilyTuple& tuple, int gamma,
                                      int u, int l);

// Exact totals the surgeries must produce, from boundary-layer counts and
// binomials alone (no family materialization):
//   expand:   sum + Σ_{a∈R_γ} |(Ḡ_γ)_u|·C(n−l, a−u+1)
//                 − Σ_{α≠γ} Σ_{b∈R_α} |(Ḡ_α)_{l+1−u}|·C(n−l, b−(l+1−u))
//   contract: sum + Σ_{α≠γ} Σ_{b∈R_α} |(Ḡ_α)_{l+1−u}|·C(n−l, b−(l+1−u)+1)
//                 − Σ_{a∈R_γ} |(Ḡ_γ)_u|·C(n−l, a−u)
std::uint64_t boundary_surgery_expand_total(const FamilyTuple& tuple, int gamma,
                                            int u, int l);
std::uint64_t boundary_surgery_contract_total(const FamilyTuple& tuple,
                                              int gamma, int u, int l);

}  // namespace xfam
