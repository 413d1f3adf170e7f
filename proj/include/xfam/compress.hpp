#pragma once

#include "xfam/core.hpp"

// Shifting operators s_{i,j}, left-compression fixpoints and monotone
// closure via up-sets. Everything here is a pure function over immutable
// families; a compression pass always builds a fresh family.

namespace xfam {

// s_{i,j}(A) relative to the host family: (A \ {j}) ∪ {i} when j ∈ A,
// i ∉ A and the replacement is not already a member of host; otherwise A.
// The host is explicit because the third condition is membership of the
// image in the family. Requires 1 <= i < j <= n and A ∈ host.
ElementSet shift_set(const ElementSet& a, int i, int j, const SetFamily& host);

// Image family {s_{i,j}(A) : A ∈ f}; preserves |f| and each layer size.
SetFamily shift_family(const SetFamily& f, int i, int j);

// Repeats full passes over pairs (i, j) ordered by increasing j, then
// increasing i, until a pass changes nothing. The result is a fixpoint of
// every s_{i,j}; the particular fixpoint depends on this pinned order.
SetFamily left_compress(const SetFamily& f);

// True iff s_{i,j}(f) = f for all 1 <= i < j <= n.
bool is_left_compressed(const SetFamily& f);

// ⟨seeds⟩_R: all sets with cardinality in r containing some member of
// seeds. Members of seeds must have cardinality <= max(r).
SetFamily upset(const SetFamily& seeds, const RankSet& r, int n);

// True iff A ∈ f, A ⊆ B, |B| ∈ r imply B ∈ f. All member cardinalities
// must lie in r.
bool is_monotone(const SetFamily& f, const RankSet& r);

}  // namespace xfam
