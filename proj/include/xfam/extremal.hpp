#pragma once

#include <cstdint>
#include <vector>

#include "xfam/bounds.hpp"
#include "xfam/core.hpp"
#include "xfam/genset.hpp"

// Constructors for the extremal families of the sum bound and a classifier
// mapping a maximizing tuple to the equality case it realizes, up to a
// permutation of the ground set.

namespace xfam {

// All R-sets containing the element 1.
SetFamily construct_star(int n, const RankSet& r);
// All R-sets meeting [k].
SetFamily construct_m1(int n, const RankSet& r, int k);
// All R-sets containing [k].
SetFamily construct_m2(int n, const RankSet& r, int k);

// (F1, F2) with F1 = binom([n], k1) minus the set-complements of F2's
// members. Requires n = k1 + k2, F2 a family of k2-sets with
// 0 < |F2| < C(n, k2).
FamilyTuple construct_case_iii(int n, int k1, int k2, const SetFamily& f2);

// m copies of an intersecting family f of k-sets with |f| = C(n-1, k-1).
// Requires n = 2k and m >= 3; f is validated.
FamilyTuple construct_case_iv(int n, int k, int m, const SetFamily& f);

struct CaseMatch {
  EqualityCase kase;
  int gamma = -1;                // pivot family for case II (0-based)
  std::vector<int> permutation;  // permutation[i] = image of element i+1
};

struct Classification {
  bool maximal = false;
  std::uint64_t tuple_total = 0;
  std::uint64_t bound_maximum = 0;
  std::vector<CaseMatch> matches;  // in case order I, II, III, IV; empty plus
                                   // maximal=true means an unexplained optimum
};

// Requires a non-empty, cross-intersecting tuple matching the instance
// shape. A tuple that misses the bound maximum is rejected (maximal=false,
// both totals reported, no matches). Cases are tested in order and every
// match is returned; ties happen when candidates coincide.
Classification classify(const FamilyTuple& tuple, const Instance& inst);

struct IsomorphismResult {
  bool isomorphic = false;
  std::vector<int> permutation;  // maps tuple a onto tuple b when isomorphic
};

// Whether some permutation of [n] maps each family of a onto the
// corresponding family of b. Tuples must agree in n, m and rank sets.
IsomorphismResult are_isomorphic(const FamilyTuple& a, const FamilyTuple& b);

}  // namespace xfam
