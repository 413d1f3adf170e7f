#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Ground types for subsets of [n], rank sets, set families and problem
// instances, plus the lexicographic order machinery shared by the whole
// library.
//
// Error conventions used throughout:
//   std::invalid_argument  - malformed parameters
//   std::out_of_range      - index/range violations
//   std::domain_error      - violated operation preconditions
//
// All types are immutable in practice (built once, then read); every free
// function is pure, so concurrent use needs no synchronization.

namespace xfam {

// Universe sizes are capped so a set is one 64-bit word of bit-indexed
// membership (element e <-> bit e-1).
inline constexpr int kMaxUniverse = 62;

using SetMask = std::uint64_t;

// Exact binomial coefficient as a 64-bit integer; 0 when k < 0, k > n or
// n < 0. Requires n <= 62 so every value is representable exactly.
std::uint64_t binom(int n, int k);

// Validates 1 <= n <= kMaxUniverse and returns n.
int checked_universe(int n);

inline SetMask element_bit(int e) { return SetMask{1} << (e - 1); }

// Mask of [k] = {1, ..., k}; 0 for k <= 0.
inline SetMask prefix_mask(int k) {
  if (k <= 0) return 0;
  return k >= 64 ? ~SetMask{0} : (SetMask{1} << k) - 1;
}

/// A subset of [1, n] with bit-indexed membership.
class ElementSet {
 public:
  ElementSet(int universe, SetMask mask);
  static ElementSet empty(int universe) { return ElementSet(universe, 0); }
  static ElementSet of(int universe, std::initializer_list<int> elems);
  static ElementSet from_elements(int universe, std::span<const int> elems);

  int universe() const { return n_; }
  SetMask mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool is_empty() const { return mask_ == 0; }
  bool contains(int e) const {
    return e >= 1 && e <= n_ && (mask_ & element_bit(e)) != 0;
  }
  int min_element() const;  // throws std::domain_error on the empty set
  int max_element() const;  // likewise
  std::vector<int> elements() const;

  ElementSet with(int e) const;
  ElementSet without(int e) const;
  bool subset_of(const ElementSet& other) const;
  ElementSet complement() const { return ElementSet(n_, ~mask_ & prefix_mask(n_)); }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  int n_;
  SetMask mask_;
};

std::string to_string(const ElementSet& s);

// Lexicographic comparison of equal-cardinality sets over a common universe:
// A precedes B iff min(A \ B) < min(B \ A). Throws std::invalid_argument on
// universe or cardinality mismatch.
std::strong_ordering lex_compare(const ElementSet& a, const ElementSet& b);

// Same order on raw masks; both masks must have equal popcount.
inline bool lex_mask_less(SetMask a, SetMask b) {
  if (a == b) return false;
  SetMask diff = a ^ b;
  return (a & (diff & (~diff + 1))) != 0;
}

// Invokes fn(mask) for every k-subset of [n] in lexicographic order.
template <typename Fn>
void for_each_kset_lex(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(SetMask{0});
    return;
  }
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    SetMask m = 0;
    for (int e : c) m |= element_bit(e);
    fn(m);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Invokes fn(base | chosen) for every k-subset of pool (a list of distinct
// elements, ascending); subsets are generated in lex order over pool.
template <typename Fn>
void for_each_pool_subset(std::span<const int> pool, int k, SetMask base, Fn&& fn) {
  int p = static_cast<int>(pool.size());
  if (k < 0 || k > p) return;
  if (k == 0) {
    fn(base);
    return;
  }
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    SetMask m = base;
    for (int i : idx) m |= element_bit(pool[static_cast<std::size_t>(i)]);
    fn(m);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == p - (k - i)) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// A non-empty strictly increasing list of allowed cardinalities.
class RankSet {
 public:
  explicit RankSet(std::vector<int> ranks);
  RankSet(std::initializer_list<int> ranks);

  std::span<const int> ranks() const { return ranks_; }
  int count() const { return static_cast<int>(ranks_.size()); }
  int min() const { return ranks_.front(); }
  int max() const { return ranks_.back(); }
  bool contains(int r) const;
  bool singleton() const { return ranks_.size() == 1; }
  // Throws std::invalid_argument when some rank exceeds n.
  void require_universe(int n) const;

  friend bool operator==(const RankSet&, const RankSet&) = default;
  friend std::strong_ordering operator<=>(const RankSet&, const RankSet&) = default;

 private:
  std::vector<int> ranks_;
};

std::string to_string(const RankSet& r);

/// A deduplicated collection of non-empty subsets of [1, n], indexed by
/// cardinality; each layer is kept sorted in lex order so iteration is
/// deterministic.
class SetFamily {
 public:
  explicit SetFamily(int universe);
  static SetFamily of(int universe,
                      std::initializer_list<std::initializer_list<int>> sets);

  int universe() const { return n_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool insert(const ElementSet& s);
  bool insert_mask(SetMask m);
  bool contains(const ElementSet& s) const;
  bool contains_mask(SetMask m) const;

  std::vector<int> cardinalities() const;
  std::span<const SetMask> layer_masks(int r) const;
  const std::map<int, std::vector<SetMask>>& layers() const { return layers_; }
  std::vector<ElementSet> members() const;

  template <typename Fn>
  void for_each_mask(Fn&& fn) const {
    for (const auto& [r, masks] : layers_)
      for (SetMask m : masks) fn(m);
  }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  int n_;
  std::size_t count_ = 0;
  std::map<int, std::vector<SetMask>> layers_;
};

// The r-element members of f. Returns an empty family when f has no such
// layer (including r outside [1, n]).
SetFamily layer(const SetFamily& f, int r);

// 1-based position of a in the lex order of |a|-subsets of its universe.
std::uint64_t lex_rank(const ElementSet& a);

// The index-th k-subset of [n] in lex order (1-based). Throws
// std::out_of_range unless 1 <= index <= binom(n, k).
ElementSet lex_unrank(int n, int k, std::uint64_t index);

// The first count k-subsets of [n] in lex order; count = 0 gives the empty
// family. Throws std::out_of_range when count > binom(n, k).
SetFamily l_initial(int n, int k, std::uint64_t count);

// Every pair of members meets in >= t elements (vacuously true when
// |f| <= 1).
bool is_intersecting(const SetFamily& f, int t);

// |A ∩ B| >= t for every A in f, B in g; vacuously true when either family
// is empty. Symmetric in f and g.
bool is_cross_intersecting(const SetFamily& f, const SetFamily& g, int t);

/// Problem description: universe size, intersection depth and one rank set
/// per family.
struct Instance {
  int n = 0;
  int t = 1;
  std::vector<RankSet> ranks;

  Instance(int n, int t, std::vector<RankSet> ranks);

  int m() const { return static_cast<int>(ranks.size()); }
  // Largest and second largest values among the per-family maxima.
  int k1() const;
  int k2() const;
  // Smallest of the other families' largest ranks: the widest prefix [l]
  // every family other than gamma can still contain a set of. (With a
  // prefix longer than some family's largest rank that family would be
  // forced empty, so candidate totals stop there.)
  int k_min(int gamma) const;
  bool bound_applies() const { return n >= k1() + k2(); }
};

bool instance_less(const Instance& a, const Instance& b);
bool instance_equal(const Instance& a, const Instance& b);
std::string to_string(const Instance& inst);

// Family text format: first significant line "n=<n>", then one set per line
// as ascending space-separated elements; '#' starts a comment, blank lines
// are ignored. Duplicate sets are merged silently.
SetFamily read_family(std::istream& in);
SetFamily read_family_file(const std::string& path);
void write_family(std::ostream& out, const SetFamily& f);
void write_family_file(const std::string& path, const SetFamily& f);

}  // namespace xfam
