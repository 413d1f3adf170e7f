#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "xfam/core.hpp"
#include "test_helpers.hpp"

using namespace xfam;

TEST_CASE("binom matches the multiplicative formula on small values") {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      // independent route: product formula with exact division
      std::uint64_t v = 1;
      for (int i = 1; i <= k; ++i) v = v * static_cast<std::uint64_t>(n - k + i) / i;
      CHECK(binom(n, k) == v);
    }
  }
  CHECK(binom(5, -1) == 0);
  CHECK(binom(5, 6) == 0);
  CHECK(binom(-2, 0) == 0);
  CHECK(binom(62, 31) == 465428353255261088ull);
  CHECK_THROWS_AS(binom(63, 1), std::invalid_argument);
}

TEST_CASE("ElementSet basics and validation") {
  ElementSet s = ElementSet::of(5, {2, 4});
  CHECK(s.size() == 2);
  CHECK(s.contains(2));
  CHECK(!s.contains(3));
  CHECK(s.min_element() == 2);
  CHECK(s.max_element() == 4);
  CHECK(s.elements() == std::vector<int>{2, 4});
  CHECK(s.with(1) == ElementSet::of(5, {1, 2, 4}));
  CHECK(s.without(4) == ElementSet::of(5, {2}));
  CHECK(s.complement() == ElementSet::of(5, {1, 3, 5}));
  CHECK(ElementSet::of(5, {2}).subset_of(s));
  CHECK_THROWS_AS(ElementSet::of(3, {4}), std::invalid_argument);
  CHECK_THROWS_AS(ElementSet(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(ElementSet(63, 0), std::invalid_argument);
  CHECK_THROWS_AS(ElementSet::empty(4).min_element(), std::domain_error);
  CHECK(to_string(s) == "{2,4}");
}

TEST_CASE("lex_compare on the stated pairs") {
  auto cmp = [](std::initializer_list<int> a, std::initializer_list<int> b) {
    return lex_compare(ElementSet::of(6, a), ElementSet::of(6, b));
  };
  CHECK(cmp({1, 2}, {1, 3}) == std::strong_ordering::less);
  CHECK(cmp({1, 4}, {2, 3}) == std::strong_ordering::less);
  CHECK(cmp({2, 3}, {2, 3}) == std::strong_ordering::equal);
  CHECK(cmp({2, 3}, {1, 4}) == std::strong_ordering::greater);
  CHECK_THROWS_AS(cmp({1, 2}, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(
      lex_compare(ElementSet::of(4, {1}), ElementSet::of(5, {1})),
      std::invalid_argument);
}

TEST_CASE("lex order is a strict total order consistent with enumeration") {
  // for_each_kset_lex yields ascending-element combinations; sorting by the
  // comparator must reproduce exactly that sequence
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::vector<SetMask> order;
      for_each_kset_lex(n, k, [&](SetMask m) { order.push_back(m); });
      CHECK(order.size() == binom(n, k));
      auto sorted = order;
      std::sort(sorted.begin(), sorted.end(), lex_mask_less);
      CHECK(sorted == order);
    }
  }
  // trichotomy, exhaustively on one layer
  std::vector<SetMask> order;
  for_each_kset_lex(6, 3, [&](SetMask m) { order.push_back(m); });
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j) {
      auto c = lex_compare(ElementSet(6, order[i]), ElementSet(6, order[j]));
      if (i < j) CHECK(c == std::strong_ordering::less);
      if (i == j) CHECK(c == std::strong_ordering::equal);
      if (i > j) CHECK(c == std::strong_ordering::greater);
    }
}

TEST_CASE("lex_unrank stated examples and enumeration oracle") {
  CHECK(lex_unrank(4, 2, 1) == ElementSet::of(4, {1, 2}));
  // oracle: enumerate all six 2-subsets of [4] in lex order
  std::vector<SetMask> order;
  for_each_kset_lex(4, 2, [&](SetMask m) { order.push_back(m); });
  CHECK(lex_unrank(4, 2, 4).mask() == order[3]);
  CHECK(lex_unrank(4, 2, 4) == ElementSet::of(4, {2, 3}));
  CHECK(lex_rank(lex_unrank(5, 3, 7)) == 7);
  CHECK_THROWS_AS(lex_unrank(4, 2, 0), std::out_of_range);
  CHECK_THROWS_AS(lex_unrank(4, 2, 7), std::out_of_range);
  CHECK_THROWS_AS(lex_unrank(4, 5, 1), std::invalid_argument);
}

TEST_CASE("lex_rank is the inverse of lex_unrank everywhere at small n") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) {
      std::uint64_t idx = 1;
      for_each_kset_lex(n, k, [&](SetMask m) {
        CHECK(lex_rank(ElementSet(n, m)) == idx);
        CHECK(lex_unrank(n, k, idx).mask() == m);
        ++idx;
      });
    }
}

TEST_CASE("l_initial prefixes") {
  CHECK(l_initial(4, 2, 3) == SetFamily::of(4, {{1, 2}, {1, 3}, {1, 4}}));
  CHECK(l_initial(4, 2, 0).empty());
  CHECK(l_initial(5, 2, 5) ==
        SetFamily::of(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}}));
  CHECK_THROWS_AS(l_initial(4, 2, 7), std::out_of_range);
  // full prefix equals the whole layer
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) {
      SetFamily full(n);
      for_each_kset_lex(n, k, [&](SetMask m) { full.insert_mask(m); });
      CHECK(l_initial(n, k, binom(n, k)) == full);
    }
}

TEST_CASE("cross-intersection predicate") {
  SetFamily a = SetFamily::of(4, {{1, 2}});
  SetFamily b = SetFamily::of(4, {{3, 4}});
  CHECK(!is_cross_intersecting(a, b, 1));
  CHECK(is_cross_intersecting(SetFamily::of(4, {{1, 2}, {1, 3}}),
                              SetFamily::of(4, {{1, 4}}), 1));
  CHECK(is_cross_intersecting(SetFamily::of(4, {{1, 2, 3}}),
                              SetFamily::of(4, {{1, 2, 4}}), 2));
  CHECK(is_cross_intersecting(SetFamily(4), b, 1));  // vacuous on empty
  CHECK_THROWS_AS(is_cross_intersecting(a, SetFamily::of(5, {{1, 2}}), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_cross_intersecting(a, b, 0), std::invalid_argument);
}

TEST_CASE("cross-intersection is symmetric and matches brute force") {
  std::mt19937_64 rng(20240811);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 3 + static_cast<int>(rng() % 5);
    RankSet ra = testing::random_rank_set(rng, n, 4);
    RankSet rb = testing::random_rank_set(rng, n, 4);
    SetFamily f = testing::random_family(rng, n, ra, 0.3);
    SetFamily g = testing::random_family(rng, n, rb, 0.3);
    bool fwd = is_cross_intersecting(f, g, 1);
    CHECK(fwd == is_cross_intersecting(g, f, 1));
    // false iff some pair is disjoint
    bool disjoint_pair = false;
    f.for_each_mask([&](SetMask x) {
      g.for_each_mask([&](SetMask y) {
        if ((x & y) == 0) disjoint_pair = true;
      });
    });
    CHECK(fwd == !disjoint_pair);
  }
}

TEST_CASE("is_intersecting") {
  CHECK(is_intersecting(SetFamily::of(4, {{1, 2}, {1, 3}, {2, 3}}), 1));
  CHECK(!is_intersecting(SetFamily::of(4, {{1, 2}, {3, 4}}), 1));
  CHECK(is_intersecting(SetFamily(4), 1));
  CHECK(is_intersecting(SetFamily::of(4, {{1, 2}}), 1));
}

TEST_CASE("layer extraction") {
  SetFamily f = SetFamily::of(4, {{1}, {1, 2}});
  CHECK(layer(f, 2) == SetFamily::of(4, {{1, 2}}));
  CHECK(layer(f, 3).empty());
  CHECK(layer(f, 9).empty());
}

TEST_CASE("SetFamily dedups and keeps deterministic layer order") {
  SetFamily f(4);
  CHECK(f.insert(ElementSet::of(4, {2, 3})));
  CHECK(!f.insert(ElementSet::of(4, {2, 3})));
  CHECK(f.insert(ElementSet::of(4, {1, 4})));
  CHECK(f.insert(ElementSet::of(4, {1})));
  CHECK(f.size() == 3);
  auto members = f.members();
  REQUIRE(members.size() == 3);
  CHECK(members[0] == ElementSet::of(4, {1}));
  CHECK(members[1] == ElementSet::of(4, {1, 4}));  // lex before {2,3}
  CHECK(members[2] == ElementSet::of(4, {2, 3}));
  CHECK(f.cardinalities() == std::vector<int>{1, 2});
  CHECK_THROWS_AS(f.insert_mask(0), std::invalid_argument);
}

TEST_CASE("RankSet validation") {
  RankSet r{3, 1};
  CHECK(r.ranks()[0] == 1);
  CHECK(r.max() == 3);
  CHECK(r.contains(3));
  CHECK(!r.contains(2));
  CHECK_THROWS_AS(RankSet(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(RankSet({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(RankSet({0}), std::invalid_argument);
  CHECK_THROWS_AS(r.require_universe(2), std::invalid_argument);
}

TEST_CASE("Instance derived quantities") {
  Instance inst(6, 1, {RankSet{3}, RankSet{2}, RankSet{1, 2}});
  CHECK(inst.m() == 3);
  CHECK(inst.k1() == 3);
  CHECK(inst.k2() == 2);
  CHECK(inst.k_min(0) == 2);  // min over the other families' largest ranks
  CHECK(inst.k_min(1) == 2);
  CHECK(inst.k_min(2) == 2);
  CHECK(inst.bound_applies());
  CHECK(!Instance(4, 1, {RankSet{3}, RankSet{2}}).bound_applies());
  CHECK_THROWS_AS(Instance(6, 0, {RankSet{1}, RankSet{1}}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(6, 1, {RankSet{1}}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(2, 1, {RankSet{3}, RankSet{1}}), std::invalid_argument);
}

TEST_CASE("family text format round-trips") {
  std::istringstream in(
      "# header comment\n"
      "n=5\n"
      "\n"
      "1 3   # star member\n"
      "2 3 5\n"
      "1 3\n");
  SetFamily f = read_family(in);
  CHECK(f.universe() == 5);
  CHECK(f.size() == 2);  // duplicate merged
  CHECK(f.contains(ElementSet::of(5, {2, 3, 5})));

  std::ostringstream out;
  write_family(out, f);
  std::istringstream back(out.str());
  CHECK(read_family(back) == f);
}

TEST_CASE("family text format rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_family(in);
  };
  CHECK_THROWS_AS(parse("1 2\n"), std::invalid_argument);          // missing header
  CHECK_THROWS_AS(parse("n=5\n3 1\n"), std::invalid_argument);     // not ascending
  CHECK_THROWS_AS(parse("n=5\n1 1\n"), std::invalid_argument);     // repeated element
  CHECK_THROWS_AS(parse("n=5\n1 9\n"), std::invalid_argument);     // outside universe
  CHECK_THROWS_AS(parse("n=77\n"), std::invalid_argument);         // universe cap
  CHECK_THROWS_AS(parse("n=5\n1 x\n"), std::invalid_argument);     // not integers
  CHECK_THROWS_AS(parse(""), std::invalid_argument);               // empty file
}
