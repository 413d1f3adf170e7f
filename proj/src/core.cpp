#include "xfam/core.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace xfam {

namespace {

constexpr int kBinomDim = kMaxUniverse + 1;

const std::array<std::array<std::uint64_t, kBinomDim>, kBinomDim>& binom_table() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kBinomDim>, kBinomDim> t{};
    for (int n = 0; n < kBinomDim; ++n) {
      t[static_cast<std::size_t>(n)][0] = 1;
      for (int k = 1; k <= n; ++k) {
        const auto& prev = t[static_cast<std::size_t>(n - 1)];
        t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
            prev[static_cast<std::size_t>(k - 1)] +
            (k <= n - 1 ? prev[static_cast<std::size_t>(k)] : 0);
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t binom(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > kMaxUniverse)
    throw std::invalid_argument("binom: n=" + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxUniverse));
  return binom_table()[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

int checked_universe(int n) {
  if (n < 1 || n > kMaxUniverse)
    throw std::invalid_argument("universe size must lie in [1, " +
                                std::to_string(kMaxUniverse) + "], got " +
                                std::to_string(n));
  return n;
}

ElementSet::ElementSet(int universe, SetMask mask)
    : n_(checked_universe(universe)), mask_(mask) {
  if ((mask & ~prefix_mask(n_)) != 0)
    throw std::invalid_argument("set mask has elements beyond the universe");
}

ElementSet ElementSet::of(int universe, std::initializer_list<int> elems) {
  std::vector<int> v(elems);
  return from_elements(universe, v);
}

ElementSet ElementSet::from_elements(int universe, std::span<const int> elems) {
  checked_universe(universe);
  SetMask m = 0;
  for (int e : elems) {
    if (e < 1 || e > universe)
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " outside universe [1, " +
                                  std::to_string(universe) + "]");
    m |= element_bit(e);
  }
  return ElementSet(universe, m);
}

int ElementSet::min_element() const {
  if (is_empty()) throw std::domain_error("min_element of empty set");
  return std::countr_zero(mask_) + 1;
}

int ElementSet::max_element() const {
  if (is_empty()) throw std::domain_error("max_element of empty set");
  return 64 - std::countl_zero(mask_);
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (SetMask m = mask_; m != 0; m &= m - 1)
    out.push_back(std::countr_zero(m) + 1);
  return out;
}

ElementSet ElementSet::with(int e) const {
  if (e < 1 || e > n_)
    throw std::invalid_argument("element outside universe");
  return ElementSet(n_, mask_ | element_bit(e));
}

ElementSet ElementSet::without(int e) const {
  if (e < 1 || e > n_)
    throw std::invalid_argument("element outside universe");
  return ElementSet(n_, mask_ & ~element_bit(e));
}

bool ElementSet::subset_of(const ElementSet& other) const {
  return n_ == other.n_ && (mask_ & ~other.mask_) == 0;
}

std::string to_string(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::strong_ordering lex_compare(const ElementSet& a, const ElementSet& b) {
  if (a.universe() != b.universe())
    throw std::invalid_argument("lex_compare: universe mismatch");
  if (a.size() != b.size())
    throw std::invalid_argument("lex_compare: cardinality mismatch");
  if (a.mask() == b.mask()) return std::strong_ordering::equal;
  return lex_mask_less(a.mask(), b.mask()) ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
}

RankSet::RankSet(std::vector<int> ranks) : ranks_(std::move(ranks)) {
  if (ranks_.empty()) throw std::invalid_argument("rank set must be non-empty");
  std::sort(ranks_.begin(), ranks_.end());
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (ranks_[i] < 1 || ranks_[i] > kMaxUniverse)
      throw std::invalid_argument("rank " + std::to_string(ranks_[i]) +
                                  " outside [1, " + std::to_string(kMaxUniverse) + "]");
    if (i > 0 && ranks_[i] == ranks_[i - 1])
      throw std::invalid_argument("duplicate rank " + std::to_string(ranks_[i]));
  }
}

RankSet::RankSet(std::initializer_list<int> ranks)
    : RankSet(std::vector<int>(ranks)) {}

bool RankSet::contains(int r) const {
  return std::binary_search(ranks_.begin(), ranks_.end(), r);
}

void RankSet::require_universe(int n) const {
  if (max() > n)
    throw std::invalid_argument("rank " + std::to_string(max()) +
                                " exceeds universe size " + std::to_string(n));
}

std::string to_string(const RankSet& r) {
  std::string out;
  for (std::size_t i = 0; i < r.ranks().size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(r.ranks()[i]);
  }
  return out;
}

SetFamily::SetFamily(int universe) : n_(checked_universe(universe)) {}

SetFamily SetFamily::of(int universe,
                        std::initializer_list<std::initializer_list<int>> sets) {
  SetFamily f(universe);
  for (const auto& s : sets) f.insert(ElementSet::of(universe, s));
  return f;
}

bool SetFamily::insert(const ElementSet& s) {
  if (s.universe() != n_)
    throw std::invalid_argument("family/set universe mismatch");
  return insert_mask(s.mask());
}

bool SetFamily::insert_mask(SetMask m) {
  if ((m & ~prefix_mask(n_)) != 0)
    throw std::invalid_argument("set mask has elements beyond the universe");
  if (m == 0) throw std::invalid_argument("the empty set cannot be a family member");
  int card = std::popcount(m);
  auto& v = layers_[card];
  auto it = std::lower_bound(v.begin(), v.end(), m, lex_mask_less);
  if (it != v.end() && *it == m) return false;
  v.insert(it, m);
  ++count_;
  return true;
}

bool SetFamily::contains(const ElementSet& s) const {
  return s.universe() == n_ && contains_mask(s.mask());
}

bool SetFamily::contains_mask(SetMask m) const {
  auto it = layers_.find(std::popcount(m));
  if (it == layers_.end()) return false;
  const auto& v = it->second;
  auto pos = std::lower_bound(v.begin(), v.end(), m, lex_mask_less);
  return pos != v.end() && *pos == m;
}

std::vector<int> SetFamily::cardinalities() const {
  std::vector<int> out;
  out.reserve(layers_.size());
  for (const auto& [r, masks] : layers_)
    if (!masks.empty()) out.push_back(r);
  return out;
}

std::span<const SetMask> SetFamily::layer_masks(int r) const {
  auto it = layers_.find(r);
  if (it == layers_.end()) return {};
  return it->second;
}

std::vector<ElementSet> SetFamily::members() const {
  std::vector<ElementSet> out;
  out.reserve(count_);
  for (const auto& [r, masks] : layers_)
    for (SetMask m : masks) out.emplace_back(n_, m);
  return out;
}

SetFamily layer(const SetFamily& f, int r) {
  SetFamily out(f.universe());
  for (SetMask m : f.layer_masks(r)) out.insert_mask(m);
  return out;
}

std::uint64_t lex_rank(const ElementSet& a) {
  int n = a.universe();
  int k = a.size();
  if (k == 0) throw std::domain_error("lex_rank of the empty set is undefined");
  std::uint64_t rank = 1;
  int prev = 0;
  int j = 1;
  for (int e : a.elements()) {
    for (int v = prev + 1; v < e; ++v) rank += binom(n - v, k - j);
    prev = e;
    ++j;
  }
  return rank;
}

ElementSet lex_unrank(int n, int k, std::uint64_t index) {
  checked_universe(n);
  if (k < 1 || k > n)
    throw std::invalid_argument("lex_unrank: k must lie in [1, n]");
  if (index < 1 || index > binom(n, k))
    throw std::out_of_range("lex_unrank: index " + std::to_string(index) +
                            " outside [1, C(" + std::to_string(n) + "," +
                            std::to_string(k) + ")]");
  std::uint64_t r = index - 1;
  SetMask m = 0;
  int prev = 0;
  for (int j = 1; j <= k; ++j) {
    int v = prev + 1;
    for (;; ++v) {
      std::uint64_t cnt = binom(n - v, k - j);
      if (r < cnt) break;
      r -= cnt;
    }
    m |= element_bit(v);
    prev = v;
  }
  return ElementSet(n, m);
}

SetFamily l_initial(int n, int k, std::uint64_t count) {
  checked_universe(n);
  if (k < 1 || k > n)
    throw std::invalid_argument("l_initial: k must lie in [1, n]");
  if (count > binom(n, k))
    throw std::out_of_range("l_initial: prefix length exceeds C(n, k)");
  SetFamily out(n);
  std::uint64_t left = count;
  if (left == 0) return out;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    SetMask m = 0;
    for (int e : c) m |= element_bit(e);
    out.insert_mask(m);
    if (--left == 0) break;
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

bool is_intersecting(const SetFamily& f, int t) {
  if (t < 1) throw std::invalid_argument("intersection depth t must be >= 1");
  std::vector<SetMask> all;
  all.reserve(f.size());
  f.for_each_mask([&](SetMask m) { all.push_back(m); });
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (std::popcount(all[i] & all[j]) < t) return false;
  return true;
}

bool is_cross_intersecting(const SetFamily& f, const SetFamily& g, int t) {
  if (t < 1) throw std::invalid_argument("intersection depth t must be >= 1");
  if (f.universe() != g.universe())
    throw std::invalid_argument("cross-intersection requires a common universe");
  bool ok = true;
  f.for_each_mask([&](SetMask a) {
    if (!ok) return;
    g.for_each_mask([&](SetMask b) {
      if (ok && std::popcount(a & b) < t) ok = false;
    });
  });
  return ok;
}

Instance::Instance(int n_, int t_, std::vector<RankSet> ranks_)
    : n(checked_universe(n_)), t(t_), ranks(std::move(ranks_)) {
  if (t < 1) throw std::invalid_argument("intersection depth t must be >= 1");
  if (ranks.size() < 2)
    throw std::invalid_argument("an instance needs at least two families");
  for (const auto& r : ranks) r.require_universe(n);
}

int Instance::k1() const {
  int best = 0;
  for (const auto& r : ranks) best = std::max(best, r.max());
  return best;
}

int Instance::k2() const {
  int first = 0, second = 0;
  for (const auto& r : ranks) {
    int v = r.max();
    if (v >= first) {
      second = first;
      first = v;
    } else if (v > second) {
      second = v;
    }
  }
  return second;
}

int Instance::k_min(int gamma) const {
  if (gamma < 0 || gamma >= m())
    throw std::out_of_range("family index out of range");
  int best = n + 1;
  for (int j = 0; j < m(); ++j) {
    if (j == gamma) continue;
    best = std::min(best, ranks[static_cast<std::size_t>(j)].max());
  }
  return best;
}

bool instance_less(const Instance& a, const Instance& b) {
  if (a.n != b.n) return a.n < b.n;
  if (a.m() != b.m()) return a.m() < b.m();
  if (a.t != b.t) return a.t < b.t;
  for (int j = 0; j < a.m(); ++j) {
    const auto& ra = a.ranks[static_cast<std::size_t>(j)];
    const auto& rb = b.ranks[static_cast<std::size_t>(j)];
    if (ra != rb) return ra < rb;
  }
  return false;
}

bool instance_equal(const Instance& a, const Instance& b) {
  return !instance_less(a, b) && !instance_less(b, a);
}

std::string to_string(const Instance& inst) {
  std::string out = "n=" + std::to_string(inst.n);
  if (inst.t != 1) out += " t=" + std::to_string(inst.t);
  out += " ranks=";
  for (int j = 0; j < inst.m(); ++j) {
    if (j > 0) out += ";";
    out += to_string(inst.ranks[static_cast<std::size_t>(j)]);
  }
  return out;
}

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

SetFamily read_family(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty()) continue;
    if (s.rfind("n=", 0) != 0)
      throw std::invalid_argument("family file line " + std::to_string(lineno) +
                                  ": expected header n=<universe>");
    try {
      n = std::stoi(s.substr(2));
    } catch (const std::exception&) {
      throw std::invalid_argument("family file line " + std::to_string(lineno) +
                                  ": bad universe size");
    }
    break;
  }
  if (n < 0) throw std::invalid_argument("family file: missing n=<universe> header");
  SetFamily f(n);
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty()) continue;
    std::istringstream iss(s);
    std::vector<int> elems;
    int e;
    while (iss >> e) elems.push_back(e);
    if (!iss.eof())
      throw std::invalid_argument("family file line " + std::to_string(lineno) +
                                  ": expected space-separated integers");
    for (std::size_t i = 1; i < elems.size(); ++i)
      if (elems[i] <= elems[i - 1])
        throw std::invalid_argument("family file line " + std::to_string(lineno) +
                                    ": elements must be strictly ascending");
    try {
      f.insert(ElementSet::from_elements(n, elems));
    } catch (const std::invalid_argument& ex) {
      throw std::invalid_argument("family file line " + std::to_string(lineno) +
                                  ": " + ex.what());
    }
  }
  return f;
}

SetFamily read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open family file: " + path);
  return read_family(in);
}

void write_family(std::ostream& out, const SetFamily& f) {
  out << "n=" << f.universe() << "\n";
  for (const auto& [r, masks] : f.layers()) {
    for (SetMask m : masks) {
      bool first = true;
      for (SetMask rest = m; rest != 0; rest &= rest - 1) {
        if (!first) out << ' ';
        out << std::countr_zero(rest) + 1;
        first = false;
      }
      out << "\n";
    }
  }
}

void write_family_file(const std::string& path, const SetFamily& f) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  write_family(out, f);
}

}  // namespace xfam
