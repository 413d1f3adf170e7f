#include "xfam/textio.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace xfam {

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '\t') {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("expected an integer for ") + what +
                                ", got '" + s + "'");
  }
}

}  // namespace

RankSet parse_rank_set(const std::string& spec) {
  std::vector<int> ranks;
  for (const std::string& tok : split(spec, ',')) {
    if (tok.empty())
      throw std::invalid_argument("empty rank in rank-set spec '" + spec + "'");
    ranks.push_back(parse_int(tok, "rank"));
  }
  return RankSet(std::move(ranks));
}

std::vector<RankSet> parse_rank_sets(const std::string& spec) {
  std::vector<RankSet> out;
  for (const std::string& part : split(spec, ';')) {
    if (part.empty())
      throw std::invalid_argument("empty family in ranks spec '" + spec + "'");
    out.push_back(parse_rank_set(part));
  }
  return out;
}

std::string format_rank_set(const RankSet& r) { return to_string(r); }

std::string format_rank_sets(std::span<const RankSet> ranks) {
  std::string out;
  for (std::size_t j = 0; j < ranks.size(); ++j) {
    if (j > 0) out += ";";
    out += to_string(ranks[j]);
  }
  return out;
}

std::vector<Instance> grid_instances(int n_lo, int n_hi, std::span<const int> ms,
                                     int maxk) {
  if (n_lo < 1 || n_hi < n_lo)
    throw std::invalid_argument("grid: need 1 <= n_lo <= n_hi");
  if (maxk < 1 || maxk > n_lo)
    throw std::invalid_argument("grid: need 1 <= maxk <= n_lo");
  // all non-empty subsets of [1, maxk], by subset mask
  std::vector<RankSet> choices;
  for (unsigned mask = 1; mask < (1u << maxk); ++mask) {
    std::vector<int> ranks;
    for (int k = 1; k <= maxk; ++k)
      if ((mask >> (k - 1) & 1u) != 0) ranks.push_back(k);
    choices.emplace_back(std::move(ranks));
  }
  std::vector<Instance> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int m : ms) {
      if (m < 2) throw std::invalid_argument("grid: m must be >= 2");
      // multisets of rank-set choices, non-decreasing index tuples
      std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
      for (;;) {
        std::vector<RankSet> ranks;
        for (std::size_t i : idx) ranks.push_back(choices[i]);
        Instance inst(n, 1, std::move(ranks));
        if (inst.bound_applies()) out.push_back(std::move(inst));
        int pos = m - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == choices.size() - 1)
          --pos;
        if (pos < 0) break;
        std::size_t next = idx[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i < m; ++i) idx[static_cast<std::size_t>(i)] = next;
      }
    }
  }
  return out;
}

GridSpec parse_grid_spec(const std::string& text) {
  GridSpec spec;
  bool saw_n = false, saw_m = false, saw_maxk = false;
  std::istringstream iss(text);
  std::string tok;
  while (iss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("grid spec token '" + tok + "' is not key=value");
    std::string key = tok.substr(0, eq);
    std::string val = tok.substr(eq + 1);
    if (key == "n") {
      auto dots = val.find("..");
      if (dots == std::string::npos) {
        spec.n_lo = spec.n_hi = parse_int(val, "n");
      } else {
        spec.n_lo = parse_int(val.substr(0, dots), "n range start");
        spec.n_hi = parse_int(val.substr(dots + 2), "n range end");
      }
      saw_n = true;
    } else if (key == "m") {
      for (const std::string& part : split(val, ','))
        spec.ms.push_back(parse_int(part, "m"));
      saw_m = true;
    } else if (key == "maxk") {
      spec.maxk = parse_int(val, "maxk");
      saw_maxk = true;
    } else {
      throw std::invalid_argument("grid spec: unknown key '" + key + "'");
    }
  }
  if (!saw_n || !saw_m || !saw_maxk)
    throw std::invalid_argument("grid spec needs n=, m= and maxk= entries");
  return spec;
}

std::vector<Instance> read_instances(std::istream& in) {
  std::vector<Instance> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty()) continue;
    std::istringstream iss(s);
    std::string ntok, rtok, ttok;
    iss >> ntok >> rtok;
    if (rtok.empty())
      throw std::invalid_argument("instance file line " + std::to_string(lineno) +
                                  ": expected '<n> <ranks>'");
    int t = 1;
    if (iss >> ttok) t = parse_int(ttok, "t");
    out.emplace_back(parse_int(ntok, "n"), t, parse_rank_sets(rtok));
  }
  return out;
}

std::vector<Instance> read_instances_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  return read_instances(in);
}

}  // namespace xfam
