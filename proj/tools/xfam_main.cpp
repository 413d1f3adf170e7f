// xfam: bounds, oracle runs, verification sweeps, extremal constructions,
// compression and generating-set inspection for cross-intersecting set
// families.
//
// Exit codes: 0 success, 1 diagnostic failure, 2 usage error, 3 verify
// mismatch.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xfam/bounds.hpp"
#include "xfam/compress.hpp"
#include "xfam/core.hpp"
#include "xfam/extremal.hpp"
#include "xfam/genset.hpp"
#include "xfam/json_io.hpp"
#include "xfam/oracle.hpp"
#include "xfam/textio.hpp"

namespace {

using namespace xfam;

constexpr int kExitOk = 0;
constexpr int kExitDiagnostic = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

OracleOptions oracle_options_from_env() {
  OracleOptions opts;
  if (const char* env = std::getenv("XFAM_MAX_N")) {
    try {
      opts.max_n = std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("XFAM_MAX_N is not an integer");
    }
  }
  return opts;
}

std::string format_profile(const std::vector<std::vector<LayerCount>>& profile) {
  std::string out;
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (j > 0) out += "  ";
    out += "F" + std::to_string(j + 1) + ":";
    for (const auto& lc : profile[j])
      out += " s[" + std::to_string(lc.rank) + "]=" + std::to_string(lc.count);
  }
  return out;
}

struct BoundArgs {
  int n = 0;
  std::string ranks;
  bool as_json = false;
};

int run_bound(const BoundArgs& args) {
  auto ranks = parse_rank_sets(args.ranks);
  BoundReport rep = compute_bound(args.n, ranks);
  if (args.as_json) {
    std::cout << to_json(rep).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "instance: n=" << rep.n << " ranks=" << format_rank_sets(rep.ranks)
            << " (m=" << rep.ranks.size() << ")\n";
  std::cout << "validity: " << (rep.valid ? "n >= k1+k2" : "n < k1+k2 (bound not asserted)")
            << "  [k1=" << rep.k1 << " k2=" << rep.k2 << "]\n";
  std::cout << "star total:      " << rep.star_total << "\n";
  for (const auto& c : rep.candidates)
    std::cout << "candidate gamma=" << c.gamma + 1 << " (k_min=" << c.k_min
              << "): " << c.value << "\n";
  std::cout << "maximum:         " << rep.maximum << "\n";
  std::cout << "argmax:         ";
  if (rep.star_argmax) std::cout << " star";
  for (int g : rep.argmax_gammas) std::cout << " gamma=" << g + 1;
  std::cout << "\n";
  std::cout << "predicted cases:";
  for (const auto& p : rep.predicted) {
    std::cout << " " << case_name(p.kase);
    if (p.gamma >= 0) std::cout << "(gamma=" << p.gamma + 1 << ")";
  }
  std::cout << "\n";
  return kExitOk;
}

struct OracleArgs {
  int n = 0;
  std::string ranks;
  int t = 1;
  std::string method = "linitial";
  std::uint64_t layer_cap = 12;
  bool as_json = false;
};

int run_oracle(const OracleArgs& args) {
  Instance inst(args.n, args.t, parse_rank_sets(args.ranks));
  OracleOptions opts = oracle_options_from_env();
  opts.max_layer_sets = args.layer_cap;
  OracleResult res;
  if (args.method == "linitial") {
    res = linitial_oracle(inst, opts);
  } else if (args.method == "exhaustive") {
    res = exhaustive_oracle(inst, opts);
  } else {
    throw CLI::ValidationError("--method must be linitial or exhaustive");
  }
  if (args.as_json) {
    std::cout << to_json(res).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "instance: " << to_string(inst) << "\n";
  std::cout << "method:   " << (res.method == OracleMethod::LInitial ? "linitial" : "exhaustive")
            << "\n";
  std::cout << "maximum:  " << res.maximum << "\n";
  std::cout << "profile:  " << format_profile(res.profile) << "\n";
  std::cout << "stats:    nodes=" << res.nodes << " seconds=" << res.seconds << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string grid;
  bool as_json = false;
};

int run_verify(const VerifyArgs& args) {
  std::vector<Instance> instances;
  if (std::filesystem::exists(args.grid)) {
    instances = read_instances_file(args.grid);
  } else {
    GridSpec spec = parse_grid_spec(args.grid);
    instances = grid_instances(spec.n_lo, spec.n_hi, spec.ms, spec.maxk);
  }
  SweepReport rep = verify_sweep(instances, oracle_options_from_env());
  if (args.as_json) {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    for (const auto& e : rep.entries)
      std::cout << (e.equal ? "ok      " : "MISMATCH") << "  " << to_string(e.instance)
                << "  oracle=" << e.oracle_max << " bound=" << e.bound_max
                << "  case=" << e.classified << "\n";
    for (const auto& s : rep.skipped)
      std::cout << "skipped   " << to_string(s.instance) << "  (" << s.reason << ")\n";
    std::cout << "instances: " << rep.entries.size() << "  mismatches: " << rep.mismatches
              << "  unclassified: " << rep.unclassified << "\n";
  }
  return rep.mismatches == 0 ? kExitOk : kExitMismatch;
}

struct ConstructArgs {
  std::string kind;
  int n = 0;
  std::string ranks;
  int k = 0;
  int k1 = 0, k2 = 0;
  int m = 0;
  std::string f2_path;
  std::string family_path;
  std::string out;
};

int run_construct(const ConstructArgs& args) {
  if (args.kind == "star" || args.kind == "m1" || args.kind == "m2") {
    RankSet r = parse_rank_set(args.ranks);
    SetFamily f = args.kind == "star" ? construct_star(args.n, r)
                  : args.kind == "m1" ? construct_m1(args.n, r, args.k)
                                      : construct_m2(args.n, r, args.k);
    write_family_file(args.out, f);
    std::cout << "wrote " << f.size() << " sets to " << args.out << "\n";
    return kExitOk;
  }
  FamilyTuple tuple;
  if (args.kind == "case_iii") {
    tuple = construct_case_iii(args.n, args.k1, args.k2, read_family_file(args.f2_path));
  } else if (args.kind == "case_iv") {
    tuple = construct_case_iv(args.n, args.k, args.m, read_family_file(args.family_path));
  } else {
    throw CLI::ValidationError("--kind must be star, m1, m2, case_iii or case_iv");
  }
  for (int j = 0; j < tuple.m(); ++j) {
    std::string path = args.out + "." + std::to_string(j + 1);
    write_family_file(path, tuple.families[static_cast<std::size_t>(j)]);
    std::cout << "wrote " << tuple.families[static_cast<std::size_t>(j)].size()
              << " sets to " << path << "\n";
  }
  return kExitOk;
}

struct CompressArgs {
  std::string in;
  std::string out;
};

int run_compress(const CompressArgs& args) {
  SetFamily f = read_family_file(args.in);
  SetFamily compressed = left_compress(f);
  if (args.out.empty()) {
    write_family(std::cout, compressed);
  } else {
    write_family_file(args.out, compressed);
    std::cout << "wrote " << compressed.size() << " sets to " << args.out << "\n";
  }
  return kExitOk;
}

struct GensetArgs {
  std::string in;
  std::string ranks;
};

int run_genset(const GensetArgs& args) {
  SetFamily f = read_family_file(args.in);
  RankSet r = parse_rank_set(args.ranks);
  GeneratingFamily g = generating_family(f, r);
  std::cout << "family: " << f.size() << " sets over [" << f.universe() << "], ranks "
            << format_rank_set(r) << "\n";
  std::cout << "left-compressed: " << (is_left_compressed(f) ? "yes" : "no") << "\n";
  if (g.generators.empty()) {
    std::cout << "generators: none (empty family)\n";
    return kExitOk;
  }
  std::cout << "generators (" << g.generators.size() << "), extent " << extent(g) << ":\n";
  std::uint64_t cell_total = 0;
  for (const auto& e : g.generators.members()) {
    SetFamily c = cell(e, r, f.universe());
    cell_total += c.size();
    std::cout << "  " << to_string(e) << "  cell size " << c.size() << "\n";
  }
  std::cout << "cell total: " << cell_total << " (family size " << f.size() << ")\n";
  return kExitOk;
}

struct ClassifyArgs {
  std::vector<std::string> inputs;
  int n = 0;
  std::string ranks;
  bool as_json = false;
};

int run_classify(const ClassifyArgs& args) {
  Instance inst(args.n, 1, parse_rank_sets(args.ranks));
  if (static_cast<int>(args.inputs.size()) != inst.m())
    throw std::invalid_argument("classify: number of family files must match the ranks");
  FamilyTuple tuple{inst.n, inst.ranks, {}};
  for (const auto& path : args.inputs)
    tuple.families.push_back(read_family_file(path));
  Classification cls = classify(tuple, inst);
  if (args.as_json) {
    std::cout << to_json(cls).dump(2) << "\n";
    return cls.maximal ? kExitOk : kExitDiagnostic;
  }
  if (!cls.maximal) {
    std::cerr << "error: tuple total " << cls.tuple_total
              << " does not attain the bound maximum " << cls.bound_maximum << "\n";
    return kExitDiagnostic;
  }
  std::cout << "total: " << cls.tuple_total << " (maximal)\n";
  if (cls.matches.empty()) {
    std::cout << "case: none (unexplained optimum)\n";
    return kExitOk;
  }
  for (const auto& m : cls.matches) {
    std::cout << "case " << case_name(m.kase);
    if (m.gamma >= 0) std::cout << " (gamma=" << m.gamma + 1 << ")";
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cross-intersecting set family toolkit"};
  app.require_subcommand(1);

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "evaluate the sum bound and equality cases");
  bound->add_option("--n", bound_args.n, "universe size")->required();
  bound->add_option("--ranks", bound_args.ranks, "rank sets, e.g. \"3;2,1\"")->required();
  bound->add_flag("--json", bound_args.as_json, "JSON output");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "maximize the summed size by search");
  oracle->add_option("--n", oracle_args.n, "universe size")->required();
  oracle->add_option("--ranks", oracle_args.ranks, "rank sets")->required();
  oracle->add_option("--t", oracle_args.t, "intersection depth (default 1)");
  oracle->add_option("--method", oracle_args.method, "linitial (default) or exhaustive");
  oracle->add_option("--layer-cap", oracle_args.layer_cap,
                     "per-layer C(n,a) cap for the exhaustive method (default 12)");
  oracle->add_flag("--json", oracle_args.as_json, "JSON output");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "compare oracle and bound over a grid");
  verify->add_option("--grid", verify_args.grid,
                     "instance file, or inline spec like \"n=5..8 m=2 maxk=4\"")
      ->required();
  verify->add_flag("--json", verify_args.as_json, "JSON output");

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "write extremal families");
  construct->add_option("--kind", construct_args.kind,
                        "star | m1 | m2 | case_iii | case_iv")->required();
  construct->add_option("--n", construct_args.n, "universe size")->required();
  construct->add_option("--ranks", construct_args.ranks, "rank set (star/m1/m2)");
  construct->add_option("--k", construct_args.k, "prefix length (m1/m2) or k (case_iv)");
  construct->add_option("--k1", construct_args.k1, "first cardinality (case_iii)");
  construct->add_option("--k2", construct_args.k2, "second cardinality (case_iii)");
  construct->add_option("--m", construct_args.m, "family count (case_iv)");
  construct->add_option("--f2", construct_args.f2_path, "F2 family file (case_iii)");
  construct->add_option("--family", construct_args.family_path,
                        "repeated family file (case_iv)");
  construct->add_option("--out", construct_args.out,
                        "output file (tuples get .1, .2, ... suffixes)")->required();

  CompressArgs compress_args;
  auto* compress = app.add_subcommand("compress", "left-compress a family file");
  compress->add_option("--in", compress_args.in, "input family file")->required();
  compress->add_option("--out", compress_args.out, "output file (stdout when absent)");

  GensetArgs genset_args;
  auto* genset = app.add_subcommand("genset", "generators, extent and cell sizes");
  genset->add_option("--in", genset_args.in, "input family file")->required();
  genset->add_option("--ranks", genset_args.ranks, "rank set, e.g. \"2,3\"")->required();

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "match a tuple to an equality case");
  classify_cmd->add_option("--in", classify_args.inputs, "family files, one per family")
      ->required();
  classify_cmd->add_option("--n", classify_args.n, "universe size")->required();
  classify_cmd->add_option("--ranks", classify_args.ranks, "rank sets")->required();
  classify_cmd->add_flag("--json", classify_args.as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (bound->parsed()) return run_bound(bound_args);
    if (oracle->parsed()) return run_oracle(oracle_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (construct->parsed()) return run_construct(construct_args);
    if (compress->parsed()) return run_compress(compress_args);
    if (genset->parsed()) return run_genset(genset_args);
    if (classify_cmd->parsed()) return run_classify(classify_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDiagnostic;
  }
  return kExitUsage;
}
