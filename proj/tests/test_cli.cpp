#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "xfam/textio.hpp"

// End-to-end checks of the installed binary: exit codes, JSON schemas and
// the family-file pipeline.

namespace {

struct CliResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix + std::string(XFAM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  int status = pclose(pipe);
  return CliResult{WEXITSTATUS(status), out};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("xfam_test_" + name);
}

}  // namespace

TEST_CASE("cli bound human and json output") {
  CliResult human = run_cli("bound --n 6 --ranks \"3;2\"");
  CHECK(human.exit_code == 0);
  CHECK(human.output.find("maximum:         17") != std::string::npos);

  CliResult js = run_cli("bound --n 6 --ranks \"3;2\" --json");
  CHECK(js.exit_code == 0);
  auto parsed = nlohmann::json::parse(js.output);
  CHECK(parsed["maximum"] == 17);
  CHECK(parsed["star_total"] == 15);
  CHECK(parsed["valid"] == true);
  CHECK(parsed["argmax"][0]["gamma"] == 1);
  CHECK(parsed["predicted_cases"][0]["case"] == "ii");
}

TEST_CASE("cli oracle matches the classic pair value") {
  CliResult res = run_cli("oracle --n 4 --ranks \"2;2\" --json");
  CHECK(res.exit_code == 0);
  auto parsed = nlohmann::json::parse(res.output);
  CHECK(parsed["maximum"] == 6);
  CHECK(parsed["method"] == "linitial");
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("bound --n 6").exit_code == 2);          // missing --ranks
  CHECK(run_cli("nonsense").exit_code == 2);             // unknown subcommand
  CHECK(run_cli("bound --n 6 --ranks \"0\"").exit_code == 1);  // bad rank
  CHECK(run_cli("oracle --n 6 --ranks \"3;3\" --t 2").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("verify --grid \"n=5..6 m=2 maxk=2\"").exit_code == 0);
}

TEST_CASE("XFAM_MAX_N lifts the oracle guard") {
  CliResult blocked = run_cli("oracle --n 13 --ranks \"1;1\"");
  CHECK(blocked.exit_code == 1);
  CHECK(blocked.output.find("max_n") != std::string::npos);
  CliResult res = run_cli("oracle --n 13 --ranks \"1;1\" --json",
                          "XFAM_MAX_N=13 ");
  CHECK(res.exit_code == 0);
  CHECK(nlohmann::json::parse(res.output)["maximum"] == 2);
}

TEST_CASE("cli compress pipeline") {
  auto in_path = temp_file("compress_in.fam");
  auto out_path = temp_file("compress_out.fam");
  {
    std::ofstream out(in_path);
    out << "n=3\n2 3\n";
  }
  CliResult res = run_cli("compress --in " + in_path.string() + " --out " +
                          out_path.string());
  CHECK(res.exit_code == 0);
  xfam::SetFamily f = xfam::read_family_file(out_path.string());
  CHECK(f == xfam::SetFamily::of(3, {{1, 2}}));
  std::filesystem::remove(in_path);
  std::filesystem::remove(out_path);
}

TEST_CASE("cli construct, genset and classify work together") {
  auto star_path = temp_file("star.fam");
  CliResult c1 = run_cli("construct --kind star --n 6 --ranks \"3\" --out " +
                         star_path.string());
  CHECK(c1.exit_code == 0);
  CHECK(xfam::read_family_file(star_path.string()).size() == 10);

  CliResult g = run_cli("genset --in " + star_path.string() + " --ranks \"3\"");
  CHECK(g.exit_code == 0);
  CHECK(g.output.find("extent 1") != std::string::npos);
  CHECK(g.output.find("{1}") != std::string::npos);

  // a full M1/M2 pair classifies as case ii
  auto m1_path = temp_file("m1.fam");
  auto m2_path = temp_file("m2.fam");
  CHECK(run_cli("construct --kind m1 --n 6 --ranks \"3\" --k 2 --out " +
                m1_path.string())
            .exit_code == 0);
  CHECK(run_cli("construct --kind m2 --n 6 --ranks \"2\" --k 2 --out " +
                m2_path.string())
            .exit_code == 0);
  CliResult cls = run_cli("classify --in " + m1_path.string() + " --in " +
                          m2_path.string() + " --n 6 --ranks \"3;2\" --json");
  CHECK(cls.exit_code == 0);
  auto parsed = nlohmann::json::parse(cls.output);
  CHECK(parsed["maximal"] == true);
  CHECK(parsed["matches"][0]["case"] == "ii");
  CHECK(parsed["matches"][0]["gamma"] == 1);

  // a non-maximal tuple is a diagnostic failure
  auto star2_path = temp_file("star2.fam");
  CHECK(run_cli("construct --kind star --n 6 --ranks \"2\" --out " +
                star2_path.string())
            .exit_code == 0);
  CliResult bad = run_cli("classify --in " + star_path.string() + " --in " +
                          star2_path.string() + " --n 6 --ranks \"3;2\"");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("17") != std::string::npos);

  for (const auto& p : {star_path, m1_path, m2_path, star2_path})
    std::filesystem::remove(p);
}

TEST_CASE("cli construct writes tuple files with suffixes") {
  auto f2_path = temp_file("f2.fam");
  {
    std::ofstream out(f2_path);
    out << "n=6\n1 2 3\n1 2 4\n";
  }
  auto out_prefix = temp_file("pair");
  CliResult res = run_cli("construct --kind case_iii --n 6 --k1 3 --k2 3 --f2 " +
                          f2_path.string() + " --out " + out_prefix.string());
  CHECK(res.exit_code == 0);
  CHECK(xfam::read_family_file(out_prefix.string() + ".1").size() == 18);
  CHECK(xfam::read_family_file(out_prefix.string() + ".2").size() == 2);
  std::filesystem::remove(f2_path);
  std::filesystem::remove(out_prefix.string() + ".1");
  std::filesystem::remove(out_prefix.string() + ".2");
}

TEST_CASE("cli verify file input and mismatch-free grids") {
  auto grid_path = temp_file("grid.txt");
  {
    std::ofstream out(grid_path);
    out << "# one instance per line\n6 3;2\n6 3;3\n4 3;2\n";
  }
  CliResult res = run_cli("verify --grid " + grid_path.string() + " --json");
  CHECK(res.exit_code == 0);
  auto parsed = nlohmann::json::parse(res.output);
  CHECK(parsed["mismatches"] == 0);
  CHECK(parsed["instances"].size() == 2);
  CHECK(parsed["skipped"].size() == 1);  // 4 < k1 + k2
  std::filesystem::remove(grid_path);
}

TEST_CASE("rank spec syntax round-trips") {
  auto ranks = xfam::parse_rank_sets("2,3;1");
  REQUIRE(ranks.size() == 2);
  CHECK(ranks[0] == xfam::RankSet{2, 3});
  CHECK(ranks[1] == xfam::RankSet{1});
  CHECK(xfam::format_rank_sets(ranks) == "2,3;1");
  CHECK(xfam::parse_rank_sets(xfam::format_rank_sets(ranks)) == ranks);
  CHECK_THROWS_AS(xfam::parse_rank_sets("2;;1"), std::invalid_argument);
  CHECK_THROWS_AS(xfam::parse_rank_sets("a;1"), std::invalid_argument);
  CHECK_THROWS_AS(xfam::parse_rank_sets(""), std::invalid_argument);
}

TEST_CASE("grid spec parsing") {
  auto spec = xfam::parse_grid_spec("n=5..8 m=2,3 maxk=4");
  CHECK(spec.n_lo == 5);
  CHECK(spec.n_hi == 8);
  CHECK(spec.ms == std::vector<int>{2, 3});
  CHECK(spec.maxk == 4);
  auto single = xfam::parse_grid_spec("n=6 m=2 maxk=3");
  CHECK(single.n_lo == 6);
  CHECK(single.n_hi == 6);
  CHECK_THROWS_AS(xfam::parse_grid_spec("m=2 maxk=3"), std::invalid_argument);
  CHECK_THROWS_AS(xfam::parse_grid_spec("n=5..8 m=2 maxk=3 bogus=1"),
                  std::invalid_argument);
}
