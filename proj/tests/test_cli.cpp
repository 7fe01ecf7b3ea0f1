#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "knotgrid/serialize.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / "knotgrid_cli_tests";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

RunResult run_cli(const std::string& args) {
  const fs::path out_file = work_dir() / "stdout.txt";
  const std::string cmd =
      std::string(KNOTGRID_CLI_PATH) + " " + args + " > " + out_file.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_file);
  return r;
}

}  // namespace

TEST_CASE("cli build/decode round trip normalizes the input file") {
  const fs::path bits = work_dir() / "r.txt";
  const fs::path config = work_dir() / "c.json";
  spit(bits, "# fixture\n10\n01 # row two\n");

  const auto build = run_cli("build --bits " + bits.string() + " --out " + config.string());
  CHECK(build.exit_code == 0);

  const auto decode = run_cli("decode --config " + config.string());
  CHECK(decode.exit_code == 0);
  CHECK(decode.out == "10\n01\n");

  const auto verified = run_cli("decode --config " + config.string() + " --verified");
  CHECK(verified.exit_code == 0);
  CHECK(verified.out == "10\n01\n");
}

TEST_CASE("cli compare distinguishes tails and reports the witness row") {
  const fs::path a_bits = work_dir() / "a.txt";
  const fs::path b_bits = work_dir() / "b.txt";
  const fs::path a_cfg = work_dir() / "a.json";
  const fs::path b_cfg = work_dir() / "b.json";
  spit(a_bits, "10\n01\n");
  spit(b_bits, "11\n01\n");  // differs in row 0 only
  REQUIRE(run_cli("build --bits " + a_bits.string() + " --out " + a_cfg.string()).exit_code == 0);
  REQUIRE(run_cli("build --bits " + b_bits.string() + " --out " + b_cfg.string()).exit_code == 0);

  const auto same = run_cli("compare --a " + a_cfg.string() + " --b " + a_cfg.string() + " --m 0");
  CHECK(same.exit_code == 0);
  CHECK(same.out.find("equivalent") == 0);

  const auto tail = run_cli("compare --a " + a_cfg.string() + " --b " + b_cfg.string() + " --m 1");
  CHECK(tail.exit_code == 0);
  CHECK(tail.out.find("equivalent") == 0);
  CHECK(tail.out.find("first differing row: none") != std::string::npos);

  const auto head = run_cli("compare --a " + a_cfg.string() + " --b " + b_cfg.string() + " --m 0");
  CHECK(head.exit_code == 1);
  CHECK(head.out.find("inequivalent") == 0);
  CHECK(head.out.find("first differing row: 0") != std::string::npos);
}

TEST_CASE("cli invariant prints the three invariants") {
  const auto r = run_cli("invariant --q 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("determinant 3\n") != std::string::npos);
  CHECK(r.out.find("alexander {\"-1\":1,\"0\":-1,\"1\":1}") != std::string::npos);
  CHECK(r.out.find("jones {\"-12\":1,\"-16\":-1,\"-4\":1}") != std::string::npos);

  const auto by_index = run_cli("invariant --type-index 1");
  CHECK(by_index.exit_code == 0);
  CHECK(by_index.out.find("determinant 5\n") != std::string::npos);

  CHECK(run_cli("invariant --q 4").exit_code == 2);
  CHECK(run_cli("invariant").exit_code == 2);
  CHECK(run_cli("invariant --q 3 --type-index 1").exit_code == 2);
  // above the state-sum cap the command refuses instead of guessing
  CHECK(run_cli("invariant --q 31").exit_code == 2);
}

TEST_CASE("cli verify reports the property suite") {
  const fs::path bits = work_dir() / "v.txt";
  const fs::path cfg = work_dir() / "v.json";
  spit(bits, "1\n");
  REQUIRE(run_cli("build --bits " + bits.string() + " --out " + cfg.string()).exit_code == 0);

  const auto r = run_cli("verify --config " + cfg.string());
  CHECK(r.exit_code == 0);
  for (const char* name : {"B1 pass", "B2 pass", "B3 pass", "B4 pass", "B5 pass"}) {
    CHECK(r.out.find(name) != std::string::npos);
  }
  CHECK(r.out.find("components pass 10 (expected 10)") != std::string::npos);
}

TEST_CASE("cli distance on point clouds and configurations") {
  const fs::path a = work_dir() / "a.xyz";
  const fs::path b = work_dir() / "b.xyz";
  spit(a, "0 0 0\n");
  spit(b, "1 0 0\n# comment\n");
  const auto r = run_cli("distance --a " + a.string() + " --b " + b.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("distance 1.000000000000") != std::string::npos);
  CHECK(r.out.find("error_bound 0.000000000000") != std::string::npos);

  const fs::path bits = work_dir() / "d.txt";
  const fs::path cfg = work_dir() / "d.json";
  spit(bits, "0\n");
  REQUIRE(run_cli("build --bits " + bits.string() + " --out " + cfg.string()).exit_code == 0);
  const auto self = run_cli("distance --a " + cfg.string() + " --b " + cfg.string());
  CHECK(self.exit_code == 0);
  CHECK(self.out.find("distance 0.000000000000") != std::string::npos);
}

TEST_CASE("cli export writes obj polylines") {
  const fs::path bits = work_dir() / "e.txt";
  const fs::path cfg = work_dir() / "e.json";
  const fs::path obj = work_dir() / "e.obj";
  spit(bits, "1\n");
  REQUIRE(run_cli("build --bits " + bits.string() + " --out " + cfg.string()).exit_code == 0);
  const auto r = run_cli("export --config " + cfg.string() + " --out " + obj.string());
  CHECK(r.exit_code == 0);
  const std::string text = slurp(obj);
  CHECK(text.find("o knot_0_0_0") != std::string::npos);
  CHECK(text.find("\nl ") != std::string::npos);
}

TEST_CASE("cli verify flags a tampered configuration") {
  const fs::path bits = work_dir() / "t.txt";
  const fs::path cfg = work_dir() / "t.json";
  const fs::path bad = work_dir() / "t_bad.json";
  spit(bits, "0\n");
  REQUIRE(run_cli("build --bits " + bits.string() + " --out " + cfg.string()).exit_code == 0);

  // inflate every radius until the capsule pair overlaps
  std::string text = slurp(cfg);
  const std::string needle = "\"0.0625\"";
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at)) {
    text.replace(at, needle.size(), "\"0.75\"");
  }
  spit(bad, text);

  const auto r = run_cli("verify --config " + bad.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("B1 FAIL") != std::string::npos);
  CHECK(r.out.find("components skipped") != std::string::npos);
}

TEST_CASE("cli compare rejects mismatched windows") {
  const fs::path small_bits = work_dir() / "m1.txt";
  const fs::path large_bits = work_dir() / "m2.txt";
  const fs::path small_cfg = work_dir() / "m1.json";
  const fs::path large_cfg = work_dir() / "m2.json";
  spit(small_bits, "0\n");
  spit(large_bits, "00\n11\n");
  REQUIRE(run_cli("build --bits " + small_bits.string() + " --out " + small_cfg.string()).exit_code == 0);
  REQUIRE(run_cli("build --bits " + large_bits.string() + " --out " + large_cfg.string()).exit_code == 0);
  CHECK(run_cli("compare --a " + small_cfg.string() + " --b " + large_cfg.string() + " --m 0")
            .exit_code == 2);
}

TEST_CASE("cli export handles chain documents") {
  const fs::path chain_json = work_dir() / "chain.json";
  const fs::path chain_obj = work_dir() / "chain.obj";
  spit(chain_json, knotgrid::chain_to_json(knotgrid::build_order_configuration({1, 0, 2})));
  const auto r = run_cli("export --config " + chain_json.string() + " --out " + chain_obj.string());
  CHECK(r.exit_code == 0);
  const std::string text = slurp(chain_obj);
  CHECK(text.find("o chain_0") != std::string::npos);
  CHECK(text.find("o chain_2") != std::string::npos);
}

TEST_CASE("cli usage and io errors exit with 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("build --bits /nonexistent/path --out /tmp/x.json").exit_code == 2);
  CHECK(run_cli("decode --config /nonexistent/path").exit_code == 2);
  const fs::path junk = work_dir() / "junk.json";
  spit(junk, "{ not json");
  CHECK(run_cli("decode --config " + junk.string()).exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
