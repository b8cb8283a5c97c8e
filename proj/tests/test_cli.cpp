#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "cache.hpp"
#include "cli.hpp"
#include "doctest.h"
#include "shuffle/generators.hpp"

using namespace shuffle;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "shuffle_cli");
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("shuffle_cli_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("build prints the canonical text") {
  Run r = run({"--no-cache", "build", "P", "1", "5"});
  CHECK(r.code == cli::kExitPass);
  CHECK(r.out == "k=1 d=5\n1 * z1^5\n1\n");
  Run x = run({"--no-cache", "build", "X", "0,1"});
  CHECK(x.code == 0);
  CHECK(x.out == build_X(std::vector<int>{0, 1}).str());
}

TEST_CASE("cache round trip is byte-identical") {
  fs::path dir = fresh_dir("roundtrip");
  setenv("SHUFFLE_CACHE", dir.c_str(), 1);
  Run cold = run({"build", "P", "3", "1"});
  CHECK(fs::exists(dir / "P_3_1.txt"));
  Run warm = run({"build", "P", "3", "1"});
  CHECK(cold.code == 0);
  CHECK(cold.out == warm.out);
  CHECK(cold.out == build_P(3, 1).str());
  CHECK(ShuffleElement::parse(cold.out).str() == cold.out);

  Run js = run({"--json", "build", "P", "3", "1"});
  ShuffleElement back = cli::read_element(js.out);
  CHECK(back.str() == cold.out);
  CHECK(cli::to_json(back).dump() + "\n" == js.out);
  unsetenv("SHUFFLE_CACHE");
  fs::remove_all(dir);
}

TEST_CASE("corrupt cache entries are evicted") {
  fs::path dir = fresh_dir("evict");
  cli::Cache cache(dir, true);
  cache.put("P:2:1", build_P(2, 1).str());
  fs::path file = cache.path_for("P:2:1");
  REQUIRE(cache.get("P:2:1").has_value());

  std::string text;
  {
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  // flip one sign in the payload, keep the stale checksum
  auto pos = text.find("+ -1");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 4, "+ 1 ");
  std::ofstream(file, std::ios::trunc) << text;

  CHECK_FALSE(cache.get("P:2:1").has_value());
  CHECK(cache.evicted() == 1);
  CHECK_FALSE(fs::exists(file));

  std::ofstream(file, std::ios::trunc) << text;
  setenv("SHUFFLE_CACHE", dir.c_str(), 1);
  Run r = run({"build", "P", "2", "1"});
  CHECK(r.out == build_P(2, 1).str());
  CHECK(cache.get("P:2:1").value() == r.out);
  unsetenv("SHUFFLE_CACHE");
  fs::remove_all(dir);
}

TEST_CASE("wheel suite flags a corrupted element") {
  ShuffleElement p = build_P(3, 1);
  const Term& t = p.num().terms().front();
  // add the symmetric orbit of one monomial: still symmetric, no longer wheel
  std::vector<int> perm = {0, 1, 2};
  LaurentPoly orbit(3);
  do {
    orbit = orbit + LaurentPoly::monomial(t.mono, 1, 3).permuted(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  ShuffleElement bad = ShuffleElement::from_parts(3, p.num() + orbit, p.den());

  fs::path dir = fresh_dir("wheel");
  fs::create_directories(dir);
  std::ofstream(dir / "good.txt") << p.str();
  std::ofstream(dir / "bad.txt") << bad.str();

  Run good = run({"--no-cache", "verify", "wheel", "--element", (dir / "good.txt").string()});
  CHECK(good.code == cli::kExitPass);
  Run r = run({"--no-cache", "verify", "wheel", "--element", (dir / "bad.txt").string()});
  CHECK(r.code == cli::kExitFail);
  CHECK(r.out.find("symmetry") != std::string::npos);
  CHECK(r.out.find(" FAIL ") != std::string::npos);
  CHECK(r.out.find("z") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"verify", "nosuch"}).code == cli::kExitUsage);
  CHECK(run({"--max-k", "9", "verify", "hall"}).code == cli::kExitUsage);
  CHECK(run({"--no-cache", "build", "Z", "1"}).code == cli::kExitUsage);
  CHECK(run({"--no-cache", "build", "P", "2"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitPass);
  CHECK(run({"--no-cache", "--max-k", "2", "verify", "minimal"}).code == cli::kExitPass);
  CHECK(run({"--no-cache", "--max-terms", "3", "build", "P", "2", "1"}).code == cli::kExitFail);
}

TEST_CASE("pair, phi and delta subcommands") {
  Run p = run({"--no-cache", "pair", "--left-word", "3", "--right", "P:1:3"});
  CHECK(p.code == 0);
  CHECK(p.out == ParamScalar(alpha(1)).inverse().str() + "\n");
  Run f = run({"--no-cache", "phi", "P:1:0"});
  CHECK(f.code == 0);
  Run d = run({"--no-cache", "delta", "--mu", "1/2", "P:2:1"});
  CHECK(d.out.rfind("i=0 ", 0) == 0);
  CHECK(d.out.find("i=1 none") != std::string::npos);
}
