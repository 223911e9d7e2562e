#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SOULE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string scratch_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() / ("soule_cli_" + tag + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir.string();
}

}  // namespace

TEST_CASE("exit code matrix") {
  struct Case {
    const char* args;
    int code;
  };
  const Case cases[] = {
      {"bernoulli --chi -4 --m 7 --vp 61", 0},
      {"bernoulli --m 0..4", 0},
      {"bernoulli --m -1", 1},
      {"bernoulli --m 5..2", 1},
      {"verify kersey --dK 4 --p 5 --n 1 --prec 256", 0},
      {"verify distribution --dK 3 --p 7 --prec 256", 0},
      {"verify kersey --dK 4 --p 7 --n 1", 1},
      {"verify kersey --dK 5 --p 7 --n 1", 1},
      {"verify nonsense --dK 4 --p 5", 1},
      {"verify kersey-mult --dK 4 --p 5 --c 2 --Na 9", 0},
      {"verify kersey-mult --dK 4 --p 5 --c 2 --Na 3", 1},
      {"verify theta-a --dK 4 --alpha 1,1", 0},
      {"verify theta-a --dK 4 --alpha 1,1 --self-test-perturb 80", 2},
      {"verify norm-units --dK 4 --p 5 --prec 100", 1},
      {"verify norm-units --dK 4 --p 5 --guard 8", 1},
      {"criterion --dK 4 --pmax 70", 0},
      {"criterion --pmax 3", 0},
      {"criterion --dK 4 --pmax 20000", 1},
      {"nu-table --dK 4 --p 5 --n 1", 0},
      {"nu-table --dK 4 --p 5 --n 9", 1},
      {"nu-table --dK 4 --p 7 --n 1", 1},
      {"", 1},
  };
  for (const auto& c : cases) CHECK_MESSAGE(run(c.args).code == c.code, c.args);
}

TEST_CASE("bernoulli output") {
  const auto j = nlohmann::json::parse(run("bernoulli --chi -4 --m 7 --vp 61").out);
  CHECK(j["results"][0]["value"] == "427/2");
  CHECK(j["results"][0]["v_p"]["61"] == 1);
  CHECK(run("bernoulli --m 0..4 --format csv").out == "m,value\n0,1\n1,-1/2\n2,1/6\n3,0\n4,-1/30\n");
}

TEST_CASE("criterion output") {
  const auto j = nlohmann::json::parse(run("criterion --dK 4 --pmax 70").out);
  bool listed = false;
  for (const auto& c : j["paper_claims"])
    if (c["id"] == "Q(i) first passing split primes") {
      listed = true;
      CHECK(c["agree"] == true);
    }
  CHECK(listed);
  CHECK(nlohmann::json::parse(run("criterion --pmax 3").out)["results"].empty());
  const auto q2 = nlohmann::json::parse(run("criterion --dK 8 --pmax 50").out);
  int flagged = 0;
  for (const auto& c : q2["paper_claims"])
    if (c["agree"] == false && c["computed"].get<std::string>().rfind("inert", 0) == 0) ++flagged;
  CHECK(flagged == 4);
}

TEST_CASE("nu-table CSV") {
  const std::string csv = run("nu-table --dK 4 --p 5 --n 1 --format csv").out;
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 81);
  const std::string hex = run("nu-table --dK 3 --p 7 --n 1 --format csv").out;
  CHECK(std::count(hex.begin(), hex.end(), '\n') == 1 + 6 * 21);
}

TEST_CASE("reports are reproducible with cold and warm caches") {
  const std::string dir = scratch_dir("determinism");
  const std::string args = "--stable --cache-dir " + dir + " verify kersey --dK 8 --p 11 --n 1 --jobs 3";
  const Run cold = run(args);
  const Run warm = run(args);
  const Run none = run("--stable verify kersey --dK 8 --p 11 --n 1");
  CHECK(cold.code == 0);
  CHECK(cold.out == warm.out);
  CHECK(nlohmann::json::parse(cold.out)["results"] == nlohmann::json::parse(none.out)["results"]);
  CHECK(std::filesystem::exists(std::filesystem::path(dir) / "series.json"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("output file") {
  const std::string dir = scratch_dir("out");
  std::filesystem::create_directories(dir);
  const std::string path = dir + "/report.json";
  CHECK(run("--out " + path + " bernoulli --m 2").code == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(nlohmann::json::parse(ss.str())["results"][0]["value"] == "1/6");
  std::filesystem::remove_all(dir);
}
