#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {
struct Run {
  int status = -1;
  std::string output;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + std::string(TVD_BIN) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), buf.size(), pipe) != nullptr) r.output += buf.data();
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string scenario(const std::string& name) { return std::string(TVD_SOURCE_DIR) + "/scenarios/" + name + ".json"; }

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "tvd_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check reports the kaon decay violation") {
    const Run r = run("check --scenario " + scenario("kaon-decay"));
    CHECK(r.status == 0);
    CHECK(r.output.find("\"outcome\": \"Violation\"") != std::string::npos);
    CHECK(r.output.find("\"margin\": 0.20000000000000001") != std::string::npos);
  }

  TEST_CASE("invariant scenario exits zero with no violations") {
    const Run r = run("check --format text --scenario " + scenario("t-symmetric-s"));
    CHECK(r.status == 0);
    CHECK(r.output.find("Violation") == std::string::npos);
    CHECK(r.output.find("NoConclusion") != std::string::npos);
  }

  TEST_CASE("missing file") {
    const Run r = run("check --scenario /nonexistent/where.json");
    CHECK(r.status == 2);
    CHECK(r.output.find("/nonexistent/where.json") != std::string::npos);
  }

  TEST_CASE("malformed scenario") {
    const auto path = scratch() / "broken.json";
    std::ofstream(path) << R"({"schema_version": 1, "dim": 2, "requests": [{"detector": "nope"}]})";
    const Run r = run("check --scenario " + path.string());
    CHECK(r.status == 2);
    CHECK(r.output.find(path.string()) != std::string::npos);
  }

  TEST_CASE("bad tolerance flags") {
    CHECK(run("check --tol-zero 1e-3 --tol-violation 1e-4 --scenario " + scenario("kaon-decay")).status == 2);
    CHECK(run("check --tol-zero -1 --scenario " + scenario("kaon-decay")).status == 2);
    CHECK(run("check --scenario " + scenario("kaon-decay"), "TVD_TOL_ZERO=abc").status == 2);
  }

  TEST_CASE("flags override the environment") {
    const Run env = run("check --scenario " + scenario("kaon-decay"), "TVD_TOL_VIOLATION=0.5");
    CHECK(env.output.find("\"outcome\": \"NoConclusion\"") != std::string::npos);
    const Run flag = run("check --tol-violation 1e-3 --scenario " + scenario("kaon-decay"), "TVD_TOL_VIOLATION=0.5");
    CHECK(flag.output.find("\"outcome\": \"Violation\"") != std::string::npos);
    const Run seed = run("check --seed 9 --scenario " + scenario("kaon-decay"), "TVD_SEED=4");
    CHECK(seed.output.find("\"seed\": 9") != std::string::npos);
  }

  TEST_CASE("models emit runnable scenarios") {
    const auto edm = scratch() / "edm.json";
    CHECK(run("models edm --param j=1/2 --param g=1 --param E=z --out " + edm.string()).status == 0);
    const Run r = run("check --format text --scenario " + edm.string());
    CHECK(r.status == 0);
    CHECK(r.output.find("wigner  Violation(T)") != std::string::npos);

    const auto kaon = scratch() / "kaon.json";
    CHECK(run("models kaon-oscillation --param w=i --out " + kaon.string()).status == 0);
    const Run k = run("check --format text --scenario " + kaon.string());
    CHECK(k.output.find("kabir  Violation(T on S)") != std::string::npos);

    const Run bad = run("models edm --param j=0.3");
    CHECK(bad.status == 2);
    CHECK(bad.output.find("j") != std::string::npos);
    CHECK(run("models nope").status == 2);
  }

  TEST_CASE("oracle agreement and negative control") {
    const Run ok = run("oracle --scenario " + scenario("kaon-decay"));
    CHECK(ok.status == 0);
    CHECK(ok.output.find("0 disagree") != std::string::npos);

    const auto report = scratch() / "flipped.json";
    CHECK(run("check --scenario " + scenario("kaon-decay") + " --out " + report.string()).status == 0);
    std::string text;
    {
      std::ifstream in(report);
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    text.replace(text.find("\"Violation\""), 11, "\"NoConclusion\"");
    std::ofstream(report) << text;
    const Run bad = run("oracle --scenario " + scenario("kaon-decay") + " --report " + report.string());
    CHECK(bad.status == 3);
    CHECK(bad.output.find("1 disagree") != std::string::npos);
  }

  TEST_CASE("selftest configuration error comes before any suite") {
    const Run r = run("selftest", "TVD_TOL_ZERO=1e-3 TVD_TOL_VIOLATION=1e-4");
    CHECK(r.status == 2);
    CHECK(r.output.find("linalg") == std::string::npos);
  }

  TEST_CASE("jobs do not change output") {
    const std::string all = scenario("kaon-decay") + " " + scenario("edm-spin-one") + " " + scenario("t-symmetric-s");
    const Run one = run("check --jobs 1 --scenario " + all);
    const Run four = run("check --jobs 4 --scenario " + all);
    CHECK(one.status == 0);
    CHECK(one.output == four.output);
  }
}
