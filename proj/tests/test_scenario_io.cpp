#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "tvd/runner.hpp"
#include "tvd/scenario_io.hpp"
#include "tvd/selftest.hpp"

namespace io = tvd::io;

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* kMinimal = R"({
  "schema_version": 1,
  "dim": 2,
  "matrices": {"hamiltonian": [[[1, 0], [0, 0]], [[0, 0], [-1, 0]]]},
  "symmetries": [{"label": "T", "unitary_part": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]], "antilinear": true}],
  "requests": [{"detector": "wigner", "symmetry": "T"}]
})";

std::string expect_error(const std::string& text) {
  try {
    io::parse_scenario(text);
  } catch (const io::ScenarioError& e) {
    return std::string(e.path()) + " | " + e.what();
  }
  return "no error";
}
}  // namespace

TEST_SUITE("scenario_io") {
  TEST_CASE("minimal document") {
    const io::Scenario s = io::parse_scenario(kMinimal);
    CHECK(s.dim == 2);
    REQUIRE(s.requests.size() == 1);
    CHECK(s.requests[0].id == "0");
    CHECK(s.requests[0].detector == io::Detector::Wigner);
    const io::Report r = tvd::run_scenario(s, {});
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].outcome == "NoConclusion");
  }

  TEST_CASE("referential integrity") {
    std::string text = kMinimal;
    const std::string from = R"({"detector": "wigner", "symmetry": "T"})";
    text.replace(text.find(from), from.size(),
                 R"({"detector": "kabir", "symmetry": "T", "state_in": "psi9", "state_out": "psi9"})");
    const std::string err = expect_error(text);
    CHECK(err.find("psi9") != std::string::npos);
    CHECK(err.find("$.requests[0]") != std::string::npos);
  }

  TEST_CASE("validation errors name their location") {
    std::string text = kMinimal;
    text.replace(text.find("[[0, 0], [-1, 0]]"), 17, "[[5, 0], [-1, 0]]");
    CHECK(expect_error(text).find("$.matrices.hamiltonian") != std::string::npos);
    std::string extra = kMinimal;
    extra.insert(extra.rfind('}'), R"(, "colour": "blue")");
    CHECK(expect_error(extra).find("colour") != std::string::npos);
    CHECK(expect_error("{not json").find("no error") == std::string::npos);
  }

  TEST_CASE("round trip of generated documents") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      const io::Scenario s = tvd::selftest::random_scenario(seed);
      const std::string text = io::serialize_scenario(s);
      const io::Scenario back = io::parse_scenario(text);
      CHECK(io::equal(s, back));
      CHECK(io::serialize_scenario(back) == text);
    }
  }

  TEST_CASE("reports serialize canonically") {
    const io::Scenario s = tvd::selftest::random_scenario(7);
    const io::Report a = tvd::run_scenario(s, {});
    const io::Report b = tvd::run_scenario(s, {});
    CHECK(a == b);
    CHECK(io::serialize_report(a) == io::serialize_report(b));
    CHECK(io::parse_report(io::serialize_report(a)) == a);
    CHECK(io::serialize_report(a).back() == '\n');
  }

  TEST_CASE("empty request list") {
    io::Scenario s = io::parse_scenario(kMinimal);
    s.requests.clear();
    const io::Report r = tvd::run_scenario(s, {});
    CHECK(r.records.empty());
    const std::string text = io::serialize_report(r);
    CHECK(text.find("\"records\": []") != std::string::npos);
    CHECK(io::parse_report(text) == r);
  }

  TEST_CASE("records follow request order") {
    const io::Scenario s = tvd::selftest::random_scenario(3);
    const io::Report r = tvd::run_scenario(s, {});
    REQUIRE(r.records.size() == s.requests.size());
    for (std::size_t k = 0; k < s.requests.size(); ++k) CHECK(r.records[k].id == s.requests[k].id);
  }

  TEST_CASE("golden reports") {
    for (const std::string name : {"kaon-decay", "flux-triangle"}) {
      const std::string scenario = slurp(std::string(TVD_SOURCE_DIR) + "/scenarios/" + name + ".json");
      const std::string golden = slurp(std::string(TVD_SOURCE_DIR) + "/tests/golden/" + name + ".report.json");
      REQUIRE_FALSE(golden.empty());
      const io::Report r = tvd::run_scenario(io::parse_scenario(scenario), {});
      CHECK(io::serialize_report(r) == golden);
    }
    const io::Report kd = io::parse_report(slurp(std::string(TVD_SOURCE_DIR) + "/tests/golden/kaon-decay.report.json"));
    REQUIRE(kd.records.size() == 1);
    CHECK(kd.records[0].outcome == "Violation");
    CHECK(kd.records[0].margin == doctest::Approx(0.2).epsilon(1e-12));
    CHECK_FALSE(kd.records[0].witness.empty());
  }
}
