#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "tvd/model_scenarios.hpp"
#include "tvd/oracle.hpp"
#include "tvd/runner.hpp"

namespace io = tvd::io;

namespace {
io::Scenario load(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return io::parse_scenario(buf.str());
}

std::size_t disagreements(const io::Scenario& s, const io::Report& r) {
  std::size_t n = 0;
  for (const auto& c : tvd::oracle::cross_check(s, r)) n += c.agree ? 0 : 1;
  return n;
}
}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("shipped scenarios agree") {
    std::size_t count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(std::string(TVD_SOURCE_DIR) + "/scenarios")) {
      const io::Scenario s = load(entry.path());
      CHECK_MESSAGE(disagreements(s, tvd::run_scenario(s, {})) == 0, entry.path().string());
      ++count;
    }
    CHECK(count >= 8);
  }

  TEST_CASE("flipped verdict is flagged") {
    const io::Scenario s = load(std::string(TVD_SOURCE_DIR) + "/scenarios/kaon-decay.json");
    io::Report r = tvd::run_scenario(s, {});
    REQUIRE(disagreements(s, r) == 0);
    r.records[0].outcome = "NoConclusion";
    CHECK(disagreements(s, r) == 1);

    const io::Scenario inv = load(std::string(TVD_SOURCE_DIR) + "/scenarios/t-symmetric-s.json");
    io::Report ri = tvd::run_scenario(inv, {});
    ri.records[2].outcome = "Violation";
    CHECK(disagreements(inv, ri) == 1);
  }

  TEST_CASE("extra or missing records are flagged") {
    const io::Scenario s = load(std::string(TVD_SOURCE_DIR) + "/scenarios/unitary-curie.json");
    io::Report r = tvd::run_scenario(s, {});
    r.records.pop_back();
    CHECK(disagreements(s, r) >= 1);
  }

  TEST_CASE("seeded model scenarios agree") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      const std::string name = seed % 2 ? "t-symmetric-s" : "kaon-oscillation";
      tvd::models::ParamMap params{{"seed", std::to_string(seed)}};
      if (seed % 2) params["dim"] = std::to_string(2 + seed % 5);
      const io::Scenario s = tvd::models::make_scenario(name, params);
      CHECK(disagreements(s, tvd::run_scenario(s, {})) == 0);
    }
  }
}
