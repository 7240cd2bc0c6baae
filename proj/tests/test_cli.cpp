#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "bwf2/json_io.hpp"
#include "bwf2/window_map.hpp"

namespace {

struct RunResult {
  int status = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(BWF2_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[512];
  while (std::fgets(buffer, sizeof(buffer), pipe)) {
    result.output += buffer;
  }
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("element arithmetic commands") {
  SUBCASE("mul") {
    const auto r = run_cli("mul \"(2,1,[0))\" \"(3,4,[1))\"");
    CHECK(r.status == 0);
    CHECK(r.output == "(4,4,[1))\n");
  }

  SUBCASE("mul over another family") {
    const auto r = run_cli("mul --family 0,1,2 \"(0,0,[2))\" \"(0,0,[1))\"");
    CHECK(r.status == 0);
    CHECK(r.output == "(0,0,[2))\n");
  }

  SUBCASE("inv") {
    const auto r = run_cli("inv \"(2,5,[1))\"");
    CHECK(r.status == 0);
    CHECK(r.output == "(5,2,[1))\n");
  }

  SUBCASE("idem") {
    CHECK(run_cli("idem \"(3,3,[1))\"").output == "true\n");
    CHECK(run_cli("idem \"(2,3,[0))\"").output == "false\n");
  }

  SUBCASE("leq") {
    CHECK(run_cli("leq \"(1,1,[0))\" \"(0,0,[0))\"").output == "true\n");
    CHECK(run_cli("leq \"(0,0,[0))\" \"(1,1,[0))\"").output == "false\n");
  }

  SUBCASE("green") {
    CHECK(run_cli("green R \"(2,3,[0))\" \"(2,5,[0))\"").output == "true\n");
    CHECK(run_cli("green R \"(2,3,[0))\" \"(2,3,[1))\"").output == "false\n");
    CHECK(run_cli("green H \"(2,3,[0))\" \"(2,3,[0))\"").output == "true\n");
  }

  SUBCASE("json output") {
    const auto r = run_cli("mul --json \"(2,1,[0))\" \"(3,4,[1))\"");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["i"] == 4);
    CHECK(j["j"] == 4);
    CHECK(j["f"] == 1);
  }

  SUBCASE("text output re-parses to the same value") {
    const auto once = run_cli("inv \"(4,7,[1))\"");
    CHECK(once.status == 0);
    std::string text = once.output.substr(0, once.output.size() - 1);
    const auto twice = run_cli("inv \"" + text + "\"");
    CHECK(twice.output == "(4,7,[1))\n");
  }
}

TEST_CASE("endomorphism commands") {
  SUBCASE("endo-apply") {
    const auto r = run_cli("endo-apply --expr \"alpha[2,1];w^3\" \"(1,2,[1))\"");
    CHECK(r.status == 0);
    CHECK(r.output == "(5,7,[0))\n");
  }

  SUBCASE("endo-compose") {
    const auto r = run_cli("endo-compose --expr \"gamma[2]\" --expr \"gamma[3]\"");
    CHECK(r.status == 0);
    CHECK(r.output == "gamma[6]\n");
  }

  SUBCASE("endo-factor") {
    const auto r = run_cli("endo-factor --expr \"alpha[2,1];w^3\"");
    CHECK(r.status == 0);
    CHECK(contains(r.output, "alpha[2,1] ; w^3"));
    CHECK(contains(r.output, "s=1 p=1 n=3"));
  }

  SUBCASE("endo-factor of a constant") {
    const auto r = run_cli("endo-factor --json --expr \"chi[2,1]\"");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["kind"] == "chi");
    CHECK(j["s"] == 2);
    CHECK(j["p"] == 1);
    CHECK(j["n"] == 5);
  }

  SUBCASE("endo-classify from a window file") {
    const bwf2::WindowMap m(8, [](const bwf2::Element& x) {
      return bwf2::apply(bwf2::EndoNormalForm(bwf2::Alpha{2, 1}, 0), x);
    });
    const std::string path = "classify_input.json";
    {
      std::ofstream out(path);
      out << bwf2::to_json(m);
    }
    const auto r = run_cli("endo-classify --map " + path);
    CHECK(r.status == 0);
    CHECK(r.output == "alpha[2,1]\n");
    std::remove(path.c_str());
  }

  SUBCASE("endo-classify rejects a missing file") {
    const auto r = run_cli("endo-classify --map does_not_exist.json");
    CHECK(r.status == 2);
  }
}

TEST_CASE("family-check") {
  SUBCASE("closed family") {
    const auto r = run_cli("family-check 0,1");
    CHECK(r.status == 0);
    CHECK(contains(r.output, "ω-closed"));
    CHECK(!contains(r.output, "not"));
  }

  SUBCASE("witness for a gap") {
    const auto r = run_cli("family-check 0,2");
    CHECK(r.status == 1);
    CHECK(contains(r.output, "not ω-closed: witness [0)∩(-1+[2)) = [1)"));
  }

  SUBCASE("json witness") {
    const auto r = run_cli("family-check --json 0,2");
    CHECK(r.status == 1);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["closed"] == false);
    CHECK(j["witness"]["b"] == 2);
    CHECK(j["witness"]["produced"] == 1);
  }
}

TEST_CASE("verify command") {
  SUBCASE("clean at a reduced window") {
    const auto r = run_cli("verify --window 3");
    CHECK(r.status == 0);
    CHECK(contains(r.output, "all laws hold"));
    CHECK(contains(r.output, "associativity-two-tails"));
  }

  SUBCASE("json stream has one object per law") {
    const auto r = run_cli("verify --json --window 3");
    CHECK(r.status == 0);
    std::size_t lines = 0;
    std::size_t start = 0;
    while (start < r.output.size()) {
      const auto end = r.output.find('\n', start);
      if (end == std::string::npos) break;
      const auto j = nlohmann::json::parse(r.output.substr(start, end - start));
      CHECK(j.contains("law"));
      CHECK(j["violations"] == 0);
      ++lines;
      start = end + 1;
    }
    CHECK(lines == 18);
  }
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("mul \"(2,1,[0))\"").status == 2);         // missing operand
  CHECK(run_cli("mul \"(2,1,0))\" \"(0,0,[0))\"").status == 2);
  CHECK(run_cli("mul \"(1,2,[3))\" \"(0,0,[0))\"").status == 2);
  CHECK(run_cli("frobnicate").status == 2);
  CHECK(run_cli("endo-apply --expr \"beta[2,0]\" \"(0,0,[0))\"").status == 2);
  CHECK(run_cli("green Q \"(0,0,[0))\" \"(0,0,[0))\"").status == 2);
  CHECK(run_cli("").status == 2);
  CHECK(run_cli("--help").status == 0);
}
