#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "doctest.h"
#include "tautring/cli.hpp"

using tautring::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("freeness csv row") {
  auto r = call({"freeness", "--d", "6", "--up-to", "6", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "1,2,6,13,29,54,104\n");
  auto h = call({"freeness", "--d", "6", "--up-to", "2", "--format", "csv", "--csv-header"});
  CHECK(h.out == "H^0,H^2,H^4\n1,2,6\n");
}

TEST_CASE("symbolic Step 2 table") {
  auto r = call({"tables", "--step", "2", "--symbolic", "--format", "md"});
  CHECK(r.code == 0);
  CHECK(r.out.find("| `e_{d-1}(2)` | 0 | d - chi | `d - 2*chi` |") != std::string::npos);
  CHECK(r.out.find("status: pass") != std::string::npos);
  auto j = nlohmann::json::parse(call({"tables", "--step", "2", "--format", "json"}).out);
  CHECK(j["results"][0]["entries"] == nlohmann::json::array({"d", "d", "d"}));
  CHECK(j["results"][1]["entries"][0] == "-3/2*d + chi");
  CHECK(j["results"][2]["entries"] == nlohmann::json::array({"0", "d - chi", "d - 2*chi"}));
  // specialized
  auto s = nlohmann::json::parse(call({"tables", "--step", "3", "--d", "5", "--chi", "2", "--format", "json"}).out);
  CHECK(s["status"] == "pass");
  CHECK(s["params"]["d"] == 5);
}

TEST_CASE("JSON reports round-trip and are deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"tables", "--step", "1", "--offset", "3"},
      {"tables", "--step", "4", "--chi", "1"},
      {"detM"},
      {"detM", "--d", "4", "--chi", "1"},
      {"step4", "--d", "5", "--chi", "1"},
      {"verify-generation", "--d", "4", "--chi", "3"},
      {"betti", "--n-max", "4"},
      {"moduli-betti", "--d", "5", "--chi", "2"},
      {"freeness", "--d", "9"},
      {"betti-table", "--d", "7"},
      {"theorem1b", "--d", "6"},
      {"gap-check", "--d", "4"},
      {"deg3", "--check", "all"},
  };
  for (auto args : commands) {
    args.push_back("--format");
    args.push_back("json");
    auto a = call(args);
    auto b = call(args);
    CHECK_MESSAGE(a.code == 0, args[0]);
    CHECK(a.out == b.out);
    auto doc = nlohmann::ordered_json::parse(a.out);
    CHECK(doc.dump(2) + "\n" == a.out);
    CHECK(doc["command"] == args[0]);
    CHECK(doc["status"] == "pass");
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "params", "results", "status"});
  }
}

TEST_CASE("command results") {
  auto det = nlohmann::json::parse(call({"detM", "--d", "4", "--chi", "1", "--format", "json"}).out);
  CHECK(det["results"][0]["det"] == "1/3");
  auto s4 = nlohmann::json::parse(call({"step4", "--d", "5", "--chi", "1", "--format", "json"}).out);
  CHECK(s4["results"][0]["coefficient"] == "10");
  auto mb = nlohmann::json::parse(call({"moduli-betti", "--d", "5", "--chi", "1", "--format", "json"}).out);
  CHECK(mb["results"][3]["betti"] == 13);
  CHECK(mb["params"]["chi0"] == -4);
  CHECK(mb["params"]["window_ambiguous"] == true);
  auto b = nlohmann::json::parse(call({"betti", "--n-max", "2", "--format", "json"}).out);
  CHECK(b["results"][2] == nlohmann::json::array({1, 0, 2, 0, 3, 0, 2, 0, 1}));
  auto gap = nlohmann::json::parse(call({"gap-check", "--d", "5", "--format", "json"}).out);
  CHECK(gap["results"][0]["hilbert_betti"] == 29);
  CHECK(gap["results"][0]["monomials"] == 26);
  auto v = nlohmann::json::parse(call({"verify-generation", "--d", "5", "--chi", "2", "--format", "json"}).out);
  CHECK(v["results"].size() == 12u);
  auto bt = call({"betti-table", "--d", "5", "--format", "csv"});
  CHECK(bt.out == "actual dim,1,2,6,13,26,45\nfreeness,1,2,6,13,26,48\nactual source,computed,computed,computed,computed,fixture,fixture\n");
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == 2);
  CHECK(call({"nonsense"}).code == 2);
  CHECK(call({"freeness"}).code == 2);
  CHECK(call({"freeness", "--d", "6", "--format", "xml"}).code == 2);
  CHECK(call({"verify-generation", "--d", "5", "--chi", "2", "--symbolic"}).code == 2);
  CHECK(call({"tables", "--step", "5"}).code == 2);
  CHECK(call({"tables", "--step", "2", "--offset", "2"}).code == 2);
  CHECK(call({"tables", "--step", "2", "--symbolic", "--d", "5"}).code == 2);
  CHECK(call({"moduli-betti", "--d", "6", "--chi", "2"}).code == 2);
  CHECK(call({"betti-table", "--d", "10"}).code == 2);
  CHECK(call({"deg3", "--check", "everything"}).code == 2);
  auto usage = call({"tables", "--step", "7"});
  CHECK(usage.err.find("--step") != std::string::npos);
  // d = 2 chi: the Step 3 determinant vanishes
  auto fail = call({"verify-generation", "--d", "4", "--chi", "2", "--format", "json"});
  CHECK(fail.code == 1);
  CHECK(nlohmann::json::parse(fail.out)["status"] == "fail");
  CHECK(fail.err.find("mismatch") != std::string::npos);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("output file") {
  const std::string path = "tautring_cli_test_output.json";
  auto r = call({"freeness", "--d", "4", "--format", "json", "-o", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(nlohmann::json::parse(ss.str())["results"].size() == 5u);
  std::remove(path.c_str());
}
