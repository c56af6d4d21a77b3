#include "cubedet/cli.hpp"
#include "cubedet/exactmat.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cubedet::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const Result r = run(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::vector<json> lines_of(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("verify") {
  const json a1 = run_json({"verify", "7 11 2; 13 20 3; 2 3 0"});
  CHECK(a1["det"] == "1");
  CHECK(a1["cube_det"] == "1");
  CHECK(a1["holds"] == true);
  CHECK(a1["matrix"][0][1] == "11");

  const json m = run_json({"verify", "-5 4 10; 5 3 11; 3 2 7"});
  CHECK(m["det"] == "7");
  CHECK(m["cube_det"] == "343");

  const json big = run_json({"verify", "123456789012345678901 0 0; 0 1 0; 0 0 1"});
  CHECK(big["det"] == "123456789012345678901");
}

TEST_CASE("text output round trips") {
  const Result r = run({"gen", "a", "--t", "1"});
  REQUIRE(r.code == 0);
  const std::string first = r.out.substr(0, r.out.find('\n'));
  CHECK(first == "49079 73625 2; 74581 111881 3; 2 3 0");
  const Result again = run({"verify", first});
  CHECK(again.code == 0);
  CHECK(again.out.find("det: 1\n") != std::string::npos);
  CHECK(cubedet::format_matrix(cubedet::parse_matrix(first)) == first);
}

TEST_CASE("generators") {
  CHECK(run_json({"gen", "a", "--t", "1", "--via-chain"})["matrix"] ==
        run_json({"gen", "a", "--t", "1"})["matrix"]);
  const json c0 = run_json({"gen", "c", "--t", "0"});
  CHECK(c0["matrix"] == json::parse(R"([["63","66","1"],["78","80","1"],["1","1","0"]])"));
  const json t2 = run_json({"gen", "theorem2", "--params", "2,-3,3,3,-2,4", "--normalize"});
  CHECK(t2["matrix"][0] == json::parse(R"(["-57797","-109147","-22789"])"));
  CHECK(t2["k"] == "123690");
  CHECK(t2["cube_det"] == "1892360039409000");
  const json q = run_json({"gen", "quintuple", "--params", "1,2,3,4"});
  CHECK(q["sum"] == "0");
  CHECK(q["cube_sum"] == "0");
  CHECK(run_json({"gen", "bordered", "--params", "1,2,3,4"})["det"] == q["x"][0]);
}

TEST_CASE("transform") {
  const json t = run_json({"transform", "7 11 2; 13 20 3; 2 3 0", "--apply", "transpose", "--apply",
                           "negrows 1 2", "--apply", "swap rows 1 2 cols 1 2"});
  CHECK(t["det"] == "1");
  CHECK(t["cube_det"] == "1");
  const json canon = run_json({"transform", "7 11 2; 13 20 3; 2 3 0", "--canonical"});
  const json canon2 = run_json({"transform", "20 13 3; 11 7 2; 3 2 0", "--canonical"});
  CHECK(canon["canonical"] == canon2["canonical"]);

  const Result bad = run({"transform", "7 11 2; 13 20 3; 2 3 0", "--apply", "conj 1 3 1/2"});
  CHECK(bad.code == cubedet::cli::kExitDomainError);
  CHECK(bad.err.find("NonIntegralResult") != std::string::npos);
  CHECK(run({"transform", "1 2 3; 4 5 6; 7 8 9", "--apply", "negrows 1 1"}).code ==
        cubedet::cli::kExitUsage);
}

TEST_CASE("curve") {
  const json t = run_json({"curve", "tangent", "--rows", "2 -3 3; 3 -2 4"});
  CHECK(t["third_point"] == json::parse(R"(["57797","109147","22789"])"));
  const json e = run_json({"curve", "eval", "--form", "1,0,0,0,0,0,1,0,0,-2", "--point", "1,1,1"});
  CHECK(e["value"] == "0");
  CHECK(e["gradient"] == json::parse(R"(["3","3","-6"])"));
  const json f = run_json({"curve", "tangent", "--form", "1,0,0,0,0,0,1,0,0,-2", "--point", "1 1 1"});
  CHECK(f["third_point"] == json::parse(R"(["1","-1","0"])"));
  const Result flex =
      run({"--format", "json", "curve", "tangent", "--form", "1,0,0,0,0,0,1,0,0,-2", "--point", "1,-1,0"});
  CHECK(flex.code == cubedet::cli::kExitDomainError);
  CHECK(json::parse(flex.err)["code"] == "InflectionPoint");
}

TEST_CASE("identity check") {
  const json s = run_json({"identity-check", "theorem1-cubedet", "--mode", "symbolic"});
  CHECK(s["verdict"] == "holds");
  CHECK(s["stats"]["difference_terms"] == 0);
  const json n = run_json({"identity-check", "theorem2-det", "--samples", "20", "--bound", "50"});
  CHECK(n["verdict"] == "holds");
  CHECK(n["stats"]["samples"] == 20);
  CHECK(run({"identity-check", "no-such-identity"}).code == cubedet::cli::kExitUsage);
}

TEST_CASE("search streams hits and a summary") {
  const Result r = run({"--format", "json", "search", "--mode", "two-rows", "--rows",
                        "5 3 11; 3 2 7", "--k", "7", "--bound", "12"});
  REQUIRE(r.code == 0);
  const auto docs = lines_of(r.out);
  REQUIRE(docs.size() >= 2);
  bool found = false;
  for (std::size_t i = 0; i + 1 < docs.size(); ++i) {
    CHECK(docs[i]["type"] == "hit");
    found |= docs[i]["matrix"][0] == json::parse(R"(["-5","4","10"])");
  }
  CHECK(found);
  CHECK(docs.back()["type"] == "summary");
  CHECK(docs.back()["hits"] == docs.size() - 1);
  CHECK(docs.back()["complete"] == true);

  const Result budget = run({"--format", "json", "search", "--mode", "rows-enum", "--row-bound", "2",
                             "--bound", "2", "--work-budget", "10"});
  REQUIRE(budget.code == 0);
  const json last = lines_of(budget.out).back();
  CHECK(last["complete"] == false);
  CHECK(last["next_pair"] == 10);

  const Result text = run({"search", "--mode", "bordered", "--bound", "80", "--k", "1"});
  CHECK(text.out.find("63 66 1; 78 80 1; 1 1 0") != std::string::npos);
}

TEST_CASE("usage and domain errors") {
  CHECK(run({}).code == cubedet::cli::kExitUsage);
  CHECK(run({"verify", "1 0; 0 1"}).code == cubedet::cli::kExitUsage);
  CHECK(run({"verify", "1 x 0; 0 1 0; 0 0 1"}).code == cubedet::cli::kExitUsage);
  CHECK(run({"search", "--mode", "brute", "--bound", "3"}).code == cubedet::cli::kExitDomainError);
  CHECK(run({"gen", "theorem2", "--params", "1,0,0,2,0,0"}).code == cubedet::cli::kExitDomainError);
  const Result j = run({"--format", "json", "verify", "1 2"});
  const json e = json::parse(j.err);
  CHECK(e["status"] == "error");
  CHECK(e["code"] == "Parse");
  CHECK(j.out.empty());
  CHECK(run({"--help"}).code == 0);
}
