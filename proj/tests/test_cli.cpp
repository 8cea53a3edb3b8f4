#include "doctest.h"

#include "kcatalan/cli.hpp"
#include "kcatalan/render.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace kcatalan;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("kcatalan_test_" + name);
}

}  // namespace

TEST_CASE("catalan") {
  const Outcome r = invoke({"catalan", "--k", "3", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "42\n");
  CHECK(invoke({"catalan", "--k", "3", "--n", "5", "--mod", "97"}).out == "89\n");
  CHECK(invoke({"catalan", "--k", "2", "--rows", "5", "--format", "csv"}).out == "1,2,5,14,42\n");
}

TEST_CASE("weighted and bounded") {
  CHECK(invoke({"weighted", "--k", "2", "--n", "3", "--weights", "list:1,2,3"}).out == "15\n");
  CHECK(invoke({"bounded", "--k", "3", "--s", "4", "--n", "4"}).out == "147\n");
  const Outcome bad = invoke({"weighted", "--k", "2", "--n", "3", "--weights", "list:1,,3"});
  CHECK(bad.code == 1);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("triangle") {
  CHECK(invoke({"triangle", "--kind", "narayana", "--k", "3", "--rows", "2", "--format", "csv"}).out ==
        "1\n2,3\n");
  CHECK(invoke({"triangle", "--kind", "height", "--k", "3", "--rows", "3", "--format", "csv"}).out ==
        "1\n1,2,2\n1,8,18,10,5\n");
  CHECK(invoke({"triangle", "--kind", "height", "--k", "3", "--n", "3", "--s", "4"}).out == "18\n");
  CHECK(invoke({"triangle", "--kind", "narayana", "--k", "4", "--n", "3", "--p", "3"}).out == "184\n");
  CHECK(invoke({"triangle", "--kind", "narayana", "--k", "3", "--rows", "2", "--format", "csv",
                "--padded"})
            .out == "1,0\n2,3\n");
  const Json j = Json::parse(invoke({"triangle", "--kind", "height", "--k", "4", "--rows", "2",
                                     "--format", "json"})
                                 .out);
  CHECK(j["kind"] == "height");
  CHECK(j["values"][1] == Json::parse(R"(["1","3","5","5"])"));
}

TEST_CASE("matrix") {
  const Json j = Json::parse(invoke({"matrix", "--k", "3", "--s", "4", "--format", "json"}).out);
  CHECK(j["states"] == Json::parse("[[0,0,0],[2,1,0],[3,3,0]]"));
  CHECK(j["matrix"][1] == Json::parse(R"(["2","4","1"])"));
  CHECK(invoke({"matrix", "--k", "3", "--s", "1"}).code == 1);
}

TEST_CASE("period") {
  const Outcome r = invoke({"period", "--k", "2", "--weights", "odd-squares", "--mod", "27"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["period_report"]["scalar_period"] == 2);
  CHECK(j["period_report"]["hypothesis"] == "product");
  CHECK(j["period_report"]["confirmed"] == true);
  const Json r81 = Json::parse(invoke({"period", "--k", "2", "--weights", "odd-squares", "--mod", "81"}).out);
  CHECK(r81["period_report"]["scalar_period"] == 6);
  const Json bounded = Json::parse(invoke({"period", "--k", "3", "--s", "3", "--mod", "5"}).out);
  CHECK(bounded["period_report"]["scalar_period"] == 4);
  CHECK(invoke({"period", "--k", "3", "--mod", "2"}).code == 2);
  CHECK(invoke({"period", "--k", "3", "--s", "6", "--mod", "11", "--max-steps", "3"}).code == 2);
}

TEST_CASE("enumerate") {
  const Outcome r = invoke({"enumerate", "--k", "2", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 1 2 2\n1 2 1 2\n");
  CHECK(invoke({"enumerate", "--k", "3", "--n", "5", "--max-paths", "100"}).code == 2);
}

TEST_CASE("b-file export") {
  const auto p = temp_file("bounded.b");
  CHECK(invoke({"bounded", "--k", "3", "--s", "4", "--rows", "6", "--bfile", p.string()}).code == 0);
  CHECK(slurp(p) == "1 1\n2 5\n3 27\n4 147\n5 801\n6 4365\n");

  const auto q = temp_file("catalan.b");
  CHECK(invoke({"catalan", "--k", "2", "--rows", "5", "--bfile", q.string()}).code == 0);
  CHECK(slurp(q) == "1 1\n2 2\n3 5\n4 14\n5 42\n");

  const auto e = temp_file("empty.b");
  CHECK(invoke({"catalan", "--k", "2", "--rows", "0", "--bfile", e.string()}).code == 0);
  CHECK(std::filesystem::exists(e));
  CHECK(slurp(e).empty());

  CHECK(invoke({"catalan", "--k", "2", "--rows", "5", "--format", "bfile"}).out ==
        "1 1\n2 2\n3 5\n4 14\n5 42\n");
  CHECK(invoke({"catalan", "--k", "2", "--rows", "3", "--bfile", "/nonexistent-dir/x.b"}).code == 2);
  for (const auto& f : {p, q, e}) std::filesystem::remove(f);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"catalan", "--n", "3"}).code == 1);
  CHECK(invoke({"catalan", "--k", "1", "--n", "3"}).code == 1);
  CHECK(invoke({"catalan", "--k", "3", "--n", "x"}).code == 1);
  CHECK(invoke({"period", "--k", "3", "--mod", "1"}).code == 1);
  CHECK(invoke({"check", "--suite", "nope"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("deterministic output") {
  const std::vector<std::string> args{"matrix", "--k", "3", "--s", "6", "--format", "json"};
  CHECK(invoke(args).out == invoke(args).out);
  const std::vector<std::string> tri{"triangle", "--kind", "narayana", "--k", "4", "--rows", "5"};
  CHECK(invoke(tri).out == invoke(tri).out);
}

TEST_CASE("check suites") {
  const Outcome tables = invoke({"check", "--suite", "tables"});
  CHECK(tables.code == 0);
  CHECK(tables.out.find("printed 1481, computed 1480") != std::string::npos);
  CHECK(invoke({"check", "--suite", "identities"}).code == 0);
  CHECK(invoke({"check", "--suite", "periods"}).code == 0);
  CHECK(invoke({"check", "--suite", "oracle", "--max-paths", "1000"}).code == 0);
}

TEST_CASE("check suite: matrices") {
  const Outcome r = invoke({"check", "--suite", "matrices"});
  MESSAGE(r.out);
  CHECK(r.code == 0);
}
