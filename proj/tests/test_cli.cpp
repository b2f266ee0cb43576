#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "toric/cli.hpp"
#include <json.hpp>

using nlohmann::json;
using toric::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("toric_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("bott on a file input") {
  const auto path = write_temp("simplex2.json", R"({"dim": 2, "vertices": [[0,0],[1,0],[0,1]]})");
  const auto r = call({"bott", "--input", path, "--dilate", "2", "--p", "1"});
  CHECK(r.code == 0);
  CHECK(trimmed(r.out) == "3");
  const auto both = call({"bott", "--input", path, "--dilate", "3", "--p", "2", "--formula", "both"});
  CHECK(trimmed(both.out) == "1");
}

TEST_CASE("ehrhart json coefficients, highest power first") {
  const auto path = write_temp("ex5_m2.json", R"({"dim": 3, "vertices": [[0,0,0],[1,0,0],[0,1,0],[1,1,2]]})");
  const auto r = call({"ehrhart", "--input", path, "--p", "0", "--json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["coefficients"] == json({"1/3", "1", "5/3", "1"}));
  const auto all = json::parse(call({"ehrhart", "--builtin", "ex5", "2", "--json"}).out);
  CHECK(all["polynomials"].size() == 4);
  const auto rec = call({"ehrhart", "--builtin", "cube", "2", "--p", "1", "--check-reciprocity", "4", "--json"});
  CHECK(rec.code == 0);
  CHECK(json::parse(rec.out)["reciprocity"].size() == 4);
}

TEST_CASE("verify passes on the cube and fails as an input error on the octahedron") {
  const auto r = call({"verify", "--builtin", "cube", "3"});
  CHECK(r.code == 0);
  for (const char* name : {"Dehn-Sommerville", "face duality", "reciprocity", "formula"}) {
    CHECK(r.out.find(name) != std::string::npos);
  }
  const auto j = json::parse(call({"verify", "--builtin", "cube", "3", "--json"}).out);
  CHECK(j["passed"] == true);
  const auto oct = call({"verify", "--builtin", "octahedron"});
  CHECK(oct.code == 2);
  CHECK(oct.err.find("NotSimple") != std::string::npos);
  CHECK(oct.err.find("(1,0,0)") != std::string::npos);
}

TEST_CASE("verify identities") {
  const auto r = call({"verify", "--identities", "--nmax", "4", "--kmax", "4", "--json"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(!j.empty());
  for (const auto& e : j) CHECK(e["holds"] == true);
}

TEST_CASE("other subcommands") {
  CHECK(trimmed(call({"hodge", "--builtin", "simplex", "3", "--dilate", "4"}).out) == "1 19 1");
  CHECK(trimmed(call({"hodge", "--builtin", "simplex", "2", "--dilate", "3", "--chilog", "1"}).out) == "-1");
  CHECK(trimmed(call({"hodge", "--builtin", "simplex", "2", "--dilate", "3", "--chilog", "1", "--printed-form"}).out) == "9");
  CHECK(trimmed(call({"hodge", "--builtin", "simplex", "2", "--dilate", "4", "--ep", "0"}).out) == "-2");
  CHECK(trimmed(call({"weighted", "--builtin", "simplex", "2", "--dilate", "2", "--p", "1", "--k", "1"}).out) == "12");
  CHECK(trimmed(call({"count", "--builtin", "simplex", "2", "--dilate", "4", "--json"}).out).find("\"l_star\":3") !=
        std::string::npos);
  const auto faces = json::parse(call({"faces", "--builtin", "cube", "3", "--json"}).out);
  CHECK(faces["f_vector"] == json({8, 12, 6, 1}));
  const auto gp = json::parse(call({"genpoly", "--builtin", "simplex", "2", "--dilate", "2", "--json"}).out);
  CHECK(gp["twisted"] == json({"6", "3"}));
  CHECK(call({"diag", "--builtin", "cube", "2"}).code == 0);
  CHECK(call({"table", "--builtin", "cube", "2"}).code == 0);
}

TEST_CASE("bundle subcommand warns at small k") {
  const auto path = write_temp("bundle.json",
                               R"({"base_dim": 1, "summands": [{"dim": 1, "vertices": [[0],[1]]}, {"dim": 1, "vertices": [[0],[1]]}]})");
  const auto r = call({"bundle", "--input", path, "--p", "1", "--k", "3"});
  CHECK(r.code == 0);
  CHECK(trimmed(r.out) == "8");
  CHECK(r.err.empty());
  const auto low = call({"bundle", "--input", path, "--p", "1", "--k", "1"});
  CHECK(low.code == 0);
  CHECK(!low.err.empty());
}

TEST_CASE("input errors exit 2") {
  CHECK(call({"bott", "--p", "1"}).code == 2);
  CHECK(call({"bott", "--input", "/nonexistent.json", "--p", "1"}).code == 2);
  const auto bad = write_temp("bad.json", R"({"dim": 3, "vertices": [[0,0,0],[1,0,0],[0,1],[0,0,1]]})");
  const auto r = call({"faces", "--input", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("vertices[2]") != std::string::npos);
  CHECK(call({"bott", "--builtin", "cube", "2", "--p", "7"}).code == 2);
  CHECK(call({"nonsense"}).code == 2);
  CHECK(call({"bott", "--builtin", "cube", "2", "--dilate", "0", "--p", "1"}).code == 2);
}

TEST_CASE("json output carries no floating point") {
  const auto r = call({"ehrhart", "--builtin", "ex5", "5", "--json"});
  CHECK(r.out.find('.') == std::string::npos);
  const auto t = call({"table", "--builtin", "cube", "3", "--dilate", "2", "--json"});
  CHECK(t.out.find('.') == std::string::npos);
}

TEST_CASE("hodge diagnostics on the unit square") {
  CHECK(trimmed(call({"hodge", "--builtin", "cube", "2"}).out) == "0 0");
  CHECK(trimmed(call({"hodge", "--builtin", "cube", "2", "--phi-sum"}).out) == "1 0");
  CHECK(trimmed(call({"hodge", "--builtin", "simplex", "2", "--dilate", "3", "--printed-form"}).out) == "13 1");
}
