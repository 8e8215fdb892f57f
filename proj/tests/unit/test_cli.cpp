#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "pqech/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pqech::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("capacity csv row") {
  const auto r = call({"capacity", "--base", "sphere", "--euler", "-1", "--k", "3", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1] == "3,4");
}

TEST_CASE("umap trace reaches empty") {
  const auto r = call({"umap", "--euler", "-2", "--start", "1:1", "--trace"});
  REQUIRE(r.code == 0);
  const auto pos11 = r.out.find("(1,1)");
  const auto pos20 = r.out.find("(2,0)");
  const auto pos_empty = r.out.find("EMPTY");
  REQUIRE(pos11 != std::string::npos);
  REQUIRE(pos20 != std::string::npos);
  REQUIRE(pos_empty != std::string::npos);
  CHECK(pos11 < pos20);
  CHECK(pos20 < pos_empty);
}

TEST_CASE("index prints the integer") {
  const auto r = call({"index", "--genus", "1", "--euler", "-2", "--orbitset", "e+^2", "--d", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "4\n");
}

TEST_CASE("bad input exits with 2") {
  CHECK(call({"capacity", "--base", "sphere", "--euler", "1", "--k", "3"}).code == 2);
  CHECK(call({"capacity", "--base", "klein", "--euler", "-1", "--k", "3"}).code == 2);
  CHECK(call({"index", "--genus", "1", "--euler", "-2", "--orbitset", "e+^2 h3", "--d", "1"}).code == 2);
  CHECK(call({"generators", "--genus", "0", "--euler", "-1", "--grading", "3"}).code == 2);
  CHECK(call({"obstruct", "--source", "cube:1", "--target", "ball:1", "--k-max", "3"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  const auto r = call({"capacity", "--base", "torus", "--euler", "-1", "--k", "0"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"generators", "--genus", "1", "--euler", "-2", "--action-limit", "9",
                                      "--format", "json"};
  const auto a = call(args);
  const auto b = call(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("json records parse back") {
  const auto r = call({"capacity", "--base", "torus", "--euler", "-1", "--k", "1", "--k-max", "6", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto j = nlohmann::json::parse(rows[i]);
    CHECK(j.at("command") == "capacity");
    CHECK(j.at("version") == pqech::cli::kVersion);
    CHECK(j.contains("inputs"));
    CHECK(j.contains("result"));
    CHECK(j.contains("witnesses"));
    CHECK(nlohmann::json::parse(j.dump()) == j);
  }
  const auto g = call({"gromov", "--genus", "0", "--euler", "-3", "--format", "json"});
  REQUIRE(g.code == 0);
  const auto j = nlohmann::json::parse(lines(g.out).at(0));
  CHECK(j.at("result").dump().find("6") != std::string::npos);
}

TEST_CASE("every subcommand runs in every format") {
  const std::vector<std::vector<std::string>> cmds{
      {"capacity", "--base", "sphere", "--euler", "-2", "--k", "0", "--k-max", "4"},
      {"generators", "--genus", "2", "--euler", "-1", "--grading", "0"},
      {"index", "--genus", "0", "--euler", "-1", "--orbitset", "e-", "--d", "0"},
      {"umap", "--euler", "-1", "--start", "3:0"},
      {"obstruct", "--source", "ellipsoid:1,2", "--target", "ball:2", "--k-max", "20"},
      {"gromov", "--genus", "1", "--euler", "-1"},
  };
  for (const auto& base : cmds) {
    for (const char* fmt : {"json", "csv", "table"}) {
      auto args = base;
      args.insert(args.end(), {"--format", fmt});
      const auto r = call(args);
      INFO(base[0] << " " << fmt << ": " << r.err);
      CHECK(r.code == 0);
      CHECK_FALSE(r.out.empty());
    }
  }
}
