#include "cli/commands.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using schublines::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  return fs::temp_directory_path() / ("schublines_cli_" + name);
}

}  // namespace

TEST_CASE("kostka") {
  auto r = call({"kostka", "2", "2", "1", "2", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "5\n");

  r = call({"kostka", "1", "1", "1", "1", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("kostka") == "2");

  r = call({"kostka", "2", "2", "1", "2", "3", "--tableaux", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("index,row1,row2\n", 0) == 0);

  CHECK(call({"kostka", "1", "1", "1"}).code == 2);
  CHECK(call({"kostka", "2", "0"}).code == 2);
  CHECK(call({"kostka", "x"}).code == 2);
  CHECK(call({"kostka", "4", "1", "1"}).code == 0);  // valid input, count 0
  CHECK(call({"kostka", "1", "1", "--format", "xml"}).code == 2);
}

TEST_CASE("kostka cache directory") {
  const auto dir = scratch("cache");
  fs::remove_all(dir);
  fs::create_directories(dir);
  ::setenv("SCHUBLINES_CACHE_DIR", dir.c_str(), 1);
  CHECK(call({"kostka", "3", "3", "2", "2"}).code == 0);
  ::unsetenv("SCHUBLINES_CACHE_DIR");
  CHECK(fs::exists(dir / "kostka.jsonl"));
  fs::remove_all(dir);
}

TEST_CASE("verify and validate") {
  const auto cert = scratch("cert.json");
  auto r = call({"verify", "2", "2", "1", "2", "3", "--cert", cert.string()});
  CHECK(r.code == 0);
  CHECK(fs::exists(cert));
  CHECK(call({"validate", cert.string()}).code == 0);

  r = call({"verify", "1", "1", "1", "1", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("root").at("clause") == "both-branches-one");

  // A certificate with a wrong count fails validation.
  {
    std::ifstream in(cert);
    auto j = nlohmann::json::parse(in);
    j["root"]["kostka"] = "6";
    std::ofstream out(cert);
    out << j.dump();
  }
  CHECK(call({"validate", cert.string()}).code == 1);

  {
    std::ofstream out(cert);
    out << "{ broken";
  }
  CHECK(call({"validate", cert.string()}).code == 2);
  CHECK(call({"validate", scratch("missing.json").string()}).code == 2);
  fs::remove(cert);

  CHECK(call({"verify", "4", "1", "1"}).code == 2);
  CHECK(call({"verify", "1", "1", "1"}).code == 2);

  const auto shared = scratch("shared.json");
  CHECK(call({"verify", "2", "2", "2", "2", "2", "2", "--cert", shared.string(), "--share-subtrees"})
            .code == 0);
  CHECK(call({"validate", shared.string()}).code == 0);
  fs::remove(shared);
}

TEST_CASE("sweep") {
  auto r = call({"sweep", "--max-n", "8", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,problems,certified,seconds\n", 0) == 0);
  CHECK(call({"sweep", "--max-n", "1"}).code == 2);
  CHECK(call({"sweep"}).code == 2);
}

TEST_CASE("table1") {
  auto r = call({"table1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("14,113841,113634,207\n") != std::string::npos);
  CHECK(r.out.find("0,0,1,-1\n") != std::string::npos);
  r = call({"table1", "--max-m", "3", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("rows").size() == 4);
}

TEST_CASE("integral") {
  auto r = call({"integral", "2", "2", "1", "2", "3", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("exact") == "5");
  CHECK(call({"integral", "1", "2"}).code == 2);
  // Too few nodes for the degree: the estimate is off.
  CHECK(call({"integral", "8", "8", "8", "8", "--nodes", "2"}).code == 1);
}

TEST_CASE("bounds-a2") {
  auto r = call({"bounds-a2", "--m", "14", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("holds") == true);
  CHECK(call({"bounds-a2", "--m", "5"}).code == 1);
  CHECK(call({"bounds-a2", "--m", "0"}).code == 2);
}

TEST_CASE("plotdata") {
  auto r = call({"plotdata", "--function", "lambda", "--samples", "3", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) ++n;
  CHECK(n == 4);
  CHECK(call({"plotdata", "--function", "G"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}
