#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pixgrid/cli.hpp"

using namespace pixgrid;

namespace {

struct Result {
  int rc = 0;
  std::string out;
  std::string err;
};

Result run(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> args;
  for (std::string tok; in >> tok;) args.push_back(tok);
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, sep);) out.push_back(f);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

const std::string kDisc = "--size 1 --gap 0 --rows 20 --cols 20 --cx 10 --cy 10 --radius 5";
const std::string kBand = "--size 1 --gap 0.2 --rows 10 --cols 10 --cx 5.05 --cy 5.05 --radius 3.6";
const std::string kEdge =
    "--size 2 --fill-factor 0.64 --rows 6 --cols 8 --cx 7.3 --cy 4.1 --radius 4.5";

struct EnvGuard {
  explicit EnvGuard(const char* value) { setenv(cli::kEpsEnv, value, 1); }
  ~EnvGuard() { unsetenv(cli::kEpsEnv); }
};

}  // namespace

TEST_CASE("csv output") {
  const Result r = run("coverage " + kDisc + " --format csv");
  REQUIRE(r.rc == cli::kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() > 1);
  CHECK(ls[0] == "row,col,code,area,fraction");
  double sum = 0.0;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto f = split(ls[i], ',');
    REQUIRE(f.size() == 5);
    CHECK(f[2].size() == 4);
    sum += std::strtod(f[3].c_str(), nullptr);
  }
  CHECK(std::abs(sum - 25 * std::numbers::pi) <= 1e-7 * 25 * std::numbers::pi);
  CHECK(run("coverage " + kDisc).out == r.out);
}

TEST_CASE("json output with oracle check") {
  const Result r = run("coverage " + kBand + " --format json --check-oracle");
  REQUIRE(r.rc == cli::kExitOk);
  CHECK(r.err.empty());
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["grid"]["rows"] == 10);
  CHECK(doc["circle"]["radius"] == 3.6);
  CHECK(doc["entries"].size() >= 36);
  CHECK(doc["entries"].size() <= 42);
  double sum = 0.0;
  for (const auto& e : doc["entries"]) sum += e["area"].get<double>();
  CHECK(doc["total_area"].get<double>() == doctest::Approx(sum).epsilon(1e-15));
}

TEST_CASE("pgm output") {
  const Result r = run("coverage " + kEdge + " --format pgm");
  REQUIRE(r.rc == cli::kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 3 + 6);
  CHECK(ls[0] == "P2");
  CHECK(ls[1] == "8 6");
  CHECK(ls[2] == "65535");
  for (std::size_t i = 3; i < ls.size(); ++i) {
    const auto f = split(ls[i], ' ');
    REQUIRE(f.size() == 8);
    for (const auto& v : f) {
      const long x = std::stol(v);
      CHECK(x >= 0);
      CHECK(x <= 65535);
    }
  }
}

TEST_CASE("golden files") {
  const std::string dir = PIXGRID_GOLDEN_DIR;
  const std::pair<const char*, const std::string*> scenarios[] = {
      {"disc", &kDisc}, {"band", &kBand}, {"edge", &kEdge}};
  for (const auto& [name, flags] : scenarios) {
    for (const char* fmt : {"csv", "json", "pgm"}) {
      CAPTURE(name);
      CAPTURE(fmt);
      const std::string cmd = "coverage " + *flags + " --format " + fmt;
      const Result a = run(cmd);
      const Result b = run(cmd);
      REQUIRE(a.rc == cli::kExitOk);
      CHECK(a.out == b.out);
      CHECK(a.out == slurp(dir + "/" + name + "." + fmt));
    }
  }
}

TEST_CASE("csv and json carry the same areas") {
  const auto csv = lines(run("coverage " + kEdge + " --format csv").out);
  const auto doc = nlohmann::json::parse(run("coverage " + kEdge + " --format json").out);
  const auto& entries = doc["entries"];
  REQUIRE(entries.size() + 1 == csv.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto f = split(csv[i + 1], ',');
    CHECK(std::stoi(f[0]) == entries[i]["row"].get<int>());
    CHECK(std::stoi(f[1]) == entries[i]["col"].get<int>());
    CHECK(f[2] == entries[i]["code"].get<std::string>());
    CHECK(std::strtod(f[3].c_str(), nullptr) == entries[i]["area"].get<double>());
    CHECK(std::strtod(f[4].c_str(), nullptr) == entries[i]["fraction"].get<double>());
  }
}

TEST_CASE("total") {
  const Result disc = run("total " + kDisc);
  CHECK(disc.rc == cli::kExitOk);
  CHECK(disc.out.rfind("78.539816339744", 0) == 0);
  const Result off = run("total --size 1 --gap 0 --rows 4 --cols 4 --cx -50 --cy 2 --radius 3");
  CHECK(off.rc == cli::kExitOk);
  CHECK(off.out == "0\n");
  const Result one = run("total --size 1 --rows 1 --cols 1 --cx 0.5 --cy 0.5 --radius 3");
  CHECK(one.out == "1\n");
  CHECK(run("total " + kBand + " --check-oracle").rc == cli::kExitOk);
}

TEST_CASE("cases listing") {
  const Result r = run("cases");
  REQUIRE(r.rc == cli::kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 81);
  CHECK(ls[0] == "0000 realizable outside/segment-or-empty");
  CHECK(ls[80] == "2222 realizable full");
  std::set<std::string> unrealizable;
  for (const auto& l : ls) {
    if (l.size() > 5 && l.substr(5) == "unrealizable") unrealizable.insert(l.substr(0, 4));
  }
  for (const char* s : {"1010", "0101", "0102", "0201", "1020", "2010", "0202",
                        "2020", "0212", "1202", "2021", "2120"}) {
    CHECK(unrealizable.count(s) == 1);
  }
  CHECK(unrealizable.count("1212") == 1);
  CHECK(unrealizable.count("2200") == 0);
}

TEST_CASE("validation errors exit with 1") {
  const Result small = run("coverage --size 1 --gap 0 --rows 4 --cols 4 --cx 2 --cy 2 --radius 1.5");
  CHECK(small.rc == cli::kExitInvalid);
  CHECK(small.out.empty());
  CHECK_FALSE(small.err.empty());
  CHECK(run("coverage --size 1 --gap 0.1 --fill-factor 0.5 --rows 4 --cols 4 --cx 2 --cy 2 --radius 3")
            .rc == cli::kExitInvalid);
  CHECK(run("coverage --size 1 --fill-factor 1.5 --rows 4 --cols 4 --cx 2 --cy 2 --radius 3").rc ==
        cli::kExitInvalid);
  CHECK(run("coverage --size 1 --gap -1 --rows 4 --cols 4 --cx 2 --cy 2 --radius 3").rc ==
        cli::kExitInvalid);
  CHECK(run("coverage --size 1 --rows 0 --cols 4 --cx 2 --cy 2 --radius 3").rc ==
        cli::kExitInvalid);
  CHECK(run("coverage " + kDisc + " --format png").rc == cli::kExitInvalid);
  CHECK(run("coverage --size 1 --rows 4 --cols 4 --cx 2 --cy 2").rc == cli::kExitInvalid);
  CHECK(run("coverage " + kDisc + " --bogus").rc == cli::kExitInvalid);
  CHECK(run("").rc == cli::kExitInvalid);
  {
    EnvGuard env("abc");
    CHECK(run("total " + kDisc).rc == cli::kExitInvalid);
  }
  {
    EnvGuard env("1e-3");
    CHECK(run("total " + kDisc).rc == cli::kExitInvalid);
  }
}

TEST_CASE("tolerance override from the environment") {
  const std::string flags =
      "--size 1 --gap 0 --rows 8 --cols 8 --cx 4 --cy 4 --radius 3.0000001 --check-oracle";
  CHECK(run("total " + flags).rc == cli::kExitOk);
  EnvGuard env("9e-7");
  // A band this wide snaps vertices onto the circle that are measurably off it.
  const Result r = run("total " + flags);
  CHECK(r.rc == cli::kExitOracle);
  CHECK(r.err.find("(1,3)") != std::string::npos);
}
