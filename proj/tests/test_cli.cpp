#include "clustexp/cli.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using clustexp::cli::Outcome;
using clustexp::cli::run;

namespace {

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> out;
  std::istringstream in(slurp(std::string(GOLDEN_DIR) + "/cases.txt"));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar = line.find('|');
    GoldenCase c;
    std::istringstream name(line.substr(0, bar));
    name >> c.name;
    std::istringstream words(line.substr(bar + 1));
    for (std::string w; words >> w;) {
      const auto at = w.find("@FIXTURES@");
      if (at != std::string::npos) w.replace(at, 10, FIXTURE_DIR);
      c.args.push_back(w);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::string> args(std::initializer_list<std::string> words) {
  std::vector<std::string> out;
  for (std::string w : words) {
    if (w.rfind("@", 0) == 0) w = std::string(FIXTURE_DIR) + "/" + w.substr(1);
    out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("golden outputs") {
  const auto cases = golden_cases();
  CHECK(cases.size() >= 20);
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const Outcome first = run(c.args);
    const Outcome second = run(c.args);
    CHECK(first.exit_code == 0);
    CHECK(first.err.empty());
    CHECK(first.out == slurp(std::string(GOLDEN_DIR) + "/" + c.name + ".out"));
    CHECK(second.out == first.out);
  }
}

TEST_CASE("expand both prints two equal polynomials and MATCH") {
  const Outcome o = run(args({"expand", "--surface", "@annulus.srf", "--curve", "gamma2"}));
  REQUIRE(o.exit_code == 0);
  std::istringstream in(o.out);
  std::string a, b, tag;
  std::getline(in, a);
  std::getline(in, b);
  std::getline(in, tag);
  CHECK(a == b);
  CHECK(tag == "MATCH");
}

TEST_CASE("paths prints one line per complete path") {
  const Outcome o = run(args({"paths", "--surface", "@octagon.srf", "--curve", "gamma"}));
  REQUIRE(o.exit_code == 0);
  std::size_t lines = 0;
  for (char ch : o.out) lines += ch == '\n';
  CHECK(lines == 5);
}

TEST_CASE("domain errors exit 1") {
  const Outcome o = run(args({"expand", "--surface", "@octagon.srf", "--curve", "missing"}));
  CHECK(o.exit_code == 1);
  CHECK(o.out.empty());
  CHECK(o.err.find("unknown curve") != std::string::npos);

  const Outcome io = run(args({"stats", "--surface", "/nonexistent.srf"}));
  CHECK(io.exit_code == 1);
  CHECK(io.err.find("document.io") != std::string::npos);

  const Outcome depth = run(args({"oracle", "--surface", "@annulus.srf", "--curve", "gamma2"}));
  CHECK(depth.exit_code == 1);
  CHECK(depth.err.find("max-depth") != std::string::npos);

  const Outcome nf = run(args({"oracle", "--surface", "@octagon.srf", "--curve", "gamma", "--max-depth", "1"}));
  CHECK(nf.exit_code == 1);
  CHECK(nf.out == "NOT-FOUND searched depth 1\n");

  const Outcome seq = run(args({"mutate", "--surface", "@octagon.srf", "--seq", "1,9"}));
  CHECK(seq.exit_code == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run(args({})).exit_code == 2);
  CHECK(run(args({"frobnicate"})).exit_code == 2);
  CHECK(run(args({"expand", "--curve", "gamma"})).exit_code == 2);
  CHECK(run(args({"expand", "--surface", "@octagon.srf", "--curve", "gamma", "--method", "magic"})).exit_code == 2);
  const Outcome o = run(args({"stats", "--surface", "@octagon.srf", "--format", "json"}));
  CHECK(o.exit_code == 2);
  CHECK(o.err.rfind("usage error:", 0) == 0);
}

TEST_CASE("help exits 0") {
  const Outcome o = run(args({"--help"}));
  CHECK(o.exit_code == 0);
  CHECK(o.out.find("expand") != std::string::npos);
}
