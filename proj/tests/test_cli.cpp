#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include <json.hpp>

#include "craig/syntax.hpp"
#include "support.hpp"

using namespace craig;
using namespace craig::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(CRAIG_BINARY) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(CRAIG_TEST_DATA) + "/" + name; }

// Scratch file under the system temp directory, removed on destruction.
struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name, const std::string& text)
      : path(fs::temp_directory_path() / ("craig_cli_" + name)) {
    std::ofstream(path, std::ios::binary) << text;
  }
  ~TempFile() { fs::remove(path); }
  std::string str() const { return path.string(); }
};

bool has_line(const std::string& out, const std::string& line) {
  return ("\n" + out).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("check") {
  auto ok = run("check " + data("init.deriv"));
  CHECK(ok.code == 0);
  CHECK(has_line(ok.out, "ε Init principal=P0() PASS"));
  CHECK(has_line(ok.out, "wellformed: yes"));

  auto bad = run("check " + data("init_mismatch.deriv"));
  CHECK(bad.code == 1);
  CHECK(bad.out.rfind("ε ", 0) == 0);
  CHECK(bad.out.find("FAIL") != std::string::npos);
  CHECK(has_line(bad.out, "wellformed: no"));

  CHECK(run("check " + data("malformed.deriv")).code == 2);
  CHECK(run("check " + data("does_not_exist.deriv")).code == 2);
}

TEST_CASE("check prints child paths") {
  TempFile f("and_left.deriv", "(AndL [(P0() & P1())] => [P0()] (Init [P0();P1();(P0() & P1())] => [P0()]))\n");
  auto r = run("check " + f.str());
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "ε AndL principal=(P0() & P1()) PASS"));
  CHECK(r.out.find("\n0 Init") != std::string::npos);
}

TEST_CASE("interpolate") {
  auto a = run("interpolate " + data("init_g1d2.problem"));
  CHECK(a.code == 0);
  CHECK(a.out.rfind("interpolant: P0()\nleft: (Init [P0()] => [P0()])\nright: (Init [P0()] => [P0()])\n", 0) == 0);
  CHECK(has_line(a.out, "verified: PASS"));

  auto b = run("interpolate " + data("init_g1d1.problem"));
  CHECK(b.code == 0);
  CHECK(b.out.rfind("interpolant: bot\n", 0) == 0);

  auto c = run("interpolate --simplify " + data("disjoint.problem"));
  CHECK(c.code == 0);
  CHECK((c.out.rfind("interpolant: bot\n", 0) == 0 || c.out.rfind("interpolant: top\n", 0) == 0));

  auto w = run("interpolate --weak " + data("init.deriv"));
  CHECK(w.code == 0);
  CHECK(w.out.rfind("interpolant: P0()\n", 0) == 0);

  auto j = run("interpolate --json " + data("and_left.problem"));
  CHECK(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["interpolant"] == "P0()");
  CHECK(doc["report"].size() == 8);
  for (const auto& [k, v] : doc["report"].items()) CHECK(v == true);

  CHECK(run("interpolate " + data("root_mismatch.problem")).code == 1);
  CHECK(run("interpolate " + data("init.deriv")).code == 2);
}

TEST_CASE("verify") {
  auto out = run("interpolate " + data("and_left.problem"));
  REQUIRE(out.code == 0);
  TempFile good("good.result", out.out);
  auto ok = run("verify " + data("and_left.problem") + " " + good.str());
  CHECK(ok.code == 0);
  CHECK(has_line(ok.out, "verified: PASS"));

  auto j = run("verify --json " + data("and_left.problem") + " " + good.str());
  CHECK(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.size() == 8);
  CHECK(doc["pos_left"] == true);

  TempFile tampered_c("tampered_c.result",
                      "interpolant: P7()\nleft: (Init [(P0() & P1())] => [P0()])\nright: (Init [P0()] => [P0()])\n");
  auto c = run("verify " + data("and_left.problem") + " " + tampered_c.str());
  CHECK(c.code == 1);
  CHECK(has_line(c.out, "pos_left: FAIL"));

  std::string r = print_result({P(0), parse_derivation(
                                           "(AndL [(P0() & P1())] => [P0()] (Init [P0();P1();(P0() & P1())] => [P0()]))"),
                                leaf(Rule::Init, {P(0), P(1)}, {P(0)})});
  TempFile tampered_dr("tampered_dr.result", r);
  auto d = run("verify " + data("and_left.problem") + " " + tampered_dr.str());
  CHECK(d.code == 1);
  CHECK(has_line(d.out, "right_root: FAIL"));
  CHECK(has_line(d.out, "left_root: PASS"));

  CHECK(run("verify " + data("root_mismatch.problem") + " " + good.str()).code == 1);
  CHECK(run("verify " + data("and_left.problem") + " " + data("init.deriv")).code == 2);
}

TEST_CASE("usage") {
  CHECK(run("--help").code == 0);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("interpolate").code == 2);
  CHECK(run("verify " + data("and_left.problem")).code == 2);
  CHECK(run("interpolate --bogus " + data("and_left.problem")).code == 2);
}

TEST_CASE("interpolate then verify round trips over generated problems") {
  int n = 0;
  for (const auto& d : corpus(40, 99, 10, 3)) {
    auto s = random_split(d.root(), static_cast<std::uint64_t>(n));
    ProblemFile problem{{s.gamma1.begin(), s.gamma1.end()}, {s.gamma2.begin(), s.gamma2.end()},
                        {s.delta1.begin(), s.delta1.end()}, {s.delta2.begin(), s.delta2.end()}, d};
    TempFile pf("gen" + std::to_string(n) + ".problem", print_problem(problem));
    auto a = run("interpolate " + pf.str());
    CHECK(a.code == 0);
    TempFile rf("gen" + std::to_string(n) + ".result", a.out);
    auto b = run("verify " + pf.str() + " " + rf.str());
    CHECK(b.code == 0);
    // Output depends only on the input bytes.
    CHECK(run("interpolate " + pf.str()).out == a.out);
    ++n;
  }
}
