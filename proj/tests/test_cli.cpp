#include <catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef UNITYSIEVE_BIN
#error "UNITYSIEVE_BIN must point at the command-line binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::string& args, const std::string& stdin_text = "") {
  std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
  std::string out_path = dir + "/usv_cli_out.txt";
  std::string err_path = dir + "/usv_cli_err.txt";
  std::string cmd = std::string(UNITYSIEVE_BIN) + " " + args + " > " + out_path +
                    " 2> " + err_path;
  if (!stdin_text.empty()) {
    std::string in_path = dir + "/usv_cli_in.txt";
    std::ofstream(in_path) << stdin_text;
    cmd += " < " + in_path;
  }
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ostringstream o, e;
  o << std::ifstream(out_path).rdbuf();
  e << std::ifstream(err_path).rdbuf();
  r.out = o.str();
  r.err = e.str();
  return r;
}

}  // namespace

TEST_CASE("prove emits a passing report on both routes") {
  for (const char* route : {"main", "alternative"}) {
    auto r = run(std::string("prove --route ") + route);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["route"] == route);
    CHECK(j["N"] == 210);
    CHECK(j["solutions"].size() == 30);
    CHECK(j["filtered"].size() == 2);
    for (const auto& a : j["assertions"]) CHECK(a["status"] == "pass");
  }
}

TEST_CASE("prove writes to a file and logs with --verbose") {
  std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
  std::string path = dir + "/usv_report.json";
  auto r = run("prove -v -o " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("[pass]") != std::string::npos);
  std::ostringstream file;
  file << std::ifstream(path).rdbuf();
  CHECK(nlohmann::json::parse(file.str())["N"] == 210);
  std::remove(path.c_str());
}

TEST_CASE("solve accepts a polynomial argument or stdin") {
  auto r = run("solve \"1 + x + y\"");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["N"] == 6);
  CHECK(j["solutions"].size() == 2);

  auto piped = run("solve", "1 + x + y\n");
  CHECK(piped.exit_code == 0);
  CHECK(nlohmann::json::parse(piped.out)["N"] == 6);
}

TEST_CASE("usage and input errors exit with code 2") {
  CHECK(run("solve \"1 + x + q\"").exit_code == 2);
  CHECK(run("solve \"1 + x + x^2\"").exit_code == 2);
  CHECK(run("prove --route sideways").exit_code == 2);
  CHECK(run("prove --modulus-override 100").exit_code == 2);
  CHECK(run("no-such-subcommand").exit_code == 2);
  CHECK(run("").exit_code == 2);
}

TEST_CASE("geometry verifies the named triangles and writes svg figures") {
  std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
  auto r = run("geometry --svg " + dir);
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["condition_identity"] == "pass");
  for (const char* name : {"heptagonal", "pentadecagonal-first", "pentadecagonal-second"}) {
    for (const auto& c : j[name]["claims"]) CHECK(c["status"] == "pass");
    for (const auto& a : j[name]["angles"]) CHECK(a["status"] == "pass");
    std::string svg_path = dir + "/" + name + ".svg";
    std::ostringstream svg;
    svg << std::ifstream(svg_path).rdbuf();
    CHECK(svg.str().find("<svg") != std::string::npos);
    std::remove(svg_path.c_str());
  }
  CHECK(j["heptagonal"]["window"] == "in_window");
}

TEST_CASE("utility subcommands") {
  CHECK(run("mobius 30").out == "-1\n");
  CHECK(run("mobius 12").out == "0\n");
  auto ram = run("ramanujan 210 70 105");
  CHECK(ram.out.find("c_210(70) = -24") != std::string::npos);
  CHECK(ram.out.find("c_210(105) = -48") != std::string::npos);
  CHECK(run("cyclotomic 12").out == "x^4 - x^2 + 1\n");
  CHECK(run("resultant", "x^2 + 1\nx - 2\n").out == "5\n");
  CHECK(run("resultant", "x^2 - 1\nx - 1\n").out == "0\n");
  CHECK(run("resultant", "x +\n").exit_code == 2);
}

TEST_CASE("jobs environment variable is honored") {
  std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
  std::string cmd = std::string("UNITY_SIEVE_JOBS=2 ") + UNITYSIEVE_BIN +
                    " prove > " + dir + "/usv_env.json 2>/dev/null";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 0);
  std::remove((dir + "/usv_env.json").c_str());
}
