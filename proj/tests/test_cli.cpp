#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "pascalgeo/json_io.hpp"

using namespace pascalgeo;
using json_io::Json;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(PASCALGEO_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Json run_json(const std::string& args) {
  const CliRun r = run(args);
  EXPECT_EQ(r.code, 0) << args;
  return json_io::parse_document(r.out);
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

const std::string kDoubled = quoted(R"({"A":0,"B":0,"C":1,"D":2,"E":3,"F":5})");
const std::string kGeneric = quoted(R"({"A":0,"B":1,"C":"inf","D":3,"E":"-2/7","F":5})");
const std::string kTriSym = quoted(R"({"A":0,"B":1,"C":"inf","D":2,"E":"1/2","F":-1})");

}  // namespace

TEST(Cli, PascalDoubledPoint) {
  const Json j = run_json("pascal --input " + kDoubled + " --symbol ABC/FED");
  EXPECT_EQ(j["symbol"], "ABC/FED");
  EXPECT_TRUE(j["defined"].get<bool>());
  EXPECT_EQ(json_io::line_from(j["line"]), make_line(0, -2, 1));
}

TEST(Cli, PascalUndefined) {
  const Json j = run_json(R"(pascal --input '{"A":1,"B":1,"C":1,"D":2,"E":3,"F":5}' --symbol ABC/FED)");
  EXPECT_FALSE(j["defined"].get<bool>());
  EXPECT_FALSE(j.contains("line"));
}

TEST(Cli, PascalUndefinedOnTripleCoincidence) {
  const Json j = run_json(R"(pascal --input '{"A":4,"B":-3,"C":"1/2","D":"1/2","E":-3,"F":4}' --symbol AED/FBC)");
  EXPECT_FALSE(j["defined"].get<bool>());
}

TEST(Cli, AllPascals) {
  const Json j = run_json("all-pascals --input " + kGeneric);
  EXPECT_EQ(j["pascals"].size(), 60U);
  for (const auto& row : j["pascals"]) EXPECT_TRUE(row["defined"].get<bool>());
}

TEST(Cli, DegenerateTriplePoint) {
  const std::string spec = quoted(R"({"base":{"A":3,"B":3,"C":3,"D":1,"E":7,"F":4},"symbol":"ABC/FED",)"
                                  R"("fiber":{"kind":"codim2","coords":[1,1]}})");
  const Json j = run_json("degenerate --input " + spec);
  EXPECT_EQ(json_io::line_from(j["line"]), make_line(12, -7, 1));
  EXPECT_EQ(run("degenerate --format text --input " + spec).out, "<12:-7:1>\n");
}

TEST(Cli, DegenerateTriplePointPencil) {
  const std::string spec = quoted(R"({"base":{"A":2,"B":2,"C":2,"D":-1,"E":0,"F":1},"symbol":"ABC/FED",)"
                                  R"("fiber":{"kind":"codim2","coords":[1,3]}})");
  EXPECT_EQ(json_io::line_from(run_json("degenerate --input " + spec)["line"]), make_line(-6, 1, 1));
}

TEST(Cli, DegenerateLLine) {
  const std::string spec = quoted(R"({"base":{"A":1,"B":0,"C":-1,"D":-1,"E":0,"F":1},"symbol":"ACD/FBE",)"
                                  R"("fiber":{"kind":"lline222","marked":"BE.CD","coords":[1,5]}})");
  const Json j = run_json("degenerate --input " + spec);
  EXPECT_EQ(json_io::line_from(j["line"]), make_line(2, -5, 3));
}

TEST(Cli, ClassifyDefaults) {
  const Json j = run_json("classify-222");
  EXPECT_EQ(j["input"]["P"], "1");
  EXPECT_EQ(j["counts"]["constant"], 44);
  EXPECT_EQ(j["counts"]["non_constant"], 16);
  EXPECT_EQ(j["entries"].size(), 60U);
}

TEST(Cli, KirkmanAndSteiner) {
  const Json k = run_json("kirkman --input " + kGeneric);
  EXPECT_EQ(k["points"].size(), 60U);
  const Json s = run_json("steiner --input " + kTriSym);
  EXPECT_EQ(s["points"].size(), 20U);
  int undefined = 0;
  for (const auto& row : s["points"]) undefined += !row["defined"].get<bool>();
  EXPECT_GE(undefined, 1);
}

TEST(Cli, TriSymmetric) {
  const Json j = run_json("tri-symmetric --input " + kTriSym);
  EXPECT_TRUE(j["tri_symmetric"].get<bool>());
  EXPECT_EQ(j["alpha"], "2");
  EXPECT_FALSE(run_json("tri-symmetric --input " + kGeneric)["tri_symmetric"].get<bool>());
}

TEST(Cli, VerifySuite) {
  const Json j = run_json("verify --suite chasles --seed 5");
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["seed"], 5);
}

TEST(Cli, RenderIsDeterministic) {
  const CliRun a = run("render --input " + kGeneric + " --markers all");
  const CliRun b = run("render --input " + kGeneric + " --markers all");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("<?xml", 0), 0U);
  const CliRun t = run(R"(render --input '{"P":1,"Q":0,"R":-1}')");
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("<svg"), std::string::npos);
}

TEST(Cli, OutFile) {
  const std::string path = ::testing::TempDir() + "pascalgeo_cli_out.json";
  EXPECT_EQ(run("tri-symmetric --input " + kTriSym + " --out " + path).code, 0);
  std::ifstream f(path);
  const std::string body((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  EXPECT_EQ(body, run("tri-symmetric --input " + kTriSym).out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("pascal --input '{\"A\":1' --symbol ABC/FED").code, 2);
  EXPECT_EQ(run("pascal --input " + kGeneric + " --symbol ABC/FEE").code, 2);
  EXPECT_EQ(run("verify --suite nope").code, 2);
  EXPECT_EQ(run(R"(pascal --input '{"A":"3//4","B":1,"C":2,"D":3,"E":4,"F":5}' --symbol ABC/FED)").code, 2);
  const std::string marked = quoted(R"({"base":{"A":1,"B":0,"C":-1,"D":-1,"E":0,"F":1},"symbol":"ABC/FED",)"
                                    R"("fiber":{"kind":"interior222","coords":[0,0,1]}})");
  EXPECT_EQ(run("degenerate --input " + marked).code, 3);
  EXPECT_EQ(run("render --input " + kGeneric + " --format json").code, 2);
  EXPECT_EQ(run("classify-222 --input '{\"P\":1,\"Q\":1,\"R\":0}'").code, 3);
  const std::string defined = quoted(R"({"base":{"A":3,"B":3,"C":3,"D":1,"E":7,"F":4},"symbol":"AFB/CED",)"
                                     R"("fiber":{"kind":"codim2","coords":[1,1]}})");
  EXPECT_EQ(run("degenerate --input " + defined).code, 3);
}

TEST(Cli, VerifySuiteAliases) {
  EXPECT_EQ(run_json("verify --suite thm-4-2 --samples 2")["suites"][0]["suite"], "classify-222");
  EXPECT_EQ(run_json("verify --suite prop-2-2")["suites"][0]["suite"], "identities");
}
