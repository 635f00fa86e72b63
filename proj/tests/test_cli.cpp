#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult hopfcheck(std::vector<std::string> args) {
  args.insert(args.begin(), "hopfcheck");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hopf::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HOPFCHECK_TEST_DATA) + "/" + name; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hopfcheck_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Cli, ListSuites) {
  const CliResult r = hopfcheck({"list-suites"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 11);
  EXPECT_NE(r.out.find("graded-hopf\t"), std::string::npos);
}

TEST(Cli, GradedHopfOnAbc) {
  const CliResult r = hopfcheck({"verify", "--algebra", "abc", "--ring", "Z", "--maxdeg", "5", "--suite", "graded-hopf"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("OK: 1 suites, 0 failing checks"), std::string::npos);
}

TEST(Cli, LoweredExponentOnAbcFails) {
  const CliResult r = hopfcheck({"verify", "--algebra", "abc", "--suite", "lowered-exponent", "--p", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("at c: ab - ba"), std::string::npos) << r.out;
}

TEST(Cli, LoweredExponentOnFqsymPasses) {
  const CliResult r = hopfcheck({"verify", "--algebra", "fqsym", "--maxdeg", "5", "--suite", "lowered-exponent", "--p", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, ConfigurationErrors) {
  EXPECT_EQ(hopfcheck({"verify", "--algebra", "abc", "--suite", "nope"}).code, 1);
  EXPECT_EQ(hopfcheck({"verify", "--algebra", "abc", "--ring", "R"}).code, 1);
  EXPECT_EQ(hopfcheck({"verify", "--algebra", "nope"}).code, 1);
  EXPECT_EQ(hopfcheck({"verify"}).code, 1);
  EXPECT_EQ(hopfcheck({"verify", "--algebra", "abc", "--spec", data("abc.spec")}).code, 1);
  EXPECT_EQ(hopfcheck({"verify", "--algebra", "abc", "--format", "xml"}).code, 1);
  EXPECT_EQ(hopfcheck({"verify", "--algebra", "abc", "--p", "0"}).code, 1);
  EXPECT_EQ(hopfcheck({"verify", "--algebra", "fqsym", "--maxdeg", "9"}).code, 1);
  EXPECT_EQ(hopfcheck({"frobnicate"}).code, 1);
  EXPECT_EQ(hopfcheck({}).code, 1);
}

TEST(Cli, BrokenSpecNamesTheLine) {
  const CliResult r = hopfcheck({"verify", "--spec", data("broken_counit.spec")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 9"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("generator 'c'"), std::string::npos) << r.err;
}

TEST(Cli, SpecFiles) {
  EXPECT_EQ(hopfcheck({"verify", "--spec", data("divided_power.spec")}).code, 0);
  const CliResult r = hopfcheck({"verify", "--spec", data("abc.spec"), "--suite", "lowered-exponent", "--p", "2"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args{"verify", "--algebra", "abc", "--maxdeg", "4", "--format", "json", "--seed", "9"};
  const CliResult a = hopfcheck(args), b = hopfcheck(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"exit_code\": 0"), std::string::npos);
  EXPECT_NE(a.out.find("\"seed\": 9"), std::string::npos);
}

TEST(Cli, JsonCarriesWitness) {
  const CliResult r = hopfcheck({"verify", "--algebra", "abc", "--suite", "lowered-exponent", "--p", "2", "--format", "json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("\"ok\": false"), std::string::npos);
  EXPECT_NE(r.out.find("\"input\": \"c\""), std::string::npos) << r.out;
}

TEST(Cli, ExportRoundTripsThroughSpec) {
  const std::string path = temp_path("fqsym.spec");
  ASSERT_EQ(hopfcheck({"export", "--algebra", "fqsym", "--maxdeg", "3", "--out", path}).code, 0);
  const CliResult from_zoo = hopfcheck({"verify", "--algebra", "fqsym", "--maxdeg", "3", "--format", "json"});
  const CliResult from_spec = hopfcheck({"verify", "--spec", path, "--format", "json"});
  EXPECT_EQ(from_zoo.code, 0);
  EXPECT_EQ(from_zoo.out, from_spec.out);
  std::remove(path.c_str());
}

TEST(Cli, OutFile) {
  const std::string path = temp_path("report.txt");
  const CliResult r = hopfcheck({"verify", "--algebra", "taft:3", "--suite", "taft-remark", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(slurp(path).find("q^-1 x (realized choice)"), std::string::npos);
  std::remove(path.c_str());
  EXPECT_EQ(hopfcheck({"verify", "--algebra", "abc", "--out", "/nonexistent/dir/x"}).code, 1);
}
