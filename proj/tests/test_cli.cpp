#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "fiveclass/cli.hpp"

using namespace fiveclass;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Scratch files are removed when the fixture goes out of scope.
class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("fiveclass_cli_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++) + ".json");
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST(Cli, CompareHomeo) {
  const Result r = run({"compare", "X(1)", "X(7)", "--level", "homeo"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "homeomorphic: yes\n");
  EXPECT_EQ(run({"compare", "X(1)", "X(7)", "--level", "diffeo"}).out, "diffeomorphic: no\n");
}

TEST(Cli, EnumerateSmallest) {
  const Result r = run({"enumerate", "--r-max", "0", "--category", "smooth"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(count_lines(r.out), 4u);
  EXPECT_NE(r.out.find("X(1)"), std::string::npos);
}

TEST(Cli, Normalize) {
  const Result r = run({"normalize", "X(1) # X(1)"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "X(2)");
}

TEST(Cli, ClassifyRP5) {
  TempFile f(R"({"form": {"blocks": ["1"]}, "ks": 0, "c1": [2]})");
  const Result r = run({"classify", "--input", f.path()});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("X(1), X(7)"), std::string::npos) << r.out;
}

TEST(Cli, ClassifyJsonKeyOrder) {
  TempFile f(R"({"form": {"blocks": ["1"]}, "ks": 0})");
  const Result r = run({"classify", "--input", f.path(), "--c1", "2", "--json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"m", "r", "w2type", "q", "s", "k", "c_tilde_square",
                                            "smoothable", "homeo_form", "smooth_forms",
                                            "invariants", "rule"}));
  EXPECT_EQ(j["w2type"], "III");
  EXPECT_EQ(j["smooth_forms"].size(), 2u);
}

TEST(Cli, ClassifyInputErrors) {
  TempFile bad("{ not json");
  EXPECT_EQ(run({"classify", "--input", bad.path()}).code, cli::kInputError);
  TempFile no_c1(R"({"form": {"blocks": ["1"]}, "ks": 0})");
  EXPECT_EQ(run({"classify", "--input", no_c1.path()}).code, cli::kInputError);
  EXPECT_EQ(run({"classify", "--input", "/nonexistent/file.json"}).code, cli::kInputError);
  TempFile odd(R"({"form": {"blocks": ["1", "1"]}, "ks": 0, "c1": [1, 0]})");
  const Result r = run({"classify", "--input", odd.path()});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("NotSupported"), std::string::npos) << r.err;
}

TEST(Cli, ExpressionErrors) {
  const Result r = run({"invariants", "X(1) #"});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("syntax error"), std::string::npos);
  EXPECT_EQ(run({"invariants", "X(0,1)"}).code, cli::kInputError);
  EXPECT_EQ(run({"invariants", "X(0,1)", "--category", "top"}).code, cli::kOk);
}

TEST(Cli, Bordism) {
  EXPECT_EQ(run({"bordism", "add", "pin+:9", "pin+:9"}).out, "pin+:2\n");
  EXPECT_EQ(run({"bordism", "neg", "pin+:3"}).out, "pin+:13\n");
  EXPECT_EQ(run({"bordism", "forget", "pin+:7"}).out, "top-pin+:(0,7)\n");
  EXPECT_EQ(run({"bordism", "add", "pin+:1", "top-pin+:(0,1)"}).code, cli::kInputError);
  EXPECT_EQ(run({"bordism", "info"}).code, cli::kOk);
}

TEST(Cli, Ahss) {
  const Result r = run({"ahss", "--r", "1", "--twist", "none", "--json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["order"], 4);
  EXPECT_EQ(j["match"], true);
  EXPECT_EQ(run({"ahss", "--r", "5"}).code, cli::kInputError);
  EXPECT_EQ(run({"ahss", "--r", "0", "--twist", "gamma"}).code, cli::kInputError);
  EXPECT_EQ(run({"ahss", "--r", "5", "--dump-pages"}).code, cli::kOk);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run({"enumerate"}).code, cli::kInputError);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, Selftest) {
  const Result r = run({"selftest", "--seed", "3", "--count", "10"});
  EXPECT_EQ(r.code, cli::kOk) << r.out;
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}
