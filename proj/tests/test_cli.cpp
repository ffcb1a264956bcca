#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "hyperbound/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(HYPERBOUND_DATA_DIR) + "/" + name; }

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hyperbound::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json result_of(const Result& r) { return nlohmann::json::parse(r.out).at("result"); }

}  // namespace

TEST(Cli, QuadraticBound) {
  const Result r = run({"bound", "quadratic", data("family_g3.json"), "--assume", "rank1,simple,dagger"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "bound quadratic");
  EXPECT_TRUE(j.contains("version"));
  EXPECT_EQ(j["result"]["point_bound"], 24);
  EXPECT_EQ(j["result"]["tuple_bound"], 12);
  EXPECT_EQ(j["result"]["hypotheses"].size(), 3u);
}

TEST(Cli, CubicBound) {
  const Result r = run({"bound", "cubic", data("family_g4.json"), "--assume", "rank1,simple,dagger"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(result_of(r)["point_bound"], 114);
}

TEST(Cli, GenericBound) {
  const Result r =
      run({"bound", "generic", data("family_g3.json"), "--d", "2", "--assume", "rank1,simple,dagger"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(result_of(r)["point_bound"], 2125764);
  EXPECT_EQ(run({"bound", "generic", data("family_g3.json"), "--d", "1", "--assume", "rank1,simple,dagger"}).code, 1);
}

TEST(Cli, MissingHypotheses) {
  const Result r = run({"bound", "quadratic", data("family_g3.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("rank"), std::string::npos);
  EXPECT_NE(r.err.find("dagger"), std::string::npos);
  EXPECT_EQ(run({"bound", "quadratic", data("family_g3.json"), "--assume", "rank1,simple"}).code, 2);
  EXPECT_EQ(run({"bound", "quadratic", data("family_g3.json"), "--assume", "rank1,simple,nonsense"}).code, 1);
}

TEST(Cli, PreconditionFailures) {
  EXPECT_EQ(run({"bound", "cubic", data("family_g3.json"), "--assume", "rank1,simple,dagger"}).code, 2);
  EXPECT_EQ(run({"bound", "quadratic", data("bad_f3.json"), "--assume", "rank1,simple,dagger"}).code, 2);
}

TEST(Cli, MixedVolume) {
  const Result r = run({"polytope", "mv", data("envelope_d3.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(result_of(r)["mixed_volume"], "26");
}

TEST(Cli, FamilyVerify) {
  const Result r = run({"family", "verify", "--g-min", "3", "--g-max", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto res = result_of(r);
  ASSERT_EQ(res.size(), 1u);
  EXPECT_EQ(res[0]["genus"], 3);
  EXPECT_EQ(res[0]["passed"], true);
  EXPECT_EQ(run({"family", "verify", "--g-min", "2", "--g-max", "3"}).code, 1);
}

TEST(Cli, CurveCommands) {
  const Result info = run({"curve", "info", data("example_x9_x3.json")});
  ASSERT_EQ(info.code, 0) << info.err;
  const Result count = run({"curve", "count", data("family_g3.json"), "--p", "3", "--m", "2"});
  ASSERT_EQ(count.code, 0) << count.err;
  EXPECT_EQ(result_of(count)["affine_points"], 6);
  EXPECT_EQ(result_of(count)["total_points"], 7);
  const Result search = run({"curve", "search-quadratic", data("sqrt_minus2.json"), "--bound", "2"});
  ASSERT_EQ(search.code, 0) << search.err;
  bool found = false;
  const auto found_points = result_of(search)["points"];
  for (const auto& pt : found_points)
    if (pt["disc"] == "-2" && pt["y"][0] == "0" && pt["y"][1] == "0") found = true;
  EXPECT_TRUE(found) << search.out;
  EXPECT_EQ(run({"curve", "count", data("family_g3.json"), "--p", "2"}).code, 2);
}

TEST(Cli, SeriesNewton) {
  const Result r = run({"series", "newton", data("series_m_half.json"), "--m", "1/2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"series", "newton", data("series_m_half.json"), "--m", "x"}).code, 1);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"bound", "cubic", data("family_g4.json"), "--assume", "rank1,simple,dagger"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> mv{"polytope", "mv", data("envelope_d3.json")};
  EXPECT_EQ(run(mv).out, run(mv).out);
}

TEST(Cli, PrettyOutput) {
  const Result r =
      run({"bound", "quadratic", data("family_g3.json"), "--assume", "rank1,simple,dagger", "--pretty"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("24"), std::string::npos);
  EXPECT_FALSE(nlohmann::json::accept(r.out));
}

TEST(Cli, MalformedInput) {
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"polytope", "mv", data("does_not_exist.json")}).code, 1);
  EXPECT_EQ(run({"curve", "count", data("family_g3.json")}).code, 1);
  EXPECT_FALSE(run({"frobnicate"}).err.empty());
}
