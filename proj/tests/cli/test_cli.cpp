#include <gtest/gtest.h>

#include "cli_runner.hpp"

using namespace gwp::test;

namespace {
  std::vector<CliCase> const& cases() {
    static auto const all = load_cli_cases(GWP_GOLDEN);
    return all;
  }
}  // namespace

class Golden : public ::testing::TestWithParam<CliCase> {};

TEST_P(Golden, MatchesFileAndExitCode) {
  auto const& c = GetParam();
  auto const  r = run_cli(GWP_CLI, GWP_TEST_DATA, c.args);
  EXPECT_EQ(r.exit_code, c.exit_code) << c.args;
  EXPECT_EQ(r.out, read_file(std::string(GWP_GOLDEN) + "/" + c.name + ".out")) << c.args;
}

TEST_P(Golden, ByteStableAcrossRuns) {
  auto const& c = GetParam();
  auto const  a = run_cli(GWP_CLI, GWP_TEST_DATA, c.args);
  auto const  b = run_cli(GWP_CLI, GWP_TEST_DATA, c.args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.exit_code, b.exit_code);
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(cases()),
                         [](auto const& info) { return info.param.name; });

TEST(Cli, EveryCaseHasAGoldenFile) {
  ASSERT_GE(cases().size(), 12u);
  for (auto const& c : cases()) {
    std::ifstream in(std::string(GWP_GOLDEN) + "/" + c.name + ".out");
    EXPECT_TRUE(in.good()) << c.name;
  }
}

TEST(Cli, CompressOutputReparses) {
  auto const out = run_cli(GWP_CLI, GWP_TEST_DATA, "compress --var H_loops.json --vertices v1,v2");
  ASSERT_EQ(out.exit_code, 0);
  std::string const tmp = ::testing::TempDir() + "/compressed.json";
  {
    std::ofstream f(tmp);
    f << out.out;
  }
  auto const again = run_cli(GWP_CLI, GWP_TEST_DATA, "compress --var '" + tmp + "' --vertices v1,v2");
  EXPECT_EQ(again.exit_code, 0);
  EXPECT_EQ(again.out, out.out);
}
