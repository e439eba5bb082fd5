#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "commands.hpp"

using gtsh::cli::CommandConfig;
using gtsh::cli::run;
using json = nlohmann::json;

namespace {

CommandConfig cfg(std::string cmd) {
  CommandConfig c;
  c.command = std::move(cmd);
  return c;
}

}  // namespace

TEST(Cli, EnumerateCheck) {
  auto c = cfg("enumerate");
  c.n = 4;
  c.check = true;
  const auto r = run(c);
  EXPECT_EQ(r.exit_code, 0);
  const auto j = json::parse(r.output);
  EXPECT_EQ(j["count"], 4);
  EXPECT_EQ(j["shadows"].size(), 4u);
  EXPECT_TRUE(j["brute_equals_closed"].get<bool>());
}

TEST(Cli, Structure) {
  auto c = cfg("structure");
  c.n = 6;
  const auto j = json::parse(run(c).output);
  EXPECT_EQ(j["order"], 12);
  EXPECT_EQ(j["n0"], 3);
  EXPECT_EQ(j["alpha"], 1);
}

TEST(Cli, Compose) {
  auto c = cfg("compose");
  c.n = 4;
  c.a = "1,1";
  c.b = "1,1";
  const auto r = run(c);
  ASSERT_EQ(r.exit_code, 0);
  const auto j = json::parse(r.output);
  EXPECT_EQ(j["m"], 0);
  EXPECT_EQ(j["k"], 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run(cfg("nope")).exit_code, 2);
  auto c = cfg("compose");
  c.n = 4;
  c.a = "1;1";
  c.b = "1,1";
  EXPECT_EQ(run(c).exit_code, 2);
  c.a = "0,1";
  EXPECT_EQ(run(c).exit_code, 2);
  auto e = cfg("enumerate");
  e.n = 2;
  EXPECT_EQ(run(e).exit_code, 2);
  e.n = 30;
  e.check = true;
  EXPECT_EQ(run(e).exit_code, 2);
  auto s = cfg("structure");
  s.n = 6;
  s.format = "csv";
  EXPECT_EQ(run(s).exit_code, 2);
  auto l = cfg("ls-witness");
  l.n = 4;
  l.m = 0;
  l.k = 0;
  EXPECT_EQ(run(l).exit_code, 2);
}

TEST(Cli, DeterministicOutput) {
  for (const auto& name : gtsh::cli::command_names()) {
    auto c = cfg(name);
    c.n = 12;
    c.q = 24;
    c.alpha = 4;
    c.a = "0,0";
    c.b = "3,0";
    c.m = 2;
    c.k = 1;
    const auto first = run(c);
    EXPECT_EQ(first.exit_code, 0) << name << ": " << first.error;
    EXPECT_EQ(run(c).output, first.output) << name;
  }
}

TEST(Cli, Table) {
  auto c = cfg("table");
  c.n = 4;
  const auto r = run(c);
  EXPECT_EQ(r.output.substr(0, r.output.find('\n')), "m.k,0.0,1.1,2.1,3.0");
  c.format = "json";
  const auto j = json::parse(run(c).output);
  EXPECT_EQ(j["table"][1][1], "0.0");
}

TEST(Cli, ReportsAndVerification) {
  auto f = cfg("fibers");
  f.q = 12;
  f.n = 4;
  const auto fj = json::parse(run(f).output);
  EXPECT_TRUE(fj["surjective"].get<bool>());
  EXPECT_TRUE(fj["uniform"].get<bool>());
  EXPECT_EQ(fj["fibers"][0]["size"], 6);

  auto l = cfg("ls-witness");
  l.n = 6;
  l.a = "2,1";
  const auto lj = json::parse(run(l).output);
  EXPECT_EQ(lj["case"], "xy-coset");
  EXPECT_TRUE(lj["verified"].get<bool>());

  auto p = cfg("profinite");
  p.alpha = 5;
  const auto pj = json::parse(run(p).output);
  EXPECT_EQ(pj["closure_size"], 256);
  EXPECT_EQ(pj["membership_count"], 256);
  EXPECT_TRUE(pj["kernel_equals_membership"].get<bool>());

  auto b = cfg("bound");
  b.n = 12;
  const auto bj = json::parse(run(b).output);
  EXPECT_EQ(bj["lower_bound"], 8);
  EXPECT_EQ(bj["order"], 24);

  auto i = cfg("index");
  i.n = 3;
  i.check = true;
  EXPECT_EQ(json::parse(run(i).output)["index"], 108);

  for (gtsh::Int n : {3, 8, 12}) {
    auto v = cfg("verify-all");
    v.n = n;
    const auto r = run(v);
    EXPECT_EQ(r.exit_code, 0) << r.error;
    EXPECT_TRUE(json::parse(r.output)["passed"].get<bool>());
  }
}

TEST(Cli, Coordinates) {
  EXPECT_EQ(gtsh::cli::parse_coordinates("3,-1"), std::make_pair(gtsh::Int{3}, gtsh::Int{-1}));
  EXPECT_THROW(gtsh::cli::parse_coordinates("3"), std::invalid_argument);
  EXPECT_THROW(gtsh::cli::parse_coordinates("a,1"), std::invalid_argument);
  EXPECT_THROW(gtsh::cli::parse_coordinates("1,"), std::invalid_argument);
}
