#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "skw/cache.hpp"
#include "skw/config.hpp"
#include "skw/error.hpp"
#include "skw/report.hpp"
#include "skw/scenarios.hpp"
#include "support.hpp"

namespace skw {
namespace {

namespace fs = std::filesystem;
using test::default_session;

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() / ("skw_test_" + std::to_string(::getpid()) + "_" + name);
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::ValidationError;
}

TEST(Config, ParsesExample) {
  SessionConfig c = parse_config("prime = 1000003\na=17\nb=5\nc=1\nseed=42");
  EXPECT_EQ(c.params.prime, 1000003u);
  EXPECT_EQ(c.params.a, 17);
  EXPECT_EQ(c.params.seed, 42u);
  EXPECT_EQ(c.params.window_s, 12);
  EXPECT_EQ(c.params.window_b, 15);
}

TEST(Config, RoundTrip) {
  SessionConfig c = parse_config(
      "# comment\nprime = 101\na = 1\nb = 2\nc = 3   # trailing\nwindow_s = 6\nK_orbit = 20\n"
      "point.P = auto\npoint.Q2 = 1,-1,0\n");
  EXPECT_EQ(parse_config(to_text(c)), c);
  ASSERT_TRUE(c.points.at("Q2").coords.has_value());
  EXPECT_EQ((*c.points.at("Q2").coords)[1], -1);
}

TEST(Config, Errors) {
  EXPECT_EQ(code_of([] { parse_config("prime = 9"); }), Errc::ValidationError);
  EXPECT_EQ(code_of([] { parse_config("prime = 1000003\nseed = 1"); }), Errc::ValidationError);
  EXPECT_EQ(code_of([] { parse_config("a=1\nb=2\nc=3\ncolour = red"); }), Errc::ValidationError);
  EXPECT_EQ(code_of([] { parse_config("a=1\nb=2\nc=3\nwindow_s = 2"); }), Errc::ValidationError);
  try {
    parse_config("a=1\nb=2\nthis line is wrong\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_config("a=1\na=2\nb=1\nc=1"), ParseError);
  EXPECT_THROW(parse_config("a=x\nb=1\nc=1"), ParseError);
  EXPECT_THROW(parse_config("a=1\nb=1\nc=1\npoint.P = 1,2"), ParseError);
}

TEST(Config, ResolvePoints) {
  const Session& s = default_session();
  SessionConfig c;
  c.points["P"] = PointSpec{};
  auto pts = resolve_points(s, c);
  EXPECT_EQ(pts.at("P"), s.auto_point("P"));
  Point id = s.curve().identity();
  c.points["O"] = PointSpec{std::array<std::int64_t, 3>{1, -1, 0}};
  EXPECT_EQ(resolve_points(s, c).at("O"), id);
  c.points["X"] = PointSpec{std::array<std::int64_t, 3>{1, 2, 3}};
  EXPECT_EQ(code_of([&] { resolve_points(s, c); }), Errc::NotOnCurve);
}

TEST(Series, MatchesNaiveExpansion) {
  EXPECT_EQ(series_coeffs({1, 0, 1}, {{1, -1}, {1, -1}, {1, 0, 0, -1}}, 13),
            test::oracle::naive_series({1, 0, 1}, {1, 1, 3}, 13));
  EXPECT_EQ(series_coeffs({1, -1, 1}, {{1, -1}, {1, -1}, {1, 0, 0, -1}}, 9),
            (std::vector<long long>{1, 1, 2, 4, 5, 7, 10, 12, 15}));
  EXPECT_THROW(series_coeffs({1}, {{2, 1}}, 3), Error);
}

TEST(Report, RecordsAreTabSeparated) {
  Report r;
  r.scenario = "demo";
  r.add("a\tb", "1", "1");
  r.add_bool("flag", false, "n<=3");
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(format_records({r}), "demo\ta b\t1\t1\tpass\t-\ndemo\tflag\ttrue\tfalse\tFAIL\tn<=3\n");
}

TEST(Cache, RoundTripAndMismatch) {
  const Session& s = default_session();
  CacheKey key = cache_key(s.params(), s.curve());
  fs::path path = temp_path("cache.bin");
  save_cache(path.string(), s.model(), key);
  CacheLoad load = load_cache(path.string(), key);
  ASSERT_TRUE(load.model.has_value());
  EXPECT_TRUE(load.warning.empty());
  EXPECT_TRUE(*load.model == s.model());

  CacheKey other = key;
  other.a += 1;
  CacheLoad stale = load_cache(path.string(), other);
  EXPECT_FALSE(stale.model.has_value());
  EXPECT_FALSE(stale.warning.empty());

  EXPECT_FALSE(load_cache(temp_path("missing.bin").string(), key).model.has_value());

  // Truncated and bit-flipped copies.
  std::ifstream in(path, std::ios::binary);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  fs::path bad = temp_path("bad.bin");
  write(bad, bytes.substr(0, bytes.size() / 2));
  EXPECT_EQ(code_of([&] { load_cache(bad.string(), key); }), Errc::CorruptCache);
  std::string flipped = bytes;
  flipped[flipped.size() / 2] ^= 1;
  write(bad, flipped);
  EXPECT_EQ(code_of([&] { load_cache(bad.string(), key); }), Errc::CorruptCache);
  write(bad, "not a cache");
  EXPECT_EQ(code_of([&] { load_cache(bad.string(), key); }), Errc::CorruptCache);
  fs::remove(path);
  fs::remove(bad);
}

TEST(Cache, SessionUsesMatchingModelOnly) {
  const Session& s = default_session();
  auto again = Session::create(s.params(), s.model());
  EXPECT_TRUE(again->model() == s.model());
  SessionParams other = s.params();
  other.window_s = 6;
  auto rebuilt = Session::create(other, s.model());
  EXPECT_EQ(rebuilt->model().window(), 6);
}

TEST(Generators, ParseFile) {
  const auto& S = default_session().model();
  auto gens = cli::parse_generators("# S(p)-like\n1: 1 0 0\n1: 0,1,0\n2: 1 0 0 0 0 0\n", S);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0].degree, 1);
  EXPECT_EQ(gens[0].space.dim(), 2u);
  try {
    cli::parse_generators("1: 1 0 0\n2: 1 2\n", S);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(cli::parse_generators("x: 1 0 0\n", S), ParseError);
  EXPECT_THROW(cli::parse_generators("1 1 0 0\n", S), ParseError);
  EXPECT_THROW(cli::parse_generators("1: 1 0 z\n", S), ParseError);
}

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"--window", "6", "hilbert"}).code, cli::kOk);
  EXPECT_EQ(run({"--window", "6", "verify", "veff"}).code, cli::kOk);
  EXPECT_EQ(run({"--window", "6", "verify", "nope"}).code, cli::kInputError);
  EXPECT_EQ(run({"--window", "6", "divisor", "veff", "P + + Q"}).code, cli::kInputError);
  EXPECT_EQ(run({"--window", "6", "divisor", "veff", "P + Z"}).code, cli::kInputError);
  EXPECT_EQ(run({"--window", "6", "divisor", "decompose", "2*P - P@1"}).code, cli::kCheckFailed);
  EXPECT_EQ(run({"--format", "yaml", "hilbert"}).code, cli::kInputError);
  EXPECT_EQ(run({}).code, cli::kInputError);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);

  fs::path cfg = temp_path("bad.cfg");
  write(cfg, "prime = 9\n");
  CliRun r = run({"--config", cfg.string(), "hilbert"});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("ValidationError"), std::string::npos);
  fs::remove(cfg);
}

TEST(Cli, DivisorVerbs) {
  CliRun r = run({"--window", "6", "--format", "records", "divisor", "veff", "P - P@1 + P@2"});
  EXPECT_NE(r.out.find("virtually effective\t-\tyes"), std::string::npos) << r.out;
  r = run({"--window", "6", "divisor", "sigma-equiv", "P - P@1 + P@2", "P"});
  EXPECT_NE(r.out.find("sigma-equivalent: yes"), std::string::npos) << r.out;
  r = run({"--window", "6", "divisor", "truncate", "-n", "2", "P - P@1 + P@2"});
  EXPECT_EQ(r.code, cli::kOk);
}

TEST(Cli, ConfigPointsAndCache) {
  fs::path cfg = temp_path("ok.cfg"), cache = temp_path("ok.cache");
  fs::remove(cache);
  write(cfg, "a = 17\nb = 5\nc = 1\nwindow_s = 6\npoint.A = auto\n");
  CliRun first = run({"--config", cfg.string(), "--cache", cache.string(), "--format", "records", "verify", "veff"});
  CliRun second = run({"--config", cfg.string(), "--cache", cache.string(), "--format", "records", "verify", "veff"});
  EXPECT_EQ(first.code, cli::kOk);
  EXPECT_TRUE(fs::exists(cache));
  EXPECT_EQ(first.out, second.out);
  EXPECT_TRUE(second.err.empty()) << second.err;
  // Another window rebuilds with a warning.
  CliRun third = run({"--config", cfg.string(), "--cache", cache.string(), "--window", "7", "hilbert"});
  EXPECT_EQ(third.code, cli::kOk);
  EXPECT_NE(third.err.find("warning"), std::string::npos);
  EXPECT_EQ(run({"--config", cfg.string(), "divisor", "veff", "P"}).code, cli::kInputError);
  EXPECT_EQ(run({"--config", cfg.string(), "divisor", "veff", "A"}).code, cli::kOk);
  fs::remove(cfg);
  fs::remove(cache);
}

TEST(Cli, SubalgFromFile) {
  fs::path gen = temp_path("gens.txt");
  write(gen, "1: 1 0 0\n1: 0 1 0\n1: 0 0 1\n");
  CliRun r = run({"--window", "6", "--format", "records", "subalg", gen.string()});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("hilbert\t-\t1,3,6,10,15,21,28"), std::string::npos) << r.out;
  fs::remove(gen);
}

TEST(Scenarios, UnknownIdAndOrder) {
  const Session& s = default_session();
  ScenarioContext ctx{s, {}};
  EXPECT_THROW(run_scenario("nope", ctx), Error);
  auto ids = scenario_ids();
  ASSERT_EQ(ids.size(), 12u);
  EXPECT_EQ(ids.front(), "core-s");
  auto reps = run_scenarios({"spp1", "veff"}, ctx, 2);
  ASSERT_EQ(reps.size(), 2u);
  EXPECT_EQ(reps[0].scenario, "spp1");
  EXPECT_EQ(reps[1].scenario, "veff");
  EXPECT_EQ(format_records(reps), format_records(run_scenarios({"spp1", "veff"}, ctx, 1)));
}

TEST(Scenarios, DocumentedExamples) {
  const Session& s = default_session();
  ScenarioContext ctx{s, {}};
  auto has_pass = [](const Report& r, const std::string& id) {
    for (const auto& c : r.checks) {
      if (c.id == id) return c.pass;
    }
    return false;
  };
  EXPECT_TRUE(has_pass(run_scenario("core-s", ctx), "dim S_6 = 28"));
  EXPECT_TRUE(has_pass(run_scenario("blowup-spq", ctx), "hilbert prefix 1,1,2,4,5,7,10,12,15"));
  EXPECT_TRUE(has_pass(run_scenario("rss108", ctx), "Ū = k"));
}

}  // namespace
}  // namespace skw
