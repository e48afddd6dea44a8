#include <gtest/gtest.h>

#include <random>

#include "skw/divisor.hpp"
#include "skw/dsl.hpp"
#include "skw/error.hpp"
#include "support.hpp"

namespace skw {
namespace {

using test::default_session;
using test::oracle::brute_eventually_effective;
using test::oracle::brute_truncation;

struct DivisorTest : ::testing::Test {
  const Session& s = default_session();
  const Curve& E = s.curve();
  Point p = s.auto_point("P");
  Point q = s.auto_point("Q");
  OrbitOptions opt = s.orbit_options();

  Divisor pt(const Point& x, std::int64_t k = 1) const { return Divisor::point(x, k); }
  Point tw(const Point& x, std::int64_t j) const { return E.sigma_pow(x, j); }
  Divisor x() const { return pt(p) - pt(tw(p, 1)) + pt(tw(p, 2)); }
};

TEST_F(DivisorTest, Arithmetic) {
  Divisor d = pt(p, 2) + pt(q) - pt(p, 2);
  EXPECT_EQ(d, pt(q));
  EXPECT_EQ(d.degree(), 1);
  EXPECT_TRUE((pt(p) - pt(p)).is_zero());
  EXPECT_TRUE(leq(pt(p), pt(p, 2) + pt(q)));
  EXPECT_FALSE(leq(pt(q, 2), pt(p, 2) + pt(q)));
  EXPECT_EQ(3 * pt(q), pt(q, 3));
}

TEST_F(DivisorTest, TruncationExamples) {
  EXPECT_TRUE(truncated(E, x(), 0).is_zero());
  EXPECT_EQ(truncated(E, x(), 1), x());
  EXPECT_EQ(truncated(E, x(), 2), pt(p) + pt(tw(p, 3)));
  EXPECT_EQ(truncated(E, x(), 3), pt(p) + pt(tw(p, 2)) + pt(tw(p, 4)));
}

TEST_F(DivisorTest, TruncationMatchesDirectSum) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    Divisor d;
    for (int j = 0; j < 4; ++j) d.add_term(tw(j % 2 ? p : q, static_cast<std::int64_t>(rng() % 7) - 3), static_cast<std::int64_t>(rng() % 5) - 2);
    int n = static_cast<int>(rng() % 9);
    EXPECT_EQ(truncated(E, d, n), brute_truncation(E, d, n));
  }
}

TEST_F(DivisorTest, StrideTruncation) {
  // rho = sigma^3
  EXPECT_EQ(truncated(E, pt(p), 3, 3), pt(p) + pt(tw(p, 3)) + pt(tw(p, 6)));
}

TEST_F(DivisorTest, VirtualEffectivenessAgreesWithBruteForce) {
  std::mt19937_64 rng(8);
  int veff = 0;
  for (int t = 0; t < 200; ++t) {
    Divisor d;
    int spread = static_cast<int>(rng() % 6);
    for (int j = 0; j <= spread; ++j) d.add_term(tw(p, j), static_cast<std::int64_t>(rng() % 5) - 2);
    bool crit = is_virtually_effective(E, d, opt);
    veff += crit;
    EXPECT_EQ(crit, brute_eventually_effective(E, d, spread + 1, 40)) << to_string(d);
    if (crit) {
      VeffDecomposition dec = decompose_veff(E, d, opt);
      EXPECT_EQ(d, dec.u - dec.v + twist(E, dec.v, 1));
      EXPECT_TRUE(dec.u.is_effective());
      EXPECT_TRUE(dec.v.is_effective());
      EXPECT_TRUE(leq(dec.v, truncated(E, dec.u, dec.k)));
    } else {
      EXPECT_THROW(decompose_veff(E, d, opt), Error);
    }
  }
  EXPECT_GT(veff, 10);
}

TEST_F(DivisorTest, DecomposeExample) {
  VeffDecomposition dec = decompose_veff(E, x(), opt);
  EXPECT_EQ(dec.u, pt(p));
  EXPECT_EQ(dec.v, pt(tw(p, 1)));
  EXPECT_EQ(dec.k, 2);
  EXPECT_FALSE(is_virtually_effective(E, pt(tw(p, 1)) - pt(p), opt));
}

TEST_F(DivisorTest, OrbitSplit) {
  auto prof = orbit_split(E, pt(p) + pt(tw(p, 5)) + pt(q, 2), opt);
  ASSERT_EQ(prof.size(), 2u);
  std::int64_t total = 0;
  for (const auto& o : prof) total += o.degree();
  EXPECT_EQ(total, 4);
}

TEST_F(DivisorTest, SigmaEquivalence) {
  Divisor d = pt(p, 2) + pt(q) - pt(tw(q, 3));
  EXPECT_TRUE(sigma_equivalent(E, d, twist(E, d, 7), opt));
  EXPECT_TRUE(sigma_equivalent(E, x(), pt(p), opt));
  EXPECT_FALSE(sigma_equivalent(E, pt(p), pt(q), opt));
}

TEST_F(DivisorTest, NormalizedDivisor) {
  EXPECT_EQ(normalized_divisor(E, x(), pt(tw(p, 1)), 2, opt), pt(p));
  EXPECT_THROW(normalized_divisor(E, pt(q) - pt(p, 2), pt(q), 1, opt), Error);
}

TEST_F(DivisorTest, DslParsesExamples) {
  std::map<std::string, Point> pts{{"P", p}, {"Q", q}};
  EXPECT_EQ(parse_divisor("P - P@1 + P@2", pts, E), x());
  EXPECT_EQ(parse_divisor("2*P + Q@-3", pts, E), pt(p, 2) + pt(tw(q, -3)));
  EXPECT_EQ(parse_divisor("  P@+1 ", pts, E), pt(tw(p, 1)));
  EXPECT_EQ(parse_divisor("-P + Q", pts, E), pt(q) - pt(p));
}

TEST_F(DivisorTest, DslErrors) {
  std::map<std::string, Point> pts{{"P", p}, {"Q", q}};
  try {
    parse_divisor("P + + Q", pts, E);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5);
  }
  EXPECT_THROW(parse_divisor("", pts, E), ParseError);
  EXPECT_THROW(parse_divisor("P@", pts, E), ParseError);
  EXPECT_THROW(parse_divisor("2*", pts, E), ParseError);
  EXPECT_THROW(parse_divisor("P Q", pts, E), ParseError);
  try {
    parse_divisor("P + R", pts, E);
    FAIL() << "expected UnknownPoint";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownPoint);
  }
}

}  // namespace
}  // namespace skw
