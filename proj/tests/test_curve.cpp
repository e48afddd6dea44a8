#include <gtest/gtest.h>

#include <optional>
#include <random>
#include <set>

#include "skw/curve.hpp"
#include "skw/error.hpp"
#include "support.hpp"

namespace skw {
namespace {

// Small curve whose points can be listed by brute force.
struct SmallCurve {
  PrimeField F{101};
  std::optional<Curve> E;
  std::vector<Point> points;

  SmallCurve() {
    CurveOptions opt;
    opt.order_floor = 3;
    for (int a = 1; a < 20 && !E; ++a) {
      try {
        E = Curve::create(F, a, 2, 3, opt);
      } catch (const Error&) {
      }
    }
    if (!E) return;
    auto keep = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
      Triple t{FieldElem{x}, FieldElem{y}, FieldElem{z}};
      if (E->on_curve(t)) points.push_back(Point{t});
    };
    // Representatives (1:y:z), (0:1:z), (0:0:1).
    for (std::uint32_t y = 0; y < 101; ++y) {
      for (std::uint32_t z = 0; z < 101; ++z) keep(1, y, z);
    }
    for (std::uint32_t z = 0; z < 101; ++z) keep(0, 1, z);
    keep(0, 0, 1);
  }
};

const SmallCurve& small() {
  static const SmallCurve c;
  return c;
}

TEST(Curve, RejectsDegenerateParameters) {
  PrimeField F(1000003);
  EXPECT_THROW(Curve::create(F, 0, 5, 1), Error);
  // a = b = c makes (a^3+b^3+c^3)^3 = 27 (abc)^3.
  EXPECT_THROW(Curve::create(F, 2, 2, 2), Error);
}

TEST(Curve, GroupLawAgainstPointList) {
  const auto& sc = small();
  ASSERT_TRUE(sc.E.has_value());
  const Curve& E = *sc.E;
  std::set<Point> all(sc.points.begin(), sc.points.end());
  ASSERT_TRUE(all.count(E.identity()));
  std::int64_t order = static_cast<std::int64_t>(sc.points.size());
  // Hasse bound.
  EXPECT_LE(std::abs(order - 102), 2 * 11);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const Point& p = sc.points[rng() % sc.points.size()];
    const Point& q = sc.points[rng() % sc.points.size()];
    const Point& r = sc.points[rng() % sc.points.size()];
    EXPECT_TRUE(all.count(E.add(p, q)));
    EXPECT_EQ(E.add(p, q), E.add(q, p));
    EXPECT_EQ(E.add(E.add(p, q), r), E.add(p, E.add(q, r)));
    EXPECT_EQ(E.add(p, E.neg(p)), E.identity());
    EXPECT_EQ(E.mul(p, order), E.identity());
  }
}

TEST(Curve, SigmaIsTranslation) {
  const Curve& E = test::default_session().curve();
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    Point q = E.find_point(rng());
    auto raw = E.sigma_raw(q);
    if (raw) {
      EXPECT_EQ(*raw, E.add(q, E.s()));
    }
    EXPECT_EQ(E.sigma(q), E.add(q, E.step()));
    EXPECT_EQ(E.sigma_inv(E.sigma(q)), q);
    // p^{sigma^j} = sigma^{-j}(p).
    EXPECT_EQ(E.sigma_pow(q, 1), E.sigma_inv(q));
    EXPECT_EQ(E.sigma_pow(E.sigma_pow(q, 3), -5), E.sigma_pow(q, -2));
  }
}

TEST(Curve, TranslationPointHasLargeOrder) {
  const Curve& E = test::default_session().curve();
  Point x = E.s();
  for (int k = 1; k <= 112; ++k) {
    EXPECT_NE(x, E.identity()) << k;
    x = E.add(x, E.s());
  }
}

TEST(Curve, FindPointIsDeterministic) {
  const Curve& E = test::default_session().curve();
  EXPECT_EQ(E.find_point(99), E.find_point(99));
  EXPECT_TRUE(E.on_curve(E.find_point(99)));
}

TEST(Curve, MakePointValidates) {
  const Curve& E = test::default_session().curve();
  EXPECT_THROW(E.make_point({FieldElem{0}, FieldElem{0}, FieldElem{0}}), Error);
  EXPECT_THROW(E.make_point({FieldElem{1}, FieldElem{2}, FieldElem{3}}), Error);
  Point p = E.find_point(5);
  const PrimeField& F = E.field();
  Triple scaled{F.mul(F.from_int(7), p.x[0]), F.mul(F.from_int(7), p.x[1]), F.mul(F.from_int(7), p.x[2])};
  EXPECT_EQ(E.make_point(scaled), p);
}

TEST(Curve, TangentJetsLieOnCurve) {
  const Curve& E = test::default_session().curve();
  JetRing R(E.field(), 4);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Point p = E.find_point(seed);
    JetPoint j = E.tangent_jet(p, 4);
    EXPECT_TRUE(R.is_zero(E.equation(R, j.coords)));
    JetPoint sj = E.sigma(j);
    EXPECT_TRUE(R.is_zero(E.equation(R, sj.coords)));
    EXPECT_EQ(sj.base, E.sigma(p));
  }
  EXPECT_THROW(E.tangent_jet(E.find_point(1), 9), Error);
}

}  // namespace
}  // namespace skw
