#include <gtest/gtest.h>

#include "skw/error.hpp"
#include "skw/subalg.hpp"
#include "support.hpp"

namespace skw {
namespace {

using test::default_session;
using test::oracle::naive_series;

std::vector<std::size_t> sizes(const std::vector<long long>& v) { return {v.begin(), v.end()}; }

struct SubalgTest : ::testing::Test {
  const Session& s = default_session();
  const GradedAlgebraModel& S = s.model();
  const Curve& E = s.curve();
  int W = S.window();
  Point p = s.auto_point("P");
  Point q = s.auto_point("Q");
};

TEST_F(SubalgTest, GenerateFullAndEmpty) {
  SubalgebraWindow all = generate(S, {{1, Subspace::full(3)}}, W);
  for (int n = 0; n <= W; ++n) EXPECT_EQ(all[n].dim(), S.dim(n));
  SubalgebraWindow none = generate(S, {}, W);
  EXPECT_EQ(none[0].dim(), 1u);
  for (int n = 1; n <= W; ++n) EXPECT_EQ(none[n].dim(), 0u);
  EXPECT_THROW(generate(S, {{1, Subspace::full(3)}}, W + 1), Error);
  EXPECT_THROW(generate(S, {{2, Subspace::full(3)}}, W), Error);
}

TEST_F(SubalgTest, BlowupAtAPoint) {
  SubalgebraWindow R = construct_blowup(s, Divisor::point(p), W);
  // (1 + t^2) / ((1 - t)^2 (1 - t^3))
  EXPECT_EQ(R.hilbert(), sizes(naive_series({1, 0, 1}, {1, 1, 3}, W + 1)));
  EXPECT_TRUE(is_closed(S, R, W));
  for (bool ok : check_g_divisible(S, R)) EXPECT_TRUE(ok);
}

TEST_F(SubalgTest, BlowupAtTwoPoints) {
  for (const Point& r : {q, E.sigma_pow(p, 1)}) {
    SubalgebraWindow R = construct_blowup(s, Divisor::point(p) + Divisor::point(r), W);
    EXPECT_EQ(R.hilbert(), sizes(naive_series({1, -1, 1}, {1, 1, 3}, W + 1)));
    for (bool ok : check_g_divisible(S, R)) EXPECT_TRUE(ok);
  }
}

TEST_F(SubalgTest, BlowupRejectsBadDivisors) {
  EXPECT_THROW(construct_blowup(s, Divisor::point(p, -1), W), Error);
  EXPECT_THROW(construct_blowup(s, Divisor::point(p, 3), W), Error);
  EXPECT_THROW(construct_T_blowup(s, Divisor::point(p, 8), W), Error);
}

TEST_F(SubalgTest, TBlowups) {
  for (int d = 0; d <= 7; ++d) {
    Divisor div;
    for (int i = 0; i < d; ++i) div.add_term(s.auto_point("td" + std::to_string(i)), 1);
    SubalgebraWindow T = construct_T_blowup(s, div, W);
    auto want = naive_series({1, 7 - d, 1}, {1, 1, 1}, W / 3 + 1);
    for (int k = 0; 3 * k <= W; ++k) EXPECT_EQ(T[3 * k].dim(), static_cast<std::size_t>(want[k])) << d << " " << k;
    EXPECT_EQ(T[1].dim(), 0u);
  }
}

TEST_F(SubalgTest, VeroneseOfBlowup) {
  SubalgebraWindow R = construct_blowup(s, Divisor::point(p), W);
  SubalgebraWindow V = veronese(S, R, 3);
  SubalgebraWindow T = construct_T_blowup(s, truncated(E, Divisor::point(p), 3), W);
  EXPECT_TRUE(same_pieces(V, T, 0, 9));
  EXPECT_EQ(V[4].dim(), 0u);
  EXPECT_THROW(veronese(S, R, 0), Error);
}

TEST_F(SubalgTest, VirtualBlowupExample) {
  VblowExample ex = construct_vblow_example(s, p, W);
  EXPECT_EQ(ex.x1.dim(), 1u);
  EXPECT_EQ(ex.x2.dim(), 3u);
  EXPECT_EQ(ex.x3.dim(), 7u);
  std::vector<std::size_t> want = {1, 1, 3, 7, 9, 13, 19, 23, 29, 37, 43, 51, 61};
  EXPECT_EQ(ex.u.hilbert(), want);
  EXPECT_EQ(ex.u[2], ex.x2);
  EXPECT_EQ(ex.u[3], ex.x3);
  for (bool ok : check_g_divisible(S, ex.u)) EXPECT_TRUE(ok);
}

TEST_F(SubalgTest, PrimeVariantIsNotGDivisible) {
  VblowExample ex = construct_vblow_prime(s, p, W);
  EXPECT_EQ(ex.x2.dim(), 4u);
  auto v = check_g_divisible(S, ex.u);
  EXPECT_FALSE(v[4]);
  SubalgebraWindow H = g_hull(S, ex.u, 3);
  EXPECT_EQ(H.certified_to, W - 9);
  for (int n = 0; n <= H.certified_to; ++n) EXPECT_EQ(H[n].dim(), S.dim(n));
  EXPECT_THROW(g_hull(S, ex.u, 5), Error);
}

TEST_F(SubalgTest, GTimesAndImages) {
  Subspace gs = g_times(S, Subspace::full(S.dim(2)), 2);
  EXPECT_EQ(gs, S.g_multiples(5));
  SubalgebraWindow R = construct_blowup(s, Divisor::point(p), W);
  auto bar = image_dims(S, R);
  for (std::size_t n = 3; n < bar.size(); ++n) EXPECT_EQ(R[static_cast<int>(n)].dim(), bar[n] + R[static_cast<int>(n) - 3].dim());
}

TEST_F(SubalgTest, WindowedEndOfModule) {
  SubalgebraWindow R = construct_blowup(s, Divisor::point(p), W);
  ModuleWindow M = vblow_module(s, R, p);
  std::vector<std::size_t> md;
  for (const auto& m : M.pieces) md.push_back(m.dim());
  std::vector<std::size_t> want = {1, 2, 5, 8, 11, 16, 21, 26, 33, 40, 47, 56, 65};
  EXPECT_EQ(md, want);
  SubalgebraWindow End = windowed_end(S, M, W);
  VblowExample ex = construct_vblow_example(s, p, W);
  for (int n = 0; n <= W - 4; ++n) EXPECT_EQ(End[n], ex.u[n]) << n;
  EXPECT_TRUE(acts_on(S, ex.u, M));
  EXPECT_THROW(windowed_end(S, M, W + 1), Error);
}

TEST_F(SubalgTest, SgExample) {
  SgExample ex = construct_sg_example(S, W);
  for (int n = 1; n <= W; ++n) {
    EXPECT_EQ(ex.sg[n].dim(), n % 4 == 0 ? S.dim(n / 4) : 0u);
    EXPECT_TRUE(subspace_contains(S.field(), S.g_multiples(n), ex.u[n]));
  }
  EXPECT_TRUE(same_pieces(veronese(S, ex.u, 4), ex.sg, 0, W));
}

}  // namespace
}  // namespace skw
