#include <gtest/gtest.h>

#include <random>

#include "skw/error.hpp"
#include "skw/sections.hpp"
#include "support.hpp"

namespace skw {
namespace {

using test::default_session;

TEST(Sections, DimensionsOfB) {
  const ThcrRing& B = default_session().ring();
  const PrimeField& F = B.curve().field();
  for (int n = 1; n <= B.window(); ++n) {
    EXPECT_EQ(B.basis_words(n).size(), static_cast<std::size_t>(3 * n));
    EXPECT_EQ(rank(F, B.evaluation_matrix(B.b_basis(n))), static_cast<std::size_t>(3 * n));
  }
}

TEST(Sections, RiemannRochOnRandomDivisors) {
  const Session& s = default_session();
  const ThcrRing& B = s.ring();
  std::mt19937_64 rng(12);
  for (int t = 0; t < 30; ++t) {
    int n = 1 + static_cast<int>(rng() % 6);
    Divisor e;
    int deg = static_cast<int>(rng() % static_cast<unsigned>(3 * n));
    for (int i = 0; e.degree() < deg; ++i) {
      std::int64_t m = std::min<std::int64_t>(1 + static_cast<std::int64_t>(rng() % 3), deg - e.degree());
      e.add_term(s.auto_point("rr." + std::to_string(t) + "." + std::to_string(i)), m);
    }
    SectionSpace v = B.vanishing_space(n, e);
    EXPECT_EQ(v.dim(), static_cast<std::size_t>(3 * n - deg));
    // Every section in the space vanishes at the support with multiplicity.
    for (std::size_t i = 0; i < v.dim(); ++i) {
      SectionElem sec = B.element(v, i);
      for (const auto& [p, k] : e.terms()) {
        JetPoint j = B.curve().tangent_jet(p, static_cast<int>(k));
        EXPECT_TRUE(JetRing(B.curve().field(), static_cast<int>(k)).is_zero(B.eval(sec, j)));
      }
    }
  }
}

TEST(Sections, RelationsVanishOnCurve) {
  const Session& s = default_session();
  const ThcrRing& B = s.ring();
  const PrimeField& F = s.field();
  const auto& S = s.model();
  // a l_i l_{i+1} + b l_{i+1} l_i + c l_{i+2}^2, evaluated as products.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Point q = s.curve().find_point(seed + 1000);
    for (int i = 0; i < 3; ++i) {
      auto val = [&](int u, int v) {
        return F.mul(B.eval_word({static_cast<std::uint8_t>(u)}, q),
                     B.eval_word({static_cast<std::uint8_t>(v)}, s.curve().sigma(q)));
      };
      FieldElem r = F.add(F.add(F.mul(S.a(), val(i, (i + 1) % 3)), F.mul(S.b(), val((i + 1) % 3, i))),
                          F.mul(S.c(), val((i + 2) % 3, (i + 2) % 3)));
      EXPECT_TRUE(r.is_zero());
    }
  }
}

TEST(Sections, TwistedProductMatchesSpaceProduct) {
  const Session& s = default_session();
  const ThcrRing& B = s.ring();
  Point p = s.auto_point("P"), q = s.auto_point("Q");
  SectionSpace u = B.vanishing_space(1, Divisor::point(p));
  SectionSpace v = B.vanishing_space(1, Divisor::point(q));
  SectionSpace uv = B.space_product(u, v);
  EXPECT_EQ(uv.degree, 2);
  EXPECT_EQ(uv.dim(), 4u);
  EXPECT_TRUE(subspace_contains(s.field(), B.vanishing_space(2, Divisor::point(p) + Divisor::point(s.curve().sigma_pow(q, 1))).coords,
                                uv.coords));
}

TEST(Sections, OrientationIsUnique) {
  const Session& s = default_session();
  Curve raw = Curve::create(s.field(), s.params().a, s.params().b, s.params().c, s.curve().options());
  EXPECT_EQ(orientation_check(raw, 77), s.curve().orient());
}

TEST(Sections, WindowEnforced) {
  const ThcrRing& B = default_session().ring();
  EXPECT_THROW(B.b_basis(B.window() + 1), Error);
}

}  // namespace
}  // namespace skw
