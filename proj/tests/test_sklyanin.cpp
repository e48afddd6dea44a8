#include <gtest/gtest.h>

#include <random>

#include "skw/error.hpp"
#include "skw/sklyanin.hpp"
#include "support.hpp"

namespace skw {
namespace {

using test::default_session;
using test::oracle::FreeQuotient;
using test::oracle::Row;
using test::oracle::pow3;

constexpr int kOracleDegree = 6;

const FreeQuotient& free_quotient() {
  static const FreeQuotient q(1000003, 17, 5, 1, kOracleDegree);
  return q;
}

Row word_row(const Word& w) {
  Row r(pow3(static_cast<int>(w.size())), 0);
  r[FreeQuotient::index(w)] = 1;
  return r;
}

// Free-algebra lift of an element written in the model's basis.
Row lift(const GradedAlgebraModel& S, const SklElem& x) {
  std::uint64_t p = S.field().modulus();
  Row r(pow3(x.degree), 0);
  for (std::size_t t = 0; t < x.coeffs.size(); ++t) {
    r[FreeQuotient::index(S.basis_word(x.degree, t))] += x.coeffs[t].residue;
    r[FreeQuotient::index(S.basis_word(x.degree, t))] %= p;
  }
  return r;
}

Row minus(const Row& a, const Row& b, std::uint64_t p) {
  Row out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + p - b[i]) % p;
  return out;
}

TEST(Sklyanin, DimensionsMatchFreeQuotient) {
  const auto& S = default_session().model();
  for (int n = 0; n <= kOracleDegree; ++n) EXPECT_EQ(S.dim(n), free_quotient().quotient_dim(n)) << n;
  for (int n = 0; n <= S.window(); ++n) EXPECT_EQ(S.dim(n), static_cast<std::size_t>((n + 1) * (n + 2) / 2));
}

TEST(Sklyanin, BasisWordsAreABasisOfTheQuotient) {
  const auto& S = default_session().model();
  const auto& Q = free_quotient();
  for (int n = 1; n <= kOracleDegree; ++n) {
    // No nontrivial combination of basis words lies in the ideal: adding
    // them to the ideal gives the whole free degree-n space.
    test::oracle::Echelon e(Q.p(), pow3(n));
    std::size_t added = 0;
    for (std::size_t t = 0; t < S.dim(n); ++t) added += e.insert(word_row(S.basis_word(n, t)));
    EXPECT_EQ(added, S.dim(n));
  }
}

TEST(Sklyanin, WordReductionAgreesWithFreeQuotient) {
  const auto& S = default_session().model();
  const auto& Q = free_quotient();
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    int n = 1 + static_cast<int>(rng() % kOracleDegree);
    Word w;
    for (int i = 0; i < n; ++i) w.push_back(static_cast<std::uint8_t>(rng() % 3));
    SklElem x = S.from_word(w);
    EXPECT_TRUE(Q.in_ideal(n, minus(word_row(w), lift(S, x), Q.p())));
  }
}

TEST(Sklyanin, MultiplicationAgreesWithFreeQuotient) {
  const auto& S = default_session().model();
  const auto& Q = free_quotient();
  for (int m = 1; m < kOracleDegree; ++m) {
    for (int n = 1; m + n <= kOracleDegree; ++n) {
      for (std::size_t t = 0; t < S.dim(m); t += 1 + m) {
        for (std::size_t u = 0; u < S.dim(n); u += 1 + n) {
          SklElem prod = S.multiply(S.basis_elem(m, t), S.basis_elem(n, u));
          Word cat = S.basis_word(m, t);
          const Word& tail = S.basis_word(n, u);
          cat.insert(cat.end(), tail.begin(), tail.end());
          EXPECT_TRUE(Q.in_ideal(m + n, minus(word_row(cat), lift(S, prod), Q.p()))) << m << "," << n;
        }
      }
    }
  }
}

// Degree-3 element sum c_w w of the free algebra from (coefficient, word) pairs.
Row cubic(const std::vector<std::pair<std::int64_t, Word>>& terms, std::uint64_t p) {
  Row r(27, 0);
  for (const auto& [c, w] : terms) {
    std::int64_t v = c % static_cast<std::int64_t>(p);
    if (v < 0) v += static_cast<std::int64_t>(p);
    r[FreeQuotient::index(w)] = (r[FreeQuotient::index(w)] + static_cast<std::uint64_t>(v)) % p;
  }
  return r;
}

bool central_in_free_quotient(const Row& g) {
  const auto& Q = free_quotient();
  for (std::uint8_t i = 0; i < 3; ++i) {
    Row x = word_row({i});
    if (!Q.in_ideal(4, minus(Q.multiply(x, 1, g, 3), Q.multiply(g, 3, x, 1), Q.p()))) return false;
  }
  return true;
}

TEST(Sklyanin, CentralElementAgainstFreeQuotient) {
  std::int64_t a = 17, b = 5, c = 1;
  std::uint64_t p = 1000003;
  auto terms = [&](Word last) {
    return std::vector<std::pair<std::int64_t, Word>>{{c * (a * a * a - c * c * c), {0, 0, 0}},
                                                      {a * (b * b * b - c * c * c), {0, 1, 2}},
                                                      {b * (c * c * c - a * a * a), {1, 0, 2}},
                                                      {c * (c * c * c - b * b * b), last}};
  };
  // The closed form with x2^3 as last term is not central; with x1^3 it is.
  EXPECT_FALSE(central_in_free_quotient(cubic(terms({2, 2, 2}), p)));
  EXPECT_TRUE(central_in_free_quotient(cubic(terms({1, 1, 1}), p)));

  const auto& S = default_session().model();
  const CentreReport& r = S.centre_report();
  EXPECT_FALSE(r.formula_central);
  EXPECT_TRUE(r.corrected_central);
  EXPECT_EQ(r.centre_dim, 1u);
  EXPECT_TRUE(r.g_spans_centre);
  EXPECT_EQ(r.source, GSource::Corrected);
  EXPECT_TRUE(central_in_free_quotient(lift(S, S.g())));
}

TEST(Sklyanin, GCommutesAndKillsB) {
  const Session& s = default_session();
  const auto& S = s.model();
  std::mt19937_64 rng(3);
  for (int n = 0; n + 3 <= S.window(); ++n) {
    SklElem x = S.zero(n);
    for (auto& v : x.coeffs) v = S.field().from_int(static_cast<std::int64_t>(rng() % 1000));
    EXPECT_EQ(S.multiply(S.g(), x), S.multiply(x, S.g()));
  }
  for (int n = 1; n <= S.projection_window(); ++n) {
    EXPECT_EQ(rank(S.field(), S.projection(n)), static_cast<std::size_t>(3 * n));
    Subspace ker = S.preimage_space(n, SectionSpace{n, Subspace::zero(static_cast<std::size_t>(3 * n)), {}});
    EXPECT_EQ(ker, S.g_multiples(n));
  }
}

TEST(Sklyanin, ProjectionIsMultiplicative) {
  const Session& s = default_session();
  const auto& S = s.model();
  const ThcrRing& B = s.ring();
  const PrimeField& F = S.field();
  std::mt19937_64 rng(6);
  for (int t = 0; t < 10; ++t) {
    int m = 1 + static_cast<int>(rng() % 4), n = 1 + static_cast<int>(rng() % 4);
    SklElem x = S.zero(m), y = S.zero(n);
    for (auto& v : x.coeffs) v = F.from_int(static_cast<std::int64_t>(rng() % 100));
    for (auto& v : y.coeffs) v = F.from_int(static_cast<std::int64_t>(rng() % 100));
    Vec px = S.project_to_B(x), py = S.project_to_B(y), pxy = S.project_to_B(S.multiply(x, y));
    // Values at the samples: (xy)(q) = x(q) y(sigma^m q).
    for (std::size_t i = 0; i < B.samples().size(); i += 7) {
      const Point& q = B.samples()[i];
      auto val = [&](const Vec& co, int deg, const Point& at) {
        FieldElem acc = F.zero();
        for (std::size_t k = 0; k < co.size(); ++k) acc = F.fma(co[k], B.eval_word(B.basis_words(deg)[k], at), acc);
        return acc;
      };
      Point shifted = q;
      for (int j = 0; j < m; ++j) shifted = s.curve().sigma(shifted);
      EXPECT_EQ(val(pxy, m + n, q), F.mul(val(px, m, q), val(py, n, shifted)));
    }
  }
}

TEST(Sklyanin, WindowAndAssociativity) {
  const auto& S = default_session().model();
  EXPECT_THROW(S.multiply(S.basis_elem(7, 0), S.basis_elem(6, 0)), Error);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    SklElem x = S.basis_elem(2, rng() % 6), y = S.basis_elem(3, rng() % 10), z = S.basis_elem(4, rng() % 15);
    EXPECT_EQ(S.multiply(S.multiply(x, y), z), S.multiply(x, S.multiply(y, z)));
  }
  EXPECT_EQ(S.multiply(S.one(), S.g()), S.g());
  EXPECT_THROW(GradedAlgebraModel::build(S.field(), S.a(), S.b(), S.c(), 3), Error);
}

}  // namespace
}  // namespace skw
