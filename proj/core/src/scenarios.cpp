#include "skw/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <set>
#include <thread>

#include "skw/error.hpp"
#include "skw/grassmann.hpp"
#include "skw/subalg.hpp"

namespace skw {

namespace {

std::string margin(int n) { return "n<=" + std::to_string(n); }
std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string count_of(std::size_t k, std::size_t total) { return std::to_string(k) + "/" + std::to_string(total); }

std::uint64_t salt(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void attempt(Report& r, const std::string& id, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    r.checks.push_back({id, "no error", e.what(), false, "-"});
  } catch (const std::exception& e) {
    r.checks.push_back({id, "no error", std::string("exception: ") + e.what(), false, "-"});
  }
}

void add_result(Report& r, std::string id, std::string expected, std::string observed, bool pass,
                std::string m = "-") {
  r.checks.push_back({std::move(id), std::move(expected), std::move(observed), pass, std::move(m)});
}

std::vector<std::size_t> prefix(const std::vector<std::size_t>& xs, std::size_t n) {
  return {xs.begin(), xs.begin() + static_cast<long>(std::min(n, xs.size()))};
}

std::vector<std::size_t> to_sizes(const std::vector<long long>& xs) {
  std::vector<std::size_t> out;
  for (auto x : xs) out.push_back(static_cast<std::size_t>(x));
  return out;
}

// Pieces at S-degrees 0, 3, 6, ... as a T-graded Hilbert function.
std::vector<std::size_t> t_hilbert(const SubalgebraWindow& R) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= R.window; n += 3) out.push_back(R[n].dim());
  return out;
}

class Rand {
 public:
  explicit Rand(std::uint64_t seed) : rng_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  SklElem element(const GradedAlgebraModel& S, int n) {
    SklElem x = S.zero(n);
    for (auto& v : x.coeffs) v = S.field().from_int(uniform(0, static_cast<std::int64_t>(S.field().modulus()) - 1));
    return x;
  }

 private:
  std::mt19937_64 rng_;
};

struct Env {
  const ScenarioContext& ctx;
  const Session& s;
  const GradedAlgebraModel& S;
  const Curve& E;
  const PrimeField& F;
  int W;
  int Wb;  // degrees where the projection to B is available
  Rand rng;

  Env(const ScenarioContext& c, const std::string& id)
      : ctx(c),
        s(c.session),
        S(c.session.model()),
        E(c.session.curve()),
        F(c.session.field()),
        W(c.session.model().window()),
        Wb(c.session.model().projection_window()),
        rng(c.session.params().seed ^ salt(id)) {}

  // Named points used, so reports can print their coordinates.
  mutable std::map<std::string, Point> used;

  Point pt(const std::string& name) const { return used.emplace(name, ctx.point(name)).first->second; }
  Point fresh(const std::string& tag) const { return s.auto_point("scenario." + tag); }
  Point tw(const Point& p, std::int64_t j) const { return E.sigma_pow(p, j); }
  Subspace sp(const Point& q) const { return s.point_space(q); }
  Subspace prod(const Subspace& a, int m, const Subspace& b, int n) const { return S.product(a, m, b, n); }
};

Divisor pt_div(const Point& p, std::int64_t k = 1) { return Divisor::point(p, k); }

Vec sample_values(const ThcrRing& B, int n, const Vec& coords, int shift) {
  const PrimeField& F = B.curve().field();
  Vec out(B.samples().size());
  const auto& words = B.basis_words(n);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k].is_zero()) continue;
    Vec wv = B.word_values(words[k], shift);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.fma(coords[k], wv[i], out[i]);
  }
  return out;
}

// ---------------------------------------------------------------- core-s

void run_core_s(Env& e, Report& r) {
  const auto& S = e.S;
  const auto& F = e.F;
  attempt(r, "dim S_n", [&] {
    for (int n = 0; n <= e.W; ++n) {
      r.add("dim S_" + std::to_string(n) + " = " + std::to_string((n + 1) * (n + 2) / 2),
            std::to_string((n + 1) * (n + 2) / 2), std::to_string(S.dim(n)), margin(e.W));
    }
  });
  attempt(r, "relation space", [&] {
    r.add("dim relation space R", "3", std::to_string(9 - rank(F, S.reduction(2))));
  });
  attempt(r, "recurrence", [&] {
    bool ok = true;
    for (int n = 3; n <= e.W; ++n) {
      long long lhs = static_cast<long long>(S.dim(n));
      long long rhs = 3LL * static_cast<long long>(S.dim(n - 1)) - 3LL * static_cast<long long>(S.dim(n - 2)) +
                      static_cast<long long>(S.dim(n - 3));
      ok = ok && lhs == rhs;
    }
    r.add_bool("s_n = 3s_{n-1} - 3s_{n-2} + s_{n-3}", ok, margin(e.W));
  });
  attempt(r, "associativity", [&] {
    std::size_t good = 0;
    for (int t = 0; t < 100; ++t) {
      int m = static_cast<int>(e.rng.uniform(1, e.W - 2));
      int n = static_cast<int>(e.rng.uniform(1, e.W - m - 1));
      int k = static_cast<int>(e.rng.uniform(1, e.W - m - n));
      SklElem x = e.rng.element(S, m), y = e.rng.element(S, n), z = e.rng.element(S, k);
      good += S.multiply(S.multiply(x, y), z) == S.multiply(x, S.multiply(y, z)) ? 1 : 0;
    }
    r.add("associativity on random triples", "100/100", count_of(good, 100), margin(e.W));
  });
  attempt(r, "centre", [&] {
    const CentreReport& c = S.centre_report();
    r.add("dim of degree-3 centre", "1", std::to_string(c.centre_dim));
    r.add("printed closed form of g (last term x2^3) central", "no", yes_no(c.formula_central));
    r.add_bool("closed form with last term x1^3 central", c.corrected_central);
    r.add_bool("g spans the degree-3 centre", c.g_spans_centre);
    std::string src = c.source == GSource::Printed ? "printed" : c.source == GSource::Corrected ? "corrected" : "solved";
    r.add("source of g", "corrected", src);
    bool nonzero = std::any_of(S.g().coeffs.begin(), S.g().coeffs.end(), [](FieldElem v) { return !v.is_zero(); });
    r.add_bool("g != 0", nonzero);
    bool gens = true;
    for (int i = 0; i < 3; ++i) gens = gens && S.multiply(S.g(), S.generator(i)) == S.multiply(S.generator(i), S.g());
    r.add_bool("g x_i = x_i g for i = 0,1,2", gens);
    bool all = true;
    for (int n = 0; n <= e.W - 3; ++n) {
      SklElem x = e.rng.element(S, n);
      all = all && S.multiply(S.g(), x) == S.multiply(x, S.g());
    }
    r.add_bool("g commutes with a random element of each S_n", all, margin(e.W - 3));
  });
  attempt(r, "projection", [&] {
    Vec img = S.project_to_B(S.g());
    r.add_bool("image of g in B_3 is 0", std::all_of(img.begin(), img.end(), [](FieldElem v) { return v.is_zero(); }));
    bool ranks = true, kernels = true;
    for (int n = 1; n <= e.Wb; ++n) {
      ranks = ranks && rank(F, S.projection(n)) == static_cast<std::size_t>(3 * n);
      Subspace ker = S.preimage_space(n, SectionSpace{n, Subspace::zero(static_cast<std::size_t>(3 * n)), {}});
      kernels = kernels && ker == S.g_multiples(n);
    }
    r.add_bool("rank S_n -> B_n = 3n", ranks, margin(e.Wb));
    r.add_bool("ker(S_n -> B_n) = g S_{n-3}", kernels, margin(e.Wb));
    const ThcrRing& B = e.s.ring();
    std::size_t good = 0;
    for (int t = 0; t < 30; ++t) {
      int m = static_cast<int>(e.rng.uniform(1, e.Wb - 1));
      int n = static_cast<int>(e.rng.uniform(1, e.Wb - m));
      SklElem x = e.rng.element(S, m), y = e.rng.element(S, n);
      Vec vx = sample_values(B, m, S.project_to_B(x), 0);
      Vec vy = sample_values(B, n, S.project_to_B(y), m);
      for (std::size_t i = 0; i < vx.size(); ++i) vx[i] = F.mul(vx[i], vy[i]);
      good += B.coords_from_values(m + n, vx) == S.project_to_B(S.multiply(x, y)) ? 1 : 0;
    }
    r.add("projection is multiplicative on random pairs", "30/30", count_of(good, 30), margin(e.Wb));
  });
}

// ---------------------------------------------------------------- thcr

void run_thcr(Env& e, Report& r) {
  const ThcrRing& B = e.s.ring();
  const Curve& E = e.E;
  const PrimeField& F = e.F;
  attempt(r, "orientation", [&] {
    int o = orientation_check(E, e.s.params().seed ^ 0x0b1eULL);
    r.add("twist orientation", std::to_string(E.orient()), std::to_string(o));
    std::size_t chosen = 0, rejected = 0;
    for (int i = 0; i < 40; ++i) {
      Point q = e.fresh("thcr.q" + std::to_string(i));
      auto rel = [&](const Point& r2) {
        bool zero = true;
        for (int k = 0; k < 3; ++k) {
          int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
          FieldElem v = F.mul(E.a(), F.mul(q.x[k], r2.x[k1]));
          v = F.add(v, F.mul(E.b(), F.mul(q.x[k1], r2.x[k])));
          v = F.add(v, F.mul(E.c(), F.mul(q.x[k2], r2.x[k2])));
          zero = zero && v.is_zero();
        }
        return zero;
      };
      chosen += rel(E.sigma(q)) ? 1 : 0;
      rejected += rel(E.sigma_inv(q)) ? 0 : 1;
    }
    r.add("relations vanish under the chosen twist", "40/40", count_of(chosen, 40));
    r.add_bool("relations fail somewhere under the other twist", rejected > 0);
  });
  attempt(r, "B_2 products", [&] {
    Matrix rows;
    for (std::uint8_t i = 0; i < 3; ++i) {
      for (std::uint8_t j = 0; j < 3; ++j) rows.push_back(B.word_coords(Word{i, j}));
    }
    r.add("rank of the 9 products l_i l_j", "6", std::to_string(rank(F, rows)));
  });
  attempt(r, "dim B_n", [&] {
    for (int n = 1; n <= B.window(); ++n) {
      SectionSpace bn = B.b_basis(n);
      std::size_t sep = rank(F, B.evaluation_matrix(bn));
      r.add("dim B_" + std::to_string(n) + " = 3n", std::to_string(3 * n),
            std::to_string(bn.dim() == sep ? bn.dim() : sep), margin(B.window()));
    }
  });
  attempt(r, "Riemann-Roch", [&] {
    std::size_t good = 0;
    int top = std::min(8, B.window());
    for (int t = 0; t < 50; ++t) {
      int n = static_cast<int>(e.rng.uniform(1, top));
      Divisor d;
      int k = static_cast<int>(e.rng.uniform(1, 4));
      for (int i = 0; i < k && d.degree() < 3 * n - 1; ++i) {
        std::int64_t m = std::min<std::int64_t>(e.rng.uniform(1, 3), 3 * n - 1 - d.degree());
        d.add_term(e.fresh("thcr.rr" + std::to_string(t) + "." + std::to_string(i)), m);
      }
      good += B.vanishing_space(n, d).dim() == static_cast<std::size_t>(3 * n) - static_cast<std::size_t>(d.degree()) ? 1 : 0;
    }
    r.add("dim H^0(L_n(-e)) = 3n - deg e (random e, mult <= 3)", "50/50", count_of(good, 50));
  });
}

// ---------------------------------------------------------------- ro41

void run_ro41(Env& e, Report& r) {
  const PrimeField& F = e.F;
  Subspace s1 = Subspace::full(3);
  attempt(r, "products", [&] {
    std::size_t gen = 0, special = 0, ro31 = 0, left = 0, eq = 0, strict2 = 0, strict4 = 0;
    for (int i = 0; i < 20; ++i) {
      Point q = e.fresh("ro41.q" + std::to_string(i)), rr = e.fresh("ro41.r" + std::to_string(i));
      Subspace qr = e.prod(e.sp(q), 1, e.sp(rr), 1);
      gen += qr.dim() == 4 ? 1 : 0;
      Subspace qq2 = e.prod(e.sp(q), 1, e.sp(e.tw(q, 2)), 1);
      special += qq2.dim() == 3 ? 1 : 0;
      ro31 += qr == e.s.preimage(2, pt_div(q) + pt_div(e.tw(rr, 1))) ? 1 : 0;
      left += e.prod(s1, 1, e.sp(q), 1) == e.prod(e.sp(e.tw(q, 1)), 1, s1, 1) ? 1 : 0;
      eq += qr == e.prod(e.sp(e.tw(rr, 1)), 1, e.sp(e.tw(q, -1)), 1) ? 1 : 0;
      Subspace big2 = e.prod(e.sp(e.tw(q, 3)), 1, e.sp(e.tw(q, -1)), 1);
      strict2 += subspace_contains(F, big2, qq2) && qq2.dim() + 1 == big2.dim() &&
                         big2 == e.s.preimage(2, pt_div(q) + pt_div(e.tw(q, 3)))
                     ? 1
                     : 0;
      Subspace q4 = e.prod(e.sp(q), 1, e.sp(e.tw(q, -4)), 1);
      Subspace small4 = e.prod(e.sp(e.tw(q, -3)), 1, e.sp(e.tw(q, -1)), 1);
      strict4 += subspace_contains(F, q4, small4) && small4.dim() + 1 == q4.dim() ? 1 : 0;
    }
    r.add("dim S(q)_1 S(r)_1 = 4 for r != q^{sigma^2}", "20/20", count_of(gen, 20));
    r.add("dim S(q)_1 S(q^{sigma^2})_1 = 3", "20/20", count_of(special, 20));
    r.add("S(q)_1 S(r)_1 = preimage of H^0(L_2(-q-r^sigma))", "20/20", count_of(ro31, 20));
    r.add("S_1 S(q)_1 = S(q^sigma)_1 S_1", "20/20", count_of(left, 20));
    r.add("S(q)_1 S(r)_1 = S(r^sigma)_1 S(q^{sigma^-1})_1 for generic r", "20/20", count_of(eq, 20));
    r.add("r = q^{sigma^2}: strict containment of codim 1", "20/20", count_of(strict2, 20));
    r.add("r = q^{sigma^-4}: strict containment of codim 1", "20/20", count_of(strict4, 20));
  });
  attempt(r, "chains", [&] {
    for (int k = 3; k <= 4; ++k) {
      std::size_t good = 0;
      for (int t = 0; t < 5; ++t) {
        Subspace acc = Subspace::full(1);
        Divisor d;
        for (int i = 0; i < k; ++i) {
          Point q = e.fresh("ro41.chain" + std::to_string(k) + "." + std::to_string(t) + "." + std::to_string(i));
          acc = e.prod(acc, i, e.sp(q), 1);
          d += pt_div(e.tw(q, i));
        }
        good += e.S.image_in_B(k, acc) == e.s.ring().vanishing_space(k, d).coords ? 1 : 0;
      }
      r.add("image of S(p(0))_1...S(p(" + std::to_string(k - 1) + "))_1 = H^0(L_" + std::to_string(k) +
                "(-sum p(i)^{sigma^i}))",
            "5/5", count_of(good, 5));
    }
  });
}

// ---------------------------------------------------------------- blowups

void hilbert_check(Report& r, const std::string& suffix, const SubalgebraWindow& R, const std::vector<long long>& series,
                   std::size_t shown) {
  auto h = R.hilbert();
  std::vector<std::size_t> want = to_sizes(series);
  std::vector<std::size_t> wp = prefix(want, shown), hp = prefix(h, shown);
  add_result(r, "hilbert prefix " + join(wp) + suffix, join(wp), join(hp), wp == hp, margin(static_cast<int>(shown) - 1));
  add_result(r, "hilbert function matches series in window" + suffix, join(want), join(h), want == h, margin(R.window));
}

void gdiv_check(Report& r, const std::string& suffix, const GradedAlgebraModel& S, const SubalgebraWindow& R) {
  auto v = check_g_divisible(S, R);
  std::string obs;
  for (std::size_t n = 0; n < v.size(); ++n) {
    if (!v[n]) obs += (obs.empty() ? "fails at " : ",") + std::to_string(n);
  }
  add_result(r, "g-divisible" + suffix, "all degrees", obs.empty() ? "all degrees" : obs, obs.empty(),
             margin(R.closed_to));
}

// dim R_n = dim image(R_n) + dim R_{n-3}.
void hilbert_identity_check(Report& r, const std::string& suffix, const GradedAlgebraModel& S, const SubalgebraWindow& R) {
  auto h = R.hilbert();
  auto bar = image_dims(S, R);
  bool ok = true;
  for (std::size_t n = 0; n < bar.size(); ++n) ok = ok && h[n] == bar[n] + (n >= 3 ? h[n - 3] : 0);
  r.add_bool("dim R_n = dim image(R_n) + dim R_{n-3}" + suffix, ok, margin(static_cast<int>(bar.size()) - 1));
}

void run_blowup_sp(Env& e, Report& r) {
  Point p = e.pt("P");
  attempt(r, "S(p)", [&] {
    SubalgebraWindow R = construct_blowup(e.s, pt_div(p), e.W);
    auto series = series_coeffs({1, 0, 1}, {{1, -1}, {1, -1}, {1, 0, 0, -1}}, e.W + 1);
    hilbert_check(r, "", R, series, 9);
    SubalgebraWindow one = generate(e.S, {{1, e.sp(p)}}, e.W);
    r.add_bool("V_1 alone generates S(p)", same_pieces(R, one, 0, e.W), margin(e.W));
    r.add_bool("closed under products", is_closed(e.S, R, e.W), margin(e.W));
    gdiv_check(r, "", e.S, R);
    hilbert_identity_check(r, "", e.S, R);
    int top = std::min(9, e.W);
    SubalgebraWindow T = construct_T_blowup(e.s, truncated(e.E, pt_div(p), 3), e.W);
    r.add_bool("S(p)^(3) = T(p + p^sigma + p^{sigma^2})", same_pieces(veronese(e.S, R, 3), T, 0, top), margin(top));
  });
  attempt(r, "S(0)", [&] {
    SubalgebraWindow R = construct_blowup(e.s, Divisor{}, e.W);
    bool full = true;
    for (int n = 0; n <= e.W; ++n) full = full && R[n].dim() == e.S.dim(n);
    r.add_bool("S(0) = S", full, margin(e.W));
  });
}

void run_blowup_spq(Env& e, Report& r) {
  Point p = e.pt("P");
  auto series = series_coeffs({1, -1, 1}, {{1, -1}, {1, -1}, {1, 0, 0, -1}}, e.W + 1);
  std::vector<std::pair<std::string, Point>> cases = {{"", e.pt("Q")}, {" (q = p^sigma)", e.tw(p, 1)}};
  for (const auto& [suffix, q] : cases) {
    attempt(r, "S(p+q)" + suffix, [&] {
      Divisor d = pt_div(p) + pt_div(q);
      SubalgebraWindow R = construct_blowup(e.s, d, e.W);
      hilbert_check(r, suffix, R, series, 9);
      std::vector<std::size_t> vd;
      for (const auto& g : R.gens) vd.push_back(g.space.dim());
      r.add("dims V_1, V_2, V_3" + suffix, "1,2,4", join(vd));
      gdiv_check(r, suffix, e.S, R);
      hilbert_identity_check(r, suffix, e.S, R);
      r.add_bool("g in S(p+q)_3" + suffix, R[3].contains(e.F, e.S.g().coeffs));
      int top = std::min(9, e.W);
      SubalgebraWindow T = construct_T_blowup(e.s, truncated(e.E, d, 3), e.W);
      r.add_bool("S(p+q)^(3) = T([p+q]_3)" + suffix, same_pieces(veronese(e.S, R, 3), T, 0, top), margin(top));
      SubalgebraWindow two = generate(e.S, {R.gens[0], R.gens[1]}, e.W);
      r.notes.push_back("probe" + suffix + ": k<V_1,V_2> equals S(p+q) up to degree " + std::to_string(e.W) + ": " +
                        yes_no(same_pieces(two, R, 0, e.W)));
    });
  }
}

void run_blowup_td(Env& e, Report& r) {
  attempt(r, "T(0)", [&] {
    SubalgebraWindow T = construct_T_blowup(e.s, Divisor{}, e.W);
    std::vector<std::size_t> want;
    for (int n = 0; 3 * n <= e.W; ++n) want.push_back(static_cast<std::size_t>((3 * n + 1) * (3 * n + 2) / 2));
    r.add("T(0) = T: dims by T-degree", join(want), join(t_hilbert(T)), margin(e.W));
  });
  for (int deg = 1; deg <= 7; ++deg) {
    attempt(r, "T(d) deg " + std::to_string(deg), [&] {
      Divisor d;
      for (int i = 0; d.degree() < deg; ++i) {
        std::int64_t m = std::min<std::int64_t>(e.rng.uniform(1, 2), deg - d.degree());
        d.add_term(e.fresh("td." + std::to_string(deg) + "." + std::to_string(i)), m);
      }
      SubalgebraWindow T = construct_T_blowup(e.s, d, e.W);
      auto series = series_coeffs({1, 7 - deg, 1}, {{1, -1}, {1, -1}, {1, -1}}, e.W / 3 + 1);
      auto h = t_hilbert(T);
      std::vector<std::size_t> want = to_sizes(series);
      std::string id = "T(d) with deg d = " + std::to_string(deg) + ": dims 1, 10-d, 28-3d, 55-6d";
      add_result(r, id, join(prefix(want, 4)), join(prefix(h, 4)), prefix(want, 4) == prefix(h, 4), "T-deg<=3");
      add_result(r, "T(d) with deg d = " + std::to_string(deg) + " matches series in window", join(want), join(h),
                 want == h, margin(e.W));
    });
  }
}

// ---------------------------------------------------------------- vblow

void run_vblow(Env& e, Report& r) {
  Point p = e.pt("P");
  attempt(r, "U", [&] {
    VblowExample ex = construct_vblow_example(e.s, p, e.W);
    const SubalgebraWindow& U = ex.u;
    Divisor x3 = truncated(e.E, ex.x, 3);
    r.add_bool("[x]_3 = p + p^{sigma^2} + p^{sigma^4}", x3 == pt_div(p) + pt_div(e.tw(p, 2)) + pt_div(e.tw(p, 4)));
    r.add_bool("U_2 = X_2", U[2] == ex.x2);
    r.add_bool("U_3 = X_3", U[3] == ex.x3);
    r.add("dims X_1, X_2, X_3", "1,3,7",
          std::to_string(ex.x1.dim()) + "," + std::to_string(ex.x2.dim()) + "," + std::to_string(ex.x3.dim()));
    auto bar = image_dims(e.S, U);
    std::vector<std::size_t> want_bar;
    for (std::size_t n = 0; n < bar.size(); ++n) want_bar.push_back(n == 0 ? 1 : n == 1 ? 1 : n == 2 ? 3 : 2 * n);
    add_result(r, "dims of image of U: 1,1,3 then 2n", join(want_bar), join(bar), want_bar == bar,
               margin(static_cast<int>(bar.size()) - 1));
    std::vector<std::size_t> want_u;
    for (std::size_t n = 0; n < bar.size(); ++n) want_u.push_back(want_bar[n] + (n >= 3 ? want_u[n - 3] : 0));
    auto h = prefix(U.hilbert(), want_u.size());
    add_result(r, "hilbert prefix 1,1,3,7,9,13,19", "1,1,3,7,9,13,19", join(prefix(h, 7)),
               join(prefix(h, 7)) == "1,1,3,7,9,13,19", margin(6));
    add_result(r, "u_n = ubar_n + u_{n-3}", join(want_u), join(h), want_u == h,
               margin(static_cast<int>(want_u.size()) - 1));
    gdiv_check(r, "", e.S, U);
    r.add_bool("closed under products", is_closed(e.S, U, e.W), margin(e.W));
    int top = std::min(9, e.W);
    SubalgebraWindow T = construct_T_blowup(e.s, x3, e.W);
    r.add_bool("U^(3) = T(p + p^{sigma^2} + p^{sigma^4})", same_pieces(veronese(e.S, U, 3), T, 0, top), margin(top));

    SubalgebraWindow R = construct_blowup(e.s, pt_div(p), e.W);
    ModuleWindow M = vblow_module(e.s, R, p);
    SubalgebraWindow End = windowed_end(e.S, M, e.W);
    int cert = e.W - 4;
    std::string bad;
    for (int n = 0; n <= cert; ++n) {
      if (!(End[n] == U[n])) bad += (bad.empty() ? "differs at " : ",") + std::to_string(n);
    }
    add_result(r, "windowed End_{S(p)}(R + S(p)_1 S_1 R) = U", "equal", bad.empty() ? "equal" : bad, bad.empty(),
               margin(cert));
    r.add_bool("U M inside M", acts_on(e.S, U, M), margin(e.W));
    r.add_bool("M R inside M", [&] {
      for (int m = 0; m <= e.W; ++m) {
        for (int n = 1; m + n <= e.W; ++n) {
          if (!subspace_contains(e.F, M[m + n], e.S.product(M[m], m, R[n], n))) return false;
        }
      }
      return true;
    }(), margin(e.W));
  });
}

void run_orig(Env& e, Report& r) {
  Point p = e.pt("P");
  attempt(r, "U'", [&] {
    VblowExample ex = construct_vblow_prime(e.s, p, e.W);
    const SubalgebraWindow& U = ex.u;
    auto v = check_g_divisible(e.S, U);
    int first = -1;
    for (std::size_t n = 0; n < v.size() && first < 0; ++n) {
      if (!v[n]) first = static_cast<int>(n);
    }
    add_result(r, "U' not g-divisible (first failing degree <= 5)", "fails at n<=5",
               first < 0 ? "g-divisible" : "fails at n=" + std::to_string(first), first >= 0 && first <= 5, margin(e.W));
    SubalgebraWindow H = g_hull(e.S, U, 3);
    r.add_bool("g-hull of U' contains S_1", H[1].dim() == 3);
    bool full = true;
    for (int n = 0; n <= H.certified_to; ++n) full = full && H[n].dim() == e.S.dim(n);
    r.add_bool("g-hull of U' = S in certified degrees", full, margin(H.certified_to));
    bool contains = true;
    for (int n = 0; n <= e.W; ++n) contains = contains && subspace_contains(e.F, H[n], U[n]);
    r.add_bool("g-hull contains U'", contains, margin(e.W));

    Point p3 = e.tw(p, 3), pm1 = e.tw(p, -1);
    Subspace y = e.prod(e.sp(pm1), 1, e.sp(p3), 1);
    Subspace big = e.prod(e.sp(p3), 1, y, 2);
    r.add("dim S(p_3)_1 S(p_-1)_1 S(p_3)_1", "7", std::to_string(big.dim()));
    r.add("dim of its image in B_3", "6", std::to_string(e.S.image_in_B(3, big).dim()));
    r.add_bool("g in S(p_3)_1 S(p_-1)_1 S(p_3)_1", big.contains(e.F, e.S.g().coeffs));
    Subspace y2 = e.prod(e.sp(p3), 1, e.sp(pm1), 1);
    Subspace big2 = e.prod(e.sp(pm1), 1, y2, 2);
    r.add("dim S(p_-1)_1 S(p_3)_1 S(p_-1)_1", "7", std::to_string(big2.dim()));
    r.add_bool("g in S(p_-1)_1 S(p_3)_1 S(p_-1)_1", big2.contains(e.F, e.S.g().coeffs));
    r.add_bool("X'_2 = S(p_3)_1 S(p_-1)_1, dim 4", ex.x2 == y2 && ex.x2.dim() == 4);
    Subspace sq = e.prod(ex.x2, 2, ex.x2, 2);
    r.add_bool("g S_1 inside (X'_2)^2", subspace_contains(e.F, sq, g_times(e.S, Subspace::full(3), 1)));
  });
}

void run_spp1(Env& e, Report& r) {
  Point p = e.pt("P");
  attempt(r, "S(p+p1)", [&] {
    Divisor d = pt_div(p) + pt_div(e.tw(p, 1));
    Subspace v1 = e.s.preimage(1, truncated(e.E, d, 1));
    Subspace v2 = e.s.preimage(2, truncated(e.E, d, 2));
    Subspace v3 = e.s.preimage(3, truncated(e.E, d, 3));
    Subspace cube = e.prod(e.prod(v1, 1, v1, 1), 2, v1, 1);
    Subspace x = subspace_sum(e.F, subspace_sum(e.F, cube, e.prod(v1, 1, v2, 2)), e.prod(v2, 2, v1, 1));
    r.add_bool("V_1^3 + V_1 V_2 + V_2 V_1 inside V_3", subspace_contains(e.F, v3, x));
    add_result(r, "codim of V_1^3 + V_1 V_2 + V_2 V_1 in V_3", ">=1", std::to_string(v3.dim() - x.dim()),
               v3.dim() > x.dim());
    r.add_bool("g not in V_1^3 + V_1 V_2 + V_2 V_1", !x.contains(e.F, e.S.g().coeffs));
    r.add_bool("g in V_3", v3.contains(e.F, e.S.g().coeffs));
  });
}

void run_rss108(Env& e, Report& r) {
  attempt(r, "S^g", [&] {
    SgExample ex = construct_sg_example(e.S, e.W);
    std::vector<std::size_t> want, got;
    for (int n = 4; n <= e.W; n += 4) {
      want.push_back(e.S.dim(n / 4));
      got.push_back(ex.sg[n].dim());
    }
    add_result(r, "dim S^g_{4n} = s_n", join(want), join(got), want == got, margin(e.W));
    bool bar_k = true;
    for (int n = 1; n <= e.W; ++n) bar_k = bar_k && subspace_contains(e.F, e.S.g_multiples(n), ex.u[n]);
    r.add_bool("Ū = k", bar_k, margin(e.W));
    r.add_bool("U^(4) = S^g", same_pieces(veronese(e.S, ex.u, 4), ex.sg, 0, e.W), margin(e.W));
  });
}

// ---------------------------------------------------------------- veff

bool brute_veff(const Curve& E, const Divisor& x, int spread) {
  for (int n = spread + 1; n <= 30; ++n) {
    if (!truncated(E, x, n).is_effective()) return false;
  }
  return true;
}

void run_veff(Env& e, Report& r) {
  const Curve& E = e.E;
  Point p = e.pt("P");
  OrbitOptions opt = e.s.orbit_options();
  attempt(r, "examples", [&] {
    Divisor x = pt_div(p) - pt_div(e.tw(p, 1)) + pt_div(e.tw(p, 2));
    r.add_bool("[x]_0 = 0", truncated(E, x, 0).is_zero());
    r.add_bool("[x]_2 = p + p^{sigma^3}", truncated(E, x, 2) == pt_div(p) + pt_div(e.tw(p, 3)));
    r.add_bool("[x]_3 = p + p^{sigma^2} + p^{sigma^4}",
               truncated(E, x, 3) == pt_div(p) + pt_div(e.tw(p, 2)) + pt_div(e.tw(p, 4)));
    r.add_bool("p - p^sigma + p^{sigma^2} virtually effective", is_virtually_effective(E, x, opt));
    r.add_bool("-p + p^sigma not virtually effective", !is_virtually_effective(E, pt_div(e.tw(p, 1)) - pt_div(p), opt));
    VeffDecomposition dec = decompose_veff(E, x, opt);
    r.add_bool("decompose: u = p, v = p^sigma, k = 2", dec.u == pt_div(p) && dec.v == pt_div(e.tw(p, 1)) && dec.k == 2);
    bool threw = false;
    try {
      decompose_veff(E, pt_div(p, 2) - pt_div(e.tw(p, 1)), opt);
    } catch (const Error& err) {
      threw = err.code() == Errc::NotVirtuallyEffective;
    }
    r.add_bool("2p - p^sigma rejected as not virtually effective", threw);
    r.add_bool("normalized divisor of x is p", normalized_divisor(E, x, pt_div(e.tw(p, 1)), 2, opt) == pt_div(p));
    r.add_bool("x sigma-equivalent to p", sigma_equivalent(E, x, pt_div(p), opt));
    Point q = e.pt("Q");
    Divisor d = pt_div(p, 2) + pt_div(q) - pt_div(e.tw(q, 3));
    r.add_bool("d sigma-equivalent to twist(d, 7)", sigma_equivalent(E, d, twist(E, d, 7), opt));
    r.add_bool("p, q on distinct orbits not sigma-equivalent", !sigma_equivalent(E, pt_div(p), pt_div(q), opt));
    auto prof = orbit_split(E, pt_div(p) + pt_div(e.tw(p, 5)), opt);
    r.add_bool("orbit split of p + p^{sigma^5}: one profile {0:1, 5:1}",
               prof.size() == 1 && prof[0].coeffs == std::map<std::int64_t, std::int64_t>{{0, 1}, {5, 1}});
    r.add("orbit split of p + q", "2", std::to_string(orbit_split(E, pt_div(p) + pt_div(q), opt).size()));
  });
  attempt(r, "random", [&] {
    std::size_t agree = 0, recon = 0, veff = 0, tau = 0, cocycle = 0;
    Point base = e.pt("P");
    for (int t = 0; t < 200; ++t) {
      int spread = static_cast<int>(e.rng.uniform(0, 6));
      Divisor x;
      for (int j = 0; j <= spread; ++j) x.add_term(e.tw(base, j), e.rng.uniform(-2, 2));
      int real_spread = spread;
      bool crit = is_virtually_effective(E, x, opt);
      agree += crit == brute_veff(E, x, real_spread) ? 1 : 0;
      if (crit) {
        ++veff;
        VeffDecomposition dec = decompose_veff(E, x, opt);
        bool ok = x == dec.u - dec.v + twist(E, dec.v, 1) && dec.v.is_effective() && dec.u.is_effective() &&
                  leq(dec.v, truncated(E, dec.u, dec.k));
        recon += ok ? 1 : 0;
        tau += is_virtually_effective(E, truncated(E, x, 3), e.s.orbit_options(3)) ? 1 : 0;
      }
      std::int64_t m = e.rng.uniform(0, 5), n = e.rng.uniform(0, 5);
      cocycle += truncated(E, x, m + n) == truncated(E, x, m) + twist(E, truncated(E, x, n), m) ? 1 : 0;
    }
    r.add("tail criterion agrees with [x]_n effective for large n", "200/200", count_of(agree, 200));
    r.add("decomposition x = u - v + v^sigma with 0 <= v <= [u]_k", count_of(veff, veff), count_of(recon, veff));
    r.add("[x]_3 tau-virtually effective for virtually effective x", count_of(veff, veff), count_of(tau, veff));
    r.add("[x]_{m+n} = [x]_m + [x]_n^{sigma^m}", "200/200", count_of(cocycle, 200));
  });
}

// ---------------------------------------------------------------- grass

void run_grass(Env& e, Report& r) {
  const PrimeField& F = e.F;
  std::uint64_t seed = e.s.params().seed ^ salt("grass");
  attempt(r, "psi3", [&] {
    std::size_t good = 0;
    for (std::uint64_t t = 0; t < 200; ++t) {
      SubspaceTuple tup;
      for (std::uint64_t i = 0; i < 3; ++i) tup.push_back(random_subspace(F, 7, 6, seed + 3 * t + i));
      good += psi3(F, tup).dim() == 4 ? 1 : 0;
    }
    add_result(r, "psi3 of random triples has dim 4 (probe, threshold 199/200)", ">=199/200", count_of(good, 200),
               good >= 199);
    Subspace w = random_subspace(F, 7, 6, seed + 999);
    bool threw = false;
    try {
      psi3(F, {w, w, w}, true);
    } catch (const Error& err) {
      threw = err.code() == Errc::NotInOmega;
    }
    r.add_bool("psi3(W, W, W) = W outside Omega", psi3(F, {w, w, w}) == w && threw);
    std::size_t mono = 0;
    for (std::uint64_t t = 0; t < 100; ++t) {
      SubspaceTuple tup;
      for (std::uint64_t i = 0; i < 3; ++i) tup.push_back(random_subspace(F, 7, 6, seed + 5000 + 3 * t + i));
      Subspace w12 = subspace_meet(F, {tup[0], tup[1]});
      Matrix rows = w12.basis();
      rows.push_back(random_subspace(F, 7, 1, seed + 9000 + t).basis()[0]);
      SubspaceTuple degen = {tup[0], tup[1], Subspace::span(F, rows, 7)};
      if (degen[2].dim() != 6) continue;
      mono += psi3(F, degen).dim() >= psi3(F, tup).dim() ? 1 : 0;
    }
    r.add("semicontinuity: degenerate triples meet in at least as much", "100/100", count_of(mono, 100));
  });
  attempt(r, "theta", [&] {
    Point p = e.pt("P");
    ThetaData th = theta(e.s, e.pt("Q"), p);
    std::vector<std::size_t> dims, amb;
    for (const auto& v : th.relative) {
      dims.push_back(v.dim());
      amb.push_back(v.ambient_dim());
    }
    r.add("dims of theta(q)", "1,2,4", join(dims));
    r.add("dims of S(p)_1, S(p)_2, S(p)_3", "2,4,7", join(amb));
    r.add_bool("X_0 meet X_1 meet X_2 = S(p+q)_3", psi3(F, th.x_triple, true) == th.relative[2]);
    bool inside = true;
    for (int i = 0; i < 3; ++i) inside = inside && subspace_contains(F, th.base[i], th.absolute[i]);
    r.add_bool("theta(q)_i inside S(p)_i", inside);

    int top = std::min(8, e.W);
    std::vector<std::set<std::size_t>> seen(static_cast<std::size_t>(top + 1));
    for (int i = 0; i < 20; ++i) {
      Point q = i < 8 ? e.tw(p, i - 3) : e.fresh("grass.q" + std::to_string(i));
      ThetaData tq = theta(e.s, q, p);
      SubalgebraWindow R = generate(e.S, {{1, tq.absolute[0]}, {2, tq.absolute[1]}, {3, tq.absolute[2]}}, top);
      for (int n = 0; n <= top; ++n) seen[n].insert(R[n].dim());
    }
    auto series = series_coeffs({1, -1, 1}, {{1, -1}, {1, -1}, {1, 0, 0, -1}}, top + 1);
    for (int n = 0; n <= top; ++n) {
      std::vector<std::size_t> vals(seen[n].begin(), seen[n].end());
      add_result(r, "mu_" + std::to_string(n) + "(theta(q)) constant over 20 q", std::to_string(series[n]), join(vals),
                 vals.size() == 1 && static_cast<long long>(vals[0]) == series[n]);
    }
    bool full = true, zero = true;
    for (int n = 1; n <= top; ++n) {
      full = full && mu_n(e.S, Subspace::full(3), Subspace::full(6), Subspace::full(10), n) == e.S.dim(n);
      zero = zero && mu_n(e.S, Subspace::zero(3), Subspace::zero(6), Subspace::zero(10), n) == 0;
    }
    r.add_bool("mu_n(S_1, S_2, S_3) = s_n", full, margin(top));
    r.add_bool("mu_n(0, 0, 0) = 0", zero, margin(top));
  });
}

using Runner = void (*)(Env&, Report&);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> reg = {
      {"core-s", run_core_s},       {"thcr", run_thcr},         {"ro41", run_ro41},
      {"blowup-sp", run_blowup_sp}, {"blowup-spq", run_blowup_spq}, {"blowup-td", run_blowup_td},
      {"vblow", run_vblow},         {"orig-counterexample", run_orig}, {"spp1", run_spp1},
      {"rss108", run_rss108},       {"veff", run_veff},         {"grass", run_grass},
  };
  return reg;
}

}  // namespace

Point ScenarioContext::point(const std::string& name) const {
  auto it = points.find(name);
  return it != points.end() ? it->second : session.auto_point(name);
}

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

Report run_scenario(const std::string& id, const ScenarioContext& ctx) {
  for (const auto& [name, fn] : registry()) {
    if (name != id) continue;
    Report r;
    r.scenario = id;
    std::map<std::string, Point> used;
    attempt(r, "scenario", [&] {
      Env env(ctx, id);
      fn(env, r);
      used = env.used;
    });
    std::vector<CheckResult> head;
    for (const auto& [name, q] : used) {
      bool on = ctx.session.curve().on_curve(q);
      head.push_back({"point " + name + " = " + to_string(q), "on curve", on ? "on curve" : "off curve", on, "-"});
    }
    r.checks.insert(r.checks.begin(), head.begin(), head.end());
    return r;
  }
  throw Error(Errc::ValidationError, "unknown scenario '" + id + "'");
}

std::vector<Report> run_scenarios(const std::vector<std::string>& ids, const ScenarioContext& ctx, int threads) {
  std::vector<std::string> order;
  for (const auto& id : ids) {
    if (id == "all") {
      order.insert(order.end(), scenario_ids().begin(), scenario_ids().end());
    } else {
      if (std::find(scenario_ids().begin(), scenario_ids().end(), id) == scenario_ids().end()) {
        throw Error(Errc::ValidationError, "unknown scenario '" + id + "'");
      }
      order.push_back(id);
    }
  }
  std::vector<Report> out(order.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < order.size(); i = next++) out[i] = run_scenario(order[i], ctx);
  };
  int n = std::max(1, std::min<int>(threads, static_cast<int>(order.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<long long> series_coeffs(const std::vector<long long>& num, const std::vector<std::vector<long long>>& dens,
                                     int terms) {
  std::vector<long long> den{1};
  for (const auto& f : dens) {
    std::vector<long long> next(den.size() + f.size() - 1, 0);
    for (std::size_t i = 0; i < den.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) next[i + j] += den[i] * f[j];
    }
    den = std::move(next);
  }
  if (den.empty() || den[0] != 1) throw Error(Errc::ValidationError, "series denominator must start with 1");
  std::vector<long long> out(static_cast<std::size_t>(std::max(terms, 0)), 0);
  for (std::size_t n = 0; n < out.size(); ++n) {
    long long v = n < num.size() ? num[n] : 0;
    for (std::size_t k = 1; k < den.size() && k <= n; ++k) v -= den[k] * out[n - k];
    out[n] = v;
  }
  return out;
}

}  // namespace skw
