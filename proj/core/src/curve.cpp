#include "skw/curve.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "skw/error.hpp"

namespace skw {
namespace {

// ---- univariate polynomials of small degree, coefficients low to high ----

void trim(Vec& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Vec poly_mod(const PrimeField& F, Vec a, const Vec& m) {
  trim(a);
  std::size_t dm = m.size() - 1;
  FieldElem lead_inv = F.inv(m.back());
  while (a.size() >= m.size()) {
    FieldElem t = F.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(t, m[i]));
    trim(a);
  }
  return a;
}

Vec poly_mulmod(const PrimeField& F, const Vec& a, const Vec& b, const Vec& m) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.fma(a[i], b[j], r[i + j]);
  }
  return poly_mod(F, std::move(r), m);
}

Vec poly_powmod(const PrimeField& F, Vec base, std::uint64_t e, const Vec& m) {
  Vec result = poly_mod(F, Vec{F.one()}, m);
  base = poly_mod(F, std::move(base), m);
  while (e != 0) {
    if (e & 1U) result = poly_mulmod(F, result, base, m);
    base = poly_mulmod(F, base, base, m);
    e >>= 1U;
  }
  return result;
}

Vec poly_monic(const PrimeField& F, Vec a) {
  trim(a);
  if (a.empty()) return a;
  FieldElem iv = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, iv);
  return a;
}

Vec poly_gcd(const PrimeField& F, Vec a, Vec b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vec r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, std::move(a));
}

Vec poly_sub(const PrimeField& F, Vec a, const Vec& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

// Splits a squarefree product of distinct linear factors into its roots.
void split_roots(const PrimeField& F, const Vec& f, std::uint64_t& delta, std::vector<FieldElem>& roots) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    roots.push_back(F.neg(F.div(f[0], f[1])));
    return;
  }
  std::uint64_t p = F.modulus();
  for (;;) {
    Vec shifted{F.from_int(static_cast<std::int64_t>(delta++ % p)), F.one()};
    Vec h = poly_powmod(F, shifted, (p - 1) / 2, f);
    h = poly_sub(F, std::move(h), Vec{F.one()});
    Vec g = poly_gcd(F, f, h);
    if (g.size() > 1 && g.size() < f.size()) {
      // f / g by long division.
      Vec q(f.size() - g.size() + 1);
      Vec rem = f;
      for (std::size_t k = q.size(); k-- > 0;) {
        q[k] = rem[k + g.size() - 1];
        for (std::size_t i = 0; i < g.size(); ++i) rem[k + i] = F.sub(rem[k + i], F.mul(q[k], g[i]));
      }
      split_roots(F, g, delta, roots);
      split_roots(F, poly_monic(F, q), delta, roots);
      return;
    }
  }
}

std::vector<FieldElem> poly_roots(const PrimeField& F, const Vec& f) {
  Vec m = poly_monic(F, f);
  if (m.size() <= 1) return {};
  Vec xp = poly_powmod(F, Vec{F.zero(), F.one()}, F.modulus(), m);
  Vec g = poly_gcd(F, m, poly_sub(F, xp, Vec{F.zero(), F.one()}));
  std::vector<FieldElem> roots;
  std::uint64_t delta = 1;
  split_roots(F, g, delta, roots);
  return roots;
}

}  // namespace

Curve::Curve(const PrimeField& F, FieldElem a, FieldElem b, FieldElem c, const CurveOptions& options)
    : F_(F), a_(a), b_(b), c_(c), options_(options) {
  FieldElem a3 = F_.pow(a, 3), b3 = F_.pow(b, 3), c3 = F_.pow(c, 3);
  alpha_ = F_.add(F_.add(a3, b3), c3);
  beta_ = F_.mul(F_.mul(a, b), c);
}

Curve Curve::create(const PrimeField& F, std::int64_t a, std::int64_t b, std::int64_t c,
                    const CurveOptions& options) {
  FieldElem fa = F.from_int(a), fb = F.from_int(b), fc = F.from_int(c);
  Curve curve(F, fa, fb, fc, options);
  if (curve.beta_.is_zero()) throw Error(Errc::DegenerateParams, "abc = 0");
  // (a^3+b^3+c^3)^3 != 27 a^3 b^3 c^3
  FieldElem lhs = F.pow(curve.alpha_, 3);
  FieldElem rhs = F.mul(F.from_int(27), F.pow(curve.beta_, 3));
  if (lhs == rhs) throw Error(Errc::DegenerateParams, "(a^3+b^3+c^3)^3 = 27(abc)^3");
  if (options.jet_cap < 1) throw Error(Errc::JetCapExceeded, "jet_cap must be at least 1");
  if (!curve.on_curve(curve.identity())) throw Error(Errc::DegenerateParams, "O not on curve");
  curve.init_sigma();
  return curve;
}

Curve Curve::with_orientation(int orient) const {
  if (orient != 1 && orient != -1) throw Error(Errc::OrientationFailure, "orientation must be +1 or -1");
  Curve copy = *this;
  copy.orient_ = orient;
  copy.step_ = orient == 1 ? s_ : neg(s_);
  return copy;
}

Point Curve::identity() const noexcept {
  return Point{{F_.one(), F_.neg(F_.one()), F_.zero()}};
}

bool Curve::on_curve(const Triple& t) const noexcept {
  const auto& [x, y, z] = t;
  FieldElem xyz = F_.mul(F_.mul(x, y), z);
  FieldElem cubes = F_.add(F_.add(F_.pow(x, 3), F_.pow(y, 3)), F_.pow(z, 3));
  return F_.mul(alpha_, xyz) == F_.mul(beta_, cubes);
}

Triple Curve::gradient(const Triple& t) const noexcept {
  const auto& [x, y, z] = t;
  FieldElem three_beta = F_.mul(F_.from_int(3), beta_);
  return {F_.sub(F_.mul(alpha_, F_.mul(y, z)), F_.mul(three_beta, F_.mul(x, x))),
          F_.sub(F_.mul(alpha_, F_.mul(x, z)), F_.mul(three_beta, F_.mul(y, y))),
          F_.sub(F_.mul(alpha_, F_.mul(x, y)), F_.mul(three_beta, F_.mul(z, z)))};
}

Point Curve::normalize(const Triple& t) const {
  for (int i = 0; i < 3; ++i) {
    if (!t[i].is_zero()) {
      FieldElem iv = F_.inv(t[i]);
      return Point{{F_.mul(t[0], iv), F_.mul(t[1], iv), F_.mul(t[2], iv)}};
    }
  }
  throw Error(Errc::NotOnCurve, "zero triple is not a projective point");
}

Point Curve::make_point(const Triple& t) const {
  Point p = normalize(t);
  if (!on_curve(p)) throw Error(Errc::NotOnCurve, "point does not satisfy the curve equation");
  return p;
}

Point Curve::neg(const Point& p) const {
  return normalize({p.x[1], p.x[0], p.x[2]});
}

Point Curve::double_point(const Point& p) const {
  const auto& [x, y, z] = p.x;
  FieldElem x3 = F_.pow(x, 3), y3 = F_.pow(y, 3), z3 = F_.pow(z, 3);
  return normalize({F_.mul(y, F_.sub(x3, z3)), F_.mul(x, F_.sub(z3, y3)), F_.mul(z, F_.sub(y3, x3))});
}

std::optional<Point> Curve::chord_add(const Point& p, const Point& q) const {
  // F(P + tQ) = t(A + tB): the third point of the line PQ is B P - A Q.
  Triple gp = gradient(p.x), gq = gradient(q.x);
  FieldElem A{}, B{};
  for (int i = 0; i < 3; ++i) {
    A = F_.fma(gp[i], q.x[i], A);
    B = F_.fma(gq[i], p.x[i], B);
  }
  Triple r;
  for (int i = 0; i < 3; ++i) r[i] = F_.sub(F_.mul(B, p.x[i]), F_.mul(A, q.x[i]));
  if (r[0].is_zero() && r[1].is_zero() && r[2].is_zero()) return std::nullopt;
  // P + Q = -R, and -(x:y:z) = (y:x:z).
  return normalize({r[1], r[0], r[2]});
}

Point Curve::add(const Point& p, const Point& q) const {
  if (!on_curve(p) || !on_curve(q)) throw Error(Errc::NotOnCurve, "add: operand not on curve");
  Point o = identity();
  if (p == o) return q;
  if (q == o) return p;
  if (p == q) return double_point(p);
  auto r = chord_add(p, q);
  if (!r) throw Error(Errc::NotOnCurve, "chord construction degenerate for distinct points");
  return *r;
}

Point Curve::mul(const Point& p, std::int64_t k) const {
  Point base = k < 0 ? neg(p) : p;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Point result = identity();
  while (e != 0) {
    if (e & 1U) result = add(result, base);
    base = add(base, base);
    e >>= 1U;
  }
  return result;
}

std::optional<Point> Curve::sigma_raw(const Point& q) const {
  const auto& [x, y, z] = q.x;
  Triple t{F_.sub(F_.mul(F_.mul(a_, a_), F_.mul(x, z)), F_.mul(F_.mul(b_, c_), F_.mul(y, y))),
           F_.sub(F_.mul(F_.mul(b_, b_), F_.mul(y, z)), F_.mul(F_.mul(a_, c_), F_.mul(x, x))),
           F_.sub(F_.mul(F_.mul(c_, c_), F_.mul(x, y)), F_.mul(F_.mul(a_, b_), F_.mul(z, z)))};
  if (t[0].is_zero() && t[1].is_zero() && t[2].is_zero()) return std::nullopt;
  return normalize(t);
}

Point Curve::sigma(const Point& q) const { return add(q, step_); }

Point Curve::sigma_inv(const Point& q) const { return sub(q, step_); }

Point Curve::sigma_pow(const Point& p, std::int64_t j) const {
  if (j == 0) return p;
  if (j == 1) return sigma_inv(p);
  if (j == -1) return sigma(p);
  return add(p, mul(step_, -j));
}

namespace {

// Seeded search on the affine chart x = 1 used by both find_point and the
// probes in init_sigma.
Point search_point(const Curve& E, std::mt19937_64& rng) {
  const PrimeField& F = E.field();
  FieldElem alpha = F.add(F.add(F.pow(E.a(), 3), F.pow(E.b(), 3)), F.pow(E.c(), 3));
  FieldElem beta = F.mul(F.mul(E.a(), E.b()), E.c());
  std::uint64_t p = F.modulus();
  for (std::uint64_t trial = 0; trial < p; ++trial) {
    FieldElem y = F.from_int(static_cast<std::int64_t>(rng() % p));
    // -beta z^3 + alpha y z - beta (1 + y^3) = 0
    Vec f{F.neg(F.mul(beta, F.add(F.one(), F.pow(y, 3)))), F.mul(alpha, y), F.zero(), F.neg(beta)};
    std::vector<FieldElem> roots = poly_roots(F, f);
    if (roots.empty()) continue;
    FieldElem z = *std::min_element(roots.begin(), roots.end());
    Point pt{{F.one(), y, z}};
    Triple g = E.gradient(pt.x);
    if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero()) continue;
    return pt;
  }
  throw Error(Errc::NoPointFound, "no curve point found");
}

}  // namespace

void Curve::init_sigma() {
  Point o = identity();
  std::optional<Point> s_at_o = sigma_raw(o);
  std::mt19937_64 rng(options_.probe_seed);
  if (s_at_o && on_curve(*s_at_o)) {
    s_ = *s_at_o;
  } else {
    bool found = false;
    for (int attempt = 0; attempt < 64 && !found; ++attempt) {
      Point q = search_point(*this, rng);
      auto img = sigma_raw(q);
      if (img && on_curve(*img)) {
        s_ = sub(*img, q);
        found = true;
      }
    }
    if (!found) throw Error(Errc::FormulaDegenerate, "raw sigma formula undefined at every probe point");
  }
  step_ = s_;
  for (int i = 0; i < 20; ++i) {
    Point q = search_point(*this, rng);
    auto img = sigma_raw(q);
    if (!img) continue;
    if (*img != add(q, s_)) {
      throw Error(Errc::TranslationMismatch, "raw sigma formula is not translation by sigma_raw(O)");
    }
  }
  Point acc = o;
  for (std::int64_t j = 1; j <= options_.order_floor; ++j) {
    acc = add(acc, s_);
    if (acc == o) {
      throw Error(Errc::SmallOrder, "translation point has order " + std::to_string(j) + " <= order_floor " +
                                        std::to_string(options_.order_floor));
    }
  }
}

Point Curve::find_point(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  for (;;) {
    Point q = search_point(*this, rng);
    bool small = false;
    for (std::int64_t k = -8; k <= 8 && !small; ++k) small = (q == mul(s_, k));
    if (!small) return q;
  }
}

Jet Curve::equation(const JetRing& R, const std::array<Jet, 3>& t) const {
  Jet xyz = R.mul(R.mul(t[0], t[1]), t[2]);
  Jet cubes = R.add(R.add(R.mul(R.mul(t[0], t[0]), t[0]), R.mul(R.mul(t[1], t[1]), t[1])),
                    R.mul(R.mul(t[2], t[2]), t[2]));
  return R.sub(R.scale(alpha_, xyz), R.scale(beta_, cubes));
}

namespace {

std::array<Jet, 3> jet_gradient(const JetRing& R, FieldElem alpha, FieldElem beta, const std::array<Jet, 3>& t) {
  const PrimeField& F = R.field();
  FieldElem three_beta = F.mul(F.from_int(3), beta);
  auto part = [&](int i, int j, int k) {
    return R.sub(R.scale(alpha, R.mul(t[j], t[k])), R.scale(three_beta, R.mul(t[i], t[i])));
  };
  return {part(0, 1, 2), part(1, 0, 2), part(2, 0, 1)};
}

}  // namespace

JetPoint Curve::tangent_jet(const Point& p, int m) const {
  if (m < 1 || m > options_.jet_cap) {
    throw Error(Errc::JetCapExceeded, "jet order " + std::to_string(m) + " outside [1, jet_cap]");
  }
  if (!on_curve(p)) throw Error(Errc::NotOnCurve, "tangent_jet: point not on curve");
  Triple g = gradient(p.x);
  int ni = 0;
  while (p.x[ni].is_zero()) ++ni;
  int i1 = (ni + 1) % 3, i2 = (ni + 2) % 3;
  if (i1 > i2) std::swap(i1, i2);
  int param = i1, solved = i2;
  if (g[i2].is_zero()) {
    if (g[i1].is_zero()) throw Error(Errc::SingularPoint, "gradient vanishes");
    param = i2;
    solved = i1;
  }
  JetRing R(F_, m);
  JetPoint j;
  j.base = p;
  j.order = m;
  j.norm_index = ni;
  j.coords[ni] = R.constant(F_.one());
  j.coords[param] = R.linear(p.x[param], F_.one());
  j.coords[solved] = R.constant(p.x[solved]);
  for (int iter = 0; iter < m; ++iter) {
    Jet f = equation(R, j.coords);
    Jet df = jet_gradient(R, alpha_, beta_, j.coords)[solved];
    j.coords[solved] = R.sub(j.coords[solved], R.mul(f, R.inv(df)));
  }
  return j;
}

std::optional<JetPoint> Curve::chord_translate(const JetPoint& j, const Point& t) const {
  JetRing R(F_, j.order);
  std::array<Jet, 3> gj = jet_gradient(R, alpha_, beta_, j.coords);
  Triple gt = gradient(t.x);
  Jet A = R.constant(F_.zero()), B = R.constant(F_.zero());
  for (int i = 0; i < 3; ++i) {
    A = R.add(A, R.scale(t.x[i], gj[i]));
    B = R.add(B, R.scale(gt[i], j.coords[i]));
  }
  std::array<Jet, 3> r;
  for (int i = 0; i < 3; ++i) r[i] = R.sub(R.mul(B, j.coords[i]), R.scale(t.x[i], A));
  std::array<Jet, 3> sw{r[1], r[0], r[2]};
  int ni = 0;
  while (ni < 3 && !sw[ni].is_unit()) ++ni;
  if (ni == 3) return std::nullopt;
  Jet iv = R.inv(sw[ni]);
  JetPoint out;
  out.order = j.order;
  out.norm_index = ni;
  for (int i = 0; i < 3; ++i) out.coords[i] = R.mul(sw[i], iv);
  out.coords[ni] = R.constant(F_.one());
  Triple base{out.coords[0].coeffs[0], out.coords[1].coeffs[0], out.coords[2].coeffs[0]};
  out.base = Point{base};
  return out;
}

JetPoint Curve::translate(const JetPoint& j, const Point& t) const {
  if (t == identity()) return j;
  if (j.base != t) {
    if (auto r = chord_translate(j, t)) return *r;
  }
  // Route through an auxiliary point to avoid the tangent case.
  std::vector<Point> aux{mul(t, 2), mul(t, 3), find_point(options_.probe_seed ^ 0xa5a5ULL)};
  for (const Point& u : aux) {
    Point rest = sub(t, u);
    if (u == identity() || rest == identity() || u == j.base) continue;
    if (add(j.base, u) == rest) continue;
    auto j1 = chord_translate(j, u);
    if (!j1) continue;
    auto j2 = chord_translate(*j1, rest);
    if (j2) return *j2;
  }
  throw Error(Errc::SingularPoint, "jet translation degenerate");
}

}  // namespace skw
