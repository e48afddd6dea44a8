#include "skw/grassmann.hpp"

#include <algorithm>
#include <random>

#include "skw/error.hpp"

namespace skw {

Subspace psi3(const PrimeField& F, const SubspaceTuple& t, bool require_omega) {
  if (t.size() != 3) throw Error(Errc::DimMismatch, "psi3 takes three subspaces");
  for (const auto& w : t) {
    if (w.ambient_dim() != 7 || w.dim() != 6) throw Error(Errc::DimMismatch, "psi3 expects 6-dim subspaces of a 7-dim space");
  }
  Subspace meet = subspace_meet(F, t);
  if (require_omega && meet.dim() != 4) {
    throw Error(Errc::NotInOmega, "triple intersection has dimension " + std::to_string(meet.dim()));
  }
  return meet;
}

Subspace random_subspace(const PrimeField& F, std::size_t ambient, std::size_t dim, std::uint64_t seed) {
  if (dim > ambient) throw Error(Errc::DimMismatch, "subspace dimension exceeds ambient");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coin(0, F.modulus() - 1);
  EchelonBuilder b(F, ambient);
  while (b.dim() < dim) {
    Vec v(ambient);
    for (auto& e : v) e = F.from_int(static_cast<std::int64_t>(coin(rng)));
    b.insert(std::move(v));
  }
  return b.finish();
}

Subspace relative_coordinates(const PrimeField& F, const Subspace& w, const Subspace& v) {
  Matrix rows;
  for (const Vec& x : v.basis()) {
    auto c = w.coordinates(F, x);
    if (!c) throw Error(Errc::MixedAmbient, "subspace is not contained in the reference space");
    rows.push_back(std::move(*c));
  }
  return Subspace::span(F, rows, w.dim());
}

ThetaData theta(const Session& s, const Point& q, const Point& p) {
  const PrimeField& F = s.field();
  const Curve& E = s.curve();
  SubalgebraWindow sp = generate(s.model(), {{1, s.point_space(p)}}, 3);
  Divisor d = Divisor::point(p) + Divisor::point(q);
  ThetaData out;
  for (int i = 1; i <= 3; ++i) {
    Subspace v = s.preimage(i, truncated(E, d, i));
    out.base.push_back(sp[i]);
    out.relative.push_back(relative_coordinates(F, sp[i], v));
    out.absolute.push_back(std::move(v));
  }
  Divisor p3 = truncated(E, Divisor::point(p), 3);
  for (int i = 0; i < 3; ++i) {
    Subspace xi = s.preimage(3, p3 + Divisor::point(E.sigma_pow(q, i)));
    out.x_triple.push_back(relative_coordinates(F, sp[3], subspace_meet(F, {xi, sp[3]})));
  }
  return out;
}

std::size_t mu_n(const GradedAlgebraModel& S, const Subspace& y1, const Subspace& y2, const Subspace& y3, int n) {
  std::vector<Generator> gens;
  if (!y1.empty()) gens.push_back({1, y1});
  if (!y2.empty()) gens.push_back({2, y2});
  if (!y3.empty()) gens.push_back({3, y3});
  return generate(S, gens, std::max(n, 3))[n].dim();
}

}  // namespace skw
