#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>

#include "skw/field.hpp"

namespace skw {

using Triple = std::array<FieldElem, 3>;

/// Projective point with the first nonzero coordinate scaled to 1.
struct Point {
  Triple x{};

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Point over F_p[e]/(e^m): coordinates are jets, the coordinate at
/// `norm_index` is exactly 1.
struct JetPoint {
  Point base;
  std::array<Jet, 3> coords;
  int order = 1;
  int norm_index = 0;
};

struct CurveOptions {
  std::int64_t order_floor = 4 * 12 + 64;
  int jet_cap = 4;
  std::uint64_t probe_seed = 0x5eed;
};

/// The Hesse cubic (a^3+b^3+c^3)xyz - abc(x^3+y^3+z^3) = 0 with group
/// identity O = (1:-1:0) and the translation automorphism sigma.
class Curve {
 public:
  /// Validates parameters, bootstraps the translation point s from the raw
  /// formula, cross-checks it, and enforces the order floor. The twist
  /// orientation starts at +1; see with_orientation.
  static Curve create(const PrimeField& F, std::int64_t a, std::int64_t b, std::int64_t c,
                      const CurveOptions& options = {});

  /// Copy with the twist orientation fixed (+1 or -1).
  Curve with_orientation(int orient) const;

  const PrimeField& field() const noexcept { return F_; }
  FieldElem a() const noexcept { return a_; }
  FieldElem b() const noexcept { return b_; }
  FieldElem c() const noexcept { return c_; }
  /// Translation point of the raw formula: sigma_raw(q) = q + s.
  const Point& s() const noexcept { return s_; }
  int orient() const noexcept { return orient_; }
  /// Translation point of the twisting automorphism: orient * s.
  const Point& step() const noexcept { return step_; }
  const CurveOptions& options() const noexcept { return options_; }

  Point identity() const noexcept;
  bool on_curve(const Triple& t) const noexcept;
  bool on_curve(const Point& p) const noexcept { return on_curve(p.x); }
  Triple gradient(const Triple& t) const noexcept;
  /// Throws Error(NotOnCurve) for the zero triple.
  Point normalize(const Triple& t) const;
  /// Normalizes and checks membership; throws Error(NotOnCurve).
  Point make_point(const Triple& t) const;

  Point add(const Point& p, const Point& q) const;
  Point neg(const Point& p) const;
  Point sub(const Point& p, const Point& q) const { return add(p, neg(q)); }
  Point mul(const Point& p, std::int64_t k) const;

  /// The raw quadratic formula; nullopt where it evaluates to (0:0:0).
  std::optional<Point> sigma_raw(const Point& q) const;
  /// The twisting automorphism q -> q + step().
  Point sigma(const Point& q) const;
  Point sigma_inv(const Point& q) const;
  /// p^{sigma^j}, which is sigma^{-j}(p).
  Point sigma_pow(const Point& p, std::int64_t j) const;

  /// Deterministic seeded point search; avoids small multiples of s.
  Point find_point(std::uint64_t seed) const;

  /// Jet of order m through a smooth point, Hensel-lifted.
  JetPoint tangent_jet(const Point& p, int m) const;
  /// Translation of a jet by a point of the curve.
  JetPoint translate(const JetPoint& j, const Point& t) const;
  JetPoint sigma(const JetPoint& j) const { return translate(j, step_); }
  /// Curve equation evaluated on jet coordinates.
  Jet equation(const JetRing& R, const std::array<Jet, 3>& t) const;

 private:
  Curve(const PrimeField& F, FieldElem a, FieldElem b, FieldElem c, const CurveOptions& options);
  void init_sigma();
  Point double_point(const Point& p) const;
  std::optional<Point> chord_add(const Point& p, const Point& q) const;
  std::optional<JetPoint> chord_translate(const JetPoint& j, const Point& t) const;

  PrimeField F_;
  FieldElem a_, b_, c_;
  FieldElem alpha_;  // a^3 + b^3 + c^3
  FieldElem beta_;   // abc
  CurveOptions options_;
  Point s_;
  Point step_;
  int orient_ = 1;
};

}  // namespace skw
