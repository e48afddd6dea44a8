#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skw/curve.hpp"

namespace skw {

/// Finite formal integer combination of curve points. Zero coefficients are
/// never stored.
class Divisor {
 public:
  Divisor() = default;
  static Divisor point(const Point& p, std::int64_t coeff = 1);

  const std::map<Point, std::int64_t>& terms() const noexcept { return terms_; }
  std::int64_t coeff(const Point& p) const;
  std::int64_t degree() const;
  bool is_effective() const;
  bool is_zero() const noexcept { return terms_.empty(); }
  std::vector<Point> support() const;

  Divisor& add_term(const Point& p, std::int64_t coeff);
  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(std::int64_t k, const Divisor& d);
  friend bool operator==(const Divisor&, const Divisor&) = default;

  /// Pointwise a <= b.
  friend bool leq(const Divisor& a, const Divisor& b);

 private:
  std::map<Point, std::int64_t> terms_;
};

struct OrbitOptions {
  std::int64_t k_orbit = 2 * 12 + 8;
  /// Orbits of rho = sigma^stride.
  std::int64_t stride = 1;
};

/// Restriction of a divisor to one orbit: coeffs[j] is the coefficient of
/// base^{rho^j}; the smallest index is 0.
struct OrbitProfile {
  Point base;
  std::map<std::int64_t, std::int64_t> coeffs;

  std::int64_t degree() const;
};

struct VeffDecomposition {
  Divisor u;
  Divisor v;
  std::int64_t k = 0;
};

/// x^{sigma^j}: every support point p goes to p^{sigma^j}.
Divisor twist(const Curve& E, const Divisor& d, std::int64_t j);
/// [x]_n = x + x^rho + ... + x^{rho^{n-1}} for rho = sigma^stride.
Divisor truncated(const Curve& E, const Divisor& x, std::int64_t n, std::int64_t stride = 1);
/// Throws Error(OrbitAmbiguity) when two points relate only beyond k_orbit.
std::vector<OrbitProfile> orbit_split(const Curve& E, const Divisor& d, const OrbitOptions& opt = {});
/// Orbit grouping of a point set: each entry maps exponents (re-based to a
/// minimum of 0) to points.
std::vector<std::map<std::int64_t, Point>> orbit_groups(const Curve& E, const std::vector<Point>& points,
                                                        const OrbitOptions& opt = {});
bool is_virtually_effective(const Curve& E, const Divisor& x, const OrbitOptions& opt = {});
/// Throws Error(NotVirtuallyEffective).
VeffDecomposition decompose_veff(const Curve& E, const Divisor& x, const OrbitOptions& opt = {});
/// Throws Error(NegativeMultiplicity).
Divisor normalized_divisor(const Curve& E, const Divisor& x, const Divisor& y, std::int64_t k,
                           const OrbitOptions& opt = {});
bool sigma_equivalent(const Curve& E, const Divisor& d1, const Divisor& d2, const OrbitOptions& opt = {});

std::string to_string(const Point& p);
std::string to_string(const Divisor& d);

}  // namespace skw
