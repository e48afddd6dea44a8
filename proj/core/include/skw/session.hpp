#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "skw/curve.hpp"
#include "skw/divisor.hpp"
#include "skw/sections.hpp"
#include "skw/sklyanin.hpp"

namespace skw {

struct SessionParams {
  std::uint64_t prime = 1000003;
  std::int64_t a = 17, b = 5, c = 1;
  std::uint64_t seed = 42;
  int window_s = 12;
  int window_b = 15;
  int jet_cap = 4;
  /// Defaults to 4 * window_s + 64 when unset.
  std::optional<std::int64_t> order_floor;
  /// Defaults to 2 * window_s + 8 when unset.
  std::optional<std::int64_t> k_orbit;

  std::int64_t effective_order_floor() const { return order_floor.value_or(4 * window_s + 64); }
  std::int64_t effective_k_orbit() const { return k_orbit.value_or(2 * window_s + 8); }
  friend bool operator==(const SessionParams&, const SessionParams&) = default;
};

/// Curve with fixed orientation, the ring B, and the model of S with its
/// projection attached. Immutable once created.
class Session {
 public:
  /// Uses `cached` instead of rebuilding S when it matches the parameters.
  static std::shared_ptr<const Session> create(const SessionParams& params,
                                               std::optional<GradedAlgebraModel> cached = std::nullopt);

  const SessionParams& params() const noexcept { return params_; }
  const PrimeField& field() const noexcept { return F_; }
  const Curve& curve() const noexcept { return curve_; }
  const ThcrRing& ring() const noexcept { return ring_; }
  const GradedAlgebraModel& model() const noexcept { return model_; }
  OrbitOptions orbit_options(std::int64_t stride = 1) const;

  /// Seeded point for a name, avoiding small multiples of s.
  Point auto_point(const std::string& name) const;
  /// {x in S_n : image of x vanishes on e}.
  Subspace preimage(int n, const Divisor& e) const;
  /// S(q)_1 for a single point q.
  Subspace point_space(const Point& q) const { return preimage(1, Divisor::point(q)); }

 private:
  Session(const SessionParams& params, const PrimeField& F, const Curve& E, ThcrRing ring,
          GradedAlgebraModel model);

  SessionParams params_;
  PrimeField F_;
  Curve curve_;
  ThcrRing ring_;
  GradedAlgebraModel model_;
};

/// Curve from session parameters, orientation fixed. Shared by Session and tools.
Curve make_session_curve(const SessionParams& params);

}  // namespace skw
