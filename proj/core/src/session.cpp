#include "skw/session.hpp"

#include "skw/error.hpp"

namespace skw {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Curve make_session_curve(const SessionParams& params) {
  PrimeField F(params.prime);
  CurveOptions opt;
  opt.order_floor = params.effective_order_floor();
  opt.jet_cap = params.jet_cap;
  opt.probe_seed = params.seed ^ 0x5eedULL;
  Curve raw = Curve::create(F, params.a, params.b, params.c, opt);
  return raw.with_orientation(orientation_check(raw, params.seed ^ 0x0b1eULL));
}

Session::Session(const SessionParams& params, const PrimeField& F, const Curve& E, ThcrRing ring,
                 GradedAlgebraModel model)
    : params_(params), F_(F), curve_(E), ring_(std::move(ring)), model_(std::move(model)) {}

std::shared_ptr<const Session> Session::create(const SessionParams& params,
                                               std::optional<GradedAlgebraModel> cached) {
  if (params.window_s < 4) throw Error(Errc::ValidationError, "window_s must be at least 4");
  if (params.window_b < 1) throw Error(Errc::ValidationError, "window_b must be at least 1");
  Curve E = make_session_curve(params);
  const PrimeField& F = E.field();
  ThcrRing ring(E, params.window_b, params.seed);
  bool usable = cached && cached->field().modulus() == params.prime && cached->a() == E.a() &&
                cached->b() == E.b() && cached->c() == E.c() && cached->window() == params.window_s;
  GradedAlgebraModel model = usable ? std::move(*cached) : GradedAlgebraModel::build(F, E.a(), E.b(), E.c(), params.window_s);
  // Cheap, and ties the projection to this session's basis of B.
  model.attach_projection(ring);
  return std::shared_ptr<const Session>(new Session(params, F, E, std::move(ring), std::move(model)));
}

OrbitOptions Session::orbit_options(std::int64_t stride) const {
  OrbitOptions opt;
  opt.k_orbit = params_.effective_k_orbit();
  opt.stride = stride;
  return opt;
}

Point Session::auto_point(const std::string& name) const { return curve_.find_point(params_.seed ^ fnv1a(name)); }

Subspace Session::preimage(int n, const Divisor& e) const {
  return model_.preimage_space(n, ring_.vanishing_space(n, e));
}

}  // namespace skw
