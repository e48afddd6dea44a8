#include "skw/divisor.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "skw/error.hpp"

namespace skw {

Divisor Divisor::point(const Point& p, std::int64_t coeff) {
  Divisor d;
  d.add_term(p, coeff);
  return d;
}

std::int64_t Divisor::coeff(const Point& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t Divisor::degree() const {
  std::int64_t deg = 0;
  for (const auto& [p, c] : terms_) deg += c;
  return deg;
}

bool Divisor::is_effective() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

std::vector<Point> Divisor::support() const {
  std::vector<Point> out;
  out.reserve(terms_.size());
  for (const auto& [p, c] : terms_) out.push_back(p);
  return out;
}

Divisor& Divisor::add_term(const Point& p, std::int64_t coeff) {
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Divisor& Divisor::operator+=(const Divisor& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

Divisor operator*(std::int64_t k, const Divisor& d) {
  Divisor out;
  for (const auto& [p, c] : d.terms_) out.add_term(p, k * c);
  return out;
}

bool leq(const Divisor& a, const Divisor& b) {
  std::set<Point> pts;
  for (const auto& [p, c] : a.terms_) pts.insert(p);
  for (const auto& [p, c] : b.terms_) pts.insert(p);
  return std::all_of(pts.begin(), pts.end(), [&](const Point& p) { return a.coeff(p) <= b.coeff(p); });
}

std::int64_t OrbitProfile::degree() const {
  std::int64_t deg = 0;
  for (const auto& [j, c] : coeffs) deg += c;
  return deg;
}

Divisor twist(const Curve& E, const Divisor& d, std::int64_t j) {
  if (j == 0) return d;
  Point shift = E.mul(E.step(), -j);
  Divisor out;
  for (const auto& [p, c] : d.terms()) out.add_term(E.add(p, shift), c);
  return out;
}

Divisor truncated(const Curve& E, const Divisor& x, std::int64_t n, std::int64_t stride) {
  Divisor out;
  for (std::int64_t i = 0; i < n; ++i) out += twist(E, x, i * stride);
  return out;
}

std::vector<std::map<std::int64_t, Point>> orbit_groups(const Curve& E, const std::vector<Point>& points,
                                                        const OrbitOptions& opt) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::int64_t K = opt.k_orbit;
  // rho^{-1} steps forward: p^{rho^j} = p + (-j * stride) * step.
  Point fwd = E.mul(E.step(), -opt.stride);
  Point bwd = E.neg(fwd);

  std::map<Point, std::pair<std::size_t, std::int64_t>> assigned;
  std::vector<std::map<std::int64_t, Point>> groups;
  for (const Point& start : pts) {
    if (assigned.count(start)) continue;
    std::size_t gi = groups.size();
    groups.emplace_back();
    std::map<std::int64_t, Point> raw;
    std::deque<std::pair<Point, std::int64_t>> queue{{start, 0}};
    std::vector<std::pair<Point, std::int64_t>> far;
    assigned[start] = {gi, 0};
    raw.emplace(0, start);
    while (!queue.empty()) {
      auto [m, e] = queue.front();
      queue.pop_front();
      std::map<Point, std::int64_t> reach;
      Point f = m, b = m;
      for (std::int64_t j = 1; j <= 2 * K; ++j) {
        f = E.add(f, fwd);
        b = E.add(b, bwd);
        reach.emplace(f, j);
        reach.emplace(b, -j);
      }
      for (const Point& q : pts) {
        auto it = reach.find(q);
        if (it == reach.end()) continue;
        std::int64_t j = it->second;
        auto as = assigned.find(q);
        if (std::abs(j) <= K) {
          if (as == assigned.end()) {
            assigned[q] = {gi, e + j};
            raw.emplace(e + j, q);
            queue.emplace_back(q, e + j);
          } else if (as->second.first != gi || as->second.second != e + j) {
            throw Error(Errc::OrbitAmbiguity, "inconsistent orbit exponents for " + to_string(q));
          }
        } else {
          far.emplace_back(q, j);
        }
      }
    }
    for (const auto& [q, j] : far) {
      auto as = assigned.find(q);
      if (as == assigned.end() || as->second.first != gi) {
        throw Error(Errc::OrbitAmbiguity, "point " + to_string(q) + " related to the orbit of " +
                                              to_string(start) + " only by a twist of " + std::to_string(j) +
                                              " beyond K_orbit=" + std::to_string(K));
      }
    }
    std::int64_t lo = raw.begin()->first;
    for (const auto& [j, p] : raw) groups[gi].emplace(j - lo, p);
  }
  return groups;
}

std::vector<OrbitProfile> orbit_split(const Curve& E, const Divisor& d, const OrbitOptions& opt) {
  std::vector<OrbitProfile> out;
  for (const auto& group : orbit_groups(E, d.support(), opt)) {
    OrbitProfile prof;
    prof.base = group.begin()->second;
    for (const auto& [j, p] : group) prof.coeffs.emplace(j, d.coeff(p));
    out.push_back(std::move(prof));
  }
  return out;
}

namespace {

bool tails_nonnegative(const OrbitProfile& prof) {
  if (prof.coeffs.empty()) return true;
  std::int64_t hi = prof.coeffs.rbegin()->first;
  std::vector<std::int64_t> a(static_cast<std::size_t>(hi + 1), 0);
  for (const auto& [j, c] : prof.coeffs) a[static_cast<std::size_t>(j)] = c;
  std::int64_t left = 0;
  for (auto v : a) {
    left += v;
    if (left < 0) return false;
  }
  std::int64_t right = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    right += *it;
    if (right < 0) return false;
  }
  return true;
}

Point orbit_point(const Curve& E, const Point& base, std::int64_t j, std::int64_t stride) {
  return E.sigma_pow(base, j * stride);
}

}  // namespace

bool is_virtually_effective(const Curve& E, const Divisor& x, const OrbitOptions& opt) {
  for (const auto& prof : orbit_split(E, x, opt)) {
    if (!tails_nonnegative(prof)) return false;
  }
  return true;
}

VeffDecomposition decompose_veff(const Curve& E, const Divisor& x, const OrbitOptions& opt) {
  VeffDecomposition out;
  std::int64_t k = 0;
  for (const auto& prof : orbit_split(E, x, opt)) {
    if (!tails_nonnegative(prof)) {
      throw Error(Errc::NotVirtuallyEffective, "coefficient tail negative on orbit of " + to_string(prof.base));
    }
    std::int64_t e = prof.degree();
    out.u.add_term(prof.base, e);
    std::int64_t hi = prof.coeffs.rbegin()->first;
    for (std::int64_t i = 0; i < hi; ++i) {
      std::int64_t c = 0;
      for (auto it = prof.coeffs.upper_bound(i); it != prof.coeffs.end(); ++it) c += it->second;
      if (c != 0) {
        out.v.add_term(orbit_point(E, prof.base, i, opt.stride), c);
        k = std::max(k, i + 1);
      }
    }
  }
  out.k = k;
  Divisor rebuilt = out.u - out.v + twist(E, out.v, opt.stride);
  if (rebuilt != x || !out.u.is_effective() ||
      !leq(Divisor{}, out.v) || !leq(out.v, truncated(E, out.u, k, opt.stride))) {
    throw std::logic_error("decompose_veff postcondition failed");
  }
  return out;
}

Divisor normalized_divisor(const Curve& E, const Divisor& x, const Divisor& y, std::int64_t k,
                           const OrbitOptions& opt) {
  std::vector<Point> pts = x.support();
  for (const Point& p : y.support()) pts.push_back(p);
  Divisor d;
  for (const auto& group : orbit_groups(E, pts, opt)) {
    // The joint re-basing puts both divisors in exponents [0, k']; k grows
    // to k' when needed.
    k = std::max(k, group.rbegin()->first);
    std::int64_t e = 0;
    for (const auto& [j, p] : group) e += x.coeff(p);
    if (e < 0) {
      throw Error(Errc::NegativeMultiplicity, "orbit coefficient sum " + std::to_string(e) + " at " +
                                                  to_string(group.begin()->second));
    }
    d.add_term(group.begin()->second, e);
  }
  return d;
}

bool sigma_equivalent(const Curve& E, const Divisor& d1, const Divisor& d2, const OrbitOptions& opt) {
  std::vector<Point> pts = d1.support();
  for (const Point& p : d2.support()) pts.push_back(p);
  for (const auto& group : orbit_groups(E, pts, opt)) {
    std::int64_t e1 = 0, e2 = 0;
    for (const auto& [j, p] : group) {
      e1 += d1.coeff(p);
      e2 += d2.coeff(p);
    }
    if (e1 != e2) return false;
  }
  return true;
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(' << p.x[0].residue << ':' << p.x[1].residue << ':' << p.x[2].residue << ')';
  return os.str();
}

std::string to_string(const Divisor& d) {
  if (d.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : d.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1) os << a << '*';
    os << to_string(p);
    first = false;
  }
  return os.str();
}

}  // namespace skw
