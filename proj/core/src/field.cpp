#include "skw/field.hpp"

#include <string>

#include "skw/error.hpp"

namespace skw {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p <= 3 || p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw Error(Errc::InvalidModulus, "modulus " + std::to_string(p) + " must be a prime in (3, 2^31)");
  }
}

FieldElem PrimeField::pow(FieldElem a, std::uint64_t e) const noexcept {
  FieldElem result = one();
  FieldElem base = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

FieldElem PrimeField::inv(FieldElem a) const {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), new_r = a.residue;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

JetRing::JetRing(const PrimeField& field, int order) : field_(field), order_(order) {
  if (order < 1) throw Error(Errc::JetCapExceeded, "jet order must be at least 1");
}

Jet JetRing::constant(FieldElem c) const {
  Jet j{Vec(static_cast<std::size_t>(order_))};
  j.coeffs[0] = c;
  return j;
}

Jet JetRing::linear(FieldElem c0, FieldElem c1) const {
  Jet j = constant(c0);
  if (order_ > 1) j.coeffs[1] = c1;
  return j;
}

Jet JetRing::add(const Jet& a, const Jet& b) const {
  Jet r{Vec(static_cast<std::size_t>(order_))};
  for (int i = 0; i < order_; ++i) r.coeffs[i] = field_.add(a.coeffs[i], b.coeffs[i]);
  return r;
}

Jet JetRing::sub(const Jet& a, const Jet& b) const {
  Jet r{Vec(static_cast<std::size_t>(order_))};
  for (int i = 0; i < order_; ++i) r.coeffs[i] = field_.sub(a.coeffs[i], b.coeffs[i]);
  return r;
}

Jet JetRing::neg(const Jet& a) const {
  Jet r{Vec(static_cast<std::size_t>(order_))};
  for (int i = 0; i < order_; ++i) r.coeffs[i] = field_.neg(a.coeffs[i]);
  return r;
}

Jet JetRing::mul(const Jet& a, const Jet& b) const {
  Jet r{Vec(static_cast<std::size_t>(order_))};
  for (int i = 0; i < order_; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (int j = 0; i + j < order_; ++j) {
      r.coeffs[i + j] = field_.fma(a.coeffs[i], b.coeffs[j], r.coeffs[i + j]);
    }
  }
  return r;
}

Jet JetRing::scale(FieldElem s, const Jet& a) const {
  Jet r{Vec(static_cast<std::size_t>(order_))};
  for (int i = 0; i < order_; ++i) r.coeffs[i] = field_.mul(s, a.coeffs[i]);
  return r;
}

Jet JetRing::inv(const Jet& a) const {
  if (!a.is_unit()) throw Error(Errc::DivisionByZero, "jet is not a unit");
  // Solve a * r = 1 coefficient by coefficient.
  Jet r{Vec(static_cast<std::size_t>(order_))};
  FieldElem a0_inv = field_.inv(a.coeffs[0]);
  r.coeffs[0] = a0_inv;
  for (int k = 1; k < order_; ++k) {
    FieldElem acc{};
    for (int i = 1; i <= k; ++i) acc = field_.fma(a.coeffs[i], r.coeffs[k - i], acc);
    r.coeffs[k] = field_.neg(field_.mul(acc, a0_inv));
  }
  return r;
}

bool JetRing::is_zero(const Jet& a) const noexcept {
  for (auto c : a.coeffs) {
    if (!c.is_zero()) return false;
  }
  return true;
}

}  // namespace skw
