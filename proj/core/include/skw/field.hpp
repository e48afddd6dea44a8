#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace skw {

/// Residue class modulo the session prime. Carries no modulus; arithmetic
/// goes through a PrimeField.
struct FieldElem {
  std::uint32_t residue = 0;

  constexpr bool is_zero() const noexcept { return residue == 0; }
  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

using Vec = std::vector<FieldElem>;
using Matrix = std::vector<Vec>;

bool is_prime(std::uint64_t n) noexcept;

class PrimeField {
 public:
  /// Throws Error(InvalidModulus) unless p is a prime with 3 < p < 2^31.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }

  FieldElem zero() const noexcept { return {}; }
  FieldElem one() const noexcept { return {1}; }
  FieldElem from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return {static_cast<std::uint32_t>(r)};
  }
  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(FieldElem a) const noexcept {
    return a.residue > p_ / 2 ? static_cast<std::int64_t>(a.residue) - static_cast<std::int64_t>(p_)
                              : static_cast<std::int64_t>(a.residue);
  }

  FieldElem add(FieldElem a, FieldElem b) const noexcept {
    std::uint64_t s = std::uint64_t{a.residue} + b.residue;
    if (s >= p_) s -= p_;
    return {static_cast<std::uint32_t>(s)};
  }
  FieldElem sub(FieldElem a, FieldElem b) const noexcept {
    return a.residue >= b.residue ? FieldElem{a.residue - b.residue}
                                  : FieldElem{static_cast<std::uint32_t>(a.residue + p_ - b.residue)};
  }
  FieldElem neg(FieldElem a) const noexcept {
    return a.residue == 0 ? a : FieldElem{static_cast<std::uint32_t>(p_ - a.residue)};
  }
  FieldElem mul(FieldElem a, FieldElem b) const noexcept {
    return {static_cast<std::uint32_t>(std::uint64_t{a.residue} * b.residue % p_)};
  }
  /// a*b + c
  FieldElem fma(FieldElem a, FieldElem b, FieldElem c) const noexcept {
    return {static_cast<std::uint32_t>((std::uint64_t{a.residue} * b.residue + c.residue) % p_)};
  }
  FieldElem pow(FieldElem a, std::uint64_t e) const noexcept;
  /// Throws Error(DivisionByZero) on zero.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

  friend bool operator==(const PrimeField& x, const PrimeField& y) noexcept { return x.p_ == y.p_; }

 private:
  std::uint64_t p_;
};

/// Truncated power series c0 + c1 e + ... + c_{m-1} e^{m-1}.
struct Jet {
  Vec coeffs;

  int order() const noexcept { return static_cast<int>(coeffs.size()); }
  bool is_unit() const noexcept { return !coeffs.empty() && !coeffs[0].is_zero(); }
  friend bool operator==(const Jet&, const Jet&) = default;
};

/// The ring F_p[e]/(e^m).
class JetRing {
 public:
  JetRing(const PrimeField& field, int order);

  const PrimeField& field() const noexcept { return field_; }
  int order() const noexcept { return order_; }

  Jet constant(FieldElem c) const;
  /// c0 + c1 e
  Jet linear(FieldElem c0, FieldElem c1) const;
  Jet add(const Jet& a, const Jet& b) const;
  Jet sub(const Jet& a, const Jet& b) const;
  Jet neg(const Jet& a) const;
  Jet mul(const Jet& a, const Jet& b) const;
  Jet scale(FieldElem s, const Jet& a) const;
  /// Throws Error(DivisionByZero) if a is not a unit.
  Jet inv(const Jet& a) const;
  bool is_zero(const Jet& a) const noexcept;

 private:
  PrimeField field_;
  int order_;
};

}  // namespace skw
