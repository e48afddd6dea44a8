#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "skw/session.hpp"

namespace skw::test {

/// Default-parameter session, built once per test binary.
const Session& default_session();

// Oracles below avoid the library's linear algebra.
namespace oracle {

using Row = std::vector<std::uint64_t>;

/// Row-echelon basis mod p with plain Gaussian elimination.
class Echelon {
 public:
  Echelon(std::uint64_t p, std::size_t cols) : p_(p), cols_(cols) {}
  /// True if v was independent of the rows so far.
  bool insert(Row v);
  bool contains(Row v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  Row reduce(Row v) const;
  std::uint64_t p_;
  std::size_t cols_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
std::size_t bareiss_rank(std::vector<std::vector<__int128>> m);

/// Degree-n part of k<x0,x1,x2> modulo the two-sided ideal of the three
/// Sklyanin relations, words indexed base 3 with the first letter leading.
class FreeQuotient {
 public:
  FreeQuotient(std::uint64_t p, std::int64_t a, std::int64_t b, std::int64_t c, int max_degree);
  std::size_t ideal_dim(int n) const { return ideal_[n].rank(); }
  std::size_t quotient_dim(int n) const;
  bool in_ideal(int n, const Row& v) const { return ideal_[n].contains(v); }
  static std::size_t index(const std::vector<std::uint8_t>& w);
  std::uint64_t p() const { return p_; }
  /// Concatenation product of homogeneous free-algebra elements.
  Row multiply(const Row& x, int m, const Row& y, int n) const;

 private:
  std::uint64_t p_;
  std::vector<Echelon> ideal_;
};

std::uint64_t pow3(int n);

/// [x]_n by direct summation of twists.
Divisor brute_truncation(const Curve& E, const Divisor& x, int n);
/// Effectiveness of [x]_n for every n in lo..hi.
bool brute_eventually_effective(const Curve& E, const Divisor& x, int lo, int hi);

/// Coefficients of num(t) * prod 1/(1 - t^k) over ks, by repeated prefix sums.
std::vector<long long> naive_series(const std::vector<long long>& num, const std::vector<int>& ks, int terms);

}  // namespace oracle

}  // namespace skw::test
