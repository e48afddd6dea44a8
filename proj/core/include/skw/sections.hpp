#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "skw/curve.hpp"
#include "skw/divisor.hpp"
#include "skw/linalg.hpp"

namespace skw {

/// Word x_{i1} ... x_{in}; as a section of L_n it evaluates at q to
/// l_{i1}(q) l_{i2}(sigma q) ... l_{in}(sigma^{n-1} q).
using Word = std::vector<std::uint8_t>;

/// Section of L_n written as a linear combination of twisted monomials.
struct SectionElem {
  int degree = 0;
  std::vector<std::pair<Word, FieldElem>> terms;
};

/// Twisted product u * v, evaluated as u(q) v(sigma^m q).
SectionElem twisted_product(const PrimeField& F, const SectionElem& u, const SectionElem& v);

/// Subspace of B_n, in coordinates over ThcrRing::basis_words(n).
struct SectionSpace {
  int degree = 0;
  Subspace coords;
  /// Vanishing divisor the space was built against.
  Divisor divisor;

  std::size_t dim() const noexcept { return coords.dim(); }
};

/// Decides which twist (q -> q + s or q -> q - s) makes every Sklyanin
/// relation vanish on the curve. Throws Error(OrientationFailure) unless
/// exactly one does.
int orientation_check(const Curve& E, std::uint64_t seed, int samples = 40);

/// The twisted homogeneous coordinate ring B(E, L, sigma) up to a degree
/// window, realised by evaluation at a fixed sample set.
class ThcrRing {
 public:
  /// E must carry its final orientation.
  ThcrRing(const Curve& E, int window, std::uint64_t seed);

  const Curve& curve() const noexcept { return E_; }
  int window() const noexcept { return window_; }
  const std::vector<Point>& samples() const noexcept { return samples_; }
  std::size_t dim(int n) const noexcept { return static_cast<std::size_t>(3 * n); }
  const std::vector<Word>& basis_words(int n) const;

  SectionSpace b_basis(int n) const;
  /// H^0(L_n(-e)) for effective e with deg e < 3n.
  SectionSpace vanishing_space(int n, const Divisor& e) const;
  SectionSpace space_product(const SectionSpace& u, const SectionSpace& v) const;

  FieldElem eval_word(const Word& w, const Point& q) const;
  Jet eval_word(const Word& w, const JetPoint& q) const;
  FieldElem eval(const SectionElem& s, const Point& q) const;
  Jet eval(const SectionElem& s, const JetPoint& q) const;

  /// Values of w at sigma^shift of each sample point.
  Vec word_values(const Word& w, int shift = 0) const;
  /// Coordinates of the degree-n section with the given sample values.
  Vec coords_from_values(int n, const Vec& values) const;
  Vec word_coords(const Word& w) const;
  /// Evaluation matrix of the basis of a space at the sample set.
  Matrix evaluation_matrix(const SectionSpace& s) const;
  SectionElem element(const SectionSpace& s, std::size_t i) const;
  SectionSpace from_elements(int n, const std::vector<SectionElem>& elems) const;

 private:
  void check_degree(int n) const;

  Curve E_;
  int window_;
  std::vector<Point> samples_;
  std::vector<std::vector<Point>> orbits_;  // orbits_[i][k] = sigma^k(sample i)
  std::vector<std::vector<Word>> words_;    // by degree
  std::vector<std::vector<std::size_t>> solve_cols_;
  std::vector<Matrix> solve_inv_;
};

}  // namespace skw
