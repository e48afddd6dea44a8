#pragma once

#include <cstdint>
#include <vector>

#include "skw/field.hpp"
#include "skw/linalg.hpp"
#include "skw/sections.hpp"

namespace skw {

/// Homogeneous element of S: degree and coefficients over the S_n basis.
struct SklElem {
  int degree = 0;
  Vec coeffs;

  friend bool operator==(const SklElem&, const SklElem&) = default;
};

/// Outcome of the centre cross-check in degree 3.
enum class GSource : std::uint8_t { Printed, Corrected, Solved };

struct CentreReport {
  /// The closed form as printed, with last term c(c^3-b^3) x_2^3.
  bool formula_central = false;
  /// Same coefficients with x_2^3 replaced by x_1^3.
  bool corrected_central = false;
  std::size_t centre_dim = 0;
  /// Whether the element finally used as g spans the degree-3 centre.
  bool g_spans_centre = false;
  GSource source = GSource::Solved;

  friend bool operator==(const CentreReport&, const CentreReport&) = default;
};

/// Graded pieces S_0..S_window of the Sklyanin algebra built as the chain of
/// quotients S_n = (S_1 (x) S_{n-1}) / (R (x) S_{n-2}), with structure
/// constants and, once attached, the projection onto B.
class GradedAlgebraModel {
 public:
  /// Throws Error(DimMismatch) if some s_n differs from (n+1)(n+2)/2,
  /// Error(CentreDimUnexpected) if the degree-3 centre is not a line.
  static GradedAlgebraModel build(const PrimeField& F, FieldElem a, FieldElem b, FieldElem c, int window);

  const PrimeField& field() const noexcept { return F_; }
  FieldElem a() const noexcept { return a_; }
  FieldElem b() const noexcept { return b_; }
  FieldElem c() const noexcept { return c_; }
  int window() const noexcept { return window_; }
  std::size_t dim(int n) const;
  /// Monomial represented by basis vector t of S_n.
  const Word& basis_word(int n, std::size_t t) const;
  /// Reduction map pi_n: row (i * s_{n-1} + k) is the image of x_i (x) b_k.
  const Matrix& reduction(int n) const;

  SklElem zero(int n) const;
  SklElem one() const;
  SklElem generator(int i) const;
  SklElem basis_elem(int n, std::size_t t) const;
  SklElem from_word(const Word& w) const;
  SklElem add(const SklElem& x, const SklElem& y) const;
  SklElem scale(FieldElem s, const SklElem& x) const;
  /// Throws Error(WindowExceeded) if deg x + deg y > window.
  SklElem multiply(const SklElem& x, const SklElem& y) const;
  /// Rows u: x * b_u for the basis b_u of S_n.
  Matrix left_mult_matrix(const SklElem& x, int n) const;
  /// Rows t: b_t * y for the basis b_t of S_m.
  Matrix right_mult_matrix(const SklElem& y, int m) const;
  /// Span of {u v : u in A, v in B} for A in S_m, B in S_n.
  Subspace product(const Subspace& a, int m, const Subspace& b, int n) const;

  const SklElem& g() const noexcept { return g_; }
  const SklElem& g_formula() const noexcept { return g_formula_; }
  const SklElem& g_corrected() const noexcept { return g_corrected_; }
  const CentreReport& centre_report() const noexcept { return centre_; }
  /// g * S_{n-3} inside S_n (zero for n < 3).
  Subspace g_multiples(int n) const;

  /// Attaches the projection S_n -> B_n for n <= min(window, ring window).
  void attach_projection(const ThcrRing& ring);
  int projection_window() const noexcept { return static_cast<int>(projection_.size()) - 1; }
  /// Row t: B-coordinates of the image of basis vector t of S_n.
  const Matrix& projection(int n) const;
  Vec project_to_B(const SklElem& x) const;
  /// Full inverse image of W under S_n -> B_n.
  Subspace preimage_space(int n, const SectionSpace& w) const;
  /// Image of a subspace of S_n in B-coordinates.
  Subspace image_in_B(int n, const Subspace& v) const;

  /// Raw tensor access for serialization: entry (t, u) of S_m x S_n.
  const Vec& tensor(int m, int n) const;

  struct Parts {
    std::uint64_t modulus;
    FieldElem a, b, c;
    int window;
    std::vector<std::vector<Word>> words;
    std::vector<Matrix> reductions;
    std::vector<std::vector<Vec>> tensors;
    SklElem g, g_formula, g_corrected;
    CentreReport centre;
    std::vector<Matrix> projection;
  };
  Parts parts() const;
  static GradedAlgebraModel from_parts(const Parts& parts);
  friend bool operator==(const GradedAlgebraModel& x, const GradedAlgebraModel& y);

 private:
  explicit GradedAlgebraModel(const PrimeField& F) : F_(F) {}
  void build_chain();
  void build_tensors();
  void solve_centre();
  void check_window(int n) const;

  PrimeField F_;
  FieldElem a_, b_, c_;
  int window_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<Word>> words_;
  std::vector<Matrix> reductions_;
  // tensors_[m][n]: flat (t * s_n + u) * s_{m+n} + w for 1 <= m, n.
  std::vector<std::vector<Vec>> tensors_;
  SklElem g_, g_formula_, g_corrected_;
  CentreReport centre_;
  std::vector<Matrix> projection_;
};

}  // namespace skw
