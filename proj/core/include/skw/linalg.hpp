#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "skw/field.hpp"

namespace skw {

/// Subspace of F_p^n stored as its reduced row echelon basis. The echelon
/// form is canonical, so equality of subspaces is equality of members.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  /// Throws Error(MixedLength) if some row length differs from `ambient`.
  static Subspace span(const PrimeField& F, const Matrix& rows, std::size_t ambient);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  const Matrix& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Remainder of v after elimination against the basis.
  Vec reduce(const PrimeField& F, Vec v) const;
  bool contains(const PrimeField& F, const Vec& v) const;
  /// Coordinates of v in the echelon basis; nullopt if v is not a member.
  std::optional<Vec> coordinates(const PrimeField& F, const Vec& v) const;
  /// Basis of {f : f . w = 0 for every member w}.
  Matrix annihilator(const PrimeField& F) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend class EchelonBuilder;
  std::size_t ambient_ = 0;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

/// Incremental elimination: insert rows one at a time, then extract the
/// canonical Subspace.
class EchelonBuilder {
 public:
  EchelonBuilder(const PrimeField& F, std::size_t ambient);

  /// Returns true if v was independent of the rows inserted so far.
  bool insert(Vec v);
  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  bool is_full() const noexcept { return rows_.size() == ambient_; }
  Subspace finish() const;

 private:
  PrimeField F_;
  std::size_t ambient_;
  Matrix rows_;                       // entry 1 at pivot
  std::vector<std::size_t> pivots_;   // parallel to rows_
  std::vector<long> pivot_row_;       // column -> row, -1 if none
};

Subspace rref_basis(const PrimeField& F, const Matrix& rows);
Subspace subspace_sum(const PrimeField& F, const Subspace& a, const Subspace& b);
Subspace subspace_meet(const PrimeField& F, const std::vector<Subspace>& spaces);
bool subspace_contains(const PrimeField& F, const Subspace& big, const Subspace& small);

/// {x : f . x = 0 for all rows f}.
Subspace annihilated_by(const PrimeField& F, const Matrix& functionals, std::size_t ambient);
/// Row vector times matrix; x.size() must equal M.size().
Vec vec_mat(const PrimeField& F, const Vec& x, const Matrix& M, std::size_t cols);
/// Span of {b . M : b in basis of A}.
Subspace image(const PrimeField& F, const Subspace& a, const Matrix& M, std::size_t cols);
/// {x : x . M in W}; M has one row per coordinate of the source.
Subspace preimage(const PrimeField& F, const Matrix& M, std::size_t source_dim, const Subspace& w);
std::size_t rank(const PrimeField& F, const Matrix& rows);
/// Inverse of a square matrix, nullopt if singular.
std::optional<Matrix> inverse(const PrimeField& F, const Matrix& M);
Matrix transpose(const Matrix& M, std::size_t cols);

}  // namespace skw
