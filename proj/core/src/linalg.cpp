#include "skw/linalg.hpp"

#include <algorithm>
#include <string>

#include "skw/error.hpp"

namespace skw {
namespace {

// row_dst -= t * row_src, starting at column `from`.
void axpy_row(const PrimeField& F, Vec& dst, const Vec& src, FieldElem t, std::size_t from) {
  FieldElem nt = F.neg(t);
  for (std::size_t j = from; j < dst.size(); ++j) {
    if (!src[j].is_zero()) dst[j] = F.fma(nt, src[j], dst[j]);
  }
}

// Full Gauss-Jordan elimination; rows are replaced by the nonzero RREF rows.
std::vector<std::size_t> rref_inplace(const PrimeField& F, Matrix& rows, std::size_t ambient) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ambient && r < rows.size(); ++col) {
    std::size_t pr = r;
    while (pr < rows.size() && rows[pr][col].is_zero()) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[r], rows[pr]);
    FieldElem iv = F.inv(rows[r][col]);
    for (std::size_t j = col; j < ambient; ++j) rows[r][j] = F.mul(rows[r][j], iv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && !rows[i][col].is_zero()) axpy_row(F, rows[i], rows[r], rows[i][col], col);
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

void check_lengths(const Matrix& rows, std::size_t ambient) {
  for (const auto& row : rows) {
    if (row.size() != ambient) {
      throw Error(Errc::MixedLength,
                  "row of length " + std::to_string(row.size()) + " in ambient " + std::to_string(ambient));
    }
  }
}

void check_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(Errc::MixedAmbient, "ambient dimensions " + std::to_string(a.ambient_dim()) + " and " +
                                        std::to_string(b.ambient_dim()));
  }
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec row(ambient);
    row[i] = FieldElem{1};
    s.rows_.push_back(std::move(row));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(const PrimeField& F, const Matrix& rows, std::size_t ambient) {
  check_lengths(rows, ambient);
  EchelonBuilder builder(F, ambient);
  for (const auto& row : rows) {
    builder.insert(row);
    if (builder.is_full()) break;
  }
  return builder.finish();
}

Vec Subspace::reduce(const PrimeField& F, Vec v) const {
  if (v.size() != ambient_) throw Error(Errc::MixedLength, "vector length differs from ambient");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    FieldElem t = v[pivots_[r]];
    if (!t.is_zero()) axpy_row(F, v, rows_[r], t, pivots_[r]);
  }
  return v;
}

bool Subspace::contains(const PrimeField& F, const Vec& v) const {
  Vec rem = reduce(F, v);
  return std::all_of(rem.begin(), rem.end(), [](FieldElem x) { return x.is_zero(); });
}

std::optional<Vec> Subspace::coordinates(const PrimeField& F, const Vec& v) const {
  if (!contains(F, v)) return std::nullopt;
  Vec c(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

Matrix Subspace::annihilator(const PrimeField& F) const {
  Matrix out;
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (is_pivot[j]) continue;
    Vec f(ambient_);
    f[j] = FieldElem{1};
    for (std::size_t r = 0; r < rows_.size(); ++r) f[pivots_[r]] = F.neg(rows_[r][j]);
    out.push_back(std::move(f));
  }
  return out;
}

EchelonBuilder::EchelonBuilder(const PrimeField& F, std::size_t ambient)
    : F_(F), ambient_(ambient), pivot_row_(ambient, -1) {}

bool EchelonBuilder::insert(Vec v) {
  if (v.size() != ambient_) throw Error(Errc::MixedLength, "vector length differs from ambient");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    FieldElem t = v[pivots_[r]];
    if (!t.is_zero()) axpy_row(F_, v, rows_[r], t, 0);
  }
  std::size_t lead = 0;
  while (lead < ambient_ && v[lead].is_zero()) ++lead;
  if (lead == ambient_) return false;
  FieldElem iv = F_.inv(v[lead]);
  for (std::size_t j = lead; j < ambient_; ++j) v[j] = F_.mul(v[j], iv);
  pivot_row_[lead] = static_cast<long>(rows_.size());
  pivots_.push_back(lead);
  rows_.push_back(std::move(v));
  return true;
}

Subspace EchelonBuilder::finish() const {
  Subspace s;
  s.ambient_ = ambient_;
  s.rows_ = rows_;
  s.pivots_ = rref_inplace(F_, s.rows_, ambient_);
  return s;
}

Subspace rref_basis(const PrimeField& F, const Matrix& rows) {
  std::size_t ambient = rows.empty() ? 0 : rows.front().size();
  return Subspace::span(F, rows, ambient);
}

Subspace subspace_sum(const PrimeField& F, const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  Matrix rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(F, rows, a.ambient_dim());
}

Subspace subspace_meet(const PrimeField& F, const std::vector<Subspace>& spaces) {
  if (spaces.empty()) throw Error(Errc::MixedAmbient, "meet of an empty family");
  std::size_t ambient = spaces.front().ambient_dim();
  Matrix functionals;
  for (const auto& s : spaces) {
    check_same_ambient(spaces.front(), s);
    Matrix ann = s.annihilator(F);
    functionals.insert(functionals.end(), ann.begin(), ann.end());
  }
  return annihilated_by(F, functionals, ambient);
}

bool subspace_contains(const PrimeField& F, const Subspace& big, const Subspace& small) {
  check_same_ambient(big, small);
  for (const auto& row : small.basis()) {
    if (!big.contains(F, row)) return false;
  }
  return true;
}

Subspace annihilated_by(const PrimeField& F, const Matrix& functionals, std::size_t ambient) {
  Subspace f = Subspace::span(F, functionals, ambient);
  return Subspace::span(F, f.annihilator(F), ambient);
}

Vec vec_mat(const PrimeField& F, const Vec& x, const Matrix& M, std::size_t cols) {
  if (x.size() != M.size()) throw Error(Errc::MixedLength, "vector/matrix size mismatch");
  Vec out(cols);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    const Vec& row = M[i];
    for (std::size_t j = 0; j < cols; ++j) {
      if (!row[j].is_zero()) out[j] = F.fma(x[i], row[j], out[j]);
    }
  }
  return out;
}

Subspace image(const PrimeField& F, const Subspace& a, const Matrix& M, std::size_t cols) {
  Matrix rows;
  rows.reserve(a.dim());
  for (const auto& b : a.basis()) rows.push_back(vec_mat(F, b, M, cols));
  return Subspace::span(F, rows, cols);
}

Subspace preimage(const PrimeField& F, const Matrix& M, std::size_t source_dim, const Subspace& w) {
  if (M.size() != source_dim) throw Error(Errc::MixedLength, "map rows differ from source dimension");
  Matrix ann = w.annihilator(F);
  Matrix functionals;
  functionals.reserve(ann.size());
  for (const auto& f : ann) {
    Vec pulled(source_dim);
    for (std::size_t i = 0; i < source_dim; ++i) {
      FieldElem acc{};
      const Vec& row = M[i];
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (!f[j].is_zero()) acc = F.fma(row[j], f[j], acc);
      }
      pulled[i] = acc;
    }
    functionals.push_back(std::move(pulled));
  }
  return annihilated_by(F, functionals, source_dim);
}

std::size_t rank(const PrimeField& F, const Matrix& rows) {
  if (rows.empty()) return 0;
  return Subspace::span(F, rows, rows.front().size()).dim();
}

std::optional<Matrix> inverse(const PrimeField& F, const Matrix& M) {
  std::size_t n = M.size();
  Matrix aug(n, Vec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (M[i].size() != n) throw Error(Errc::MixedLength, "inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = M[i][j];
    aug[i][n + i] = FieldElem{1};
  }
  std::vector<std::size_t> piv = rref_inplace(F, aug, 2 * n);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix out(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  }
  return out;
}

Matrix transpose(const Matrix& M, std::size_t cols) {
  Matrix t(cols, Vec(M.size()));
  for (std::size_t i = 0; i < M.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = M[i][j];
  }
  return t;
}

}  // namespace skw
