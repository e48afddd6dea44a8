#include "skw/sklyanin.hpp"

#include <map>
#include <string>

#include "skw/error.hpp"

namespace skw {

namespace {

std::size_t expected_dim(int n) { return static_cast<std::size_t>((n + 1) * (n + 2) / 2); }

}  // namespace

GradedAlgebraModel GradedAlgebraModel::build(const PrimeField& F, FieldElem a, FieldElem b, FieldElem c,
                                              int window) {
  if (window < 4) throw Error(Errc::WindowExceeded, "window_s must be at least 4");
  GradedAlgebraModel model(F);
  model.a_ = a;
  model.b_ = b;
  model.c_ = c;
  model.window_ = window;
  model.build_chain();
  model.build_tensors();
  model.solve_centre();
  return model;
}

void GradedAlgebraModel::build_chain() {
  dims_.assign(static_cast<std::size_t>(window_ + 1), 0);
  words_.assign(dims_.size(), {});
  reductions_.assign(dims_.size(), {});
  dims_[0] = 1;
  words_[0] = {Word{}};
  dims_[1] = 3;
  for (std::uint8_t i = 0; i < 3; ++i) words_[1].push_back(Word{i});
  reductions_[1] = Subspace::full(3).basis();

  // Relation i: a x_i x_{i+1} + b x_{i+1} x_i + c x_{i+2}^2.
  struct Term {
    int left, right;
    FieldElem coeff;
  };
  std::vector<std::vector<Term>> relations;
  for (int i = 0; i < 3; ++i) {
    relations.push_back({{i, (i + 1) % 3, a_}, {(i + 1) % 3, i, b_}, {(i + 2) % 3, (i + 2) % 3, c_}});
  }

  for (int n = 2; n <= window_; ++n) {
    std::size_t prev = dims_[n - 1], prev2 = dims_[n - 2];
    std::size_t ambient = 3 * prev;
    const Matrix& red_prev = reductions_[n - 1];
    EchelonBuilder rel(F_, ambient);
    for (const auto& r : relations) {
      for (std::size_t m = 0; m < prev2; ++m) {
        Vec v(ambient);
        for (const Term& t : r) {
          const Vec& tail = red_prev[static_cast<std::size_t>(t.right) * prev2 + m];
          std::size_t off = static_cast<std::size_t>(t.left) * prev;
          for (std::size_t k = 0; k < prev; ++k) {
            if (!tail[k].is_zero()) v[off + k] = F_.fma(t.coeff, tail[k], v[off + k]);
          }
        }
        rel.insert(std::move(v));
      }
    }
    Subspace K = rel.finish();
    std::vector<long> col_index(ambient, -1);
    std::vector<bool> is_pivot(ambient, false);
    for (auto p : K.pivots()) is_pivot[p] = true;
    std::size_t count = 0;
    for (std::size_t col = 0; col < ambient; ++col) {
      if (is_pivot[col]) continue;
      col_index[col] = static_cast<long>(count++);
      Word w{static_cast<std::uint8_t>(col / prev)};
      const Word& tail = words_[n - 1][col % prev];
      w.insert(w.end(), tail.begin(), tail.end());
      words_[n].push_back(std::move(w));
    }
    dims_[n] = count;
    if (count != expected_dim(n)) {
      throw Error(Errc::DimMismatch, "dim S_" + std::to_string(n) + " = " + std::to_string(count) + ", expected " +
                                         std::to_string(expected_dim(n)));
    }
    Matrix red(ambient, Vec(count));
    for (std::size_t col = 0; col < ambient; ++col) {
      if (!is_pivot[col]) red[col][static_cast<std::size_t>(col_index[col])] = F_.one();
    }
    for (std::size_t r = 0; r < K.dim(); ++r) {
      const Vec& row = K.basis()[r];
      Vec& target = red[K.pivots()[r]];
      for (std::size_t col = 0; col < ambient; ++col) {
        if (!is_pivot[col] && !row[col].is_zero()) target[static_cast<std::size_t>(col_index[col])] = F_.neg(row[col]);
      }
    }
    reductions_[n] = std::move(red);
  }
}

void GradedAlgebraModel::build_tensors() {
  tensors_.assign(static_cast<std::size_t>(window_ + 1), std::vector<Vec>(static_cast<std::size_t>(window_ + 1)));
  // Index of each degree-(m-1) word, to locate the tail of a lift.
  std::vector<std::map<Word, std::size_t>> index(dims_.size());
  for (std::size_t n = 0; n < dims_.size(); ++n) {
    for (std::size_t t = 0; t < words_[n].size(); ++t) index[n][words_[n][t]] = t;
  }
  for (int m = 1; m < window_; ++m) {
    for (int n = 1; m + n <= window_; ++n) {
      std::size_t sm = dims_[m], sn = dims_[n], sk = dims_[m + n], sprev = dims_[m + n - 1];
      Vec flat(sm * sn * sk);
      const Matrix& red = reductions_[m + n];
      for (std::size_t t = 0; t < sm; ++t) {
        const Word& w = words_[m][t];
        std::size_t i = w[0];
        if (m == 1) {
          for (std::size_t u = 0; u < sn; ++u) {
            const Vec& img = red[i * sn + u];
            std::copy(img.begin(), img.end(), flat.begin() + static_cast<long>((t * sn + u) * sk));
          }
          continue;
        }
        std::size_t k = index[m - 1].at(Word(w.begin() + 1, w.end()));
        const Vec& lower = tensors_[m - 1][n];
        for (std::size_t u = 0; u < sn; ++u) {
          // x_i applied to b'_k b_u.
          const FieldElem* y = lower.data() + (k * sn + u) * sprev;
          FieldElem* out = flat.data() + (t * sn + u) * sk;
          for (std::size_t l = 0; l < sprev; ++l) {
            if (y[l].is_zero()) continue;
            const Vec& img = red[i * sprev + l];
            for (std::size_t q = 0; q < sk; ++q) {
              if (!img[q].is_zero()) out[q] = F_.fma(y[l], img[q], out[q]);
            }
          }
        }
      }
      tensors_[m][n] = std::move(flat);
    }
  }
}

void GradedAlgebraModel::solve_centre() {
  FieldElem a3 = F_.pow(a_, 3), b3 = F_.pow(b_, 3), c3 = F_.pow(c_, 3);
  auto combo = [&](int cube) {
    SklElem g = zero(3);
    auto add_word = [&](const Word& w, FieldElem coeff) { g = add(g, scale(coeff, from_word(w))); };
    std::uint8_t k = static_cast<std::uint8_t>(cube);
    add_word({0, 0, 0}, F_.mul(c_, F_.sub(a3, c3)));
    add_word({0, 1, 2}, F_.mul(a_, F_.sub(b3, c3)));
    add_word({1, 0, 2}, F_.mul(b_, F_.sub(c3, a3)));
    add_word({k, k, k}, F_.mul(c_, F_.sub(c3, b3)));
    return g;
  };
  g_formula_ = combo(2);
  g_corrected_ = combo(1);

  std::size_t s3 = dims_[3], s4 = dims_[4];
  Matrix commutators(s3, Vec(3 * s4));
  for (std::size_t t = 0; t < s3; ++t) {
    SklElem h = basis_elem(3, t);
    for (int j = 0; j < 3; ++j) {
      SklElem x = generator(j);
      SklElem hx = multiply(h, x), xh = multiply(x, h);
      for (std::size_t q = 0; q < s4; ++q) commutators[t][j * s4 + q] = F_.sub(hx.coeffs[q], xh.coeffs[q]);
    }
  }
  Subspace centre = annihilated_by(F_, transpose(commutators, 3 * s4), s3);
  centre_.centre_dim = centre.dim();
  if (centre.dim() != 1) {
    throw Error(Errc::CentreDimUnexpected, "degree-3 centre has dimension " + std::to_string(centre.dim()));
  }
  auto spans = [&](const SklElem& g) { return centre == Subspace::span(F_, Matrix{g.coeffs}, s3); };
  centre_.formula_central = spans(g_formula_);
  centre_.corrected_central = spans(g_corrected_);
  if (centre_.formula_central) {
    g_ = g_formula_;
    centre_.source = GSource::Printed;
  } else if (centre_.corrected_central) {
    g_ = g_corrected_;
    centre_.source = GSource::Corrected;
  } else {
    g_ = SklElem{3, centre.basis()[0]};
    centre_.source = GSource::Solved;
  }
  centre_.g_spans_centre = spans(g_);
}

void GradedAlgebraModel::check_window(int n) const {
  if (n < 0 || n > window_) {
    throw Error(Errc::WindowExceeded, "degree " + std::to_string(n) + " outside S window " + std::to_string(window_));
  }
}

std::size_t GradedAlgebraModel::dim(int n) const {
  check_window(n);
  return dims_[n];
}

const Word& GradedAlgebraModel::basis_word(int n, std::size_t t) const {
  check_window(n);
  return words_[n].at(t);
}

const Matrix& GradedAlgebraModel::reduction(int n) const {
  check_window(n);
  return reductions_[n];
}

SklElem GradedAlgebraModel::zero(int n) const { return SklElem{n, Vec(dim(n))}; }

SklElem GradedAlgebraModel::one() const { return SklElem{0, Vec{F_.one()}}; }

SklElem GradedAlgebraModel::generator(int i) const { return basis_elem(1, static_cast<std::size_t>(i)); }

SklElem GradedAlgebraModel::basis_elem(int n, std::size_t t) const {
  SklElem e = zero(n);
  e.coeffs.at(t) = F_.one();
  return e;
}

SklElem GradedAlgebraModel::from_word(const Word& w) const {
  SklElem acc = one();
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = multiply(generator(*it), acc);
  return acc;
}

SklElem GradedAlgebraModel::add(const SklElem& x, const SklElem& y) const {
  if (x.degree != y.degree) throw Error(Errc::MixedLength, "adding elements of different degrees");
  SklElem out = x;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = F_.add(out.coeffs[i], y.coeffs[i]);
  return out;
}

SklElem GradedAlgebraModel::scale(FieldElem s, const SklElem& x) const {
  SklElem out = x;
  for (auto& v : out.coeffs) v = F_.mul(s, v);
  return out;
}

SklElem GradedAlgebraModel::multiply(const SklElem& x, const SklElem& y) const {
  int m = x.degree, n = y.degree;
  check_window(m + n);
  if (m == 0) return scale(x.coeffs[0], y);
  if (n == 0) return scale(y.coeffs[0], x);
  std::size_t sn = dims_[n], sk = dims_[m + n];
  const Vec& T = tensors_[m][n];
  SklElem out = zero(m + n);
  for (std::size_t t = 0; t < x.coeffs.size(); ++t) {
    if (x.coeffs[t].is_zero()) continue;
    for (std::size_t u = 0; u < sn; ++u) {
      if (y.coeffs[u].is_zero()) continue;
      FieldElem s = F_.mul(x.coeffs[t], y.coeffs[u]);
      const FieldElem* row = T.data() + (t * sn + u) * sk;
      for (std::size_t q = 0; q < sk; ++q) {
        if (!row[q].is_zero()) out.coeffs[q] = F_.fma(s, row[q], out.coeffs[q]);
      }
    }
  }
  return out;
}

Matrix GradedAlgebraModel::left_mult_matrix(const SklElem& x, int n) const {
  int m = x.degree;
  check_window(m + n);
  std::size_t sn = dims_[n], sk = dims_[m + n];
  Matrix out(sn, Vec(sk));
  if (m == 0 || n == 0) {
    for (std::size_t u = 0; u < sn; ++u) out[u] = multiply(x, basis_elem(n, u)).coeffs;
    return out;
  }
  const Vec& T = tensors_[m][n];
  for (std::size_t t = 0; t < x.coeffs.size(); ++t) {
    FieldElem s = x.coeffs[t];
    if (s.is_zero()) continue;
    for (std::size_t u = 0; u < sn; ++u) {
      const FieldElem* row = T.data() + (t * sn + u) * sk;
      Vec& dst = out[u];
      for (std::size_t q = 0; q < sk; ++q) {
        if (!row[q].is_zero()) dst[q] = F_.fma(s, row[q], dst[q]);
      }
    }
  }
  return out;
}

Matrix GradedAlgebraModel::right_mult_matrix(const SklElem& y, int m) const {
  int n = y.degree;
  check_window(m + n);
  std::size_t sm = dims_[m], sn = dims_[n], sk = dims_[m + n];
  Matrix out(sm, Vec(sk));
  if (m == 0 || n == 0) {
    for (std::size_t t = 0; t < sm; ++t) out[t] = multiply(basis_elem(m, t), y).coeffs;
    return out;
  }
  const Vec& T = tensors_[m][n];
  for (std::size_t t = 0; t < sm; ++t) {
    Vec& dst = out[t];
    for (std::size_t u = 0; u < sn; ++u) {
      FieldElem s = y.coeffs[u];
      if (s.is_zero()) continue;
      const FieldElem* row = T.data() + (t * sn + u) * sk;
      for (std::size_t q = 0; q < sk; ++q) {
        if (!row[q].is_zero()) dst[q] = F_.fma(s, row[q], dst[q]);
      }
    }
  }
  return out;
}

Subspace GradedAlgebraModel::product(const Subspace& a, int m, const Subspace& b, int n) const {
  check_window(m + n);
  if (a.ambient_dim() != dim(m) || b.ambient_dim() != dim(n)) {
    throw Error(Errc::MixedAmbient, "product operands do not live in S_m and S_n");
  }
  std::size_t sk = dims_[m + n];
  EchelonBuilder out(F_, sk);
  for (const Vec& u : a.basis()) {
    if (out.is_full()) break;
    Matrix L = left_mult_matrix(SklElem{m, u}, n);
    for (const Vec& v : b.basis()) {
      out.insert(vec_mat(F_, v, L, sk));
      if (out.is_full()) break;
    }
  }
  return out.finish();
}

Subspace GradedAlgebraModel::g_multiples(int n) const {
  check_window(n);
  if (n < 3) return Subspace::zero(dims_[n]);
  return Subspace::span(F_, left_mult_matrix(g_, n - 3), dims_[n]);
}

void GradedAlgebraModel::attach_projection(const ThcrRing& ring) {
  int top = std::min(window_, ring.window());
  projection_.assign(static_cast<std::size_t>(top + 1), {});
  projection_[0] = Matrix{Vec{F_.one()}};
  for (int n = 1; n <= top; ++n) {
    Matrix P;
    P.reserve(dims_[n]);
    for (const Word& w : words_[n]) P.push_back(ring.word_coords(w));
    projection_[n] = std::move(P);
  }
}

const Matrix& GradedAlgebraModel::projection(int n) const {
  if (n < 0 || n > projection_window()) {
    throw Error(Errc::WindowExceeded, "no projection attached in degree " + std::to_string(n));
  }
  return projection_[n];
}

Vec GradedAlgebraModel::project_to_B(const SklElem& x) const {
  const Matrix& P = projection(x.degree);
  return vec_mat(F_, x.coeffs, P, P.front().size());
}

Subspace GradedAlgebraModel::preimage_space(int n, const SectionSpace& w) const {
  if (w.degree != n) throw Error(Errc::MixedAmbient, "section space degree differs from n");
  return preimage(F_, projection(n), dims_[n], w.coords);
}

Subspace GradedAlgebraModel::image_in_B(int n, const Subspace& v) const {
  const Matrix& P = projection(n);
  return image(F_, v, P, P.front().size());
}

const Vec& GradedAlgebraModel::tensor(int m, int n) const {
  check_window(m + n);
  return tensors_.at(m).at(n);
}

GradedAlgebraModel::Parts GradedAlgebraModel::parts() const {
  return Parts{F_.modulus(), a_, b_, c_, window_, words_, reductions_, tensors_, g_, g_formula_, g_corrected_, centre_, projection_};
}

GradedAlgebraModel GradedAlgebraModel::from_parts(const Parts& p) {
  GradedAlgebraModel model{PrimeField(p.modulus)};
  model.a_ = p.a;
  model.b_ = p.b;
  model.c_ = p.c;
  model.window_ = p.window;
  model.words_ = p.words;
  model.reductions_ = p.reductions;
  model.tensors_ = p.tensors;
  model.g_ = p.g;
  model.g_formula_ = p.g_formula;
  model.g_corrected_ = p.g_corrected;
  model.centre_ = p.centre;
  model.projection_ = p.projection;
  model.dims_.clear();
  for (const auto& w : model.words_) model.dims_.push_back(w.size());
  return model;
}

bool operator==(const GradedAlgebraModel& x, const GradedAlgebraModel& y) {
  return x.F_ == y.F_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.window_ == y.window_ &&
         x.words_ == y.words_ && x.reductions_ == y.reductions_ && x.tensors_ == y.tensors_ && x.g_ == y.g_ &&
         x.g_formula_ == y.g_formula_ && x.g_corrected_ == y.g_corrected_ && x.centre_ == y.centre_ &&
         x.projection_ == y.projection_;
}

}  // namespace skw
