#include "skw/sections.hpp"

#include <set>
#include <string>

#include "skw/error.hpp"

namespace skw {

SectionElem twisted_product(const PrimeField& F, const SectionElem& u, const SectionElem& v) {
  SectionElem out;
  out.degree = u.degree + v.degree;
  for (const auto& [wu, cu] : u.terms) {
    for (const auto& [wv, cv] : v.terms) {
      Word w = wu;
      w.insert(w.end(), wv.begin(), wv.end());
      out.terms.emplace_back(std::move(w), F.mul(cu, cv));
    }
  }
  return out;
}

int orientation_check(const Curve& E, std::uint64_t seed, int samples) {
  const PrimeField& F = E.field();
  std::vector<Point> pts;
  for (int i = 0; i < samples; ++i) pts.push_back(E.find_point(seed + 7919ULL * static_cast<std::uint64_t>(i)));
  bool vanishes[2] = {true, true};
  for (int oi = 0; oi < 2; ++oi) {
    Point t = oi == 0 ? E.s() : E.neg(E.s());
    for (const Point& q : pts) {
      Point r = E.add(q, t);
      for (int i = 0; i < 3 && vanishes[oi]; ++i) {
        int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
        FieldElem val = F.mul(E.a(), F.mul(q.x[i], r.x[i1]));
        val = F.add(val, F.mul(E.b(), F.mul(q.x[i1], r.x[i])));
        val = F.add(val, F.mul(E.c(), F.mul(q.x[i2], r.x[i2])));
        if (!val.is_zero()) vanishes[oi] = false;
      }
    }
  }
  if (vanishes[0] == vanishes[1]) {
    throw Error(Errc::OrientationFailure, vanishes[0] ? "relations vanish under both twists"
                                                      : "relations vanish under neither twist");
  }
  return vanishes[0] ? 1 : -1;
}

ThcrRing::ThcrRing(const Curve& E, int window, std::uint64_t seed) : E_(E), window_(window) {
  if (window < 1) throw Error(Errc::WindowExceeded, "window_b must be at least 1");
  const PrimeField& F = E_.field();
  std::size_t count = static_cast<std::size_t>(3 * window + 1);
  Point gen = E_.find_point(seed ^ 0x51ac5ULL);
  Point twice = E_.add(gen, gen);
  std::set<Point> seen;
  std::set<Point> avoid;
  for (std::int64_t k = -8; k <= 8; ++k) avoid.insert(E_.mul(E_.s(), k));
  Point cur = gen;
  for (std::size_t guard = 0; samples_.size() < count; ++guard) {
    if (guard > 100 * count) throw Error(Errc::RankDeficit, "could not generate distinct sample points");
    if (!avoid.count(cur) && seen.insert(cur).second) samples_.push_back(cur);
    cur = E_.add(cur, twice);
  }
  orbits_.resize(samples_.size());
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    orbits_[i].push_back(samples_[i]);
    for (int k = 1; k <= window_; ++k) orbits_[i].push_back(E_.sigma(orbits_[i].back()));
  }

  words_.resize(static_cast<std::size_t>(window_ + 1));
  solve_cols_.resize(words_.size());
  solve_inv_.resize(words_.size());
  for (int n = 1; n <= window_; ++n) {
    std::vector<Word> candidates;
    if (n == 1) {
      for (std::uint8_t i = 0; i < 3; ++i) candidates.push_back(Word{i});
    } else {
      for (const Word& w : words_[n - 1]) {
        for (std::uint8_t j = 0; j < 3; ++j) {
          Word c = w;
          c.push_back(j);
          candidates.push_back(std::move(c));
        }
      }
    }
    EchelonBuilder rows(F, samples_.size());
    Matrix values;
    for (const Word& w : candidates) {
      Vec v = word_values(w);
      if (rows.insert(v)) {
        words_[n].push_back(w);
        values.push_back(std::move(v));
      }
      if (words_[n].size() == dim(n)) break;
    }
    if (words_[n].size() != dim(n)) {
      throw Error(Errc::RankDeficit, "B_" + std::to_string(n) + " has rank " + std::to_string(words_[n].size()) +
                                         " instead of " + std::to_string(dim(n)));
    }
    // Pick sample columns where the basis evaluation is invertible.
    EchelonBuilder cols(F, dim(n));
    for (std::size_t j = 0; j < samples_.size() && !cols.is_full(); ++j) {
      Vec col(dim(n));
      for (std::size_t r = 0; r < dim(n); ++r) col[r] = values[r][j];
      if (cols.insert(col)) solve_cols_[n].push_back(j);
    }
    Matrix sub(dim(n), Vec(dim(n)));
    for (std::size_t r = 0; r < dim(n); ++r) {
      for (std::size_t c = 0; c < dim(n); ++c) sub[r][c] = values[r][solve_cols_[n][c]];
    }
    auto inv = inverse(F, sub);
    if (!inv) throw Error(Errc::RankDeficit, "singular evaluation minor");
    solve_inv_[n] = std::move(*inv);
  }
}

void ThcrRing::check_degree(int n) const {
  if (n < 1 || n > window_) {
    throw Error(Errc::WindowExceeded, "degree " + std::to_string(n) + " outside B window " + std::to_string(window_));
  }
}

const std::vector<Word>& ThcrRing::basis_words(int n) const {
  check_degree(n);
  return words_[n];
}

SectionSpace ThcrRing::b_basis(int n) const {
  check_degree(n);
  return SectionSpace{n, Subspace::full(dim(n)), Divisor{}};
}

Vec ThcrRing::word_values(const Word& w, int shift) const {
  if (shift < 0 || shift + static_cast<int>(w.size()) > window_ + 1) {
    throw Error(Errc::WindowExceeded, "word evaluation beyond the sample orbit table");
  }
  const PrimeField& F = E_.field();
  Vec out(samples_.size());
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    FieldElem v = F.one();
    for (std::size_t k = 0; k < w.size(); ++k) v = F.mul(v, orbits_[i][shift + k].x[w[k]]);
    out[i] = v;
  }
  return out;
}

Vec ThcrRing::coords_from_values(int n, const Vec& values) const {
  check_degree(n);
  const PrimeField& F = E_.field();
  Vec picked(dim(n));
  for (std::size_t c = 0; c < dim(n); ++c) picked[c] = values[solve_cols_[n][c]];
  return vec_mat(F, picked, solve_inv_[n], dim(n));
}

Vec ThcrRing::word_coords(const Word& w) const {
  return coords_from_values(static_cast<int>(w.size()), word_values(w));
}

FieldElem ThcrRing::eval_word(const Word& w, const Point& q) const {
  const PrimeField& F = E_.field();
  FieldElem v = F.one();
  Point cur = q;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) cur = E_.sigma(cur);
    v = F.mul(v, cur.x[w[k]]);
  }
  return v;
}

Jet ThcrRing::eval_word(const Word& w, const JetPoint& q) const {
  JetRing R(E_.field(), q.order);
  Jet v = R.constant(E_.field().one());
  JetPoint cur = q;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) cur = E_.sigma(cur);
    v = R.mul(v, cur.coords[w[k]]);
  }
  return v;
}

FieldElem ThcrRing::eval(const SectionElem& s, const Point& q) const {
  const PrimeField& F = E_.field();
  FieldElem acc{};
  for (const auto& [w, c] : s.terms) acc = F.fma(c, eval_word(w, q), acc);
  return acc;
}

Jet ThcrRing::eval(const SectionElem& s, const JetPoint& q) const {
  JetRing R(E_.field(), q.order);
  Jet acc = R.constant(FieldElem{});
  for (const auto& [w, c] : s.terms) acc = R.add(acc, R.scale(c, eval_word(w, q)));
  return acc;
}

SectionSpace ThcrRing::vanishing_space(int n, const Divisor& e) const {
  check_degree(n);
  if (!e.is_effective()) throw Error(Errc::NonEffective, "vanishing divisor must be effective");
  std::int64_t deg = e.degree();
  if (deg >= 3 * n) {
    throw Error(Errc::ResidualDegreeZero,
                "deg e = " + std::to_string(deg) + " leaves no positive residual degree in B_" + std::to_string(n));
  }
  const std::vector<Word>& words = words_[n];
  Matrix functionals;
  for (const auto& [p, m] : e.terms()) {
    if (m > E_.options().jet_cap) {
      throw Error(Errc::JetCapExceeded, "multiplicity " + std::to_string(m) + " exceeds jet_cap");
    }
    JetRing R(E_.field(), static_cast<int>(m));
    std::vector<JetPoint> chain{E_.tangent_jet(p, static_cast<int>(m))};
    for (int k = 1; k < n; ++k) chain.push_back(E_.sigma(chain.back()));
    Matrix rows(static_cast<std::size_t>(m), Vec(words.size()));
    for (std::size_t b = 0; b < words.size(); ++b) {
      Jet v = R.constant(E_.field().one());
      for (std::size_t k = 0; k < words[b].size(); ++k) v = R.mul(v, chain[k].coords[words[b][k]]);
      for (std::int64_t r = 0; r < m; ++r) rows[r][b] = v.coeffs[r];
    }
    functionals.insert(functionals.end(), rows.begin(), rows.end());
  }
  SectionSpace out{n, annihilated_by(E_.field(), functionals, dim(n)), e};
  if (static_cast<std::int64_t>(out.dim()) != 3 * n - deg) {
    throw Error(Errc::RankDeficit, "vanishing space of dimension " + std::to_string(out.dim()) + ", expected " +
                                       std::to_string(3 * n - deg));
  }
  return out;
}

Matrix ThcrRing::evaluation_matrix(const SectionSpace& s) const {
  const PrimeField& F = E_.field();
  Matrix word_vals;
  for (const Word& w : basis_words(s.degree)) word_vals.push_back(word_values(w));
  Matrix out;
  for (const Vec& row : s.coords.basis()) out.push_back(vec_mat(F, row, word_vals, samples_.size()));
  return out;
}

SectionSpace ThcrRing::space_product(const SectionSpace& u, const SectionSpace& v) const {
  int m = u.degree, n = v.degree;
  check_degree(m + n);
  const PrimeField& F = E_.field();
  Matrix u_vals = evaluation_matrix(u);
  Matrix v_words;
  for (const Word& w : basis_words(n)) v_words.push_back(word_values(w, m));
  Matrix v_vals;
  for (const Vec& row : v.coords.basis()) v_vals.push_back(vec_mat(F, row, v_words, samples_.size()));
  EchelonBuilder rows(F, dim(m + n));
  for (const Vec& a : u_vals) {
    for (const Vec& b : v_vals) {
      Vec prod(samples_.size());
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = F.mul(a[i], b[i]);
      rows.insert(coords_from_values(m + n, prod));
    }
  }
  return SectionSpace{m + n, rows.finish(), u.divisor + twist(E_, v.divisor, m)};
}

SectionElem ThcrRing::element(const SectionSpace& s, std::size_t i) const {
  SectionElem out;
  out.degree = s.degree;
  const auto& words = basis_words(s.degree);
  const Vec& row = s.coords.basis().at(i);
  for (std::size_t b = 0; b < words.size(); ++b) {
    if (!row[b].is_zero()) out.terms.emplace_back(words[b], row[b]);
  }
  return out;
}

SectionSpace ThcrRing::from_elements(int n, const std::vector<SectionElem>& elems) const {
  check_degree(n);
  const PrimeField& F = E_.field();
  Matrix rows;
  for (const SectionElem& s : elems) {
    if (s.degree != n) throw Error(Errc::MixedLength, "section degree mismatch");
    Vec vals(samples_.size());
    for (const auto& [w, c] : s.terms) {
      Vec wv = word_values(w);
      for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = F.fma(c, wv[i], vals[i]);
    }
    rows.push_back(coords_from_values(n, vals));
  }
  return SectionSpace{n, Subspace::span(F, rows, dim(n)), Divisor{}};
}

}  // namespace skw
