#include "skw/subalg.hpp"

#include <string>

#include "skw/error.hpp"

namespace skw {

namespace {

// Inserts every product a * b, a in A (degree m), b in B (degree n).
void add_products(const GradedAlgebraModel& S, EchelonBuilder& out, const Subspace& a, int m, const Subspace& b,
                  int n) {
  std::size_t cols = S.dim(m + n);
  for (const Vec& u : a.basis()) {
    if (out.is_full()) return;
    Matrix L = S.left_mult_matrix(SklElem{m, u}, n);
    for (const Vec& v : b.basis()) {
      out.insert(vec_mat(S.field(), v, L, cols));
      if (out.is_full()) return;
    }
  }
}

void check_generator(const GradedAlgebraModel& S, const Generator& g, int window) {
  if (g.degree < 1 || g.degree > window) {
    throw Error(Errc::WindowExceeded, "generator degree " + std::to_string(g.degree) + " outside window");
  }
  if (g.space.ambient_dim() != S.dim(g.degree)) {
    throw Error(Errc::MixedAmbient, "generator of degree " + std::to_string(g.degree) + " not inside S_n");
  }
}

Divisor single(const Point& p) { return Divisor::point(p); }

}  // namespace

std::vector<std::size_t> SubalgebraWindow::hilbert() const {
  std::vector<std::size_t> out;
  for (const auto& piece : pieces) out.push_back(piece.dim());
  return out;
}

SubalgebraWindow generate(const GradedAlgebraModel& S, const std::vector<Generator>& gens, int window) {
  if (window < 0 || window > S.window()) {
    throw Error(Errc::WindowExceeded, "subalgebra window " + std::to_string(window) + " exceeds S window");
  }
  for (const auto& g : gens) check_generator(S, g, window);
  SubalgebraWindow R;
  R.window = window;
  R.gens = gens;
  R.pieces.push_back(Subspace::full(1));
  for (int n = 1; n <= window; ++n) {
    EchelonBuilder b(S.field(), S.dim(n));
    for (const auto& g : gens) {
      if (g.degree == n) {
        for (const Vec& v : g.space.basis()) b.insert(v);
      }
    }
    // Every product of generators starts with a generator.
    for (const auto& g : gens) {
      if (g.degree < n) add_products(S, b, g.space, g.degree, R.pieces[static_cast<std::size_t>(n - g.degree)], n - g.degree);
    }
    R.pieces.push_back(b.finish());
  }
  R.closed_to = window;
  R.certified_to = window;
  return R;
}

bool is_closed(const GradedAlgebraModel& S, const SubalgebraWindow& R, int upto) {
  const PrimeField& F = S.field();
  for (int total = 2; total <= upto; ++total) {
    for (int m = 1; m < total; ++m) {
      Subspace prod = S.product(R[m], m, R[total - m], total - m);
      if (!subspace_contains(F, R[total], prod)) return false;
    }
  }
  return true;
}

bool same_pieces(const SubalgebraWindow& x, const SubalgebraWindow& y, int lo, int hi) {
  for (int n = lo; n <= hi; ++n) {
    if (!(x[n] == y[n])) return false;
  }
  return true;
}

Subspace g_times(const GradedAlgebraModel& S, const Subspace& v, int n) {
  std::size_t cols = S.dim(n + 3);
  return image(S.field(), v, S.left_mult_matrix(S.g(), n), cols);
}

std::vector<bool> check_g_divisible(const GradedAlgebraModel& S, const SubalgebraWindow& R) {
  std::vector<bool> out;
  for (int n = 0; n <= R.closed_to; ++n) {
    if (n < 3) {
      out.push_back(true);
      continue;
    }
    Subspace meet = subspace_meet(S.field(), {R[n], S.g_multiples(n)});
    out.push_back(meet == g_times(S, R[n - 3], n - 3));
  }
  return out;
}

SubalgebraWindow g_hull(const GradedAlgebraModel& S, const SubalgebraWindow& R, int k_max) {
  int certified = R.window - 3 * k_max;
  if (certified < 0) {
    throw Error(Errc::WindowExceeded, "hull margin window - 3 k_max is negative");
  }
  const PrimeField& F = S.field();
  SubalgebraWindow H = R;
  for (int pass = 0; pass < k_max; ++pass) {
    std::vector<Generator> gens;
    bool grew = false;
    for (int n = 1; n <= H.window; ++n) {
      Subspace piece = H[n];
      if (n + 3 <= H.window) {
        Subspace pre = preimage(F, S.right_mult_matrix(S.g(), n), S.dim(n), H[n + 3]);
        Subspace sum = subspace_sum(F, piece, pre);
        grew = grew || !(sum == piece);
        piece = std::move(sum);
      }
      if (!piece.empty()) gens.push_back({n, std::move(piece)});
    }
    if (!grew) break;
    SubalgebraWindow next = generate(S, gens, H.window);
    next.gens = R.gens;
    H = std::move(next);
  }
  H.certified_to = std::min(R.certified_to, certified);
  return H;
}

SubalgebraWindow veronese(const GradedAlgebraModel& S, const SubalgebraWindow& R, int d) {
  if (d < 1) throw Error(Errc::ValidationError, "Veronese step must be positive");
  SubalgebraWindow V;
  V.window = R.window;
  V.closed_to = R.closed_to;
  V.certified_to = R.certified_to;
  for (int n = 0; n <= R.window; ++n) {
    V.pieces.push_back(n % d == 0 ? R[n] : Subspace::zero(S.dim(n)));
  }
  return V;
}

std::vector<std::size_t> image_dims(const GradedAlgebraModel& S, const SubalgebraWindow& R) {
  std::vector<std::size_t> out;
  int top = std::min(R.window, S.projection_window());
  for (int n = 0; n <= top; ++n) out.push_back(S.image_in_B(n, R[n]).dim());
  return out;
}

SubalgebraWindow construct_blowup(const Session& s, const Divisor& d, int window) {
  if (!d.is_effective()) throw Error(Errc::NonEffective, "blowup divisor must be effective");
  if (d.degree() > 2) throw Error(Errc::ValidationError, "blowup divisor has degree above 2");
  std::vector<Generator> gens;
  for (int i = 1; i <= 3 && i <= window; ++i) {
    gens.push_back({i, s.preimage(i, truncated(s.curve(), d, i))});
  }
  return generate(s.model(), gens, window);
}

SubalgebraWindow construct_T_blowup(const Session& s, const Divisor& d, int window) {
  if (!d.is_effective()) throw Error(Errc::NonEffective, "blowup divisor must be effective");
  if (d.degree() > 7) throw Error(Errc::ValidationError, "T blowup divisor has degree above 7");
  return generate(s.model(), {{3, s.preimage(3, d)}}, window);
}

namespace {

Divisor vblow_divisor(const Curve& E, const Point& p) {
  return single(p) - single(E.sigma_pow(p, 1)) + single(E.sigma_pow(p, 2));
}

}  // namespace

VblowExample construct_vblow_example(const Session& s, const Point& p, int window) {
  const Curve& E = s.curve();
  const GradedAlgebraModel& S = s.model();
  VblowExample ex;
  ex.x = vblow_divisor(E, p);
  Point p2 = E.sigma_pow(p, 2);
  ex.x1 = s.preimage(1, single(p) + single(p2));
  ex.x2 = S.product(s.point_space(p), 1, s.point_space(p2), 1);
  ex.x3 = s.preimage(3, truncated(E, ex.x, 3));
  ex.u = generate(S, {{1, ex.x1}, {2, ex.x2}, {3, ex.x3}}, window);
  return ex;
}

VblowExample construct_vblow_prime(const Session& s, const Point& p, int window) {
  const Curve& E = s.curve();
  VblowExample ex;
  ex.x = vblow_divisor(E, p);
  ex.x1 = s.preimage(1, single(p) + single(E.sigma_pow(p, 2)));
  ex.x2 = s.preimage(2, truncated(E, ex.x, 2));
  ex.x3 = s.preimage(3, truncated(E, ex.x, 3));
  ex.u = generate(s.model(), {{1, ex.x1}, {2, ex.x2}, {3, ex.x3}}, window);
  return ex;
}

ModuleWindow vblow_module(const Session& s, const SubalgebraWindow& sp, const Point& p) {
  const GradedAlgebraModel& S = s.model();
  Subspace y = S.product(s.point_space(p), 1, Subspace::full(3), 1);
  ModuleWindow M;
  M.window = sp.window;
  for (int n = 0; n <= sp.window; ++n) {
    EchelonBuilder b(S.field(), S.dim(n));
    for (const Vec& v : sp[n].basis()) b.insert(v);
    if (n >= 2) add_products(S, b, y, 2, sp[n - 2], n - 2);
    M.pieces.push_back(b.finish());
  }
  return M;
}

SgExample construct_sg_example(const GradedAlgebraModel& S, int window) {
  if (window < 4) throw Error(Errc::WindowExceeded, "S^g example needs window at least 4");
  const PrimeField& F = S.field();
  Subspace gs1 = g_times(S, Subspace::full(3), 1);
  Subspace kg = Subspace::span(F, Matrix{S.g().coeffs}, S.dim(3));
  SgExample ex;
  ex.sg = generate(S, {{4, gs1}}, window);
  ex.u = generate(S, {{3, kg}, {4, gs1}}, window);
  return ex;
}

SubalgebraWindow windowed_end(const GradedAlgebraModel& S, const ModuleWindow& M, int upto) {
  if (upto > M.window) throw Error(Errc::WindowExceeded, "End window exceeds module window");
  const PrimeField& F = S.field();
  SubalgebraWindow out;
  out.window = upto;
  out.closed_to = 0;
  out.certified_to = upto;
  std::vector<Matrix> ann(static_cast<std::size_t>(M.window + 1));
  for (int n = 0; n <= M.window; ++n) ann[n] = M[n].annihilator(F);
  for (int n = 0; n <= upto; ++n) {
    std::size_t sn = S.dim(n);
    EchelonBuilder conditions(F, sn);
    for (int m = 0; n + m <= M.window && !conditions.is_full(); ++m) {
      const Matrix& A = ann[n + m];
      if (A.empty()) continue;
      for (const Vec& y : M[m].basis()) {
        // Row t of R is b_t * y; each functional f of M_{n+m}^perp gives R f^T.
        Matrix R = S.right_mult_matrix(SklElem{m, y}, n);
        for (const Vec& f : A) {
          Vec cond(sn);
          for (std::size_t t = 0; t < sn; ++t) {
            FieldElem acc = F.zero();
            for (std::size_t q = 0; q < f.size(); ++q) {
              if (!f[q].is_zero() && !R[t][q].is_zero()) acc = F.fma(R[t][q], f[q], acc);
            }
            cond[t] = acc;
          }
          conditions.insert(std::move(cond));
          if (conditions.is_full()) break;
        }
        if (conditions.is_full()) break;
      }
    }
    out.pieces.push_back(annihilated_by(F, conditions.finish().basis(), sn));
  }
  return out;
}

bool acts_on(const GradedAlgebraModel& S, const SubalgebraWindow& R, const ModuleWindow& M) {
  const PrimeField& F = S.field();
  int top = std::min(R.window, M.window);
  for (int n = 1; n <= top; ++n) {
    for (int m = 0; n + m <= top; ++m) {
      if (!subspace_contains(F, M[n + m], S.product(R[n], n, M[m], m))) return false;
    }
  }
  return true;
}

}  // namespace skw
