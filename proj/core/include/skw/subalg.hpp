#pragma once

#include <cstddef>
#include <vector>

#include "skw/divisor.hpp"
#include "skw/linalg.hpp"
#include "skw/session.hpp"
#include "skw/sklyanin.hpp"

namespace skw {

struct Generator {
  int degree = 0;
  Subspace space;
};

/// Graded subspaces R_0..R_window of S, closed under multiplication up to
/// closed_to. Claims are only made up to certified_to.
struct SubalgebraWindow {
  int window = 0;
  std::vector<Subspace> pieces;
  std::vector<Generator> gens;
  int closed_to = 0;
  int certified_to = 0;

  const Subspace& operator[](int n) const { return pieces.at(static_cast<std::size_t>(n)); }
  std::vector<std::size_t> hilbert() const;
};

/// Right module M_0..M_window inside S.
struct ModuleWindow {
  int window = 0;
  std::vector<Subspace> pieces;

  const Subspace& operator[](int n) const { return pieces.at(static_cast<std::size_t>(n)); }
};

/// Smallest graded subspace containing the generators and closed under
/// products, up to `window`. Throws Error(WindowExceeded).
SubalgebraWindow generate(const GradedAlgebraModel& S, const std::vector<Generator>& gens, int window);
/// Spot check R_m R_n inside R_{m+n} for all m + n <= upto.
bool is_closed(const GradedAlgebraModel& S, const SubalgebraWindow& R, int upto);
/// Piecewise equality for degrees lo..hi.
bool same_pieces(const SubalgebraWindow& x, const SubalgebraWindow& y, int lo, int hi);

/// {g x : x in V} for V inside S_n.
Subspace g_times(const GradedAlgebraModel& S, const Subspace& v, int n);
/// Entry n: R_n meet gS_{n-3} equals g R_{n-3}; entries cover 0..closed_to.
std::vector<bool> check_g_divisible(const GradedAlgebraModel& S, const SubalgebraWindow& R);
/// Iterated {x : x g in R} closure. certified_to becomes window - 3 k_max;
/// throws Error(WindowExceeded) if that is below 0.
SubalgebraWindow g_hull(const GradedAlgebraModel& S, const SubalgebraWindow& R, int k_max = 3);
/// Pieces at multiples of d, zero elsewhere; still indexed by S-degree.
SubalgebraWindow veronese(const GradedAlgebraModel& S, const SubalgebraWindow& R, int d);
/// Image of R_n in B_n, n <= projection window.
std::vector<std::size_t> image_dims(const GradedAlgebraModel& S, const SubalgebraWindow& R);

/// S(d) = k<V_1, V_2, V_3> with V_i the preimage of H^0(L_i(-[d]_i)).
SubalgebraWindow construct_blowup(const Session& s, const Divisor& d, int window);
/// T(d) = k<T(d)_1> with T(d)_1 the preimage in S_3 of H^0(L_3(-d)).
SubalgebraWindow construct_T_blowup(const Session& s, const Divisor& d, int window);

/// Pieces of the virtual blowup example at p, with x = p - p^sigma + p^{sigma^2}.
struct VblowExample {
  Divisor x;
  Subspace x1, x2, x3;
  SubalgebraWindow u;
};
VblowExample construct_vblow_example(const Session& s, const Point& p, int window);
/// Same x, with X'_2 the full preimage of H^0(L_2(-[x]_2)).
VblowExample construct_vblow_prime(const Session& s, const Point& p, int window);
/// M = R + S(p)_1 S_1 R for R = S(p).
ModuleWindow vblow_module(const Session& s, const SubalgebraWindow& sp, const Point& p);

/// S^g = k<g x_0, g x_1, g x_2> and U = k<S^g, g>.
struct SgExample {
  SubalgebraWindow sg;
  SubalgebraWindow u;
};
SgExample construct_sg_example(const GradedAlgebraModel& S, int window);

/// E_n = {x in S_n : x M_m inside M_{n+m} for m <= window - n}, n <= upto.
SubalgebraWindow windowed_end(const GradedAlgebraModel& S, const ModuleWindow& M, int upto);
/// x M_m inside M_{n+m} for all x in R_n, m + n <= window.
bool acts_on(const GradedAlgebraModel& S, const SubalgebraWindow& R, const ModuleWindow& M);

}  // namespace skw
