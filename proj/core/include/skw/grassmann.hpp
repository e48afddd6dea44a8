#pragma once

#include <cstdint>
#include <vector>

#include "skw/linalg.hpp"
#include "skw/session.hpp"
#include "skw/subalg.hpp"

namespace skw {

/// Subspaces of one common ambient space.
using SubspaceTuple = std::vector<Subspace>;

/// W_1 meet W_2 meet W_3 for three 6-dim subspaces of a 7-dim space.
/// Throws Error(DimMismatch) on other shapes and, when require_omega is
/// set, Error(NotInOmega) unless the intersection has dimension 4.
Subspace psi3(const PrimeField& F, const SubspaceTuple& t, bool require_omega = false);

/// Uniformly random subspace of the given dimension.
Subspace random_subspace(const PrimeField& F, std::size_t ambient, std::size_t dim, std::uint64_t seed);

/// Coordinates of V inside W (W's echelon basis). V must lie in W.
Subspace relative_coordinates(const PrimeField& F, const Subspace& w, const Subspace& v);

struct ThetaData {
  /// S(p)_1, S(p)_2, S(p)_3 inside S_1, S_2, S_3.
  SubspaceTuple base;
  /// S(p+q)_i inside S_i.
  SubspaceTuple absolute;
  /// S(p+q)_i in coordinates of S(p)_i: ambients 2, 4, 7.
  SubspaceTuple relative;
  /// X_i = {x in S(p)_3 : image vanishes on [p]_3 + q^{sigma^i}}, in S(p)_3 coordinates.
  SubspaceTuple x_triple;
};

/// theta(q) = (S(p+q)_1, S(p+q)_2, S(p+q)_3) for the base point p.
ThetaData theta(const Session& s, const Point& q, const Point& p);

/// dim k<Y_1, Y_2, Y_3>_n for Y_i inside S_i.
std::size_t mu_n(const GradedAlgebraModel& S, const Subspace& y1, const Subspace& y2, const Subspace& y3, int n);

}  // namespace skw
