#pragma once

#include "qpt/numeric.hpp"

namespace qpt {

/// Unique row Hermite form of the lattice spanned by the rows of `a`:
/// staircase pivots, positive pivot entries, entries above each pivot reduced
/// into [0, pivot). Zero rows are dropped.
IntMat hnf_rows(IntMat a);

/// Basis, as Hermite-form rows, of the saturated integer kernel
/// {x in Z^m | a x = 0}.
IntMat integer_kernel(const IntMat& a);

/// v divided by the gcd of its entries; the zero vector is returned as is.
IntVec primitive(IntVec v);

struct RationalSolution {
  bool solvable = false;
  RatVec particular;  // one solution, free variables set to 0
  RatMat null_basis;  // columns span the homogeneous solution space
};

/// Exact Gauss-Jordan solve of a x = b over the rationals.
RationalSolution solve_rational(const RatMat& a, const RatVec& b);

/// Rank of a rational matrix (exact elimination).
Eigen::Index rank_rational(const RatMat& a);

/// Exact feasibility of a c = b with c >= 0 (phase-1 simplex, Bland's rule).
bool nonneg_solvable(const RatMat& a, const RatVec& b);

}  // namespace qpt
