#pragma once

#include "qpt/linalg.hpp"

#include <vector>

namespace qpt {

/// Skewsymmetric rational bilinear form W(a, b) = a^t L b on Z^m.
class Bicharacter {
 public:
  explicit Bicharacter(RatMat l);

  Eigen::Index dim() const { return l_.rows(); }
  const RatMat& matrix() const { return l_; }

  friend bool operator==(const Bicharacter& a, const Bicharacter& b) {
    return mat_eq(a.l_, b.l_);
  }

 private:
  RatMat l_;
};

/// Positive integer weights (d_1, ..., d_m) defining a Z-grading with
/// deg y_k = d_k.
class GradingVector {
 public:
  explicit GradingVector(IntVec d);

  Eigen::Index dim() const { return d_.size(); }
  const IntVec& entries() const { return d_; }

  friend bool operator==(const GradingVector& a, const GradingVector& b) {
    return vec_eq(a.d_, b.d_);
  }

 private:
  IntVec d_;
};

/// Saturated sublattice of Z^m with a canonical Hermite basis, so equality of
/// lattices is plain data comparison.
class Sublattice {
 public:
  /// Saturated kernel {x in Z^m | a x = 0}; a has m columns.
  static Sublattice kernel_of(const IntMat& a);

  /// Smallest saturated sublattice containing the given vectors.
  static Sublattice saturated_span(Eigen::Index dim, const std::vector<IntVec>& gens);

  Eigen::Index dim() const { return dim_; }
  Eigen::Index rank() const { return basis_.rows(); }
  const IntMat& basis() const { return basis_; }

  bool contains(const IntVec& v) const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.dim_ == b.dim_ && mat_eq(a.basis_, b.basis_);
  }

 private:
  Sublattice(Eigen::Index dim, IntMat basis);

  Eigen::Index dim_;
  IntMat basis_;                      // rank x dim, Hermite rows
  std::vector<Eigen::Index> pivots_;  // pivot column per row
};

/// W(alpha, beta) = alpha^t L beta.
Rat bichar_eval(const Bicharacter& omega, const ExpVec& alpha, const ExpVec& beta);

/// Saturated lattice of exponents pairing to zero with everything; the
/// corresponding monomials span the Poisson center of the Laurent ring.
Sublattice radical(const Bicharacter& omega);

/// Free generating set of the radical.
std::vector<ExpVec> center_generators(const Bicharacter& omega);

/// Weighted degree sum_k alpha_k d_k of an exponent vector.
Int weighted_degree(const GradingVector& d, const ExpVec& alpha);

}  // namespace qpt
