#pragma once

#include "qpt/lattice.hpp"

#include <optional>

namespace qpt {

/// m x n exchange matrix whose principal n x n part is skew-symmetrizable;
/// the coprime positive symmetrizer is computed on construction.
class ExchangeMatrix {
 public:
  explicit ExchangeMatrix(IntMat btilde);

  Eigen::Index rows() const { return b_.rows(); }    // m
  Eigen::Index cols() const { return b_.cols(); }    // n (mutable directions)
  const IntMat& matrix() const { return b_; }
  const IntVec& symmetrizer() const { return sym_; }

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    return mat_eq(a.b_, b.b_);
  }

 private:
  IntMat b_;
  IntVec sym_;
};

/// Returns (d_1, ..., d_n) when Lambda^t B has diagonal principal part with
/// positive entries and vanishing rows below; otherwise nullopt.
std::optional<IntVec> is_compatible(const IntMat& lambda, const ExchangeMatrix& b);

/// The m x m elementary mutation matrix E_k (k is 0-based).
IntMat e_matrix(const ExchangeMatrix& b, Eigen::Index k);

/// Lambda' = E_k^t Lambda E_k.
IntMat mutate_lambda(const IntMat& lambda, const ExchangeMatrix& b, Eigen::Index k);

/// Matrix mutation in direction k (0-based):
/// b'_ij = -b_ij if i == k or j == k, else b_ij + sgn(b_ik) max(0, b_ik b_kj).
ExchangeMatrix mutate_b(const ExchangeMatrix& b, Eigen::Index k);

/// Solves for an integer skewsymmetric Lambda with Lambda^t B = [diag(t d); 0]
/// for some positive integer t scaling the coprime symmetrizer d. Among the
/// rational solution space the returned representative greedily minimizes the
/// maximum absolute entry, then is scaled to a primitive integer solution.
std::optional<IntMat> find_compatible_lambda(const ExchangeMatrix& b);

/// The toric lattice: saturated integer kernel of B^t.
Sublattice toric_lattice(const ExchangeMatrix& b);

/// The bicharacter of the log-canonical bracket {y_j, y_k} = lambda_jk y_j y_k.
Bicharacter gsv_bicharacter(const IntMat& lambda);

}  // namespace qpt
