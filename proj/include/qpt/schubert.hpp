#pragma once

#include "qpt/root_system.hpp"

#include <vector>

namespace qpt {

/// Quadratic Poisson data of the minor cluster attached to a reduced word for
/// the longest element: the N x N bracket matrix of the minors, the predicted
/// center, and a positive grading.
struct SchubertTorus {
  CartanData cartan;
  ConvexOrder order;
  Bicharacter omega;              // minor bracket matrix, dimension N
  std::vector<int> minor_index;   // k(i): first position of index i in the word
  GradingVector degrees;
};

/// Entry (j,k), j < k:
///   -< (prefix_j + w0) w_{i_j}, (prefix_k - w0) w_{i_k} >,
/// lower half by skewsymmetry; all entries are integers.
Bicharacter minor_bracket_matrix(const CartanData& cd, const std::vector<int>& word);

/// Generators delta_{k(i)} for fixed points of tau and
/// delta_{k(l)} + delta_{k(tau(l))} for 2-orbit representatives.
std::vector<ExpVec> predicted_center(const CartanData& cd, const std::vector<int>& word);

/// True iff the saturated span of the predicted generators equals the radical
/// of the minor bracket matrix.
bool verify_center(const CartanData& cd, const std::vector<int>& word);

/// Leading quadratic skeleton of the straightening bracket on the
/// root-coordinate functions: entry (j,k) = <beta_j, beta_k> for j < k.
Bicharacter ls_leading_matrix(const CartanData& cd, const std::vector<int>& word);

/// D_k = height of (prefix_k - w0) w_{i_k}; each entry is positive.
GradingVector minor_degrees(const CartanData& cd, const std::vector<int>& word);

SchubertTorus make_schubert_torus(const CartanData& cd, const std::vector<int>& word);

}  // namespace qpt
