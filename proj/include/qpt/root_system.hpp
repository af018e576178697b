#pragma once

#include "qpt/lattice.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qpt {

/// Cartan data for a semisimple type, Bourbaki numbering per component.
/// Conventions (frozen; see README): c_ij = <alpha_j, alpha_i^vee>; the short
/// root comes last in type B and first in type G2; d_i = |alpha_i|^2 / 2 with
/// short roots of norm 2.
///
/// Weights are stored in fundamental-weight coordinates, roots in simple-root
/// coordinates; C converts root coordinates to weight coordinates.
class CartanData {
 public:
  static CartanData from_string(std::string_view type);  // "A2", "B3", "A1xG2"

  Eigen::Index rank() const { return cartan_.rows(); }
  const IntMat& cartan() const { return cartan_; }
  const IntVec& symmetrizer() const { return sym_; }
  const std::string& name() const { return name_; }
  long long positive_root_count() const { return n_pos_; }

 private:
  CartanData() = default;

  std::string name_;
  IntMat cartan_;
  IntVec sym_;
  long long n_pos_ = 0;
};

/// s_i acting on a weight in fundamental coordinates.
IntVec simple_reflect(const CartanData& cd, Eigen::Index i, const IntVec& weight);

/// s_i acting on a root-lattice vector in simple-root coordinates.
IntVec root_reflect(const CartanData& cd, Eigen::Index i, const IntVec& root);

/// Product s_{i_1} ... s_{i_L} applied to a weight (rightmost factor first).
IntVec apply_word(const CartanData& cd, const std::vector<int>& word, IntVec weight);

/// Same action on root coordinates.
IntVec apply_word_root(const CartanData& cd, const std::vector<int>& word, IntVec root);

/// Reduced word for the longest element by rho-descent: repeatedly reflect at
/// the smallest index with positive coordinate. Indices are 0-based.
std::vector<int> w0_reduced_word(const CartanData& cd);

/// A word is accepted iff it has full length and sends rho to -rho.
bool is_reduced_w0_word(const CartanData& cd, const std::vector<int>& word);

struct ConvexOrder {
  std::vector<int> word;      // reduced word for the longest element, 0-based
  std::vector<IntVec> roots;  // beta_k in simple-root coordinates, convex order
};

/// beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}); throws on non-reduced or
/// wrong-target words.
ConvexOrder positive_roots_convex(const CartanData& cd, const std::vector<int>& word);

/// Sum of simple-root coordinates.
Int height(const IntVec& root);

/// C * root: simple-root to fundamental-weight coordinates.
IntVec root_to_weight(const CartanData& cd, const IntVec& root);

/// C^{-1} * weight; throws unless the weight lies in the root lattice.
IntVec weight_to_root(const CartanData& cd, const IntVec& weight);

/// <weight, root> for weight in fundamental and root in simple coordinates:
/// sum_i w_i d_i n_i. Always an integer.
Int pairing_weight_root(const CartanData& cd, const IntVec& weight, const IntVec& root);

/// Invariant form on two root-lattice vectors (integer).
Int form_root_root(const CartanData& cd, const IntVec& r1, const IntVec& r2);

/// Invariant form on two weights (rational in general).
Rat form_weight_weight(const CartanData& cd, const IntVec& w1, const IntVec& w2);

struct TauData {
  std::vector<int> tau;  // the diagram involution alpha_{tau(i)} = -w0(alpha_i)
  std::vector<int> fixed;          // O_1
  std::vector<int> orbit_reps;     // O_2, smaller index per 2-orbit
};

TauData tau_involution(const CartanData& cd);

/// Row i holds the simple-root coordinates of w_i - w0(w_i); entries are
/// nonnegative and every column has a nonzero entry.
IntMat m_coefficients(const CartanData& cd);

/// D_k = <coweight, beta_k> (coweight in fundamental-coweight coordinates);
/// throws if any degree fails to be positive.
GradingVector coweight_grading(const CartanData& cd, const IntVec& coweight,
                               const ConvexOrder& order);

/// Random commuting-generator shuffle of a reduced word; the result is
/// validated and always a reduced word for the longest element.
std::vector<int> shuffle_word(const CartanData& cd, std::vector<int> word,
                              SplitMix64& rng, int swaps);

}  // namespace qpt
