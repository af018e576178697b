#include "qpt/schubert.hpp"

namespace qpt {

namespace {

struct WordGeometry {
  std::vector<IntVec> prefix_w;  // s_{i_1} ... s_{i_{k-1}} applied to w_{i_k}
  std::vector<IntVec> w0_w;      // w0 applied to w_i, per simple index i
};

WordGeometry word_geometry(const CartanData& cd, const std::vector<int>& word) {
  WordGeometry out;
  out.prefix_w.reserve(word.size());
  for (size_t k = 0; k < word.size(); ++k) {
    IntVec w = IntVec::Zero(cd.rank());
    w(word[k]) = Int(1);
    for (size_t t = k; t-- > 0;) w = simple_reflect(cd, word[t], w);
    out.prefix_w.push_back(std::move(w));
  }
  out.w0_w.reserve(static_cast<size_t>(cd.rank()));
  for (Eigen::Index i = 0; i < cd.rank(); ++i) {
    IntVec w = IntVec::Zero(cd.rank());
    w(i) = Int(1);
    out.w0_w.push_back(apply_word(cd, word, w));
  }
  return out;
}

void require_word(const CartanData& cd, const std::vector<int>& word) {
  if (!is_reduced_w0_word(cd, word))
    throw PreconditionError("not a reduced word for the longest element");
}

}  // namespace

Bicharacter minor_bracket_matrix(const CartanData& cd, const std::vector<int>& word) {
  require_word(cd, word);
  const auto geo = word_geometry(cd, word);
  const auto n = static_cast<Eigen::Index>(word.size());
  RatMat omega = RatMat::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const IntVec u = geo.prefix_w[static_cast<size_t>(j)] + geo.w0_w[word[static_cast<size_t>(j)]];
    for (Eigen::Index k = j + 1; k < n; ++k) {
      const IntVec v =
          geo.prefix_w[static_cast<size_t>(k)] - geo.w0_w[word[static_cast<size_t>(k)]];
      const Int entry = -pairing_weight_root(cd, u, weight_to_root(cd, v));
      omega(j, k) = Rat(entry);
      omega(k, j) = Rat(-entry);
    }
  }
  return Bicharacter(std::move(omega));
}

std::vector<ExpVec> predicted_center(const CartanData& cd, const std::vector<int>& word) {
  require_word(cd, word);
  const auto n = static_cast<Eigen::Index>(word.size());
  std::vector<int> first(static_cast<size_t>(cd.rank()), -1);
  for (size_t k = 0; k < word.size(); ++k)
    if (first[static_cast<size_t>(word[k])] < 0) first[static_cast<size_t>(word[k])] = static_cast<int>(k);
  const TauData tau = tau_involution(cd);
  std::vector<ExpVec> out;
  for (int i : tau.fixed) {
    ExpVec v = IntVec::Zero(n);
    v(first[static_cast<size_t>(i)]) = Int(1);
    out.push_back(std::move(v));
  }
  for (int l : tau.orbit_reps) {
    ExpVec v = IntVec::Zero(n);
    v(first[static_cast<size_t>(l)]) = Int(1);
    v(first[static_cast<size_t>(tau.tau[static_cast<size_t>(l)])]) = Int(1);
    out.push_back(std::move(v));
  }
  return out;
}

bool verify_center(const CartanData& cd, const std::vector<int>& word) {
  const Bicharacter omega = minor_bracket_matrix(cd, word);
  const auto predicted = predicted_center(cd, word);
  const Sublattice span =
      Sublattice::saturated_span(static_cast<Eigen::Index>(word.size()), predicted);
  return span == radical(omega);
}

Bicharacter ls_leading_matrix(const CartanData& cd, const std::vector<int>& word) {
  const ConvexOrder order = positive_roots_convex(cd, word);
  const auto n = static_cast<Eigen::Index>(word.size());
  RatMat m = RatMat::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = j + 1; k < n; ++k) {
      const Int entry = form_root_root(cd, order.roots[static_cast<size_t>(j)],
                                       order.roots[static_cast<size_t>(k)]);
      m(j, k) = Rat(entry);
      m(k, j) = Rat(-entry);
    }
  return Bicharacter(std::move(m));
}

GradingVector minor_degrees(const CartanData& cd, const std::vector<int>& word) {
  require_word(cd, word);
  const auto geo = word_geometry(cd, word);
  IntVec d(static_cast<Eigen::Index>(word.size()));
  for (size_t k = 0; k < word.size(); ++k) {
    const IntVec diff = geo.prefix_w[k] - geo.w0_w[static_cast<size_t>(word[k])];
    d(static_cast<Eigen::Index>(k)) = height(weight_to_root(cd, diff));
  }
  return GradingVector(std::move(d));
}

SchubertTorus make_schubert_torus(const CartanData& cd, const std::vector<int>& word) {
  SchubertTorus out{cd,
                    positive_roots_convex(cd, word),
                    minor_bracket_matrix(cd, word),
                    {},
                    minor_degrees(cd, word)};
  out.minor_index.assign(static_cast<size_t>(cd.rank()), -1);
  for (size_t k = 0; k < word.size(); ++k)
    if (out.minor_index[static_cast<size_t>(word[k])] < 0)
      out.minor_index[static_cast<size_t>(word[k])] = static_cast<int>(k);
  return out;
}

}  // namespace qpt
