#include "qpt/linalg.hpp"

#include <vector>

namespace qpt {

IntMat hnf_rows(IntMat a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c among rows [r, rows): the minimal nonzero entry
    // strictly decreases until the column is cleared below the pivot.
    while (true) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = r; i < rows; ++i)
        if (!a(i, c).is_zero() && (piv < 0 || abs(a(i, c)) < abs(a(piv, c)))) piv = i;
      if (piv < 0) break;
      if (piv != r) a.row(piv).swap(a.row(r));
      bool clean = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (a(i, c).is_zero()) continue;
        const Int q = a(i, c) / a(r, c);
        if (!q.is_zero()) a.row(i) -= q * a.row(r);
        if (!a(i, c).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c).is_zero()) continue;
    if (a(r, c).sign() < 0) a.row(r) = -a.row(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      const Int q = floor_div(a(i, c), a(r, c));
      if (!q.is_zero()) a.row(i) -= q * a.row(r);
    }
    ++r;
  }
  return a.topRows(r);
}

IntMat integer_kernel(const IntMat& a_in) {
  IntMat w = a_in;
  const Eigen::Index n = w.rows(), m = w.cols();
  IntMat u = IntMat::Identity(m, m);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < n && r < m; ++i) {
    while (true) {
      Eigen::Index piv = -1;
      for (Eigen::Index c = r; c < m; ++c)
        if (!w(i, c).is_zero() && (piv < 0 || abs(w(i, c)) < abs(w(i, piv)))) piv = c;
      if (piv < 0) break;
      if (piv != r) {
        w.col(piv).swap(w.col(r));
        u.col(piv).swap(u.col(r));
      }
      bool clean = true;
      for (Eigen::Index c = r + 1; c < m; ++c) {
        if (w(i, c).is_zero()) continue;
        const Int q = w(i, c) / w(i, r);
        if (!q.is_zero()) {
          w.col(c) -= q * w.col(r);
          u.col(c) -= q * u.col(r);
        }
        if (!w(i, c).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (!w(i, r).is_zero()) ++r;
  }
  // Columns [r, m) of u span {x | a x = 0}; the kernel of an integer matrix
  // is saturated by construction.
  IntMat basis(m - r, m);
  for (Eigen::Index c = r; c < m; ++c) basis.row(c - r) = u.col(c).transpose();
  return hnf_rows(std::move(basis));
}

IntVec primitive(IntVec v) {
  Int g(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  if (g.is_zero() || g == Int(1)) return v;
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = v(i) / g;
  return v;
}

RationalSolution solve_rational(const RatMat& a_in, const RatVec& b_in) {
  RatMat a = a_in;
  RatVec b = b_in;
  const Eigen::Index n = a.rows(), m = a.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m && r < n; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < n; ++i)
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      a.row(piv).swap(a.row(r));
      std::swap(b(piv), b(r));
    }
    const Rat inv = Rat(1) / a(r, c);
    a.row(r) = inv * a.row(r);
    b(r) = inv * b(r);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rat f = a(i, c);
      a.row(i) -= f * a.row(r);
      b(i) -= f * b(r);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  RationalSolution out;
  for (Eigen::Index i = r; i < n; ++i)
    if (!b(i).is_zero()) return out;  // inconsistent
  out.solvable = true;
  out.particular = RatVec::Zero(m);
  for (Eigen::Index k = 0; k < r; ++k) out.particular(pivot_cols[k]) = b(k);
  std::vector<Eigen::Index> free_cols;
  {
    std::vector<bool> is_pivot(static_cast<size_t>(m), false);
    for (auto c : pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    for (Eigen::Index c = 0; c < m; ++c)
      if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
  }
  out.null_basis = RatMat::Zero(m, static_cast<Eigen::Index>(free_cols.size()));
  for (size_t j = 0; j < free_cols.size(); ++j) {
    const Eigen::Index fc = free_cols[j];
    out.null_basis(fc, static_cast<Eigen::Index>(j)) = Rat(1);
    for (Eigen::Index k = 0; k < r; ++k)
      out.null_basis(pivot_cols[k], static_cast<Eigen::Index>(j)) = -a(k, fc);
  }
  return out;
}

Eigen::Index rank_rational(const RatMat& a) {
  const auto sol = solve_rational(a, RatVec::Zero(a.rows()));
  return a.cols() - sol.null_basis.cols();
}

bool nonneg_solvable(const RatMat& a_in, const RatVec& b_in) {
  const Eigen::Index m = a_in.rows();
  const Eigen::Index s = a_in.cols();
  RatMat t(m, s + m);  // structurals then one artificial per row
  RatVec b = b_in;
  for (Eigen::Index i = 0; i < m; ++i) {
    const bool flip = b(i).sign() < 0;
    for (Eigen::Index j = 0; j < s; ++j) t(i, j) = flip ? -a_in(i, j) : a_in(i, j);
    for (Eigen::Index j = 0; j < m; ++j) t(i, s + j) = Rat(i == j ? 1 : 0);
    if (flip) b(i) = -b(i);
  }
  std::vector<Eigen::Index> basis(static_cast<size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<size_t>(i)] = s + i;

  auto cost = [&](Eigen::Index col) { return col >= s ? Rat(1) : Rat(0); };

  while (true) {
    // Reduced costs recomputed from scratch; the tableaux here are tiny.
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < s + m && enter < 0; ++j) {
      Rat z = cost(j);
      for (Eigen::Index i = 0; i < m; ++i) z -= cost(basis[static_cast<size_t>(i)]) * t(i, j);
      if (z.sign() < 0) enter = j;  // Bland: smallest index
    }
    if (enter < 0) break;
    Eigen::Index leave = -1;
    Rat best;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, enter).sign() <= 0) continue;
      const Rat ratio = b(i) / t(i, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("phase-1 simplex unbounded");
    const Rat p = t(leave, enter);
    t.row(leave) = (Rat(1) / p) * t.row(leave);
    b(leave) = b(leave) / p;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == leave || t(i, enter).is_zero()) continue;
      const Rat f = t(i, enter);
      t.row(i) -= f * t.row(leave);
      b(i) -= f * b(leave);
    }
    basis[static_cast<size_t>(leave)] = enter;
  }
  Rat objective(0);
  for (Eigen::Index i = 0; i < m; ++i) objective += cost(basis[static_cast<size_t>(i)]) * b(i);
  return objective.is_zero();
}

}  // namespace qpt
