#include "qpt/cluster.hpp"

#include <vector>

namespace qpt {

namespace {

void require_skewsymmetric(const IntMat& lambda) {
  if (lambda.rows() != lambda.cols())
    throw PreconditionError("lambda matrix must be square");
  for (Eigen::Index i = 0; i < lambda.rows(); ++i)
    for (Eigen::Index j = i; j < lambda.cols(); ++j)
      if (lambda(i, j) != -lambda(j, i))
        throw PreconditionError("lambda matrix must be skewsymmetric");
}

// Positive coprime d with diag(d) * b skewsymmetric, or empty on failure.
// Ratios propagate over the nonzero-pattern graph; every pair is rechecked,
// which also covers cycles.
IntVec skew_symmetrizer(const IntMat& b) {
  const Eigen::Index n = b.rows();
  RatVec d = RatVec::Zero(n);
  for (Eigen::Index start = 0; start < n; ++start) {
    if (!d(start).is_zero()) continue;
    d(start) = Rat(1);
    std::vector<Eigen::Index> queue{start};
    while (!queue.empty()) {
      const Eigen::Index i = queue.back();
      queue.pop_back();
      for (Eigen::Index j = 0; j < n; ++j) {
        if (b(i, j).is_zero()) continue;
        if (b(j, i).is_zero()) return IntVec();
        const Rat ratio = Rat(b(i, j)) / Rat(-b(j, i));
        if (ratio.sign() <= 0) return IntVec();
        const Rat dj = d(i) * ratio;
        if (d(j).is_zero()) {
          d(j) = dj;
          queue.push_back(j);
        } else if (d(j) != dj) {
          return IntVec();
        }
      }
    }
  }
  Int den(1);
  for (Eigen::Index i = 0; i < n; ++i) den = lcm(den, d(i).denominator());
  IntVec out(n);
  for (Eigen::Index i = 0; i < n; ++i) out(i) = (Rat(den) * d(i)).numerator();
  Int g(0);
  for (Eigen::Index i = 0; i < n; ++i) g = gcd(g, out(i));
  for (Eigen::Index i = 0; i < n; ++i) out(i) = out(i) / g;
  // Final verification, covering diagonal and zero-pattern symmetry.
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (out(i) * b(i, j) != -out(j) * b(j, i)) return IntVec();
  return out;
}

}  // namespace

ExchangeMatrix::ExchangeMatrix(IntMat btilde) : b_(std::move(btilde)) {
  if (b_.cols() < 1 || b_.rows() < b_.cols())
    throw PreconditionError("exchange matrix must be m x n with m >= n >= 1");
  sym_ = skew_symmetrizer(b_.topRows(b_.cols()));
  if (sym_.size() == 0)
    throw PreconditionError("principal part is not skew-symmetrizable");
}

std::optional<IntVec> is_compatible(const IntMat& lambda, const ExchangeMatrix& b) {
  require_skewsymmetric(lambda);
  if (lambda.rows() != b.rows())
    throw PreconditionError("lambda/exchange dimension mismatch");
  const IntMat prod = lambda.transpose() * b.matrix();
  const Eigen::Index m = b.rows(), n = b.cols();
  IntVec d(n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) {
        if (prod(i, j) < Int(1)) return std::nullopt;
        d(i) = prod(i, j);
      } else if (!prod(i, j).is_zero()) {
        return std::nullopt;
      }
    }
  return d;
}

IntMat e_matrix(const ExchangeMatrix& b, Eigen::Index k) {
  if (k < 0 || k >= b.cols()) throw PreconditionError("mutation index out of range");
  const Eigen::Index m = b.rows();
  IntMat e = IntMat::Identity(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (i == k)
      e(i, k) = Int(-1);
    else
      e(i, k) = b.matrix()(i, k).sign() > 0 ? b.matrix()(i, k) : Int(0);
  }
  return e;
}

IntMat mutate_lambda(const IntMat& lambda, const ExchangeMatrix& b, Eigen::Index k) {
  require_skewsymmetric(lambda);
  const IntMat e = e_matrix(b, k);
  return e.transpose() * lambda * e;
}

ExchangeMatrix mutate_b(const ExchangeMatrix& b, Eigen::Index k) {
  if (k < 0 || k >= b.cols()) throw PreconditionError("mutation index out of range");
  const IntMat& old = b.matrix();
  IntMat out(old.rows(), old.cols());
  for (Eigen::Index i = 0; i < old.rows(); ++i)
    for (Eigen::Index j = 0; j < old.cols(); ++j) {
      if (i == k || j == k) {
        out(i, j) = -old(i, j);
      } else {
        const Int cross = old(i, k) * old(k, j);
        const Int bump = cross.sign() > 0 ? cross : Int(0);
        out(i, j) = old(i, j) + Int(old(i, k).sign()) * bump;
      }
    }
  return ExchangeMatrix(std::move(out));
}

namespace {

// Greedy exact minimization of max |x_i - s h_i| over rational s; candidates
// are the crossing points of the coordinate lines.
RatVec reduce_against(const RatVec& x, const RatVec& h) {
  const Eigen::Index n = x.size();
  auto value = [&](const Rat& s) {
    Rat best(0);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Rat v = abs(x(i) - s * h(i));
      if (v > best) best = v;
    }
    return best;
  };
  std::vector<Rat> candidates{Rat(0)};
  for (Eigen::Index i = 0; i < n; ++i) {
    if (h(i).is_zero()) continue;
    candidates.push_back(x(i) / h(i));
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Rat dm = h(i) - h(j), dp = h(i) + h(j);
      if (!dm.is_zero()) candidates.push_back((x(i) - x(j)) / dm);
      if (!dp.is_zero()) candidates.push_back((x(i) + x(j)) / dp);
    }
  }
  Rat best_s(0);
  Rat best_v = value(Rat(0));
  for (const Rat& s : candidates) {
    const Rat v = value(s);
    if (v < best_v || (v == best_v && (abs(s) < abs(best_s) ||
                                       (abs(s) == abs(best_s) && s < best_s)))) {
      best_v = v;
      best_s = s;
    }
  }
  return x - best_s * h;
}

}  // namespace

std::optional<IntMat> find_compatible_lambda(const ExchangeMatrix& b) {
  const Eigen::Index m = b.rows(), n = b.cols();
  // Unknowns: lambda_{pq} for p < q, then the symmetrizer scale t.
  const Eigen::Index nvars = m * (m - 1) / 2 + 1;
  auto var = [&](Eigen::Index p, Eigen::Index q) {
    // index of lambda_{pq}, p < q
    return p * m - p * (p + 1) / 2 + (q - p - 1);
  };
  RatMat sys = RatMat::Zero(m * n, nvars);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index row = i * n + j;
      // (Lambda^t B)_{ij} = sum_l lambda_{li} b_{lj}
      for (Eigen::Index l = 0; l < m; ++l) {
        if (l == i || b.matrix()(l, j).is_zero()) continue;
        const Rat c = Rat(b.matrix()(l, j));
        if (l < i)
          sys(row, var(l, i)) += c;
        else
          sys(row, var(i, l)) -= c;
      }
      if (i == j) sys(row, nvars - 1) -= Rat(b.symmetrizer()(i));
    }
  const auto sol = solve_rational(sys, RatVec::Zero(m * n));
  // Scan the null space for a direction with nonzero scale component.
  Eigen::Index tcol = -1;
  for (Eigen::Index c = 0; c < sol.null_basis.cols(); ++c)
    if (!sol.null_basis(nvars - 1, c).is_zero()) {
      tcol = c;
      break;
    }
  if (tcol < 0) return std::nullopt;
  RatVec x = sol.null_basis.col(tcol) / sol.null_basis(nvars - 1, tcol);
  std::vector<RatVec> homogeneous;
  for (Eigen::Index c = 0; c < sol.null_basis.cols(); ++c) {
    if (c == tcol) continue;
    RatVec h = sol.null_basis.col(c);
    if (!h(nvars - 1).is_zero()) h = h - h(nvars - 1) * x;
    homogeneous.push_back(std::move(h));
  }
  for (int pass = 0; pass < 4; ++pass) {
    const RatVec before = x;
    for (const auto& h : homogeneous) x = reduce_against(x, h);
    bool changed = false;
    for (Eigen::Index i = 0; i < x.size() && !changed; ++i) changed = x(i) != before(i);
    if (!changed) break;
  }
  Int den(1);
  for (Eigen::Index i = 0; i < nvars; ++i) den = lcm(den, x(i).denominator());
  IntVec xi(nvars);
  for (Eigen::Index i = 0; i < nvars; ++i) xi(i) = (Rat(den) * x(i)).numerator();
  xi = primitive(xi);
  IntMat lambda = IntMat::Zero(m, m);
  for (Eigen::Index p = 0; p < m; ++p)
    for (Eigen::Index q = p + 1; q < m; ++q) {
      lambda(p, q) = xi(var(p, q));
      lambda(q, p) = -xi(var(p, q));
    }
  if (!is_compatible(lambda, b)) throw std::logic_error("solver produced incompatible lambda");
  return lambda;
}

Sublattice toric_lattice(const ExchangeMatrix& b) {
  return Sublattice::kernel_of(b.matrix().transpose());
}

Bicharacter gsv_bicharacter(const IntMat& lambda) {
  require_skewsymmetric(lambda);
  return Bicharacter(to_rat(lambda));
}

}  // namespace qpt
