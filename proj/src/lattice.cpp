#include "qpt/lattice.hpp"

namespace qpt {

Bicharacter::Bicharacter(RatMat l) : l_(std::move(l)) {
  if (l_.rows() != l_.cols() || l_.rows() < 1)
    throw PreconditionError("bicharacter matrix must be square and nonempty");
  for (Eigen::Index i = 0; i < l_.rows(); ++i)
    for (Eigen::Index j = i; j < l_.cols(); ++j)
      if (l_(i, j) != -l_(j, i))
        throw PreconditionError("bicharacter matrix must be skewsymmetric");
}

GradingVector::GradingVector(IntVec d) : d_(std::move(d)) {
  if (d_.size() < 1) throw PreconditionError("grading must be nonempty");
  for (Eigen::Index i = 0; i < d_.size(); ++i)
    if (d_(i) < Int(1)) throw PreconditionError("grading weights must be positive");
}

Sublattice::Sublattice(Eigen::Index dim, IntMat basis)
    : dim_(dim), basis_(std::move(basis)) {
  for (Eigen::Index k = 0; k < basis_.rows(); ++k) {
    Eigen::Index p = 0;
    while (p < dim_ && basis_(k, p).is_zero()) ++p;
    pivots_.push_back(p);
  }
}

Sublattice Sublattice::kernel_of(const IntMat& a) {
  return Sublattice(a.cols(), integer_kernel(a));
}

Sublattice Sublattice::saturated_span(Eigen::Index dim, const std::vector<IntVec>& gens) {
  IntMat v(static_cast<Eigen::Index>(gens.size()), dim);
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].size() != dim) throw PreconditionError("generator dimension mismatch");
    v.row(static_cast<Eigen::Index>(i)) = gens[i].transpose();
  }
  // Double orthogonal: the kernel of the kernel recovers the rational span
  // intersected with Z^m, i.e. the saturation.
  return Sublattice(dim, integer_kernel(integer_kernel(v)));
}

bool Sublattice::contains(const IntVec& v) const {
  if (v.size() != dim_) throw PreconditionError("vector dimension mismatch");
  IntVec w = v;
  for (Eigen::Index k = 0; k < basis_.rows(); ++k) {
    const Eigen::Index p = pivots_[static_cast<size_t>(k)];
    if (p >= dim_) continue;
    const Int& h = basis_(k, p);
    if (!(w(p) % h).is_zero()) return false;
    const Int q = w(p) / h;
    if (!q.is_zero()) w -= q * basis_.row(k).transpose();
  }
  return is_zero_vec(w);
}

Rat bichar_eval(const Bicharacter& omega, const ExpVec& alpha, const ExpVec& beta) {
  if (alpha.size() != omega.dim() || beta.size() != omega.dim())
    throw PreconditionError("bicharacter argument dimension mismatch");
  const RatVec lb = omega.matrix() * to_rat(beta);
  Rat out(0);
  for (Eigen::Index i = 0; i < alpha.size(); ++i) out += Rat(alpha(i)) * lb(i);
  return out;
}

Sublattice radical(const Bicharacter& omega) {
  const Eigen::Index m = omega.dim();
  Int den_lcm(1);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      den_lcm = lcm(den_lcm, omega.matrix()(i, j).denominator());
  IntMat scaled(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      const Rat x = Rat(den_lcm) * omega.matrix()(i, j);
      scaled(i, j) = x.numerator();
    }
  return Sublattice::kernel_of(scaled);
}

std::vector<ExpVec> center_generators(const Bicharacter& omega) {
  const Sublattice rad = radical(omega);
  std::vector<ExpVec> out;
  out.reserve(static_cast<size_t>(rad.rank()));
  for (Eigen::Index k = 0; k < rad.rank(); ++k) out.push_back(rad.basis().row(k).transpose());
  return out;
}

Int weighted_degree(const GradingVector& d, const ExpVec& alpha) {
  if (alpha.size() != d.dim()) throw PreconditionError("degree argument dimension mismatch");
  Int out(0);
  for (Eigen::Index i = 0; i < alpha.size(); ++i) out += d.entries()(i) * alpha(i);
  return out;
}

}  // namespace qpt
