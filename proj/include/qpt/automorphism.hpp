#pragma once

#include "qpt/laurent.hpp"

#include <optional>
#include <vector>

namespace qpt {

/// Unipotent substitution y_k -> u_k y_k with u_k = 1 + f_k, f_k supported in
/// strictly positive weighted degrees. All data is tracked modulo weighted
/// degree > N, which models the completion degreewise.
class TorusAutomorphism {
 public:
  TorusAutomorphism(GradingVector d, Bicharacter omega,
                    std::vector<LaurentPoly> multipliers, int truncation);

  Eigen::Index dim() const { return d_.dim(); }
  int truncation() const { return trunc_; }
  const GradingVector& grading() const { return d_; }
  const Bicharacter& form() const { return omega_; }
  const LaurentPoly& multiplier(Eigen::Index k) const { return mult_[static_cast<size_t>(k)]; }
  const std::vector<LaurentPoly>& multipliers() const { return mult_; }

  bool same_ambient(const TorusAutomorphism& o) const {
    return d_ == o.d_ && omega_ == o.omega_ && trunc_ == o.trunc_;
  }

 private:
  GradingVector d_;
  Bicharacter omega_;
  std::vector<LaurentPoly> mult_;  // u_k, constant term 1
  int trunc_;
};

TorusAutomorphism aut_identity(const GradingVector& d, const Bicharacter& omega,
                               int truncation);

/// Builds y_k -> (1 + f_k) y_k. Every term of every f_k must have weighted
/// degree >= 1; terms beyond the truncation are dropped.
TorusAutomorphism aut_from_multipliers(const GradingVector& d,
                                       const Bicharacter& omega,
                                       const std::vector<LaurentPoly>& fs,
                                       int truncation);

/// phi(y^alpha) = prod_k u_k^{alpha_k} * y^alpha; negative powers use the
/// truncated geometric series for (1 + f_k)^{-1}.
LaurentPoly aut_apply(const TorusAutomorphism& phi, const ExpVec& alpha);

/// Term-by-term extension of aut_apply, truncated at multiplier degree N.
LaurentPoly aut_apply_poly(const TorusAutomorphism& phi, const LaurentPoly& f);

/// Applies psi first, then phi.
TorusAutomorphism aut_compose(const TorusAutomorphism& phi,
                              const TorusAutomorphism& psi);

/// Degree-by-degree correction so that aut_compose(phi, result) is the
/// identity modulo degree > N.
TorusAutomorphism aut_inverse(const TorusAutomorphism& phi);

bool aut_equal(const TorusAutomorphism& a, const TorusAutomorphism& b);
bool aut_is_identity(const TorusAutomorphism& a);

/// Checks {phi(y_j), phi(y_k)} = phi({y_j, y_k}) modulo degree > N for all
/// generator pairs.
bool is_poisson_hom(const TorusAutomorphism& phi);

/// Truncated exponential of the Hamiltonian derivation a {y^alpha, -}:
/// y^beta -> sum_n (a W(alpha, beta))^n / n! * y^{n alpha + beta}.
TorusAutomorphism hamiltonian_exp(const Rat& a, const ExpVec& alpha,
                                  const Bicharacter& omega,
                                  const GradingVector& d, int truncation);

struct SupportReport {
  ExpSet generators;  // N-dilates of the multiplier supports, degrees in [1, N]
  int truncation = 0;
};

SupportReport aut_support(const TorusAutomorphism& phi);

/// One primitive representative per extremal ray of the cone spanned by the
/// generators, in lexicographic order. Extremality of v is decided exactly:
/// v must not be a nonnegative rational combination of the other generators.
std::vector<ExpVec> cone_extremal_rays(const ExpSet& generators,
                                       const GradingVector& d);

struct ConeReport {
  std::vector<ExpVec> generators;
  std::vector<ExpVec> extremal_rays;  // primitive representatives
};

ConeReport cone_report(const TorusAutomorphism& phi);

/// Multipliers restricted to exponents on the ray; the caller certifies that
/// ray is an extremal ray representative of the cone.
TorusAutomorphism aut_restrict_to_ray(const TorusAutomorphism& phi,
                                      const ExpVec& ray);

/// Peels phi, assumed supported in positive multiples of ray, into the
/// coefficients a_n of prod_n exp(a_n {y^{n ray}, -}). Cross-index
/// proportionality of the peeled coefficients is verified at every level; a
/// mismatch means the input was not a Poisson automorphism.
std::vector<Rat> exp_factorize(const TorusAutomorphism& phi, const ExpVec& ray);

struct RigidityVerdict {
  bool central = false;
  std::optional<ExpVec> witness;  // extremal ray outside the radical
};

/// central = true iff every support generator lies in rad W, i.e. all
/// multipliers are Poisson-central; otherwise an extremal ray of the support
/// cone outside the radical is reported as witness.
RigidityVerdict rigidity_check(const TorusAutomorphism& phi);

/// For phi supported in positive multiples of a non-radical ray: checks
/// phi(y^ray) = y^ray exactly (modulo truncation).
bool cor_fix_check(const TorusAutomorphism& phi, const ExpVec& ray);

}  // namespace qpt
