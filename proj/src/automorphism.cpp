#include "qpt/automorphism.hpp"

#include <algorithm>
#include <map>

namespace qpt {

namespace {

// (1 + f)^{-1} = sum_n (-f)^n, truncated; terminates because f has
// strictly positive degrees.
LaurentPoly geometric_inverse(const LaurentPoly& u, const GradingVector& d, int trunc) {
  const Eigen::Index m = u.dim();
  LaurentPoly f = u - LaurentPoly::one(m);
  LaurentPoly acc = LaurentPoly::one(m);
  LaurentPoly pow = LaurentPoly::one(m);
  int sign = -1;
  for (int n = 1; n <= trunc; ++n) {
    pow = mul_truncated(pow, f, d, Int(trunc));
    if (pow.is_zero()) break;
    acc = acc + Rat(sign) * pow;
    sign = -sign;
  }
  return acc;
}

// Returns n >= 1 with v = n * ray, or 0 when v is not such a multiple.
Int ray_multiple(const IntVec& v, const IntVec& ray) {
  Eigen::Index lead = 0;
  while (lead < ray.size() && ray(lead).is_zero()) ++lead;
  if (lead == ray.size()) return Int(0);
  if (!(v(lead) % ray(lead)).is_zero()) return Int(0);
  const Int n = v(lead) / ray(lead);
  if (n < Int(1)) return Int(0);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != n * ray(i)) return Int(0);
  return n;
}

ExpVec unit_vector(Eigen::Index m, Eigen::Index k) {
  ExpVec e = IntVec::Zero(m);
  e(k) = Int(1);
  return e;
}

/// Applies the substitution y_k -> u_k y_k to polynomials, caching the
/// multiplier powers u_k^t (geometric series for t < 0). Terms are grouped
/// coordinate by coordinate along the lexicographic order, so each power is
/// multiplied in once per group instead of once per term.
class Substituter {
 public:
  explicit Substituter(const TorusAutomorphism& phi)
      : phi_(phi),
        pows_(static_cast<size_t>(phi.dim())),
        trivial_(static_cast<size_t>(phi.dim())) {
    for (Eigen::Index k = 0; k < phi.dim(); ++k)
      trivial_[static_cast<size_t>(k)] = phi.multiplier(k) == LaurentPoly::one(phi.dim());
  }

  /// phi(f) truncated at weighted degree <= cutoff; each term's relative
  /// expansion is exact modulo relative degree > N.
  LaurentPoly apply(const LaurentPoly& f, const Int& cutoff) {
    if (f.is_zero()) return LaurentPoly(phi_.dim());
    return apply_range(f.terms().begin(), f.terms().end(), 0, cutoff);
  }

 private:
  using It = LaurentPoly::TermMap::const_iterator;

  LaurentPoly apply_range(It begin, It end, Eigen::Index k, const Int& cutoff) {
    const Eigen::Index m = phi_.dim();
    if (k == m) {
      LaurentPoly out(m);
      for (It it = begin; it != end; ++it)
        if (weighted_degree(phi_.grading(), it->first) <= cutoff)
          out.add_term(it->first, it->second);
      return out;
    }
    LaurentPoly out(m);
    It it = begin;
    while (it != end) {
      const Int t = it->first(k);
      It run_end = it;
      while (run_end != end && run_end->first(k) == t) ++run_end;
      LaurentPoly sub = apply_range(it, run_end, k + 1, cutoff);
      if (trivial_[static_cast<size_t>(k)] || t.is_zero())
        out = out + sub;
      else
        out = out + mul_truncated(power(k, t.to_ll()), sub, phi_.grading(), cutoff);
      it = run_end;
    }
    return out;
  }

  const LaurentPoly& power(Eigen::Index k, long long t) {
    auto& table = pows_[static_cast<size_t>(k)];
    if (table.empty()) {
      table.emplace(0, LaurentPoly::one(phi_.dim()));
      table.emplace(1, phi_.multiplier(k));
    }
    const Int cutoff(phi_.truncation());
    if (t < 0 && !table.count(-1))
      table.emplace(-1, geometric_inverse(phi_.multiplier(k), phi_.grading(),
                                          phi_.truncation()));
    while (!table.count(t)) {
      if (t > 0) {
        const long long have = table.rbegin()->first;
        table.emplace(have + 1,
                      mul_truncated(table.at(have), table.at(1), phi_.grading(), cutoff));
      } else {
        const long long have = table.begin()->first;
        table.emplace(have - 1,
                      mul_truncated(table.at(have), table.at(-1), phi_.grading(), cutoff));
      }
    }
    return table.at(t);
  }

  const TorusAutomorphism& phi_;
  std::vector<std::map<long long, LaurentPoly>> pows_;
  std::vector<char> trivial_;
};

}  // namespace

TorusAutomorphism::TorusAutomorphism(GradingVector d, Bicharacter omega,
                                     std::vector<LaurentPoly> multipliers, int truncation)
    : d_(std::move(d)), omega_(std::move(omega)), mult_(std::move(multipliers)),
      trunc_(truncation) {
  const Eigen::Index m = d_.dim();
  if (omega_.dim() != m) throw PreconditionError("grading/bicharacter dimension mismatch");
  if (static_cast<Eigen::Index>(mult_.size()) != m)
    throw PreconditionError("expected one multiplier per coordinate");
  if (trunc_ < 1) throw PreconditionError("truncation degree must be positive");
  for (auto& u : mult_) {
    if (u.dim() != m) throw PreconditionError("multiplier dimension mismatch");
    u = truncate_degree(u, d_, Int(trunc_));
    if (u.coeff(IntVec::Zero(m)) != Rat(1))
      throw PreconditionError("multiplier must have constant term 1");
    for (const auto& [e, c] : u.terms())
      if (!is_zero_vec(e) && weighted_degree(d_, e) < Int(1))
        throw PreconditionError("non-unipotent multiplier: term of nonpositive degree");
  }
}

TorusAutomorphism aut_identity(const GradingVector& d, const Bicharacter& omega,
                               int truncation) {
  std::vector<LaurentPoly> us(static_cast<size_t>(d.dim()), LaurentPoly::one(d.dim()));
  return TorusAutomorphism(d, omega, std::move(us), truncation);
}

TorusAutomorphism aut_from_multipliers(const GradingVector& d, const Bicharacter& omega,
                                       const std::vector<LaurentPoly>& fs, int truncation) {
  std::vector<LaurentPoly> us;
  us.reserve(fs.size());
  for (const auto& f : fs) {
    for (const auto& [e, c] : f.terms())
      if (weighted_degree(d, e) < Int(1))
        throw PreconditionError("non-unipotent multiplier: term of nonpositive degree");
    us.push_back(LaurentPoly::one(d.dim()) + f);
  }
  return TorusAutomorphism(d, omega, std::move(us), truncation);
}

LaurentPoly aut_apply(const TorusAutomorphism& phi, const ExpVec& alpha) {
  const Eigen::Index m = phi.dim();
  if (alpha.size() != m) throw PreconditionError("exponent dimension mismatch");
  Substituter sub(phi);
  const Int cutoff = weighted_degree(phi.grading(), alpha) + Int(phi.truncation());
  return sub.apply(LaurentPoly::monomial(alpha, Rat(1)), cutoff);
}

LaurentPoly aut_apply_poly(const TorusAutomorphism& phi, const LaurentPoly& f) {
  if (f.dim() != phi.dim()) throw PreconditionError("polynomial dimension mismatch");
  Substituter sub(phi);
  return sub.apply(f, Int(phi.truncation()));
}

TorusAutomorphism aut_compose(const TorusAutomorphism& phi, const TorusAutomorphism& psi) {
  if (!phi.same_ambient(psi)) throw PreconditionError("incompatible ambient data");
  const Int cutoff(phi.truncation());
  Substituter sub(phi);
  std::vector<LaurentPoly> us;
  us.reserve(static_cast<size_t>(phi.dim()));
  for (Eigen::Index k = 0; k < phi.dim(); ++k) {
    const LaurentPoly moved = sub.apply(psi.multiplier(k), cutoff);
    us.push_back(mul_truncated(moved, phi.multiplier(k), phi.grading(), cutoff));
  }
  return TorusAutomorphism(phi.grading(), phi.form(), std::move(us), phi.truncation());
}

TorusAutomorphism aut_inverse(const TorusAutomorphism& phi) {
  const Eigen::Index m = phi.dim();
  const int n = phi.truncation();
  Substituter sub(phi);
  // Solve phi(1 + g_k) = (1 + f_k)^{-1} degree by degree: phi is unitriangular
  // for the degree filtration, so a correction at degree deg never disturbs
  // lower degrees, and phi(1 + g + r) = phi(1 + g) + phi(r).
  std::vector<LaurentPoly> targets, gs(static_cast<size_t>(m), LaurentPoly(m));
  std::vector<LaurentPoly> images(static_cast<size_t>(m), LaurentPoly::one(m));
  targets.reserve(static_cast<size_t>(m));
  for (Eigen::Index k = 0; k < m; ++k)
    targets.push_back(geometric_inverse(phi.multiplier(k), phi.grading(), n));
  for (int deg = 1; deg <= n; ++deg) {
    for (Eigen::Index k = 0; k < m; ++k) {
      const LaurentPoly err = degree_component(
          targets[static_cast<size_t>(k)] - images[static_cast<size_t>(k)],
          phi.grading(), Int(deg));
      if (err.is_zero()) continue;
      gs[static_cast<size_t>(k)] = gs[static_cast<size_t>(k)] + err;
      images[static_cast<size_t>(k)] =
          images[static_cast<size_t>(k)] + sub.apply(err, Int(n));
    }
  }
  return aut_from_multipliers(phi.grading(), phi.form(), gs, n);
}

bool aut_equal(const TorusAutomorphism& a, const TorusAutomorphism& b) {
  if (!a.same_ambient(b)) return false;
  for (Eigen::Index k = 0; k < a.dim(); ++k)
    if (!(a.multiplier(k) == b.multiplier(k))) return false;
  return true;
}

bool aut_is_identity(const TorusAutomorphism& a) {
  for (Eigen::Index k = 0; k < a.dim(); ++k)
    if (!(a.multiplier(k) == LaurentPoly::one(a.dim()))) return false;
  return true;
}

bool is_poisson_hom(const TorusAutomorphism& phi) {
  const Eigen::Index m = phi.dim();
  Substituter sub(phi);
  const IntVec& d = phi.grading().entries();
  std::vector<LaurentPoly> images;
  images.reserve(static_cast<size_t>(m));
  for (Eigen::Index k = 0; k < m; ++k)
    images.push_back(sub.apply(LaurentPoly::monomial(unit_vector(m, k), Rat(1)),
                               d(k) + Int(phi.truncation())));
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index k = j + 1; k < m; ++k) {
      // Both sides live at base exponent delta_j + delta_k; compare through
      // relative degree N.
      const Int cutoff = d(j) + d(k) + Int(phi.truncation());
      const LaurentPoly lhs = truncate_degree(
          poly_bracket(images[static_cast<size_t>(j)], images[static_cast<size_t>(k)],
                       phi.form()),
          phi.grading(), cutoff);
      const ExpVec djk = unit_vector(m, j) + unit_vector(m, k);
      const Rat w = bichar_eval(phi.form(), unit_vector(m, j), unit_vector(m, k));
      const LaurentPoly rhs = w * sub.apply(LaurentPoly::monomial(djk, Rat(1)), cutoff);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

TorusAutomorphism hamiltonian_exp(const Rat& a, const ExpVec& alpha,
                                  const Bicharacter& omega, const GradingVector& d,
                                  int truncation) {
  const Eigen::Index m = omega.dim();
  if (alpha.size() != m) throw PreconditionError("exponent dimension mismatch");
  const Int mu = weighted_degree(d, alpha);
  if (mu < Int(1)) throw PreconditionError("Hamiltonian direction must have positive degree");
  std::vector<LaurentPoly> us;
  us.reserve(static_cast<size_t>(m));
  for (Eigen::Index k = 0; k < m; ++k) {
    const Rat c = a * bichar_eval(omega, alpha, unit_vector(m, k));
    LaurentPoly u = LaurentPoly::one(m);
    if (!c.is_zero()) {
      Rat term(1);
      for (Int deg = mu, n = 1; deg <= Int(truncation); deg += mu, n += Int(1)) {
        term = term * c / Rat(n);
        u.add_term(n * alpha, term);
      }
    }
    us.push_back(std::move(u));
  }
  return TorusAutomorphism(d, omega, std::move(us), truncation);
}

SupportReport aut_support(const TorusAutomorphism& phi) {
  SupportReport out;
  out.truncation = phi.truncation();
  const Int cutoff(phi.truncation());
  ExpSet base;
  for (Eigen::Index k = 0; k < phi.dim(); ++k)
    for (const auto& [e, c] : phi.multiplier(k).terms())
      if (!is_zero_vec(e)) base.insert(e);
  for (const auto& v : base)
    for (Int n = 1; weighted_degree(phi.grading(), v) * n <= cutoff; n += Int(1))
      out.generators.insert(n * v);
  return out;
}

std::vector<ExpVec> cone_extremal_rays(const ExpSet& generators, const GradingVector& d) {
  ExpSet rays;
  for (const auto& g : generators) {
    if (weighted_degree(d, g) < Int(1))
      throw PreconditionError("cone generator of nonpositive degree");
    rays.insert(primitive(g));
  }
  std::vector<ExpVec> reps(rays.begin(), rays.end());
  std::vector<ExpVec> out;
  if (reps.size() == 1) return reps;
  for (size_t i = 0; i < reps.size(); ++i) {
    RatMat others(d.dim(), static_cast<Eigen::Index>(reps.size() - 1));
    Eigen::Index col = 0;
    for (size_t j = 0; j < reps.size(); ++j)
      if (j != i) others.col(col++) = to_rat(reps[j]);
    if (!nonneg_solvable(others, to_rat(reps[i]))) out.push_back(reps[i]);
  }
  return out;
}

ConeReport cone_report(const TorusAutomorphism& phi) {
  const SupportReport s = aut_support(phi);
  ConeReport out;
  out.generators.assign(s.generators.begin(), s.generators.end());
  out.extremal_rays = cone_extremal_rays(s.generators, phi.grading());
  return out;
}

TorusAutomorphism aut_restrict_to_ray(const TorusAutomorphism& phi, const ExpVec& ray) {
  if (ray.size() != phi.dim()) throw PreconditionError("ray dimension mismatch");
  if (is_zero_vec(ray)) throw PreconditionError("zero ray");
  const ExpVec origin = IntVec::Zero(phi.dim());
  std::vector<LaurentPoly> fs;
  fs.reserve(static_cast<size_t>(phi.dim()));
  for (Eigen::Index k = 0; k < phi.dim(); ++k) {
    const LaurentPoly f = phi.multiplier(k) - LaurentPoly::one(phi.dim());
    fs.push_back(restrict_to_ray(f, origin, ray));
  }
  return aut_from_multipliers(phi.grading(), phi.form(), fs, phi.truncation());
}

std::vector<Rat> exp_factorize(const TorusAutomorphism& phi, const ExpVec& ray) {
  const Eigen::Index m = phi.dim();
  if (ray.size() != m) throw PreconditionError("ray dimension mismatch");
  if (is_zero_vec(ray)) throw PreconditionError("zero ray");
  const Int mu = weighted_degree(phi.grading(), ray);
  if (mu < Int(1)) throw PreconditionError("ray must have positive degree");

  std::vector<Rat> pairing(static_cast<size_t>(m));
  Eigen::Index pivot = -1;
  for (Eigen::Index k = 0; k < m; ++k) {
    pairing[static_cast<size_t>(k)] = bichar_eval(phi.form(), ray, unit_vector(m, k));
    if (pivot < 0 && !pairing[static_cast<size_t>(k)].is_zero()) pivot = k;
  }
  if (pivot < 0) throw PreconditionError("ray lies in the radical; factorization undefined");

  for (Eigen::Index k = 0; k < m; ++k)
    for (const auto& [e, c] : phi.multiplier(k).terms())
      if (!is_zero_vec(e) && ray_multiple(e, ray).is_zero())
        throw PreconditionError("support not contained in positive multiples of the ray");

  const long long nmax = (Int(phi.truncation()) / mu).to_ll();
  std::vector<Rat> coeffs;
  TorusAutomorphism cur = phi;
  for (long long n = 1; n <= nmax; ++n) {
    const ExpVec nray = Int(n) * ray;
    const Rat a_n =
        cur.multiplier(pivot).coeff(nray) / (Rat(n) * pairing[static_cast<size_t>(pivot)]);
    // Proportionality across every index certifies that the degree-n layer is
    // a genuine Hamiltonian derivation.
    for (Eigen::Index k = 0; k < m; ++k) {
      const Rat expect = a_n * Rat(n) * pairing[static_cast<size_t>(k)];
      if (cur.multiplier(k).coeff(nray) != expect)
        throw PreconditionError("inconsistent coefficients: not a Poisson automorphism");
    }
    coeffs.push_back(a_n);
    cur = aut_compose(hamiltonian_exp(-a_n, nray, phi.form(), phi.grading(), phi.truncation()),
                      cur);
  }
  if (!aut_is_identity(cur))
    throw PreconditionError("inconsistent coefficients: not a Poisson automorphism");
  return coeffs;
}

RigidityVerdict rigidity_check(const TorusAutomorphism& phi) {
  const Sublattice rad = radical(phi.form());
  const SupportReport s = aut_support(phi);
  RigidityVerdict out;
  out.central = true;
  for (const auto& g : s.generators)
    if (!rad.contains(g)) {
      out.central = false;
      break;
    }
  if (out.central) return out;
  // The radical is the integer points of a subspace, so a support outside it
  // forces an extremal ray outside it.
  for (const auto& r : cone_extremal_rays(s.generators, phi.grading()))
    if (!rad.contains(r)) {
      out.witness = r;
      return out;
    }
  throw std::logic_error("non-central support without extremal witness");
}

bool cor_fix_check(const TorusAutomorphism& phi, const ExpVec& ray) {
  const Eigen::Index m = phi.dim();
  if (ray.size() != m) throw PreconditionError("ray dimension mismatch");
  if (is_zero_vec(ray)) throw PreconditionError("zero ray");
  bool off_radical = false;
  for (Eigen::Index k = 0; k < m && !off_radical; ++k)
    off_radical = !bichar_eval(phi.form(), ray, unit_vector(m, k)).is_zero();
  if (!off_radical) throw PreconditionError("ray lies in the radical");
  for (Eigen::Index k = 0; k < m; ++k)
    for (const auto& [e, c] : phi.multiplier(k).terms())
      if (!is_zero_vec(e) && ray_multiple(e, ray).is_zero())
        throw PreconditionError("support not contained in positive multiples of the ray");
  return aut_apply(phi, ray) == LaurentPoly::monomial(ray, Rat(1));
}

}  // namespace qpt
