#include "qpt/suites.hpp"

#include "qpt/automorphism.hpp"
#include "qpt/cluster.hpp"
#include "qpt/schubert.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace qpt {

namespace {

// --- randomized inputs -------------------------------------------------------

IntMat random_skew(SplitMix64& rng, Eigen::Index m, long long lo, long long hi) {
  IntMat l = IntMat::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i + 1; j < m; ++j) {
      l(i, j) = Int(rng.range(lo, hi));
      l(j, i) = -l(i, j);
    }
  return l;
}

IntMat random_skew_nonzero(SplitMix64& rng, Eigen::Index m, long long lo, long long hi) {
  while (true) {
    IntMat l = random_skew(rng, m, lo, hi);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < m; ++j)
        if (!l(i, j).is_zero()) return l;
  }
}

Rat random_rat(SplitMix64& rng, long long num_lo, long long num_hi, long long den_max) {
  return Rat(Int(rng.range(num_lo, num_hi)), Int(rng.range(1, den_max)));
}

Rat random_rat_nonzero(SplitMix64& rng, long long num_hi, long long den_max) {
  while (true) {
    const Rat r = random_rat(rng, -num_hi, num_hi, den_max);
    if (!r.is_zero()) return r;
  }
}

ExpVec random_exp(SplitMix64& rng, Eigen::Index m, long long lo, long long hi) {
  ExpVec e(m);
  for (Eigen::Index i = 0; i < m; ++i) e(i) = Int(rng.range(lo, hi));
  return e;
}

LaurentPoly random_poly(SplitMix64& rng, Eigen::Index m, int max_terms) {
  LaurentPoly f(m);
  const long long nt = rng.range(1, max_terms);
  for (long long t = 0; t < nt; ++t)
    f.add_term(random_exp(rng, m, -3, 3), random_rat(rng, -4, 4, 3));
  return f;
}

GradingVector random_grading(SplitMix64& rng, Eigen::Index m) {
  IntVec d(m);
  for (Eigen::Index i = 0; i < m; ++i) d(i) = Int(rng.range(1, 2));
  return GradingVector(std::move(d));
}

// Direction with weighted degree in [1, deg_max].
ExpVec random_direction(SplitMix64& rng, const GradingVector& d, long long deg_max) {
  while (true) {
    const ExpVec a = random_exp(rng, d.dim(), -2, 2);
    const Int mu = weighted_degree(d, a);
    if (mu >= Int(1) && mu <= Int(deg_max)) return a;
  }
}

struct Failures {
  SuiteResult* r;
  void operator()(bool ok, const std::string& what) {
    ++r->cases;
    if (!ok) {
      ++r->failures;
      if (r->notes.size() < 5) r->notes.push_back(what);
    }
  }
};

std::string case_tag(const char* what, long long i) {
  std::ostringstream os;
  os << what << " #" << i;
  return os.str();
}

// --- 1: radical against box enumeration --------------------------------------

SuiteResult suite_radical_oracle(std::uint64_t seed) {
  SuiteResult r{"radical-oracle"};
  SplitMix64 rng(seed);
  Failures check{&r};
  for (long long t = 0; t < 50; ++t) {
    const Eigen::Index m = rng.range(1, 5);
    const IntMat l = random_skew(rng, m, -3, 3);
    const Bicharacter omega{to_rat(l)};
    const Sublattice rad = radical(omega);

    bool ok = rank_rational(to_rat(l)) + rad.rank() == m;
    for (Eigen::Index k = 0; k < rad.rank() && ok; ++k) {
      const IntVec prod = l * IntVec(rad.basis().row(k).transpose());
      ok = is_zero_vec(prod);
    }
    // Machine-integer box sweep; entries are far below overflow.
    std::vector<std::vector<long long>> lm(static_cast<size_t>(m),
                                           std::vector<long long>(static_cast<size_t>(m)));
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < m; ++j) lm[i][j] = l(i, j).to_ll();
    std::vector<long long> v(static_cast<size_t>(m), -4);
    while (ok) {
      bool in_kernel = true;
      for (Eigen::Index i = 0; i < m && in_kernel; ++i) {
        long long s = 0;
        for (Eigen::Index j = 0; j < m; ++j) s += lm[i][j] * v[static_cast<size_t>(j)];
        in_kernel = s == 0;
      }
      if (in_kernel) {
        IntVec iv(m);
        for (Eigen::Index i = 0; i < m; ++i) iv(i) = Int(v[static_cast<size_t>(i)]);
        ok = rad.contains(iv);
      }
      Eigen::Index pos = 0;
      while (pos < m && v[static_cast<size_t>(pos)] == 4) v[static_cast<size_t>(pos++)] = -4;
      if (pos == m) break;
      ++v[static_cast<size_t>(pos)];
    }
    check(ok, case_tag("radical box oracle", t));
  }
  return r;
}

// --- 2: Jacobi and Leibniz ----------------------------------------------------

SuiteResult suite_poisson_axioms(std::uint64_t seed) {
  SuiteResult r{"poisson-axioms"};
  SplitMix64 rng(seed);
  Failures check{&r};
  for (Eigen::Index m = 2; m <= 4; ++m) {
    for (long long t = 0; t < 200; ++t) {
      RatMat l = RatMat::Zero(m, m);
      for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = i + 1; j < m; ++j) {
          l(i, j) = random_rat(rng, -3, 3, 2);
          l(j, i) = -l(i, j);
        }
      const Bicharacter omega{std::move(l)};
      const LaurentPoly f = random_poly(rng, m, 5);
      const LaurentPoly g = random_poly(rng, m, 5);
      const LaurentPoly h = random_poly(rng, m, 5);
      const LaurentPoly jac = poly_bracket(f, poly_bracket(g, h, omega), omega) +
                              poly_bracket(g, poly_bracket(h, f, omega), omega) +
                              poly_bracket(h, poly_bracket(f, g, omega), omega);
      const LaurentPoly leib = poly_bracket(f, g * h, omega) -
                               (poly_bracket(f, g, omega) * h + g * poly_bracket(f, h, omega));
      check(jac.is_zero() && leib.is_zero(), case_tag("poisson axioms m", m * 1000 + t));
    }
  }
  return r;
}

// --- 3: exponential closed form vs iterated-bracket series -------------------

LaurentPoly series_engine(const Rat& a, const ExpVec& alpha, const Bicharacter& omega,
                          const GradingVector& d, int trunc, const ExpVec& beta) {
  // Independent route: exp of the derivation by iterating the bracket, with
  // the same relative truncation window as the closed form.
  const LaurentPoly ham = LaurentPoly::monomial(alpha, Rat(1));
  LaurentPoly term = LaurentPoly::monomial(beta, Rat(1));
  LaurentPoly sum = term;
  const Int base = weighted_degree(d, beta);
  for (long long n = 1; n <= trunc; ++n) {
    term = (a / Rat(Int(n))) * poly_bracket(ham, term, omega);
    term = truncate_degree(term, d, base + Int(trunc));
    if (term.is_zero()) break;
    sum = sum + term;
  }
  return sum;
}

SuiteResult suite_exp_closed_form(std::uint64_t seed) {
  SuiteResult r{"exp-closed-form"};
  r.truncation = 8;
  SplitMix64 rng(seed);
  Failures check{&r};
  for (long long t = 0; t < 20; ++t) {
    const Eigen::Index m = rng.range(2, 3);
    const GradingVector d = random_grading(rng, m);
    const Bicharacter omega{to_rat(random_skew(rng, m, -2, 2))};
    const ExpVec alpha = random_direction(rng, d, 3);
    const Rat a = random_rat_nonzero(rng, 3, 4);
    const ExpVec beta = random_exp(rng, m, -3, 3);
    const TorusAutomorphism phi = hamiltonian_exp(a, alpha, omega, d, 8);
    check(aut_apply(phi, beta) == series_engine(a, alpha, omega, d, 8, beta),
          case_tag("exp closed form", t));
  }
  return r;
}

// --- 4/5: inverse round trips and the support lemma ---------------------------

TorusAutomorphism random_exp_product(SplitMix64& rng, const Bicharacter& omega,
                                     const GradingVector& d, int trunc, int max_factors) {
  TorusAutomorphism phi = aut_identity(d, omega, trunc);
  const long long nf = rng.range(1, max_factors);
  for (long long i = 0; i < nf; ++i) {
    const ExpVec alpha = random_direction(rng, d, 3);
    const Rat a = random_rat_nonzero(rng, 3, 6);
    phi = aut_compose(hamiltonian_exp(a, alpha, omega, d, trunc), phi);
  }
  return phi;
}

Int max_multiplier_degree(const TorusAutomorphism& phi) {
  Int out(0);
  for (Eigen::Index k = 0; k < phi.dim(); ++k)
    for (const auto& [e, c] : phi.multiplier(k).terms()) {
      const Int mu = weighted_degree(phi.grading(), e);
      if (mu > out) out = mu;
    }
  return out;
}

ExpSet truncated(const ExpSet& s, const GradingVector& d, const Int& window) {
  ExpSet out;
  for (const auto& v : s)
    if (weighted_degree(d, v) <= window) out.insert(v);
  return out;
}

SuiteResult suite_inverse_roundtrip(std::uint64_t seed) {
  SuiteResult r{"inverse-roundtrip"};
  r.truncation = 10;
  SplitMix64 rng(seed);
  Failures check{&r};
  for (long long t = 0; t < 30; ++t) {
    const Eigen::Index m = rng.range(2, 3);
    const GradingVector d = random_grading(rng, m);
    const Bicharacter omega{to_rat(random_skew(rng, m, -2, 2))};
    const TorusAutomorphism phi = random_exp_product(rng, omega, d, 10, 3);
    const TorusAutomorphism psi = aut_inverse(phi);
    const bool ok = aut_is_identity(aut_compose(phi, psi)) &&
                    aut_is_identity(aut_compose(psi, phi)) && is_poisson_hom(phi);
    check(ok, case_tag("inverse round trip", t));
  }
  return r;
}

SuiteResult suite_support_lemma(std::uint64_t seed) {
  SuiteResult r{"support-lemma"};
  r.truncation = 10;
  SplitMix64 rng(seed);
  Failures check{&r};
  for (long long t = 0; t < 30; ++t) {
    const Eigen::Index m = rng.range(2, 3);
    const GradingVector d = random_grading(rng, m);
    const Bicharacter omega{to_rat(random_skew(rng, m, -2, 2))};
    const TorusAutomorphism phi = random_exp_product(rng, omega, d, 10, 3);
    const TorusAutomorphism rho = random_exp_product(rng, omega, d, 10, 2);

    const ExpSet sup_phi = aut_support(phi).generators;
    const ExpSet sup_inv = aut_support(aut_inverse(phi)).generators;
    const Int window = Int(10) - max_multiplier_degree(phi);
    bool ok = truncated(sup_phi, d, window) == truncated(sup_inv, d, window);

    const ExpSet sup_rho = aut_support(rho).generators;
    const ExpSet sup_comp = aut_support(aut_compose(phi, rho)).generators;
    const Int window2 =
        Int(10) - std::max(max_multiplier_degree(phi), max_multiplier_degree(rho));
    ExpSet sums;
    auto with_zero = [&](const ExpSet& s) {
      ExpSet out = s;
      out.insert(IntVec::Zero(m));
      return out;
    };
    for (const auto& x : with_zero(sup_phi))
      for (const auto& y : with_zero(sup_rho))
        if (!is_zero_vec(x + y)) sums.insert(x + y);
    for (const auto& v : truncated(sup_comp, d, window2))
      if (!sums.count(v)) ok = false;

    check(ok, case_tag("support lemma", t));
  }
  return r;
}

// --- 6: restriction to extremal rays ------------------------------------------

SuiteResult suite_ray_restriction(std::uint64_t seed) {
  SuiteResult r{"ray-restriction"};
  r.truncation = 10;
  SplitMix64 rng(seed);
  Failures check{&r};
  for (long long t = 0; t < 20; ++t) {
    const Eigen::Index m = rng.range(2, 3);
    const GradingVector d = random_grading(rng, m);
    const Bicharacter omega{to_rat(random_skew_nonzero(rng, m, -2, 2))};
    const Sublattice rad = radical(omega);
    auto noncentral_direction = [&] {
      while (true) {
        const ExpVec a = primitive(random_direction(rng, d, 3));
        if (!rad.contains(a)) return a;
      }
    };
    ExpVec a1 = noncentral_direction();
    ExpVec a2 = noncentral_direction();
    while (vec_eq(a1, a2)) a2 = noncentral_direction();
    const TorusAutomorphism phi =
        aut_compose(hamiltonian_exp(random_rat_nonzero(rng, 3, 6), a1, omega, d, 10),
                    hamiltonian_exp(random_rat_nonzero(rng, 3, 6), a2, omega, d, 10));
    const TorusAutomorphism inv = aut_inverse(phi);
    bool ok = true;
    const auto rays = cone_report(phi).extremal_rays;
    ok = !rays.empty();
    for (const auto& ray : rays) {
      const TorusAutomorphism restricted = aut_restrict_to_ray(phi, ray);
      ok = ok && is_poisson_hom(restricted);
      ok = ok && aut_equal(aut_restrict_to_ray(inv, ray), aut_inverse(restricted));
    }
    check(ok, case_tag("ray restriction", t));
  }
  return r;
}

// --- 7: build-then-peel factorization -----------------------------------------

SuiteResult suite_factorization(std::uint64_t seed) {
  SuiteResult r{"factorization"};
  SplitMix64 rng(seed);
  Failures check{&r};
  for (long long t = 0; t < 30; ++t) {
    const Eigen::Index m = rng.range(2, 3);
    const GradingVector d = random_grading(rng, m);
    const Bicharacter omega{to_rat(random_skew_nonzero(rng, m, -2, 2))};
    ExpVec ray;
    while (true) {
      ray = primitive(random_direction(rng, d, 3));
      bool off_radical = false;
      for (Eigen::Index k = 0; k < m && !off_radical; ++k) {
        ExpVec dk = IntVec::Zero(m);
        dk(k) = Int(1);
        off_radical = !bichar_eval(omega, ray, dk).is_zero();
      }
      if (off_radical) break;
    }
    const long long nmax = (Int(12) / weighted_degree(d, ray)).to_ll();
    std::vector<Rat> expected(static_cast<size_t>(nmax), Rat(0));
    TorusAutomorphism phi = aut_identity(d, omega, 12);
    for (long long n = std::min<long long>(nmax, 4); n >= 1; --n) {
      const Rat a = rng.range(0, 3) == 0 ? Rat(0) : random_rat_nonzero(rng, 5, 12);
      expected[static_cast<size_t>(n - 1)] = a;
      if (!a.is_zero())
        phi = aut_compose(phi, hamiltonian_exp(a, Int(n) * ray, omega, d, 12));
    }
    check(exp_factorize(phi, ray) == expected, case_tag("factorization", t));
  }
  return r;
}

// --- 8: rigidity verdicts ------------------------------------------------------

SuiteResult suite_rigidity(std::uint64_t seed) {
  SuiteResult r{"rigidity"};
  SplitMix64 rng(seed);
  Failures check{&r};
  // Central population: multipliers are polynomials in a central monomial.
  for (long long t = 0; t < 50; ++t) {
    const Eigen::Index m = rng.range(3, 4);
    const GradingVector d = random_grading(rng, m);
    ExpVec v;
    IntMat l;
    while (true) {
      v = random_exp(rng, m, 0, 2);
      if (is_zero_vec(v)) continue;
      v = primitive(v);
      if (weighted_degree(d, v) > Int(4)) continue;
      IntMat vrow(1, m);
      vrow.row(0) = v.transpose();
      const IntMat w = integer_kernel(vrow);
      const IntMat s = random_skew_nonzero(rng, w.rows(), -2, 2);
      l = w.transpose() * s * w;
      bool nonzero = false;
      for (Eigen::Index i = 0; i < m && !nonzero; ++i)
        for (Eigen::Index j = 0; j < m && !nonzero; ++j) nonzero = !l(i, j).is_zero();
      if (nonzero) break;
    }
    const Bicharacter omega{to_rat(l)};
    std::vector<LaurentPoly> fs;
    for (Eigen::Index k = 0; k < m; ++k) {
      LaurentPoly f(m);
      f.add_term(v, k == 0 ? random_rat_nonzero(rng, 4, 6) : random_rat(rng, -4, 4, 6));
      f.add_term(Int(2) * v, random_rat(rng, -4, 4, 6));
      fs.push_back(std::move(f));
    }
    const TorusAutomorphism phi = aut_from_multipliers(d, omega, fs, 12);
    const RigidityVerdict verdict = rigidity_check(phi);
    check(verdict.central && !verdict.witness.has_value(), case_tag("rigidity central", t));
  }
  // Hamiltonian flows along non-radical rays.
  for (long long t = 0; t < 50; ++t) {
    const Eigen::Index m = rng.range(2, 4);
    const GradingVector d = random_grading(rng, m);
    const Bicharacter omega{to_rat(random_skew_nonzero(rng, m, -2, 2))};
    const Sublattice rad = radical(omega);
    ExpVec alpha;
    while (true) {
      alpha = random_direction(rng, d, 3);
      if (!rad.contains(alpha)) break;
    }
    const TorusAutomorphism phi =
        hamiltonian_exp(random_rat_nonzero(rng, 3, 6), alpha, omega, d, 12);
    const RigidityVerdict verdict = rigidity_check(phi);
    const bool ok = !verdict.central && verdict.witness.has_value() &&
                    vec_eq(*verdict.witness, primitive(alpha)) &&
                    !rad.contains(*verdict.witness);
    check(ok, case_tag("rigidity witness", t));
  }
  return r;
}

// --- 9/10: compatible pairs ----------------------------------------------------

struct PairCase {
  ExchangeMatrix b;
  IntMat lambda;
};

IntMat random_symmetrizable_principal(SplitMix64& rng, Eigen::Index n) {
  IntVec d(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = Int(rng.range(0, 1) == 0 ? 1 : 2);
  IntMat b = IntMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (d(i) == d(j)) {
        b(i, j) = Int(rng.range(-2, 2));
        b(j, i) = -b(i, j);
      } else if (d(i) > d(j)) {
        b(i, j) = Int(rng.range(-1, 1));
        b(j, i) = Int(-2) * b(i, j);
      } else {
        b(i, j) = Int(2) * Int(rng.range(-1, 1));
        b(j, i) = -(b(i, j) / Int(2));
      }
    }
  return b;
}

std::vector<PairCase> solver_pairs(std::uint64_t seed, long long want) {
  SplitMix64 rng(seed);
  std::vector<PairCase> out;
  long long guard = 0;
  while (static_cast<long long>(out.size()) < want) {
    if (++guard > 100000) throw std::logic_error("pair generation stalled");
    const Eigen::Index n = rng.range(2, 4);
    const Eigen::Index m = rng.range(n, 6);
    IntMat bt(m, n);
    bt.topRows(n) = random_symmetrizable_principal(rng, n);
    for (Eigen::Index i = n; i < m; ++i)
      for (Eigen::Index j = 0; j < n; ++j) bt(i, j) = Int(rng.range(-2, 2));
    ExchangeMatrix b{std::move(bt)};
    const auto lambda = find_compatible_lambda(b);
    if (!lambda) continue;
    out.push_back(PairCase{std::move(b), *lambda});
  }
  return out;
}

SuiteResult suite_compatible_transport(std::uint64_t seed) {
  SuiteResult r{"compatible-transport"};
  Failures check{&r};
  for (long long t = 0; const PairCase& pc : solver_pairs(seed, 30)) {
    const auto d0 = is_compatible(pc.lambda, pc.b);
    bool ok = d0.has_value();
    for (Eigen::Index k = 0; ok && k < pc.b.cols(); ++k) {
      const IntMat lam1 = mutate_lambda(pc.lambda, pc.b, k);
      const ExchangeMatrix b1 = mutate_b(pc.b, k);
      const auto d1 = is_compatible(lam1, b1);
      ok = d1.has_value() && vec_eq(*d1, *d0);
      ok = ok && mat_eq(mutate_b(b1, k).matrix(), pc.b.matrix());
      ok = ok && mat_eq(mutate_lambda(lam1, b1, k), pc.lambda);
    }
    check(ok, case_tag("compatibility transport", t++));
  }
  return r;
}

SuiteResult suite_toric_rank(std::uint64_t seed) {
  SuiteResult r{"toric-rank"};
  Failures check{&r};
  for (long long t = 0; const PairCase& pc : solver_pairs(seed, 30)) {
    check(toric_lattice(pc.b).rank() == pc.b.rows() - pc.b.cols(),
          case_tag("toric rank", t++));
  }
  return r;
}

// --- 11/12: Schubert-cell centers and root-system sanity ------------------------

const std::vector<std::string>& schubert_types() {
  static const std::vector<std::string> types{"A1", "A2", "A3", "A4", "B2",
                                              "B3", "C3", "D4", "G2"};
  return types;
}

SuiteResult suite_schubert_centers(std::uint64_t seed) {
  SuiteResult r{"schubert-centers"};
  SplitMix64 rng(seed);
  Failures check{&r};
  for (const auto& type : schubert_types()) {
    const CartanData cd = CartanData::from_string(type);
    const TauData tau = tau_involution(cd);
    const auto expected_rank =
        static_cast<Eigen::Index>(tau.fixed.size() + tau.orbit_reps.size());
    std::vector<std::vector<int>> words{w0_reduced_word(cd)};
    for (int i = 0; i < 5; ++i)
      words.push_back(shuffle_word(cd, words[0], rng, 10 * static_cast<int>(words[0].size())));
    for (size_t w = 0; w < words.size(); ++w) {
      const bool ok = verify_center(cd, words[w]) &&
                      radical(minor_bracket_matrix(cd, words[w])).rank() == expected_rank;
      check(ok, type + " word " + std::to_string(w));
    }
  }
  return r;
}

SuiteResult suite_rootsys_sanity(std::uint64_t seed) {
  SuiteResult r{"rootsys-sanity"};
  (void)seed;
  Failures check{&r};
  const std::map<std::string, std::vector<int>> frozen_tau{
      {"A1", {0}},          {"A2", {1, 0}},       {"A3", {2, 1, 0}},
      {"A4", {3, 2, 1, 0}}, {"B2", {0, 1}},       {"B3", {0, 1, 2}},
      {"C3", {0, 1, 2}},    {"D4", {0, 1, 2, 3}}, {"G2", {0, 1}}};
  for (const auto& type : schubert_types()) {
    const CartanData cd = CartanData::from_string(type);
    const ConvexOrder order = positive_roots_convex(cd, w0_reduced_word(cd));
    bool counts = static_cast<long long>(order.roots.size()) == cd.positive_root_count();
    ExpSet distinct;
    for (const auto& beta : order.roots) {
      distinct.insert(beta);
      counts = counts && height(beta) >= Int(1);
    }
    counts = counts && static_cast<long long>(distinct.size()) == cd.positive_root_count();
    check(counts, type + " positive root count");

    check(tau_involution(cd).tau == frozen_tau.at(type), type + " tau involution");

    const IntMat mc = m_coefficients(cd);
    bool mok = true;
    for (Eigen::Index j = 0; j < cd.rank(); ++j) {
      bool col_nonzero = false;
      for (Eigen::Index i = 0; i < cd.rank(); ++i) {
        mok = mok && mc(i, j).sign() >= 0;
        col_nonzero = col_nonzero || !mc(i, j).is_zero();
      }
      mok = mok && col_nonzero;
    }
    check(mok, type + " m-coefficients");
  }
  return r;
}

using SuiteFn = SuiteResult (*)(std::uint64_t);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg{
      {"radical-oracle", suite_radical_oracle},
      {"poisson-axioms", suite_poisson_axioms},
      {"exp-closed-form", suite_exp_closed_form},
      {"inverse-roundtrip", suite_inverse_roundtrip},
      {"support-lemma", suite_support_lemma},
      {"ray-restriction", suite_ray_restriction},
      {"factorization", suite_factorization},
      {"rigidity", suite_rigidity},
      {"compatible-transport", suite_compatible_transport},
      {"toric-rank", suite_toric_rank},
      {"schubert-centers", suite_schubert_centers},
      {"rootsys-sanity", suite_rootsys_sanity}};
  return reg;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(seed);
  throw SchemaError("unknown suite '" + name + "'");
}

}  // namespace qpt
