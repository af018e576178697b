#include "qpt/job.hpp"

#include "qpt/cluster.hpp"
#include "qpt/schubert.hpp"
#include "qpt/suites.hpp"
#include "qpt/version.hpp"

namespace qpt {

namespace {

constexpr int kDefaultTruncation = 12;

const Json& field(const Json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + name + "'");
  return *it;
}

int truncation_of(const Json& job, const JobOptions& options) {
  int n = kDefaultTruncation;
  if (options.truncation_override > 0) {
    n = options.truncation_override;
  } else if (job.contains("N")) {
    const Json& jn = job.at("N");
    if (!jn.is_number_integer()) throw SchemaError("N must be an integer");
    n = jn.get<int>();
  }
  if (n < 1 || n > 64) throw SchemaError("truncation N must lie in [1, 64]");
  return n;
}

Bicharacter bichar_of(const Json& job) { return Bicharacter(rat_mat_from_json(field(job, "L"))); }

GradingVector grading_of(const Json& job) {
  return GradingVector(int_vec_from_json(field(job, "D")));
}

TorusAutomorphism aut_of(const Json& job, const GradingVector& d, const Bicharacter& omega,
                         int n) {
  if (job.contains("factors")) {
    const Json& jf = job.at("factors");
    if (!jf.is_array()) throw SchemaError("factors must be an array");
    TorusAutomorphism phi = aut_identity(d, omega, n);
    // Listed factors act first-to-last: the first factor is applied first.
    for (const auto& f : jf) {
      const Rat a = rat_from_json(field(f, "a"));
      const ExpVec alpha = int_vec_from_json(field(f, "alpha"));
      phi = aut_compose(hamiltonian_exp(a, alpha, omega, d, n), phi);
    }
    return phi;
  }
  if (job.contains("multipliers")) {
    const Json& jm = job.at("multipliers");
    if (!jm.is_array()) throw SchemaError("multipliers must be an array of polynomial texts");
    std::vector<LaurentPoly> us;
    for (const auto& s : jm) {
      if (!s.is_string()) throw SchemaError("multipliers must be polynomial texts");
      us.push_back(poly_from_text(d.dim(), s.get<std::string>()));
    }
    return TorusAutomorphism(d, omega, std::move(us), n);
  }
  throw SchemaError("automorphism payload needs 'factors' or 'multipliers'");
}

Json envelope(const std::string& command, int truncation, Json result) {
  return Json{{"command", command},
              {"version", kVersion},
              {"truncation", truncation},
              {"result", std::move(result)}};
}

Json cmd_radical(const Json& job) {
  const Sublattice rad = radical(bichar_of(job));
  return Json{{"rank", rad.rank()}, {"basis", json_of(rad.basis())}};
}

Json cmd_bracket(const Json& job) {
  const Bicharacter omega = bichar_of(job);
  const LaurentPoly f = poly_from_text(omega.dim(), field(job, "f").get<std::string>());
  const LaurentPoly g = poly_from_text(omega.dim(), field(job, "g").get<std::string>());
  return Json{{"poly", to_text(poly_bracket(f, g, omega))}};
}

Json cmd_exp_aut(const Json& job, int n) {
  const Bicharacter omega = bichar_of(job);
  const GradingVector d = grading_of(job);
  const TorusAutomorphism phi = aut_of(job, d, omega, n);
  const ConeReport cone = cone_report(phi);
  Json support = Json::array();
  for (const auto& v : cone.generators) support.push_back(json_of(v));
  Json rays = Json::array();
  for (const auto& v : cone.extremal_rays) rays.push_back(json_of(v));
  return Json{{"automorphism", json_of(phi)},
              {"poisson", is_poisson_hom(phi)},
              {"support", std::move(support)},
              {"extremal_rays", std::move(rays)}};
}

Json cmd_rigidity(const Json& job, int n) {
  const Bicharacter omega = bichar_of(job);
  const GradingVector d = grading_of(job);
  const RigidityVerdict verdict = rigidity_check(aut_of(job, d, omega, n));
  Json out{{"central", verdict.central}};
  if (verdict.witness) out["witness"] = json_of(*verdict.witness);
  return out;
}

Json cmd_factorize(const Json& job, int n) {
  const Bicharacter omega = bichar_of(job);
  const GradingVector d = grading_of(job);
  const ExpVec ray = int_vec_from_json(field(job, "ray"));
  Json coeffs = Json::array();
  for (const Rat& a : exp_factorize(aut_of(job, d, omega, n), ray)) coeffs.push_back(a.str());
  return Json{{"coefficients", std::move(coeffs)}};
}

Json cmd_restrict(const Json& job, int n) {
  const Bicharacter omega = bichar_of(job);
  const GradingVector d = grading_of(job);
  const ExpVec ray = int_vec_from_json(field(job, "ray"));
  const TorusAutomorphism restricted = aut_restrict_to_ray(aut_of(job, d, omega, n), ray);
  return Json{{"automorphism", json_of(restricted)}};
}

Eigen::Index mutable_index_of(const Json& job, const ExchangeMatrix& b) {
  const Json& jk = field(job, "k");
  if (!jk.is_number_integer()) throw SchemaError("k must be an integer");
  const long long k = jk.get<long long>();
  if (k < 1 || k > b.cols()) throw SchemaError("k must lie in [1, n]");
  return static_cast<Eigen::Index>(k - 1);
}

Json cmd_mutate(const Json& job) {
  const ExchangeMatrix b{int_mat_from_json(field(job, "B"))};
  const Eigen::Index k = mutable_index_of(job, b);
  Json out{{"B", json_of(mutate_b(b, k).matrix())}};
  if (job.contains("lambda")) {
    const IntMat lambda = int_mat_from_json(job.at("lambda"));
    out["lambda"] = json_of(mutate_lambda(lambda, b, k));
    if (const auto d = is_compatible(lambda, b)) out["d"] = json_of(*d);
  }
  return out;
}

Json cmd_compat(const Json& job) {
  const ExchangeMatrix b{int_mat_from_json(field(job, "B"))};
  if (job.contains("lambda")) {
    const auto d = is_compatible(int_mat_from_json(job.at("lambda")), b);
    Json out{{"compatible", d.has_value()}};
    if (d) out["d"] = json_of(*d);
    return out;
  }
  const auto lambda = find_compatible_lambda(b);
  Json out{{"found", lambda.has_value()}};
  if (lambda) {
    out["lambda"] = json_of(*lambda);
    out["d"] = json_of(*is_compatible(*lambda, b));
  }
  return out;
}

Json cmd_toric(const Json& job) {
  const ExchangeMatrix b{int_mat_from_json(field(job, "B"))};
  return json_of(toric_lattice(b));
}

std::vector<int> word_of(const Json& job, const CartanData& cd) {
  if (job.contains("word")) {
    const auto word = word_from_json(job.at("word"));
    if (!is_reduced_w0_word(cd, word))
      throw PreconditionError("not a reduced word for the longest element");
    return word;
  }
  return w0_reduced_word(cd);
}

Json cmd_schubert(const Json& job) {
  const CartanData cd = CartanData::from_string(field(job, "type").get<std::string>());
  const auto word = word_of(job, cd);
  const Bicharacter omega = minor_bracket_matrix(cd, word);
  Json predicted = Json::array();
  for (const auto& v : predicted_center(cd, word)) predicted.push_back(json_of(v));
  return Json{{"type", cd.name()},
              {"word", word_to_json(word)},
              {"omega", json_of(omega.matrix())},
              {"radical_basis", json_of(radical(omega).basis())},
              {"predicted_basis", std::move(predicted)},
              {"verdict", verify_center(cd, word)},
              {"degrees", json_of(minor_degrees(cd, word).entries())},
              {"ls_leading", json_of(ls_leading_matrix(cd, word).matrix())}};
}

Json cmd_rootsys(const Json& job) {
  const CartanData cd = CartanData::from_string(field(job, "type").get<std::string>());
  const auto word = word_of(job, cd);
  const ConvexOrder order = positive_roots_convex(cd, word);
  Json roots = Json::array();
  Json heights = Json::array();
  for (const auto& beta : order.roots) {
    roots.push_back(json_of(beta));
    heights.push_back(height(beta).to_ll());
  }
  const TauData tau = tau_involution(cd);
  Json tau_json = Json::array();
  for (int i : tau.tau) tau_json.push_back(i + 1);
  Json o1 = Json::array(), o2 = Json::array();
  for (int i : tau.fixed) o1.push_back(i + 1);
  for (int i : tau.orbit_reps) o2.push_back(i + 1);
  return Json{{"type", cd.name()},
              {"cartan", json_of(cd.cartan())},
              {"symmetrizer", json_of(cd.symmetrizer())},
              {"positive_root_count", cd.positive_root_count()},
              {"word", word_to_json(word)},
              {"roots", std::move(roots)},
              {"heights", std::move(heights)},
              {"tau", std::move(tau_json)},
              {"O1", std::move(o1)},
              {"O2", std::move(o2)},
              {"m_coefficients", json_of(m_coefficients(cd))}};
}

}  // namespace

Json run_job(const Json& job, const JobOptions& options) {
  if (!job.is_object()) throw SchemaError("job document must be an object");
  const Json& jc = field(job, "command");
  if (!jc.is_string()) throw SchemaError("command must be a string");
  const std::string command = jc.get<std::string>();
  const int n = truncation_of(job, options);

  Json result;
  if (command == "radical")
    result = cmd_radical(job);
  else if (command == "bracket")
    result = cmd_bracket(job);
  else if (command == "exp-aut")
    result = cmd_exp_aut(job, n);
  else if (command == "rigidity")
    result = cmd_rigidity(job, n);
  else if (command == "factorize")
    result = cmd_factorize(job, n);
  else if (command == "restrict")
    result = cmd_restrict(job, n);
  else if (command == "mutate")
    result = cmd_mutate(job);
  else if (command == "compat")
    result = cmd_compat(job);
  else if (command == "toric")
    result = cmd_toric(job);
  else if (command == "schubert")
    result = cmd_schubert(job);
  else if (command == "rootsys")
    result = cmd_rootsys(job);
  else
    throw SchemaError("unknown command '" + command + "'");
  return envelope(command, n, std::move(result));
}

Json run_suite_report(const std::string& name, std::uint64_t seed) {
  std::vector<std::string> selected;
  if (name == "all")
    selected = suite_names();
  else
    selected.push_back(name);
  Json suites = Json::array();
  bool all_passed = true;
  for (const auto& s : selected) {
    const SuiteResult res = run_suite(s, seed);
    all_passed = all_passed && res.passed();
    Json notes = Json::array();
    for (const auto& note : res.notes) notes.push_back(note);
    suites.push_back(Json{{"name", res.name},
                          {"truncation", res.truncation},
                          {"cases", res.cases},
                          {"failures", res.failures},
                          {"passed", res.passed()},
                          {"notes", std::move(notes)}});
  }
  return Json{{"version", kVersion},
              {"seed", seed},
              {"passed", all_passed},
              {"suites", std::move(suites)}};
}

}  // namespace qpt
