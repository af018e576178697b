#include "qpt/serialize.hpp"

namespace qpt {

Json json_of(const Rat& x) { return x.str(); }

Json json_of(const Int& x) { return x.str(); }

Json json_of(const IntVec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

Json json_of(const IntMat& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(json_of(IntVec(m.row(i).transpose())));
  return out;
}

Json json_of(const RatMat& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    out.push_back(std::move(row));
  }
  return out;
}

Json json_of(const Sublattice& lat) {
  return Json{{"rank", lat.rank()}, {"basis", json_of(lat.basis())}};
}

Json json_of(const LaurentPoly& f) { return to_text(f); }

Json json_of(const TorusAutomorphism& phi) {
  Json mult = Json::array();
  for (Eigen::Index k = 0; k < phi.dim(); ++k) mult.push_back(to_text(phi.multiplier(k)));
  return Json{{"D", json_of(phi.grading().entries())},
              {"L", json_of(phi.form().matrix())},
              {"N", phi.truncation()},
              {"multipliers", std::move(mult)}};
}

namespace {

std::string scalar_string(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw SchemaError(std::string("expected a string-encoded ") + what);
}

}  // namespace

Rat rat_from_json(const Json& j) { return Rat(scalar_string(j, "rational")); }

Int int_from_json(const Json& j) { return Int(scalar_string(j, "integer")); }

IntVec int_vec_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of integers");
  IntVec v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const auto& x : j) v(i++) = int_from_json(x);
  return v;
}

IntMat int_mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw SchemaError("expected a nonempty matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  IntVec first = int_vec_from_json(j.at(0));
  IntMat m(rows, first.size());
  m.row(0) = first.transpose();
  for (Eigen::Index i = 1; i < rows; ++i) {
    IntVec row = int_vec_from_json(j.at(static_cast<size_t>(i)));
    if (row.size() != m.cols()) throw SchemaError("ragged matrix");
    m.row(i) = row.transpose();
  }
  return m;
}

RatMat rat_mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw SchemaError("expected a nonempty matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  RatMat m;
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& jr = j.at(static_cast<size_t>(i));
    if (!jr.is_array()) throw SchemaError("expected a matrix row");
    if (i == 0) m = RatMat(rows, static_cast<Eigen::Index>(jr.size()));
    if (static_cast<Eigen::Index>(jr.size()) != m.cols()) throw SchemaError("ragged matrix");
    Eigen::Index col = 0;
    for (const auto& x : jr) m(i, col++) = rat_from_json(x);
  }
  return m;
}

Json word_to_json(const std::vector<int>& word) {
  Json out = Json::array();
  for (int i : word) out.push_back(i + 1);
  return out;
}

std::vector<int> word_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected a word as an array of indices");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw SchemaError("word entries must be integers");
    const long long v = x.get<long long>();
    if (v < 1) throw SchemaError("word entries are 1-based positive indices");
    out.push_back(static_cast<int>(v - 1));
  }
  return out;
}

}  // namespace qpt
