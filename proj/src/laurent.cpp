#include "qpt/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace qpt {

LaurentPoly LaurentPoly::monomial(ExpVec e, Rat c) {
  LaurentPoly f(e.size());
  f.add_term(e, c);
  return f;
}

LaurentPoly LaurentPoly::constant(Eigen::Index dim, Rat c) {
  return monomial(IntVec::Zero(dim), std::move(c));
}

Rat LaurentPoly::coeff(const ExpVec& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::add_term(const ExpVec& e, const Rat& c) {
  if (e.size() != dim_) throw PreconditionError("term dimension mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.dim_ != g.dim_) throw PreconditionError("polynomial dimension mismatch");
  LaurentPoly out = f;
  for (const auto& [e, c] : g.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.dim_ != g.dim_) throw PreconditionError("polynomial dimension mismatch");
  LaurentPoly out = f;
  for (const auto& [e, c] : g.terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.dim_ != g.dim_) throw PreconditionError("polynomial dimension mismatch");
  LaurentPoly out(f.dim_);
  for (const auto& [e1, c1] : f.terms_)
    for (const auto& [e2, c2] : g.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

LaurentPoly operator*(const Rat& c, const LaurentPoly& f) {
  LaurentPoly out(f.dim_);
  if (c.is_zero()) return out;
  for (const auto& [e, x] : f.terms_) out.terms_.emplace(e, c * x);
  return out;
}

LaurentPoly LaurentPoly::operator-() const { return Rat(-1) * *this; }

bool operator==(const LaurentPoly& f, const LaurentPoly& g) {
  return f.dim_ == g.dim_ && f.terms_ == g.terms_;
}

LaurentPoly poly_bracket(const LaurentPoly& f, const LaurentPoly& g,
                         const Bicharacter& omega) {
  if (f.dim() != omega.dim() || g.dim() != omega.dim())
    throw PreconditionError("bracket dimension mismatch");
  const Eigen::Index m = f.dim();
  LaurentPoly out(f.dim());
  for (const auto& [e2, c2] : g.terms()) {
    const RatVec lb = omega.matrix() * to_rat(e2);  // shared across f-terms
    for (const auto& [e1, c1] : f.terms()) {
      Rat w(0);
      for (Eigen::Index i = 0; i < m; ++i)
        if (!e1(i).is_zero()) w += Rat(e1(i)) * lb(i);
      if (!w.is_zero()) out.add_term(e1 + e2, c1 * c2 * w);
    }
  }
  return out;
}

ExpSet support(const LaurentPoly& f) {
  ExpSet out;
  for (const auto& [e, c] : f.terms()) out.insert(e);
  return out;
}

LaurentPoly restrict_to_ray(const LaurentPoly& f, const ExpVec& base,
                            const ExpVec& ray) {
  if (base.size() != f.dim() || ray.size() != f.dim())
    throw PreconditionError("restriction dimension mismatch");
  if (is_zero_vec(ray)) throw PreconditionError("zero ray");
  Eigen::Index lead = 0;
  while (ray(lead).is_zero()) ++lead;
  LaurentPoly out(f.dim());
  for (const auto& [e, c] : f.terms()) {
    const IntVec diff = e - base;
    const Rat q(diff(lead), ray(lead));
    if (q.sign() < 0) continue;
    bool on_ray = true;
    for (Eigen::Index i = 0; i < f.dim() && on_ray; ++i)
      on_ray = Rat(diff(i)) == q * Rat(ray(i));
    if (on_ray) out.add_term(e, c);
  }
  return out;
}

LaurentPoly degree_component(const LaurentPoly& f, const GradingVector& d,
                             const Int& n) {
  LaurentPoly out(f.dim());
  for (const auto& [e, c] : f.terms())
    if (weighted_degree(d, e) == n) out.add_term(e, c);
  return out;
}

LaurentPoly truncate_degree(const LaurentPoly& f, const GradingVector& d,
                            const Int& maxdeg) {
  LaurentPoly out(f.dim());
  for (const auto& [e, c] : f.terms())
    if (weighted_degree(d, e) <= maxdeg) out.add_term(e, c);
  return out;
}

namespace {

struct DegTerm {
  const ExpVec* e;
  const Rat* c;
  Int deg;
};

std::vector<DegTerm> by_degree(const LaurentPoly& f, const GradingVector& d) {
  std::vector<DegTerm> out;
  out.reserve(f.terms().size());
  for (const auto& [e, c] : f.terms()) out.push_back({&e, &c, weighted_degree(d, e)});
  std::sort(out.begin(), out.end(),
            [](const DegTerm& a, const DegTerm& b) { return a.deg < b.deg; });
  return out;
}

}  // namespace

LaurentPoly mul_truncated(const LaurentPoly& f, const LaurentPoly& g,
                          const GradingVector& d, const Int& maxdeg) {
  if (f.dim() != g.dim()) throw PreconditionError("polynomial dimension mismatch");
  const auto ft = by_degree(f, d);
  const auto gt = by_degree(g, d);
  LaurentPoly out(f.dim());
  for (const auto& t1 : ft) {
    for (const auto& t2 : gt) {
      if (t1.deg + t2.deg > maxdeg) break;  // both sorted ascending
      out.add_term(*t1.e + *t2.e, *t1.c * *t2.c);
    }
    if (!gt.empty() && t1.deg + gt.front().deg > maxdeg) break;
  }
  return out;
}

std::string to_text(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << " * y^(";
    for (Eigen::Index i = 0; i < e.size(); ++i) {
      if (i > 0) os << ",";
      os << e(i);
    }
    os << ")";
  }
  return os.str();
}

namespace {

std::vector<std::string> split_on(std::string_view s, std::string_view sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    const size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.emplace_back(s.substr(pos));
      return out;
    }
    out.emplace_back(s.substr(pos, next - pos));
    pos = next + sep.size();
  }
}

std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && (s[a] == ' ' || s[a] == '\t')) ++a;
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t')) --b;
  return s.substr(a, b - a);
}

}  // namespace

LaurentPoly poly_from_text(Eigen::Index dim, std::string_view text) {
  LaurentPoly out(dim);
  const std::string whole = strip(std::string(text));
  if (whole.empty()) throw SchemaError("empty polynomial text");
  if (whole == "0") return out;
  for (const std::string& raw_term : split_on(whole, "+")) {
    const std::string term = strip(raw_term);
    const size_t star = term.find('*');
    if (star == std::string::npos)
      throw SchemaError("malformed polynomial term: '" + term + "'");
    const Rat c(strip(term.substr(0, star)));
    std::string mono = strip(term.substr(star + 1));
    if (mono.size() < 5 || mono.substr(0, 3) != "y^(" || mono.back() != ')')
      throw SchemaError("malformed monomial: '" + mono + "'");
    const auto parts = split_on(mono.substr(3, mono.size() - 4), ",");
    if (static_cast<Eigen::Index>(parts.size()) != dim)
      throw SchemaError("monomial arity mismatch: '" + mono + "'");
    ExpVec e(dim);
    for (Eigen::Index i = 0; i < dim; ++i) e(i) = Int(strip(parts[static_cast<size_t>(i)]));
    out.add_term(e, c);
  }
  return out;
}

}  // namespace qpt
