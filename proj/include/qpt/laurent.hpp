#pragma once

#include "qpt/lattice.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>

namespace qpt {

using ExpSet = std::set<ExpVec, LexLess>;

/// Finite rational linear combination of Laurent monomials y^e, e in Z^m.
/// Zero coefficients are never stored; term order is lexicographic.
class LaurentPoly {
 public:
  using TermMap = std::map<ExpVec, Rat, LexLess>;

  explicit LaurentPoly(Eigen::Index dim) : dim_(dim) {
    if (dim < 1) throw PreconditionError("ambient dimension must be positive");
  }

  static LaurentPoly monomial(ExpVec e, Rat c);
  static LaurentPoly constant(Eigen::Index dim, Rat c);
  static LaurentPoly one(Eigen::Index dim) { return constant(dim, Rat(1)); }

  Eigen::Index dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  Rat coeff(const ExpVec& e) const;

  /// Adds c * y^e, dropping the term if the sum cancels.
  void add_term(const ExpVec& e, const Rat& c);

  friend LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator*(const Rat& c, const LaurentPoly& f);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& f, const LaurentPoly& g);

 private:
  Eigen::Index dim_;
  TermMap terms_;
};

/// {y^a, y^b} = W(a, b) y^{a+b}, extended bilinearly over the terms.
LaurentPoly poly_bracket(const LaurentPoly& f, const LaurentPoly& g,
                         const Bicharacter& omega);

/// Exponents with nonzero coefficient.
ExpSet support(const LaurentPoly& f);

/// Keeps exactly the terms whose exponent is base + q*ray for some
/// nonnegative rational q.
LaurentPoly restrict_to_ray(const LaurentPoly& f, const ExpVec& base,
                            const ExpVec& ray);

/// Terms of weighted degree exactly n.
LaurentPoly degree_component(const LaurentPoly& f, const GradingVector& d,
                             const Int& n);

/// Terms of weighted degree <= maxdeg.
LaurentPoly truncate_degree(const LaurentPoly& f, const GradingVector& d,
                            const Int& maxdeg);

/// Product with every result term of weighted degree > maxdeg dropped.
LaurentPoly mul_truncated(const LaurentPoly& f, const LaurentPoly& g,
                          const GradingVector& d, const Int& maxdeg);

/// Canonical text form: terms in lexicographic order, joined by " + ",
/// each as "coeff * y^(e1,...,em)"; the zero polynomial prints as "0".
std::string to_text(const LaurentPoly& f);

/// Parses the canonical text form (ambient dimension given by the caller).
LaurentPoly poly_from_text(Eigen::Index dim, std::string_view text);

}  // namespace qpt
