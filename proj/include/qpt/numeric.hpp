#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qpt {

/// Malformed documents, text forms, or out-of-contract field values.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Violated mathematical precondition of an operation.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Arbitrary-precision integer. Thin value wrapper around cpp_int: the
/// wrapper exposes only SFINAE-friendly constructors, which keeps Eigen's
/// overload probing away from boost.multiprecision internals.
class Int {
 public:
  using Raw = boost::multiprecision::cpp_int;

  Int() = default;
  Int(long long v) : v_(v) {}
  explicit Int(Raw v) : v_(std::move(v)) {}
  explicit Int(const std::string& s);

  const Raw& raw() const { return v_; }

  friend Int operator+(const Int& a, const Int& b) { return Int(Raw(a.v_ + b.v_)); }
  friend Int operator-(const Int& a, const Int& b) { return Int(Raw(a.v_ - b.v_)); }
  friend Int operator*(const Int& a, const Int& b) { return Int(Raw(a.v_ * b.v_)); }

  /// Quotient truncated toward zero, as for built-in integers.
  friend Int operator/(const Int& a, const Int& b) {
    if (b.v_.is_zero()) throw PreconditionError("integer division by zero");
    return Int(Raw(a.v_ / b.v_));
  }
  friend Int operator%(const Int& a, const Int& b) {
    if (b.v_.is_zero()) throw PreconditionError("integer division by zero");
    return Int(Raw(a.v_ % b.v_));
  }

  Int operator-() const { return Int(Raw(-v_)); }
  Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
  Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
  Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
    const int c = a.v_.compare(b.v_);
    return c <=> 0;
  }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  std::string str() const { return v_.str(); }

  /// Checked narrowing; throws if the value does not fit.
  long long to_ll() const {
    if (*this < Int(std::numeric_limits<long long>::min()) ||
        *this > Int(std::numeric_limits<long long>::max()))
      throw PreconditionError("integer out of machine range");
    return v_.convert_to<long long>();
  }

  friend std::ostream& operator<<(std::ostream& os, const Int& a) { return os << a.v_; }

 private:
  Raw v_;
};

inline Int abs(const Int& a) { return a.sign() < 0 ? -a : a; }

inline Int gcd(const Int& a, const Int& b) {
  return Int(boost::multiprecision::gcd(a.raw(), b.raw()));
}

inline Int lcm(const Int& a, const Int& b) {
  return Int(boost::multiprecision::lcm(a.raw(), b.raw()));
}

/// Floor quotient; b must be nonzero.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (!(a - q * b).is_zero() && (a.sign() < 0) != (b.sign() < 0)) q -= Int(1);
  return q;
}

/// Exact rational number, always in lowest terms.
class Rat {
 public:
  using Raw = boost::multiprecision::cpp_rational;

  Rat() = default;
  Rat(long long v) : v_(v) {}
  Rat(const Int& v) : v_(v.raw()) {}
  Rat(const Int& num, const Int& den) {
    if (den.is_zero()) throw PreconditionError("zero denominator");
    // boost::rational rejects negative denominators outright; normalize here.
    if (den.sign() < 0)
      v_ = Raw((-num).raw(), (-den).raw());
    else
      v_ = Raw(num.raw(), den.raw());
  }
  explicit Rat(Raw v) : v_(std::move(v)) {}
  explicit Rat(const std::string& s);

  const Raw& raw() const { return v_; }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(Raw(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(Raw(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(Raw(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.v_.is_zero()) throw PreconditionError("rational division by zero");
    return Rat(Raw(a.v_ / b.v_));
  }

  Rat operator-() const { return Rat(Raw(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = a.v_.compare(b.v_);
    return c <=> 0;
  }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  Int numerator() const { return Int(boost::multiprecision::numerator(v_)); }
  Int denominator() const { return Int(boost::multiprecision::denominator(v_)); }
  bool is_integer() const { return boost::multiprecision::denominator(v_) == 1; }

  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Rat& a) { return os << a.str(); }

 private:
  Raw v_;
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

}  // namespace qpt

// NumTraits must be visible before the first Matrix<Int>/Matrix<Rat>
// instantiation below.
namespace Eigen {

template <>
struct NumTraits<qpt::Int> : GenericNumTraits<qpt::Int> {
  typedef qpt::Int Real;
  typedef qpt::Rat NonInteger;
  typedef qpt::Int Nested;
  typedef qpt::Int Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
  static inline Real epsilon() { return qpt::Int(0); }
  static inline Real dummy_precision() { return qpt::Int(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<qpt::Rat> : GenericNumTraits<qpt::Rat> {
  typedef qpt::Rat Real;
  typedef qpt::Rat NonInteger;
  typedef qpt::Rat Nested;
  typedef qpt::Rat Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 120,
    MulCost = 200
  };
  static inline Real epsilon() { return qpt::Rat(0); }
  static inline Real dummy_precision() { return qpt::Rat(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qpt {

// --- dense types -----------------------------------------------------------

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// Exponent vector of a Laurent monomial.
using ExpVec = IntVec;

/// Strict lexicographic order (shorter vectors first); usable as a map key
/// comparator for exponent vectors.
struct LexLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a(i) != b(i)) return a(i) < b(i);
    return false;
  }
};

inline bool vec_eq(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

inline bool mat_eq(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline bool mat_eq(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline bool is_zero_vec(const IntVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

inline RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rat(v(i));
  return r;
}

inline RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

inline IntVec int_vec(std::initializer_list<long long> xs) {
  IntVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long long x : xs) v(i++) = Int(x);
  return v;
}

inline IntMat int_mat(std::initializer_list<std::initializer_list<long long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r > 0 ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  IntMat m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c)
      throw PreconditionError("ragged matrix literal");
    Eigen::Index j = 0;
    for (long long x : row) m(i, j++) = Int(x);
    ++i;
  }
  return m;
}

/// Deterministic PRNG (splitmix64); all randomized suites seed it explicitly,
/// so reports are reproducible across runs and platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi], inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace qpt
