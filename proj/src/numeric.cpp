#include "qpt/numeric.hpp"

namespace qpt {

namespace {

bool valid_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Int::Int(const std::string& s) {
  if (!valid_integer_literal(s)) throw SchemaError("not an integer: '" + s + "'");
  v_ = Raw(s);
}

Rat::Rat(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    v_ = Raw(Int(s).raw());
    return;
  }
  const Int num(s.substr(0, slash));
  const std::string den_str = s.substr(slash + 1);
  if (!valid_integer_literal(den_str) || den_str[0] == '-')
    throw SchemaError("not a rational: '" + s + "'");
  const Int den(den_str);
  if (den.is_zero()) throw SchemaError("zero denominator: '" + s + "'");
  v_ = Raw(num.raw(), den.raw());
}

std::string Rat::str() const {
  std::string out = numerator().str();
  const Int den = denominator();
  if (den != Int(1)) {
    out += '/';
    out += den.str();
  }
  return out;
}

}  // namespace qpt
