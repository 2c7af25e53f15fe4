// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#include "conedet/rational.hpp"

#include <boost/multiprecision/gmp.hpp>
#include <cctype>
#include <sstream>

namespace conedet::exact {

namespace {

using Integer = boost::multiprecision::mpz_int;

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(s)) throw SchemaError("bad rational literal: '" + s + "'");
    return Rational(Integer(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  // Denominators are written as plain positive integers; the sign lives on
  // the numerator.
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw SchemaError("bad rational literal: '" + s + "'");
  }
  const Integer d(den);
  if (d == 0) throw SchemaError("zero denominator in '" + s + "'");
  return Rational(Integer(num)) / Rational(d);
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;  // GMP canonical form already prints "p" or "p/q"
  return os.str();
}

Vec parse_rational_vector(const std::vector<std::string>& parts) {
  Vec v;
  v.reserve(parts.size());
  for (const auto& p : parts) v.push_back(parse_rational(p));
  return v;
}

std::vector<std::string> rational_vector_to_strings(const Vec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(rational_to_string(r));
  return out;
}

}  // namespace conedet::exact
