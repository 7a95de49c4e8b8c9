#pragma once

#include <gmpxx.h>

#include <string>

#include "kitaev/common.hpp"

namespace kitaev::exact {

// Arbitrary-precision rational numbers, always kept canonicalized.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  check(den != 0, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p" or "p/q" with optional leading '-'.
inline Rational rat_from_string(const std::string& s) {
  check(!s.empty(), "empty rational literal");
  Rational r;
  try {
    r = Rational(s);
  } catch (const std::invalid_argument&) {
    throw error("malformed rational literal: '" + s + "'");
  }
  check(r.get_den() != 0, "rational literal with zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace kitaev::exact
