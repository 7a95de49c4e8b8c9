#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "kitaev/exact/field.hpp"

namespace kitaev::exact {

// Scalar string format: '+'-separated terms, each "r", "r*z^k", "z^k" or "z"
// (r a rational "p" or "p/q", z the chosen primitive root of unity).
// Canonical output lists terms by ascending power, e.g. "2+1/2*z^3".

inline std::string scalar_to_string(const Scalar& s) {
  if (is_zero(s)) return "0";
  std::string out;
  for (size_t k = 0; k < s.c.size(); ++k) {
    if (s.c[k] == 0) continue;
    std::string term;
    if (k == 0) {
      term = to_string(s.c[k]);
    } else {
      std::string zpow = (k == 1) ? "z" : "z^" + std::to_string(k);
      if (s.c[k] == 1)
        term = zpow;
      else if (s.c[k] == -1)
        term = "-" + zpow;
      else
        term = to_string(s.c[k]) + "*" + zpow;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

namespace detail {

inline long parse_exponent(const std::string& s) {
  check(!s.empty(), "empty exponent in scalar literal");
  size_t pos = 0;
  long k = 0;
  try {
    k = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw error("malformed exponent '" + s + "' in scalar literal");
  }
  check(pos == s.size(), "malformed exponent '" + s + "' in scalar literal");
  return k;
}

}  // namespace detail

inline Scalar parse_scalar(const FieldSpec& F, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  check(!s.empty(), "empty scalar literal");

  std::vector<std::string> terms;
  std::string cur;
  for (char ch : s) {
    bool is_sign = (ch == '+' || ch == '-');
    bool splits = is_sign && !cur.empty() && cur.back() != '^';
    if (is_sign && cur.empty() && ch == '-') {
      cur += ch;  // sign of the leading term
    } else if (splits) {
      terms.push_back(cur);
      cur = (ch == '-') ? "-" : "";
    } else {
      check(!is_sign || ch == '-', "misplaced '+' in scalar literal");
      cur += ch;
    }
  }
  check(!cur.empty() && cur != "-", "trailing sign in scalar literal");
  terms.push_back(cur);

  Scalar result;
  for (const std::string& term : terms) {
    Rational coeff;
    long k = 0;
    size_t zpos = term.find('z');
    if (zpos == std::string::npos) {
      coeff = rat_from_string(term);
    } else {
      std::string left = term.substr(0, zpos);
      std::string right = term.substr(zpos + 1);
      if (left.empty())
        coeff = rat(1);
      else if (left == "-")
        coeff = rat(-1);
      else {
        check(left.back() == '*',
              "expected '*' before 'z' in scalar term '" + term + "'");
        coeff = rat_from_string(left.substr(0, left.size() - 1));
      }
      if (right.empty()) {
        k = 1;
      } else {
        check(right[0] == '^',
              "expected '^' after 'z' in scalar term '" + term + "'");
        k = detail::parse_exponent(right.substr(1));
      }
    }
    Scalar t = s_zeta(F, k);
    for (auto& c : t.c) c *= coeff;
    s_trim(t);
    result = add(result, t);
  }
  return result;
}

}  // namespace kitaev::exact
