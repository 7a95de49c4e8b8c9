#pragma once

#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "kitaev/common.hpp"
#include "kitaev/exact/rational.hpp"

namespace kitaev::exact {

// ---------------------------------------------------------------- polynomials

// Dense polynomial over Q, coefficients in ascending degree, trailing zeros
// trimmed (the zero polynomial is the empty vector).
using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

// Euclidean division a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  check(!b.empty(), "polynomial division by zero");
  Poly r = a, q;
  const int db = poly_deg(b);
  if (poly_deg(r) >= db) q.assign(r.size() - b.size() + 1, rat(0));
  while (poly_deg(r) >= db) {
    const int k = poly_deg(r) - db;
    Rational c = r.back() / b.back();
    q[k] = c;
    for (int j = 0; j <= db; ++j) r[k + j] -= c * b[j];
    poly_trim(r);
  }
  poly_trim(q);
  return {q, r};
}

// The N-th cyclotomic polynomial, computed as (x^N - 1) / prod_{d|N, d<N} Phi_d.
inline Poly cyclotomic_poly(long N) {
  static std::map<long, Poly> cache;
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  Poly p(N + 1, rat(0));
  p[0] = rat(-1);
  p[N] = rat(1);
  for (long d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    auto [q, r] = poly_divmod(p, cyclotomic_poly(d));
    check(r.empty(), "cyclotomic recursion: division must be exact");
    p = q;
  }
  cache[N] = p;
  return p;
}

// ---------------------------------------------------------------- field spec

// The coefficient field Q(zeta_N) = Q[x] / Phi_N(x).  Elements are coefficient
// vectors of length <= deg in the power basis 1, zeta, ..., zeta^(deg-1).
//
// Convention for N = 1: the field is plain Q; minimal_poly stores the
// placeholder x (coefficients [0, 1]) and deg = 1, so scalars are single
// rationals and no reduction ever happens.  zeta evaluates to 1.
struct FieldSpec {
  long cyclotomic_order = 1;
  Poly minimal_poly;               // monic, ascending coefficients
  int deg = 1;                     // degree of the extension
  std::vector<Poly> xpow_red;      // x^(deg+t) reduced mod minimal_poly
};

inline FieldSpec make_field(long N) {
  check(N >= 1, "cyclotomic order must be >= 1");
  FieldSpec F;
  F.cyclotomic_order = N;
  if (N == 1) {
    F.minimal_poly = {rat(0), rat(1)};
    F.deg = 1;
    return F;
  }
  F.minimal_poly = cyclotomic_poly(N);
  F.deg = poly_deg(F.minimal_poly);
  check(F.minimal_poly.back() == 1, "minimal polynomial must be monic");
  {
    Poly xN1(N + 1, rat(0));
    xN1[0] = rat(-1);
    xN1[N] = rat(1);
    auto [q, r] = poly_divmod(xN1, F.minimal_poly);
    check(r.empty(), "minimal polynomial must divide x^N - 1");
  }
  // Reduction table: x^deg, x^(deg+1), ..., x^(2*deg-2) mod Phi_N.
  Poly r(F.minimal_poly.begin(), F.minimal_poly.end() - 1);
  for (auto& c : r) c = -c;
  poly_trim(r);
  for (int t = 0; t + 2 <= F.deg; ++t) {
    F.xpow_red.push_back(r);
    Poly s(r.size() + 1, rat(0));
    for (size_t j = 0; j < r.size(); ++j) s[j + 1] = r[j];
    if (poly_deg(s) == F.deg) {
      Rational top = s.back();
      s.pop_back();
      for (int j = 0; j < F.deg; ++j) s[j] -= top * F.minimal_poly[j];
    }
    poly_trim(s);
    r = s;
  }
  return F;
}

// ---------------------------------------------------------------- scalars

// A scalar in Q(zeta_N): coefficient vector in the power basis, trailing
// zeros trimmed (zero is the empty vector).  Comparisons are exact.
struct Scalar {
  std::vector<Rational> c;
  Scalar() = default;
  explicit Scalar(Rational r) {
    if (r != 0) c = {std::move(r)};
  }
  bool operator==(const Scalar&) const = default;
};

inline bool is_zero(const Scalar& a) { return a.c.empty(); }
inline Scalar s_zero() { return {}; }
inline Scalar s_one() { return Scalar(rat(1)); }
inline Scalar s_int(long n) { return Scalar(rat(n)); }
inline Scalar s_rat(Rational r) { return Scalar(std::move(r)); }

inline void s_trim(Scalar& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

inline Scalar add(const Scalar& a, const Scalar& b) {
  Scalar r;
  r.c.resize(std::max(a.c.size(), b.c.size()), rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  s_trim(r);
  return r;
}

inline Scalar neg(const Scalar& a) {
  Scalar r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

inline Scalar sub(const Scalar& a, const Scalar& b) { return add(a, neg(b)); }

// Reduces an arbitrary-degree coefficient vector into the power basis.
inline Scalar reduce_poly(const FieldSpec& F, std::vector<Rational> p) {
  poly_trim(p);
  if (poly_deg(p) - F.deg >= static_cast<int>(F.xpow_red.size())) {
    // Degree beyond the fast table (products stay within it): long division.
    auto [q, r] = poly_divmod(p, F.minimal_poly);
    Scalar s;
    s.c = std::move(r);
    return s;
  }
  for (int k = static_cast<int>(p.size()) - 1; k >= F.deg; --k) {
    if (p[k] == 0) continue;
    const Poly& red = F.xpow_red.at(k - F.deg);
    for (size_t j = 0; j < red.size(); ++j) p[j] += p[k] * red[j];
    p[k] = 0;
  }
  if (static_cast<int>(p.size()) > F.deg) p.resize(F.deg);
  Scalar r;
  r.c = std::move(p);
  s_trim(r);
  return r;
}

inline Scalar mul(const FieldSpec& F, const Scalar& a, const Scalar& b) {
  if (is_zero(a) || is_zero(b)) return {};
  std::vector<Rational> p(a.c.size() + b.c.size() - 1, rat(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) p[i + j] += a.c[i] * b.c[j];
  return reduce_poly(F, std::move(p));
}

// zeta^k.  For N = 1 the root is 1.
inline Scalar s_zeta(const FieldSpec& F, long k = 1) {
  const long N = F.cyclotomic_order;
  if (N == 1) return s_one();
  k %= N;
  if (k < 0) k += N;
  std::vector<Rational> p(k + 1, rat(0));
  p[k] = rat(1);
  return reduce_poly(F, std::move(p));
}

inline Scalar inv(const FieldSpec& F, const Scalar& a) {
  check(!is_zero(a), "inverse of zero");
  if (a.c.size() == 1) return Scalar(1 / a.c[0]);
  // Extended Euclid in Q[x]: u*a + v*Phi = g with g a nonzero constant
  // (the minimal polynomial is irreducible), so a^{-1} = u / g.
  Poly r0 = F.minimal_poly, r1 = a.c;
  Poly s0, s1 = {rat(1)};
  while (poly_deg(r1) > 0) {
    auto [q, r2] = poly_divmod(r0, r1);
    Poly s2 = s0;
    Poly qs1 = poly_mul(q, s1);
    s2.resize(std::max(s2.size(), qs1.size()), rat(0));
    for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
    poly_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  check(!r1.empty(), "gcd with the minimal polynomial vanished");
  for (auto& c : s1) c /= r1[0];
  Scalar result = reduce_poly(F, std::move(s1));
  check(mul(F, a, result) == s_one(), "inverse verification failed");
  return result;
}

inline Scalar div(const FieldSpec& F, const Scalar& a, const Scalar& b) {
  return mul(F, a, inv(F, b));
}

inline Scalar s_pow(const FieldSpec& F, const Scalar& a, long k) {
  check(k >= 0 || !is_zero(a), "negative power of zero");
  if (k < 0) return s_pow(F, inv(F, a), -k);
  Scalar r = s_one(), base = a;
  while (k > 0) {
    if (k & 1) r = mul(F, r, base);
    base = mul(F, base, base);
    k >>= 1;
  }
  return r;
}

// Galois conjugation zeta -> zeta^j for gcd(j, N) = 1; the identity on Q.
inline Scalar galois_conj(const FieldSpec& F, const Scalar& a, long j) {
  const long N = F.cyclotomic_order;
  if (N == 1) return a;
  const long jm = ((j % N) + N) % N;
  check(std::gcd(jm, N) == 1, "Galois conjugation needs gcd(j, N) = 1");
  Scalar r;
  for (size_t e = 0; e < a.c.size(); ++e) {
    if (a.c[e] == 0) continue;
    Scalar t = s_zeta(F, jm * static_cast<long>(e));
    for (auto& c : t.c) c *= a.c[e];
    s_trim(t);
    r = add(r, t);
  }
  return r;
}

}  // namespace kitaev::exact
