#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "kitaev/hopf/dual.hpp"
#include "kitaev/hopf/hopf_algebra.hpp"

namespace kitaev::hopf {

struct GroupLike {
  Vec coords;
};

// A character is an algebra map H -> k, stored by its values on the basis.
struct Character {
  Vec values;
};

inline bool is_group_like(const HopfAlgebra& H, const Vec& x) {
  return eval_cov(H.field, H.counit, x) == exact::s_one() &&
         comul_elem(H, x) == outer(H.field, x, x);
}

inline Scalar eval_character(const FieldSpec& F, const Character& chi,
                             const Vec& x) {
  return eval_cov(F, chi.values, x);
}

inline bool is_character(const HopfAlgebra& H, const Character& chi) {
  if (eval_cov(H.field, chi.values, H.unit) != exact::s_one()) return false;
  for (int i = 0; i < H.dim; ++i)
    for (int j = 0; j < H.dim; ++j)
      if (eval_cov(H.field, chi.values, H.mul[i][j]) !=
          exact::mul(H.field, chi.values[i], chi.values[j]))
        return false;
  return true;
}

// Convolution product on H*: (f * g)(e_i) = sum_{j,k} D_i(j,k) f(e_j) g(e_k).
inline Character convolve(const HopfAlgebra& H, const Character& f,
                          const Character& g) {
  Character out{Vec(H.dim)};
  for (int i = 0; i < H.dim; ++i) {
    Scalar s;
    for (int j = 0; j < H.dim; ++j) {
      if (exact::is_zero(f.values[j])) continue;
      for (int k = 0; k < H.dim; ++k) {
        const Scalar& d = H.comul[i].at(j, k);
        if (exact::is_zero(d) || exact::is_zero(g.values[k])) continue;
        s = exact::add(s, exact::mul(H.field, d,
                                     exact::mul(H.field, f.values[j], g.values[k])));
      }
    }
    out.values[i] = s;
  }
  return out;
}

// chi^{-1} = chi o S, the convolution inverse of a character.
inline Character convolution_inverse(const HopfAlgebra& H, const Character& chi) {
  Character out{Vec(H.dim)};
  for (int i = 0; i < H.dim; ++i) {
    Scalar s;
    for (int j = 0; j < H.dim; ++j)
      if (!exact::is_zero(H.antipode.at(j, i)) && !exact::is_zero(chi.values[j]))
        s = exact::add(s, exact::mul(H.field, chi.values[j], H.antipode.at(j, i)));
    out.values[i] = s;
  }
  return out;
}

namespace detail {

inline std::vector<mpz_class> positive_divisors(mpz_class v) {
  if (v < 0) v = -v;
  std::vector<mpz_class> out;
  if (v == 0) return out;
  long guard = 0;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      mpz_class e = v / d;
      if (e != d) out.push_back(e);
    }
    if (++guard >= 1000000) {  // stay best-effort on astronomical constants
      out.push_back(v);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Roots of p inside the monomial universe {0} u {+-(r/s) zeta^k}.  Rational
// candidates r/s come from the rational root bound applied to the Galois
// norm of p, which has rational coefficients and the same roots in the
// field.  This finds every root of the form c zeta^k; each use site verifies
// its consumers exactly, so a root outside the universe can only cause a
// miss, never a wrong answer.
inline std::vector<Scalar> monomial_roots(const FieldSpec& F,
                                          const std::vector<Scalar>& p) {
  std::vector<Scalar> roots;
  size_t m = 0;
  while (m < p.size() && exact::is_zero(p[m])) ++m;
  check(m < p.size(), "the zero polynomial has no finite root set");
  if (m > 0) roots.push_back(exact::s_zero());
  std::vector<Scalar> q(p.begin() + static_cast<long>(m), p.end());
  if (q.size() == 1) return roots;

  const long N = F.cyclotomic_order;
  std::vector<Scalar> P = q;
  for (long j = 2; j < N; ++j) {
    if (std::gcd(j, N) != 1) continue;
    std::vector<Scalar> qc(q.size());
    for (size_t t = 0; t < q.size(); ++t) qc[t] = exact::galois_conj(F, q[t], j);
    std::vector<Scalar> r(P.size() + qc.size() - 1);
    for (size_t a = 0; a < P.size(); ++a) {
      if (exact::is_zero(P[a])) continue;
      for (size_t b = 0; b < qc.size(); ++b)
        if (!exact::is_zero(qc[b]))
          r[a + b] = exact::add(r[a + b], exact::mul(F, P[a], qc[b]));
    }
    P = std::move(r);
  }

  mpz_class denom_lcm = 1;
  for (const Scalar& s : P) {
    check(s.c.size() <= 1, "Galois norm must have rational coefficients");
    if (!s.c.empty())
      mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
              s.c[0].get_den().get_mpz_t());
  }
  auto as_int = [&denom_lcm](const Scalar& s) {
    exact::Rational r = s.c.empty() ? exact::rat(0) : s.c[0];
    r *= exact::Rational(denom_lcm);
    r.canonicalize();
    return r.get_num();
  };
  std::vector<mpz_class> rs = positive_divisors(as_int(P.front()));
  std::vector<mpz_class> ss = positive_divisors(as_int(P.back()));

  auto try_add = [&](const Scalar& u) {
    if (!exact::is_zero(exact::eval_poly(F, q, u))) return;
    for (const Scalar& seen : roots)
      if (seen == u) return;
    roots.push_back(u);
  };
  for (const mpz_class& r : rs)
    for (const mpz_class& s : ss) {
      exact::Rational c(r, s);
      c.canonicalize();
      for (int sign = 0; sign < 2; ++sign) {
        exact::Rational cc = sign ? exact::Rational(-c) : c;
        for (long k = 0; k < N; ++k) {
          Scalar u = exact::s_zeta(F, k);
          for (auto& coeff : u.c) coeff *= cc;
          exact::s_trim(u);
          try_add(u);
        }
      }
    }
  return roots;
}

}  // namespace detail

// All x with Delta(x) = x (x) x and eps(x) = 1, found as the simultaneous
// eigenvectors of the coregular operators Phi_i = (f_i (x) id) o Delta: a
// group-like x satisfies Phi_i x = x_i x, so each coordinate is drawn from
// the roots of the characteristic polynomial of Phi_i.  The search is a
// depth-first scan over those candidates, pruned by the bilinear relations
// x_j x_k = sum_i D_i(j,k) x_i, and every survivor is verified exactly, so
// false positives are impossible; completeness holds whenever the
// coordinates are of monomial form c zeta^k (true for group algebras, Taft
// algebras, and their duals).
inline std::vector<GroupLike> group_likes(const HopfAlgebra& H) {
  const FieldSpec& F = H.field;
  const int n = H.dim;

  std::vector<std::vector<Scalar>> cand(n);
  for (int i = 0; i < n; ++i) {
    Matrix phi(n, n);
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) phi.at(j, m) = H.comul[m].at(i, j);
    cand[i] = detail::monomial_roots(F, exact::charpoly(F, phi));
  }

  struct Constraint {
    int j, k;
    std::vector<std::pair<int, Scalar>> rhs;
  };
  std::vector<std::vector<Constraint>> by_level(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Constraint c{j, k, {}};
      int level = std::max(j, k);
      for (int i = 0; i < n; ++i) {
        const Scalar& d = H.comul[i].at(j, k);
        if (exact::is_zero(d)) continue;
        c.rhs.emplace_back(i, d);
        level = std::max(level, i);
      }
      by_level[level].push_back(std::move(c));
    }

  std::vector<GroupLike> found;
  Vec x(n);
  long nodes = 0;
  auto dfs = [&](auto&& self, int depth) -> void {
    check(++nodes < 2000000, "group-like search exceeded its node budget");
    if (depth == n) {
      if (is_group_like(H, x)) found.push_back(GroupLike{x});
      return;
    }
    for (const Scalar& v : cand[depth]) {
      x[depth] = v;
      bool ok = true;
      for (const Constraint& c : by_level[depth]) {
        Scalar lhs = exact::mul(F, x[c.j], x[c.k]);
        Scalar rhs;
        for (const auto& [i, d] : c.rhs)
          if (!exact::is_zero(x[i]))
            rhs = exact::add(rhs, exact::mul(F, d, x[i]));
        if (!(lhs == rhs)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, depth + 1);
    }
    x[depth] = exact::s_zero();
  };
  dfs(dfs, 0);

  for (const GroupLike& g : found) {
    Vec sg = exact::apply(F, H.antipode, g.coords);
    check(mul_elem(H, g.coords, sg) == H.unit &&
              mul_elem(H, sg, g.coords) == H.unit,
          "group-like element is not inverted by the antipode");
  }
  Matrix rows(static_cast<int>(found.size()), n);
  for (int r = 0; r < rows.rows; ++r)
    for (int c = 0; c < n; ++c) rows.at(r, c) = found[r].coords[c];
  check(exact::rank(F, rows) == rows.rows,
        "group-like elements must be linearly independent");
  return found;
}

// Characters of H are the group-likes of the dual, read as value vectors.
inline std::vector<Character> characters(const HopfAlgebra& H) {
  std::vector<Character> out;
  for (const GroupLike& g : group_likes(dual(H))) {
    Character chi{g.coords};
    check(is_character(H, chi), "dual group-like is not a character");
    out.push_back(std::move(chi));
  }
  return out;
}

}  // namespace kitaev::hopf
