#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kitaev/hopf/group_likes.hpp"
#include "kitaev/hopf/integrals.hpp"

namespace kitaev::hopf {

// Square root of v inside Q(zeta_N), if one exists.  Scans v zeta^{-2k} for
// a nonnegative rational square, which finds every root of monomial form
// (r/s) zeta^k; the result is verified before being returned.
inline std::optional<Scalar> sqrt_in_field(const FieldSpec& F, const Scalar& v) {
  if (exact::is_zero(v)) return exact::s_zero();
  for (long k = 0; k < F.cyclotomic_order; ++k) {
    Scalar w = exact::mul(F, v, exact::s_zeta(F, -2 * k));
    if (w.c.size() != 1) continue;
    const exact::Rational& r = w.c[0];
    if (r < 0) continue;
    mpz_class num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
      continue;
    exact::Rational root_r(sqrt(num), sqrt(den));
    root_r.canonicalize();
    Scalar root = exact::mul(F, exact::s_rat(root_r), exact::s_zeta(F, k));
    check(exact::mul(F, root, root) == v, "square root verification failed");
    return root;
  }
  return std::nullopt;
}

// Matrix of h -> chi^{-1}(h_(1)) chi(h_(3)) p h_(2) p^{-1} for a group-like
// p and a character chi.
inline Matrix ad_matrix(const HopfAlgebra& H, const Vec& p, const Character& chi) {
  const FieldSpec& F = H.field;
  const int n = H.dim;
  check(is_group_like(H, p), "conjugation requires a group-like element");
  Vec pinv = exact::apply(F, H.antipode, p);
  check(mul_elem(H, p, pinv) == H.unit,
        "group-like inverse via the antipode failed");
  Character chi_inv = convolution_inverse(H, chi);

  std::vector<Vec> conj(n);  // p e_k p^{-1}
  for (int k = 0; k < n; ++k)
    conj[k] = mul_elem(H, mul_elem(H, p, basis_vec(n, k)), pinv);
  std::vector<Vec> inner(n);  // chi on the last leg, conjugation on the middle
  for (int m = 0; m < n; ++m) {
    inner[m] = Vec(n);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const Scalar& d = H.comul[m].at(k, l);
        if (exact::is_zero(d) || exact::is_zero(chi.values[l])) continue;
        Scalar c = exact::mul(F, d, chi.values[l]);
        for (int t = 0; t < n; ++t)
          if (!exact::is_zero(conj[k][t]))
            inner[m][t] = exact::add(inner[m][t], exact::mul(F, c, conj[k][t]));
      }
  }
  Matrix M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        const Scalar& d = H.comul[i].at(j, m);
        if (exact::is_zero(d) || exact::is_zero(chi_inv.values[j])) continue;
        Scalar c = exact::mul(F, d, chi_inv.values[j]);
        for (int t = 0; t < n; ++t)
          if (!exact::is_zero(inner[m][t]))
            M.at(t, i) = exact::add(M.at(t, i), exact::mul(F, c, inner[m][t]));
      }
  return M;
}

struct PairInInvolution {
  GroupLike p;
  Character chi;
  bool modular = false;
  // Square root of chi(p): 1 for modular pairs, absent when the field has
  // none (such a pair cannot normalise an involutive structure).
  std::optional<Scalar> zeta;
};

// Exhaustive scan of G(H) x G(H*) for the pairs with S^2 equal to the
// conjugation map of (p, chi).  Pairs whose chi(p) has no square root in
// Q(zeta_N) are still reported, with a note appended to *notes.
inline std::vector<PairInInvolution> pairs_in_involution(
    const HopfAlgebra& H, std::vector<std::string>* notes = nullptr) {
  const FieldSpec& F = H.field;
  Matrix s2 = exact::m_mul(F, H.antipode, H.antipode);
  std::vector<PairInInvolution> out;
  std::vector<Character> chis = characters(H);
  for (const GroupLike& g : group_likes(H))
    for (const Character& chi : chis) {
      if (!(ad_matrix(H, g.coords, chi) == s2)) continue;
      PairInInvolution P{g, chi, false, std::nullopt};
      Scalar cp = eval_character(F, chi, g.coords);
      P.modular = cp == exact::s_one();
      P.zeta = P.modular ? std::optional<Scalar>(exact::s_one())
                         : sqrt_in_field(F, cp);
      if (!P.zeta && notes)
        notes->push_back("pair (" + element_to_string(H, g.coords) +
                         ", chi) with chi(p) = " + exact::scalar_to_string(cp) +
                         " has no square root of chi(p) in the field");
      out.push_back(std::move(P));
    }
  return out;
}

// S^4 equals the conjugation map of (a^{-1}, alpha) for the distinguished
// character alpha and distinguished group-like a.
inline bool check_s4(const HopfAlgebra& H) {
  const FieldSpec& F = H.field;
  Distinguished d = distinguished(H);
  Vec ainv = exact::apply(F, H.antipode, d.a.coords);
  Matrix s2 = exact::m_mul(F, H.antipode, H.antipode);
  return exact::m_mul(F, s2, s2) == ad_matrix(H, ainv, d.alpha);
}

// Conjugation maps of pairs must be Hopf algebra automorphisms: bijective,
// multiplicative, comultiplicative, unital, counital, and S-equivariant.
inline bool ad_is_hopf_automorphism(const HopfAlgebra& H, const Vec& p,
                                    const Character& chi) {
  const FieldSpec& F = H.field;
  const int n = H.dim;
  Matrix M = ad_matrix(H, p, chi);
  if (!exact::inverse(F, M).has_value()) return false;
  if (!(exact::apply(F, M, H.unit) == H.unit)) return false;
  for (int i = 0; i < n; ++i) {
    Vec img(n);
    for (int t = 0; t < n; ++t) img[t] = M.at(t, i);
    if (!(eval_cov(F, H.counit, img) == H.counit[i])) return false;
    Matrix lhs = comul_elem(H, img);
    Matrix rhs(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& d = H.comul[i].at(j, k);
        if (exact::is_zero(d)) continue;
        for (int a = 0; a < n; ++a) {
          if (exact::is_zero(M.at(a, j))) continue;
          Scalar c = exact::mul(F, d, M.at(a, j));
          for (int b = 0; b < n; ++b)
            if (!exact::is_zero(M.at(b, k)))
              rhs.at(a, b) = exact::add(rhs.at(a, b), exact::mul(F, c, M.at(b, k)));
        }
      }
    if (!(lhs == rhs)) return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec mi(n), mj(n);
      for (int t = 0; t < n; ++t) {
        mi[t] = M.at(t, i);
        mj[t] = M.at(t, j);
      }
      if (!(exact::apply(F, M, H.mul[i][j]) == mul_elem(H, mi, mj)))
        return false;
    }
  return exact::m_mul(F, M, H.antipode) == exact::m_mul(F, H.antipode, M);
}

}  // namespace kitaev::hopf
