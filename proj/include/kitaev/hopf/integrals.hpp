#pragma once

#include <utility>
#include <vector>

#include "kitaev/hopf/dual.hpp"
#include "kitaev/hopf/group_likes.hpp"

namespace kitaev::hopf {

// Basis of the space of left integrals {L : h L = eps(h) L for all h}, each
// vector scaled so its first nonzero coordinate is 1.  For a Hopf algebra
// this space is a line, and that is asserted.
inline std::vector<Vec> left_integrals(const HopfAlgebra& H) {
  const FieldSpec& F = H.field;
  const int n = H.dim;
  Matrix A(n * n, n);
  for (int a = 0; a < n; ++a)
    for (int p = 0; p < n; ++p)
      for (int j = 0; j < n; ++j) {
        Scalar v = H.mul[a][j][p];
        if (p == j) v = exact::sub(v, H.counit[a]);
        A.at(a * n + p, j) = v;
      }
  std::vector<Vec> basis = exact::kernel_basis(F, A);
  for (Vec& v : basis) {
    int lead = -1;
    for (int i = 0; i < n && lead < 0; ++i)
      if (!exact::is_zero(v[i])) lead = i;
    check(lead >= 0, "zero vector in an integral basis");
    Scalar s = exact::inv(F, v[lead]);
    for (Scalar& c : v) c = exact::mul(F, s, c);
  }
  check(basis.size() == 1, "the space of left integrals must be a line");
  return basis;
}

// The unique character alpha with L h = alpha(h) L for the left integral L.
inline Character distinguished_character(const HopfAlgebra& H) {
  const FieldSpec& F = H.field;
  Vec L = left_integrals(H).front();
  int lead = 0;
  while (exact::is_zero(L[lead])) ++lead;
  Character alpha{Vec(H.dim)};
  for (int i = 0; i < H.dim; ++i) {
    Vec w = mul_elem(H, L, basis_vec(H.dim, i));
    Scalar a = exact::div(F, w[lead], L[lead]);
    for (int t = 0; t < H.dim; ++t)
      check(w[t] == exact::mul(F, a, L[t]),
            "the right action on the integral is not by scalars");
    alpha.values[i] = a;
  }
  check(is_character(H, alpha), "distinguished functional is not a character");
  return alpha;
}

struct Distinguished {
  Character alpha;  // distinguished character of H
  GroupLike a;      // distinguished group-like of H (dual's character)
};

inline Distinguished distinguished(const HopfAlgebra& H) {
  Character alpha = distinguished_character(H);
  Character on_dual = distinguished_character(dual(H));
  GroupLike a{on_dual.values};
  check(is_group_like(H, a.coords), "distinguished element is not group-like");
  return {std::move(alpha), std::move(a)};
}

// eps(L) != 0 detects semisimplicity in characteristic zero.
inline bool is_semisimple(const HopfAlgebra& H) {
  return !exact::is_zero(eval_cov(H.field, H.counit, left_integrals(H).front()));
}

}  // namespace kitaev::hopf
