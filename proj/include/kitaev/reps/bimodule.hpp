#pragma once
// Twisted Hopf bimodules with involution: the bimodule induced by a pair
// in involution, compatibility and involution verification, coinvariants
// with their adjoint-action Yetter-Drinfeld structure, and the unit
// bimodule-bicomodule on H (x) H.
//
// The twisted compatibility law distributes three coproduct legs of the
// right acting element over the three output legs.  Two conventions are
// conceivable for which leg the twist receives (the middle or the final
// one); `twisted_compat_holds` takes the choice as a parameter.  Induced
// bimodules of pairs in involution satisfy the convention where the twist
// receives the final leg (twist_leg = 3) and in general fail the other
// one, so twist_leg = 3 is what `verify_involutive` uses.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kitaev/common.hpp"
#include "kitaev/hopf/pairs.hpp"
#include "kitaev/reps/mod_comod.hpp"

namespace kitaev::reps {

// An H-bimodule and H-bicomodule with involution psi, twisted by S^{-2}.
// Left coaction rows are indexed (i, b) -> i*dim + b for e_i (x) m_b and
// right coaction rows (b, i) -> b*n + i for m_b (x) e_i, as in ModComod.
struct InvolutiveHopfBimodule {
  const HopfAlgebra* over = nullptr;
  int dim = 0;
  std::vector<Matrix> left_action, right_action;
  Matrix left_coaction, right_coaction;
  Matrix psi;
  hopf::PairInInvolution source_pair;
};

namespace detail {

// Action of an arbitrary element: sum of the basis action matrices.
inline Matrix elem_action(const FieldSpec& F, const std::vector<Matrix>& fam,
                          const Vec& v) {
  Matrix out(fam.front().rows, fam.front().cols);
  for (size_t i = 0; i < v.size(); ++i)
    if (!exact::is_zero(v[i]))
      out = exact::m_add(out, exact::m_scale(F, v[i], fam[i]));
  return out;
}

// Triple coaction of a basis element: sparse terms e_i (x) m_b (x) e_j.
struct CoactLeg3 {
  int i = 0, b = 0, j = 0;
  Scalar c;
};

inline std::vector<CoactLeg3> triple_coaction(const InvolutiveHopfBimodule& B,
                                              int a) {
  std::vector<CoactLeg3> out;
  const HopfAlgebra& H = *B.over;
  const int n = H.dim, d = B.dim;
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < d; ++c) {
      const Scalar& lc = B.left_coaction.at(i * d + c, a);
      if (exact::is_zero(lc)) continue;
      for (int b = 0; b < d; ++b)
        for (int j = 0; j < n; ++j) {
          const Scalar& rc = B.right_coaction.at(b * n + j, c);
          if (exact::is_zero(rc)) continue;
          out.push_back({i, b, j, exact::mul(H.field, lc, rc)});
        }
    }
  return out;
}

}  // namespace detail

// The bimodule-bicomodule on the underlying space of H attached to a pair
// in involution (p, chi):
//   g |> m <| h = chi^{-1}(h_(2)) g m h_(1),
//   m_(-1) (x) m_(0) (x) m_(1) = m_(1) (x) m_(2) (x) m_(3) p,
// with involution  psi(m) = zeta chi(m_(1)) p^{-1} S(m_(2)),  normalised by
// the pair's square root zeta of chi(p) so that psi^2 = id.
inline InvolutiveHopfBimodule induced_bimodule(const HopfAlgebra& H,
                                               const hopf::PairInInvolution& pair) {
  check(pair.zeta.has_value(),
        "the pair's chi(p) has no square root in the coefficient field, so "
        "the involution cannot be normalised");
  const FieldSpec& F = H.field;
  const int n = H.dim;
  const Vec& p = pair.p.coords;
  const Vec p_inv = exact::apply(F, H.antipode, p);
  const Character chi_inv = hopf::convolution_inverse(H, pair.chi);

  InvolutiveHopfBimodule B;
  B.over = &H;
  B.dim = n;
  B.source_pair = pair;

  B.left_action.assign(static_cast<size_t>(n), Matrix(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        B.left_action[static_cast<size_t>(i)].at(k, j) =
            H.mul[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];

  B.right_action.assign(static_cast<size_t>(n), Matrix(n, n));
  for (int i = 0; i < n; ++i) {
    const Matrix& D = H.comul[static_cast<size_t>(i)];
    Matrix& R = B.right_action[static_cast<size_t>(i)];
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (exact::is_zero(D.at(j, k))) continue;
        Scalar c = exact::mul(F, D.at(j, k), chi_inv.values[static_cast<size_t>(k)]);
        if (exact::is_zero(c)) continue;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            const Scalar& m = H.mul[static_cast<size_t>(a)][static_cast<size_t>(j)][static_cast<size_t>(b)];
            if (exact::is_zero(m)) continue;
            R.at(b, a) = exact::add(R.at(b, a), exact::mul(F, c, m));
          }
      }
  }

  B.left_coaction = Matrix(n * n, n);
  B.right_coaction = Matrix(n * n, n);
  for (int a = 0; a < n; ++a) {
    const Matrix& D = H.comul[static_cast<size_t>(a)];
    for (int i = 0; i < n; ++i)
      for (int b = 0; b < n; ++b) B.left_coaction.at(i * n + b, a) = D.at(i, b);
    for (int b = 0; b < n; ++b)
      for (int j = 0; j < n; ++j) {
        if (exact::is_zero(D.at(b, j))) continue;
        const Vec jp = hopf::mul_elem(H, hopf::basis_vec(n, j), p);
        for (int i = 0; i < n; ++i) {
          if (exact::is_zero(jp[static_cast<size_t>(i)])) continue;
          Scalar& slot = B.right_coaction.at(b * n + i, a);
          slot = exact::add(slot, exact::mul(F, D.at(b, j), jp[static_cast<size_t>(i)]));
        }
      }
  }

  B.psi = Matrix(n, n);
  for (int a = 0; a < n; ++a) {
    const Matrix& D = H.comul[static_cast<size_t>(a)];
    Vec col(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
      Scalar w;
      for (int j = 0; j < n; ++j)
        w = exact::add(w, exact::mul(F, D.at(j, k), pair.chi.values[static_cast<size_t>(j)]));
      if (exact::is_zero(w)) continue;
      Vec q = hopf::mul_elem(H, p_inv, detail::column(H.antipode, k));
      for (int t = 0; t < n; ++t)
        col[static_cast<size_t>(t)] =
            exact::add(col[static_cast<size_t>(t)],
                       exact::mul(F, w, q[static_cast<size_t>(t)]));
    }
    for (int t = 0; t < n; ++t)
      B.psi.at(t, a) = exact::mul(F, *pair.zeta, col[static_cast<size_t>(t)]);
  }
  return B;
}

// The twisted compatibility of actions and coactions, on all basis triples:
//   (g |> m <| h)_(-1) (x) (g |> m <| h)_(0) (x) (g |> m <| h)_(1)
//     = g_(1) m_(-1) h_(1) (x) g_(2) |> m_(0) <| h_(a) (x) g_(3) m_(1) sigma(h_(b))
// with (a, b) = (2, 3) for twist_leg = 3 and (3, 2) for twist_leg = 2.
inline bool twisted_compat_holds(const InvolutiveHopfBimodule& B,
                                 const Matrix& sigma, int twist_leg = 3) {
  check(twist_leg == 2 || twist_leg == 3, "twist_leg must be 2 or 3");
  const HopfAlgebra& H = *B.over;
  const FieldSpec& F = H.field;
  const int n = H.dim, d = B.dim;
  std::vector<Vec> sig_col(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) sig_col[static_cast<size_t>(i)] = detail::column(sigma, i);
  std::vector<std::vector<detail::CoactLeg3>> tco(static_cast<size_t>(d));
  for (int a = 0; a < d; ++a) tco[static_cast<size_t>(a)] = detail::triple_coaction(B, a);
  std::vector<std::vector<detail::CoprodLeg3>> d2(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) d2[static_cast<size_t>(t)] = detail::comul2(H, t);

  for (int gi = 0; gi < n; ++gi)
    for (int hj = 0; hj < n; ++hj)
      for (int a = 0; a < d; ++a) {
        Vec x = exact::apply(F, B.right_action[static_cast<size_t>(hj)],
                             detail::column(B.left_action[static_cast<size_t>(gi)], a));
        std::vector<Scalar> lhs(static_cast<size_t>(n) * d * n);
        for (int c = 0; c < d; ++c) {
          if (exact::is_zero(x[static_cast<size_t>(c)])) continue;
          for (const auto& T : tco[static_cast<size_t>(c)]) {
            size_t ix = (static_cast<size_t>(T.i) * d + T.b) * n + T.j;
            lhs[ix] = exact::add(lhs[ix],
                                 exact::mul(F, x[static_cast<size_t>(c)], T.c));
          }
        }
        std::vector<Scalar> rhs(static_cast<size_t>(n) * d * n);
        for (const auto& G : d2[static_cast<size_t>(gi)])
          for (const auto& Hh : d2[static_cast<size_t>(hj)]) {
            const int act_leg = twist_leg == 3 ? Hh.v : Hh.w;
            const int tw_leg = twist_leg == 3 ? Hh.w : Hh.v;
            Scalar cgh = exact::mul(F, G.c, Hh.c);
            if (exact::is_zero(cgh)) continue;
            for (const auto& T : tco[static_cast<size_t>(a)]) {
              Scalar base = exact::mul(F, cgh, T.c);
              if (exact::is_zero(base)) continue;
              Vec first = hopf::mul_elem(
                  H, hopf::mul_elem(H, hopf::basis_vec(n, G.u), hopf::basis_vec(n, T.i)),
                  hopf::basis_vec(n, Hh.u));
              Vec mid = exact::apply(
                  F, B.right_action[static_cast<size_t>(act_leg)],
                  detail::column(B.left_action[static_cast<size_t>(G.v)], T.b));
              Vec last = hopf::mul_elem(
                  H, hopf::mul_elem(H, hopf::basis_vec(n, G.w), hopf::basis_vec(n, T.j)),
                  sig_col[static_cast<size_t>(tw_leg)]);
              for (int i = 0; i < n; ++i) {
                if (exact::is_zero(first[static_cast<size_t>(i)])) continue;
                Scalar ci = exact::mul(F, base, first[static_cast<size_t>(i)]);
                for (int b = 0; b < d; ++b) {
                  if (exact::is_zero(mid[static_cast<size_t>(b)])) continue;
                  Scalar cib = exact::mul(F, ci, mid[static_cast<size_t>(b)]);
                  for (int j = 0; j < n; ++j) {
                    if (exact::is_zero(last[static_cast<size_t>(j)])) continue;
                    size_t ix = (static_cast<size_t>(i) * d + b) * n + j;
                    rhs[ix] = exact::add(
                        rhs[ix], exact::mul(F, cib, last[static_cast<size_t>(j)]));
                  }
                }
              }
            }
          }
        if (!(lhs == rhs)) return false;
      }
  return true;
}

// All structural laws of an involutive Hopf bimodule; returns failures.
inline std::vector<std::string> verify_involutive(const InvolutiveHopfBimodule& B) {
  std::vector<std::string> bad;
  const HopfAlgebra& H = *B.over;
  const FieldSpec& F = H.field;
  const int n = H.dim, d = B.dim;
  if (static_cast<int>(B.left_action.size()) != n ||
      static_cast<int>(B.right_action.size()) != n ||
      B.left_coaction.rows != n * d || B.left_coaction.cols != d ||
      B.right_coaction.rows != d * n || B.right_coaction.cols != d ||
      B.psi.rows != d || B.psi.cols != d) {
    bad.push_back("shape mismatch");
    return bad;
  }

  // Left and right module structure, via the two one-sided views.
  ModComod left{&H, d, Side::left_left, B.left_action, B.left_coaction};
  ModComod right{&H, d, Side::right_right, B.right_action, B.right_coaction};
  for (const std::string& m : verify_modcomod(left)) bad.push_back("left " + m);
  for (const std::string& m : verify_modcomod(right)) bad.push_back("right " + m);
  if (!bad.empty()) return bad;

  bool commute = true;
  for (int i = 0; i < n && commute; ++i)
    for (int j = 0; j < n; ++j)
      if (!(exact::m_mul(F, B.left_action[static_cast<size_t>(i)],
                         B.right_action[static_cast<size_t>(j)]) ==
            exact::m_mul(F, B.right_action[static_cast<size_t>(j)],
                         B.left_action[static_cast<size_t>(i)]))) {
        commute = false;
        break;
      }
  if (!commute) bad.push_back("left and right actions do not commute");

  // Bicomodule: the two coactions commute.
  {
    bool ok = true;
    for (int a = 0; a < d && ok; ++a) {
      std::vector<Scalar> one(static_cast<size_t>(n) * d * n),
          two(static_cast<size_t>(n) * d * n);
      for (int c = 0; c < d; ++c)
        for (int i = 0; i < n; ++i) {
          const Scalar& lc = B.left_coaction.at(i * d + c, a);
          if (exact::is_zero(lc)) continue;
          for (int b = 0; b < d; ++b)
            for (int j = 0; j < n; ++j) {
              const Scalar& rc = B.right_coaction.at(b * n + j, c);
              if (exact::is_zero(rc)) continue;
              size_t ix = (static_cast<size_t>(i) * d + b) * n + j;
              one[ix] = exact::add(one[ix], exact::mul(F, lc, rc));
            }
        }
      for (int c = 0; c < d; ++c)
        for (int j = 0; j < n; ++j) {
          const Scalar& rc = B.right_coaction.at(c * n + j, a);
          if (exact::is_zero(rc)) continue;
          for (int i = 0; i < n; ++i)
            for (int b = 0; b < d; ++b) {
              const Scalar& lc = B.left_coaction.at(i * d + b, c);
              if (exact::is_zero(lc)) continue;
              size_t ix = (static_cast<size_t>(i) * d + b) * n + j;
              two[ix] = exact::add(two[ix], exact::mul(F, lc, rc));
            }
        }
      ok = one == two;
    }
    if (!ok) bad.push_back("left and right coactions do not commute");
  }
  if (!bad.empty()) return bad;

  Matrix s_inv2 = exact::m_mul(F, H.antipode_inv, H.antipode_inv);
  if (!twisted_compat_holds(B, s_inv2, 3))
    bad.push_back("actions and coactions violate the twisted compatibility");

  // psi(g |> m <| h) = S^{-1}(h) |> psi(m) <| S(g)
  {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      Matrix r_sg = detail::elem_action(F, B.right_action,
                                        detail::column(H.antipode, i));
      for (int j = 0; j < n; ++j) {
        Matrix l_sh = detail::elem_action(F, B.left_action,
                                          detail::column(H.antipode_inv, j));
        Matrix lhs = exact::m_mul(
            F, B.psi,
            exact::m_mul(F, B.right_action[static_cast<size_t>(j)],
                         B.left_action[static_cast<size_t>(i)]));
        Matrix rhs = exact::m_mul(F, r_sg, exact::m_mul(F, l_sh, B.psi));
        if (!(lhs == rhs)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) bad.push_back("the involution does not exchange the actions");
  }

  // m_(-1) (x) psi(m_(0)) (x) m_(1)
  //   = S(psi(m)_(1)) (x) psi(m)_(0) (x) S^{-1}(psi(m)_(-1))
  {
    bool ok = true;
    for (int a = 0; a < d && ok; ++a) {
      std::vector<Scalar> lhs(static_cast<size_t>(n) * d * n),
          rhs(static_cast<size_t>(n) * d * n);
      for (const auto& T : detail::triple_coaction(B, a))
        for (int b = 0; b < d; ++b) {
          if (exact::is_zero(B.psi.at(b, T.b))) continue;
          size_t ix = (static_cast<size_t>(T.i) * d + b) * n + T.j;
          lhs[ix] = exact::add(lhs[ix], exact::mul(F, T.c, B.psi.at(b, T.b)));
        }
      Vec pa = detail::column(B.psi, a);
      for (int c = 0; c < d; ++c) {
        if (exact::is_zero(pa[static_cast<size_t>(c)])) continue;
        for (const auto& T : detail::triple_coaction(B, c)) {
          Scalar base = exact::mul(F, pa[static_cast<size_t>(c)], T.c);
          const Vec sj = detail::column(H.antipode, T.j);
          const Vec si = detail::column(H.antipode_inv, T.i);
          for (int i = 0; i < n; ++i) {
            if (exact::is_zero(sj[static_cast<size_t>(i)])) continue;
            Scalar ci = exact::mul(F, base, sj[static_cast<size_t>(i)]);
            for (int j = 0; j < n; ++j) {
              if (exact::is_zero(si[static_cast<size_t>(j)])) continue;
              size_t ix = (static_cast<size_t>(i) * d + T.b) * n + j;
              rhs[ix] = exact::add(rhs[ix],
                                   exact::mul(F, ci, si[static_cast<size_t>(j)]));
            }
          }
        }
      }
      ok = lhs == rhs;
    }
    if (!ok) bad.push_back("the involution does not exchange the coactions");
  }

  if (!(exact::m_mul(F, B.psi, B.psi) == exact::identity(d)))
    bad.push_back("the involution does not square to the identity");
  return bad;
}

// The coinvariants { m | m_(-1) (x) m_(0) = 1 (x) m } with the adjoint
// right action  m . h = S(h_(1)) |> m <| h_(2)  and the restricted right
// coaction.  `basis` holds the subspace basis in ambient coordinates; `mc`
// carries the structure in that basis.
struct Coinvariants {
  std::vector<Vec> basis;
  ModComod mc;
};

inline Coinvariants coinvariants(const InvolutiveHopfBimodule& B) {
  const HopfAlgebra& H = *B.over;
  const FieldSpec& F = H.field;
  const int n = H.dim, d = B.dim;
  Matrix K = B.left_coaction;
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < n; ++i)
      K.at(i * d + a, a) =
          exact::sub(K.at(i * d + a, a), H.unit[static_cast<size_t>(i)]);
  Coinvariants co;
  co.basis = exact::kernel_basis(F, K);
  const int r = static_cast<int>(co.basis.size());
  check(r > 0, "the coinvariant subspace is zero");
  Matrix Bs(d, r);
  for (int c = 0; c < r; ++c)
    for (int b = 0; b < d; ++b) Bs.at(b, c) = co.basis[static_cast<size_t>(c)][static_cast<size_t>(b)];

  co.mc.over = &H;
  co.mc.dim = r;
  co.mc.side = Side::right_right;
  co.mc.action.assign(static_cast<size_t>(n), Matrix(r, r));
  for (int j = 0; j < n; ++j) {
    const Matrix& D = H.comul[static_cast<size_t>(j)];
    for (int a = 0; a < r; ++a) {
      Vec w(static_cast<size_t>(d));
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          if (exact::is_zero(D.at(u, v))) continue;
          Vec t = exact::apply(
              F,
              detail::elem_action(F, B.left_action, detail::column(H.antipode, u)),
              co.basis[static_cast<size_t>(a)]);
          t = exact::apply(F, B.right_action[static_cast<size_t>(v)], t);
          for (int b = 0; b < d; ++b)
            w[static_cast<size_t>(b)] =
                exact::add(w[static_cast<size_t>(b)],
                           exact::mul(F, D.at(u, v), t[static_cast<size_t>(b)]));
        }
      auto coords = exact::solve(F, Bs, w);
      check(coords.has_value(),
            "the adjoint action leaves the coinvariant subspace");
      for (int b = 0; b < r; ++b)
        co.mc.action[static_cast<size_t>(j)].at(b, a) = (*coords)[static_cast<size_t>(b)];
    }
  }

  co.mc.coaction = Matrix(r * n, r);
  for (int a = 0; a < r; ++a)
    for (int i = 0; i < n; ++i) {
      Vec w(static_cast<size_t>(d));
      for (int b = 0; b < d; ++b) {
        Scalar s;
        for (int c = 0; c < d; ++c)
          s = exact::add(s, exact::mul(F, B.right_coaction.at(b * n + i, c),
                                       co.basis[static_cast<size_t>(a)][static_cast<size_t>(c)]));
        w[static_cast<size_t>(b)] = s;
      }
      auto coords = exact::solve(F, Bs, w);
      check(coords.has_value(),
            "the right coaction leaves the coinvariant subspace");
      for (int b = 0; b < r; ++b)
        co.mc.coaction.at(b * n + i, a) = (*coords)[static_cast<size_t>(b)];
    }
  return co;
}

// The bimodule-bicomodule on H (x) H whose bitensor products against
// Yetter-Drinfeld modules are trivial:
//   h |> (g (x) k) = hg (x) k,
//   (g (x) k) <| h = g h_(2) (x) S^{-1}(h_(1)) k S^2(h_(3)),
//   left coaction  g (x) k  ->  k_(1) (x) (g (x) k_(2)),
//   right coaction g (x) k  ->  (g (x) k_(1)) (x) k_(2).
// Returned as its two one-sided views; the basis element g_idx (x) k_idx
// sits at index g_idx*n + k_idx.
struct UnitBimodule {
  ModComod ll;
  ModComod rr;
};

inline UnitBimodule unit_bimodule(const HopfAlgebra& H) {
  const FieldSpec& F = H.field;
  const int n = H.dim, d = n * n;
  const auto id2 = [n](int g, int k) { return g * n + k; };

  UnitBimodule U;
  U.ll.over = U.rr.over = &H;
  U.ll.dim = U.rr.dim = d;
  U.ll.side = Side::left_left;
  U.rr.side = Side::right_right;

  U.ll.action.assign(static_cast<size_t>(n), Matrix(d, d));
  for (int i = 0; i < n; ++i)
    for (int g = 0; g < n; ++g)
      for (int k = 0; k < n; ++k)
        for (int g2 = 0; g2 < n; ++g2)
          U.ll.action[static_cast<size_t>(i)].at(id2(g2, k), id2(g, k)) =
              H.mul[static_cast<size_t>(i)][static_cast<size_t>(g)][static_cast<size_t>(g2)];

  Matrix s2 = exact::m_mul(F, H.antipode, H.antipode);
  U.rr.action.assign(static_cast<size_t>(n), Matrix(d, d));
  for (int j = 0; j < n; ++j) {
    Matrix& A = U.rr.action[static_cast<size_t>(j)];
    for (const auto& L : detail::comul2(H, j)) {
      std::vector<Vec> kw(static_cast<size_t>(n));
      for (int k = 0; k < n; ++k)
        kw[static_cast<size_t>(k)] = hopf::mul_elem(
            H,
            hopf::mul_elem(H, detail::column(H.antipode_inv, L.u),
                           hopf::basis_vec(n, k)),
            detail::column(s2, L.w));
      for (int g = 0; g < n; ++g) {
        const Vec& gv = H.mul[static_cast<size_t>(g)][static_cast<size_t>(L.v)];
        for (int k = 0; k < n; ++k)
          for (int g2 = 0; g2 < n; ++g2) {
            if (exact::is_zero(gv[static_cast<size_t>(g2)])) continue;
            Scalar c = exact::mul(F, L.c, gv[static_cast<size_t>(g2)]);
            for (int k2 = 0; k2 < n; ++k2) {
              const Scalar& kk = kw[static_cast<size_t>(k)][static_cast<size_t>(k2)];
              if (exact::is_zero(kk)) continue;
              Scalar& slot = A.at(id2(g2, k2), id2(g, k));
              slot = exact::add(slot, exact::mul(F, c, kk));
            }
          }
      }
    }
  }

  U.ll.coaction = Matrix(n * d, d);
  U.rr.coaction = Matrix(d * n, d);
  for (int g = 0; g < n; ++g)
    for (int k = 0; k < n; ++k) {
      const Matrix& D = H.comul[static_cast<size_t>(k)];
      for (int i = 0; i < n; ++i)
        for (int k2 = 0; k2 < n; ++k2) {
          U.ll.coaction.at(i * d + id2(g, k2), id2(g, k)) = D.at(i, k2);
          U.rr.coaction.at(id2(g, k2) * n + i, id2(g, k)) = D.at(k2, i);
        }
    }
  return U;
}

}  // namespace kitaev::reps
