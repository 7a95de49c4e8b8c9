#pragma once
// One-sided modules-comodules over a structure-constant Hopf algebra:
// the one-dimensional objects attached to a group-like element and a
// character, axiom verification, and (twisted) Yetter-Drinfeld
// compatibility checks.

#include <string>
#include <utility>
#include <vector>

#include "kitaev/common.hpp"
#include "kitaev/hopf/group_likes.hpp"
#include "kitaev/hopf/hopf_algebra.hpp"

namespace kitaev::reps {

using exact::FieldSpec;
using exact::Matrix;
using exact::Scalar;
using exact::Vec;
using hopf::Character;
using hopf::GroupLike;
using hopf::HopfAlgebra;

enum class Side { left_left, right_right };

// A module-comodule N over H, one-sided.  For right-right objects the
// action matrices realise n . e_j and the coaction matrix C stores
// delta(n_a) = sum_{b,i} C[(b, i), a] n_b (x) e_i with row index b*n + i;
// for left-left objects the action matrices realise e_j . n and the
// coaction rows are indexed (i, b) -> i*d + b for e_i (x) n_b.  The
// referenced Hopf algebra must outlive the object.
struct ModComod {
  const HopfAlgebra* over = nullptr;
  int dim = 0;
  Side side = Side::right_right;
  std::vector<Matrix> action;
  Matrix coaction;
};

// Structural equality of the matrices; ignores the algebra pointer.
inline bool same_modcomod(const ModComod& a, const ModComod& b) {
  return a.dim == b.dim && a.side == b.side && a.action == b.action &&
         a.coaction == b.coaction;
}

// k^g_chi: the one-dimensional module-comodule whose action is given by
// the character chi and whose coaction is given by the group-like g.
inline ModComod one_dim(const HopfAlgebra& H, const GroupLike& g,
                        const Character& chi, Side side) {
  check(hopf::is_group_like(H, g.coords),
        "one_dim needs a group-like coaction element");
  check(hopf::is_character(H, chi), "one_dim needs a character action");
  ModComod M;
  M.over = &H;
  M.dim = 1;
  M.side = side;
  M.action.reserve(static_cast<size_t>(H.dim));
  for (int i = 0; i < H.dim; ++i) {
    Matrix a(1, 1);
    a.at(0, 0) = chi.values[static_cast<size_t>(i)];
    M.action.push_back(std::move(a));
  }
  M.coaction = Matrix(H.dim, 1);
  for (int i = 0; i < H.dim; ++i) M.coaction.at(i, 0) = g.coords[i];
  return M;
}

namespace detail {

// Dense column i of a square matrix, as a coordinate vector.
inline Vec column(const Matrix& A, int i) {
  Vec v(static_cast<size_t>(A.rows));
  for (int r = 0; r < A.rows; ++r) v[static_cast<size_t>(r)] = A.at(r, i);
  return v;
}

// Three-leg coproduct of a basis element, as a sparse list of terms
// coeff * e_u (x) e_v (x) e_w.
struct CoprodLeg3 {
  int u = 0, v = 0, w = 0;
  Scalar c;
};

inline std::vector<CoprodLeg3> comul2(const HopfAlgebra& H, int t) {
  std::vector<CoprodLeg3> out;
  const int n = H.dim;
  for (int m = 0; m < n; ++m)
    for (int w = 0; w < n; ++w) {
      const Scalar& s = H.comul[static_cast<size_t>(t)].at(m, w);
      if (exact::is_zero(s)) continue;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          const Scalar& s2 = H.comul[static_cast<size_t>(m)].at(u, v);
          if (exact::is_zero(s2)) continue;
          out.push_back({u, v, w, exact::mul(H.field, s, s2)});
        }
    }
  return out;
}

}  // namespace detail

// Module, comodule, and shape axioms; returns a list of failures.
inline std::vector<std::string> verify_modcomod(const ModComod& M) {
  std::vector<std::string> bad;
  const HopfAlgebra& H = *M.over;
  const FieldSpec& F = H.field;
  const int n = H.dim, d = M.dim;
  const bool rr = M.side == Side::right_right;
  if (d <= 0) bad.push_back("dimension must be positive");
  if (static_cast<int>(M.action.size()) != n)
    bad.push_back("action family must have one matrix per algebra basis element");
  else
    for (const Matrix& A : M.action)
      if (A.rows != d || A.cols != d) {
        bad.push_back("action matrix shape mismatch");
        break;
      }
  if (M.coaction.rows != n * d || M.coaction.cols != d)
    bad.push_back("coaction matrix shape mismatch");
  if (!bad.empty()) return bad;

  const auto row = [&](int hcomp, int mcomp) {
    return rr ? mcomp * n + hcomp : hcomp * d + mcomp;
  };

  Matrix unit_act(d, d);
  for (int i = 0; i < n; ++i)
    if (!exact::is_zero(H.unit[static_cast<size_t>(i)]))
      unit_act = exact::m_add(
          unit_act,
          exact::m_scale(F, H.unit[static_cast<size_t>(i)], M.action[static_cast<size_t>(i)]));
  if (!(unit_act == exact::identity(d)))
    bad.push_back("the unit does not act as the identity");

  for (int i = 0; i < n && bad.empty(); ++i)
    for (int j = 0; j < n; ++j) {
      Matrix lhs(d, d);
      for (int k = 0; k < n; ++k) {
        const Scalar& c = H.mul[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
        if (!exact::is_zero(c))
          lhs = exact::m_add(lhs, exact::m_scale(F, c, M.action[static_cast<size_t>(k)]));
      }
      Matrix rhs = rr ? exact::m_mul(F, M.action[static_cast<size_t>(j)], M.action[static_cast<size_t>(i)])
                      : exact::m_mul(F, M.action[static_cast<size_t>(i)], M.action[static_cast<size_t>(j)]);
      if (!(lhs == rhs)) {
        bad.push_back("the action is not compatible with the product");
        break;
      }
    }

  {
    Matrix e(d, d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        Scalar s;
        for (int i = 0; i < n; ++i)
          s = exact::add(s, exact::mul(F, H.counit[static_cast<size_t>(i)],
                                       M.coaction.at(row(i, b), a)));
        e.at(b, a) = s;
      }
    if (!(e == exact::identity(d)))
      bad.push_back("the coaction is not counital");
  }

  // Coassociativity: re-coact on the module leg versus applying the
  // coproduct to the algebra leg; legs ordered (outer H, inner H, module)
  // in the flattening below for both sides.
  {
    bool ok = true;
    std::vector<Scalar> lhs, rhs;
    for (int a = 0; a < d && ok; ++a) {
      lhs.assign(static_cast<size_t>(n) * n * d, Scalar{});
      rhs.assign(static_cast<size_t>(n) * n * d, Scalar{});
      for (int c = 0; c < d; ++c)
        for (int j = 0; j < n; ++j) {
          const Scalar& outer = M.coaction.at(row(j, c), a);
          if (exact::is_zero(outer)) continue;
          for (int b = 0; b < d; ++b)
            for (int i = 0; i < n; ++i) {
              const Scalar& inner = M.coaction.at(row(i, b), c);
              if (exact::is_zero(inner)) continue;
              // rr: delta then (delta (x) id): term n_b (x) e_i (x) e_j
              // ll: delta then (id (x) delta): term e_j (x) e_i (x) n_b
              size_t ix = rr ? (static_cast<size_t>(i) * n + j) * d + b
                             : (static_cast<size_t>(j) * n + i) * d + b;
              lhs[ix] = exact::add(lhs[ix], exact::mul(F, outer, inner));
            }
        }
      for (int b = 0; b < d; ++b)
        for (int m = 0; m < n; ++m) {
          const Scalar& cm = M.coaction.at(row(m, b), a);
          if (exact::is_zero(cm)) continue;
          const Matrix& D = H.comul[static_cast<size_t>(m)];
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
              if (exact::is_zero(D.at(i, j))) continue;
              size_t ix = (static_cast<size_t>(i) * n + j) * d + b;
              rhs[ix] = exact::add(rhs[ix], exact::mul(F, cm, D.at(i, j)));
            }
        }
      ok = lhs == rhs;
    }
    if (!ok) bad.push_back("the coaction is not coassociative");
  }
  return bad;
}

// sigma-twisted Yetter-Drinfeld compatibility between the action and the
// coaction, checked on all basis pairs.  sigma is a matrix in the basis of
// H (the identity for the untwisted law).  Right-right law:
//   (n . h)_(0) (x) (n . h)_(1) = n_(0) . h_(2) (x) S(h_(1)) n_(1) sigma(h_(3));
// left-left law:
//   (h . n)_(-1) (x) (h . n)_(0) = sigma(h_(1)) n_(-1) S(h_(3)) (x) h_(2) . n_(0).
inline bool verify_yd_twisted(const ModComod& M, const Matrix& sigma) {
  const HopfAlgebra& H = *M.over;
  const FieldSpec& F = H.field;
  const int n = H.dim, d = M.dim;
  const bool rr = M.side == Side::right_right;
  check(sigma.rows == n && sigma.cols == n, "twist matrix shape mismatch");
  const auto row = [&](int hcomp, int mcomp) {
    return rr ? mcomp * n + hcomp : hcomp * d + mcomp;
  };
  std::vector<Vec> s_col(static_cast<size_t>(n)), sig_col(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    s_col[static_cast<size_t>(i)] = detail::column(H.antipode, i);
    sig_col[static_cast<size_t>(i)] = detail::column(sigma, i);
  }
  for (int t = 0; t < n; ++t) {
    const auto legs = detail::comul2(H, t);
    const Matrix& At = M.action[static_cast<size_t>(t)];
    for (int a = 0; a < d; ++a) {
      std::vector<Scalar> lhs(static_cast<size_t>(d) * n), rhs(static_cast<size_t>(d) * n);
      for (int c = 0; c < d; ++c) {
        const Scalar& ac = At.at(c, a);
        if (exact::is_zero(ac)) continue;
        for (int b = 0; b < d; ++b)
          for (int i = 0; i < n; ++i) {
            const Scalar& cc = M.coaction.at(row(i, b), c);
            if (exact::is_zero(cc)) continue;
            size_t ix = static_cast<size_t>(b) * n + i;
            lhs[ix] = exact::add(lhs[ix], exact::mul(F, ac, cc));
          }
      }
      for (int b0 = 0; b0 < d; ++b0)
        for (int i0 = 0; i0 < n; ++i0) {
          const Scalar& cm = M.coaction.at(row(i0, b0), a);
          if (exact::is_zero(cm)) continue;
          for (const auto& L : legs) {
            // rr: action leg v, word S(e_u) e_{i0} sigma(e_w)
            // ll: action leg v, word sigma(e_u) e_{i0} S(e_w)
            const Vec& first = rr ? s_col[static_cast<size_t>(L.u)] : sig_col[static_cast<size_t>(L.u)];
            const Vec& last = rr ? sig_col[static_cast<size_t>(L.w)] : s_col[static_cast<size_t>(L.w)];
            Vec word = hopf::mul_elem(H, first, hopf::basis_vec(n, i0));
            word = hopf::mul_elem(H, word, last);
            Scalar base = exact::mul(F, cm, L.c);
            if (exact::is_zero(base)) continue;
            const Matrix& Av = M.action[static_cast<size_t>(L.v)];
            for (int b = 0; b < d; ++b) {
              if (exact::is_zero(Av.at(b, b0))) continue;
              Scalar cb = exact::mul(F, base, Av.at(b, b0));
              for (int i = 0; i < n; ++i) {
                if (exact::is_zero(word[static_cast<size_t>(i)])) continue;
                size_t ix = static_cast<size_t>(b) * n + i;
                rhs[ix] = exact::add(rhs[ix], exact::mul(F, cb, word[static_cast<size_t>(i)]));
              }
            }
          }
        }
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

// Untwisted Yetter-Drinfeld compatibility.
inline bool verify_yd(const ModComod& M) {
  return verify_yd_twisted(M, exact::identity(M.over->dim));
}

}  // namespace kitaev::reps
