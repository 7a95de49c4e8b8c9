#pragma once

#include <string>
#include <vector>

#include "kitaev/exact/matrix.hpp"
#include "kitaev/exact/scalar_io.hpp"

namespace kitaev::hopf {

using exact::FieldSpec;
using exact::Matrix;
using exact::Scalar;
using exact::Vec;

// A finite-dimensional Hopf algebra over Q(zeta_N), held by structure
// constants in a fixed basis e_0, ..., e_{n-1}:
//
//   mul[i][j]   coordinates of the product e_i e_j,
//   unit        coordinates of 1,
//   comul[i]    matrix D with Delta(e_i) = sum_{j,k} D(j,k) e_j (x) e_k,
//   counit      the covector eps,
//   antipode    column i holds the coordinates of S(e_i).
//
// Elements of H (x) H are handled as dim x dim coefficient matrices.
struct HopfAlgebra {
  FieldSpec field;
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<std::vector<Vec>> mul;
  Vec unit;
  std::vector<Matrix> comul;
  Vec counit;
  Matrix antipode;
  Matrix antipode_inv;
};

// ---------------------------------------------------------------- elements

inline Vec basis_vec(int n, int i) {
  Vec v(n);
  v.at(i) = exact::s_one();
  return v;
}

inline bool vec_is_zero(const Vec& v) {
  for (const Scalar& s : v)
    if (!exact::is_zero(s)) return false;
  return true;
}

inline Vec mul_elem(const HopfAlgebra& H, const Vec& x, const Vec& y) {
  check(static_cast<int>(x.size()) == H.dim &&
            static_cast<int>(y.size()) == H.dim,
        "element size mismatch");
  Vec r(H.dim);
  for (int i = 0; i < H.dim; ++i) {
    if (exact::is_zero(x[i])) continue;
    for (int j = 0; j < H.dim; ++j) {
      if (exact::is_zero(y[j])) continue;
      Scalar c = exact::mul(H.field, x[i], y[j]);
      const Vec& p = H.mul[i][j];
      for (int k = 0; k < H.dim; ++k)
        if (!exact::is_zero(p[k]))
          r[k] = exact::add(r[k], exact::mul(H.field, c, p[k]));
    }
  }
  return r;
}

inline Vec pow_elem(const HopfAlgebra& H, const Vec& x, long k) {
  check(k >= 0, "negative element power");
  Vec r = H.unit;
  for (long t = 0; t < k; ++t) r = mul_elem(H, r, x);
  return r;
}

inline Scalar eval_cov(const FieldSpec& F, const Vec& cov, const Vec& x) {
  check(cov.size() == x.size(), "covector/element size mismatch");
  Scalar s;
  for (size_t i = 0; i < cov.size(); ++i)
    if (!exact::is_zero(cov[i]) && !exact::is_zero(x[i]))
      s = exact::add(s, exact::mul(F, cov[i], x[i]));
  return s;
}

inline Matrix outer(const FieldSpec& F, const Vec& x, const Vec& y) {
  Matrix T(static_cast<int>(x.size()), static_cast<int>(y.size()));
  for (int j = 0; j < T.rows; ++j) {
    if (exact::is_zero(x[j])) continue;
    for (int k = 0; k < T.cols; ++k)
      if (!exact::is_zero(y[k])) T.at(j, k) = exact::mul(F, x[j], y[k]);
  }
  return T;
}

inline Matrix comul_elem(const HopfAlgebra& H, const Vec& x) {
  Matrix T(H.dim, H.dim);
  for (int i = 0; i < H.dim; ++i) {
    if (exact::is_zero(x[i])) continue;
    for (int j = 0; j < H.dim; ++j)
      for (int k = 0; k < H.dim; ++k) {
        const Scalar& d = H.comul[i].at(j, k);
        if (!exact::is_zero(d))
          T.at(j, k) = exact::add(T.at(j, k), exact::mul(H.field, x[i], d));
      }
  }
  return T;
}

// Product in H (x) H of two coefficient matrices.
inline Matrix tensor_mul(const HopfAlgebra& H, const Matrix& T,
                         const Matrix& U) {
  Matrix R(H.dim, H.dim);
  for (int j = 0; j < H.dim; ++j)
    for (int k = 0; k < H.dim; ++k) {
      if (exact::is_zero(T.at(j, k))) continue;
      for (int l = 0; l < H.dim; ++l)
        for (int m = 0; m < H.dim; ++m) {
          if (exact::is_zero(U.at(l, m))) continue;
          Scalar c = exact::mul(H.field, T.at(j, k), U.at(l, m));
          const Vec& a = H.mul[j][l];
          const Vec& b = H.mul[k][m];
          for (int p = 0; p < H.dim; ++p) {
            if (exact::is_zero(a[p])) continue;
            Scalar ca = exact::mul(H.field, c, a[p]);
            for (int q = 0; q < H.dim; ++q)
              if (!exact::is_zero(b[q]))
                R.at(p, q) = exact::add(R.at(p, q), exact::mul(H.field, ca, b[q]));
          }
        }
    }
  return R;
}

inline std::string element_to_string(const HopfAlgebra& H, const Vec& x) {
  std::string out;
  for (int i = 0; i < H.dim; ++i) {
    if (exact::is_zero(x[i])) continue;
    std::string c = exact::scalar_to_string(x[i]);
    std::string term;
    if (c == "1")
      term = H.basis[i];
    else if (c == "-1")
      term = "-" + H.basis[i];
    else if (c.find('+') != std::string::npos ||
             c.find('-', 1) != std::string::npos)
      term = "(" + c + ")*" + H.basis[i];
    else
      term = c + "*" + H.basis[i];
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- axioms

// Exact verification of every Hopf axiom; returns human-readable failure
// descriptions (empty means the data is a Hopf algebra).
inline std::vector<std::string> verify_hopf(const HopfAlgebra& H) {
  const FieldSpec& F = H.field;
  const int n = H.dim;
  std::vector<std::string> bad;

  bool shapes = n > 0 && static_cast<int>(H.basis.size()) == n &&
                static_cast<int>(H.mul.size()) == n &&
                static_cast<int>(H.unit.size()) == n &&
                static_cast<int>(H.comul.size()) == n &&
                static_cast<int>(H.counit.size()) == n &&
                H.antipode.rows == n && H.antipode.cols == n &&
                H.antipode_inv.rows == n && H.antipode_inv.cols == n;
  for (int i = 0; shapes && i < n; ++i) {
    shapes = static_cast<int>(H.mul[i].size()) == n && H.comul[i].rows == n &&
             H.comul[i].cols == n;
    for (int j = 0; shapes && j < n; ++j)
      shapes = static_cast<int>(H.mul[i][j].size()) == n;
  }
  if (!shapes) return {"structure constant shapes are inconsistent"};

  auto expect = [&bad](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };

  // algebra: unit and associativity
  for (int i = 0; i < n; ++i) {
    Vec e = basis_vec(n, i);
    expect(mul_elem(H, H.unit, e) == e, "left unit law fails at " + H.basis[i]);
    expect(mul_elem(H, e, H.unit) == e, "right unit law fails at " + H.basis[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        expect(mul_elem(H, H.mul[i][j], basis_vec(n, k)) ==
                   mul_elem(H, basis_vec(n, i), H.mul[j][k]),
               "associativity fails at (" + H.basis[i] + ", " + H.basis[j] +
                   ", " + H.basis[k] + ")");

  // coalgebra: counit and coassociativity
  for (int i = 0; i < n; ++i) {
    Vec l(n), r(n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& d = H.comul[i].at(j, k);
        if (exact::is_zero(d)) continue;
        l[k] = exact::add(l[k], exact::mul(F, H.counit[j], d));
        r[j] = exact::add(r[j], exact::mul(F, d, H.counit[k]));
      }
    expect(l == basis_vec(n, i), "left counit law fails at " + H.basis[i]);
    expect(r == basis_vec(n, i), "right counit law fails at " + H.basis[i]);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> a(static_cast<size_t>(n) * n * n);
    std::vector<Scalar> b(static_cast<size_t>(n) * n * n);
    auto slot = [n](std::vector<Scalar>& t, int j, int k, int l) -> Scalar& {
      return t[(static_cast<size_t>(j) * n + k) * n + l];
    };
    for (int u = 0; u < n; ++u)
      for (int m = 0; m < n; ++m) {
        const Scalar& d1 = H.comul[i].at(m, u);  // (Delta (x) id): split leg 1
        const Scalar& d2 = H.comul[i].at(u, m);  // (id (x) Delta): split leg 2
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            const Scalar& e = H.comul[m].at(j, k);
            if (exact::is_zero(e)) continue;
            if (!exact::is_zero(d1))
              slot(a, j, k, u) = exact::add(slot(a, j, k, u), exact::mul(F, d1, e));
            if (!exact::is_zero(d2))
              slot(b, u, j, k) = exact::add(slot(b, u, j, k), exact::mul(F, d2, e));
          }
      }
    expect(a == b, "coassociativity fails at " + H.basis[i]);
  }

  // bialgebra compatibility
  expect(eval_cov(F, H.counit, H.unit) == exact::s_one(),
         "counit of the unit is not 1");
  expect(comul_elem(H, H.unit) == outer(F, H.unit, H.unit),
         "comultiplication of the unit is not 1 (x) 1");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      expect(comul_elem(H, H.mul[i][j]) ==
                 tensor_mul(H, H.comul[i], H.comul[j]),
             "comultiplication is not an algebra map at (" + H.basis[i] +
                 ", " + H.basis[j] + ")");
      expect(eval_cov(F, H.counit, H.mul[i][j]) ==
                 exact::mul(F, H.counit[i], H.counit[j]),
             "counit is not an algebra map at (" + H.basis[i] + ", " +
                 H.basis[j] + ")");
    }

  // antipode law and bijectivity
  expect(exact::m_mul(F, H.antipode, H.antipode_inv) == exact::identity(n) &&
             exact::m_mul(F, H.antipode_inv, H.antipode) == exact::identity(n),
         "antipode and its inverse do not compose to the identity");
  for (int i = 0; i < n; ++i) {
    Vec lhs(n), rhs(n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& d = H.comul[i].at(j, k);
        if (exact::is_zero(d)) continue;
        Vec sj(n), sk(n);
        for (int t = 0; t < n; ++t) {
          sj[t] = H.antipode.at(t, j);
          sk[t] = H.antipode.at(t, k);
        }
        Vec u = mul_elem(H, sj, basis_vec(n, k));
        Vec v = mul_elem(H, basis_vec(n, j), sk);
        for (int t = 0; t < n; ++t) {
          lhs[t] = exact::add(lhs[t], exact::mul(F, d, u[t]));
          rhs[t] = exact::add(rhs[t], exact::mul(F, d, v[t]));
        }
      }
    Vec target(n);
    for (int t = 0; t < n; ++t) target[t] = exact::mul(F, H.counit[i], H.unit[t]);
    expect(lhs == target, "left antipode law fails at " + H.basis[i]);
    expect(rhs == target, "right antipode law fails at " + H.basis[i]);
  }
  return bad;
}

inline void check_hopf(const HopfAlgebra& H) {
  std::vector<std::string> bad = verify_hopf(H);
  if (bad.empty()) return;
  std::string msg = "Hopf axiom failure: " + bad.front();
  if (bad.size() > 1) msg += " (+" + std::to_string(bad.size() - 1) + " more)";
  throw error(msg);
}

// Structural equality up to basis labels (double duals and JSON round trips
// reproduce the constants exactly, not merely up to isomorphism).
inline bool same_structure(const HopfAlgebra& A, const HopfAlgebra& B) {
  return A.field.cyclotomic_order == B.field.cyclotomic_order &&
         A.dim == B.dim && A.mul == B.mul && A.unit == B.unit &&
         A.comul == B.comul && A.counit == B.counit &&
         A.antipode == B.antipode && A.antipode_inv == B.antipode_inv;
}

}  // namespace kitaev::hopf
