#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "kitaev/exact/field.hpp"

namespace kitaev::exact {

// ---------------------------------------------------------------- dense

// Dense matrix over Q(zeta_N), row-major.
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<Scalar> a;
  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Scalar& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Scalar& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }
  bool operator==(const Matrix&) const = default;
};

using Vec = std::vector<Scalar>;

inline Matrix identity(int n) {
  Matrix I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = s_one();
  return I;
}

inline Matrix m_add(const Matrix& A, const Matrix& B) {
  check(A.rows == B.rows && A.cols == B.cols, "matrix shape mismatch in add");
  Matrix R = A;
  for (size_t i = 0; i < R.a.size(); ++i) R.a[i] = add(R.a[i], B.a[i]);
  return R;
}

inline Matrix m_sub(const Matrix& A, const Matrix& B) {
  check(A.rows == B.rows && A.cols == B.cols, "matrix shape mismatch in sub");
  Matrix R = A;
  for (size_t i = 0; i < R.a.size(); ++i) R.a[i] = sub(R.a[i], B.a[i]);
  return R;
}

inline Matrix m_scale(const FieldSpec& F, const Scalar& c, const Matrix& A) {
  Matrix R = A;
  for (auto& x : R.a) x = mul(F, c, x);
  return R;
}

inline Matrix m_mul(const FieldSpec& F, const Matrix& A, const Matrix& B) {
  check(A.cols == B.rows, "matrix shape mismatch in mul");
  Matrix R(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Scalar& aik = A.at(i, k);
      if (is_zero(aik)) continue;
      for (int j = 0; j < B.cols; ++j) {
        const Scalar& bkj = B.at(k, j);
        if (is_zero(bkj)) continue;
        R.at(i, j) = add(R.at(i, j), mul(F, aik, bkj));
      }
    }
  return R;
}

inline Vec apply(const FieldSpec& F, const Matrix& A, const Vec& x) {
  check(A.cols == static_cast<int>(x.size()), "matrix/vector shape mismatch");
  Vec y(A.rows);
  for (int j = 0; j < A.cols; ++j) {
    if (is_zero(x[j])) continue;
    for (int i = 0; i < A.rows; ++i) {
      const Scalar& aij = A.at(i, j);
      if (!is_zero(aij)) y[i] = add(y[i], mul(F, aij, x[j]));
    }
  }
  return y;
}

inline Matrix transpose(const Matrix& A) {
  Matrix R(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) R.at(j, i) = A.at(i, j);
  return R;
}

// Reduced row echelon form with deterministic pivoting: columns scanned left
// to right, the first row (top to bottom) with a nonzero entry is the pivot.
struct RrefResult {
  Matrix R;
  std::vector<int> pivot_cols;
  int rank = 0;
};

inline RrefResult rref(const FieldSpec& F, Matrix A) {
  RrefResult out;
  int row = 0;
  for (int col = 0; col < A.cols && row < A.rows; ++col) {
    int p = -1;
    for (int i = row; i < A.rows; ++i)
      if (!is_zero(A.at(i, col))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < A.cols; ++j) std::swap(A.at(row, j), A.at(p, j));
    Scalar piv_inv = inv(F, A.at(row, col));
    for (int j = col; j < A.cols; ++j)
      A.at(row, j) = mul(F, piv_inv, A.at(row, j));
    for (int i = 0; i < A.rows; ++i) {
      if (i == row || is_zero(A.at(i, col))) continue;
      Scalar c = A.at(i, col);
      for (int j = col; j < A.cols; ++j)
        A.at(i, j) = sub(A.at(i, j), mul(F, c, A.at(row, j)));
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  out.R = std::move(A);
  return out;
}

inline int rank(const FieldSpec& F, const Matrix& A) {
  return rref(F, A).rank;
}

// Basis of the null space {x : A x = 0}.  Deterministic: one vector per free
// column j, with x_j = 1.  Asserts rank-nullity.
inline std::vector<Vec> kernel_basis(const FieldSpec& F, const Matrix& A) {
  RrefResult r = rref(F, A);
  std::vector<bool> is_pivot(A.cols, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int j = 0; j < A.cols; ++j) {
    if (is_pivot[j]) continue;
    Vec x(A.cols);
    x[j] = s_one();
    for (size_t i = 0; i < r.pivot_cols.size(); ++i)
      x[r.pivot_cols[i]] = neg(r.R.at(static_cast<int>(i), j));
    basis.push_back(std::move(x));
  }
  check(r.rank + static_cast<int>(basis.size()) == A.cols,
        "rank-nullity violated in kernel_basis");
  return basis;
}

// Basis of the column space: the original columns at the pivot positions.
inline std::vector<Vec> image_basis(const FieldSpec& F, const Matrix& A) {
  RrefResult r = rref(F, A);
  std::vector<Vec> basis;
  for (int c : r.pivot_cols) {
    Vec v(A.rows);
    for (int i = 0; i < A.rows; ++i) v[i] = A.at(i, c);
    basis.push_back(std::move(v));
  }
  check(static_cast<int>(basis.size()) == r.rank,
        "rank mismatch in image_basis");
  return basis;
}

// One solution of A x = b (free variables set to zero), or nullopt.
inline std::optional<Vec> solve(const FieldSpec& F, const Matrix& A,
                                const Vec& b) {
  check(A.rows == static_cast<int>(b.size()), "solve: shape mismatch");
  Matrix Ab(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) Ab.at(i, j) = A.at(i, j);
    Ab.at(i, A.cols) = b[i];
  }
  RrefResult r = rref(F, Ab);
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == A.cols)
    return std::nullopt;  // inconsistent system
  Vec x(A.cols);
  for (size_t i = 0; i < r.pivot_cols.size(); ++i)
    x[r.pivot_cols[i]] = r.R.at(static_cast<int>(i), A.cols);
  return x;
}

// Indices j such that the standard basis vectors e_j represent a basis of
// k^n / span(rows of W): exactly the non-pivot columns of rref(W).
inline std::vector<int> quotient_basis(const FieldSpec& F, const Matrix& W) {
  RrefResult r = rref(F, W);
  std::vector<bool> is_pivot(W.cols, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<int> out;
  for (int j = 0; j < W.cols; ++j)
    if (!is_pivot[j]) out.push_back(j);
  check(static_cast<int>(out.size()) + r.rank == W.cols,
        "rank-nullity violated in quotient_basis");
  return out;
}

// Exact inverse via row reduction of [A | I]; nullopt when singular.
inline std::optional<Matrix> inverse(const FieldSpec& F, const Matrix& A) {
  check(A.rows == A.cols, "inverse needs a square matrix");
  const int n = A.rows;
  Matrix ab(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) ab.at(i, j) = A.at(i, j);
    ab.at(i, n + i) = s_one();
  }
  RrefResult r = rref(F, ab);
  for (int i = 0; i < n; ++i)
    if (i >= static_cast<int>(r.pivot_cols.size()) || r.pivot_cols[i] != i)
      return std::nullopt;
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = r.R.at(i, n + j);
  return out;
}

// Characteristic polynomial det(t I - A) as ascending monic coefficients
// (Faddeev-LeVerrier: exact, every division is by an integer).
inline std::vector<Scalar> charpoly(const FieldSpec& F, const Matrix& A) {
  check(A.rows == A.cols, "characteristic polynomial needs a square matrix");
  const int n = A.rows;
  std::vector<Scalar> c(n + 1);
  c[n] = s_one();
  Matrix M(n, n);
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) M.at(i, i) = add(M.at(i, i), c[n - k + 1]);
    M = m_mul(F, A, M);
    Scalar tr;
    for (int i = 0; i < n; ++i) tr = add(tr, M.at(i, i));
    c[n - k] = mul(F, s_rat(rat(-1, k)), tr);
  }
  return c;
}

inline Scalar eval_poly(const FieldSpec& F, const std::vector<Scalar>& p,
                        const Scalar& x) {
  Scalar v;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = add(mul(F, v, x), *it);
  return v;
}

// ---------------------------------------------------------------- sparse

// Sparse vector: (index, value) entries sorted by index, values nonzero.
struct SparseVec {
  std::vector<std::pair<int, Scalar>> e;
  bool operator==(const SparseVec&) const = default;
};

inline SparseVec sv_from_dense(const Vec& v) {
  SparseVec s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) s.e.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

inline Vec sv_to_dense(const SparseVec& s, int n) {
  Vec v(n);
  for (const auto& [i, x] : s.e) v[i] = x;
  return v;
}

inline SparseVec sv_scale(const FieldSpec& F, const Scalar& c,
                          const SparseVec& v) {
  if (is_zero(c)) return {};
  SparseVec r = v;
  for (auto& [i, x] : r.e) x = mul(F, c, x);
  return r;
}

// y + c * x, merged by index.
inline SparseVec sv_axpy(const FieldSpec& F, const SparseVec& y,
                         const Scalar& c, const SparseVec& x) {
  if (is_zero(c)) return y;
  SparseVec r;
  r.e.reserve(y.e.size() + x.e.size());
  size_t i = 0, j = 0;
  while (i < y.e.size() || j < x.e.size()) {
    if (j == x.e.size() ||
        (i < y.e.size() && y.e[i].first < x.e[j].first)) {
      r.e.push_back(y.e[i++]);
    } else if (i == y.e.size() || x.e[j].first < y.e[i].first) {
      Scalar v = mul(F, c, x.e[j].second);
      if (!is_zero(v)) r.e.emplace_back(x.e[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = add(y.e[i].second, mul(F, c, x.e[j].second));
      if (!is_zero(v)) r.e.emplace_back(y.e[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

// Incremental row-space eliminator: maintains a pivot table of rows in
// echelon form (leading entry 1, one row per leading index).  Deterministic.
class RowSpan {
 public:
  explicit RowSpan(int ncols) : n_(ncols) {}

  // Reduces v against the pivot rows; returns the residual.
  SparseVec residual(const FieldSpec& F, SparseVec v) const {
    while (!v.e.empty()) {
      auto it = piv_.find(v.e.front().first);
      if (it == piv_.end()) break;
      v = sv_axpy(F, v, neg(v.e.front().second), it->second);
    }
    return v;
  }

  // Adds v to the span; returns true if the dimension grew.
  bool add(const FieldSpec& F, SparseVec v) {
    v = residual(F, std::move(v));
    if (v.e.empty()) return false;
    check(v.e.front().first < n_, "row entry out of range");
    Scalar lead_inv = inv(F, v.e.front().second);
    v = sv_scale(F, lead_inv, v);
    piv_.emplace(v.e.front().first, std::move(v));
    return true;
  }

  int dim() const { return static_cast<int>(piv_.size()); }
  int ncols() const { return n_; }
  const std::map<int, SparseVec>& pivots() const { return piv_; }

  // Back-substitutes so every pivot row has zeros in all other pivot columns
  // (full reduced echelon form).
  void back_reduce(const FieldSpec& F) {
    for (auto it = piv_.rbegin(); it != piv_.rend(); ++it) {
      for (auto jt = piv_.begin(); jt->first < it->first; ++jt) {
        SparseVec& row = jt->second;
        auto pos = std::lower_bound(
            row.e.begin(), row.e.end(), it->first,
            [](const auto& p, int k) { return p.first < k; });
        if (pos == row.e.end() || pos->first != it->first) continue;
        row = sv_axpy(F, row, neg(pos->second), it->second);
      }
    }
  }

  // Null-space basis of the matrix whose row space this is (requires
  // back_reduce first).  One vector per free column, deterministic.
  std::vector<SparseVec> kernel(const FieldSpec& F) const {
    (void)F;
    std::vector<SparseVec> out;
    for (int j = 0; j < n_; ++j) {
      if (piv_.count(j)) continue;
      SparseVec x;
      for (const auto& [lead, row] : piv_) {
        auto pos = std::lower_bound(
            row.e.begin(), row.e.end(), j,
            [](const auto& p, int k) { return p.first < k; });
        if (pos != row.e.end() && pos->first == j)
          x.e.emplace_back(lead, neg(pos->second));
      }
      x.e.emplace_back(j, s_one());
      std::sort(x.e.begin(), x.e.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      out.push_back(std::move(x));
    }
    check(dim() + static_cast<int>(out.size()) == n_,
          "rank-nullity violated in RowSpan::kernel");
    return out;
  }

 private:
  int n_;
  std::map<int, SparseVec> piv_;
};

}  // namespace kitaev::exact
