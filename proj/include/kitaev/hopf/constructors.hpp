#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kitaev/hopf/hopf_algebra.hpp"

namespace kitaev::hopf {

// ------------------------------------------------------------ group algebras

// kG from a finite group's multiplication table t[i][j] = index of g_i g_j.
// The table is validated (identity, associativity, two-sided inverses), and
// the Hopf structure is Delta(g) = g (x) g, eps(g) = 1, S(g) = g^{-1}.
inline HopfAlgebra group_algebra(const std::vector<std::vector<int>>& table,
                                 const FieldSpec& field,
                                 std::vector<std::string> labels = {}) {
  const int n = static_cast<int>(table.size());
  check(n > 0, "group table is empty");
  for (const auto& row : table) {
    check(static_cast<int>(row.size()) == n, "group table is not square");
    for (int v : row) check(0 <= v && v < n, "group table entry out of range");
  }
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool id = true;
    for (int j = 0; j < n; ++j) id = id && table[i][j] == j && table[j][i] == j;
    if (id) e = i;
  }
  check(e >= 0, "group table has no identity element");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        check(table[table[i][j]][k] == table[i][table[j][k]],
              "group table is not associative");
  std::vector<int> ginv(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (table[i][j] == e && table[j][i] == e) ginv[i] = j;
    check(ginv[i] >= 0, "group table element without a two-sided inverse");
  }

  HopfAlgebra H;
  H.field = field;
  H.dim = n;
  if (labels.empty())
    for (int i = 0; i < n; ++i)
      labels.push_back(i == e ? "1" : "g" + std::to_string(i));
  check(static_cast<int>(labels.size()) == n,
        "label count must match the group order");
  H.basis = std::move(labels);
  H.mul.assign(n, std::vector<Vec>(n, Vec(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) H.mul[i][j][table[i][j]] = exact::s_one();
  H.unit = basis_vec(n, e);
  H.comul.assign(n, Matrix(n, n));
  for (int i = 0; i < n; ++i) H.comul[i].at(i, i) = exact::s_one();
  H.counit.assign(n, exact::s_one());
  H.antipode = Matrix(n, n);
  for (int i = 0; i < n; ++i) H.antipode.at(ginv[i], i) = exact::s_one();
  H.antipode_inv = H.antipode;
  return H;
}

// kZ_m over Q(zeta_m), so every character of the group exists in the field.
inline HopfAlgebra cyclic_group_algebra(long m) {
  check(m >= 1, "cyclic group order must be positive");
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) t[i][j] = static_cast<int>((i + j) % m);
  std::vector<std::string> labels;
  for (long i = 0; i < m; ++i)
    labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
  return group_algebra(t, exact::make_field(m), std::move(labels));
}

// kS_3 over Q; elements are the permutations of {1,2,3} in lexicographic
// one-line order, labelled by their cycle notation.
inline HopfAlgebra s3_group_algebra() {
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<int>> t(6, std::vector<int>(6, -1));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int c[3];
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      for (int k = 0; k < 6; ++k)
        if (c[0] == perms[k][0] && c[1] == perms[k][1] && c[2] == perms[k][2])
          t[i][j] = k;
    }
  return group_algebra(t, exact::make_field(1),
                       {"e", "(23)", "(12)", "(123)", "(132)", "(13)"});
}

// ------------------------------------------------------------ Taft algebras

// Dimension N^2 over Q(zeta_N), basis y^i h^j for 0 <= i, j < N, subject to
// h^N = 1, y^N = 0, h y = q y h with q = zeta_N; Delta(h) = h (x) h,
// Delta(y) = 1 (x) y + y (x) h, S(h) = h^{N-1}, S(y) = -y h^{N-1}.  The
// comultiplication and antipode are extended (anti)multiplicatively from the
// generators.  N = 2 is Sweedler's four-dimensional algebra.
inline HopfAlgebra taft_algebra(long N) {
  check(N >= 2, "Taft algebras need N >= 2");
  FieldSpec F = exact::make_field(N);
  const int n = static_cast<int>(N * N);
  auto id = [N](long i, long j) { return static_cast<int>(i * N + j); };

  HopfAlgebra H;
  H.field = F;
  H.dim = n;
  for (long i = 0; i < N; ++i)
    for (long j = 0; j < N; ++j) {
      std::string yp = i == 0 ? "" : (i == 1 ? "y" : "y^" + std::to_string(i));
      std::string hp = j == 0 ? "" : (j == 1 ? "h" : "h^" + std::to_string(j));
      H.basis.push_back(yp + hp == "" ? "1" : yp + hp);
    }
  // (y^i h^j)(y^k h^l) = q^{jk} y^{i+k} h^{j+l}
  H.mul.assign(n, std::vector<Vec>(n, Vec(n)));
  for (long i = 0; i < N; ++i)
    for (long j = 0; j < N; ++j)
      for (long k = 0; k < N; ++k)
        for (long l = 0; l < N; ++l)
          if (i + k < N)
            H.mul[id(i, j)][id(k, l)][id(i + k, (j + l) % N)] =
                exact::s_zeta(F, j * k);
  H.unit = basis_vec(n, id(0, 0));
  H.counit.assign(n, exact::s_zero());
  for (long j = 0; j < N; ++j) H.counit[id(0, j)] = exact::s_one();

  Matrix th(n, n), ty(n, n);
  th.at(id(0, 1), id(0, 1)) = exact::s_one();
  ty.at(id(0, 0), id(1, 0)) = exact::s_one();
  ty.at(id(1, 0), id(0, 1)) = exact::s_one();
  std::vector<Matrix> ypow(N), hpow(N);
  ypow[0] = hpow[0] = outer(F, H.unit, H.unit);
  for (long t = 1; t < N; ++t) {
    ypow[t] = tensor_mul(H, ypow[t - 1], ty);
    hpow[t] = tensor_mul(H, hpow[t - 1], th);
  }
  H.comul.assign(n, Matrix(n, n));
  for (long i = 0; i < N; ++i)
    for (long j = 0; j < N; ++j)
      H.comul[id(i, j)] = tensor_mul(H, ypow[i], hpow[j]);

  Vec sy(n);
  sy[id(1, N - 1)] = exact::s_int(-1);
  H.antipode = Matrix(n, n);
  for (long i = 0; i < N; ++i) {
    Vec syi = pow_elem(H, sy, i);
    for (long j = 0; j < N; ++j) {
      Vec img = mul_elem(H, basis_vec(n, id(0, (N - j) % N)), syi);
      for (int t = 0; t < n; ++t) H.antipode.at(t, id(i, j)) = img[t];
    }
  }
  auto sinv = exact::inverse(F, H.antipode);
  check(sinv.has_value(), "Taft antipode must be invertible");
  H.antipode_inv = *sinv;
  return H;
}

inline HopfAlgebra sweedler_algebra() { return taft_algebra(2); }

// Named builtins: "sweedler", "taft:N", "group:Zn", "group:S3".
inline HopfAlgebra builtin_hopf(const std::string& name) {
  if (name == "sweedler") return sweedler_algebra();
  auto num = [&name](size_t pos) {
    const std::string s = name.substr(pos);
    check(!s.empty() && s.size() <= 6 &&
              s.find_first_not_of("0123456789") == std::string::npos,
          "malformed builtin name: " + name);
    return std::stol(s);
  };
  if (name.rfind("taft:", 0) == 0) return taft_algebra(num(5));
  if (name == "group:S3") return s3_group_algebra();
  if (name.rfind("group:Z", 0) == 0) return cyclic_group_algebra(num(7));
  throw error("unknown builtin Hopf algebra: " + name);
}

}  // namespace kitaev::hopf
