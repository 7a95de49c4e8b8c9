#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "kitaev/hopf/hopf_algebra.hpp"

namespace kitaev::hopf {

// On-disk form:
//   {"dim": n, "cyclotomic_order": N, "basis": [...],
//    "mul":   [[i, j, k, coeff], ...],   e_i e_j has coefficient at e_k
//    "comul": [[i, j, k, coeff], ...],   Delta(e_i) at e_j (x) e_k
//    "counit": [coeff, ...], "antipode": [[row], ...]}
// with coefficients in the "r*z^k" scalar string syntax.  The unit and the
// inverse antipode are derived on load, and both must exist.
inline nlohmann::json hopf_to_json(const HopfAlgebra& H) {
  nlohmann::json j;
  j["dim"] = H.dim;
  j["cyclotomic_order"] = H.field.cyclotomic_order;
  j["basis"] = H.basis;
  auto& jm = j["mul"] = nlohmann::json::array();
  for (int a = 0; a < H.dim; ++a)
    for (int b = 0; b < H.dim; ++b)
      for (int k = 0; k < H.dim; ++k)
        if (!exact::is_zero(H.mul[a][b][k]))
          jm.push_back({a, b, k, exact::scalar_to_string(H.mul[a][b][k])});
  auto& jc = j["comul"] = nlohmann::json::array();
  for (int i = 0; i < H.dim; ++i)
    for (int a = 0; a < H.dim; ++a)
      for (int b = 0; b < H.dim; ++b)
        if (!exact::is_zero(H.comul[i].at(a, b)))
          jc.push_back({i, a, b, exact::scalar_to_string(H.comul[i].at(a, b))});
  auto& je = j["counit"] = nlohmann::json::array();
  for (const Scalar& s : H.counit) je.push_back(exact::scalar_to_string(s));
  auto& js = j["antipode"] = nlohmann::json::array();
  for (int r = 0; r < H.dim; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < H.dim; ++c)
      row.push_back(exact::scalar_to_string(H.antipode.at(r, c)));
    js.push_back(std::move(row));
  }
  return j;
}

inline HopfAlgebra hopf_from_json(const nlohmann::json& j) {
  check(j.is_object(), "Hopf document must be a JSON object");
  for (const char* key :
       {"dim", "cyclotomic_order", "basis", "mul", "comul", "counit", "antipode"})
    check(j.contains(key), std::string("Hopf document is missing '") + key + "'");
  check(j.at("dim").is_number_integer(), "dim must be an integer");
  const int n = j.at("dim").get<int>();
  check(n > 0 && n <= 4096, "dim out of range");
  check(j.at("cyclotomic_order").is_number_integer(),
        "cyclotomic_order must be an integer");

  HopfAlgebra H;
  H.field = exact::make_field(j.at("cyclotomic_order").get<long>());
  H.dim = n;
  check(j.at("basis").is_array() && j.at("basis").size() == static_cast<size_t>(n),
        "basis must list one label per dimension");
  for (const auto& l : j.at("basis")) {
    check(l.is_string(), "basis labels must be strings");
    H.basis.push_back(l.get<std::string>());
  }
  auto idx = [n](const nlohmann::json& v) {
    check(v.is_number_integer(), "expected an integer index");
    int i = v.get<int>();
    check(0 <= i && i < n, "index out of range");
    return i;
  };
  auto coeff = [&H](const nlohmann::json& v) {
    check(v.is_string(), "coefficients must be scalar strings");
    return exact::parse_scalar(H.field, v.get<std::string>());
  };
  check(j.at("mul").is_array(), "mul must be an array of [i, j, k, coeff]");
  H.mul.assign(n, std::vector<Vec>(n, Vec(n)));
  for (const auto& row : j.at("mul")) {
    check(row.is_array() && row.size() == 4, "mul rows are [i, j, k, coeff]");
    H.mul[idx(row[0])][idx(row[1])][idx(row[2])] = coeff(row[3]);
  }
  check(j.at("comul").is_array(), "comul must be an array of [i, j, k, coeff]");
  H.comul.assign(n, Matrix(n, n));
  for (const auto& row : j.at("comul")) {
    check(row.is_array() && row.size() == 4, "comul rows are [i, j, k, coeff]");
    H.comul[idx(row[0])].at(idx(row[1]), idx(row[2])) = coeff(row[3]);
  }
  check(j.at("counit").is_array() &&
            j.at("counit").size() == static_cast<size_t>(n),
        "counit must list one value per basis element");
  H.counit.assign(n, exact::s_zero());
  for (int i = 0; i < n; ++i) H.counit[i] = coeff(j.at("counit")[i]);
  check(j.at("antipode").is_array() &&
            j.at("antipode").size() == static_cast<size_t>(n),
        "antipode must be an n x n matrix");
  H.antipode = Matrix(n, n);
  for (int r = 0; r < n; ++r) {
    const auto& row = j.at("antipode")[r];
    check(row.is_array() && row.size() == static_cast<size_t>(n),
          "antipode must be an n x n matrix");
    for (int c = 0; c < n; ++c) H.antipode.at(r, c) = coeff(row[c]);
  }

  // derive the unit: sum_i u_i e_i e_j = e_j for every j
  Matrix A(n * n, n);
  Vec b(n * n);
  for (int jc = 0; jc < n; ++jc)
    for (int p = 0; p < n; ++p) {
      for (int i = 0; i < n; ++i) A.at(jc * n + p, i) = H.mul[i][jc][p];
      if (jc == p) b[jc * n + p] = exact::s_one();
    }
  auto u = exact::solve(H.field, A, b);
  check(u.has_value(), "structure constants admit no unit element");
  H.unit = *u;
  for (int jc = 0; jc < n; ++jc)
    check(mul_elem(H, basis_vec(n, jc), H.unit) == basis_vec(n, jc),
          "derived unit is not a right unit");

  auto sinv = exact::inverse(H.field, H.antipode);
  check(sinv.has_value(), "antipode matrix is singular");
  H.antipode_inv = *sinv;
  return H;
}

}  // namespace kitaev::hopf
