#pragma once
// JSON round-trips for module-comodule structures over a fixed Hopf
// algebra.  The document stores only the structure maps; the algebra
// itself is bound at load time.
//
// Format:
//   {
//     "dim": d,
//     "side": "rr" | "ll",
//     "action":   [[i, r, c, "coeff"], ...],   // i -> action matrix A_i
//     "coaction": [[r, c, "coeff"], ...]
//   }
// with coaction rows indexed b*n + i ("rr") or i*d + b ("ll"), matching
// ModComod.  All coefficients use the scalar text format.

#include <string>

#include <json.hpp>

#include "kitaev/common.hpp"
#include "kitaev/exact/scalar_io.hpp"
#include "kitaev/reps/mod_comod.hpp"

namespace kitaev::reps {

inline nlohmann::json modcomod_to_json(const ModComod& M) {
  nlohmann::json j;
  j["dim"] = M.dim;
  j["side"] = M.side == Side::right_right ? "rr" : "ll";
  nlohmann::json act = nlohmann::json::array();
  for (size_t i = 0; i < M.action.size(); ++i)
    for (int r = 0; r < M.dim; ++r)
      for (int c = 0; c < M.dim; ++c)
        if (!exact::is_zero(M.action[i].at(r, c)))
          act.push_back({static_cast<int>(i), r, c,
                         exact::scalar_to_string(M.action[i].at(r, c))});
  j["action"] = std::move(act);
  nlohmann::json coact = nlohmann::json::array();
  for (int r = 0; r < M.coaction.rows; ++r)
    for (int c = 0; c < M.coaction.cols; ++c)
      if (!exact::is_zero(M.coaction.at(r, c)))
        coact.push_back({r, c, exact::scalar_to_string(M.coaction.at(r, c))});
  j["coaction"] = std::move(coact);
  return j;
}

inline ModComod modcomod_from_json(const HopfAlgebra& H, const nlohmann::json& j) {
  check(j.is_object(), "module document must be an object");
  for (const char* key : {"dim", "side", "action", "coaction"})
    check(j.contains(key), std::string("module document lacks \"") + key + "\"");
  check(j["dim"].is_number_integer(), "\"dim\" must be an integer");
  const int d = j["dim"].get<int>();
  check(d >= 1, "\"dim\" must be positive");
  check(j["side"].is_string(), "\"side\" must be a string");
  const std::string side = j["side"].get<std::string>();
  check(side == "rr" || side == "ll", "\"side\" must be \"rr\" or \"ll\"");
  const int n = H.dim;

  ModComod M;
  M.over = &H;
  M.dim = d;
  M.side = side == "rr" ? Side::right_right : Side::left_left;
  M.action.assign(static_cast<size_t>(n), Matrix(d, d));
  check(j["action"].is_array(), "\"action\" must be an array");
  for (const auto& e : j["action"]) {
    check(e.is_array() && e.size() == 4 && e[0].is_number_integer() &&
              e[1].is_number_integer() && e[2].is_number_integer() &&
              e[3].is_string(),
          "action entries must be [i, row, col, coeff]");
    const int i = e[0].get<int>(), r = e[1].get<int>(), c = e[2].get<int>();
    check(i >= 0 && i < n, "action algebra index out of range");
    check(r >= 0 && r < d && c >= 0 && c < d, "action matrix index out of range");
    M.action[static_cast<size_t>(i)].at(r, c) =
        exact::parse_scalar(H.field, e[3].get<std::string>());
  }
  M.coaction = Matrix(n * d, d);
  check(j["coaction"].is_array(), "\"coaction\" must be an array");
  for (const auto& e : j["coaction"]) {
    check(e.is_array() && e.size() == 3 && e[0].is_number_integer() &&
              e[1].is_number_integer() && e[2].is_string(),
          "coaction entries must be [row, col, coeff]");
    const int r = e[0].get<int>(), c = e[1].get<int>();
    check(r >= 0 && r < n * d, "coaction row out of range");
    check(c >= 0 && c < d, "coaction column out of range");
    M.coaction.at(r, c) = exact::parse_scalar(H.field, e[2].get<std::string>());
  }
  return M;
}

}  // namespace kitaev::reps
