#pragma once

#include <json.hpp>

#include "kitaev_graph.hpp"
#include "moves.hpp"

namespace kitaev::graphs {

// On-disk form: {"rho": [[cycle], ...], "cilia": [...], "pt": n} with the
// pairing involution implicit in the numbering.  Cycles are written sorted by
// their smallest element, each starting from it; fixed points are omitted.

inline nlohmann::json graph_to_json(const KitaevGraph& g) {
  nlohmann::json j;
  j["rho"] = nlohmann::json::array();
  auto supp = g.rho.support();
  std::vector<int> ground(supp.begin(), supp.end());
  for (const auto& cyc : g.rho.cycles_on(ground)) j["rho"].push_back(cyc);
  j["cilia"] = g.cilia;
  j["pt"] = g.pt;
  return j;
}

inline KitaevGraph graph_from_json(const nlohmann::json& j) {
  check(j.is_object(), "graph document must be an object");
  check(j.contains("rho") && j["rho"].is_array(), "graph document needs a cycle list 'rho'");
  check(j.contains("cilia") && j["cilia"].is_array(), "graph document needs a list 'cilia'");
  check(j.contains("pt") && j["pt"].is_number_integer(), "graph document needs an integer 'pt'");
  std::vector<std::vector<int>> cycles;
  for (const auto& c : j["rho"]) {
    check(c.is_array(), "'rho' must be a list of cycles");
    std::vector<int> cyc;
    for (const auto& x : c) {
      check(x.is_number_integer(), "cycle entries must be integers");
      cyc.push_back(x.get<int>());
    }
    cycles.push_back(std::move(cyc));
  }
  KitaevGraph g;
  g.rho = Permutation::from_cycles(cycles);
  for (const auto& x : j["cilia"]) {
    check(x.is_number_integer(), "cilia entries must be integers");
    g.cilia.push_back(x.get<int>());
  }
  std::sort(g.cilia.begin(), g.cilia.end());
  check(std::adjacent_find(g.cilia.begin(), g.cilia.end()) == g.cilia.end(),
        "cilia entries must be distinct");
  g.pt = j["pt"].get<int>();
  return g;
}

inline nlohmann::json word_to_json(const MoveWord& w) {
  nlohmann::json j = nlohmann::json::array();
  for (const Move& m : w) {
    switch (m.kind) {
      case MoveKind::EdgeReversal:
        j.push_back({{"move", "reverse"}, {"edge", m.a}});
        break;
      case MoveKind::EdgePermutation:
        j.push_back({{"move", "swap"}, {"edge", m.a}});
        break;
      case MoveKind::Slide:
        j.push_back({{"move", "slide"}, {"a", m.a}, {"b", m.b}});
        break;
    }
  }
  return j;
}

inline MoveWord word_from_json(const nlohmann::json& j) {
  check(j.is_array(), "move word must be a list");
  MoveWord w;
  for (const auto& e : j) {
    check(e.is_object() && e.contains("move"), "each move must name its kind");
    std::string kind = e["move"].get<std::string>();
    if (kind == "reverse")
      w.push_back(Move::reversal(e.at("edge").get<int>()));
    else if (kind == "swap")
      w.push_back(Move::permutation(e.at("edge").get<int>()));
    else if (kind == "slide")
      w.push_back(Move::slide(e.at("a").get<int>(), e.at("b").get<int>()));
    else
      check(false, "unknown move kind: " + kind);
  }
  return w;
}

}  // namespace kitaev::graphs
