#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "permutation.hpp"

namespace kitaev::graphs {

// ---------------------------------------------------------------- KitaevGraph
//
// A ribbon-graph presentation: a vertex permutation rho on half-edges, one
// cilium per vertex, and a distinguished cilium pt.  Half-edges are paired by
// the parity involution kappa; the half-edge set is the closure of the cilia
// under rho and kappa.

struct KitaevGraph {
  Permutation rho;
  std::vector<int> cilia;  // strictly ascending
  int pt = 0;

  bool operator==(const KitaevGraph&) const = default;
};

// All half-edges: the orbit of the cilia under rho, rho^{-1} and kappa.
inline std::vector<int> half_edges(const KitaevGraph& g) {
  std::set<int> seen;
  std::vector<int> stack;
  for (int c : g.cilia)
    if (c >= 1 && seen.insert(c).second) stack.push_back(c);
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : {g.rho(x), g.rho.inverse(x), kappa(x)})
      if (seen.insert(y).second) stack.push_back(y);
  }
  return {seen.begin(), seen.end()};
}

namespace detail {

inline std::vector<int> orbit_of_point(const KitaevGraph& g, int start) {
  std::set<int> seen{start};
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : {g.rho(x), g.rho.inverse(x), kappa(x)})
      if (seen.insert(y).second) stack.push_back(y);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace detail

// Face permutation step: the next half-edge along the face of x.
inline int face_next(const KitaevGraph& g, int x) { return g.rho.inverse(kappa(x)); }

// The face through x, listed from x.
inline std::vector<int> face_from(const KitaevGraph& g, int x) {
  std::vector<int> f{x};
  for (int y = face_next(g, x); y != x; y = face_next(g, y)) {
    f.push_back(y);
    check(f.size() <= 4 * g.rho.support().size() + 4, "face does not close");
  }
  return f;
}

// Structural violations, empty when the presentation is a valid graph.
inline std::vector<std::string> validate(const KitaevGraph& g) {
  std::vector<std::string> bad;
  bool sorted = std::is_sorted(g.cilia.begin(), g.cilia.end()) &&
                std::adjacent_find(g.cilia.begin(), g.cilia.end()) == g.cilia.end();
  if (g.cilia.empty() || !sorted || g.cilia.front() < 1) {
    bad.push_back("cilia must be a strictly ascending list of positive integers");
    return bad;
  }
  if (!std::binary_search(g.cilia.begin(), g.cilia.end(), g.pt)) {
    bad.push_back("pt not in C");
    return bad;
  }
  auto gamma = half_edges(g);
  for (int s : g.rho.support())
    if (!std::binary_search(gamma.begin(), gamma.end(), s)) {
      bad.push_back("rho moves half-edges outside the graph");
      return bad;
    }
  if (detail::orbit_of_point(g, g.pt).size() != gamma.size()) bad.push_back("not connected");
  auto verts = g.rho.cycles_on(gamma);
  std::size_t ciliated = 0;
  for (const auto& v : verts) {
    std::size_t n = 0;
    for (int x : v)
      if (std::binary_search(g.cilia.begin(), g.cilia.end(), x)) ++n;
    if (n == 1) ++ciliated;
  }
  if (ciliated != verts.size() || verts.size() != g.cilia.size())
    bad.push_back("not well-ciliated (vertices)");
  // faces, via the face permutation x -> rho^{-1}(kappa(x))
  std::map<int, int> phi_map;
  for (int x : gamma) phi_map[x] = face_next(g, x);
  auto faces = Permutation::from_map(phi_map).cycles_on(gamma);
  std::set<int> starts;
  for (int c : g.cilia) starts.insert(g.rho.inverse(c));
  std::size_t marked = 0;
  for (const auto& f : faces) {
    std::size_t n = 0;
    for (int x : f)
      if (starts.count(x)) ++n;
    if (n == 1) ++marked;
  }
  if (marked != faces.size() || faces.size() != g.cilia.size())
    bad.push_back("not well-ciliated (faces)");
  return bad;
}

inline void check_valid(const KitaevGraph& g) {
  auto bad = validate(g);
  check(bad.empty(), bad.empty() ? std::string{} : "invalid graph: " + bad.front());
}

// ------------------------------------------------------------------- derived

struct GraphData {
  std::vector<std::vector<int>> vertices;   // one per cilium, listed from it
  std::vector<std::pair<int, int>> edges;   // (odd half, its partner)
  std::vector<std::vector<int>> faces;      // one per cilium, from rho^{-1}(cilium)
};

inline GraphData derive(const KitaevGraph& g) {
  check_valid(g);
  GraphData d;
  auto gamma = half_edges(g);
  for (int c : g.cilia) d.vertices.push_back(g.rho.cycle_from(c));
  for (std::size_t i = 0; i < gamma.size(); i += 2) {
    check(i + 1 < gamma.size() && gamma[i + 1] == kappa(gamma[i]),
          "half-edges do not pair up");
    d.edges.emplace_back(gamma[i], gamma[i + 1]);
  }
  for (int c : g.cilia) d.faces.push_back(face_from(g, g.rho.inverse(c)));
  return d;
}

struct SurfaceInvariants {
  long genus = 0, boundary = 0, euler = 0;
  bool operator==(const SurfaceInvariants&) const = default;
};

inline SurfaceInvariants invariants(const KitaevGraph& g) {
  auto d = derive(g);
  SurfaceInvariants s;
  s.euler = static_cast<long>(d.vertices.size()) - static_cast<long>(d.edges.size()) +
            static_cast<long>(d.faces.size());
  check(s.euler % 2 == 0, "internal consistency: odd Euler characteristic");
  s.genus = 1 - s.euler / 2;
  check(s.genus >= 0, "internal consistency: negative genus");
  s.boundary = static_cast<long>(d.faces.size());
  return s;
}

// ------------------------------------------------------------ standard graphs
//
// The reference graph for genus g with a boundary cycles: half-edges
// 1..4(g+a), vertex permutation a single long cycle of g interleaved blocks
// [4i-3, 4i-1, 4i-2, 4i] followed by a bracket [e, kf, ke] per boundary
// cycle, whose loose half-edge f is a monovalent cilium.

inline KitaevGraph standard_graph(int g, int a) {
  check(g >= 0 && a >= 0, "standard graph parameters must be nonnegative");
  check(g + a > 0, "standard graph needs g + a > 0");
  std::vector<int> cyc;
  for (int i = 1; i <= g; ++i)
    for (int x : {4 * i - 3, 4 * i - 1, 4 * i - 2, 4 * i}) cyc.push_back(x);
  for (int j = 1; j <= a; ++j)
    for (int x : {4 * j - 3, 4 * j, 4 * j - 2}) cyc.push_back(4 * g + x);
  KitaevGraph k;
  k.rho = Permutation::from_cycles({cyc});
  k.cilia.push_back(1);
  for (int j = 1; j <= a; ++j) k.cilia.push_back(4 * g + 4 * j - 1);
  k.pt = 1;
  check_valid(k);
  return k;
}

// -------------------------------------------------------------- connected sum
//
// Splices the second graph into the first at the chosen cilia (the
// distinguished ones by default).  The second graph's half-edges are shifted
// upward by an even amount so the pairing involution is preserved.

struct SumResult {
  KitaevGraph graph;
  int shift = 0;  // added to every half-edge of the second summand
};

inline SumResult connected_sum(const KitaevGraph& G, const KitaevGraph& D, int cG = 0,
                               int cD = 0) {
  check_valid(G);
  check_valid(D);
  if (cG == 0) cG = G.pt;
  if (cD == 0) cD = D.pt;
  check(std::binary_search(G.cilia.begin(), G.cilia.end(), cG),
        "splice point is not a cilium of the first graph");
  check(std::binary_search(D.cilia.begin(), D.cilia.end(), cD),
        "splice point is not a cilium of the second graph");
  auto gammaG = half_edges(G);
  auto gammaD = half_edges(D);
  int maxG = gammaG.back();
  int shift = (maxG % 2 == 0) ? maxG + 2 : maxG + 1;
  std::map<int, int> m;
  for (int x : gammaG) m[x] = G.rho(x);
  for (int x : gammaD) m[x + shift] = D.rho(x) + shift;
  int cDs = cD + shift;
  int pG = G.rho.inverse(cG);
  int pD = D.rho.inverse(cD) + shift;
  m[pG] = cDs;
  m[pD] = cG;
  SumResult r;
  r.shift = shift;
  r.graph.rho = Permutation::from_map(m);
  r.graph.cilia = G.cilia;
  for (int c : D.cilia)
    if (c != cD) r.graph.cilia.push_back(c + shift);
  std::sort(r.graph.cilia.begin(), r.graph.cilia.end());
  r.graph.pt = G.pt;
  check_valid(r.graph);
  return r;
}

}  // namespace kitaev::graphs
