#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "../common.hpp"

namespace kitaev::graphs {

// Pairing involution on the positive integers: 1<->2, 3<->4, 5<->6, ...
inline int kappa(int i) { return (i % 2 == 1) ? i + 1 : i - 1; }

// ---------------------------------------------------------------- Permutation
//
// Permutation of the positive integers with finite support and identity
// elsewhere.  Only moved points are stored, so operator== is canonical.

class Permutation {
public:
  Permutation() = default;

  static Permutation from_map(const std::map<int, int>& m) {
    std::set<int> keys, vals;
    for (auto [k, v] : m) {
      check(k >= 1 && v >= 1, "permutation entries must be positive");
      keys.insert(k);
      check(vals.insert(v).second, "permutation is not injective");
    }
    check(keys == vals, "permutation does not close up on its support");
    Permutation p;
    for (auto [k, v] : m)
      if (k != v) {
        p.fwd_[k] = v;
        p.inv_[v] = k;
      }
    return p;
  }

  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles) {
    std::map<int, int> m;
    for (const auto& cyc : cycles) {
      check(!cyc.empty(), "empty cycle");
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        check(cyc[i] >= 1, "cycle entries must be positive");
        check(!m.count(cyc[i]), "cycles are not disjoint");
        m[cyc[i]] = cyc[(i + 1) % cyc.size()];
      }
    }
    return from_map(m);
  }

  static Permutation transposition(int a, int b) { return from_cycles({{a, b}}); }

  int operator()(int i) const {
    auto it = fwd_.find(i);
    return it == fwd_.end() ? i : it->second;
  }

  int inverse(int i) const {
    auto it = inv_.find(i);
    return it == inv_.end() ? i : it->second;
  }

  Permutation inverted() const {
    Permutation p;
    p.fwd_ = inv_;
    p.inv_ = fwd_;
    return p;
  }

  // (*this) composed after `first`: apply `first`, then this.
  Permutation after(const Permutation& first) const {
    std::map<int, int> m;
    for (auto [k, v] : first.fwd_) m[k] = (*this)(v);
    for (auto [k, v] : fwd_)
      if (!first.fwd_.count(k)) m[k] = v;
    return from_map(m);
  }

  std::set<int> support() const {
    std::set<int> s;
    for (auto [k, v] : fwd_) s.insert(k);
    return s;
  }

  bool is_identity() const { return fwd_.empty(); }

  // The cycle through `start`, listed from `start`.
  std::vector<int> cycle_from(int start) const {
    std::vector<int> cyc{start};
    for (int x = (*this)(start); x != start; x = (*this)(x)) {
      cyc.push_back(x);
      check(cyc.size() <= fwd_.size() + 1, "cycle does not close");
    }
    return cyc;
  }

  // Cycle decomposition on a ground set closed under the permutation.  Fixed
  // points become singletons.  Each cycle starts at its smallest element and
  // cycles are ordered by those elements.
  std::vector<std::vector<int>> cycles_on(const std::vector<int>& ground) const {
    std::set<int> todo(ground.begin(), ground.end());
    std::vector<std::vector<int>> out;
    while (!todo.empty()) {
      int start = *todo.begin();
      std::vector<int> cyc;
      int x = start;
      do {
        check(todo.erase(x) == 1, "ground set is not closed under the permutation");
        cyc.push_back(x);
        x = (*this)(x);
      } while (x != start);
      out.push_back(std::move(cyc));
    }
    return out;
  }

  bool operator==(const Permutation& o) const { return fwd_ == o.fwd_; }

private:
  std::map<int, int> fwd_, inv_;
};

}  // namespace kitaev::graphs
