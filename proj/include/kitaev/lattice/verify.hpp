#pragma once
// Structural verification of an extended space.
//
// verify_extended_yd checks, exhaustively on basis elements, that every
// cilium carries a module (vertex operators) and a comodule (face
// coaction), that the two satisfy the untwisted left-left Yetter-Drinfeld
// law, and that operators attached to distinct cilia commute in all three
// combinations.  verify_edge_operator_relations checks the interchange
// relations between the edge-end operators and the leg involution on every
// pair of half-edges.  Both return a list of human-readable violations,
// empty on success.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kitaev/lattice/extended_space.hpp"

namespace kitaev::lattice {

namespace detail {

inline SparseVec sv_freeze(std::map<int, Scalar>&& acc) {
  SparseVec out;
  for (auto& [r, s] : acc)
    if (!exact::is_zero(s)) out.e.emplace_back(r, std::move(s));
  return out;
}

// Linear combination of a family of sparse maps.
inline SparseMap sp_combine(const FieldSpec& F, const std::vector<SparseMap>& family,
                            const Vec& coeffs) {
  check(!family.empty() && coeffs.size() == family.size(),
        "combination arity mismatch");
  SparseMap out = sp_zero(family.front().rows, static_cast<int>(family.front().col.size()));
  for (size_t t = 0; t < family.size(); ++t) {
    if (exact::is_zero(coeffs[t])) continue;
    out = sp_add(F, out, sp_scale(F, coeffs[t], family[t]));
  }
  return out;
}

}  // namespace detail

// Verify the per-cilium module/comodule structure, the Yetter-Drinfeld law
// at every cilium, and commutation of operators at distinct cilia.
inline std::vector<std::string> verify_extended_yd(const ExtendedSpace& s) {
  std::vector<std::string> bad;
  const hopf::HopfAlgebra& H = algebra_of(s);
  const FieldSpec& F = H.field;
  const int n = H.dim, D = s.total_dim;
  const int nc = static_cast<int>(s.graph.cilia.size());

  // Cache the per-cilium operator families.
  std::vector<std::vector<SparseMap>> A(static_cast<size_t>(nc)), Bf(static_cast<size_t>(nc));
  std::vector<SparseMap> delta(static_cast<size_t>(nc));
  for (int ci = 0; ci < nc; ++ci) {
    const int c = s.graph.cilia[static_cast<size_t>(ci)];
    auto& av = A[static_cast<size_t>(ci)];
    auto& bv = Bf[static_cast<size_t>(ci)];
    av.reserve(static_cast<size_t>(n));
    bv.reserve(static_cast<size_t>(n));
    SparseMap dl = sp_zero(n * D, D);
    for (int t = 0; t < n; ++t) {
      av.push_back(vertex_map(s, c, hopf::basis_vec(n, t)));
      bv.push_back(face_functional_map(s, c, t));
      for (size_t j = 0; j < bv.back().col.size(); ++j)
        for (const auto& [r, sc] : bv.back().col[j].e)
          dl.col[j].e.emplace_back(t * D + r, sc);
    }
    delta[static_cast<size_t>(ci)] = std::move(dl);
  }

  // Left and right multiplication tables on the algebra, for the law below.
  std::vector<Matrix> lmul(static_cast<size_t>(n), Matrix(n, n));
  std::vector<Matrix> rmul_s(static_cast<size_t>(n), Matrix(n, n));
  for (int u = 0; u < n; ++u)
    for (int i = 0; i < n; ++i)
      for (int r = 0; r < n; ++r) {
        lmul[static_cast<size_t>(u)].at(r, i) =
            H.mul[static_cast<size_t>(u)][static_cast<size_t>(i)][static_cast<size_t>(r)];
        Scalar acc = exact::s_zero();
        for (int q = 0; q < n; ++q) {
          const Scalar& sq = H.antipode.at(q, u);
          if (exact::is_zero(sq)) continue;
          acc = exact::add(acc, exact::mul(F, sq,
              H.mul[static_cast<size_t>(i)][static_cast<size_t>(q)][static_cast<size_t>(r)]));
        }
        rmul_s[static_cast<size_t>(u)].at(r, i) = std::move(acc);
      }

  for (int ci = 0; ci < nc; ++ci) {
    const int c = s.graph.cilia[static_cast<size_t>(ci)];
    const std::string label = "cilium " + std::to_string(c) + ": ";
    const auto& av = A[static_cast<size_t>(ci)];
    const auto& bv = Bf[static_cast<size_t>(ci)];
    const SparseMap& dl = delta[static_cast<size_t>(ci)];

    // Module axioms for the vertex operators.
    if (!(detail::sp_combine(F, av, H.unit) == sp_identity(D)))
      bad.push_back(label + "the vertex operator of the unit is not the identity");
    bool mult_ok = true;
    for (int s2 = 0; s2 < n && mult_ok; ++s2)
      for (int t2 = 0; t2 < n && mult_ok; ++t2) {
        const SparseMap lhs = sp_compose(F, av[static_cast<size_t>(s2)], av[static_cast<size_t>(t2)]);
        const SparseMap rhs =
            detail::sp_combine(F, av, hopf::mul_elem(H, hopf::basis_vec(n, s2), hopf::basis_vec(n, t2)));
        if (!(lhs == rhs)) {
          bad.push_back(label + "the vertex operators are not multiplicative at basis (" +
                        std::to_string(s2) + ", " + std::to_string(t2) + ")");
          mult_ok = false;
        }
      }

    // Comodule axioms for the face coaction.
    if (!(detail::sp_combine(F, bv, H.counit) == sp_identity(D)))
      bad.push_back(label + "the face coaction violates the counit law");
    {
      SparseMap lhs = sp_zero(n * n * D, D);  // coact again on the space part
      SparseMap rhs = sp_zero(n * n * D, D);  // comultiply the algebra part
      for (int j = 0; j < D; ++j) {
        std::map<int, Scalar> la, ra;
        for (const auto& [row, sc] : dl.col[static_cast<size_t>(j)].e) {
          const int t = row / D, b = row % D;
          for (const auto& [row2, sc2] : dl.col[static_cast<size_t>(b)].e) {
            const int u = row2 / D, q = row2 % D;
            const Scalar v = exact::mul(F, sc, sc2);
            auto it = la.find((t * n + u) * D + q);
            if (it == la.end())
              la.emplace((t * n + u) * D + q, v);
            else
              it->second = exact::add(it->second, v);
          }
          const Matrix& Dm = H.comul[static_cast<size_t>(t)];
          for (int p = 0; p < n; ++p)
            for (int q2 = 0; q2 < n; ++q2) {
              const Scalar& w = Dm.at(p, q2);
              if (exact::is_zero(w)) continue;
              const Scalar v = exact::mul(F, sc, w);
              auto it = ra.find((p * n + q2) * D + b);
              if (it == ra.end())
                ra.emplace((p * n + q2) * D + b, v);
              else
                it->second = exact::add(it->second, v);
            }
        }
        lhs.col[static_cast<size_t>(j)] = detail::sv_freeze(std::move(la));
        rhs.col[static_cast<size_t>(j)] = detail::sv_freeze(std::move(ra));
      }
      if (!(lhs == rhs)) bad.push_back(label + "the face coaction is not coassociative");
    }

    // The untwisted left-left Yetter-Drinfeld law, basis element by basis
    // element: coacting after acting equals sandwiching the coacted leg
    // between the outer coproduct legs (the last through the antipode) while
    // the middle leg acts.
    std::map<std::pair<int, int>, Matrix> hmat_cache;
    for (int t = 0; t < n; ++t) {
      const SparseMap lhs = sp_compose(F, dl, av[static_cast<size_t>(t)]);
      SparseMap rhs = sp_zero(n * D, D);
      const auto legs = reps::detail::comul2(H, t);
      for (int j = 0; j < D; ++j) {
        std::map<int, Scalar> acc;
        for (const auto& [row, sc] : dl.col[static_cast<size_t>(j)].e) {
          const int i = row / D, b = row % D;
          for (const auto& L : legs) {
            auto key = std::make_pair(L.u, L.w);
            auto hit = hmat_cache.find(key);
            if (hit == hmat_cache.end())
              hit = hmat_cache
                        .emplace(key, exact::m_mul(F, lmul[static_cast<size_t>(L.u)],
                                                   rmul_s[static_cast<size_t>(L.w)]))
                        .first;
            const Matrix& hm = hit->second;
            const Scalar base = exact::mul(F, L.c, sc);
            if (exact::is_zero(base)) continue;
            for (const auto& [b2, sc2] : av[static_cast<size_t>(L.v)].col[static_cast<size_t>(b)].e) {
              const Scalar base2 = exact::mul(F, base, sc2);
              if (exact::is_zero(base2)) continue;
              for (int r = 0; r < n; ++r) {
                const Scalar& hv = hm.at(r, i);
                if (exact::is_zero(hv)) continue;
                const Scalar v = exact::mul(F, base2, hv);
                auto it = acc.find(r * D + b2);
                if (it == acc.end())
                  acc.emplace(r * D + b2, v);
                else
                  it->second = exact::add(it->second, v);
              }
            }
          }
        }
        rhs.col[static_cast<size_t>(j)] = detail::sv_freeze(std::move(acc));
      }
      if (!(lhs == rhs)) {
        bad.push_back(label + "the Yetter-Drinfeld law fails at basis " + std::to_string(t));
        break;
      }
    }
  }

  // Operators at distinct cilia commute, in all three combinations.
  for (int ci = 0; ci < nc; ++ci)
    for (int cj = 0; cj < nc; ++cj) {
      if (ci == cj) continue;
      const std::string label = "cilia " + std::to_string(s.graph.cilia[static_cast<size_t>(ci)]) +
                                " and " + std::to_string(s.graph.cilia[static_cast<size_t>(cj)]) + ": ";
      bool ok = true;
      if (ci < cj) {
        for (int s2 = 0; s2 < n && ok; ++s2)
          for (int t2 = 0; t2 < n && ok; ++t2)
            if (!(sp_compose(F, A[static_cast<size_t>(ci)][static_cast<size_t>(s2)],
                             A[static_cast<size_t>(cj)][static_cast<size_t>(t2)]) ==
                  sp_compose(F, A[static_cast<size_t>(cj)][static_cast<size_t>(t2)],
                             A[static_cast<size_t>(ci)][static_cast<size_t>(s2)]))) {
              bad.push_back(label + "vertex operators at basis (" + std::to_string(s2) + ", " +
                            std::to_string(t2) + ") do not commute");
              ok = false;
            }
        ok = true;
        for (int s2 = 0; s2 < n && ok; ++s2)
          for (int t2 = 0; t2 < n && ok; ++t2)
            if (!(sp_compose(F, Bf[static_cast<size_t>(ci)][static_cast<size_t>(s2)],
                             Bf[static_cast<size_t>(cj)][static_cast<size_t>(t2)]) ==
                  sp_compose(F, Bf[static_cast<size_t>(cj)][static_cast<size_t>(t2)],
                             Bf[static_cast<size_t>(ci)][static_cast<size_t>(s2)]))) {
              bad.push_back(label + "face operators at basis (" + std::to_string(s2) + ", " +
                            std::to_string(t2) + ") do not commute");
              ok = false;
            }
      }
      ok = true;
      for (int s2 = 0; s2 < n && ok; ++s2)
        for (int t2 = 0; t2 < n && ok; ++t2)
          if (!(sp_compose(F, A[static_cast<size_t>(ci)][static_cast<size_t>(s2)],
                           Bf[static_cast<size_t>(cj)][static_cast<size_t>(t2)]) ==
                sp_compose(F, Bf[static_cast<size_t>(cj)][static_cast<size_t>(t2)],
                           A[static_cast<size_t>(ci)][static_cast<size_t>(s2)]))) {
            bad.push_back(label + "the vertex operator at basis " + std::to_string(s2) +
                          " and the face operator at basis " + std::to_string(t2) +
                          " do not commute");
            ok = false;
          }
    }
  return bad;
}

// Verify the interchange relations between edge-end operators, functional
// operators and the leg involution, on every pair of half-edges and every
// pair of basis elements.
inline std::vector<std::string> verify_edge_operator_relations(const ExtendedSpace& s) {
  std::vector<std::string> bad;
  const hopf::HopfAlgebra& H = algebra_of(s);
  const FieldSpec& F = H.field;
  const int n = H.dim;
  const int k = leg_count(s);

  std::vector<int> halves;
  for (const auto& [h, leg] : s.leg_of) halves.push_back(h);

  std::map<int, std::vector<SparseMap>> L, T;
  for (int h : halves) {
    auto& lv = L[h];
    auto& tv = T[h];
    for (int t = 0; t < n; ++t) {
      lv.push_back(l_map(s, h, hopf::basis_vec(n, t)));
      tv.push_back(t_map(s, h, hopf::basis_vec(n, t)));
    }
  }
  std::vector<SparseMap> psi(static_cast<size_t>(k));
  for (int l = 0; l < k; ++l) psi[static_cast<size_t>(l)] = leg_map(s, l, s.bimodule->psi);

  // The leg involution exchanges the two end operators of its edge and
  // commutes with operators on other edges.
  for (int l = 0; l < k; ++l) {
    const auto [o, e] = s.data.edges[static_cast<size_t>(l)];
    const SparseMap& P = psi[static_cast<size_t>(l)];
    const std::string elabel =
        "edge (" + std::to_string(o) + ", " + std::to_string(e) + "): ";
    bool ok = true;
    for (int t = 0; t < n && ok; ++t) {
      if (!(sp_compose(F, P, L[o][static_cast<size_t>(t)]) ==
            sp_compose(F, L[e][static_cast<size_t>(t)], P)) ||
          !(sp_compose(F, P, L[e][static_cast<size_t>(t)]) ==
            sp_compose(F, L[o][static_cast<size_t>(t)], P)) ||
          !(sp_compose(F, P, T[o][static_cast<size_t>(t)]) ==
            sp_compose(F, T[e][static_cast<size_t>(t)], P)) ||
          !(sp_compose(F, P, T[e][static_cast<size_t>(t)]) ==
            sp_compose(F, T[o][static_cast<size_t>(t)], P))) {
        bad.push_back(elabel +
                      "the leg involution does not exchange the end operators at basis " +
                      std::to_string(t));
        ok = false;
      }
    }
    ok = true;
    for (int h : halves) {
      if (!ok) break;
      if (s.leg_of.at(h) == l) continue;
      for (int t = 0; t < n && ok; ++t)
        if (!(sp_compose(F, P, L[h][static_cast<size_t>(t)]) ==
              sp_compose(F, L[h][static_cast<size_t>(t)], P)) ||
            !(sp_compose(F, P, T[h][static_cast<size_t>(t)]) ==
              sp_compose(F, T[h][static_cast<size_t>(t)], P))) {
          bad.push_back(elabel + "the leg involution does not commute with operators at half-edge " +
                        std::to_string(h));
          ok = false;
        }
    }
  }

  // Edge operators at distinct half-edges commute, and so do functional
  // operators at distinct half-edges.
  for (size_t x = 0; x < halves.size(); ++x)
    for (size_t y = x + 1; y < halves.size(); ++y) {
      const int h = halves[x], h2 = halves[y];
      const std::string plabel =
          "half-edges " + std::to_string(h) + " and " + std::to_string(h2) + ": ";
      bool ok = true;
      for (int s2 = 0; s2 < n && ok; ++s2)
        for (int t2 = 0; t2 < n && ok; ++t2)
          if (!(sp_compose(F, L[h][static_cast<size_t>(s2)], L[h2][static_cast<size_t>(t2)]) ==
                sp_compose(F, L[h2][static_cast<size_t>(t2)], L[h][static_cast<size_t>(s2)]))) {
            bad.push_back(plabel + "edge operators at basis (" + std::to_string(s2) + ", " +
                          std::to_string(t2) + ") do not commute");
            ok = false;
          }
      ok = true;
      for (int s2 = 0; s2 < n && ok; ++s2)
        for (int t2 = 0; t2 < n && ok; ++t2)
          if (!(sp_compose(F, T[h][static_cast<size_t>(s2)], T[h2][static_cast<size_t>(t2)]) ==
                sp_compose(F, T[h2][static_cast<size_t>(t2)], T[h][static_cast<size_t>(s2)]))) {
            bad.push_back(plabel + "functional operators at basis (" + std::to_string(s2) +
                          ", " + std::to_string(t2) + ") do not commute");
            ok = false;
          }
    }

  // Functional operators pass edge operators at the same half-edge at the
  // cost of pairing the outer dual coproduct leg with the antipode of the
  // second coproduct leg of the acting element.
  for (int h : halves) {
    std::map<std::pair<int, int>, SparseMap> lt;
    const auto composed = [&](int p, int w) -> const SparseMap& {
      auto key = std::make_pair(p, w);
      auto it = lt.find(key);
      if (it == lt.end())
        it = lt.emplace(key, sp_compose(F, L[h][static_cast<size_t>(p)],
                                        T[h][static_cast<size_t>(w)]))
                 .first;
      return it->second;
    };
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int t = 0; t < n && ok; ++t) {
        const SparseMap lhs =
            sp_compose(F, T[h][static_cast<size_t>(u)], L[h][static_cast<size_t>(t)]);
        SparseMap rhs = sp_zero(s.total_dim, s.total_dim);
        const Matrix& Dt = H.comul[static_cast<size_t>(t)];
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            const Scalar& dc = Dt.at(p, q);
            if (exact::is_zero(dc)) continue;
            for (int w = 0; w < n; ++w)
              for (int x2 = 0; x2 < n; ++x2) {
                const Scalar& mc =
                    H.mul[static_cast<size_t>(w)][static_cast<size_t>(x2)][static_cast<size_t>(u)];
                if (exact::is_zero(mc)) continue;
                const Scalar& sc = H.antipode.at(x2, q);
                if (exact::is_zero(sc)) continue;
                const Scalar coeff = exact::mul(F, exact::mul(F, dc, mc), sc);
                if (exact::is_zero(coeff)) continue;
                rhs = sp_add(F, rhs, sp_scale(F, coeff, composed(p, w)));
              }
          }
        if (!(lhs == rhs)) {
          bad.push_back("half-edge " + std::to_string(h) +
                        ": the same-end interchange law fails at basis (" + std::to_string(u) +
                        ", " + std::to_string(t) + ")");
          ok = false;
        }
      }
  }

  // At opposite ends of one edge the interchange pairs the inner dual
  // coproduct leg with the first coproduct leg of the acting element.
  for (int h : halves) {
    const int h2 = graphs::kappa(h);
    std::map<std::pair<int, int>, SparseMap> lt;
    const auto composed = [&](int q, int x2) -> const SparseMap& {
      auto key = std::make_pair(q, x2);
      auto it = lt.find(key);
      if (it == lt.end())
        it = lt.emplace(key, sp_compose(F, L[h][static_cast<size_t>(q)],
                                        T[h2][static_cast<size_t>(x2)]))
                 .first;
      return it->second;
    };
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int t = 0; t < n && ok; ++t) {
        const SparseMap lhs =
            sp_compose(F, T[h2][static_cast<size_t>(u)], L[h][static_cast<size_t>(t)]);
        SparseMap rhs = sp_zero(s.total_dim, s.total_dim);
        const Matrix& Dt = H.comul[static_cast<size_t>(t)];
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            const Scalar& dc = Dt.at(p, q);
            if (exact::is_zero(dc)) continue;
            for (int x2 = 0; x2 < n; ++x2) {
              const Scalar& mc =
                  H.mul[static_cast<size_t>(p)][static_cast<size_t>(x2)][static_cast<size_t>(u)];
              if (exact::is_zero(mc)) continue;
              const Scalar coeff = exact::mul(F, dc, mc);
              rhs = sp_add(F, rhs, sp_scale(F, coeff, composed(q, x2)));
            }
          }
        if (!(lhs == rhs)) {
          bad.push_back("half-edges " + std::to_string(h2) + " and " + std::to_string(h) +
                        ": the opposite-end interchange law fails at basis (" +
                        std::to_string(u) + ", " + std::to_string(t) + ")");
          ok = false;
        }
      }
  }

  // A functional operator commutes with edge operators away from its edge.
  for (int h : halves)
    for (int h2 : halves) {
      if (h2 == h || h2 == graphs::kappa(h)) continue;
      bool ok = true;
      for (int u = 0; u < n && ok; ++u)
        for (int t = 0; t < n && ok; ++t)
          if (!(sp_compose(F, T[h][static_cast<size_t>(u)], L[h2][static_cast<size_t>(t)]) ==
                sp_compose(F, L[h2][static_cast<size_t>(t)], T[h][static_cast<size_t>(u)]))) {
            bad.push_back("half-edges " + std::to_string(h) + " and " + std::to_string(h2) +
                          ": the functional operator does not commute with the edge operator at basis (" +
                          std::to_string(u) + ", " + std::to_string(t) + ")");
            ok = false;
          }
    }

  return bad;
}

}  // namespace kitaev::lattice
