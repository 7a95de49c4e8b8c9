#include <catch2/catch_amalgamated.hpp>

#include <kitaev/graphs/graph_json.hpp>
#include <kitaev/graphs/kitaev_graph.hpp>
#include <kitaev/graphs/moves.hpp>
#include <kitaev/graphs/permutation.hpp>
#include <kitaev/graphs/reduce.hpp>

using namespace kitaev;
using namespace kitaev::graphs;

namespace {

KitaevGraph make_graph(const std::vector<std::vector<int>>& cycles,
                       std::vector<int> cilia, int pt) {
  KitaevGraph g;
  g.rho = Permutation::from_cycles(cycles);
  g.cilia = std::move(cilia);
  g.pt = pt;
  return g;
}

// rotate a cycle so its smallest element comes first
std::vector<int> canon(std::vector<int> c) {
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  return c;
}

SurfaceInvariants inv3(long genus, long boundary, long euler) {
  SurfaceInvariants s;
  s.genus = genus;
  s.boundary = boundary;
  s.euler = euler;
  return s;
}

}  // namespace

TEST_CASE("permutations compose and decompose") {
  auto p = Permutation::from_cycles({{1, 3, 2, 4}});
  CHECK(p(1) == 3);
  CHECK(p(4) == 1);
  CHECK(p(5) == 5);
  CHECK(p.inverse(3) == 1);
  CHECK(p.inverted()(3) == 1);
  CHECK(kappa(1) == 2);
  CHECK(kappa(2) == 1);
  CHECK(kappa(7) == 8);

  auto q = Permutation::transposition(1, 2);
  // q.after(p): apply p, then q
  CHECK(q.after(p)(4) == 2);
  CHECK(p.after(q)(1) == 4);
  CHECK((q.after(q)).is_identity());

  auto cyc = p.cycles_on({1, 2, 3, 4, 5});
  REQUIRE(cyc.size() == 2);
  CHECK(cyc[0] == std::vector<int>{1, 3, 2, 4});
  CHECK(cyc[1] == std::vector<int>{5});
  CHECK(p.cycle_from(2) == std::vector<int>{2, 4, 1, 3});

  CHECK_THROWS_AS(Permutation::from_cycles({{1, 2}, {2, 3}}), error);
  CHECK_THROWS_AS(Permutation::from_cycles({{0, 1}}), error);
  CHECK_THROWS_AS(Permutation::from_map({{1, 2}, {2, 2}}), error);
  CHECK_THROWS_AS(p.cycles_on({1, 2}), error);
}

TEST_CASE("standard graphs match their reference structure") {
  auto T = standard_graph(1, 0);
  CHECK(T.rho == Permutation::from_cycles({{1, 3, 2, 4}}));
  CHECK(T.cilia == std::vector<int>{1});
  CHECK(T.pt == 1);

  auto A = standard_graph(0, 1);
  CHECK(A.rho == Permutation::from_cycles({{1, 4, 2}}));
  CHECK(A.cilia == std::vector<int>{1, 3});
  CHECK(A.pt == 1);

  auto P21 = standard_graph(2, 1);
  auto d = derive(P21);
  CHECK(d.vertices.size() == 2);
  CHECK(d.edges.size() == 6);
  CHECK(d.faces.size() == 2);
  CHECK(invariants(P21) == inv3(2, 2, -2));

  CHECK(invariants(standard_graph(3, 2)) == inv3(3, 3, -4));
  CHECK(invariants(T) == inv3(1, 1, 0));
  CHECK(invariants(A) == inv3(0, 2, 2));

  for (int g = 0; g <= 3; ++g)
    for (int a = 0; a <= 3; ++a) {
      if (g + a == 0) continue;
      auto s = standard_graph(g, a);
      CHECK(validate(s).empty());
      auto sd = derive(s);
      CHECK(sd.vertices.size() == static_cast<std::size_t>(a + 1));
      CHECK(sd.edges.size() == static_cast<std::size_t>(2 * (g + a)));
      CHECK(sd.faces.size() == static_cast<std::size_t>(a + 1));
      CHECK(invariants(s).genus == g);
    }
  CHECK_THROWS_AS(standard_graph(0, 0), error);
}

TEST_CASE("vertices, edges and faces are read off the presentation") {
  auto T = standard_graph(1, 0);
  auto dT = derive(T);
  REQUIRE(dT.vertices.size() == 1);
  CHECK(dT.vertices[0] == std::vector<int>{1, 3, 2, 4});
  CHECK(dT.edges == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  REQUIRE(dT.faces.size() == 1);
  CHECK(canon(dT.faces[0]) == std::vector<int>{1, 3, 2, 4});

  auto A = standard_graph(0, 1);
  auto dA = derive(A);
  REQUIRE(dA.vertices.size() == 2);
  CHECK(dA.vertices[0] == std::vector<int>{1, 4, 2});
  CHECK(dA.vertices[1] == std::vector<int>{3});
  REQUIRE(dA.faces.size() == 2);
  CHECK(canon(dA.faces[0]) == std::vector<int>{2});
  CHECK(canon(dA.faces[1]) == std::vector<int>{1, 4, 3});
}

TEST_CASE("structural violations are reported") {
  // distinguished cilium missing
  auto g1 = make_graph({{1, 3, 2, 4}}, {3}, 1);
  auto v1 = validate(g1);
  REQUIRE_FALSE(v1.empty());
  CHECK(v1.front() == "pt not in C");

  // two disjoint copies of the genus-1 reference graph
  auto g2 = make_graph({{1, 3, 2, 4}, {5, 7, 6, 8}}, {1, 5}, 1);
  auto v2 = validate(g2);
  CHECK(std::find(v2.begin(), v2.end(), "not connected") != v2.end());

  // a single edge with both halves ciliated: faces cannot be matched
  auto g3 = make_graph({}, {1, 2}, 1);
  auto v3 = validate(g3);
  CHECK(std::find(v3.begin(), v3.end(), "not well-ciliated (faces)") != v3.end());

  // permutation touching half-edges outside the closure of the cilia
  auto g4 = make_graph({{1, 3, 2, 4}, {5, 6}}, {1}, 1);
  auto v4 = validate(g4);
  CHECK(std::find(v4.begin(), v4.end(), "rho moves half-edges outside the graph") !=
        v4.end());

  CHECK(validate(standard_graph(2, 2)).empty());
  CHECK_THROWS_AS(invariants(g3), error);
}

TEST_CASE("reorderings act by conjugation") {
  auto T = standard_graph(1, 0);

  auto r1 = apply_reordering(T, reordering_permutation(Move::reversal(1)));
  CHECK(r1.rho == Permutation::from_cycles({{2, 3, 1, 4}}));
  CHECK(r1.cilia == std::vector<int>{2});
  CHECK(r1.pt == 2);
  CHECK(invariants(r1) == invariants(T));
  // an involution
  CHECK(apply_reordering(r1, reordering_permutation(Move::reversal(1))) == T);

  auto A = standard_graph(0, 1);
  auto s = Permutation::from_cycles({{1, 3}, {2, 4}});
  auto r2 = apply_reordering(A, s);
  CHECK(validate(r2).empty());
  CHECK(invariants(r2) == inv3(0, 2, 2));
  CHECK(r2.cilia == std::vector<int>{1, 3});

  // not compatible with the pairing
  CHECK_THROWS_AS(apply_reordering(T, Permutation::transposition(1, 3)), error);

  // group action on a pseudo-random generator word
  std::mt19937_64 rng(20240816);
  for (int trial = 0; trial < 40; ++trial) {
    auto base = standard_graph(1, 1);
    auto pick = [&]() {
      int e = static_cast<int>(rng() % 5) + 1;
      return (rng() % 2 == 0) ? Move::reversal(e) : Move::permutation(e);
    };
    Move m1 = pick(), m2 = pick();
    auto s1 = reordering_permutation(m1), s2 = reordering_permutation(m2);
    auto lhs = apply_reordering(apply_reordering(base, s2), s1);
    auto rhs = apply_reordering(base, s1.after(s2));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("slides act, reverse themselves and respect reorderings") {
  auto T = standard_graph(1, 0);
  // neither scenario applies: no effect
  CHECK(apply_slide(T, 1, 2) == T);
  CHECK(apply_slide(T, 1, 3) == T);
  // half-edges outside the graph: no effect
  CHECK(apply_slide(T, 11, 12) == T);
  CHECK(legal_slides(T).empty());

  auto A = standard_graph(0, 1);
  auto ls = legal_slides(A);
  CHECK(ls == std::vector<std::pair<int, int>>{{3, 1}, {4, 2}});

  auto s1 = apply_slide(A, 4, 2);
  CHECK(s1.rho == Permutation::from_cycles({{1, 4}, {2, 3}}));
  CHECK(s1.cilia == std::vector<int>{1, 2});
  CHECK(s1.pt == 1);
  CHECK(invariants(s1) == inv3(0, 2, 2));
  CHECK(apply_slide(s1, 4, 2) == A);  // undoes itself

  // involutivity and invariant preservation across several graphs
  for (auto [g, a] : std::vector<std::pair<int, int>>{{1, 1}, {2, 0}, {0, 3}, {2, 1}}) {
    auto base = standard_graph(g, a);
    auto scr = apply_word(base, scramble(base, 6, 97 + g * 10 + a));
    auto gamma = half_edges(scr);
    auto binv = invariants(scr);
    for (int x : gamma)
      for (int y : gamma) {
        CHECK_FALSE((slide_scenario1(scr, x, y) && slide_scenario2(scr, x, y)));
        auto once = apply_slide(scr, x, y);
        if (once == scr) continue;
        CHECK(validate(once).empty());
        CHECK(invariants(once) == binv);
        CHECK(apply_slide(once, x, y) == scr);
      }
  }

  // a reordering conjugates the slide indices
  std::mt19937_64 rng(5150);
  auto base = standard_graph(1, 1);
  for (int trial = 0; trial < 25; ++trial) {
    auto w = scramble(base, 3, rng());
    auto h = apply_word(base, w);
    auto ls2 = legal_slides(h);
    REQUIRE_FALSE(ls2.empty());
    auto [sa, sb] = ls2[rng() % ls2.size()];
    int e = static_cast<int>(rng() % 5) + 1;
    Move m = (rng() % 2 == 0) ? Move::reversal(e) : Move::permutation(e);
    auto sig = reordering_permutation(m);
    auto lhs = apply_reordering(apply_slide(h, sa, sb), sig);
    auto rhs = apply_slide(apply_reordering(h, sig), sig(sa), sig(sb));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("connected sums splice at cilia") {
  auto T = standard_graph(1, 0);
  auto A = standard_graph(0, 1);

  auto TA = connected_sum(T, A);
  CHECK(TA.shift == 6);
  CHECK(invariants(TA.graph) == inv3(1, 2, 0));
  CHECK(TA.graph.rho == Permutation::from_cycles({{1, 3, 2, 4, 7, 10, 8}}));
  CHECK(TA.graph.cilia == std::vector<int>{1, 9});
  CHECK(TA.graph.pt == 1);

  auto TT = connected_sum(T, T);
  CHECK(invariants(TT.graph) == inv3(2, 1, -2));
  CHECK(TT.graph.rho == Permutation::from_cycles({{1, 3, 2, 4, 7, 9, 8, 10}}));

  auto AA = connected_sum(A, A);
  CHECK(invariants(AA.graph) == inv3(0, 3, 2));
  CHECK(AA.graph.cilia == std::vector<int>{1, 3, 9});

  // vertex/edge/face counts add up as for a sum along discs
  auto d1 = derive(TA.graph);
  CHECK(d1.vertices.size() == 2);
  CHECK(d1.edges.size() == 4);
  CHECK(d1.faces.size() == 2);

  CHECK_THROWS_AS(connected_sum(T, A, 2, 0), error);  // 2 is not a cilium
}

TEST_CASE("reduction rewrites any presentation into the reference form") {
  // reference graphs are already reduced
  for (auto [g, a] : std::vector<std::pair<int, int>>{
           {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}, {0, 3}, {3, 0}}) {
    auto s = standard_graph(g, a);
    auto r = reduce_to_standard(s);
    CHECK(r.standard == s);
    CHECK(r.word.empty());
  }

  // connected sums land on the reference graph of the summed surface
  auto T = standard_graph(1, 0);
  auto A = standard_graph(0, 1);
  auto rTA = reduce_to_standard(connected_sum(T, A).graph);
  CHECK(rTA.standard == standard_graph(1, 1));
  auto rTT = reduce_to_standard(connected_sum(T, T).graph);
  CHECK(rTT.standard == standard_graph(2, 0));
  auto rAA = reduce_to_standard(connected_sum(A, A).graph);
  CHECK(rAA.standard == standard_graph(0, 2));
  auto TTA = connected_sum(connected_sum(T, T).graph, A).graph;
  CHECK(reduce_to_standard(TTA).standard == standard_graph(2, 1));

  // the word replays exactly
  auto scr0 = apply_word(TTA, scramble(TTA, 5, 11));
  auto r0 = reduce_to_standard(scr0);
  CHECK(apply_word(scr0, r0.word) == r0.standard);

  // invariants are untouched along the whole replay
  {
    KitaevGraph h = scr0;
    auto base = invariants(h);
    for (const Move& m : r0.word) {
      h = apply_move(h, m);
      CHECK(invariants(h) == base);
    }
  }

  // pseudo-random scrambles round-trip, with and without reorderings
  std::mt19937_64 rng(31337);
  for (auto [g, a] : std::vector<std::pair<int, int>>{
           {1, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}, {0, 3}}) {
    auto s = standard_graph(g, a);
    for (int trial = 0; trial < 4; ++trial) {
      bool reord = trial % 2 == 1;
      auto w = scramble(s, 12, rng(), reord);
      auto scr = apply_word(s, w);
      CHECK(validate(scr).empty());
      auto r = reduce_to_standard(scr);
      CHECK(r.standard == s);
      CHECK(apply_word(scr, r.word) == s);
    }
  }

  // two presentations of one surface are joined by a word
  {
    auto s = standard_graph(1, 1);
    auto g1 = apply_word(s, scramble(s, 7, 2001));
    auto g2 = apply_word(s, scramble(s, 9, 2002));
    auto r1 = reduce_to_standard(g1);
    auto r2 = reduce_to_standard(g2);
    REQUIRE(r1.standard == r2.standard);
    MoveWord join = r1.word;
    auto back = inverse_word(r2.word);
    join.insert(join.end(), back.begin(), back.end());
    CHECK(apply_word(g1, join) == g2);
  }
}

TEST_CASE("graphs and words round-trip through json") {
  auto doc = nlohmann::json::parse(R"({"rho": [[1, 3, 2, 4]], "cilia": [1], "pt": 1})");
  auto T = graph_from_json(doc);
  CHECK(T == standard_graph(1, 0));
  CHECK(graph_to_json(T) == doc);

  for (auto [g, a] : std::vector<std::pair<int, int>>{{0, 1}, {2, 1}, {1, 2}}) {
    auto s = standard_graph(g, a);
    CHECK(graph_from_json(graph_to_json(s)) == s);
  }

  // scrambled graph with a fixed point in rho keeps its cycles canonical
  auto A = standard_graph(0, 1);
  auto j = graph_to_json(A);
  CHECK(j["rho"].size() == 1);  // the singleton is omitted
  CHECK(graph_from_json(j) == A);

  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"rho": 3})")), error);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"rho": [], "cilia": [1, 1], "pt": 1})")),
                  error);

  MoveWord w{Move::reversal(2), Move::permutation(1), Move::slide(4, 2)};
  CHECK(word_from_json(word_to_json(w)) == w);
  CHECK_THROWS_AS(word_from_json(nlohmann::json::parse(R"([{"move": "warp"}])")), error);
}
