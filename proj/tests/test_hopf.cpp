#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "kitaev/hopf/constructors.hpp"
#include "kitaev/hopf/dual.hpp"
#include "kitaev/hopf/group_likes.hpp"
#include "kitaev/hopf/hopf_json.hpp"
#include "kitaev/hopf/integrals.hpp"
#include "kitaev/hopf/pairs.hpp"

using namespace kitaev;
using namespace kitaev::hopf;

namespace {

void expect_hopf(const HopfAlgebra& H) {
  auto bad = verify_hopf(H);
  std::string all;
  for (const auto& m : bad) all += m + "; ";
  INFO(all);
  CHECK(bad.empty());
}

Vec sparse_vec(int n, std::vector<std::pair<int, Scalar>> entries) {
  Vec v(n);
  for (auto& [i, s] : entries) v.at(i) = s;
  return v;
}

bool contains_vec(const std::vector<GroupLike>& gs, const Vec& v) {
  for (const auto& g : gs)
    if (g.coords == v) return true;
  return false;
}

bool contains_vals(const std::vector<Character>& cs, const Vec& v) {
  for (const auto& c : cs)
    if (c.values == v) return true;
  return false;
}

Matrix mpow(const FieldSpec& F, const Matrix& M, int k) {
  Matrix r = exact::identity(M.rows);
  for (int t = 0; t < k; ++t) r = exact::m_mul(F, r, M);
  return r;
}

// Symmetries of a regular hexagon (order 12), by closure over a rotation
// and a reflection acting on the vertices.
std::vector<std::vector<int>> dihedral12_table() {
  using P6 = std::array<int, 6>;
  auto compose = [](const P6& f, const P6& g) {
    P6 c{};
    for (int x = 0; x < 6; ++x) c[x] = f[g[x]];
    return c;
  };
  const P6 rot{1, 2, 3, 4, 5, 0}, ref{0, 5, 4, 3, 2, 1};
  std::vector<P6> els{{0, 1, 2, 3, 4, 5}};
  for (size_t head = 0; head < els.size(); ++head)
    for (const P6& gen : {rot, ref}) {
      P6 cand = compose(gen, els[head]);
      if (std::find(els.begin(), els.end(), cand) == els.end())
        els.push_back(cand);
    }
  REQUIRE(els.size() == 12);
  std::vector<std::vector<int>> t(12, std::vector<int>(12));
  for (size_t i = 0; i < els.size(); ++i)
    for (size_t j = 0; j < els.size(); ++j)
      t[i][j] = static_cast<int>(
          std::find(els.begin(), els.end(), compose(els[i], els[j])) -
          els.begin());
  return t;
}

}  // namespace

TEST_CASE("group algebra construction validates the multiplication table") {
  FieldSpec F = exact::make_field(1);
  // no inverse for the second element
  CHECK_THROWS_AS(group_algebra({{0, 1}, {1, 1}}, F), kitaev::error);
  // (1*1)*2 = 2 but 1*(1*2) = 0: not associative
  CHECK_THROWS_AS(group_algebra({{0, 1, 2}, {1, 0, 1}, {2, 2, 0}}, F),
                  kitaev::error);
  // entry out of range
  CHECK_THROWS_AS(group_algebra({{0, 5}, {1, 0}}, F), kitaev::error);
  // no identity
  CHECK_THROWS_AS(group_algebra({{1, 1}, {1, 1}}, F), kitaev::error);
  // label count mismatch
  CHECK_THROWS_AS(group_algebra({{0, 1}, {1, 0}}, F, {"1"}), kitaev::error);
  CHECK_THROWS_AS(cyclic_group_algebra(0), kitaev::error);
}

TEST_CASE("group algebras satisfy every Hopf axiom") {
  for (long m : {1, 2, 3, 4, 6, 12}) {
    HopfAlgebra H = cyclic_group_algebra(m);
    expect_hopf(H);
    // group algebras have involutive antipode
    CHECK(mpow(H.field, H.antipode, 2) == exact::identity(H.dim));
  }
  HopfAlgebra s3 = s3_group_algebra();
  expect_hopf(s3);
  CHECK(s3.mul[1][2] != s3.mul[2][1]);  // transpositions do not commute
  HopfAlgebra d6 = group_algebra(dihedral12_table(), exact::make_field(1));
  expect_hopf(d6);
}

TEST_CASE("Taft algebras realise their defining relations") {
  CHECK_THROWS_AS(taft_algebra(1), kitaev::error);
  CHECK_THROWS_AS(taft_algebra(0), kitaev::error);
  for (long N : {2, 3, 4}) expect_hopf(taft_algebra(N));

  HopfAlgebra A = sweedler_algebra();  // basis 1, h, y, yh
  CHECK(A.dim == 4);
  CHECK(A.basis == std::vector<std::string>{"1", "h", "y", "yh"});
  CHECK(A.mul[1][1] == A.unit);                                   // h^2 = 1
  CHECK(vec_is_zero(A.mul[2][2]));                                // y^2 = 0
  CHECK(A.mul[1][2] == sparse_vec(4, {{3, exact::s_int(-1)}}));   // h y = -y h
  CHECK(A.mul[2][1] == sparse_vec(4, {{3, exact::s_one()}}));
  Matrix dy(4, 4);  // Delta(y) = 1 (x) y + y (x) h
  dy.at(0, 2) = exact::s_one();
  dy.at(2, 1) = exact::s_one();
  CHECK(A.comul[2] == dy);
  CHECK(A.counit == sparse_vec(4, {{0, exact::s_one()}, {1, exact::s_one()}}));
  // S(h) = h, S(y) = -y h, S(yh) = y
  Vec sh(4), sy(4), syh(4);
  for (int t = 0; t < 4; ++t) {
    sh[t] = A.antipode.at(t, 1);
    sy[t] = A.antipode.at(t, 2);
    syh[t] = A.antipode.at(t, 3);
  }
  CHECK(sh == basis_vec(4, 1));
  CHECK(sy == sparse_vec(4, {{3, exact::s_int(-1)}}));
  CHECK(syh == basis_vec(4, 2));
  // S^2 = diag(1, 1, -1, -1)
  Matrix s2 = mpow(A.field, A.antipode, 2);
  Matrix diag(4, 4);
  diag.at(0, 0) = diag.at(1, 1) = exact::s_one();
  diag.at(2, 2) = diag.at(3, 3) = exact::s_int(-1);
  CHECK(s2 == diag);

  HopfAlgebra T3 = taft_algebra(3);
  CHECK(T3.basis == std::vector<std::string>{"1", "h", "h^2", "y", "yh",
                                             "yh^2", "y^2", "y^2h", "y^2h^2"});
  // S^2(y) = q y
  Vec s2y = exact::apply(T3.field, mpow(T3.field, T3.antipode, 2),
                         basis_vec(9, 3));
  CHECK(s2y == sparse_vec(9, {{3, exact::s_zeta(T3.field)}}));
}

TEST_CASE("the Taft antipode has multiplicative order 2N") {
  HopfAlgebra T3 = taft_algebra(3);
  const FieldSpec& F3 = T3.field;
  CHECK(mpow(F3, T3.antipode, 2) != exact::identity(9));
  CHECK(mpow(F3, T3.antipode, 4) != exact::identity(9));
  CHECK(mpow(F3, T3.antipode, 6) == exact::identity(9));

  HopfAlgebra T4 = taft_algebra(4);
  CHECK(mpow(T4.field, T4.antipode, 4) != exact::identity(16));
  CHECK(mpow(T4.field, T4.antipode, 8) == exact::identity(16));

  HopfAlgebra A = sweedler_algebra();
  CHECK(mpow(A.field, A.antipode, 2) != exact::identity(4));
  CHECK(mpow(A.field, A.antipode, 4) == exact::identity(4));
}

TEST_CASE("duals are Hopf algebras and double duals restore the constants") {
  std::vector<HopfAlgebra> hs;
  hs.push_back(cyclic_group_algebra(2));
  hs.push_back(cyclic_group_algebra(4));
  hs.push_back(s3_group_algebra());
  hs.push_back(sweedler_algebra());
  hs.push_back(taft_algebra(3));
  for (const HopfAlgebra& H : hs) {
    HopfAlgebra D = dual(H);
    expect_hopf(D);
    CHECK(same_structure(dual(D), H));
  }
  expect_hopf(dual(taft_algebra(4)));

  // functions on S3: commutative but not cocommutative
  HopfAlgebra ds3 = dual(s3_group_algebra());
  bool comm = true, cocomm = true;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) comm = comm && ds3.mul[i][j] == ds3.mul[j][i];
  for (int i = 0; i < 6; ++i)
    cocomm = cocomm && ds3.comul[i] == exact::transpose(ds3.comul[i]);
  CHECK(comm);
  CHECK_FALSE(cocomm);

  // the dual of kZ2 is again a commutative cocommutative two-dimensional
  // Hopf algebra with two group-likes (kZ2 is self-dual)
  HopfAlgebra dz2 = dual(cyclic_group_algebra(2));
  expect_hopf(dz2);
  CHECK(dz2.mul[0][1] == dz2.mul[1][0]);
  CHECK(dz2.comul[0] == exact::transpose(dz2.comul[0]));
  CHECK(dz2.comul[1] == exact::transpose(dz2.comul[1]));
  CHECK(group_likes(dz2).size() == 2);

  HopfAlgebra dsw = dual(sweedler_algebra());
  expect_hopf(dsw);
  CHECK(group_likes(dsw).size() == 2);
}

TEST_CASE("group-like and character enumeration matches the known lists") {
  // cyclic groups: the group elements, and the power characters
  HopfAlgebra z2 = cyclic_group_algebra(2);
  auto gl2 = group_likes(z2);
  REQUIRE(gl2.size() == 2);
  CHECK(contains_vec(gl2, basis_vec(2, 0)));
  CHECK(contains_vec(gl2, basis_vec(2, 1)));
  auto ch2 = characters(z2);
  REQUIRE(ch2.size() == 2);
  CHECK(contains_vals(ch2, sparse_vec(2, {{0, exact::s_one()}, {1, exact::s_one()}})));
  CHECK(contains_vals(ch2, sparse_vec(2, {{0, exact::s_one()}, {1, exact::s_int(-1)}})));

  HopfAlgebra z4 = cyclic_group_algebra(4);
  auto gl4 = group_likes(z4);
  REQUIRE(gl4.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(contains_vec(gl4, basis_vec(4, i)));
  auto ch4 = characters(z4);
  REQUIRE(ch4.size() == 4);
  for (int j = 0; j < 4; ++j) {
    Vec chi(4);
    for (int k = 0; k < 4; ++k) chi[k] = exact::s_zeta(z4.field, j * k);
    CHECK(contains_vals(ch4, chi));
  }

  // S3: six group-likes, but only the trivial and sign characters
  HopfAlgebra s3 = s3_group_algebra();
  CHECK(group_likes(s3).size() == 6);
  auto chs = characters(s3);
  REQUIRE(chs.size() == 2);
  Vec triv(6), sgn(6);
  for (int i = 0; i < 6; ++i) triv[i] = exact::s_one();
  sgn[0] = sgn[3] = sgn[4] = exact::s_one();
  sgn[1] = sgn[2] = sgn[5] = exact::s_int(-1);
  CHECK(contains_vals(chs, triv));
  CHECK(contains_vals(chs, sgn));

  // Sweedler: group-likes {1, h}; characters {eps, alpha} with
  // alpha(h) = -1 and alpha(y) = 0
  HopfAlgebra sw = sweedler_algebra();
  auto glsw = group_likes(sw);
  REQUIRE(glsw.size() == 2);
  CHECK(contains_vec(glsw, basis_vec(4, 0)));
  CHECK(contains_vec(glsw, basis_vec(4, 1)));
  auto chsw = characters(sw);
  REQUIRE(chsw.size() == 2);
  CHECK(contains_vals(chsw, sparse_vec(4, {{0, exact::s_one()}, {1, exact::s_one()}})));
  CHECK(contains_vals(chsw, sparse_vec(4, {{0, exact::s_one()}, {1, exact::s_int(-1)}})));

  // Taft N = 3: group-likes {1, h, h^2}; characters chi_j(y^i h^k) =
  // [i = 0] zeta^{jk}
  HopfAlgebra t3 = taft_algebra(3);
  auto glt = group_likes(t3);
  REQUIRE(glt.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(contains_vec(glt, basis_vec(9, k)));
  auto cht = characters(t3);
  REQUIRE(cht.size() == 3);
  for (int j = 0; j < 3; ++j) {
    Vec chi(9);
    for (int k = 0; k < 3; ++k) chi[k] = exact::s_zeta(t3.field, j * k);
    CHECK(contains_vals(cht, chi));
  }

  // the unit is group-like in every example
  for (const HopfAlgebra& H : {z2, z4, s3, sw, t3})
    CHECK(contains_vec(group_likes(H), H.unit));
}

TEST_CASE("characters invert under convolution") {
  for (const HopfAlgebra& H : {cyclic_group_algebra(4), s3_group_algebra(),
                               sweedler_algebra(), taft_algebra(3)}) {
    Character eps{H.counit};
    for (const Character& chi : characters(H)) {
      Character inv = convolution_inverse(H, chi);
      CHECK(convolve(H, inv, chi).values == eps.values);
      CHECK(convolve(H, chi, inv).values == eps.values);
    }
  }
}

TEST_CASE("left integrals and distinguished elements of group algebras") {
  for (const HopfAlgebra& H :
       {cyclic_group_algebra(1), cyclic_group_algebra(2),
        cyclic_group_algebra(4), s3_group_algebra(),
        group_algebra(dihedral12_table(), exact::make_field(1))}) {
    auto ints = left_integrals(H);
    REQUIRE(ints.size() == 1);
    Vec ones(H.dim);
    for (auto& s : ones) s = exact::s_one();
    CHECK(ints.front() == ones);  // the sum of the group elements
    Distinguished d = distinguished(H);
    CHECK(d.alpha.values == H.counit);  // unimodular
    CHECK(d.a.coords == H.unit);
    CHECK(is_semisimple(H));
  }
}

TEST_CASE("left integrals and distinguished elements of Taft algebras") {
  // Sweedler: L = y - yh, alpha(h) = -1, a = h
  HopfAlgebra sw = sweedler_algebra();
  auto ints = left_integrals(sw);
  REQUIRE(ints.size() == 1);
  CHECK(ints.front() ==
        sparse_vec(4, {{2, exact::s_one()}, {3, exact::s_int(-1)}}));
  Distinguished d = distinguished(sw);
  CHECK(d.alpha.values ==
        sparse_vec(4, {{0, exact::s_one()}, {1, exact::s_int(-1)}}));
  CHECK(d.a.coords == basis_vec(4, 1));
  CHECK_FALSE(is_semisimple(sw));

  // Taft N = 3: L = y^2 (1 + q^2 h + q h^2), alpha(h) = q, a = h^2
  HopfAlgebra t3 = taft_algebra(3);
  const FieldSpec& F = t3.field;
  auto i3 = left_integrals(t3);
  REQUIRE(i3.size() == 1);
  CHECK(i3.front() == sparse_vec(9, {{6, exact::s_one()},
                                     {7, exact::s_zeta(F, 2)},
                                     {8, exact::s_zeta(F, 1)}}));
  Distinguished d3 = distinguished(t3);
  Vec alpha3(9);
  for (int k = 0; k < 3; ++k) alpha3[k] = exact::s_zeta(F, k);
  CHECK(d3.alpha.values == alpha3);
  CHECK(d3.a.coords == basis_vec(9, 2));
  CHECK_FALSE(is_semisimple(t3));
  CHECK_FALSE(is_semisimple(taft_algebra(4)));
  CHECK_FALSE(is_semisimple(dual(sw)));
  CHECK(is_semisimple(dual(s3_group_algebra())));
}

TEST_CASE("square roots in cyclotomic fields") {
  FieldSpec Q = exact::make_field(1);
  CHECK(sqrt_in_field(Q, exact::s_int(0)) == exact::s_zero());
  CHECK(sqrt_in_field(Q, exact::s_one()) == exact::s_one());
  CHECK(sqrt_in_field(Q, exact::s_int(4)) == exact::s_int(2));
  CHECK(sqrt_in_field(Q, exact::s_rat(exact::rat(9, 4))) ==
        exact::s_rat(exact::rat(3, 2)));
  CHECK_FALSE(sqrt_in_field(Q, exact::s_int(2)).has_value());
  CHECK_FALSE(sqrt_in_field(Q, exact::s_int(-1)).has_value());

  FieldSpec F4 = exact::make_field(4);
  CHECK(sqrt_in_field(F4, exact::s_int(-1)) == exact::s_zeta(F4));
  CHECK_FALSE(sqrt_in_field(F4, exact::s_zeta(F4)).has_value());

  FieldSpec F3 = exact::make_field(3);
  auto r = sqrt_in_field(F3, exact::s_zeta(F3));
  REQUIRE(r.has_value());
  CHECK(*r == exact::s_zeta(F3, 2));
}

TEST_CASE("pairs in involution for group algebras need a central element") {
  // kZ2: all four pairs; (g, sgn) has chi(p) = -1, with no square root in Q
  std::vector<std::string> notes;
  auto pz2 = pairs_in_involution(cyclic_group_algebra(2), &notes);
  REQUIRE(pz2.size() == 4);
  int modular = 0, rootless = 0;
  for (const auto& P : pz2) {
    if (P.modular) {
      ++modular;
      CHECK(*P.zeta == exact::s_one());
    }
    if (!P.zeta) ++rootless;
  }
  CHECK(modular == 3);
  CHECK(rootless == 1);
  CHECK(notes.size() == 1);

  // kZ4 over Q(zeta_4): all sixteen pairs; zeta exists unless chi(p) = +-i
  HopfAlgebra z4 = cyclic_group_algebra(4);
  auto pz4 = pairs_in_involution(z4);
  REQUIRE(pz4.size() == 16);
  modular = rootless = 0;
  for (const auto& P : pz4) {
    if (P.modular) ++modular;
    if (!P.zeta) ++rootless;
    if (P.zeta) {
      Scalar cp = eval_character(z4.field, P.chi, P.p.coords);
      CHECK(exact::mul(z4.field, *P.zeta, *P.zeta) == cp);
    }
  }
  CHECK(modular == 8);
  CHECK(rootless == 4);

  // kS3: only the centre contributes, with both characters
  HopfAlgebra s3 = s3_group_algebra();
  auto ps3 = pairs_in_involution(s3);
  REQUIRE(ps3.size() == 2);
  for (const auto& P : ps3) {
    CHECK(P.p.coords == s3.unit);
    CHECK(P.modular);
  }

  // order-12 dihedral group: centre {1, r^3}, four characters fixed by
  // their signs on the rotation and the reflection.  chi(r^3) = chi(r), so
  // the two characters with chi(r) = -1 make (r^3, chi) non-modular, and
  // -1 has no rational square root.
  HopfAlgebra d6 = group_algebra(dihedral12_table(), exact::make_field(1));
  std::vector<std::string> dnotes;
  auto pd6 = pairs_in_involution(d6, &dnotes);
  REQUIRE(pd6.size() == 8);
  modular = rootless = 0;
  int at_unit = 0;
  for (const auto& P : pd6) {
    for (int i = 0; i < d6.dim; ++i)  // p is central
      CHECK(mul_elem(d6, P.p.coords, basis_vec(12, i)) ==
            mul_elem(d6, basis_vec(12, i), P.p.coords));
    if (P.modular) ++modular;
    if (!P.zeta) ++rootless;
    if (P.p.coords == d6.unit) {
      ++at_unit;
      CHECK(P.modular);
    }
  }
  CHECK(modular == 6);
  CHECK(rootless == 2);
  CHECK(at_unit == 4);
  CHECK(dnotes.size() == 2);
}

TEST_CASE("pairs in involution for Taft algebras") {
  // Sweedler: exactly (h, eps) and (1, alpha), both modular
  HopfAlgebra sw = sweedler_algebra();
  auto psw = pairs_in_involution(sw);
  REQUIRE(psw.size() == 2);
  Vec eps = sparse_vec(4, {{0, exact::s_one()}, {1, exact::s_one()}});
  Vec alpha = sparse_vec(4, {{0, exact::s_one()}, {1, exact::s_int(-1)}});
  bool saw_h_eps = false, saw_1_alpha = false;
  for (const auto& P : psw) {
    CHECK(P.modular);
    CHECK(*P.zeta == exact::s_one());
    if (P.p.coords == basis_vec(4, 1) && P.chi.values == eps) saw_h_eps = true;
    if (P.p.coords == basis_vec(4, 0) && P.chi.values == alpha)
      saw_1_alpha = true;
  }
  CHECK(saw_h_eps);
  CHECK(saw_1_alpha);

  // Taft N = 3: (h^k, chi_j) with j + k = 1 (mod 3); only (h^2, chi_2) is
  // non-modular, with zeta = zeta_3^2
  HopfAlgebra t3 = taft_algebra(3);
  const FieldSpec& F = t3.field;
  auto pt3 = pairs_in_involution(t3);
  REQUIRE(pt3.size() == 3);
  auto chi_of = [&](const Character& chi) {  // j with chi(h) = zeta^j
    for (int j = 0; j < 3; ++j)
      if (chi.values[1] == exact::s_zeta(F, j)) return j;
    return -1;
  };
  auto p_of = [&](const GroupLike& g) {  // k with p = h^k
    for (int k = 0; k < 3; ++k)
      if (g.coords == basis_vec(9, k)) return k;
    return -1;
  };
  for (const auto& P : pt3) {
    int j = chi_of(P.chi), k = p_of(P.p);
    REQUIRE(j >= 0);
    REQUIRE(k >= 0);
    CHECK((j + k) % 3 == 1);
    if (j * k % 3 == 0) {
      CHECK(P.modular);
    } else {
      CHECK_FALSE(P.modular);
      REQUIRE(P.zeta.has_value());
      CHECK(*P.zeta == exact::s_zeta(F, 2));
      CHECK(exact::mul(F, *P.zeta, *P.zeta) ==
            eval_character(F, P.chi, P.p.coords));
    }
  }
}

TEST_CASE("conjugation maps of pairs are Hopf automorphisms") {
  for (const HopfAlgebra& H :
       {cyclic_group_algebra(2), cyclic_group_algebra(4), s3_group_algebra(),
        sweedler_algebra(), taft_algebra(3)}) {
    auto ps = pairs_in_involution(H);
    CHECK(!ps.empty());
    for (const auto& P : ps)
      CHECK(ad_is_hopf_automorphism(H, P.p.coords, P.chi));
  }
}

TEST_CASE("the fourth antipode power is the distinguished conjugation") {
  CHECK(check_s4(cyclic_group_algebra(1)));
  CHECK(check_s4(cyclic_group_algebra(2)));
  CHECK(check_s4(cyclic_group_algebra(4)));
  CHECK(check_s4(s3_group_algebra()));
  CHECK(check_s4(group_algebra(dihedral12_table(), exact::make_field(1))));
  CHECK(check_s4(sweedler_algebra()));
  CHECK(check_s4(taft_algebra(3)));
  CHECK(check_s4(taft_algebra(4)));
  CHECK(check_s4(dual(sweedler_algebra())));
  CHECK(check_s4(dual(taft_algebra(3))));
  CHECK(check_s4(dual(s3_group_algebra())));
}

TEST_CASE("Hopf JSON round-trips preserve the structure constants") {
  for (const HopfAlgebra& H :
       {sweedler_algebra(), taft_algebra(3), s3_group_algebra(),
        cyclic_group_algebra(4), dual(sweedler_algebra())}) {
    nlohmann::json j = hopf_to_json(H);
    HopfAlgebra back = hopf_from_json(j);
    CHECK(same_structure(H, back));
    CHECK(back.basis == H.basis);
    expect_hopf(back);
  }
}

TEST_CASE("Hopf JSON loading rejects malformed documents") {
  nlohmann::json j = hopf_to_json(sweedler_algebra());
  nlohmann::json missing = j;
  missing.erase("mul");
  CHECK_THROWS_AS(hopf_from_json(missing), kitaev::error);

  nlohmann::json bad_index = j;
  bad_index["comul"][0][1] = 99;
  CHECK_THROWS_AS(hopf_from_json(bad_index), kitaev::error);

  nlohmann::json bad_scalar = j;
  bad_scalar["counit"][0] = "1/+";
  CHECK_THROWS_AS(hopf_from_json(bad_scalar), kitaev::error);

  // one-dimensional data with no unit
  nlohmann::json no_unit = {
      {"dim", 1},           {"cyclotomic_order", 1},
      {"basis", {"x"}},     {"mul", nlohmann::json::array()},
      {"comul", {{0, 0, 0, "1"}}}, {"counit", {"1"}},
      {"antipode", {{"1"}}}};
  CHECK_THROWS_AS(hopf_from_json(no_unit), kitaev::error);

  // valid algebra data but singular antipode matrix
  nlohmann::json singular = {
      {"dim", 1},           {"cyclotomic_order", 1},
      {"basis", {"x"}},     {"mul", {{0, 0, 0, "1"}}},
      {"comul", {{0, 0, 0, "1"}}}, {"counit", {"1"}},
      {"antipode", {{"0"}}}};
  CHECK_THROWS_AS(hopf_from_json(singular), kitaev::error);
}

TEST_CASE("builtin Hopf algebra names resolve") {
  CHECK(same_structure(builtin_hopf("sweedler"), sweedler_algebra()));
  CHECK(same_structure(builtin_hopf("taft:3"), taft_algebra(3)));
  CHECK(same_structure(builtin_hopf("group:Z4"), cyclic_group_algebra(4)));
  CHECK(same_structure(builtin_hopf("group:S3"), s3_group_algebra()));
  CHECK(builtin_hopf("group:Z1").dim == 1);
  CHECK_THROWS_AS(builtin_hopf("nope"), kitaev::error);
  CHECK_THROWS_AS(builtin_hopf("taft:"), kitaev::error);
  CHECK_THROWS_AS(builtin_hopf("taft:x"), kitaev::error);
  CHECK_THROWS_AS(builtin_hopf("group:Z"), kitaev::error);
  CHECK_THROWS_AS(builtin_hopf("group:K4"), kitaev::error);
  CHECK_THROWS_AS(builtin_hopf("taft:1"), kitaev::error);
}
