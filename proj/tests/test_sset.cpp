#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "simpeff/sset.hpp"

using namespace simpeff;

namespace {

LabelledNerve q8_nerve(int K) { return comm_nerve(FiniteGroup::quaternion(), std::nullopt, K); }

}  // namespace

TEST_CASE("standard simplices and simplicial identities") {
  auto d2 = standard_simplex(2, 3);
  CHECK(validate(d2).ok());
  // monotone maps [n] -> [2]: C(n+3, 2)
  CHECK(d2.counts() == std::vector<int>{3, 6, 10, 15});

  std::vector<std::vector<TruncatedSSet::Table>> fs(4), ds(3);
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) fs[static_cast<std::size_t>(n)].push_back(d2.face_table(n, i));
  for (int n = 0; n < 3; ++n)
    for (int i = 0; i <= n; ++i) ds[static_cast<std::size_t>(n)].push_back(d2.degeneracy_table(n, i));
  // swap d0 and d1 on the first nondegenerate edge
  std::size_t e = 0;
  while (fs[1][0][e] == fs[1][1][e]) ++e;
  std::swap(fs[1][0][e], fs[1][1][e]);
  TruncatedSSet corrupt(3, d2.counts(), fs, ds);
  auto r = validate(corrupt);
  REQUIRE_FALSE(r.ok());
  CHECK_FALSE(r.failures.front().witness.empty());

  CHECK(validate(q8_nerve(4).sset).ok());
  CHECK(validate(comm_nerve(FiniteGroup::quaternion(), 2, 4).sset).ok());
  CHECK(validate(boundary_of_simplex3(3)).ok());
  CHECK(validate(glued_triangulations_w3(3)).ok());
  CHECK(validate(doubled_triangle(3)).ok());
  CHECK(validate(point_sset(4)).ok());
}

TEST_CASE("constructor rejects malformed tables") {
  CHECK_THROWS_AS(TruncatedSSet(1, {1, 1}, {{}, {{0}}}, {{{0}}}), InputError);
  CHECK_THROWS_AS(TruncatedSSet(1, {1, 1}, {{}, {{0}, {3}}}, {{{0}}}), InputError);
}

TEST_CASE("truncate and restrict") {
  auto x = q8_nerve(4).sset;
  auto t = x.truncate(2);
  CHECK(t.truncation() == 2);
  CHECK(t.count(2) == x.count(2));
  auto d3 = standard_simplex(3, 3);
  // the top simplex restricted to {1,3} is the edge 13
  SimplexId top = d3.count(3) - 1;
  auto e = d3.restrict_to(3, top, {1, 3});
  CHECK(d3.vertex(1, e, 0) == 1);
  CHECK(d3.vertex(1, e, 1) == 3);
}

TEST_CASE("spiny and reduced") {
  CHECK(is_spiny(q8_nerve(4).sset));
  CHECK(is_spiny(comm_nerve(FiniteGroup::cyclic(2), std::nullopt, 4).sset));
  auto doubled = is_spiny(doubled_triangle(3));
  CHECK_FALSE(doubled.holds);
  CHECK(doubled.witness_level == 2);
  CHECK(doubled.witness.size() == 2);

  CHECK(is_reduced(standard_simplex(0, 3)));
  CHECK_FALSE(is_reduced(standard_simplex(1, 3)));
  CHECK(is_reduced(q8_nerve(3).sset));
}

TEST_CASE("triangulations") {
  auto t2 = triangulations(2);
  REQUIRE(t2.size() == 1);
  CHECK(t2[0].triangles == std::vector<std::array<int, 3>>{{0, 1, 2}});
  auto t3 = triangulations(3);
  REQUIRE(t3.size() == 2);
  std::vector<std::vector<std::array<int, 3>>> got{t3[0].triangles, t3[1].triangles};
  CHECK(std::find(got.begin(), got.end(), std::vector<std::array<int, 3>>{{0, 1, 2}, {0, 2, 3}}) != got.end());
  CHECK(std::find(got.begin(), got.end(), std::vector<std::array<int, 3>>{{0, 1, 3}, {1, 2, 3}}) != got.end());
  CHECK(triangulations(4).size() == 5);
  CHECK(triangulations(5).size() == 14);
  for (const auto& t : triangulations(5)) CHECK(t.triangles.size() == 4);
  CHECK_THROWS_AS(triangulations(1), InputError);
}

TEST_CASE("membrane sets") {
  auto z2 = comm_nerve(FiniteGroup::cyclic(2), std::nullopt, 3).sset;
  CHECK(membrane_set(z2, SimplicialSubset::spine(2)).size() == 4);
  auto q8 = q8_nerve(3);
  CHECK(membrane_set(q8.sset, SimplicialSubset::spine(3)).size() == 512);

  // every spine (j, i, i) membrane on {013, 123}
  SimplicialSubset right = SimplicialSubset::of({3, {{0, 1, 3}, {1, 2, 3}}});
  auto census = membrane_census(q8.sset, right);
  const std::vector<SimplexId> jii{fixtures::kJ, fixtures::kI, fixtures::kI};
  bool unfilled = false;
  for (const auto& m : census.unfilled)
    if (m.spine(q8.sset) == jii) unfilled = true;
  CHECK(unfilled);
  // the unfilled spines are exactly the brute-force ones
  auto expect = oracle::unfilled_right_membranes(FiniteGroup::quaternion().table());
  CHECK(census.unfilled.size() == expect.size());
  for (const auto& m : census.unfilled) {
    auto sp = m.spine(q8.sset);
    CHECK(std::find(expect.begin(), expect.end(), std::array<int, 3>{sp[0], sp[1], sp[2]}) != expect.end());
  }

  // boundaries of Delta^3: one per monotone map [3] -> [3], C(7, 4) of them
  auto d3 = standard_simplex(3, 3);
  int monotone = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b)
      for (int c = b; c < 4; ++c)
        for (int d = c; d < 4; ++d) ++monotone;
  CHECK(monotone == 35);
  CHECK(membrane_set(d3, SimplicialSubset::boundary(3)).size() == static_cast<std::size_t>(monotone));
  CHECK(membrane_census(d3, SimplicialSubset::boundary(3)).unfilled.empty());

  CHECK_THROWS_AS(membrane_set(z2, SimplicialSubset::spine(5)), InputError);
}

TEST_CASE("2-Segal") {
  CHECK(is_two_segal(comm_nerve(FiniteGroup::cyclic(4), std::nullopt, 4).sset));
  auto l2 = chain_effect_algebra(2);
  CHECK(is_two_segal(nerve(l2.magma, max_associativity_datum(l2.magma, 4), 4)));

  auto q8 = is_two_segal(q8_nerve(3).sset);
  REQUIRE_FALSE(q8.holds);
  CHECK(q8.witness_level == 3);
  REQUIRE(q8.witness.size() == 3);
  const auto q8g = FiniteGroup::quaternion();
  const auto& t = q8g.table();
  auto left = oracle::unfilled_left_membranes(t), right = oracle::unfilled_right_membranes(t);
  std::array<int, 3> w{q8.witness[0], q8.witness[1], q8.witness[2]};
  CHECK((std::find(left.begin(), left.end(), w) != left.end() || std::find(right.begin(), right.end(), w) != right.end()));
  // (j, i, i) belongs to the family
  CHECK(std::find(right.begin(), right.end(), std::array<int, 3>{fixtures::kJ, fixtures::kI, fixtures::kI}) != right.end());
}

TEST_CASE("weak 2-Segal") {
  CHECK(is_weakly_two_segal(q8_nerve(4).sset));
  auto ly = is_weakly_two_segal(fixtures::lY_z4(3).sset);
  REQUIRE_FALSE(ly.holds);
  CHECK(ly.witness_level == 3);
  CHECK(ly.witness == std::vector<int>{1, 1, 1});

  auto w3 = is_weakly_two_segal(glued_triangulations_w3(3));
  CHECK_FALSE(w3.holds);
  CHECK(w3.witness_level == 3);
}

TEST_CASE("2-coskeletal") {
  CHECK(is_coskeletal_2(q8_nerve(4).sset));
  CHECK_FALSE(is_coskeletal_2(boundary_of_simplex3(3)));
  CHECK(is_coskeletal_2(standard_simplex(3, 4)));
}

TEST_CASE("spiny and weakly 2-Segal imply 2-coskeletal") {
  std::vector<TruncatedSSet> xs{q8_nerve(4).sset, comm_nerve(FiniteGroup::dihedral4(), std::nullopt, 4).sset,
                                comm_nerve(FiniteGroup::symmetric3(), std::nullopt, 4).sset, point_sset(4)};
  for (int n = 2; n <= 4; ++n) {
    auto e = chain_effect_algebra(n);
    xs.push_back(nerve(e.magma, max_associativity_datum(e.magma, 4), 4));
  }
  for (const auto& x : xs) {
    if (is_two_segal(x)) CHECK(is_weakly_two_segal(x));
    if (is_spiny(x) && is_weakly_two_segal(x)) CHECK(is_coskeletal_2(x));
  }
}

TEST_CASE("coskeleton extension") {
  for (const auto& x : {comm_nerve(FiniteGroup::cyclic(2), std::nullopt, 4).sset, q8_nerve(4).sset, point_sset(4)}) {
    auto ext = cosk2_extend(x.truncate(2), 4);
    CHECK(ext.counts() == x.counts());
    CHECK(ext == x);
    CHECK(is_coskeletal_2(ext));
  }
  CHECK_THROWS_AS(cosk2_extend(point_sset(1), 3), InputError);
}

TEST_CASE("inverseless") {
  auto l2 = chain_effect_algebra(2);
  CHECK(is_inverseless_sset(nerve(l2.magma, max_associativity_datum(l2.magma, 2), 2)));
  CHECK(is_inverseless_sset(point_sset(2)));
  auto z2 = is_inverseless_sset(comm_nerve(FiniteGroup::cyclic(2), std::nullopt, 2).sset);
  REQUIRE_FALSE(z2.holds);
  CHECK(z2.witness == std::vector<int>{1, 1});
}

TEST_CASE("isomorphism search") {
  auto x = q8_nerve(3).sset;
  auto f = find_isomorphism(x, x);
  REQUIRE(f.has_value());
  CHECK(is_simplicial_map(x, x, *f));
  CHECK(is_bijective(x, x, *f));
  // same commuting graph, but g^2 = 1 has 2 solutions in Q8 and 6 in D4
  CHECK_FALSE(find_isomorphism(q8_nerve(2).sset, comm_nerve(FiniteGroup::dihedral4(), std::nullopt, 2).sset).has_value());
  CHECK_FALSE(find_isomorphism(point_sset(3), standard_simplex(1, 3)).has_value());
}
