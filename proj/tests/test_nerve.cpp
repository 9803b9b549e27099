#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "simpeff/nerve.hpp"

using namespace simpeff;

TEST_CASE("finite groups") {
  auto q8 = FiniteGroup::quaternion();
  // the table agrees with 2x2 complex matrices
  CHECK(q8.table() == oracle::table_from_matrices(oracle::q8_matrices()));
  CHECK(q8.is_central(fixtures::kMinusOne));
  CHECK_FALSE(q8.is_central(fixtures::kI));
  CHECK(q8.inv(fixtures::kI) == fixtures::kMinusI);
  CHECK(q8.pow(fixtures::kI, 4) == 0);
  CHECK_FALSE(q8.is_abelian());

  auto d4 = FiniteGroup::dihedral4();
  CHECK(d4.order() == 8);
  CHECK(d4.pow(1, 4) == 0);  // r
  CHECK(d4.mul(4, 4) == 0);  // s
  CHECK(d4.mul(4, 1) == d4.mul(3, 4));  // s r = r^3 s

  auto s3 = FiniteGroup::symmetric3();
  CHECK(s3.order() == 6);
  CHECK(s3.unit() == 0);
  CHECK_FALSE(s3.is_abelian());
  CHECK(FiniteGroup::cyclic(5).is_abelian());

  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), ValidationError);
}

TEST_CASE("nerve of a magma") {
  auto one = fixtures::one_element();
  auto p = nerve(one, max_associativity_datum(one, 3), 3);
  CHECK(p.counts() == std::vector<int>{1, 1, 1, 1});

  auto l2 = chain_effect_algebra(2);
  auto x = labelled_nerve(l2.magma, max_associativity_datum(l2.magma, 3), 3);
  CHECK(x.sset.count(2) == 6);
  CHECK(static_cast<std::size_t>(x.sset.count(2)) == oracle::chain_nerve_count(2, 2));
  for (const auto& t : x.tuples[2]) CHECK(t[0] + t[1] <= 2);
  CHECK(validate(x.sset).ok());
  CHECK(is_spiny(x.sset));
  CHECK(is_reduced(x.sset));
  // inner face multiplies, outer faces drop, degeneracy inserts the unit
  auto s = x.id_of({1, 1});
  CHECK(x.sset.face(2, 1, s) == 2);
  CHECK(x.sset.face(2, 0, s) == 1);
  CHECK(x.sset.degeneracy(1, 0, 1) == x.id_of({0, 1}));

  auto z2 = FiniteGroup::cyclic(2).total_magma();
  CHECK(nerve(z2, max_associativity_datum(z2, 3), 3).count(2) == 4);

  CHECK_THROWS_AS(nerve(l2.magma, max_associativity_datum(l2.magma, 2), 3), InputError);
}

TEST_CASE("magma_from_sset") {
  auto l2 = chain_effect_algebra(2);
  auto d = max_associativity_datum(l2.magma, 3);
  auto [m, a] = magma_from_sset(nerve(l2.magma, d, 3));
  CHECK(m == l2.magma);
  CHECK(a == d);

  auto q8 = FiniteGroup::quaternion();
  auto [qm, qa] = magma_from_sset(comm_nerve(q8, std::nullopt, 3).sset);
  for (int g = 0; g < 8; ++g)
    for (int h = 0; h < 8; ++h) {
      if (q8.commute(g, h))
        CHECK(qm.product(g, h) == q8.mul(g, h));
      else
        CHECK_FALSE(qm.defined(g, h));
    }

  auto [pm, pa] = magma_from_sset(point_sset(3));
  CHECK(pm.size() == 1);
  CHECK_THROWS_AS(magma_from_sset(standard_simplex(1, 3)), InputError);
  CHECK_THROWS_AS(magma_from_sset(doubled_triangle(3)), InputError);
}

TEST_CASE("commutative nerves") {
  auto q8 = FiniteGroup::quaternion();
  auto x = comm_nerve(q8, std::nullopt, 3);
  CHECK(x.sset.count(1) == 8);
  CHECK(x.sset.count(2) == 40);
  CHECK(static_cast<std::size_t>(x.sset.count(2)) == oracle::commuting_tuples(q8.table(), 2));
  CHECK(static_cast<std::size_t>(x.sset.count(3)) == oracle::commuting_tuples(q8.table(), 3));
  // level-1 ids are element ids
  for (int g = 0; g < 8; ++g) CHECK(x.id_of({g}) == g);

  auto t = comm_nerve(q8, 2, 2);
  CHECK(t.sset.count(1) == 2);
  CHECK(t.sset.count(2) == 4);

  auto z4 = FiniteGroup::cyclic(4);
  auto full = comm_nerve(z4, std::nullopt, 3);
  CHECK(full.sset == nerve(z4.total_magma(), max_associativity_datum(z4.total_magma(), 3), 3));

  for (const auto& g : {q8, FiniteGroup::dihedral4(), FiniteGroup::symmetric3()}) {
    auto n = comm_nerve(g, std::nullopt, 4).sset;
    CHECK(is_spiny(n));
    CHECK(is_reduced(n));
    CHECK(is_coskeletal_2(n));
    CHECK(is_weakly_two_segal(n));
  }
}

TEST_CASE("action partial groups") {
  auto ly = fixtures::lY_z4(3);
  for (const auto& t : {Tuple{1, 1}, Tuple{2, 1}, Tuple{1, 2}}) CHECK(ly.id_of(t) >= 0);
  CHECK(ly.id_of({1, 1, 1}) < 0);
  CHECK(validate(ly.sset).ok());
  CHECK(is_spiny(ly.sset));
  CHECK(is_reduced(ly.sset));
  CHECK_FALSE(is_weakly_two_segal(ly.sset));

  auto z4 = FiniteGroup::cyclic(4);
  std::vector<std::vector<int>> action(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int y = 0; y < 4; ++y) action[static_cast<std::size_t>(a)][static_cast<std::size_t>(y)] = (a + y) % 4;
  auto all = action_partial_group(z4, 4, action, {0, 1, 2, 3}, 3);
  CHECK(all.sset == comm_nerve(z4, std::nullopt, 3).sset);

  std::vector<std::vector<int>> trivial(4, std::vector<int>(1, 0));
  auto fixed = action_partial_group(z4, 1, trivial, {0}, 3);
  CHECK(fixed.sset.count(1) == 4);  // trivial action: every element keeps the chain at 0

  // a free action on a singleton Y: only the unit moves 0 to 0
  auto single = action_partial_group(z4, 4, action, {0}, 3);
  CHECK(single.sset.counts() == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("effect functor") {
  auto l2 = chain_effect_algebra(2);
  auto es1 = effect_functor(l2, simplicial_circle(3));
  CHECK(es1.sset.count(1) == 3);
  CHECK(es1.sset.count(2) == 6);
  for (int k = 0; k <= 3; ++k)
    CHECK(static_cast<std::size_t>(es1.sset.count(k)) == oracle::chain_circle_functions(2, k));
  CHECK(validate(es1.sset).ok());

  auto pt = effect_functor(l2, point_sset(3));
  CHECK(pt.sset.counts() == std::vector<int>{1, 1, 1, 1});
  CHECK(pt.functions[2][0] == std::vector<ElementId>{2});
}

TEST_CASE("simplicial circle") {
  auto s1 = simplicial_circle(4);
  CHECK(s1.counts() == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(s1.face(1, 0, 1) == 0);
  CHECK(s1.degeneracy(1, 0, 1) == 2);
  CHECK(validate(s1).ok());
  CHECK_THROWS_AS(simplicial_circle(0), InputError);
}

TEST_CASE("E(S^1) is isomorphic to N(E)") {
  for (const auto& e : {chain_effect_algebra(2), chain_effect_algebra(3), boolean_effect_algebra(2)}) {
    auto es1 = effect_functor(e, simplicial_circle(4));
    auto ne = labelled_nerve(e.magma, max_associativity_datum(e.magma, 4), 4);
    auto f = effect_circle_map(es1, ne);
    CHECK(is_simplicial_map(es1.sset, ne.sset, f));
    CHECK(is_bijective(es1.sset, ne.sset, f));
  }
}

TEST_CASE("random magma roundtrip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto raw = oracle::random_magma(rng, 6);
    std::vector<PartialUnitalMagma::Entry> products(raw.products.begin(), raw.products.end());
    PartialUnitalMagma m(raw.size, 0, products);
    auto d = max_associativity_datum(m, 3);
    auto x = nerve(m, d, 3);
    auto [m2, d2] = magma_from_sset(x);
    CHECK(m2 == m);
    CHECK(nerve(m2, d2, 3) == x);
    CHECK(is_inverseless_sset(x).holds == is_inverseless(m));
  }
}
