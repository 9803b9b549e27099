#pragma once

#include <vector>

#include "simpeff/cyclic.hpp"
#include "simpeff/nerve.hpp"
#include "simpeff/palg.hpp"

namespace fixtures {

using namespace simpeff;

// Q8 ids: 0..7 = 1,-1,i,-i,j,-j,k,-k
inline constexpr int kI = 2, kMinusI = 3, kJ = 4, kMinusOne = 1;

inline PartialUnitalMagma one_element() { return PartialUnitalMagma(1, 0, {}); }

// Commuting-pair product read off the 2-simplices of N(Z, G).
inline PartialUnitalMagma comm_magma(const FiniteGroup& g) { return magma_from_sset(comm_nerve(g, std::nullopt, 2).sset).first; }

// L_Y(Z/4) with Z/4 acting on itself and Y = {0, 1, 2}.
inline LabelledNerve lY_z4(int K) {
  auto g = FiniteGroup::cyclic(4);
  std::vector<std::vector<int>> action(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int y = 0; y < 4; ++y) action[static_cast<std::size_t>(a)][static_cast<std::size_t>(y)] = (a + y) % 4;
  return action_partial_group(g, 4, action, {0, 1, 2}, K);
}

inline CyclicSSet chain_cyclic(int n, int K) {
  auto e = chain_effect_algebra(n);
  return effect_nerve_cyclic(e, labelled_nerve(e.magma, max_associativity_datum(e.magma, K), K));
}

inline CyclicSSet boolean_cyclic(int atoms, int K) {
  auto e = boolean_effect_algebra(atoms);
  return effect_nerve_cyclic(e, labelled_nerve(e.magma, max_associativity_datum(e.magma, K), K));
}

inline CyclicSSet group_cyclic(const FiniteGroup& g, int z, int K, std::optional<int> torsion = std::nullopt) {
  return group_nerve_cyclic(g, z, comm_nerve(g, torsion, K));
}

inline CyclicSSet point_cyclic(int K) {
  CyclicSSet c{point_sset(K), {}};
  for (int n = 0; n <= K; ++n) c.tau.push_back({0});
  return c;
}

}  // namespace fixtures
