#pragma once

#include <vector>

#include "simpeff/nerve.hpp"
#include "simpeff/sset.hpp"

namespace simpeff {

/// Truncated simplicial set with cyclic operators tau_n on X_n, 1 <= n <= K.
struct CyclicSSet {
  TruncatedSSet base;
  std::vector<std::vector<SimplexId>> tau;  // tau[n] for 0 <= n <= K; tau[0] is the identity

  SimplexId apply(int n, SimplexId x) const { return tau[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)]; }
};

/// Checks d0 tau_n = d_n, d_i tau_n = tau_{n-1} d_{i-1}, s_0 tau_n = tau_{n+1}^2 s_n,
/// s_i tau_n = tau_{n+1} s_{i-1} and tau_n^{n+1} = id. Findings carry (n, i, x).
Report validate_cyclic(const CyclicSSet& c);

/// tau(g_1..g_n) = (z (g_1...g_n)^{-1}, g_1, ..., g_{n-1}). Throws InputError
/// if z is not central or leaves the nerve.
CyclicSSet group_nerve_cyclic(const FiniteGroup& g, int z, const LabelledNerve& nerve);

/// tau(a_1..a_n) = ((a_1+...+a_n)^perp, a_1, ..., a_{n-1}); the nerve must be
/// labelled by effect algebra elements.
CyclicSSet effect_nerve_cyclic(const FiniteEffectAlgebra& e, const LabelledNerve& nerve);

/// The four orthocomplement identities on 2-simplices. Finding keys:
/// "rotation", "involution", "one-perp", "inverse".
Report orthocomplement_laws(const CyclicSSet& c);

struct SimplicialEffectReport {
  CheckResult spiny, inverseless, weakly_two_segal;
  Report cyclic;
  bool holds() const { return spiny.holds && inverseless.holds && weakly_two_segal.holds && cyclic.ok(); }
};
SimplicialEffectReport is_simplicial_effect(const CyclicSSet& c);

struct EffectAlgebroidReport {
  CheckResult two_segal;
  bool U = false;  // (d2, d0): X_2 -> X_1 x X_1 injective
  CheckResult Z;   // inverseless
  Report cyclic;
  bool holds() const { return two_segal.holds && U && Z.holds && cyclic.ok(); }
};
EffectAlgebroidReport effect_algebroid_conditions(const CyclicSSet& c);

}  // namespace simpeff
