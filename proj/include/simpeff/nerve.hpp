#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simpeff/palg.hpp"
#include "simpeff/sset.hpp"

namespace simpeff {

class FiniteGroup {
public:
  /// Throws ValidationError unless `mul` is a group table.
  explicit FiniteGroup(std::vector<std::vector<int>> mul, std::string name = "");

  static FiniteGroup cyclic(int n);
  static FiniteGroup quaternion();  // 0..7 = 1,-1,i,-i,j,-j,k,-k
  static FiniteGroup dihedral4();   // r^a s^b has id a + 4b
  static FiniteGroup symmetric3();  // permutations of {0,1,2} in lexicographic order

  int order() const { return static_cast<int>(mul_.size()); }
  int unit() const { return unit_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int pow(int a, int k) const;
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
  bool is_central(int z) const;
  bool is_abelian() const;
  const std::vector<std::vector<int>>& table() const { return mul_; }
  const std::string& name() const { return name_; }
  std::string element_name(int a) const;

  /// Partial unital magma on G with every product defined.
  PartialUnitalMagma total_magma() const;

private:
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  int unit_ = 0;
  std::string name_;
};

/// A truncated simplicial set whose n-simplices are tuples of labels (group
/// elements or magma elements), with the tuple of each simplex kept.
struct LabelledNerve {
  TruncatedSSet sset;
  std::vector<std::vector<Tuple>> tuples;  // tuples[n][x], n >= 1

  SimplexId id_of(const Tuple& t) const;  // -1 if absent
};

/// Nerve of a magma with associativity datum. X_1 ids are element ids and
/// level n lists A_n lexicographically.
TruncatedSSet nerve(const PartialUnitalMagma& m, const AssociativityDatum& a, int K);
LabelledNerve labelled_nerve(const PartialUnitalMagma& m, const AssociativityDatum& a, int K);

/// Throws InputError unless x is spiny and reduced. The unit is s_0 of the vertex.
std::pair<PartialUnitalMagma, AssociativityDatum> magma_from_sset(const TruncatedSSet& x);

/// Pairwise commuting tuples (of d-torsion elements when `torsion` is set).
LabelledNerve comm_nerve(const FiniteGroup& g, std::optional<int> torsion, int K);

/// L_Y(G): tuples (g_1..g_n) with a chain y_0,...,y_n in Y, y_i = g_i y_{i-1}.
/// Faces compose along the chain, d_i merges (g_i, g_{i+1}) into g_{i+1} g_i;
/// for abelian G this is the usual nerve of G.
LabelledNerve action_partial_group(const FiniteGroup& g, int z_size, const std::vector<std::vector<int>>& action,
                                   const std::vector<int>& y, int K);

/// E(X): functions X_n -> E with multiplicable support summing to 1.
/// Each simplex is stored as its value vector.
struct EffectFunctorResult {
  TruncatedSSet sset;
  std::vector<std::vector<std::vector<ElementId>>> functions;  // functions[n][phi][x]
};
EffectFunctorResult effect_functor(const FiniteEffectAlgebra& e, const TruncatedSSet& x);

/// S^1 with (S^1)_n = {*, theta^1..theta^n}; id 0 is *, id i is theta^i.
TruncatedSSet simplicial_circle(int K);

/// phi -> (phi(theta^1), ..., phi(theta^n)) from E(S^1) to N(E).
SimplicialMap effect_circle_map(const EffectFunctorResult& es1, const LabelledNerve& ne);

}  // namespace simpeff
