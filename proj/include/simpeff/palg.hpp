#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simpeff/report.hpp"

namespace simpeff {

using ElementId = int;
using Tuple = std::vector<ElementId>;

/// Finite set 0..size-1 with a partially defined product and a two-sided unit.
///
/// The product is kept as an explicit sparse table; a pair absent from the
/// table is not multiplicable.
class PartialUnitalMagma {
public:
  using Entry = std::array<ElementId, 3>;  // a * b = c

  /// Throws ValidationError if an id is out of range, a pair is listed twice
  /// with different values, or unitality fails. Unit pairs may be omitted;
  /// they are filled in.
  PartialUnitalMagma(int size, ElementId unit, const std::vector<Entry>& products);

  int size() const { return size_; }
  ElementId unit() const { return unit_; }

  std::optional<ElementId> product(ElementId a, ElementId b) const;
  bool defined(ElementId a, ElementId b) const { return table_.count({a, b}) > 0; }

  /// Every defined product, lexicographic in (a, b).
  std::vector<Entry> products() const;
  std::size_t domain_size() const { return table_.size(); }

  friend bool operator==(const PartialUnitalMagma&, const PartialUnitalMagma&) = default;

private:
  int size_;
  ElementId unit_;
  std::map<std::pair<ElementId, ElementId>, ElementId> table_;
};

/// Planar binary rooted tree. Stored as the preorder sequence of internal
/// nodes, each recording how many leaves sit in its left subtree.
class Bracketing {
public:
  Bracketing() = default;  // the single leaf

  static Bracketing leaf() { return {}; }
  static Bracketing join(const Bracketing& left, const Bracketing& right);
  static Bracketing left_comb(int leaves);
  static Bracketing right_comb(int leaves);

  int leaves() const { return static_cast<int>(splits_.size()) + 1; }
  const std::vector<int>& splits() const { return splits_; }
  std::string to_string() const;

  friend bool operator==(const Bracketing&, const Bracketing&) = default;
  friend auto operator<=>(const Bracketing&, const Bracketing&) = default;

private:
  std::vector<int> splits_;
};

/// All Catalan(n-1) bracketings of n leaves, in a fixed order.
const std::vector<Bracketing>& all_bracketings(int leaves);

std::optional<ElementId> bracketed_product(const PartialUnitalMagma& m, const Tuple& tuple,
                                           const Bracketing& t);

/// Defined under every bracketing.
bool is_multiplicable(const PartialUnitalMagma& m, const Tuple& tuple);
/// Multiplicable and every bracketing gives the same value.
bool is_associable(const PartialUnitalMagma& m, const Tuple& tuple);
/// Every contiguous sub-tuple is associable.
bool is_fully_associable(const PartialUnitalMagma& m, const Tuple& tuple);
/// Common value of an associable tuple; the unit for the empty tuple.
std::optional<ElementId> total_product(const PartialUnitalMagma& m, const Tuple& tuple);

/// Recursive multiplicability for commutative structures: (a1..an) is
/// multiplicable if (a1..a(n-1)) is and (a1+...+a(n-1), an) is defined.
bool is_multiplicable_recursive(const PartialUnitalMagma& m, const Tuple& tuple);

enum class AssociativityClass { Magma, WeakPartialMonoid, PartialMonoid };

std::string to_string(AssociativityClass c);

struct Classification {
  AssociativityClass kind;
  /// Lexicographically first triple violating the next stronger condition.
  std::optional<Tuple> witness;
};

Classification classify(const PartialUnitalMagma& m);

/// Chermak-style associativity datum: a set A_n of n-tuples for each n >= 2.
class AssociativityDatum {
public:
  AssociativityDatum() = default;
  explicit AssociativityDatum(std::map<int, std::vector<Tuple>> levels);

  int max_arity() const { return levels_.empty() ? 1 : levels_.rbegin()->first; }
  const std::vector<Tuple>& level(int n) const;
  bool contains(const Tuple& t) const;
  const std::map<int, std::vector<Tuple>>& levels() const { return levels_; }

  friend bool operator==(const AssociativityDatum&, const AssociativityDatum&) = default;

private:
  std::map<int, std::vector<Tuple>> levels_;  // each level sorted, no duplicates
};

/// Fully associable tuples of every arity 2..up_to.
AssociativityDatum max_associativity_datum(const PartialUnitalMagma& m, int up_to);

/// Checks datum conditions: A_2 is the product domain, closure under prefixes
/// and suffixes, unit insertion, and full associability. Closure conditions
/// are only checked where the target arity is stored.
Report validate_datum(const PartialUnitalMagma& m, const AssociativityDatum& a);

/// Word set D with product Pi. Words include the empty word and all letters.
struct PasStructure {
  int carrier_size = 0;
  std::map<Tuple, ElementId> words;

  std::size_t max_length() const;
};

/// Conditions 1-4 on the stored words; when `inversion` is given also
/// condition 5 (u.u^-1 in D with product 1) for words whose double fits.
Report validate_pas(const PasStructure& p, const std::vector<ElementId>* inversion = nullptr);

/// Throws ValidationError when the datum is not valid for m.
PasStructure to_pas(const PartialUnitalMagma& m, const AssociativityDatum& a);
/// Throws ValidationError when p fails conditions 1-4.
std::pair<PartialUnitalMagma, AssociativityDatum> from_pas(const PasStructure& p);

struct Inverses {
  std::vector<ElementId> left, right, two_sided;
};

Inverses inverses(const PartialUnitalMagma& m, ElementId x);
bool is_inverseless(const PartialUnitalMagma& m);
bool is_weakly_associative_partial_group(const PartialUnitalMagma& m, int up_to);

/// Effect algebra written additively: unit is 0 and 1 := orthocomplement(0).
struct FiniteEffectAlgebra {
  PartialUnitalMagma magma;
  std::vector<ElementId> orthocomplement;

  ElementId zero() const { return magma.unit(); }
  ElementId one() const { return orthocomplement.at(static_cast<std::size_t>(zero())); }
};

/// Findings are keyed "commutativity", "orthocomplement", "zero-in-one",
/// "associativity".
Report validate_effect_algebra(const FiniteEffectAlgebra& e);

/// {0..n} with a+b defined iff a+b <= n and a^perp = n-a.
FiniteEffectAlgebra chain_effect_algebra(int n);
/// Subsets of an `atoms`-element set (bitmasks), sum of disjoint subsets.
FiniteEffectAlgebra boolean_effect_algebra(int atoms);

}  // namespace simpeff
