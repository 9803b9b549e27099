#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simpeff/report.hpp"

namespace simpeff {

using SimplexId = int;

/// Finite simplicial set stored level by level up to a truncation bound K.
/// Degenerate simplices are explicit; every face and degeneracy is a table
/// lookup.
class TruncatedSSet {
public:
  using Table = std::vector<SimplexId>;

  TruncatedSSet() = default;
  /// faces[n][i] for 1 <= n <= K (faces[0] is empty), degeneracies[n][i] for
  /// 0 <= n < K. Shapes and id ranges are checked (InputError); simplicial
  /// identities are not, see validate().
  TruncatedSSet(int truncation, std::vector<int> counts, std::vector<std::vector<Table>> faces,
                std::vector<std::vector<Table>> degeneracies);

  int truncation() const { return truncation_; }
  int count(int n) const;
  const std::vector<int>& counts() const { return counts_; }

  SimplexId face(int n, int i, SimplexId x) const;
  SimplexId degeneracy(int n, int i, SimplexId x) const;
  const Table& face_table(int n, int i) const;
  const Table& degeneracy_table(int n, int i) const;

  /// Face of x spanned by the given increasing vertex subset of [n].
  SimplexId restrict_to(int n, SimplexId x, const std::vector<int>& vertices) const;
  /// Edges (i,i+1) of x, as 1-simplex ids.
  std::vector<SimplexId> spine(int n, SimplexId x) const;
  SimplexId vertex(int n, SimplexId x, int k) const;

  TruncatedSSet truncate(int k) const;

  friend bool operator==(const TruncatedSSet&, const TruncatedSSet&) = default;

private:
  void check_level(int n) const;

  int truncation_ = 0;
  std::vector<int> counts_;
  std::vector<std::vector<Table>> faces_;
  std::vector<std::vector<Table>> degens_;
};

/// Every simplicial identity instance expressible within the truncation.
/// Finding witnesses are (level, i, j, simplex).
Report validate(const TruncatedSSet& x);

/// Builds a simplicial set from its nondegenerate simplices. Each
/// nondegenerate simplex lists its faces as nondegenerate simplices of one
/// dimension lower; degenerate simplices are generated as (simplex, surjection)
/// pairs.
struct NondegenerateData {
  /// faces[k][s] = the k+1 faces (indices into level k-1) of the s-th
  /// nondegenerate k-simplex. faces[0] holds one empty entry per vertex.
  std::vector<std::vector<std::vector<int>>> faces;
};
TruncatedSSet from_nondegenerate(const NondegenerateData& data, int truncation);

TruncatedSSet standard_simplex(int n, int truncation);
/// Two triangulations of the square glued along their common spine.
TruncatedSSet glued_triangulations_w3(int truncation);
/// Delta^3 with the interior removed (the boundary sphere).
TruncatedSSet boundary_of_simplex3(int truncation);
/// Two 2-simplices sharing their spine edges but with distinct long edges.
TruncatedSSet doubled_triangle(int truncation);
TruncatedSSet point_sset(int truncation);

CheckResult is_spiny(const TruncatedSSet& x);
bool is_reduced(const TruncatedSSet& x);

/// Triangulation of the polygon P_{n+1} with vertices 0..n.
struct Triangulation {
  int n = 0;
  std::vector<std::array<int, 3>> triangles;  // sorted by smallest vertex

  std::string to_string() const;
  friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

/// All Catalan(n-1) triangulations; n = 2 gives the single triangle.
std::vector<Triangulation> triangulations(int n);

enum class SubsetKind { Spine, Triangulation, Boundary, Full };

/// Simplicial subset of Delta^n named by its generating faces (vertex sets).
struct SimplicialSubset {
  SubsetKind kind = SubsetKind::Spine;
  int n = 0;
  std::vector<std::vector<int>> cells;

  static SimplicialSubset spine(int n);
  static SimplicialSubset of(const Triangulation& t);
  static SimplicialSubset boundary(int n);
  static SimplicialSubset full(int n);
};

/// A map from a simplicial subset of Delta^n into X, given on generators.
struct MembraneAssignment {
  SimplicialSubset subset;
  std::vector<SimplexId> simplices;  // simplices[c] is the image of cells[c]

  /// Edge (i,i+1) images read off the generators.
  std::vector<SimplexId> spine(const TruncatedSSet& x) const;
};

std::vector<MembraneAssignment> membrane_set(const TruncatedSSet& x, const SimplicialSubset& subset);
/// Restriction of an n-simplex to the generators of `subset`.
MembraneAssignment restrict_membrane(const TruncatedSSet& x, SimplexId sigma, const SimplicialSubset& subset);
/// Membranes with no filler (and, separately, with more than one).
struct MembraneCensus {
  std::vector<MembraneAssignment> unfilled;
  std::vector<std::pair<MembraneAssignment, std::vector<SimplexId>>> multiply_filled;
  std::size_t total = 0;
};
MembraneCensus membrane_census(const TruncatedSSet& x, const SimplicialSubset& subset);

/// Witness on failure: spine of the offending membrane, level n in
/// witness_level, triangulation and filler count in detail.
CheckResult is_two_segal(const TruncatedSSet& x);
CheckResult is_weakly_two_segal(const TruncatedSSet& x);
CheckResult is_coskeletal_2(const TruncatedSSet& x);
/// Witness on failure: spine (d2 sigma, d0 sigma) of the offending 2-simplex.
CheckResult is_inverseless_sset(const TruncatedSSet& x);

/// Coskeleton of a 2-truncation, extended up to `target`. Level n > 2 holds the
/// compatible boundary families, ordered by (spine, faces).
TruncatedSSet cosk2_extend(const TruncatedSSet& x2, int target);

/// Level-wise bijections commuting with all faces and degeneracies.
using SimplicialMap = std::vector<std::vector<SimplexId>>;
std::optional<SimplicialMap> find_isomorphism(const TruncatedSSet& x, const TruncatedSSet& y);
/// f[n][x] in Y_n for every level both sets share.
bool is_simplicial_map(const TruncatedSSet& x, const TruncatedSSet& y, const SimplicialMap& f);
bool is_bijective(const TruncatedSSet& x, const TruncatedSSet& y, const SimplicialMap& f);

}  // namespace simpeff
