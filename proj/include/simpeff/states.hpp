#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simpeff/cyclic.hpp"
#include "simpeff/rational.hpp"

namespace simpeff {

/// Equalities over variables indexed by 1-simplex ids, optionally with the
/// box 0 <= x <= 1.
struct RationalLinearSystem {
  int variables = 0;
  RationalMatrix equalities;
  RationalVector rhs;
  std::vector<std::string> row_labels;
  bool box = false;

  bool satisfied_by(const RationalVector& x) const;
};

/// phi(tau_1 x) + phi(x) = 1 per 1-simplex, phi(d1 s) - phi(d2 s) - phi(d0 s) = 0
/// per 2-simplex, plus the box. Redundant rows are kept.
RationalLinearSystem state_system(const CyclicSSet& c);
/// The homogeneous version without the box: cocycles f with f(tau_1 x) = -f(x).
RationalLinearSystem hc1_system(const CyclicSSet& c);

/// Multipliers proving {M x = c, 0 <= x <= 1} empty: M^T y + z >= 0, z >= 0,
/// c.y + sum(z) < 0.
struct InfeasibilityCertificate {
  RationalVector equality_multipliers;
  RationalVector box_multipliers;
};
bool verify_certificate(const RationalLinearSystem& s, const InfeasibilityCertificate& cert);

struct StateSearch {
  std::optional<RationalVector> state;
  std::optional<InfeasibilityCertificate> certificate;
};
StateSearch find_state(const CyclicSSet& c);

struct StatePolytope {
  std::optional<int> dimension;        // nullopt when empty
  std::vector<RationalVector> vertices;  // optima of +-x_j, deduplicated
};
StatePolytope state_polytope(const CyclicSSet& c);
std::optional<int> state_polytope_dim(const CyclicSSet& c);

struct Hc1 {
  int dimension = 0;
  RationalMatrix basis;  // one column per basis vector
};
Hc1 hc1(const CyclicSSet& c);

}  // namespace simpeff
