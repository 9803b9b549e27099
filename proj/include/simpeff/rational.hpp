#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace simpeff {

using Rational = boost::multiprecision::mpq_rational;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

std::string format_rational(const Rational& q);

struct Rref {
  RationalMatrix reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

Rref rref(RationalMatrix m);
int rank(const RationalMatrix& m);
/// Columns form a basis of {x : m x = 0}, one per free column.
RationalMatrix nullspace(const RationalMatrix& m);

/// min c.x subject to A x = b, x >= 0; dense two-phase simplex with Bland's rule.
struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded } status = Status::Infeasible;
  RationalVector x;
  Rational value;
  /// On infeasibility: y with A^T y >= 0 and b.y < 0.
  RationalVector farkas;
};

LpResult solve_lp(const RationalMatrix& A, const RationalVector& b, const RationalVector& c);

}  // namespace simpeff
