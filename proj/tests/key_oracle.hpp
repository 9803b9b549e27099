#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "simpeff/quantum.hpp"

// The C^3 (x) C^3 construction written out directly, basis |ab> with a major.
namespace key_oracle {

using simpeff::quantum::Complex;
using simpeff::quantum::ComplexMatrix;

inline ComplexMatrix proj(int a, int b) {
  ComplexMatrix m = ComplexMatrix::Zero(9, 9);
  m(3 * a + b, 3 * a + b) = 1.0;
  return m;
}

inline ComplexMatrix proj_vec(const Eigen::VectorXcd& v) { return v * v.adjoint(); }

// (|02> +- |20>) / sqrt 2
inline Eigen::VectorXcd pm(double sign) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(9);
  v(2) = 1 / std::sqrt(2.0);
  v(6) = sign / std::sqrt(2.0);
  return v;
}

inline const Complex w3 = std::polar(1.0, 2 * M_PI / 3);

inline ComplexMatrix pi01() { return proj(0, 1) + proj(1, 1) + proj(2, 1) + proj(1, 2); }

// Pi: zero on 11, 21, 12, the block pi01 on 01, Gamma^ab elsewhere.
inline std::vector<ComplexMatrix> pi() {
  std::vector<ComplexMatrix> out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if ((a == 1 && b == 1) || (a == 2 && b == 1) || (a == 1 && b == 2))
        out.push_back(ComplexMatrix::Zero(9, 9));
      else if (a == 0 && b == 1)
        out.push_back(pi01());
      else
        out.push_back(proj(a, b));
    }
  return out;
}

// Psi, with the 10 entry completed so the family sums to the identity.
inline std::vector<ComplexMatrix> psi() {
  std::vector<ComplexMatrix> out(9, ComplexMatrix::Zero(9, 9));
  out[3 * 2 + 0] = proj_vec(pm(1));
  out[3 * 2 + 2] = proj_vec(pm(-1));
  out[3 * 0 + 1] = proj(0, 0);
  out[3 * 1 + 0] = pi01() + proj(1, 0) + proj(2, 2);
  return out;
}

inline ComplexMatrix B() { return (proj(0, 0) + proj(1, 0) + proj(2, 0)) + w3 * pi01() + w3 * w3 * (proj(0, 2) + proj(2, 2)); }

inline ComplexMatrix C() {
  return (pi01() + proj(1, 0) + proj(2, 2) + proj_vec(pm(1))) + w3 * proj(0, 0) + w3 * w3 * proj_vec(pm(-1));
}

// As displayed; its eigenvalue labels are reflected relative to d2 Pi.
inline ComplexMatrix printed_A() { return (proj(2, 0) + proj(2, 2)) + w3 * proj(1, 0) + w3 * w3 * (pi01() + proj(0, 0) + proj(0, 2)); }

inline double max_dist(const std::vector<ComplexMatrix>& a, const std::vector<ComplexMatrix>& b) {
  double d = 0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, (a[k] - b[k]).norm());
  return d;
}

}  // namespace key_oracle
