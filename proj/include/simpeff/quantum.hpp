#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "simpeff/report.hpp"

namespace simpeff::quantum {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Outcome = std::vector<int>;

inline constexpr double kEqualityTol = 1e-9;
inline constexpr double kProjectorTol = 1e-6;

/// e^{2 pi i k / d}
Complex root_of_unity(int d, int k);
/// The cube root omega = e^{2 pi i/3}, computed once.
const Complex& omega();

double frobenius(const ComplexMatrix& m);
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

/// An n-simplex of P_H(N Z/d): one projector per outcome tuple in (Z/d)^n.
/// Outcomes are indexed mixed-radix with a_1 most significant.
struct ProjectiveMeasurement {
  int d = 0;
  int arity = 0;
  std::vector<ComplexMatrix> projectors;

  static ProjectiveMeasurement zeros(int d, int arity, int dim);

  int dim() const { return projectors.empty() ? 0 : static_cast<int>(projectors.front().rows()); }
  int outcomes() const { return static_cast<int>(projectors.size()); }
  int index(const Outcome& x) const;
  Outcome outcome(int index) const;
  const ComplexMatrix& at(const Outcome& x) const { return projectors[static_cast<std::size_t>(index(x))]; }
  ComplexMatrix& at(const Outcome& x) { return projectors[static_cast<std::size_t>(index(x))]; }
};

/// Keys: "shape", "projector", "orthogonal", "complete".
Report validate(const ProjectiveMeasurement& m, double tol = kProjectorTol);
/// Max Frobenius distance over outcomes; +inf if shapes differ.
double distance(const ProjectiveMeasurement& a, const ProjectiveMeasurement& b);

/// Pi_a = (1/d) sum_k omega^{-ak} u^k. Throws ValidationError if u is not a
/// d-torsion unitary.
std::vector<ComplexMatrix> eigenprojectors(const ComplexMatrix& u, int d);
/// Pi^{a_1..a_n} = Pi_{u_1}^{a_1} ... Pi_{u_n}^{a_n}. Throws ValidationError
/// (message carries the commutator norm) if some pair does not commute.
ProjectiveMeasurement measurement_from_unitaries(const std::vector<ComplexMatrix>& us, int d);
/// u_i = sum_a omega^a (marginal of coordinate i).
std::vector<ComplexMatrix> unitaries_from_measurement(const ProjectiveMeasurement& m);
/// sum_a omega^a Pi^a for a 1-simplex.
ComplexMatrix unitary_of(const ProjectiveMeasurement& edge);

/// (f_* Pi)^y = sum over f(x) = y of Pi^x.
ProjectiveMeasurement pushforward(const ProjectiveMeasurement& m, int arity,
                                  const std::function<Outcome(const Outcome&)>& f);
ProjectiveMeasurement face(const ProjectiveMeasurement& m, int i);
ProjectiveMeasurement degeneracy(const ProjectiveMeasurement& m, int i);
/// Pushforward along tau(a_1..a_n) = (z - sum a, a_1..a_{n-1}).
ProjectiveMeasurement tau(const ProjectiveMeasurement& m, int z = 1);

/// Membership in the key example Z (d = 3 on C^3 (x) C^3). For arity 2 the
/// offending labels among 11, 21, 12 are listed; for higher arity every
/// 2-face (i<j<k) is tested and offending faces are listed as {i, j, k}.
struct Membership {
  bool member = true;
  std::vector<Outcome> offending;
};
Membership in_key_example(const ProjectiveMeasurement& m, double tol = kEqualityTol);

/// Projector onto |ab> in C^3 (x) C^3, a major.
ComplexMatrix gamma(int a, int b);

struct KeyWitness {
  ProjectiveMeasurement pi, psi;
  ComplexMatrix A, B, C;                          // spectral unitaries of d2 Pi, d0 Pi, d0 Psi
  ComplexMatrix printed_A, printed_B, printed_C;  // as displayed in the construction
  double glue_residual = 0;                       // d2 Psi vs d1 Pi
  double ab_commutator = 0, bc_commutator = 0, ac_commutator = 0;
};
KeyWitness build_witness();

/// Does the membrane (lower, upper) with d2(upper) = d1(lower) extend to a
/// 3-simplex W of Z with d3 W = lower and d1 W = upper?
struct FillerResult {
  bool exists = false;
  double glue_residual = 0;
  double ab = 0, bc = 0, ac = 0;  // commutator norms
  std::string detail;
};
FillerResult filler_exists(const ProjectiveMeasurement& lower, const ProjectiveMeasurement& upper);

using Rng = std::mt19937_64;
ComplexMatrix haar_unitary(int dim, Rng& rng);
ComplexMatrix random_density(int dim, Rng& rng);
/// Random 2-simplex of Z: each basis vector of a Haar frame gets a label drawn
/// from `labels` (default: the six admissible ones).
ProjectiveMeasurement random_z_simplex(Rng& rng, const std::vector<Outcome>& labels = {});
const std::vector<Outcome>& admissible_labels();

struct DensityOperator {
  ComplexMatrix matrix;
  /// Throws ValidationError unless Hermitian, PSD and trace 1 within 1e-9.
  explicit DensityOperator(ComplexMatrix m);
};

/// p(x) = Tr(rho Pi(x)). Throws InputError on dimension mismatch.
std::vector<double> born_state(const DensityOperator& rho, const ProjectiveMeasurement& m);

/// phi(X) = Tr(rho (1 - X^0 - X^2/2)) on a 1-simplex of P_H(N Z/3).
double phi(const DensityOperator& rho, const ProjectiveMeasurement& edge);
double phi_columns(const DensityOperator& rho, const ComplexMatrix& x0, const ComplexMatrix& x1, const ComplexMatrix& x2);

struct InverselessReport {
  int trials = 0;
  int passes = 0;
  int general_members = 0;      // general random samples accepted by in_key_example
  int rejected_in_ambient = 0;  // d1-degenerate simplices of the ambient set rejected by in_key_example
  double max_residual = 0;
  bool holds() const { return passes == trials && rejected_in_ambient == trials; }
};
InverselessReport inverseless_sample_check(int trials, std::uint64_t seed);

struct StateCheckReport {
  int trials = 0;
  double additivity = 0;        // phi(d1) - phi(d2) - phi(d0) on general Z 2-simplices
  double orthocomplement = 0;   // phi(tau x) + phi(x) - 1 on their faces
  double partial_additive = 0;  // column form, on the Pi^02 = Pi^20 = 0 stratum
  double column_consistency = 0;
  double swap_orth = 0, half = 0, third_zero = 0;
  double omega2_one = 0;  // phi(omega^2 1) - 1/2
  double min_phi = 1, max_phi = 0;
  bool holds(double tol = kEqualityTol) const;
};
StateCheckReport key_example_state_check(const DensityOperator& rho, int trials, std::uint64_t seed);

/// Distinct random rho pairs give different phi on some sampled 1-simplex.
struct InjectivityReport {
  int pairs = 0, distinguished = 0;
  double min_gap = 0;  // over pairs, the best separation found
};
InjectivityReport injectivity_sample(int pairs, int probes, std::uint64_t seed);

/// tau_2 maps Z 2-simplices into Z and ambient non-members to non-members;
/// tau_2^3 = id.
struct TauStabilityReport {
  int trials = 0, stable = 0;
  double max_order_residual = 0;
  bool holds() const { return stable == trials && max_order_residual < kEqualityTol; }
};
TauStabilityReport tau_stability_check(int trials, std::uint64_t seed);

}  // namespace simpeff::quantum
