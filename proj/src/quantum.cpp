#include "simpeff/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace simpeff::quantum {

namespace {

int mod(int a, int d) { return ((a % d) + d) % d; }

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

Rng trial_rng(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  return Rng(seq);
}

void require_key_shape(const ProjectiveMeasurement& m) {
  if (m.d != 3 || m.dim() != 9) throw InputError("key example lives on C^9 with d = 3");
}

// Frame columns of u grouped by label.
ProjectiveMeasurement from_frame(const ComplexMatrix& u, const std::vector<int>& label_of_column, int arity, int d) {
  auto m = ProjectiveMeasurement::zeros(d, arity, static_cast<int>(u.rows()));
  for (Eigen::Index k = 0; k < u.cols(); ++k) {
    auto& p = m.projectors[static_cast<std::size_t>(label_of_column[static_cast<std::size_t>(k)])];
    p += u.col(k) * u.col(k).adjoint();
  }
  return m;
}

ProjectiveMeasurement degenerate_triangle() {
  auto m = ProjectiveMeasurement::zeros(3, 2, 9);
  m.at({0, 0}) = identity(9);
  return m;
}

}  // namespace

Complex root_of_unity(int d, int k) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(mod(k, d)) / static_cast<double>(d));
}

const Complex& omega() {
  static const Complex w = root_of_unity(3, 1);
  return w;
}

double frobenius(const ComplexMatrix& m) { return m.norm(); }
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) { return (a * b - b * a).norm(); }

ProjectiveMeasurement ProjectiveMeasurement::zeros(int d, int arity, int dim) {
  if (d < 1 || arity < 0 || dim < 1) throw InputError("bad measurement shape");
  ProjectiveMeasurement m;
  m.d = d;
  m.arity = arity;
  m.projectors.assign(static_cast<std::size_t>(ipow(d, arity)), ComplexMatrix::Zero(dim, dim));
  return m;
}

int ProjectiveMeasurement::index(const Outcome& x) const {
  if (static_cast<int>(x.size()) != arity) throw InputError("outcome arity mismatch");
  int idx = 0;
  for (int a : x) idx = idx * d + mod(a, d);
  return idx;
}

Outcome ProjectiveMeasurement::outcome(int idx) const {
  Outcome x(static_cast<std::size_t>(arity));
  for (int k = arity - 1; k >= 0; --k) {
    x[static_cast<std::size_t>(k)] = idx % d;
    idx /= d;
  }
  return x;
}

Report validate(const ProjectiveMeasurement& m, double tol) {
  Report r;
  if (m.d < 1 || m.outcomes() != ipow(m.d, m.arity) || m.outcomes() == 0) {
    r.add("shape", "outcome count must be d^n");
    return r;
  }
  const int dim = m.dim();
  for (const auto& p : m.projectors)
    if (p.rows() != dim || p.cols() != dim) {
      r.add("shape", "projectors must share a square dimension");
      return r;
    }
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (int x = 0; x < m.outcomes(); ++x) {
    const auto& p = m.projectors[static_cast<std::size_t>(x)];
    if ((p * p - p).norm() > tol || (p - p.adjoint()).norm() > tol)
      r.add("projector", "not an orthogonal projector", m.outcome(x));
    for (int y = x + 1; y < m.outcomes(); ++y)
      if ((p * m.projectors[static_cast<std::size_t>(y)]).norm() > tol) r.add("orthogonal", "overlap", {x, y});
    sum += p;
  }
  if ((sum - identity(dim)).norm() > tol) r.add("complete", "projectors do not sum to 1");
  return r;
}

double distance(const ProjectiveMeasurement& a, const ProjectiveMeasurement& b) {
  if (a.d != b.d || a.arity != b.arity || a.dim() != b.dim()) return std::numeric_limits<double>::infinity();
  double worst = 0;
  for (std::size_t x = 0; x < a.projectors.size(); ++x)
    worst = std::max(worst, (a.projectors[x] - b.projectors[x]).norm());
  return worst;
}

std::vector<ComplexMatrix> eigenprojectors(const ComplexMatrix& u, int d) {
  if (u.rows() != u.cols()) throw InputError("unitary must be square");
  if (d < 1) throw InputError("torsion must be positive");
  const int dim = static_cast<int>(u.rows());
  if ((u.adjoint() * u - identity(dim)).norm() > kProjectorTol) throw ValidationError("matrix is not unitary");
  std::vector<ComplexMatrix> powers{identity(dim)};
  for (int k = 1; k < d; ++k) powers.push_back(powers.back() * u);
  if ((powers.back() * u - identity(dim)).norm() > kProjectorTol)
    throw ValidationError("unitary is not " + std::to_string(d) + "-torsion");
  std::vector<ComplexMatrix> out;
  for (int a = 0; a < d; ++a) {
    ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
    for (int k = 0; k < d; ++k) p += root_of_unity(d, -a * k) * powers[static_cast<std::size_t>(k)];
    out.push_back(p / static_cast<double>(d));
  }
  return out;
}

ProjectiveMeasurement measurement_from_unitaries(const std::vector<ComplexMatrix>& us, int d) {
  if (us.empty()) throw InputError("need at least one unitary");
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = i + 1; j < us.size(); ++j) {
      double c = commutator_norm(us[i], us[j]);
      if (c > kEqualityTol)
        throw ValidationError("unitaries " + std::to_string(i) + " and " + std::to_string(j) +
                              " do not commute: commutator norm " + std::to_string(c));
    }
  std::vector<std::vector<ComplexMatrix>> spectral;
  for (const auto& u : us) spectral.push_back(eigenprojectors(u, d));
  auto m = ProjectiveMeasurement::zeros(d, static_cast<int>(us.size()), static_cast<int>(us[0].rows()));
  for (int x = 0; x < m.outcomes(); ++x) {
    auto o = m.outcome(x);
    ComplexMatrix p = spectral[0][static_cast<std::size_t>(o[0])];
    for (std::size_t i = 1; i < o.size(); ++i) p = p * spectral[i][static_cast<std::size_t>(o[i])];
    m.projectors[static_cast<std::size_t>(x)] = p;
  }
  return m;
}

ComplexMatrix unitary_of(const ProjectiveMeasurement& edge) {
  if (edge.arity != 1) throw InputError("unitary_of needs a 1-simplex");
  ComplexMatrix u = ComplexMatrix::Zero(edge.dim(), edge.dim());
  for (int a = 0; a < edge.d; ++a) u += root_of_unity(edge.d, a) * edge.projectors[static_cast<std::size_t>(a)];
  return u;
}

std::vector<ComplexMatrix> unitaries_from_measurement(const ProjectiveMeasurement& m) {
  std::vector<ComplexMatrix> out;
  for (int i = 0; i < m.arity; ++i)
    out.push_back(unitary_of(pushforward(m, 1, [i](const Outcome& x) { return Outcome{x[static_cast<std::size_t>(i)]}; })));
  return out;
}

ProjectiveMeasurement pushforward(const ProjectiveMeasurement& m, int arity,
                                  const std::function<Outcome(const Outcome&)>& f) {
  auto out = ProjectiveMeasurement::zeros(m.d, arity, m.dim());
  for (int x = 0; x < m.outcomes(); ++x) out.at(f(m.outcome(x))) += m.projectors[static_cast<std::size_t>(x)];
  return out;
}

ProjectiveMeasurement face(const ProjectiveMeasurement& m, int i) {
  const int n = m.arity;
  if (n < 1 || i < 0 || i > n) throw InputError("face index out of range");
  return pushforward(m, n - 1, [i, n, d = m.d](const Outcome& x) {
    Outcome y;
    for (int k = 0; k < n; ++k) {
      if ((i == 0 && k == 0) || (i == n && k == n - 1)) continue;
      if (i > 0 && i < n && k == i) {
        y.back() = mod(y.back() + x[static_cast<std::size_t>(k)], d);
        continue;
      }
      y.push_back(x[static_cast<std::size_t>(k)]);
    }
    return y;
  });
}

ProjectiveMeasurement degeneracy(const ProjectiveMeasurement& m, int i) {
  if (i < 0 || i > m.arity) throw InputError("degeneracy index out of range");
  return pushforward(m, m.arity + 1, [i](const Outcome& x) {
    Outcome y = x;
    y.insert(y.begin() + i, 0);
    return y;
  });
}

ProjectiveMeasurement tau(const ProjectiveMeasurement& m, int z) {
  if (m.arity == 0) return m;
  return pushforward(m, m.arity, [z, d = m.d](const Outcome& x) {
    int s = 0;
    for (int a : x) s += a;
    Outcome y{mod(z - s, d)};
    y.insert(y.end(), x.begin(), x.end() - 1);
    return y;
  });
}

Membership in_key_example(const ProjectiveMeasurement& m, double tol) {
  require_key_shape(m);
  Membership out;
  if (m.arity == 2) {
    for (Outcome bad : {Outcome{1, 1}, Outcome{2, 1}, Outcome{1, 2}})
      if (m.at(bad).norm() > tol) out.offending.push_back(bad);
  } else if (m.arity > 2) {
    const int n = m.arity;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
          auto tri = pushforward(m, 2, [i, j, k](const Outcome& x) {
            int a = 0, b = 0;
            for (int t = i; t < j; ++t) a += x[static_cast<std::size_t>(t)];
            for (int t = j; t < k; ++t) b += x[static_cast<std::size_t>(t)];
            return Outcome{a % 3, b % 3};
          });
          if (!in_key_example(tri, tol).member) out.offending.push_back({i, j, k});
        }
  }
  out.member = out.offending.empty();
  return out;
}

ComplexMatrix gamma(int a, int b) {
  ComplexMatrix g = ComplexMatrix::Zero(9, 9);
  g(3 * a + b, 3 * a + b) = 1;
  return g;
}

KeyWitness build_witness() {
  KeyWitness w;
  const ComplexMatrix pi01 = gamma(0, 1) + gamma(1, 1) + gamma(2, 1) + gamma(1, 2);
  w.pi = ProjectiveMeasurement::zeros(3, 2, 9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) w.pi.at({a, b}) = gamma(a, b);
  w.pi.at({1, 1}).setZero();
  w.pi.at({2, 1}).setZero();
  w.pi.at({1, 2}).setZero();
  w.pi.at({0, 1}) = pi01;

  Eigen::VectorXcd plus = Eigen::VectorXcd::Zero(9), minus = Eigen::VectorXcd::Zero(9);
  const double r = 1.0 / std::sqrt(2.0);
  plus(2) = r;  // |02>
  plus(6) = r;  // |20>
  minus(2) = r;
  minus(6) = -r;
  const ComplexMatrix gp = plus * plus.adjoint(), gm = minus * minus.adjoint();

  w.psi = ProjectiveMeasurement::zeros(3, 2, 9);
  w.psi.at({2, 0}) = gp;
  w.psi.at({1, 0}) = pi01 + gamma(1, 0) + gamma(2, 2);  // printed as Pi^01 alone, which is not normalized
  w.psi.at({0, 1}) = gamma(0, 0);
  w.psi.at({2, 2}) = gm;

  w.A = unitary_of(face(w.pi, 2));
  w.B = unitary_of(face(w.pi, 0));
  w.C = unitary_of(face(w.psi, 0));
  const Complex om = omega(), om2 = om * om;
  w.printed_A = (gamma(2, 0) + gamma(2, 2)) + om * gamma(1, 0) + om2 * (pi01 + gamma(0, 0) + gamma(0, 2));
  w.printed_B = (gamma(0, 0) + gamma(1, 0) + gamma(2, 0)) + om * pi01 + om2 * (gamma(0, 2) + gamma(2, 2));
  w.printed_C = (pi01 + gamma(1, 0) + gamma(2, 2) + gp) + om * gamma(0, 0) + om2 * gm;

  w.glue_residual = distance(face(w.psi, 2), face(w.pi, 1));
  w.ab_commutator = commutator_norm(w.A, w.B);
  w.bc_commutator = commutator_norm(w.B, w.C);
  w.ac_commutator = commutator_norm(w.A, w.C);
  return w;
}

FillerResult filler_exists(const ProjectiveMeasurement& lower, const ProjectiveMeasurement& upper) {
  if (lower.arity != 2 || upper.arity != 2) throw InputError("filler_exists takes two 2-simplices");
  FillerResult r;
  r.glue_residual = distance(face(upper, 2), face(lower, 1));
  if (r.glue_residual > kEqualityTol) {
    r.detail = "membrane does not glue: d2(upper) != d1(lower)";
    return r;
  }
  const ComplexMatrix u1 = unitary_of(face(lower, 2)), u2 = unitary_of(face(lower, 0)),
                      u3 = unitary_of(face(upper, 0));
  r.ab = commutator_norm(u1, u2);
  r.bc = commutator_norm(u2, u3);
  r.ac = commutator_norm(u1, u3);
  if (std::max({r.ab, r.bc, r.ac}) > kEqualityTol) {
    r.detail = "edge unitaries do not pairwise commute";
    return r;
  }
  auto w = measurement_from_unitaries({u1, u2, u3}, lower.d);
  if (distance(face(w, 3), lower) > kEqualityTol || distance(face(w, 1), upper) > kEqualityTol) {
    r.detail = "the commuting triple does not restrict to the membrane";
    return r;
  }
  if (lower.d == 3 && lower.dim() == 9 && !in_key_example(w).member) {
    r.detail = "the 3-simplex leaves Z";
    return r;
  }
  r.exists = true;
  return r;
}

ComplexMatrix haar_unitary(int dim, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) z(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * identity(dim);
  const ComplexMatrix& rr = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    Complex d = rr(j, j);
    q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1);
  }
  return q;
}

ComplexMatrix random_density(int dim, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) z(i, j) = Complex(g(rng), g(rng));
  ComplexMatrix rho = z * z.adjoint();
  return rho / rho.trace().real();
}

const std::vector<Outcome>& admissible_labels() {
  static const std::vector<Outcome> labels{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}, {2, 2}};
  return labels;
}

ProjectiveMeasurement random_z_simplex(Rng& rng, const std::vector<Outcome>& labels) {
  const auto& pool = labels.empty() ? admissible_labels() : labels;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  auto shape = ProjectiveMeasurement::zeros(3, 2, 1);
  std::vector<int> label_of(9);
  for (auto& l : label_of) l = shape.index(pool[pick(rng)]);
  return from_frame(haar_unitary(9, rng), label_of, 2, 3);
}

DensityOperator::DensityOperator(ComplexMatrix m) : matrix(std::move(m)) {
  if (matrix.rows() != matrix.cols()) throw ValidationError("density operator must be square");
  if ((matrix - matrix.adjoint()).norm() > kEqualityTol) throw ValidationError("density operator is not Hermitian");
  if (std::abs(matrix.trace() - Complex(1)) > kEqualityTol) throw ValidationError("density operator trace != 1");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(matrix);
  if (es.eigenvalues().minCoeff() < -kEqualityTol) throw ValidationError("density operator is not positive");
}

std::vector<double> born_state(const DensityOperator& rho, const ProjectiveMeasurement& m) {
  if (rho.matrix.rows() != m.dim()) throw InputError("density and measurement dimensions differ");
  std::vector<double> p;
  for (const auto& proj : m.projectors) p.push_back((rho.matrix * proj).trace().real());
  return p;
}

double phi_columns(const DensityOperator& rho, const ComplexMatrix& x0, const ComplexMatrix&,
                   const ComplexMatrix& x2) {
  const auto dim = rho.matrix.rows();
  return (rho.matrix * (identity(static_cast<int>(dim)) - x0 - 0.5 * x2)).trace().real();
}

double phi(const DensityOperator& rho, const ProjectiveMeasurement& edge) {
  if (edge.arity != 1 || edge.d != 3) throw InputError("phi takes a 1-simplex of N Z/3");
  if (rho.matrix.rows() != edge.dim()) throw InputError("density and measurement dimensions differ");
  return phi_columns(rho, edge.projectors[0], edge.projectors[1], edge.projectors[2]);
}

InverselessReport inverseless_sample_check(int trials, std::uint64_t seed) {
  if (trials < 1) throw InputError("trials must be >= 1");
  InverselessReport r;
  r.trials = trials;
  std::vector<Outcome> fibre;  // admissible labels over the degenerate d1
  for (const auto& l : admissible_labels())
    if ((l[0] + l[1]) % 3 == 0) fibre.push_back(l);
  const auto total = degenerate_triangle();
  const auto degenerate_edge = face(total, 1);
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    auto general = random_z_simplex(rng);
    if (in_key_example(general).member) ++r.general_members;
    if (distance(face(general, 1), degenerate_edge) < kEqualityTol &&
        distance(general, total) > kEqualityTol)
      r.max_residual = std::max(r.max_residual, 1.0);

    auto sigma = random_z_simplex(rng, fibre);
    double res = distance(face(sigma, 1), degenerate_edge);
    const ComplexMatrix one = identity(9);
    res = std::max(res, (one - sigma.at({0, 0})).norm());
    res = std::max(res, (sigma.at({2, 2}) + sigma.at({1, 0}) + sigma.at({0, 1})).norm());
    res = std::max(res, (sigma.at({2, 0}) + sigma.at({0, 2})).norm());
    res = std::max(res, distance(sigma, total));
    bool ok = in_key_example(sigma).member && res < kEqualityTol;
    r.max_residual = std::max(r.max_residual, res);
    if (ok) ++r.passes;

    // Same fibre in the ambient set: d1 is degenerate but 12 / 21 survive.
    std::vector<Outcome> ambient{{0, 0}, {1, 2}, {2, 1}};
    auto shape = ProjectiveMeasurement::zeros(3, 2, 1);
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<int> label_of(9);
    for (auto& l : label_of) l = shape.index(ambient[static_cast<std::size_t>(pick(rng))]);
    label_of[0] = shape.index(ambient[static_cast<std::size_t>(1 + pick(rng) % 2)]);
    auto y = from_frame(haar_unitary(9, rng), label_of, 2, 3);
    if (distance(face(y, 1), degenerate_edge) < kEqualityTol && !in_key_example(y).member) ++r.rejected_in_ambient;
  }
  return r;
}

bool StateCheckReport::holds(double tol) const {
  return std::max({additivity, orthocomplement, partial_additive, column_consistency, swap_orth, half, third_zero}) <
             tol &&
         std::abs(omega2_one) < 1e-12 && min_phi >= -tol && max_phi <= 1 + tol;
}

StateCheckReport key_example_state_check(const DensityOperator& rho, int trials, std::uint64_t seed) {
  if (rho.matrix.rows() != 9) throw InputError("key example states need rho on C^9");
  StateCheckReport r;
  r.trials = trials;
  const ComplexMatrix one = identity(9), zero = ComplexMatrix::Zero(9, 9);
  auto track = [&](double v) {
    r.min_phi = std::min(r.min_phi, v);
    r.max_phi = std::max(r.max_phi, v);
    return v;
  };
  auto col = [&](const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
    return track(phi_columns(rho, a, b, c));
  };
  r.omega2_one = col(zero, zero, one) - 0.5;
  const std::vector<Outcome> stratum{{0, 0}, {0, 1}, {1, 0}, {2, 2}};
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    auto sigma = random_z_simplex(rng);
    const double f0 = track(phi(rho, face(sigma, 0))), f1 = track(phi(rho, face(sigma, 1))),
                 f2 = track(phi(rho, face(sigma, 2)));
    r.additivity = std::max(r.additivity, std::abs(f1 - f2 - f0));
    for (int i = 0; i < 3; ++i) {
      auto e = face(sigma, i);
      r.orthocomplement = std::max(r.orthocomplement, std::abs(track(phi(rho, tau(e))) + phi(rho, e) - 1));
    }

    auto s = random_z_simplex(rng, stratum);
    auto a = face(s, 2);
    const ComplexMatrix &a0 = a.projectors[0], &a1 = a.projectors[1], &a2 = a.projectors[2];
    const ComplexMatrix p = s.at({0, 0});
    auto b = face(s, 0);
    r.column_consistency =
        std::max({r.column_consistency, (b.projectors[0] - (a1 + p)).norm(), (b.projectors[1] - (a0 - p)).norm(),
                  (b.projectors[2] - a2).norm()});
    r.partial_additive =
        std::max(r.partial_additive, std::abs(col(a0, a1, a2) + col(a1 + p, a0 - p, a2) - col(p, one - p, zero)));
    r.swap_orth = std::max(r.swap_orth, std::abs(col(a0, one - a0, zero) + col(one - a0, a0, zero) - 1));
    r.half = std::max(r.half, std::abs(2 * col(a0, zero, one - a0) - col(a0, one - a0, zero)));
    const ComplexMatrix q = a1 + p;
    r.third_zero = std::max(r.third_zero, std::abs(col(a0, one - a0, zero) + col(q, one - q, zero) -
                                                   col(one - a2, a2, zero) - col(p, one - p, zero)));
  }
  return r;
}

InjectivityReport injectivity_sample(int pairs, int probes, std::uint64_t seed) {
  InjectivityReport r;
  r.pairs = pairs;
  r.min_gap = std::numeric_limits<double>::infinity();
  for (int t = 0; t < pairs; ++t) {
    auto rng = trial_rng(seed, t);
    DensityOperator r1(random_density(9, rng)), r2(random_density(9, rng));
    double best = 0;
    for (int k = 0; k < probes; ++k) {
      auto e = face(random_z_simplex(rng), k % 3);
      best = std::max(best, std::abs(phi(r1, e) - phi(r2, e)));
    }
    if (best > 1e-6) ++r.distinguished;
    r.min_gap = std::min(r.min_gap, best);
  }
  return r;
}

TauStabilityReport tau_stability_check(int trials, std::uint64_t seed) {
  TauStabilityReport r;
  r.trials = trials;
  std::vector<Outcome> all;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) all.push_back({a, b});
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    auto sigma = random_z_simplex(rng);
    auto rotated = tau(sigma);
    auto y = random_z_simplex(rng, all);
    const bool y_member = in_key_example(y).member;
    if (in_key_example(rotated).member && in_key_example(tau(y)).member == y_member) ++r.stable;
    r.max_order_residual = std::max(r.max_order_residual, distance(tau(tau(rotated)), sigma));
  }
  return r;
}

}  // namespace simpeff::quantum
