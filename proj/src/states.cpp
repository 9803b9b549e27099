#include "simpeff/states.hpp"

#include <algorithm>

namespace simpeff {

namespace {

RationalLinearSystem build(const CyclicSSet& c, bool homogeneous) {
  const auto& x = c.base;
  if (x.truncation() < 2) throw InputError("state conditions need level 2");
  const int n = x.count(1);
  const int rows = x.count(1) + x.count(2);
  RationalLinearSystem s;
  s.variables = n;
  s.equalities = RationalMatrix::Zero(rows, n);
  s.rhs = RationalVector::Zero(rows);
  s.box = !homogeneous;
  int r = 0;
  for (SimplexId e = 0; e < x.count(1); ++e, ++r) {
    s.equalities(r, e) += 1;
    s.equalities(r, c.apply(1, e)) += 1;
    s.rhs(r) = homogeneous ? 0 : 1;
    s.row_labels.push_back("tau " + std::to_string(e));
  }
  for (SimplexId a = 0; a < x.count(2); ++a, ++r) {
    s.equalities(r, x.face(2, 1, a)) += 1;
    s.equalities(r, x.face(2, 2, a)) -= 1;
    s.equalities(r, x.face(2, 0, a)) -= 1;
    s.row_labels.push_back("additivity " + std::to_string(a));
  }
  return s;
}

// Standard form over (x, u) with x + u = 1.
void box_form(const RationalLinearSystem& s, RationalMatrix& A, RationalVector& b) {
  const Eigen::Index m = s.equalities.rows(), n = s.variables;
  A = RationalMatrix::Zero(m + n, 2 * n);
  b = RationalVector::Zero(m + n);
  A.topLeftCorner(m, n) = s.equalities;
  b.head(m) = s.rhs;
  for (Eigen::Index j = 0; j < n; ++j) {
    A(m + j, j) = 1;
    A(m + j, n + j) = 1;
    b(m + j) = 1;
  }
}

LpResult optimize(const RationalLinearSystem& s, const RationalVector& objective) {
  RationalMatrix A;
  RationalVector b;
  box_form(s, A, b);
  RationalVector c = RationalVector::Zero(2 * s.variables);
  c.head(s.variables) = objective;
  return solve_lp(A, b, c);
}

}  // namespace

bool RationalLinearSystem::satisfied_by(const RationalVector& x) const {
  if (x.size() != variables) return false;
  if (equalities.rows() > 0 && equalities * x != rhs) return false;
  if (box)
    for (Eigen::Index j = 0; j < x.size(); ++j)
      if (x(j) < 0 || x(j) > 1) return false;
  return true;
}

RationalLinearSystem state_system(const CyclicSSet& c) { return build(c, false); }
RationalLinearSystem hc1_system(const CyclicSSet& c) { return build(c, true); }

bool verify_certificate(const RationalLinearSystem& s, const InfeasibilityCertificate& cert) {
  const Eigen::Index m = s.equalities.rows(), n = s.variables;
  if (cert.equality_multipliers.size() != m || cert.box_multipliers.size() != n) return false;
  RationalVector lhs = s.equalities.transpose() * cert.equality_multipliers + cert.box_multipliers;
  for (Eigen::Index j = 0; j < n; ++j)
    if (lhs(j) < 0 || cert.box_multipliers(j) < 0) return false;
  Rational total = s.rhs.dot(cert.equality_multipliers) + cert.box_multipliers.sum();
  return total < 0;
}

StateSearch find_state(const CyclicSSet& c) {
  auto s = state_system(c);
  auto res = optimize(s, RationalVector::Zero(s.variables));
  StateSearch out;
  if (res.status == LpResult::Status::Optimal) {
    out.state = RationalVector(res.x.head(s.variables));
    return out;
  }
  const Eigen::Index m = s.equalities.rows();
  InfeasibilityCertificate cert{res.farkas.head(m), res.farkas.tail(s.variables)};
  if (!verify_certificate(s, cert)) throw std::logic_error("simplex produced an invalid infeasibility certificate");
  out.certificate = std::move(cert);
  return out;
}

StatePolytope state_polytope(const CyclicSSet& c) {
  auto s = state_system(c);
  StatePolytope out;
  const int n = s.variables;
  if (find_state(c).certificate) return out;
  RationalMatrix forced(0, n);
  auto add_vertex = [&](const RationalVector& v) {
    if (std::none_of(out.vertices.begin(), out.vertices.end(), [&](const auto& w) { return w == v; }))
      out.vertices.push_back(v);
  };
  for (int j = 0; j < n; ++j) {
    RationalVector e = RationalVector::Zero(n);
    e(j) = 1;
    auto lo = optimize(s, e);   // min x_j
    auto hi = optimize(s, -e);  // max x_j
    add_vertex(lo.x.head(n));
    add_vertex(hi.x.head(n));
    if (-hi.value == 0 || lo.value == 1) {
      forced.conservativeResize(forced.rows() + 1, n);
      forced.row(forced.rows() - 1) = e.transpose();
    }
  }
  RationalMatrix all(s.equalities.rows() + forced.rows(), n);
  all.topRows(s.equalities.rows()) = s.equalities;
  all.bottomRows(forced.rows()) = forced;
  out.dimension = n - rank(all);
  return out;
}

std::optional<int> state_polytope_dim(const CyclicSSet& c) { return state_polytope(c).dimension; }

Hc1 hc1(const CyclicSSet& c) {
  auto s = hc1_system(c);
  Hc1 out;
  out.basis = nullspace(s.equalities);
  out.dimension = static_cast<int>(out.basis.cols());
  return out;
}

}  // namespace simpeff
