#include "simpeff/rational.hpp"

#include <optional>
#include <stdexcept>

namespace simpeff {

std::string format_rational(const Rational& q) { return q.str(); }

Rref rref(RationalMatrix m) {
  Rref out;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    Rational inv = 1 / m(r, c);
    m.row(r) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i)
      if (i != r && m(i, c) != 0) {
        Rational f = m(i, c);
        m.row(i) -= f * m.row(r);
      }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

int rank(const RationalMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

RationalMatrix nullspace(const RationalMatrix& m) {
  auto rr = rref(m);
  const Eigen::Index n = m.cols();
  std::vector<char> pivot(static_cast<std::size_t>(n), 0);
  for (int p : rr.pivots) pivot[static_cast<std::size_t>(p)] = 1;
  std::vector<Eigen::Index> free;
  for (Eigen::Index j = 0; j < n; ++j)
    if (!pivot[static_cast<std::size_t>(j)]) free.push_back(j);
  RationalMatrix basis = RationalMatrix::Zero(n, static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    auto f = free[k];
    basis(f, static_cast<Eigen::Index>(k)) = 1;
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
      basis(rr.pivots[r], static_cast<Eigen::Index>(k)) = -rr.reduced(static_cast<Eigen::Index>(r), f);
  }
  return basis;
}

namespace {

// Dense tableau: rows 0..m-1 are constraints, column `cols` is the right-hand side.
struct Tableau {
  RationalMatrix t;
  std::vector<Eigen::Index> basis;
  RationalVector cost;  // reduced costs, one per column
  Rational value;       // current objective

  Eigen::Index rows() const { return t.rows(); }
  Eigen::Index cols() const { return t.cols() - 1; }

  void price(const RationalVector& c) {
    cost = c;
    value = 0;
    for (Eigen::Index i = 0; i < rows(); ++i) {
      const Rational cb = c(basis[static_cast<std::size_t>(i)]);
      if (cb == 0) continue;
      cost -= cb * t.row(i).head(cols()).transpose();
      value += cb * t(i, cols());
    }
  }

  void pivot(Eigen::Index r, Eigen::Index c) {
    Rational inv = 1 / t(r, c);
    t.row(r) *= inv;
    for (Eigen::Index i = 0; i < rows(); ++i)
      if (i != r && t(i, c) != 0) {
        Rational f = t(i, c);
        t.row(i) -= f * t.row(r);
      }
    Rational f = cost(c);
    if (f != 0) {
      cost -= f * t.row(r).head(cols()).transpose();
      value += f * t(r, cols());
    }
    basis[static_cast<std::size_t>(r)] = c;
  }

  // Bland's rule; returns false if unbounded.
  bool run(Eigen::Index usable_cols) {
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < usable_cols; ++j)
        if (cost(j) < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Rational best;
      for (Eigen::Index i = 0; i < rows(); ++i) {
        if (t(i, enter) <= 0) continue;
        Rational ratio = t(i, cols()) / t(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const RationalMatrix& A, const RationalVector& b, const RationalVector& c) {
  const Eigen::Index m = A.rows(), n = A.cols();
  if (b.size() != m || c.size() != n) throw std::invalid_argument("LP dimensions do not match");
  LpResult res;
  std::vector<int> sign(static_cast<std::size_t>(m), 1);
  Tableau tab;
  tab.t = RationalMatrix::Zero(m, n + m + 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (b(i) < 0) sign[static_cast<std::size_t>(i)] = -1;
    const int s = sign[static_cast<std::size_t>(i)];
    tab.t.row(i).head(n) = A.row(i) * Rational(s);
    tab.t(i, n + i) = 1;
    tab.t(i, n + m) = b(i) * s;
    tab.basis.push_back(n + i);
  }
  RationalVector phase1 = RationalVector::Zero(n + m);
  phase1.tail(m).setOnes();
  tab.price(phase1);
  tab.run(n + m);
  if (tab.value > 0) {
    // y_i = 1 - reduced cost of artificial i solves the phase-one dual.
    res.status = LpResult::Status::Infeasible;
    res.farkas = RationalVector(m);
    for (Eigen::Index i = 0; i < m; ++i) res.farkas(i) = -(1 - tab.cost(n + i)) * sign[static_cast<std::size_t>(i)];
    return res;
  }
  // Drive zero-level artificials out of the basis; rows where that is
  // impossible are redundant and dropped.
  for (Eigen::Index i = tab.rows() - 1; i >= 0; --i) {
    if (tab.basis[static_cast<std::size_t>(i)] < n) continue;
    Eigen::Index j = 0;
    while (j < n && tab.t(i, j) == 0) ++j;
    if (j < n) {
      tab.pivot(i, j);
    } else {
      RationalMatrix keep(tab.rows() - 1, tab.t.cols());
      keep.topRows(i) = tab.t.topRows(i);
      keep.bottomRows(tab.rows() - 1 - i) = tab.t.bottomRows(tab.rows() - 1 - i);
      tab.t = std::move(keep);
      tab.basis.erase(tab.basis.begin() + i);
    }
  }
  Tableau p2;
  p2.t = RationalMatrix(tab.rows(), n + 1);
  p2.t.leftCols(n) = tab.t.leftCols(n);
  p2.t.col(n) = tab.t.col(n + m);
  p2.basis = tab.basis;
  p2.price(c);
  if (!p2.run(n)) {
    res.status = LpResult::Status::Unbounded;
    return res;
  }
  res.status = LpResult::Status::Optimal;
  res.x = RationalVector::Zero(n);
  for (Eigen::Index i = 0; i < p2.rows(); ++i) res.x(p2.basis[static_cast<std::size_t>(i)]) = p2.t(i, n);
  res.value = c.dot(res.x);
  return res;
}

}  // namespace simpeff
