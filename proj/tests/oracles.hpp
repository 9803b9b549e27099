#pragma once

// Brute-force reference computations used to cross-check the library. Nothing
// here calls into simpeff beyond plain data types.

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

// ---- groups from matrices -------------------------------------------------

using Mat2 = std::array<std::complex<double>, 4>;

inline Mat2 mul2(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline bool close2(const Mat2& a, const Mat2& b) {
  for (int k = 0; k < 4; ++k)
    if (std::abs(a[static_cast<std::size_t>(k)] - b[static_cast<std::size_t>(k)]) > 1e-12) return false;
  return true;
}

// Q8 as 2x2 complex matrices, ordered 1,-1,i,-i,j,-j,k,-k.
inline std::vector<Mat2> q8_matrices() {
  const std::complex<double> I(0, 1);
  Mat2 one{1, 0, 0, 1}, qi{I, 0, 0, -I}, qj{0, 1, -1, 0}, qk{0, I, I, 0};
  std::vector<Mat2> out;
  for (const auto& m : {one, qi, qj, qk}) {
    out.push_back(m);
    out.push_back({-m[0], -m[1], -m[2], -m[3]});
  }
  return out;
}

inline std::vector<std::vector<int>> table_from_matrices(const std::vector<Mat2>& g) {
  std::vector<std::vector<int>> t(g.size(), std::vector<int>(g.size(), -1));
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) {
      auto p = mul2(g[a], g[b]);
      for (std::size_t c = 0; c < g.size(); ++c)
        if (close2(p, g[c])) t[a][b] = static_cast<int>(c);
    }
  return t;
}

// ---- commuting tuples -----------------------------------------------------

inline bool commute(const std::vector<std::vector<int>>& t, int a, int b) {
  return t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == t[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
}

inline std::size_t commuting_tuples(const std::vector<std::vector<int>>& t, int n) {
  const int order = static_cast<int>(t.size());
  std::size_t count = 0;
  std::vector<int> tup(static_cast<std::size_t>(n), 0);
  for (;;) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) ok = commute(t, tup[static_cast<std::size_t>(i)], tup[static_cast<std::size_t>(j)]);
    if (ok) ++count;
    int k = n - 1;
    while (k >= 0 && ++tup[static_cast<std::size_t>(k)] == order) tup[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) return count;
  }
}

// Spines (g1,g2,g3) of membranes on the triangulation {013, 123} of the
// commutative nerve with no 3-simplex filler: (g2,g3) and (g1, g2 g3)
// commute but the triple is not pairwise commuting.
inline std::vector<std::array<int, 3>> unfilled_right_membranes(const std::vector<std::vector<int>>& t) {
  std::vector<std::array<int, 3>> out;
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int bc = t[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
        if (commute(t, b, c) && commute(t, a, bc) && !(commute(t, a, b) && commute(t, a, c))) out.push_back({a, b, c});
      }
  return out;
}

// Same for the triangulation {012, 023}: (g1,g2) and (g1 g2, g3) commute.
inline std::vector<std::array<int, 3>> unfilled_left_membranes(const std::vector<std::vector<int>>& t) {
  std::vector<std::array<int, 3>> out;
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int ab = t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        if (commute(t, a, b) && commute(t, ab, c) && !(commute(t, a, c) && commute(t, b, c))) out.push_back({a, b, c});
      }
  return out;
}

// ---- exact fractions over int64 -------------------------------------------

struct Frac {
  std::int64_t p = 0, q = 1;
  Frac(std::int64_t a = 0, std::int64_t b = 1) : p(a), q(b) {
    if (q < 0) p = -p, q = -q;
    auto g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) p /= g, q /= g;
  }
  friend Frac operator+(Frac a, Frac b) { return {a.p * b.q + b.p * a.q, a.q * b.q}; }
  friend Frac operator-(Frac a, Frac b) { return {a.p * b.q - b.p * a.q, a.q * b.q}; }
  friend Frac operator*(Frac a, Frac b) { return {a.p * b.p, a.q * b.q}; }
  friend Frac operator/(Frac a, Frac b) { return {a.p * b.q, a.q * b.p}; }
  friend bool operator==(Frac a, Frac b) { return a.p == b.p && a.q == b.q; }
  bool zero() const { return p == 0; }
};

// Gauss-Jordan on an augmented matrix [A | b]. Returns the rank of A and
// whether the system is consistent; `solution` gets the particular solution
// with free variables set to 0.
struct Elimination {
  int rank = 0;
  bool consistent = true;
  std::vector<Frac> solution;
  std::vector<int> pivots;
};

inline Elimination eliminate(std::vector<std::vector<Frac>> rows, int vars) {
  Elimination out;
  int r = 0;
  for (int c = 0; c < vars && r < static_cast<int>(rows.size()); ++c) {
    int p = r;
    while (p < static_cast<int>(rows.size()) && rows[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)].zero()) ++p;
    if (p == static_cast<int>(rows.size())) continue;
    std::swap(rows[static_cast<std::size_t>(p)], rows[static_cast<std::size_t>(r)]);
    auto& piv = rows[static_cast<std::size_t>(r)];
    Frac inv = Frac(1) / piv[static_cast<std::size_t>(c)];
    for (auto& v : piv) v = v * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][static_cast<std::size_t>(c)].zero()) continue;
      Frac f = rows[i][static_cast<std::size_t>(c)];
      for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] = rows[i][k] - f * piv[k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  for (std::size_t i = static_cast<std::size_t>(r); i < rows.size(); ++i)
    if (!rows[i][static_cast<std::size_t>(vars)].zero()) out.consistent = false;
  out.solution.assign(static_cast<std::size_t>(vars), Frac(0));
  if (out.consistent)
    for (int k = 0; k < r; ++k)
      out.solution[static_cast<std::size_t>(out.pivots[static_cast<std::size_t>(k)])] =
          rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(vars)];
  return out;
}

// ---- chain effect algebra L_n ---------------------------------------------

// Simplices of N(L_n) at level k: tuples of naturals with sum <= n.
inline std::size_t chain_nerve_count(int n, int k) {
  std::size_t count = 0;
  std::vector<int> t(static_cast<std::size_t>(k), 0);
  for (;;) {
    if (std::accumulate(t.begin(), t.end(), 0) <= n) ++count;
    int i = k - 1;
    while (i >= 0 && ++t[static_cast<std::size_t>(i)] > n) t[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return count;
  }
}

// Functions {*, theta^1..theta^k} -> L_n whose values sum to exactly n.
inline std::size_t chain_circle_functions(int n, int k) {
  std::size_t count = 0;
  std::vector<int> t(static_cast<std::size_t>(k) + 1, 0);
  for (;;) {
    if (std::accumulate(t.begin(), t.end(), 0) == n) ++count;
    int i = k;
    while (i >= 0 && ++t[static_cast<std::size_t>(i)] > n) t[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return count;
  }
}

// ---- random partial magmas ------------------------------------------------

struct RawMagma {
  int size = 1;
  std::vector<std::array<int, 3>> products;  // non-unit pairs only; unit is 0
};

inline RawMagma random_magma(std::mt19937_64& rng, int max_size) {
  RawMagma m;
  m.size = std::uniform_int_distribution<int>(1, max_size)(rng);
  std::bernoulli_distribution defined(0.35);
  std::uniform_int_distribution<int> value(0, m.size - 1);
  for (int a = 1; a < m.size; ++a)
    for (int b = 1; b < m.size; ++b)
      if (defined(rng)) m.products.push_back({a, b, value(rng)});
  return m;
}

}  // namespace oracle
