#include "simpeff/sset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace simpeff {

TruncatedSSet::TruncatedSSet(int truncation, std::vector<int> counts, std::vector<std::vector<Table>> faces,
                             std::vector<std::vector<Table>> degeneracies)
    : truncation_(truncation), counts_(std::move(counts)), faces_(std::move(faces)), degens_(std::move(degeneracies)) {
  const auto K = static_cast<std::size_t>(truncation);
  if (truncation < 0) throw InputError("negative truncation");
  if (counts_.size() != K + 1) throw InputError("counts must list levels 0..K");
  for (int c : counts_)
    if (c < 0) throw InputError("negative simplex count");
  if (faces_.size() != K + 1) throw InputError("faces must list levels 0..K");
  if (degens_.size() != K) throw InputError("degeneracies must list levels 0..K-1");
  for (std::size_t n = 1; n <= K; ++n) {
    if (faces_[n].size() != n + 1) throw InputError("level " + std::to_string(n) + " needs n+1 face maps");
    for (const auto& t : faces_[n]) {
      if (t.size() != static_cast<std::size_t>(counts_[n])) throw InputError("face table length mismatch at level " + std::to_string(n));
      for (int v : t)
        if (v < 0 || v >= counts_[n - 1]) throw InputError("face value out of range at level " + std::to_string(n));
    }
  }
  for (std::size_t n = 0; n < K; ++n) {
    if (degens_[n].size() != n + 1) throw InputError("level " + std::to_string(n) + " needs n+1 degeneracies");
    for (const auto& t : degens_[n]) {
      if (t.size() != static_cast<std::size_t>(counts_[n])) throw InputError("degeneracy table length mismatch at level " + std::to_string(n));
      for (int v : t)
        if (v < 0 || v >= counts_[n + 1]) throw InputError("degeneracy value out of range at level " + std::to_string(n));
    }
  }
}

void TruncatedSSet::check_level(int n) const {
  if (n < 0 || n > truncation_)
    throw InputError("level " + std::to_string(n) + " outside truncation " + std::to_string(truncation_));
}

int TruncatedSSet::count(int n) const {
  check_level(n);
  return counts_[static_cast<std::size_t>(n)];
}

SimplexId TruncatedSSet::face(int n, int i, SimplexId x) const {
  return face_table(n, i)[static_cast<std::size_t>(x)];
}

SimplexId TruncatedSSet::degeneracy(int n, int i, SimplexId x) const {
  return degeneracy_table(n, i)[static_cast<std::size_t>(x)];
}

const TruncatedSSet::Table& TruncatedSSet::face_table(int n, int i) const {
  check_level(n);
  if (n < 1 || i < 0 || i > n) throw InputError("no face d" + std::to_string(i) + " at level " + std::to_string(n));
  return faces_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

const TruncatedSSet::Table& TruncatedSSet::degeneracy_table(int n, int i) const {
  check_level(n);
  if (n >= truncation_ || i < 0 || i > n)
    throw InputError("no degeneracy s" + std::to_string(i) + " at level " + std::to_string(n));
  return degens_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

SimplexId TruncatedSSet::restrict_to(int n, SimplexId x, const std::vector<int>& vertices) const {
  // Deleting from the top keeps the indices of lower vertices valid.
  int level = n;
  std::size_t pos = vertices.size();
  for (int j = n; j >= 0; --j) {
    if (pos > 0 && vertices[pos - 1] == j) {
      --pos;
      continue;
    }
    x = face(level, j, x);
    --level;
  }
  if (pos != 0) throw InputError("vertex list is not an increasing subset of [n]");
  return x;
}

std::vector<SimplexId> TruncatedSSet::spine(int n, SimplexId x) const {
  std::vector<SimplexId> out;
  for (int i = 0; i < n; ++i) out.push_back(restrict_to(n, x, {i, i + 1}));
  return out;
}

SimplexId TruncatedSSet::vertex(int n, SimplexId x, int k) const { return restrict_to(n, x, {k}); }

TruncatedSSet TruncatedSSet::truncate(int k) const {
  if (k > truncation_ || k < 0) throw InputError("cannot truncate above the stored level");
  const auto K = static_cast<std::size_t>(k);
  std::vector<int> counts(counts_.begin(), counts_.begin() + static_cast<std::ptrdiff_t>(K + 1));
  std::vector<std::vector<Table>> faces(faces_.begin(), faces_.begin() + static_cast<std::ptrdiff_t>(K + 1));
  std::vector<std::vector<Table>> degens(degens_.begin(), degens_.begin() + static_cast<std::ptrdiff_t>(K));
  return TruncatedSSet(k, std::move(counts), std::move(faces), std::move(degens));
}

Report validate(const TruncatedSSet& x) {
  Report r;
  const int K = x.truncation();
  auto fail = [&](const char* rule, int n, int i, int j, SimplexId s) {
    r.add(rule, std::string(rule) + " identity fails", {n, i, j, s});
  };
  for (int n = 2; n <= K; ++n)
    for (SimplexId s = 0; s < x.count(n); ++s)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (x.face(n - 1, i, x.face(n, j, s)) != x.face(n - 1, j - 1, x.face(n, i, s))) fail("dd", n, i, j, s);
  for (int n = 0; n < K; ++n)
    for (SimplexId s = 0; s < x.count(n); ++s)
      for (int j = 0; j <= n; ++j) {
        SimplexId sj = x.degeneracy(n, j, s);
        for (int i = 0; i <= n + 1; ++i) {
          SimplexId lhs = x.face(n + 1, i, sj);
          SimplexId rhs;
          if (i < j) rhs = x.degeneracy(n - 1, j - 1, x.face(n, i, s));
          else if (i == j || i == j + 1) rhs = s;
          else rhs = x.degeneracy(n - 1, j, x.face(n, i - 1, s));
          if (lhs != rhs) fail("ds", n, i, j, s);
        }
      }
  for (int n = 0; n + 2 <= K; ++n)
    for (SimplexId s = 0; s < x.count(n); ++s)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          if (x.degeneracy(n + 1, i, x.degeneracy(n, j, s)) != x.degeneracy(n + 1, j + 1, x.degeneracy(n, i, s)))
            fail("ss", n, i, j, s);
  return r;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

// Nondecreasing surjections [m] -> [k], lexicographic.
std::vector<std::vector<int>> surjections(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur{0};
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == m + 1) {
      if (cur.back() == k) out.push_back(cur);
      return;
    }
    int last = cur.back();
    for (int step : {0, 1}) {
      if (last + step > k) continue;
      int remaining = m + 1 - static_cast<int>(cur.size()) - 1;
      if (k - (last + step) > remaining) continue;
      cur.push_back(last + step);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace

TruncatedSSet from_nondegenerate(const NondegenerateData& data, int truncation) {
  using Key = std::tuple<int, int, std::vector<int>>;  // (dimension, nondegenerate index, surjection)
  const int top = static_cast<int>(data.faces.size()) - 1;
  if (top < 0) throw InputError("no nondegenerate simplices");
  std::vector<std::vector<Key>> simplices(static_cast<std::size_t>(truncation) + 1);
  std::vector<std::map<Key, int>> index(static_cast<std::size_t>(truncation) + 1);
  for (int m = 0; m <= truncation; ++m) {
    for (int k = 0; k <= std::min(m, top); ++k) {
      auto surj = surjections(m, k);
      for (int s = 0; s < static_cast<int>(data.faces[static_cast<std::size_t>(k)].size()); ++s)
        for (const auto& eta : surj) {
          Key key{k, s, eta};
          index[static_cast<std::size_t>(m)][key] = static_cast<int>(simplices[static_cast<std::size_t>(m)].size());
          simplices[static_cast<std::size_t>(m)].push_back(key);
        }
    }
  }
  auto face_of = [&](const Key& key, int i) -> Key {
    auto [k, s, eta] = key;
    int j = eta[static_cast<std::size_t>(i)];
    std::vector<int> rest = eta;
    rest.erase(rest.begin() + i);
    if (std::find(rest.begin(), rest.end(), j) != rest.end()) return {k, s, rest};
    for (int& v : rest)
      if (v > j) --v;
    const auto& fl = data.faces[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
    if (static_cast<int>(fl.size()) != k + 1) throw InputError("nondegenerate simplex with wrong number of faces");
    return {k - 1, fl[static_cast<std::size_t>(j)], rest};
  };
  std::vector<int> counts;
  std::vector<std::vector<TruncatedSSet::Table>> faces(static_cast<std::size_t>(truncation) + 1);
  std::vector<std::vector<TruncatedSSet::Table>> degens(static_cast<std::size_t>(truncation));
  for (int m = 0; m <= truncation; ++m) {
    const auto& level = simplices[static_cast<std::size_t>(m)];
    counts.push_back(static_cast<int>(level.size()));
    if (m >= 1) {
      for (int i = 0; i <= m; ++i) {
        TruncatedSSet::Table t;
        for (const auto& key : level) t.push_back(index[static_cast<std::size_t>(m - 1)].at(face_of(key, i)));
        faces[static_cast<std::size_t>(m)].push_back(std::move(t));
      }
    }
    if (m < truncation) {
      for (int i = 0; i <= m; ++i) {
        TruncatedSSet::Table t;
        for (const auto& [k, s, eta] : level) {
          std::vector<int> e = eta;
          e.insert(e.begin() + i, eta[static_cast<std::size_t>(i)]);
          t.push_back(index[static_cast<std::size_t>(m + 1)].at(Key{k, s, e}));
        }
        degens[static_cast<std::size_t>(m)].push_back(std::move(t));
      }
    }
  }
  return TruncatedSSet(truncation, std::move(counts), std::move(faces), std::move(degens));
}

namespace {

NondegenerateData subsets_of_simplex(int n, int max_dim) {
  NondegenerateData d;
  std::vector<std::map<std::vector<int>, int>> ids(static_cast<std::size_t>(max_dim) + 1);
  std::vector<std::vector<std::vector<int>>> by_dim(static_cast<std::size_t>(max_dim) + 1);
  for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
    std::vector<int> s;
    for (int v = 0; v <= n; ++v)
      if (mask & (1 << v)) s.push_back(v);
    int dim = static_cast<int>(s.size()) - 1;
    if (dim <= max_dim) by_dim[static_cast<std::size_t>(dim)].push_back(s);
  }
  d.faces.resize(static_cast<std::size_t>(max_dim) + 1);
  for (int k = 0; k <= max_dim; ++k) {
    auto& lv = by_dim[static_cast<std::size_t>(k)];
    std::sort(lv.begin(), lv.end());
    for (std::size_t s = 0; s < lv.size(); ++s) ids[static_cast<std::size_t>(k)][lv[s]] = static_cast<int>(s);
    for (const auto& s : lv) {
      std::vector<int> fl;
      if (k > 0)
        for (int i = 0; i <= k; ++i) {
          auto f = s;
          f.erase(f.begin() + i);
          fl.push_back(ids[static_cast<std::size_t>(k - 1)].at(f));
        }
      d.faces[static_cast<std::size_t>(k)].push_back(fl);
    }
  }
  return d;
}

}  // namespace

TruncatedSSet standard_simplex(int n, int truncation) {
  if (n < 0) throw InputError("negative simplex dimension");
  return from_nondegenerate(subsets_of_simplex(n, n), truncation);
}

TruncatedSSet boundary_of_simplex3(int truncation) { return from_nondegenerate(subsets_of_simplex(3, 2), truncation); }

TruncatedSSet glued_triangulations_w3(int truncation) {
  NondegenerateData d;
  d.faces = {
      {{}, {}, {}, {}},
      // 01, 12, 23, 02, 03 (first triangulation), 13, 03' (second); faces are (target, source)
      {{1, 0}, {2, 1}, {3, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 0}},
      // 012, 023 | 013, 123
      {{1, 3, 0}, {2, 4, 3}, {5, 6, 0}, {2, 5, 1}},
  };
  return from_nondegenerate(d, truncation);
}

TruncatedSSet doubled_triangle(int truncation) {
  NondegenerateData d;
  d.faces = {
      {{}, {}, {}},
      {{1, 0}, {2, 1}, {2, 0}, {2, 0}},  // 01, 12, 02, 02'
      {{1, 2, 0}, {1, 3, 0}},
  };
  return from_nondegenerate(d, truncation);
}

TruncatedSSet point_sset(int truncation) {
  NondegenerateData d;
  d.faces = {{{}}};
  return from_nondegenerate(d, truncation);
}

// ---------------------------------------------------------------------------
// Spiny, reduced

CheckResult is_spiny(const TruncatedSSet& x) {
  for (int n = 2; n <= x.truncation(); ++n) {
    std::map<std::vector<SimplexId>, SimplexId> seen;
    for (SimplexId s = 0; s < x.count(n); ++s) {
      auto sp = x.spine(n, s);
      auto [it, fresh] = seen.emplace(sp, s);
      if (!fresh) return CheckResult::fail(x.truncation(), n, {it->second, s}, "simplices share spine " + format_tuple(sp));
    }
  }
  return CheckResult::pass(x.truncation());
}

bool is_reduced(const TruncatedSSet& x) { return x.count(0) == 1; }

// ---------------------------------------------------------------------------
// Triangulations and membranes

std::string Triangulation::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const auto& t = triangles[i];
    os << (i ? "," : "") << t[0] << t[1] << t[2];
  }
  os << '}';
  return os.str();
}

namespace {

std::vector<std::vector<std::array<int, 3>>> triangulate(int lo, int hi) {
  if (hi - lo < 2) return {{}};
  std::vector<std::vector<std::array<int, 3>>> out;
  for (int k = hi - 1; k > lo; --k)
    for (const auto& l : triangulate(lo, k))
      for (const auto& r : triangulate(k, hi)) {
        std::vector<std::array<int, 3>> t{{lo, k, hi}};
        t.insert(t.end(), l.begin(), l.end());
        t.insert(t.end(), r.begin(), r.end());
        std::sort(t.begin(), t.end());
        out.push_back(std::move(t));
      }
  return out;
}

std::vector<int> iota_vec(int from, int to) {
  std::vector<int> v;
  for (int i = from; i <= to; ++i) v.push_back(i);
  return v;
}

// Positions of `sub` inside the increasing list `cell`.
std::vector<int> positions(const std::vector<int>& cell, const std::vector<int>& sub) {
  std::vector<int> pos;
  for (int v : sub) pos.push_back(static_cast<int>(std::lower_bound(cell.begin(), cell.end(), v) - cell.begin()));
  return pos;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<Triangulation> triangulations(int n) {
  if (n < 2) throw InputError("triangulations need a polygon with at least three vertices (n >= 2)");
  std::vector<Triangulation> out;
  for (auto& t : triangulate(0, n)) out.push_back({n, std::move(t)});
  return out;
}

SimplicialSubset SimplicialSubset::spine(int n) {
  SimplicialSubset s{SubsetKind::Spine, n, {}};
  if (n == 0) s.cells.push_back({0});
  for (int i = 0; i < n; ++i) s.cells.push_back({i, i + 1});
  return s;
}

SimplicialSubset SimplicialSubset::of(const Triangulation& t) {
  SimplicialSubset s{SubsetKind::Triangulation, t.n, {}};
  for (const auto& tri : t.triangles) s.cells.push_back({tri[0], tri[1], tri[2]});
  return s;
}

SimplicialSubset SimplicialSubset::boundary(int n) {
  if (n < 1) throw InputError("boundary needs n >= 1");
  SimplicialSubset s{SubsetKind::Boundary, n, {}};
  for (int i = 0; i <= n; ++i) {
    auto c = iota_vec(0, n);
    c.erase(c.begin() + i);
    s.cells.push_back(c);
  }
  return s;
}

SimplicialSubset SimplicialSubset::full(int n) { return {SubsetKind::Full, n, {iota_vec(0, n)}}; }

std::vector<SimplexId> MembraneAssignment::spine(const TruncatedSSet& x) const {
  std::vector<SimplexId> out;
  for (int i = 0; i < subset.n; ++i) {
    bool found = false;
    for (std::size_t c = 0; c < subset.cells.size() && !found; ++c) {
      const auto& cell = subset.cells[c];
      if (std::binary_search(cell.begin(), cell.end(), i) && std::binary_search(cell.begin(), cell.end(), i + 1)) {
        out.push_back(x.restrict_to(static_cast<int>(cell.size()) - 1, simplices[c], positions(cell, {i, i + 1})));
        found = true;
      }
    }
    if (!found) return {};
  }
  return out;
}

std::vector<MembraneAssignment> membrane_set(const TruncatedSSet& x, const SimplicialSubset& subset) {
  const auto& cells = subset.cells;
  for (const auto& c : cells)
    if (static_cast<int>(c.size()) - 1 > x.truncation())
      throw InputError("membrane cell of dimension " + std::to_string(c.size() - 1) + " exceeds truncation " +
                       std::to_string(x.truncation()));
  if (subset.n > x.truncation() && subset.kind != SubsetKind::Boundary)
    throw InputError("level " + std::to_string(subset.n) + " exceeds truncation " + std::to_string(x.truncation()));

  struct Constraint {
    std::size_t other;
    std::vector<int> mine, theirs;  // positions of the shared vertices
  };
  const std::size_t C = cells.size();
  std::vector<std::vector<Constraint>> cons(C);
  std::vector<int> anchor(C, -1);  // constraint used for bucketing
  for (std::size_t c = 0; c < C; ++c)
    for (std::size_t o = 0; o < c; ++o) {
      auto shared = intersect(cells[c], cells[o]);
      if (shared.empty()) continue;
      cons[c].push_back({o, positions(cells[c], shared), positions(cells[o], shared)});
      if (anchor[c] < 0 || cons[c].back().mine.size() > cons[c][static_cast<std::size_t>(anchor[c])].mine.size())
        anchor[c] = static_cast<int>(cons[c].size()) - 1;
    }
  // bucket[c][face value] = candidates of cell c whose anchored face is that value
  std::vector<std::map<SimplexId, std::vector<SimplexId>>> bucket(C);
  std::vector<std::vector<SimplexId>> all(C);
  for (std::size_t c = 0; c < C; ++c) {
    int dim = static_cast<int>(cells[c].size()) - 1;
    for (SimplexId s = 0; s < x.count(dim); ++s) {
      all[c].push_back(s);
      if (anchor[c] >= 0)
        bucket[c][x.restrict_to(dim, s, cons[c][static_cast<std::size_t>(anchor[c])].mine)].push_back(s);
    }
  }
  std::vector<MembraneAssignment> out;
  std::vector<SimplexId> cur(C, -1);
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == C) {
      out.push_back({subset, cur});
      return;
    }
    int dim = static_cast<int>(cells[c].size()) - 1;
    const std::vector<SimplexId>* cand = &all[c];
    static const std::vector<SimplexId> none;
    if (anchor[c] >= 0) {
      const auto& a = cons[c][static_cast<std::size_t>(anchor[c])];
      int odim = static_cast<int>(cells[a.other].size()) - 1;
      auto it = bucket[c].find(x.restrict_to(odim, cur[a.other], a.theirs));
      cand = it == bucket[c].end() ? &none : &it->second;
    }
    for (SimplexId s : *cand) {
      bool ok = true;
      for (const auto& k : cons[c]) {
        int odim = static_cast<int>(cells[k.other].size()) - 1;
        if (x.restrict_to(dim, s, k.mine) != x.restrict_to(odim, cur[k.other], k.theirs)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      cur[c] = s;
      rec(c + 1);
    }
    cur[c] = -1;
  };
  rec(0);
  return out;
}

MembraneAssignment restrict_membrane(const TruncatedSSet& x, SimplexId sigma, const SimplicialSubset& subset) {
  MembraneAssignment m{subset, {}};
  for (const auto& cell : subset.cells) m.simplices.push_back(x.restrict_to(subset.n, sigma, cell));
  return m;
}

MembraneCensus membrane_census(const TruncatedSSet& x, const SimplicialSubset& subset) {
  if (subset.n > x.truncation()) throw InputError("membrane level exceeds truncation");
  std::map<std::vector<SimplexId>, std::vector<SimplexId>> fillers;
  for (SimplexId s = 0; s < x.count(subset.n); ++s)
    fillers[restrict_membrane(x, s, subset).simplices].push_back(s);
  MembraneCensus census;
  auto ms = membrane_set(x, subset);
  census.total = ms.size();
  for (auto& m : ms) {
    auto it = fillers.find(m.simplices);
    if (it == fillers.end()) census.unfilled.push_back(std::move(m));
    else if (it->second.size() > 1) census.multiply_filled.emplace_back(std::move(m), it->second);
  }
  return census;
}

namespace {

// Sorts membranes by spine so the reported witness does not depend on the
// backtracking order.
void sort_by_spine(const TruncatedSSet& x, std::vector<MembraneAssignment>& ms) {
  std::stable_sort(ms.begin(), ms.end(), [&](const auto& a, const auto& b) {
    return std::pair(a.spine(x), a.simplices) < std::pair(b.spine(x), b.simplices);
  });
}

}  // namespace

CheckResult is_two_segal(const TruncatedSSet& x) {
  const int K = x.truncation();
  for (int n = 3; n <= K; ++n)
    for (const auto& t : triangulations(n)) {
      auto census = membrane_census(x, SimplicialSubset::of(t));
      if (!census.unfilled.empty()) {
        sort_by_spine(x, census.unfilled);
        const auto& m = census.unfilled.front();
        return CheckResult::fail(K, n, m.spine(x),
                                 "membrane " + format_tuple(m.simplices) + " on triangulation " + t.to_string() +
                                     " has no filler (" + std::to_string(census.unfilled.size()) + " unfilled)");
      }
      if (!census.multiply_filled.empty()) {
        const auto& [m, f] = census.multiply_filled.front();
        return CheckResult::fail(K, n, m.spine(x),
                                 "membrane on triangulation " + t.to_string() + " has fillers " + format_tuple(f));
      }
    }
  return CheckResult::pass(K);
}

CheckResult is_weakly_two_segal(const TruncatedSSet& x) {
  const int K = x.truncation();
  for (int n = 3; n <= K; ++n) {
    auto ts = triangulations(n);
    // spine -> per triangulation, the membranes with that spine
    std::map<std::vector<SimplexId>, std::vector<std::vector<std::vector<SimplexId>>>> by_spine;
    for (std::size_t k = 0; k < ts.size(); ++k)
      for (const auto& m : membrane_set(x, SimplicialSubset::of(ts[k]))) {
        auto& slot = by_spine[m.spine(x)];
        slot.resize(ts.size());
        slot[k].push_back(m.simplices);
      }
    // spine -> families realized by n-simplices, with their fillers
    std::map<std::vector<SimplexId>, std::map<std::vector<std::vector<SimplexId>>, std::vector<SimplexId>>> realized;
    for (SimplexId s = 0; s < x.count(n); ++s) {
      std::vector<std::vector<SimplexId>> fam;
      for (const auto& t : ts) fam.push_back(restrict_membrane(x, s, SimplicialSubset::of(t)).simplices);
      realized[x.spine(n, s)][fam].push_back(s);
    }
    for (const auto& [sp, per_t] : by_spine) {
      std::size_t families = 1;
      for (const auto& v : per_t) families *= v.size();
      if (families == 0) continue;
      const auto& got = realized[sp];
      for (const auto& [fam, fill] : got)
        if (fill.size() > 1)
          return CheckResult::fail(K, n, sp, "family over " + std::to_string(ts.size()) +
                                                 " triangulations has fillers " + format_tuple(fill));
      if (got.size() < families)
        return CheckResult::fail(K, n, sp,
                                 std::to_string(families - got.size()) + " of " + std::to_string(families) +
                                     " compatible families over " + std::to_string(ts.size()) +
                                     " triangulations have no filler");
    }
  }
  return CheckResult::pass(K);
}

CheckResult is_coskeletal_2(const TruncatedSSet& x) {
  const int K = x.truncation();
  for (int n = 3; n <= K; ++n) {
    auto census = membrane_census(x, SimplicialSubset::boundary(n));
    if (!census.unfilled.empty()) {
      sort_by_spine(x, census.unfilled);
      const auto& m = census.unfilled.front();
      return CheckResult::fail(K, n, m.spine(x), "boundary " + format_tuple(m.simplices) + " has no filler");
    }
    if (!census.multiply_filled.empty()) {
      const auto& [m, f] = census.multiply_filled.front();
      return CheckResult::fail(K, n, m.spine(x), "boundary has fillers " + format_tuple(f));
    }
  }
  return CheckResult::pass(K);
}

CheckResult is_inverseless_sset(const TruncatedSSet& x) {
  if (x.truncation() < 2) throw InputError("inverseless check needs level 2");
  for (SimplexId s = 0; s < x.count(2); ++s) {
    SimplexId e = x.face(2, 1, s);
    SimplexId v = x.face(1, 0, e);
    if (e != x.degeneracy(0, 0, v)) continue;
    if (s != x.degeneracy(1, 0, e))
      return CheckResult::fail(2, 2, {x.face(2, 2, s), x.face(2, 0, s)},
                               "2-simplex " + std::to_string(s) + " has degenerate d1 but is not totally degenerate");
  }
  return CheckResult::pass(2);
}

// ---------------------------------------------------------------------------
// Coskeleton

TruncatedSSet cosk2_extend(const TruncatedSSet& x2, int target) {
  if (x2.truncation() < 2) throw InputError("cosk2_extend needs a 2-truncation");
  if (target < 2) throw InputError("target level must be >= 2");
  std::vector<int> counts;
  std::vector<std::vector<TruncatedSSet::Table>> faces(static_cast<std::size_t>(target) + 1);
  std::vector<std::vector<TruncatedSSet::Table>> degens(static_cast<std::size_t>(target));
  for (int n = 0; n <= 2; ++n) {
    counts.push_back(x2.count(n));
    if (n >= 1)
      for (int i = 0; i <= n; ++i) faces[static_cast<std::size_t>(n)].push_back(x2.face_table(n, i));
    if (n < 2)
      for (int i = 0; i <= n; ++i) degens[static_cast<std::size_t>(n)].push_back(x2.degeneracy_table(n, i));
  }
  auto face = [&](int n, int i, SimplexId s) { return faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][static_cast<std::size_t>(s)]; };
  auto degen = [&](int n, int i, SimplexId s) { return degens[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][static_cast<std::size_t>(s)]; };

  for (int n = 3; n <= target; ++n) {
    const int m = n - 1;  // level of the faces
    // bucket level-m simplices by d_0 for the first constraint
    std::map<SimplexId, std::vector<SimplexId>> by_d0;
    for (SimplexId s = 0; s < counts[static_cast<std::size_t>(m)]; ++s) by_d0[face(m, 0, s)].push_back(s);
    std::vector<std::vector<SimplexId>> families;
    std::vector<SimplexId> y(static_cast<std::size_t>(n) + 1);
    std::function<void(int)> rec = [&](int j) {
      if (j > n) {
        families.push_back(y);
        return;
      }
      std::vector<SimplexId> cand;
      if (j == 0) {
        cand.resize(static_cast<std::size_t>(counts[static_cast<std::size_t>(m)]));
        std::iota(cand.begin(), cand.end(), 0);
      } else {
        auto it = by_d0.find(face(m, j - 1, y[0]));  // d_0 y_j = d_{j-1} y_0
        if (it == by_d0.end()) return;
        cand = it->second;
      }
      for (SimplexId s : cand) {
        bool ok = true;
        for (int i = 1; i < j && ok; ++i) ok = face(m, i, s) == face(m, j - 1, y[static_cast<std::size_t>(i)]);
        if (!ok) continue;
        y[static_cast<std::size_t>(j)] = s;
        rec(j + 1);
      }
    };
    rec(0);
    auto spine_key = [&](const std::vector<SimplexId>& fam) {
      // edges 0..n-2 from y_n (vertices 0..n-1), the last edge from y_0
      std::vector<SimplexId> sp;
      SimplexId top = fam[static_cast<std::size_t>(n)];
      for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> verts{i, i + 1};
        SimplexId s = top;
        int level = m;
        for (int j = m; j >= 0; --j) {
          if (j == verts[0] || j == verts[1]) continue;
          s = face(level, j, s);
          --level;
        }
        sp.push_back(s);
      }
      SimplexId s = fam[0];
      for (int level = m, j = m - 2; j >= 0; --j, --level) s = face(level, j, s);
      sp.push_back(s);
      return sp;
    };
    std::vector<std::pair<std::vector<SimplexId>, std::vector<SimplexId>>> keyed;
    for (auto& f : families) keyed.emplace_back(spine_key(f), std::move(f));
    std::sort(keyed.begin(), keyed.end());
    std::map<std::vector<SimplexId>, SimplexId> id;
    for (std::size_t k = 0; k < keyed.size(); ++k) id[keyed[k].second] = static_cast<SimplexId>(k);
    counts.push_back(static_cast<int>(keyed.size()));
    for (int i = 0; i <= n; ++i) {
      TruncatedSSet::Table t;
      for (const auto& kf : keyed) t.push_back(kf.second[static_cast<std::size_t>(i)]);
      faces[static_cast<std::size_t>(n)].push_back(std::move(t));
    }
    // degeneracies level m -> n, determined by their faces
    for (int j = 0; j <= m; ++j) {
      TruncatedSSet::Table t;
      for (SimplexId z = 0; z < counts[static_cast<std::size_t>(m)]; ++z) {
        std::vector<SimplexId> w(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
          if (i < j) w[static_cast<std::size_t>(i)] = degen(m - 1, j - 1, face(m, i, z));
          else if (i == j || i == j + 1) w[static_cast<std::size_t>(i)] = z;
          else w[static_cast<std::size_t>(i)] = degen(m - 1, j, face(m, i - 1, z));
        }
        auto it = id.find(w);
        if (it == id.end()) throw ValidationError("degenerate boundary family missing; input violates simplicial identities");
        t.push_back(it->second);
      }
      degens[static_cast<std::size_t>(m)].push_back(std::move(t));
    }
  }
  return TruncatedSSet(target, std::move(counts), std::move(faces), std::move(degens));
}

// ---------------------------------------------------------------------------
// Isomorphisms

bool is_simplicial_map(const TruncatedSSet& x, const TruncatedSSet& y, const SimplicialMap& f) {
  const int K = std::min(x.truncation(), y.truncation());
  if (static_cast<int>(f.size()) < K + 1) return false;
  for (int n = 0; n <= K; ++n) {
    const auto& fn = f[static_cast<std::size_t>(n)];
    if (static_cast<int>(fn.size()) != x.count(n)) return false;
    for (SimplexId v : fn)
      if (v < 0 || v >= y.count(n)) return false;
  }
  for (int n = 1; n <= K; ++n)
    for (SimplexId s = 0; s < x.count(n); ++s)
      for (int i = 0; i <= n; ++i)
        if (f[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(x.face(n, i, s))] !=
            y.face(n, i, f[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)]))
          return false;
  for (int n = 0; n < K; ++n)
    for (SimplexId s = 0; s < x.count(n); ++s)
      for (int i = 0; i <= n; ++i)
        if (f[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(x.degeneracy(n, i, s))] !=
            y.degeneracy(n, i, f[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)]))
          return false;
  return true;
}

bool is_bijective(const TruncatedSSet& x, const TruncatedSSet& y, const SimplicialMap& f) {
  const int K = std::min(x.truncation(), y.truncation());
  for (int n = 0; n <= K; ++n) {
    if (x.count(n) != y.count(n)) return false;
    std::vector<char> hit(static_cast<std::size_t>(y.count(n)), 0);
    for (SimplexId v : f[static_cast<std::size_t>(n)]) {
      if (hit[static_cast<std::size_t>(v)]) return false;
      hit[static_cast<std::size_t>(v)] = 1;
    }
  }
  return true;
}

namespace {

// Joint colour refinement over faces and cofaces; colours are comparable
// between the two sets because they share one palette.
std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> refine(const TruncatedSSet& x,
                                                                               const TruncatedSSet& y) {
  const int K = x.truncation();
  auto initial = [&](const TruncatedSSet& s) {
    std::vector<std::vector<std::vector<int>>> sig(static_cast<std::size_t>(K) + 1);
    for (int n = 0; n <= K; ++n)
      for (SimplexId v = 0; v < s.count(n); ++v) {
        std::vector<int> g{n};
        for (int i = 0; n > 0 && i < n; ++i) g.push_back(v == s.degeneracy(n - 1, i, s.face(n, i, v)) ? 1 : 0);
        sig[static_cast<std::size_t>(n)].push_back(g);
      }
    return sig;
  };
  auto sx = initial(x), sy = initial(y);
  std::vector<std::vector<int>> cx, cy;
  std::size_t distinct = 0;
  for (int round = 0; round < 32; ++round) {
    std::map<std::vector<int>, int> palette;
    auto paint = [&](const auto& sig) {
      std::vector<std::vector<int>> col(sig.size());
      for (std::size_t n = 0; n < sig.size(); ++n)
        for (const auto& g : sig[n]) col[n].push_back(palette.emplace(g, static_cast<int>(palette.size())).first->second);
      return col;
    };
    cx = paint(sx);
    cy = paint(sy);
    if (palette.size() == distinct) break;
    distinct = palette.size();
    auto next = [&](const TruncatedSSet& s, const std::vector<std::vector<int>>& col) {
      std::vector<std::vector<std::vector<int>>> sig(static_cast<std::size_t>(K) + 1);
      for (int n = 0; n <= K; ++n) {
        std::vector<std::vector<std::vector<int>>> cof(static_cast<std::size_t>(s.count(n)),
                                                       std::vector<std::vector<int>>(static_cast<std::size_t>(n) + 2));
        if (n < K)
          for (SimplexId u = 0; u < s.count(n + 1); ++u)
            for (int i = 0; i <= n + 1; ++i)
              cof[static_cast<std::size_t>(s.face(n + 1, i, u))][static_cast<std::size_t>(i)].push_back(
                  col[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(u)]);
        for (SimplexId v = 0; v < s.count(n); ++v) {
          std::vector<int> g{col[static_cast<std::size_t>(n)][static_cast<std::size_t>(v)], -1};
          for (int i = 0; n > 0 && i <= n; ++i) g.push_back(col[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(s.face(n, i, v))]);
          for (auto& c : cof[static_cast<std::size_t>(v)]) {
            std::sort(c.begin(), c.end());
            g.push_back(-2);
            g.insert(g.end(), c.begin(), c.end());
          }
          sig[static_cast<std::size_t>(n)].push_back(std::move(g));
        }
      }
      return sig;
    };
    sx = next(x, cx);
    sy = next(y, cy);
  }
  return {cx, cy};
}

}  // namespace

std::optional<SimplicialMap> find_isomorphism(const TruncatedSSet& x, const TruncatedSSet& y) {
  if (x.truncation() != y.truncation() || x.counts() != y.counts()) return std::nullopt;
  const int K = x.truncation();
  auto [cx, cy] = refine(x, y);
  SimplicialMap f(static_cast<std::size_t>(K) + 1), inv(static_cast<std::size_t>(K) + 1);
  std::vector<std::pair<int, SimplexId>> order;
  for (int n = 0; n <= K; ++n) {
    f[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(x.count(n)), -1);
    inv[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(y.count(n)), -1);
    for (SimplexId s = 0; s < x.count(n); ++s) order.emplace_back(n, s);
  }
  // candidates per colour
  std::vector<std::map<int, std::vector<SimplexId>>> by_colour(static_cast<std::size_t>(K) + 1);
  for (int n = 0; n <= K; ++n)
    for (SimplexId s = 0; s < y.count(n); ++s) by_colour[static_cast<std::size_t>(n)][cy[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)]].push_back(s);

  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == order.size()) return true;
    auto [n, s] = order[k];
    auto consistent = [&](SimplexId t) {
      if (inv[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)] != -1) return false;
      for (int i = 0; n > 0 && i <= n; ++i)
        if (f[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(x.face(n, i, s))] != y.face(n, i, t)) return false;
      for (int i = 0; n > 0 && i < n; ++i) {
        SimplexId base = x.face(n, i, s);
        if (x.degeneracy(n - 1, i, base) == s && y.degeneracy(n - 1, i, f[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(base)]) != t)
          return false;
      }
      return true;
    };
    auto it = by_colour[static_cast<std::size_t>(n)].find(cx[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)]);
    if (it == by_colour[static_cast<std::size_t>(n)].end()) return false;
    for (SimplexId t : it->second) {
      if (!consistent(t)) continue;
      f[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)] = t;
      inv[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)] = s;
      if (rec(k + 1)) return true;
      f[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)] = -1;
      inv[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  if (!is_simplicial_map(x, y, f)) return std::nullopt;
  return f;
}

}  // namespace simpeff
