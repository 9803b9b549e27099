#include "simpeff/nerve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace simpeff {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string name) : mul_(std::move(table)), name_(std::move(name)) {
  const int n = static_cast<int>(mul_.size());
  if (n == 0) throw ValidationError("group table is empty");
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != n) throw ValidationError("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw ValidationError("group table entry out of range");
  }
  unit_ = -1;
  for (int e = 0; e < n && unit_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) unit_ = e;
  }
  if (unit_ < 0) throw ValidationError("group table has no unit");
  inv_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == unit_ && mul(b, a) == unit_) inv_[static_cast<std::size_t>(a)] = b;
  for (int a = 0; a < n; ++a)
    if (inv_[static_cast<std::size_t>(a)] < 0) throw ValidationError("element " + std::to_string(a) + " has no inverse");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw ValidationError("group table is not associative at " + format_tuple({a, b, c}));
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return FiniteGroup(std::move(t), "Z/" + std::to_string(n));
}

FiniteGroup FiniteGroup::quaternion() {
  // id = 2*unit + sign, units 1,i,j,k
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int sign = (a % 2) ^ (b % 2) ^ unit_sign[ua][ub];
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 2 * unit_mul[ua][ub] + sign;
    }
  return FiniteGroup(std::move(t), "Q8");
}

FiniteGroup FiniteGroup::dihedral4() {
  // id = a + 4b for r^a s^b; s r = r^-1 s
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int a = x % 4, b = x / 4, c = y % 4, d = y / 4;
      int rot = (a + (b ? 4 - c : c)) % 4;
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = rot + 4 * ((b + d) % 2);
    }
  return FiniteGroup(std::move(t), "D4");
}

FiniteGroup FiniteGroup::symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (std::size_t x = 0; x < 3; ++x) c[x] = perms[a][static_cast<std::size_t>(perms[b][x])];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup(std::move(t), "S3");
}

int FiniteGroup::pow(int a, int k) const {
  int r = unit_;
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_central(int z) const {
  if (z < 0 || z >= order()) return false;
  for (int a = 0; a < order(); ++a)
    if (!commute(a, z)) return false;
  return true;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    if (!is_central(a)) return false;
  return true;
}

std::string FiniteGroup::element_name(int a) const {
  if (name_ == "Q8") {
    static const char* names[] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return names[a];
  }
  return std::to_string(a);
}

PartialUnitalMagma FiniteGroup::total_magma() const {
  std::vector<PartialUnitalMagma::Entry> products;
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b) products.push_back({a, b, mul(a, b)});
  return PartialUnitalMagma(order(), unit_, products);
}

// ---------------------------------------------------------------------------

SimplexId LabelledNerve::id_of(const Tuple& t) const {
  if (t.size() >= tuples.size()) return -1;
  const auto& lv = tuples[t.size()];
  auto it = std::lower_bound(lv.begin(), lv.end(), t);
  if (it == lv.end() || *it != t) return -1;
  return static_cast<SimplexId>(it - lv.begin());
}

namespace {

// levels[n] for 1 <= n <= K must be lexicographically sorted; levels[0] is ignored.
LabelledNerve from_tuples(int K, int unit, const std::function<std::optional<int>(int, int)>& merge,
                          std::vector<std::vector<Tuple>> levels) {
  LabelledNerve out;
  levels[0] = {Tuple{}};
  out.tuples = std::move(levels);
  auto lookup = [&](const Tuple& t) {
    SimplexId id = out.id_of(t);
    if (id < 0) throw ValidationError("tuple " + format_tuple(t) + " is not a simplex; the levels are not closed under faces/degeneracies");
    return id;
  };
  std::vector<int> counts;
  std::vector<std::vector<TruncatedSSet::Table>> faces(static_cast<std::size_t>(K) + 1);
  std::vector<std::vector<TruncatedSSet::Table>> degens(static_cast<std::size_t>(K));
  for (int n = 0; n <= K; ++n) {
    const auto& lv = out.tuples[static_cast<std::size_t>(n)];
    counts.push_back(static_cast<int>(lv.size()));
    if (n >= 1)
      for (int i = 0; i <= n; ++i) {
        TruncatedSSet::Table t;
        for (const auto& tup : lv) {
          Tuple f;
          if (i == 0) f.assign(tup.begin() + 1, tup.end());
          else if (i == n) f.assign(tup.begin(), tup.end() - 1);
          else {
            auto p = merge(tup[static_cast<std::size_t>(i - 1)], tup[static_cast<std::size_t>(i)]);
            if (!p) throw ValidationError("inner face of " + format_tuple(tup) + " is undefined");
            f.assign(tup.begin(), tup.begin() + (i - 1));
            f.push_back(*p);
            f.insert(f.end(), tup.begin() + (i + 1), tup.end());
          }
          t.push_back(lookup(f));
        }
        faces[static_cast<std::size_t>(n)].push_back(std::move(t));
      }
    if (n < K)
      for (int i = 0; i <= n; ++i) {
        TruncatedSSet::Table t;
        for (const auto& tup : lv) {
          Tuple d = tup;
          d.insert(d.begin() + i, unit);
          t.push_back(lookup(d));
        }
        degens[static_cast<std::size_t>(n)].push_back(std::move(t));
      }
  }
  out.sset = TruncatedSSet(K, std::move(counts), std::move(faces), std::move(degens));
  return out;
}

}  // namespace

LabelledNerve labelled_nerve(const PartialUnitalMagma& m, const AssociativityDatum& a, int K) {
  if (K < 0) throw InputError("negative level bound");
  if (K >= 2 && a.max_arity() < K)
    throw InputError("associativity datum stops at arity " + std::to_string(a.max_arity()) + " below level " + std::to_string(K));
  std::vector<std::vector<Tuple>> levels(static_cast<std::size_t>(K) + 1);
  for (int n = 1; n <= K; ++n) {
    if (n == 1)
      for (ElementId x = 0; x < m.size(); ++x) levels[1].push_back({x});
    else
      levels[static_cast<std::size_t>(n)] = a.level(n);
  }
  return from_tuples(K, m.unit(), [&](int x, int y) { return m.product(x, y); }, std::move(levels));
}

TruncatedSSet nerve(const PartialUnitalMagma& m, const AssociativityDatum& a, int K) {
  return labelled_nerve(m, a, K).sset;
}

std::pair<PartialUnitalMagma, AssociativityDatum> magma_from_sset(const TruncatedSSet& x) {
  if (x.truncation() < 2) throw InputError("magma reconstruction needs level 2");
  if (!is_reduced(x)) throw InputError("simplicial set is not reduced");
  auto sp = is_spiny(x);
  if (!sp) throw InputError("simplicial set is not spiny: " + sp.detail);
  std::vector<PartialUnitalMagma::Entry> products;
  for (SimplexId s = 0; s < x.count(2); ++s) products.push_back({x.face(2, 2, s), x.face(2, 0, s), x.face(2, 1, s)});
  PartialUnitalMagma m(x.count(1), x.degeneracy(0, 0, 0), products);
  std::map<int, std::vector<Tuple>> levels;
  for (int n = 2; n <= x.truncation(); ++n) {
    auto& lv = levels[n];
    for (SimplexId s = 0; s < x.count(n); ++s) lv.push_back(x.spine(n, s));
  }
  return {std::move(m), AssociativityDatum(std::move(levels))};
}

LabelledNerve comm_nerve(const FiniteGroup& g, std::optional<int> torsion, int K) {
  if (torsion && *torsion < 2) throw InputError("torsion must be >= 2");
  std::vector<int> elems;
  for (int a = 0; a < g.order(); ++a)
    if (!torsion || g.pow(a, *torsion) == g.unit()) elems.push_back(a);
  std::vector<std::vector<Tuple>> levels(static_cast<std::size_t>(K) + 1);
  if (K >= 1)
    for (int a : elems) levels[1].push_back({a});
  for (int n = 2; n <= K; ++n)
    for (const auto& t : levels[static_cast<std::size_t>(n - 1)])
      for (int a : elems)
        if (std::all_of(t.begin(), t.end(), [&](int b) { return g.commute(a, b); })) {
          Tuple u = t;
          u.push_back(a);
          levels[static_cast<std::size_t>(n)].push_back(std::move(u));
        }
  return from_tuples(K, g.unit(), [&](int a, int b) { return std::optional<int>(g.mul(a, b)); }, std::move(levels));
}

LabelledNerve action_partial_group(const FiniteGroup& g, int z_size, const std::vector<std::vector<int>>& action,
                                   const std::vector<int>& y, int K) {
  if (static_cast<int>(action.size()) != g.order()) throw InputError("action table needs one row per group element");
  for (const auto& row : action) {
    if (static_cast<int>(row.size()) != z_size) throw InputError("action row has wrong length");
    for (int v : row)
      if (v < 0 || v >= z_size) throw InputError("action value out of range");
  }
  auto act = [&](int a, int z) { return action[static_cast<std::size_t>(a)][static_cast<std::size_t>(z)]; };
  for (int z = 0; z < z_size; ++z) {
    if (act(g.unit(), z) != z) throw ValidationError("unit does not act trivially");
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        if (act(g.mul(a, b), z) != act(a, act(b, z))) throw ValidationError("action is not compatible with the product");
  }
  std::set<int> Y(y.begin(), y.end());
  if (Y.empty()) throw InputError("subset Y is empty");
  for (int v : Y)
    if (v < 0 || v >= z_size) throw InputError("Y element out of range");
  // level tuples paired with the set of chain endpoints they reach
  std::vector<std::pair<Tuple, std::set<int>>> frontier{{Tuple{}, Y}};
  std::vector<std::vector<Tuple>> levels(static_cast<std::size_t>(K) + 1);
  for (int n = 1; n <= K; ++n) {
    std::vector<std::pair<Tuple, std::set<int>>> next;
    for (const auto& [t, ends] : frontier)
      for (int a = 0; a < g.order(); ++a) {
        std::set<int> reach;
        for (int e : ends)
          if (Y.count(act(a, e))) reach.insert(act(a, e));
        if (reach.empty()) continue;
        Tuple u = t;
        u.push_back(a);
        levels[static_cast<std::size_t>(n)].push_back(u);
        next.emplace_back(std::move(u), std::move(reach));
      }
    frontier = std::move(next);
  }
  return from_tuples(K, g.unit(), [&](int a, int b) { return std::optional<int>(g.mul(b, a)); }, std::move(levels));
}

// ---------------------------------------------------------------------------

EffectFunctorResult effect_functor(const FiniteEffectAlgebra& e, const TruncatedSSet& x) {
  const auto& m = e.magma;
  const int K = x.truncation();
  const ElementId zero = e.zero(), one = e.one();
  EffectFunctorResult out;
  out.functions.resize(static_cast<std::size_t>(K) + 1);
  std::vector<std::map<std::vector<ElementId>, SimplexId>> index(static_cast<std::size_t>(K) + 1);

  auto check_order_free = [&](const std::vector<ElementId>& phi) {
    std::vector<ElementId> support;
    for (ElementId v : phi)
      if (v != zero) support.push_back(v);
    if (support.size() > 4) return;
    std::sort(support.begin(), support.end());
    std::optional<ElementId> total;
    do {
      bool ok = is_multiplicable_recursive(m, support);
      ElementId acc = zero;
      for (ElementId v : support) acc = ok ? *m.product(acc, v) : acc;
      if (!ok || (total && *total != acc))
        throw ValidationError("multiplicability of " + format_tuple(support) + " depends on the ordering");
      total = acc;
    } while (std::next_permutation(support.begin(), support.end()));
  };

  for (int n = 0; n <= K; ++n) {
    const int size = x.count(n);
    std::vector<ElementId> phi(static_cast<std::size_t>(size));
    auto& level = out.functions[static_cast<std::size_t>(n)];
    std::function<void(int, ElementId)> rec = [&](int k, ElementId acc) {
      if (k == size) {
        if (acc == one) level.push_back(phi);
        return;
      }
      for (ElementId v = 0; v < m.size(); ++v) {
        auto next = m.product(acc, v);
        if (!next) continue;
        phi[static_cast<std::size_t>(k)] = v;
        rec(k + 1, *next);
      }
    };
    rec(0, zero);
    for (std::size_t i = 0; i < level.size(); ++i) {
      check_order_free(level[i]);
      index[static_cast<std::size_t>(n)][level[i]] = static_cast<SimplexId>(i);
    }
  }

  auto push = [&](const std::vector<ElementId>& phi, const TruncatedSSet::Table& map, int target) {
    std::vector<ElementId> out_phi(static_cast<std::size_t>(x.count(target)), zero);
    for (std::size_t s = 0; s < phi.size(); ++s) {
      auto& slot = out_phi[static_cast<std::size_t>(map[s])];
      auto sum = m.product(slot, phi[s]);
      if (!sum) throw ValidationError("fibre sum undefined");
      slot = *sum;
    }
    auto it = index[static_cast<std::size_t>(target)].find(out_phi);
    if (it == index[static_cast<std::size_t>(target)].end()) throw ValidationError("pushforward leaves E(X)");
    return it->second;
  };

  std::vector<int> counts;
  std::vector<std::vector<TruncatedSSet::Table>> faces(static_cast<std::size_t>(K) + 1);
  std::vector<std::vector<TruncatedSSet::Table>> degens(static_cast<std::size_t>(K));
  for (int n = 0; n <= K; ++n) {
    const auto& level = out.functions[static_cast<std::size_t>(n)];
    counts.push_back(static_cast<int>(level.size()));
    if (n >= 1)
      for (int i = 0; i <= n; ++i) {
        TruncatedSSet::Table t;
        for (const auto& phi : level) t.push_back(push(phi, x.face_table(n, i), n - 1));
        faces[static_cast<std::size_t>(n)].push_back(std::move(t));
      }
    if (n < K)
      for (int i = 0; i <= n; ++i) {
        TruncatedSSet::Table t;
        for (const auto& phi : level) t.push_back(push(phi, x.degeneracy_table(n, i), n + 1));
        degens[static_cast<std::size_t>(n)].push_back(std::move(t));
      }
  }
  out.sset = TruncatedSSet(K, std::move(counts), std::move(faces), std::move(degens));
  return out;
}

TruncatedSSet simplicial_circle(int K) {
  if (K < 1) throw InputError("simplicial circle needs K >= 1");
  std::vector<int> counts;
  std::vector<std::vector<TruncatedSSet::Table>> faces(static_cast<std::size_t>(K) + 1);
  std::vector<std::vector<TruncatedSSet::Table>> degens(static_cast<std::size_t>(K));
  for (int n = 0; n <= K; ++n) {
    counts.push_back(n + 1);
    if (n >= 1)
      for (int j = 0; j <= n; ++j) {
        TruncatedSSet::Table t{0};
        for (int i = 1; i <= n; ++i) {
          if (j < i && 1 < i) t.push_back(i - 1);
          else if (i <= j && i < n) t.push_back(i);
          else t.push_back(0);
        }
        faces[static_cast<std::size_t>(n)].push_back(std::move(t));
      }
    if (n < K)
      for (int j = 0; j <= n; ++j) {
        TruncatedSSet::Table t{0};
        for (int i = 1; i <= n; ++i) t.push_back(j < i ? i + 1 : i);
        degens[static_cast<std::size_t>(n)].push_back(std::move(t));
      }
  }
  return TruncatedSSet(K, std::move(counts), std::move(faces), std::move(degens));
}

SimplicialMap effect_circle_map(const EffectFunctorResult& es1, const LabelledNerve& ne) {
  SimplicialMap f(es1.functions.size());
  for (std::size_t n = 0; n < es1.functions.size(); ++n)
    for (const auto& phi : es1.functions[n]) {
      Tuple t(phi.begin() + 1, phi.end());  // drop the value on *
      f[n].push_back(ne.id_of(t));
    }
  return f;
}

}  // namespace simpeff
