#include "simpeff/palg.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace simpeff {

std::string format_tuple(const std::vector<int>& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ')';
  return os.str();
}

PartialUnitalMagma::PartialUnitalMagma(int size, ElementId unit, const std::vector<Entry>& products)
    : size_(size), unit_(unit) {
  if (size < 1) throw ValidationError("magma carrier must be nonempty");
  auto in_range = [&](ElementId x) { return x >= 0 && x < size; };
  if (!in_range(unit)) throw ValidationError("unit id out of range");
  for (const auto& [a, b, c] : products) {
    if (!in_range(a) || !in_range(b) || !in_range(c))
      throw ValidationError("product entry " + format_tuple({a, b, c}) + " out of range");
    auto [it, fresh] = table_.emplace(std::pair{a, b}, c);
    if (!fresh && it->second != c)
      throw ValidationError("pair " + format_tuple({a, b}) + " has two different products");
  }
  for (ElementId m = 0; m < size; ++m) {
    for (auto key : {std::pair{unit, m}, std::pair{m, unit}}) {
      auto [it, fresh] = table_.emplace(key, m);
      if (!fresh && it->second != m)
        throw ValidationError("unit law fails at " + format_tuple({key.first, key.second}));
    }
  }
}

std::optional<ElementId> PartialUnitalMagma::product(ElementId a, ElementId b) const {
  auto it = table_.find({a, b});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::vector<PartialUnitalMagma::Entry> PartialUnitalMagma::products() const {
  std::vector<Entry> out;
  out.reserve(table_.size());
  for (const auto& [k, v] : table_) out.push_back({k.first, k.second, v});
  return out;
}

// ---------------------------------------------------------------------------
// Bracketings

Bracketing Bracketing::join(const Bracketing& left, const Bracketing& right) {
  Bracketing t;
  t.splits_.reserve(left.splits_.size() + right.splits_.size() + 1);
  t.splits_.push_back(left.leaves());
  t.splits_.insert(t.splits_.end(), left.splits_.begin(), left.splits_.end());
  t.splits_.insert(t.splits_.end(), right.splits_.begin(), right.splits_.end());
  return t;
}

Bracketing Bracketing::left_comb(int leaves) {
  Bracketing t;
  for (int k = 2; k <= leaves; ++k) t = join(t, leaf());
  return t;
}

Bracketing Bracketing::right_comb(int leaves) {
  Bracketing t;
  for (int k = 2; k <= leaves; ++k) t = join(leaf(), t);
  return t;
}

namespace {

// Walks the preorder split list; `pos` is the index of the next internal node.
std::string render(const std::vector<int>& splits, std::size_t& pos, int leaves) {
  if (leaves == 1) return "x";
  int left = splits[pos++];
  std::string l = render(splits, pos, left);
  std::string r = render(splits, pos, leaves - left);
  return "(" + l + r + ")";
}

std::optional<ElementId> eval(const PartialUnitalMagma& m, const Tuple& tuple, std::size_t begin,
                              int leaves, const std::vector<int>& splits, std::size_t& pos) {
  if (leaves == 1) return tuple[begin];
  int left = splits[pos++];
  auto l = eval(m, tuple, begin, left, splits, pos);
  if (!l) return std::nullopt;
  auto r = eval(m, tuple, begin + static_cast<std::size_t>(left), leaves - left, splits, pos);
  if (!r) return std::nullopt;
  return m.product(*l, *r);
}

}  // namespace

std::string Bracketing::to_string() const {
  std::size_t pos = 0;
  return render(splits_, pos, leaves());
}

const std::vector<Bracketing>& all_bracketings(int leaves) {
  if (leaves < 1) throw InputError("bracketings need at least one leaf");
  static std::mutex mu;
  static std::vector<std::vector<Bracketing>> cache{{}, {Bracketing::leaf()}};
  std::lock_guard lock(mu);
  while (static_cast<int>(cache.size()) <= leaves) {
    int n = static_cast<int>(cache.size());
    std::vector<Bracketing> level;
    for (int k = 1; k < n; ++k)
      for (const auto& l : cache[static_cast<std::size_t>(k)])
        for (const auto& r : cache[static_cast<std::size_t>(n - k)]) level.push_back(Bracketing::join(l, r));
    cache.push_back(std::move(level));
  }
  return cache[static_cast<std::size_t>(leaves)];
}

std::optional<ElementId> bracketed_product(const PartialUnitalMagma& m, const Tuple& tuple,
                                           const Bracketing& t) {
  if (static_cast<int>(tuple.size()) != t.leaves())
    throw InputError("tuple of arity " + std::to_string(tuple.size()) + " against a bracketing with " +
                     std::to_string(t.leaves()) + " leaves");
  std::size_t pos = 0;
  return eval(m, tuple, 0, t.leaves(), t.splits(), pos);
}

namespace {

// Values of `tuple` under every bracketing; nullopt if any bracketing is undefined.
std::optional<std::set<ElementId>> all_values(const PartialUnitalMagma& m, const Tuple& tuple) {
  std::set<ElementId> values;
  for (const auto& t : all_bracketings(static_cast<int>(tuple.size()))) {
    auto v = bracketed_product(m, tuple, t);
    if (!v) return std::nullopt;
    values.insert(*v);
  }
  return values;
}

}  // namespace

bool is_multiplicable(const PartialUnitalMagma& m, const Tuple& tuple) {
  if (tuple.empty()) return true;
  return all_values(m, tuple).has_value();
}

bool is_associable(const PartialUnitalMagma& m, const Tuple& tuple) {
  if (tuple.empty()) return true;
  auto v = all_values(m, tuple);
  return v && v->size() == 1;
}

bool is_fully_associable(const PartialUnitalMagma& m, const Tuple& tuple) {
  const std::size_t n = tuple.size();
  for (std::size_t len = 2; len <= n; ++len)
    for (std::size_t i = 0; i + len <= n; ++i)
      if (!is_associable(m, Tuple(tuple.begin() + static_cast<std::ptrdiff_t>(i),
                                  tuple.begin() + static_cast<std::ptrdiff_t>(i + len))))
        return false;
  return true;
}

std::optional<ElementId> total_product(const PartialUnitalMagma& m, const Tuple& tuple) {
  if (tuple.empty()) return m.unit();
  auto v = all_values(m, tuple);
  if (!v || v->size() != 1) return std::nullopt;
  return *v->begin();
}

bool is_multiplicable_recursive(const PartialUnitalMagma& m, const Tuple& tuple) {
  if (tuple.empty()) return true;
  ElementId acc = tuple[0];
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    auto next = m.product(acc, tuple[i]);
    if (!next) return false;
    acc = *next;
  }
  return true;
}

std::string to_string(AssociativityClass c) {
  switch (c) {
    case AssociativityClass::Magma: return "Magma";
    case AssociativityClass::WeakPartialMonoid: return "WeakPartialMonoid";
    case AssociativityClass::PartialMonoid: return "PartialMonoid";
  }
  return "?";
}

Classification classify(const PartialUnitalMagma& m) {
  std::optional<Tuple> disagree, one_sided;
  const int k = m.size();
  for (ElementId a = 0; a < k && !disagree; ++a)
    for (ElementId b = 0; b < k && !disagree; ++b)
      for (ElementId c = 0; c < k; ++c) {
        std::optional<ElementId> left, right;
        if (auto ab = m.product(a, b)) left = m.product(*ab, c);
        if (auto bc = m.product(b, c)) right = m.product(a, *bc);
        if (left && right && *left != *right) {
          disagree = Tuple{a, b, c};
          break;
        }
        if (left.has_value() != right.has_value() && !one_sided) one_sided = Tuple{a, b, c};
      }
  if (disagree) return {AssociativityClass::Magma, disagree};
  if (one_sided) return {AssociativityClass::WeakPartialMonoid, one_sided};
  return {AssociativityClass::PartialMonoid, std::nullopt};
}

// ---------------------------------------------------------------------------
// Associativity data

AssociativityDatum::AssociativityDatum(std::map<int, std::vector<Tuple>> levels) : levels_(std::move(levels)) {
  for (auto& [n, ts] : levels_) {
    if (n < 2) throw InputError("associativity datum levels start at arity 2");
    for (const auto& t : ts)
      if (static_cast<int>(t.size()) != n)
        throw InputError("tuple " + format_tuple(t) + " stored at arity " + std::to_string(n));
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  }
}

const std::vector<Tuple>& AssociativityDatum::level(int n) const {
  static const std::vector<Tuple> empty;
  auto it = levels_.find(n);
  return it == levels_.end() ? empty : it->second;
}

bool AssociativityDatum::contains(const Tuple& t) const {
  const auto& lv = level(static_cast<int>(t.size()));
  return std::binary_search(lv.begin(), lv.end(), t);
}

AssociativityDatum max_associativity_datum(const PartialUnitalMagma& m, int up_to) {
  if (up_to < 2) throw InputError("associativity datum needs arity bound >= 2");
  std::map<int, std::vector<Tuple>> levels;
  for (const auto& [a, b, c] : m.products()) levels[2].push_back({a, b});
  // A fully associable n-tuple has fully associable (n-1)-prefix and suffix,
  // so level n is grown from level n-1.
  for (int n = 3; n <= up_to; ++n) {
    const auto& prev = levels[n - 1];
    std::vector<Tuple> next;
    for (const auto& p : prev) {
      for (ElementId x = 0; x < m.size(); ++x) {
        Tuple suffix(p.begin() + 1, p.end());
        suffix.push_back(x);
        if (!std::binary_search(prev.begin(), prev.end(), suffix)) continue;
        Tuple t = p;
        t.push_back(x);
        if (is_associable(m, t)) next.push_back(std::move(t));
      }
    }
    std::sort(next.begin(), next.end());
    levels[n] = std::move(next);
  }
  return AssociativityDatum(std::move(levels));
}

Report validate_datum(const PartialUnitalMagma& m, const AssociativityDatum& a) {
  Report r;
  std::vector<Tuple> domain;
  for (const auto& [x, y, z] : m.products()) domain.push_back({x, y});
  if (a.level(2) != domain) {
    for (const auto& t : domain)
      if (!a.contains(t)) {
        r.add("A2-domain", "defined pair missing from A2", t);
        break;
      }
    for (const auto& t : a.level(2))
      if (!m.defined(t[0], t[1])) {
        r.add("A2-domain", "A2 pair outside the product domain", t);
        break;
      }
  }
  const int top = a.max_arity();
  for (const auto& [n, ts] : a.levels()) {
    for (const auto& t : ts) {
      bool ranged = std::all_of(t.begin(), t.end(), [&](int x) { return x >= 0 && x < m.size(); });
      if (!ranged) {
        r.add("range", "element id out of range", t);
        continue;
      }
      for (int i = 2; i < n; ++i) {
        Tuple pre(t.begin(), t.begin() + i), suf(t.begin() + (n - i), t.end());
        if (!a.contains(pre)) r.add("subtuple", "prefix " + format_tuple(pre) + " missing", t);
        if (!a.contains(suf)) r.add("subtuple", "suffix " + format_tuple(suf) + " missing", t);
      }
      if (n + 1 <= top) {
        for (int i = 0; i <= n; ++i) {
          Tuple ins = t;
          ins.insert(ins.begin() + i, m.unit());
          if (!a.contains(ins)) r.add("unit-insertion", "unit inserted at " + std::to_string(i) + " missing", t);
        }
      }
      if (!is_fully_associable(m, t)) r.add("associability", "tuple not fully associable", t);
    }
  }
  // Unit insertion into single letters lands in A2, which the domain check covers.
  return r;
}

// ---------------------------------------------------------------------------
// PAS

std::size_t PasStructure::max_length() const {
  std::size_t n = 0;
  for (const auto& [w, v] : words) n = std::max(n, w.size());
  return n;
}

Report validate_pas(const PasStructure& p, const std::vector<ElementId>* inversion) {
  Report r;
  const auto& D = p.words;
  auto find = [&](const Tuple& w) -> std::optional<ElementId> {
    auto it = D.find(w);
    if (it == D.end()) return std::nullopt;
    return it->second;
  };
  const std::size_t top = p.max_length();
  auto unit = find({});
  if (!unit) r.add("empty-word", "empty word missing from D");
  for (ElementId m = 0; m < p.carrier_size; ++m) {
    auto v = find({m});
    if (!v) r.add("letters", "letter missing from D", {m});
    else if (*v != m) r.add("identity-on-letters", "Pi(m) != m", {m});
  }
  for (const auto& [w, val] : D) {
    const std::size_t n = w.size();
    for (std::size_t cut = 0; cut <= n; ++cut) {
      Tuple u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut)), v(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
      if (!D.count(u) || !D.count(v)) {
        r.add("split-closure", "split at " + std::to_string(cut) + " leaves D", w);
        break;
      }
    }
    // Condition 4 for every factorization w = u.v.w' with v a contiguous block.
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        Tuple v(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(j));
        auto pv = find(v);
        if (!pv) continue;  // reported by split-closure
        Tuple contracted(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        contracted.push_back(*pv);
        contracted.insert(contracted.end(), w.begin() + static_cast<std::ptrdiff_t>(j), w.end());
        if (contracted.size() > top) continue;  // beyond the stored bound
        auto pc = find(contracted);
        if (!pc) r.add("contraction", "contracting [" + std::to_string(i) + "," + std::to_string(j) + ") leaves D", w);
        else if (*pc != val) r.add("contraction", "contraction changes the product", w);
      }
    }
    if (inversion && 2 * n <= top) {
      Tuple doubled = w;
      for (auto it = w.rbegin(); it != w.rend(); ++it) doubled.push_back((*inversion)[static_cast<std::size_t>(*it)]);
      auto pd = find(doubled);
      if (!pd) r.add("inversion", "u.u^-1 not in D", w);
      else if (unit && *pd != *unit) r.add("inversion", "Pi(u.u^-1) != 1", w);
    }
  }
  if (inversion) {
    if (static_cast<int>(inversion->size()) != p.carrier_size) r.add("inversion", "inversion has wrong length");
    else
      for (ElementId m = 0; m < p.carrier_size; ++m) {
        ElementId im = (*inversion)[static_cast<std::size_t>(m)];
        if (im < 0 || im >= p.carrier_size || (*inversion)[static_cast<std::size_t>(im)] != m)
          r.add("inversion", "not an involution", {m});
      }
  }
  return r;
}

PasStructure to_pas(const PartialUnitalMagma& m, const AssociativityDatum& a) {
  Report r = validate_datum(m, a);
  if (!r.ok())
    throw ValidationError("invalid associativity datum: " + r.failures[0].check + " at " +
                          format_tuple(r.failures[0].witness));
  PasStructure p;
  p.carrier_size = m.size();
  p.words[{}] = m.unit();
  for (ElementId x = 0; x < m.size(); ++x) p.words[{x}] = x;
  for (const auto& [n, ts] : a.levels())
    for (const auto& t : ts) p.words[t] = *bracketed_product(m, t, Bracketing::left_comb(n));
  return p;
}

std::pair<PartialUnitalMagma, AssociativityDatum> from_pas(const PasStructure& p) {
  Report r = validate_pas(p);
  if (!r.ok())
    throw ValidationError("invalid PAS: " + r.failures[0].check + " at " + format_tuple(r.failures[0].witness));
  std::vector<PartialUnitalMagma::Entry> products;
  std::map<int, std::vector<Tuple>> levels;
  for (const auto& [w, v] : p.words) {
    if (w.size() == 2) products.push_back({w[0], w[1], v});
    if (w.size() >= 2) levels[static_cast<int>(w.size())].push_back(w);
  }
  PartialUnitalMagma m(p.carrier_size, p.words.at({}), products);
  AssociativityDatum a(std::move(levels));
  return {std::move(m), std::move(a)};
}

// ---------------------------------------------------------------------------
// Inverses

Inverses inverses(const PartialUnitalMagma& m, ElementId x) {
  if (x < 0 || x >= m.size()) throw InputError("element id out of range");
  Inverses inv;
  for (ElementId y = 0; y < m.size(); ++y) {
    bool left = m.product(y, x) == m.unit();
    bool right = m.product(x, y) == m.unit();
    if (left) inv.left.push_back(y);
    if (right) inv.right.push_back(y);
    if (left && right) inv.two_sided.push_back(y);
  }
  return inv;
}

bool is_inverseless(const PartialUnitalMagma& m) {
  for (ElementId x = 0; x < m.size(); ++x) {
    if (x == m.unit()) continue;
    auto inv = inverses(m, x);
    if (!inv.left.empty() || !inv.right.empty()) return false;
  }
  return true;
}

bool is_weakly_associative_partial_group(const PartialUnitalMagma& m, int up_to) {
  if (up_to < 2) throw InputError("arity bound must be >= 2");
  if (classify(m).kind == AssociativityClass::Magma) return false;
  std::vector<ElementId> inv(static_cast<std::size_t>(m.size()));
  for (ElementId x = 0; x < m.size(); ++x) {
    auto i = inverses(m, x);
    if (i.two_sided.empty()) return false;
    inv[static_cast<std::size_t>(x)] = i.two_sided.front();
  }
  AssociativityDatum f = max_associativity_datum(m, up_to);
  for (ElementId x = 0; x < m.size(); ++x)
    if (!is_fully_associable(m, {x, inv[static_cast<std::size_t>(x)]})) return false;
  for (const auto& [n, ts] : f.levels())
    for (const auto& t : ts) {
      Tuple doubled = t;
      for (auto it = t.rbegin(); it != t.rend(); ++it) doubled.push_back(inv[static_cast<std::size_t>(*it)]);
      if (!is_fully_associable(m, doubled)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Effect algebras

Report validate_effect_algebra(const FiniteEffectAlgebra& e) {
  Report r;
  const auto& m = e.magma;
  const int k = m.size();
  if (static_cast<int>(e.orthocomplement.size()) != k) {
    r.add("orthocomplement", "orthocomplement table has wrong length");
    return r;
  }
  for (const auto& [a, b, c] : m.products()) {
    auto ba = m.product(b, a);
    if (ba != c) {
      r.add("commutativity", "a+b and b+a differ", {a, b});
      break;
    }
  }
  const ElementId one = e.one();
  for (ElementId a = 0; a < k; ++a) {
    ElementId perp = e.orthocomplement[static_cast<std::size_t>(a)];
    if (perp < 0 || perp >= k) {
      r.add("orthocomplement", "orthocomplement out of range", {a});
      continue;
    }
    std::vector<ElementId> sols;
    for (ElementId b = 0; b < k; ++b)
      if (m.product(a, b) == one) sols.push_back(b);
    if (sols.size() != 1 || sols[0] != perp) {
      r.add("orthocomplement", "a + a^perp = 1 has solutions " + format_tuple(sols) + ", table says " + std::to_string(perp),
            {a});
    }
  }
  for (ElementId a = 0; a < k; ++a)
    if (m.defined(a, one) && a != e.zero()) {
      r.add("zero-in-one", "(a,1) is summable", {a});
      break;
    }
  auto cls = classify(m);
  if (cls.kind != AssociativityClass::PartialMonoid) r.add("associativity", to_string(cls.kind), cls.witness.value_or(Tuple{}));
  return r;
}

FiniteEffectAlgebra chain_effect_algebra(int n) {
  if (n < 1) throw InputError("chain effect algebra needs n >= 1");
  std::vector<PartialUnitalMagma::Entry> products;
  std::vector<ElementId> perp;
  for (int a = 0; a <= n; ++a) {
    perp.push_back(n - a);
    for (int b = 0; a + b <= n; ++b) products.push_back({a, b, a + b});
  }
  return {PartialUnitalMagma(n + 1, 0, products), perp};
}

FiniteEffectAlgebra boolean_effect_algebra(int atoms) {
  if (atoms < 0 || atoms > 8) throw InputError("boolean effect algebra supports 0..8 atoms");
  const int size = 1 << atoms;
  std::vector<PartialUnitalMagma::Entry> products;
  std::vector<ElementId> perp;
  for (int a = 0; a < size; ++a) {
    perp.push_back((size - 1) ^ a);
    for (int b = 0; b < size; ++b)
      if ((a & b) == 0) products.push_back({a, b, a | b});
  }
  return {PartialUnitalMagma(size, 0, products), perp};
}

}  // namespace simpeff
