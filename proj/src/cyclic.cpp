#include "simpeff/cyclic.hpp"

#include <map>
#include <set>
#include <tuple>

namespace simpeff {

Report validate_cyclic(const CyclicSSet& c) {
  Report r;
  const auto& x = c.base;
  const int K = x.truncation();
  if (static_cast<int>(c.tau.size()) != K + 1) {
    r.add("shape", "tau must list levels 0..K");
    return r;
  }
  for (int n = 0; n <= K; ++n) {
    const auto& t = c.tau[static_cast<std::size_t>(n)];
    std::vector<char> hit(static_cast<std::size_t>(x.count(n)), 0);
    bool ok = static_cast<int>(t.size()) == x.count(n);
    for (std::size_t k = 0; ok && k < t.size(); ++k) {
      ok = t[k] >= 0 && t[k] < x.count(n) && !hit[static_cast<std::size_t>(t[k])];
      if (ok) hit[static_cast<std::size_t>(t[k])] = 1;
    }
    if (!ok) {
      r.add("shape", "tau_" + std::to_string(n) + " is not a permutation", {n});
      return r;
    }
  }
  auto tau = [&](int n, SimplexId s) { return c.apply(n, s); };
  for (int n = 0; n <= K; ++n)
    for (SimplexId s = 0; s < x.count(n); ++s) {
      if (n >= 1) {
        if (x.face(n, 0, tau(n, s)) != x.face(n, n, s)) r.add("d0-tau", "d0 tau_n != d_n", {n, 0, s});
        for (int i = 1; i <= n; ++i)
          if (x.face(n, i, tau(n, s)) != tau(n - 1, x.face(n, i - 1, s)))
            r.add("di-tau", "d_i tau_n != tau_{n-1} d_{i-1}", {n, i, s});
      }
      if (n + 1 <= K) {
        if (x.degeneracy(n, 0, tau(n, s)) != tau(n + 1, tau(n + 1, x.degeneracy(n, n, s))))
          r.add("s0-tau", "s_0 tau_n != tau_{n+1}^2 s_n", {n, 0, s});
        for (int i = 1; i <= n; ++i)
          if (x.degeneracy(n, i, tau(n, s)) != tau(n + 1, x.degeneracy(n, i - 1, s)))
            r.add("si-tau", "s_i tau_n != tau_{n+1} s_{i-1}", {n, i, s});
      }
      SimplexId y = s;
      for (int k = 0; k <= n; ++k) y = tau(n, y);
      if (y != s) r.add("tau-order", "tau_n^{n+1} != id", {n, n + 1, s});
    }
  return r;
}

CyclicSSet group_nerve_cyclic(const FiniteGroup& g, int z, const LabelledNerve& nerve) {
  if (!g.is_central(z)) throw InputError("element " + std::to_string(z) + " is not central");
  const int K = nerve.sset.truncation();
  CyclicSSet c{nerve.sset, std::vector<std::vector<SimplexId>>(static_cast<std::size_t>(K) + 1)};
  c.tau[0].assign(static_cast<std::size_t>(nerve.sset.count(0)), 0);
  for (int n = 1; n <= K; ++n)
    for (const auto& t : nerve.tuples[static_cast<std::size_t>(n)]) {
      int prod = g.unit();
      for (int a : t) prod = g.mul(prod, a);
      Tuple u{g.mul(z, g.inv(prod))};
      u.insert(u.end(), t.begin(), t.end() - 1);
      SimplexId id = nerve.id_of(u);
      if (id < 0) throw InputError("tau leaves the nerve at " + format_tuple(t) + "; z must respect the torsion bound");
      c.tau[static_cast<std::size_t>(n)].push_back(id);
    }
  return c;
}

CyclicSSet effect_nerve_cyclic(const FiniteEffectAlgebra& e, const LabelledNerve& nerve) {
  const int K = nerve.sset.truncation();
  CyclicSSet c{nerve.sset, std::vector<std::vector<SimplexId>>(static_cast<std::size_t>(K) + 1)};
  c.tau[0].assign(static_cast<std::size_t>(nerve.sset.count(0)), 0);
  for (int n = 1; n <= K; ++n)
    for (const auto& t : nerve.tuples[static_cast<std::size_t>(n)]) {
      auto sum = total_product(e.magma, t);
      if (!sum) throw InputError("nerve tuple " + format_tuple(t) + " has no sum");
      Tuple u{e.orthocomplement.at(static_cast<std::size_t>(*sum))};
      u.insert(u.end(), t.begin(), t.end() - 1);
      SimplexId id = nerve.id_of(u);
      if (id < 0) throw InputError("tau leaves the nerve at " + format_tuple(t));
      c.tau[static_cast<std::size_t>(n)].push_back(id);
    }
  return c;
}

Report orthocomplement_laws(const CyclicSSet& c) {
  Report r;
  const auto& x = c.base;
  if (x.truncation() < 2) throw InputError("orthocomplement laws need level 2");
  auto perp = [&](SimplexId f) { return c.apply(1, f); };
  std::set<std::tuple<SimplexId, SimplexId, SimplexId>> triples;  // (d0, d1, d2)
  for (SimplexId a = 0; a < x.count(2); ++a) triples.emplace(x.face(2, 0, a), x.face(2, 1, a), x.face(2, 2, a));
  for (SimplexId a = 0; a < x.count(2); ++a) {
    SimplexId f = x.face(2, 0, a), h = x.face(2, 1, a), g = x.face(2, 2, a);
    std::vector<int> sp{g, f};
    SimplexId b = c.apply(2, a);
    if (x.face(2, 0, b) != g || x.face(2, 1, b) != perp(f) || x.face(2, 2, b) != perp(h))
      r.add("rotation", "tau_2 does not realize g o h^perp = f^perp", sp);
    else if (!triples.count({g, perp(f), perp(h)}))
      r.add("rotation", "g o h^perp = f^perp has no witness", sp);
    SimplexId v0 = x.vertex(2, a, 0);
    SimplexId one = perp(x.degeneracy(0, 0, v0));
    if (h == one && f != perp(g)) r.add("inverse", "f o g = 1_x but f != g^perp", sp);
  }
  for (SimplexId f = 0; f < x.count(1); ++f)
    if (perp(perp(f)) != f) r.add("involution", "(f^perp)^perp != f", {f});
  for (SimplexId v = 0; v < x.count(0); ++v) {
    SimplexId zero = x.degeneracy(0, 0, v);
    if (perp(perp(zero)) != zero) r.add("one-perp", "(1_x)^perp != 0_x", {v});
  }
  return r;
}

SimplicialEffectReport is_simplicial_effect(const CyclicSSet& c) {
  return {is_spiny(c.base), is_inverseless_sset(c.base), is_weakly_two_segal(c.base), validate_cyclic(c)};
}

EffectAlgebroidReport effect_algebroid_conditions(const CyclicSSet& c) {
  EffectAlgebroidReport out;
  out.two_segal = is_two_segal(c.base);
  std::set<std::pair<SimplexId, SimplexId>> seen;
  out.U = true;
  for (SimplexId a = 0; a < c.base.count(2) && out.U; ++a)
    out.U = seen.emplace(c.base.face(2, 2, a), c.base.face(2, 0, a)).second;
  out.Z = is_inverseless_sset(c.base);
  out.cyclic = validate_cyclic(c);
  return out;
}

}  // namespace simpeff
