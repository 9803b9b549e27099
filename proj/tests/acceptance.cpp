// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "key_oracle.hpp"
#include "oracles.hpp"
#include "simpeff/cyclic.hpp"
#include "simpeff/nerve.hpp"
#include "simpeff/quantum.hpp"
#include "simpeff/states.hpp"

using namespace simpeff;

namespace {

// Collects failed expectations for one criterion.
struct Tally {
  std::vector<std::string> failed;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string fmt(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

bool contains(const std::vector<std::array<int, 3>>& fam, const std::vector<int>& w) {
  return w.size() == 3 && std::find(fam.begin(), fam.end(), std::array<int, 3>{w[0], w[1], w[2]}) != fam.end();
}

// ---- 1: L_Y(Z/4) ----------------------------------------------------------

void criterion1(Tally& t) {
  auto ly = fixtures::lY_z4(3);
  for (const auto& s : {Tuple{1, 1}, Tuple{2, 1}, Tuple{1, 2}}) t.expect(ly.id_of(s) >= 0, "2-simplex " + fmt(s) + " missing");
  t.expect(ly.id_of({1, 1, 1}) < 0, "(1,1,1) is a 3-simplex");
  auto w = is_weakly_two_segal(ly.sset);
  t.expect(!w.holds, "weak 2-Segal passed");
  t.expect(w.witness_level == 3 && w.witness == std::vector<int>{1, 1, 1},
           "weak 2-Segal witness " + fmt(w.witness) + " at " + std::to_string(w.witness_level));
  t.note("weak 2-Segal witness " + fmt(w.witness) + " at n=" + std::to_string(w.witness_level));

  // PAS words up to length 6 so u.u^-1 is checked for every word up to length 3
  auto big = fixtures::lY_z4(6);
  auto [m, a] = magma_from_sset(big.sset);
  auto pas = to_pas(m, a);
  std::vector<ElementId> inv(4);
  for (int g = 0; g < 4; ++g) inv[static_cast<std::size_t>(g)] = (4 - g) % 4;
  auto r = validate_pas(pas, &inv);
  t.expect(r.ok(), "PAS conditions fail: " + (r.ok() ? std::string() : r.failures.front().check));
  t.note(std::to_string(pas.words.size()) + " PAS words");
}

// ---- 2: commutative nerves ------------------------------------------------

void criterion2(Tally& t) {
  struct Named {
    std::string name;
    FiniteGroup g;
  };
  for (const auto& [name, g] : {Named{"Q8", FiniteGroup::quaternion()}, Named{"D4", FiniteGroup::dihedral4()},
                                Named{"S3", FiniteGroup::symmetric3()}}) {
    auto n = comm_nerve(g, std::nullopt, 4);
    const auto& x = n.sset;
    t.expect(is_spiny(x).holds, name + " not spiny");
    t.expect(is_reduced(x), name + " not reduced");
    t.expect(is_coskeletal_2(x).holds, name + " not 2-coskeletal");
    t.expect(is_weakly_two_segal(x).holds, name + " not weakly 2-Segal");
    auto [m, a] = magma_from_sset(x);
    t.expect(is_weakly_associative_partial_group(m, 3), name + " not a WAPG");

    auto seg = is_two_segal(x);
    t.expect(!seg.holds, name + " is 2-Segal");
    const auto& table = g.table();
    auto left = oracle::unfilled_left_membranes(table), right = oracle::unfilled_right_membranes(table);
    bool confirmed = seg.witness_level == 3 && (contains(left, seg.witness) || contains(right, seg.witness));
    t.expect(confirmed, name + " witness " + fmt(seg.witness) + " not confirmed by oracle");
    t.note(name + " 2-Segal witness " + fmt(seg.witness));

    if (name == "Q8") {
      std::vector<int> jii{fixtures::kJ, fixtures::kI, fixtures::kI};
      t.expect(contains(right, jii), "(j,i,i) not in oracle family");
      auto census = membrane_census(x, SimplicialSubset::of({3, {{0, 1, 3}, {1, 2, 3}}}));
      bool found = false;
      for (const auto& mb : census.unfilled) found = found || mb.spine(x) == std::vector<SimplexId>{jii.begin(), jii.end()};
      t.expect(found, "(j,i,i) not an unfilled membrane");
      t.expect(census.unfilled.size() == right.size(), "Q8 unfilled membrane count differs from oracle");
    }
  }
}

// ---- 3: random roundtrips -------------------------------------------------

void criterion3(Tally& t) {
  std::mt19937_64 rng(20240611);
  const int trials = 60;
  int ok = 0;
  for (int trial = 0; trial < trials; ++trial) {
    auto raw = oracle::random_magma(rng, 8);
    std::vector<PartialUnitalMagma::Entry> products(raw.products.begin(), raw.products.end());
    PartialUnitalMagma m(raw.size, 0, products);
    auto x = nerve(m, max_associativity_datum(m, 4), 4);
    auto [m2, d2] = magma_from_sset(x);
    bool round = m2 == m && nerve(m2, d2, 4) == x;
    bool cosk = cosk2_extend(x.truncate(2), 4) == x;
    t.expect(round, "roundtrip fails on trial " + std::to_string(trial));
    t.expect(cosk, "cosk2 differs on trial " + std::to_string(trial));
    ok += round && cosk;
  }
  t.note(std::to_string(ok) + "/" + std::to_string(trials) + " magmas");
}

// ---- 4: E(S^1) and N(E) ---------------------------------------------------

void criterion4(Tally& t) {
  struct Named {
    std::string name;
    FiniteEffectAlgebra e;
  };
  for (const auto& [name, e] : {Named{"L2", chain_effect_algebra(2)}, Named{"L3", chain_effect_algebra(3)},
                                Named{"B2", boolean_effect_algebra(2)}}) {
    auto es1 = effect_functor(e, simplicial_circle(4));
    auto ne = labelled_nerve(e.magma, max_associativity_datum(e.magma, 4), 4);
    auto f = effect_circle_map(es1, ne);
    t.expect(is_simplicial_map(es1.sset, ne.sset, f), name + ": not simplicial");
    t.expect(is_bijective(es1.sset, ne.sset, f), name + ": not bijective");
    if (name == "L2") {
      t.expect(es1.sset.count(2) == 6 && static_cast<std::size_t>(es1.sset.count(2)) == oracle::chain_circle_functions(2, 2),
               "L2 level-2 count " + std::to_string(es1.sset.count(2)));
      t.expect(static_cast<std::size_t>(ne.sset.count(2)) == oracle::chain_nerve_count(2, 2), "N(L2) level-2 count");
    }
  }
}

// ---- 5: simplicial effects ------------------------------------------------

void criterion5(Tally& t) {
  for (int n = 2; n <= 4; ++n) {
    auto c = fixtures::chain_cyclic(n, 4);
    t.expect(is_simplicial_effect(c).holds(), "L" + std::to_string(n) + " not a simplicial effect");
    t.expect(effect_algebroid_conditions(c).holds(), "L" + std::to_string(n) + " fails algebroid conditions");
  }
  auto z2 = fixtures::group_cyclic(FiniteGroup::cyclic(2), 1, 4);
  auto r = is_simplicial_effect(z2);
  t.expect(!r.inverseless.holds && r.inverseless.witness == std::vector<int>{1, 1},
           "Z/2 z=1 inverseless witness " + fmt(r.inverseless.witness));

  auto q8 = FiniteGroup::quaternion(), d4 = FiniteGroup::dihedral4(), s3 = FiniteGroup::symmetric3();
  std::vector<std::pair<std::string, CyclicSSet>> all{
      {"L2", fixtures::chain_cyclic(2, 4)},
      {"L3", fixtures::chain_cyclic(3, 4)},
      {"L4", fixtures::chain_cyclic(4, 4)},
      {"B2", fixtures::boolean_cyclic(2, 4)},
      {"B3", fixtures::boolean_cyclic(3, 3)},
      {"Z2 z=0", fixtures::group_cyclic(FiniteGroup::cyclic(2), 0, 4)},
      {"Z2 z=1", z2},
      {"Z3 z=1", fixtures::group_cyclic(FiniteGroup::cyclic(3), 1, 4)},
      {"Z4 z=2", fixtures::group_cyclic(FiniteGroup::cyclic(4), 2, 4)},
      {"Q8 z=-1", fixtures::group_cyclic(q8, fixtures::kMinusOne, 3)},
      {"Q8 z=-1 2-torsion", fixtures::group_cyclic(q8, fixtures::kMinusOne, 4, 2)},
      {"D4 z=r^2", fixtures::group_cyclic(d4, 2, 3)},
      {"S3 z=e", fixtures::group_cyclic(s3, 0, 3)},
      {"point", fixtures::point_cyclic(4)},
  };
  for (const auto& [name, c] : all) {
    auto laws = orthocomplement_laws(c);
    t.expect(laws.ok(), name + ": " + (laws.ok() ? std::string() : laws.failures.front().check));
  }
  t.note(std::to_string(all.size()) + " cyclic instances");
}

// ---- 6: states and HC1 ----------------------------------------------------

void criterion6(Tally& t) {
  auto l2 = fixtures::chain_cyclic(2, 3);
  auto s = find_state(l2);
  bool exact = s.state && s.state->size() == 3;
  for (int k = 0; exact && k < 3; ++k) exact = (*s.state)(k) == Rational(k, 2);
  t.expect(exact, "L2 state is not k/2");
  t.expect(state_polytope_dim(l2) == 0, "L2 polytope not a point");
  t.expect(hc1(l2).dimension == 0, "HC1(L2) nonzero");

  auto z2 = fixtures::group_cyclic(FiniteGroup::cyclic(2), 1, 3);
  auto e = find_state(z2);
  t.expect(!e.state && e.certificate && verify_certificate(state_system(z2), *e.certificate),
           "Z/2 z=1: no verified infeasibility certificate");

  auto b2 = fixtures::boolean_cyclic(2, 3);
  t.expect(state_polytope_dim(b2) == 1, "B2 polytope dim");
  t.expect(hc1(b2).dimension == 1, "B2 HC1 dim");

  std::vector<std::pair<std::string, CyclicSSet>> all{
      {"L2", l2}, {"L3", fixtures::chain_cyclic(3, 3)}, {"L4", fixtures::chain_cyclic(4, 3)},
      {"B2", b2}, {"B3", fixtures::boolean_cyclic(3, 3)}, {"Z2 z=0", fixtures::group_cyclic(FiniteGroup::cyclic(2), 0, 3)},
      {"Z2 z=1", z2}, {"point", fixtures::point_cyclic(3)}};
  int with_state = 0;
  for (const auto& [name, c] : all) {
    auto found = find_state(c);
    if (!found.state) continue;
    ++with_state;
    auto hom = hc1_system(c);
    auto h = hc1(c);
    for (const auto& v : state_polytope(c).vertices) {
      RationalVector diff = v - *found.state;
      t.expect((hom.equalities * diff).isZero(), name + ": nonzero residual");
      if (h.dimension == 0) {
        t.expect(diff.isZero(), name + ": shift outside HC1 = 0");
      } else {
        RationalMatrix aug(h.basis.rows(), h.basis.cols() + 1);
        aug << h.basis, diff;
        t.expect(rank(aug) == h.dimension, name + ": shift outside HC1 span");
      }
    }
  }
  t.note(std::to_string(with_state) + " instances with states");
}

// ---- 7: key example -------------------------------------------------------

void criterion7(Tally& t) {
  using namespace quantum;
  auto w = build_witness();
  t.expect(key_oracle::max_dist(w.pi.projectors, key_oracle::pi()) < 1e-12, "Pi differs");
  t.expect(key_oracle::max_dist(w.psi.projectors, key_oracle::psi()) < 1e-12, "Psi differs");
  t.expect((w.B - key_oracle::B()).norm() < 1e-12, "B differs");
  t.expect((w.C - key_oracle::C()).norm() < 1e-12, "C differs");
  t.expect((w.printed_A - key_oracle::printed_A()).norm() < 1e-12, "A differs");
  t.expect(w.glue_residual < 1e-9, "glue residual");
  t.expect(w.ab_commutator < 1e-9, "AB commutator");
  t.expect(w.bc_commutator > 0.1, "BC commutator");
  auto f = filler_exists(w.pi, w.psi);
  t.expect(!f.exists, "filler found");
  auto inv = inverseless_sample_check(100, 2024);
  t.expect(inv.trials == 100 && inv.holds() && inv.max_residual < 1e-9, "inverseless sampling");
  std::ostringstream os;
  os << "|BC-CB|=" << w.bc_commutator << ", inverseless " << inv.passes << "/" << inv.trials;
  t.note(os.str());
}

// ---- 8: state formula on Z ------------------------------------------------

void criterion8(Tally& t) {
  using namespace quantum;
  Rng rng(77);
  double worst = 0, lo = 1, hi = 0, half = 0;
  for (int k = 0; k < 5; ++k) {
    DensityOperator rho(random_density(9, rng));
    auto r = key_example_state_check(rho, 50, 100 + static_cast<std::uint64_t>(k));
    t.expect(r.trials == 50, "trial count");
    for (double v : {r.additivity, r.orthocomplement, r.partial_additive, r.column_consistency, r.swap_orth, r.half,
                     r.third_zero})
      worst = std::max(worst, std::abs(v));
    half = std::max(half, std::abs(r.omega2_one));
    lo = std::min(lo, r.min_phi);
    hi = std::max(hi, r.max_phi);
  }
  t.expect(worst < 1e-9, "identity residual");
  t.expect(half < 1e-12, "phi(omega^2 1) != 1/2");
  // trace rounding can land a hair outside
  t.expect(lo >= -1e-12 && hi <= 1 + 1e-12, "phi outside [0, 1]");
  std::ostringstream os;
  os << "max residual " << worst << ", phi in [" << lo << ", " << hi << "]";
  t.note(os.str());
}

struct Criterion {
  int id;
  std::string title;
  std::function<void(Tally&)> run;
  double limit_s;  // 0 = untimed
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "L_Y(Z/4) action partial group", criterion1, 1},
      {2, "commutative nerves of Q8, D4, S3", criterion2, 30},
      {3, "random magma nerve roundtrips", criterion3, 0},
      {4, "E(S^1) = N(E)", criterion4, 0},
      {5, "simplicial effects", criterion5, 0},
      {6, "states and HC1", criterion6, 0},
      {7, "key example witness", criterion7, 5},
      {8, "state formula on Z", criterion8, 0},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Tally t;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.failed.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) t.failed.push_back("took " + std::to_string(secs) + " s");
    bool pass = t.failed.empty();
    all = all && pass;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title;
    const auto& extra = pass ? t.notes : t.failed;
    for (std::size_t k = 0; k < extra.size(); ++k) line << (k ? "; " : " [") << extra[k];
    if (!extra.empty()) line << ']';
    line.precision(3);
    line << " (" << secs << " s)";
    std::cout << line.str() << '\n';
  }
  return all ? 0 : 1;
}
