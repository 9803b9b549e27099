#include "simpeff/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "simpeff/states.hpp"

namespace simpeff::cli {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

CheckEntry entry(const std::string& name, const CheckResult& r) {
  CheckEntry e{name, r.holds ? "pass" : "fail", "", r.bound, r.detail};
  if (!r.holds && !r.witness.empty()) {
    e.witness = format_tuple(r.witness);
    if (r.witness_level >= 0) e.witness += " at level " + std::to_string(r.witness_level);
  }
  return e;
}

CheckEntry entry(const std::string& name, const Report& r, std::optional<int> bound = std::nullopt) {
  CheckEntry e{name, r.ok() ? "pass" : "fail", "", bound, ""};
  if (!r.ok()) {
    const auto& f = r.failures.front();
    e.witness = f.witness.empty() ? "" : format_tuple(f.witness);
    e.detail = f.check + ": " + f.detail;
    if (r.failures.size() > 1) e.detail += " (" + std::to_string(r.failures.size()) + " failures)";
  }
  return e;
}

CheckEntry flag(const std::string& name, bool holds, std::string detail = "", std::optional<int> bound = std::nullopt) {
  return {name, holds ? "pass" : "fail", "", bound, std::move(detail)};
}

CheckEntry skipped(const std::string& name, std::string why) { return {name, "skipped", "", std::nullopt, std::move(why)}; }

CyclicSSet truncate(const CyclicSSet& c, int k) {
  if (k >= c.base.truncation()) return c;
  CyclicSSet out{c.base.truncate(k), c.tau};
  out.tau.resize(static_cast<std::size_t>(k) + 1);
  return out;
}

std::string rational_vector(const RationalVector& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? " " : "") + format_rational(v(i));
  return s;
}

void sset_battery(CheckReport& rep, const TruncatedSSet& x) {
  rep.checks.push_back(entry("simplicial-identities", validate(x), x.truncation()));
  rep.checks.push_back(entry("spiny", is_spiny(x)));
  rep.checks.push_back(flag("reduced", is_reduced(x), std::to_string(x.count(0)) + " vertices", 0));
  if (x.truncation() < 3) {
    for (const char* n : {"2-coskeletal", "2-segal", "weakly-2-segal"}) rep.checks.push_back(skipped(n, "needs level 3"));
  } else {
    rep.checks.push_back(entry("2-coskeletal", is_coskeletal_2(x)));
    rep.checks.push_back(entry("2-segal", is_two_segal(x)));
    rep.checks.push_back(entry("weakly-2-segal", is_weakly_two_segal(x)));
  }
  if (x.truncation() >= 2)
    rep.checks.push_back(entry("inverseless", is_inverseless_sset(x)));
  else
    rep.checks.push_back(skipped("inverseless", "needs level 2"));
}

void cyclic_battery(CheckReport& rep, const CyclicSSet& c, const CheckOptions& o) {
  rep.checks.push_back(entry("simplicial-identities", validate(c.base), c.base.truncation()));
  auto rel = validate_cyclic(c);
  rep.checks.push_back(entry("cyclic-relations", rel, c.base.truncation()));
  if (!rel.ok() || !validate(c.base).ok()) return;
  const bool all = !o.simplicial_effect && !o.algebroid && !o.laws;
  const int K = c.base.truncation();
  if (K < 3) {
    rep.checks.push_back(skipped("simplicial-effect", "needs level 3"));
  } else {
    if (all || o.laws) rep.checks.push_back(entry("orthocomplement-laws", orthocomplement_laws(c), 2));
    if (all || o.simplicial_effect) {
      auto s = is_simplicial_effect(c);
      rep.checks.push_back(entry("spiny", s.spiny));
      rep.checks.push_back(entry("inverseless", s.inverseless));
      rep.checks.push_back(entry("weakly-2-segal", s.weakly_two_segal));
      rep.checks.push_back(flag("simplicial-effect", s.holds(), "", K));
    }
    if (all || o.algebroid) {
      auto a = effect_algebroid_conditions(c);
      rep.checks.push_back(entry("2-segal", a.two_segal));
      rep.checks.push_back(flag("U", a.U, "(d2, d0) injective on 2-simplices", 2));
      rep.checks.push_back(entry("Z", a.Z));
      rep.checks.push_back(flag("effect-algebroid", a.holds(), "", K));
    }
  }
  if (o.states) {
    auto s = find_state(c);
    if (s.state)
      rep.checks.push_back(flag("state", true, "phi = " + rational_vector(*s.state), 2));
    else
      rep.checks.push_back(flag("state", false, "EMPTY (infeasibility certificate verified)", 2));
  }
  if (o.hc1) rep.checks.push_back(flag("hc1", true, "dimension " + std::to_string(hc1(c).dimension), 2));
}

}  // namespace

int CheckReport::exit_code() const {
  for (const auto& c : checks)
    if (c.verdict == "fail") return 1;
  return 0;
}

io::Json CheckReport::to_json() const {
  io::Json j;
  j["subject"] = subject;
  j["levels"] = levels;
  io::Json cs = io::Json::array();
  for (const auto& c : checks) {
    io::Json e{{"name", c.name}, {"verdict", c.verdict}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    if (c.bound) e["bound"] = *c.bound;
    if (!c.detail.empty()) e["detail"] = c.detail;
    cs.push_back(std::move(e));
  }
  j["checks"] = std::move(cs);
  j["exit_code"] = exit_code();
  return j;
}

void CheckReport::print(std::ostream& out) const {
  out << "subject: " << subject << "\nlevels: " << levels << '\n';
  for (const auto& c : checks) {
    out << c.name << ": " << c.verdict;
    if (!c.witness.empty()) out << ", witness " << c.witness;
    if (c.bound) out << " [bound " << *c.bound << "]";
    if (!c.detail.empty()) out << " - " << c.detail;
    out << '\n';
  }
}

CheckReport run_check(const std::string& kind, const std::string& path, const CheckOptions& o) {
  CheckReport rep;
  rep.subject = kind + " " + path;
  rep.levels = o.levels;
  auto j = io::read_json_file(path);
  if (kind == "magma") {
    auto m = io::magma_from_json(j);
    auto cls = classify(m);
    CheckEntry c{"classification", "pass", "", 3, to_string(cls.kind)};
    if (cls.witness) c.detail += ", first triple failing the next level " + format_tuple(*cls.witness);
    rep.checks.push_back(c);
    rep.checks.push_back(flag("inverseless", is_inverseless(m)));
    rep.checks.push_back(flag("weakly-associative-partial-group", is_weakly_associative_partial_group(m, o.levels), "",
                              o.levels));
    if (o.datum_path.empty()) {
      rep.checks.push_back(skipped("datum", "no --datum given"));
    } else {
      auto a = io::datum_from_json(io::read_json_file(o.datum_path));
      auto r = validate_datum(m, a);
      rep.checks.push_back(entry("datum", r, a.max_arity()));
      if (r.ok()) rep.checks.push_back(entry("pas", validate_pas(to_pas(m, a)), a.max_arity()));
    }
  } else if (kind == "sset") {
    auto x = io::sset_from_json(j);
    sset_battery(rep, x.truncation() > o.levels ? x.truncate(o.levels) : x);
  } else if (kind == "cyclic") {
    cyclic_battery(rep, truncate(io::cyclic_from_json(j), o.levels), o);
  } else if (kind == "effect-algebra") {
    auto e = io::effect_algebra_from_json(j);
    auto ax = validate_effect_algebra(e);
    rep.checks.push_back(entry("effect-algebra-axioms", ax, 3));
    if (ax.ok()) {
      auto ln = labelled_nerve(e.magma, max_associativity_datum(e.magma, o.levels), o.levels);
      cyclic_battery(rep, effect_nerve_cyclic(e, ln), o);
    }
  } else {
    throw InputError("unknown check kind '" + kind + "'");
  }
  return rep;
}

namespace {

void emit(const io::Json& j, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << j.dump(1) << '\n';
  else
    io::write_json_file(out_path, j);
}

int run_states(const std::string& path, bool want_hc1, bool json, std::ostream& out) {
  auto c = io::cyclic_from_json(io::read_json_file(path));
  auto rel = validate_cyclic(c);
  if (!rel.ok() || !validate(c.base).ok()) throw InputError(path + " is not a valid cyclic set");
  auto poly = state_polytope(c);
  auto search = find_state(c);
  io::Json j;
  j["subject"] = path;
  if (poly.dimension) {
    j["dimension"] = *poly.dimension;
    std::vector<std::string> s;
    for (Eigen::Index i = 0; i < search.state->size(); ++i) s.push_back(format_rational((*search.state)(i)));
    j["state"] = s;
  } else {
    j["dimension"] = "EMPTY";
    std::vector<std::string> y, z;
    for (Eigen::Index i = 0; i < search.certificate->equality_multipliers.size(); ++i)
      y.push_back(format_rational(search.certificate->equality_multipliers(i)));
    for (Eigen::Index i = 0; i < search.certificate->box_multipliers.size(); ++i)
      z.push_back(format_rational(search.certificate->box_multipliers(i)));
    j["certificate"] = {{"equality_multipliers", y}, {"box_multipliers", z}};
  }
  if (want_hc1) {
    auto h = hc1(c);
    io::Json basis = io::Json::array();
    for (Eigen::Index k = 0; k < h.basis.cols(); ++k) {
      std::vector<std::string> v;
      for (Eigen::Index i = 0; i < h.basis.rows(); ++i) v.push_back(format_rational(h.basis(i, k)));
      basis.push_back(v);
    }
    j["hc1"] = {{"dimension", h.dimension}, {"basis", basis}};
  }
  if (json) {
    out << j.dump(1) << '\n';
    return 0;
  }
  out << "subject: " << path << '\n';
  if (poly.dimension) {
    out << "state polytope dimension: " << *poly.dimension << '\n';
    out << "sample state: " << rational_vector(*search.state) << '\n';
  } else {
    out << "EMPTY\n";
    out << "certificate (equality multipliers): " << rational_vector(search.certificate->equality_multipliers) << '\n';
    out << "certificate (box multipliers): " << rational_vector(search.certificate->box_multipliers) << '\n';
  }
  if (want_hc1) {
    auto h = hc1(c);
    out << "hc1 dimension: " << h.dimension << '\n';
    for (Eigen::Index k = 0; k < h.basis.cols(); ++k)
      out << "basis " << k << ": " << rational_vector(h.basis.col(k)) << '\n';
  }
  return 0;
}

int run_quantum_demo(int trials, std::uint64_t seed, bool json, std::ostream& out) {
  using namespace quantum;
  if (trials < 1) throw InputError("--trials must be >= 1");
  const auto w = build_witness();
  const double printed_a = (w.printed_A - omega() * omega() * w.A.adjoint()).norm();
  const double printed_b = (w.printed_B - w.B).norm();
  const double printed_c = (w.printed_C - w.C).norm();
  const bool pi_in = in_key_example(w.pi).member, psi_in = in_key_example(w.psi).member;
  const auto filler = filler_exists(w.pi, w.psi);
  const auto inv = inverseless_sample_check(trials, seed);
  const auto tau2 = tau_stability_check(trials, seed);
  Rng rng(seed);
  DensityOperator rho(random_density(9, rng));
  const auto st = key_example_state_check(rho, trials, seed);
  const auto inj = injectivity_sample(10, 20, seed);

  io::Json j;
  j["scope"] = "pointwise and sampled checks; Z is never enumerated";
  j["seed"] = seed;
  j["trials"] = trials;
  j["witness"] = {{"glue_residual", w.glue_residual},
                  {"printed_A_vs_omega2_A_inverse", printed_a},
                  {"printed_B_residual", printed_b},
                  {"printed_C_residual", printed_c},
                  {"commutator_AB", w.ab_commutator},
                  {"commutator_BC", w.bc_commutator},
                  {"commutator_AC", w.ac_commutator},
                  {"Pi_in_Z", pi_in},
                  {"Psi_in_Z", psi_in},
                  {"filler_exists", filler.exists},
                  {"filler_detail", filler.detail}};
  j["inverseless"] = {{"passes", inv.passes},
                      {"trials", inv.trials},
                      {"general_members", inv.general_members},
                      {"ambient_rejected", inv.rejected_in_ambient},
                      {"max_residual", inv.max_residual}};
  j["tau2_stability"] = {{"stable", tau2.stable}, {"trials", tau2.trials}, {"order_residual", tau2.max_order_residual}};
  j["state_check"] = {{"additivity", st.additivity},
                      {"orthocomplement", st.orthocomplement},
                      {"partial_additive", st.partial_additive},
                      {"column_consistency", st.column_consistency},
                      {"swap_orth", st.swap_orth},
                      {"half", st.half},
                      {"third_zero", st.third_zero},
                      {"phi_omega2_one_minus_half", st.omega2_one},
                      {"min_phi", st.min_phi},
                      {"max_phi", st.max_phi}};
  j["injectivity"] = {{"pairs", inj.pairs}, {"distinguished", inj.distinguished}, {"min_gap", inj.min_gap}};

  const bool ok = w.glue_residual < kEqualityTol && printed_a < kEqualityTol && printed_b < kEqualityTol &&
                  printed_c < kEqualityTol && w.ab_commutator < kEqualityTol && w.bc_commutator > 0.1 && pi_in &&
                  psi_in && !filler.exists && inv.holds() && tau2.holds() && st.holds() &&
                  inj.distinguished == inj.pairs;
  j["all_pass"] = ok;
  if (json) {
    out << j.dump(1) << '\n';
    return ok ? 0 : 1;
  }
  out << "scope: pointwise and sampled checks; Z is never enumerated\n";
  out << "d2(Psi) vs d1(Pi): " << num(w.glue_residual) << '\n';
  out << "printed A vs omega^2 A^-1: " << num(printed_a) << ", printed B: " << num(printed_b)
      << ", printed C: " << num(printed_c) << '\n';
  out << "||AB-BA||: " << num(w.ab_commutator) << "  ||BC-CB||: " << num(w.bc_commutator)
      << "  ||AC-CA||: " << num(w.ac_commutator) << '\n';
  out << "Pi in Z: " << (pi_in ? "yes" : "no") << "  Psi in Z: " << (psi_in ? "yes" : "no") << '\n';
  out << "3-simplex filler: " << (filler.exists ? "exists" : "none (" + filler.detail + ")") << '\n';
  out << "inverseless samples: " << inv.passes << "/" << inv.trials << " collapse, max residual "
      << num(inv.max_residual) << ", ambient counterexamples rejected " << inv.rejected_in_ambient << '\n';
  out << "tau_2 stability: " << tau2.stable << "/" << tau2.trials << ", tau^3 residual " << num(tau2.max_order_residual)
      << '\n';
  out << "state residuals: additivity " << num(st.additivity) << ", orthocomplement " << num(st.orthocomplement)
      << ", partial-additive " << num(st.partial_additive) << ", swap-orth " << num(st.swap_orth) << ", half "
      << num(st.half) << ", third-zero " << num(st.third_zero) << '\n';
  out << "phi(omega^2 1) - 1/2: " << num(st.omega2_one) << ", phi range [" << num(st.min_phi) << ", "
      << num(st.max_phi) << "]\n";
  out << "injectivity (sampled): " << inj.distinguished << "/" << inj.pairs << " pairs distinguished\n";
  out << (ok ? "all checks pass\n" : "some check failed\n");
  return ok ? 0 : 1;
}

FiniteEffectAlgebra effect_from_args(const std::string& in, int chain, int boolean) {
  if (!in.empty()) return io::effect_algebra_from_json(io::read_json_file(in));
  if (chain > 0) return chain_effect_algebra(chain);
  if (boolean > 0) return boolean_effect_algebra(boolean);
  throw InputError("effect-nerve needs --in, --chain or --boolean");
}

LabelledNerve action_from_json(const io::Json& j, int K) {
  auto g = io::group_from_json(j.at("group"));
  return action_partial_group(g, j.at("set_size").get<int>(), j.at("action").get<std::vector<std::vector<int>>>(),
                              j.at("subset").get<std::vector<int>>(), K);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"simpeff: partial algebras, simplicial and cyclic sets, states and the C^9 key example"};
  app.require_subcommand(1);
  app.fallthrough();
  int levels = 4;
  std::uint64_t seed = 1;
  bool json = false;
  std::string out_path;
  app.add_option("--levels", levels, "truncation bound for universally quantified checks")->check(CLI::Range(1, 12));
  app.add_option("--seed", seed, "master seed for sampled checks");
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--out", out_path, "write output to this path");

  auto* check = app.add_subcommand("check", "run a checker battery");
  std::string kind, in, datum;
  CheckOptions co;
  check->add_option("kind", kind)->required()->check(CLI::IsMember({"magma", "sset", "cyclic", "effect-algebra"}));
  check->add_option("--in", in)->required();
  check->add_option("--datum", datum, "associativity datum (magma only)");
  check->add_flag("--simplicial-effect", co.simplicial_effect);
  check->add_flag("--algebroid", co.algebroid);
  check->add_flag("--laws", co.laws);
  check->add_flag("--states", co.states);
  check->add_flag("--hc1", co.hc1);

  auto* build = app.add_subcommand("build", "construct a structure");
  std::string recipe, group_path, build_in;
  std::optional<int> torsion, z;
  int chain = 0, boolean = 0;
  build->add_option("recipe", recipe)
      ->required()
      ->check(CLI::IsMember({"comm-nerve", "action-pg", "effect-nerve", "s1", "key-example-witness"}));
  build->add_option("--group", group_path);
  build->add_option("--torsion", torsion);
  build->add_option("--z", z, "central element; writes the cyclic nerve");
  build->add_option("--in", build_in);
  build->add_option("--chain", chain);
  build->add_option("--boolean", boolean);

  auto* states = app.add_subcommand("states", "exact states and HC^1 of a cyclic set");
  std::string cyclic_path;
  bool want_hc1 = false;
  states->add_option("--cyclic", cyclic_path)->required();
  states->add_flag("--hc1", want_hc1);

  auto* demo = app.add_subcommand("quantum-demo", "key example witness and sampled checks");
  int trials = 100;
  demo->add_option("--trials", trials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (check->parsed()) {
      co.levels = levels;
      co.datum_path = datum;
      auto rep = run_check(kind, in, co);
      if (json)
        emit(rep.to_json(), out_path, out);
      else
        rep.print(out);
      return rep.exit_code();
    }
    if (build->parsed()) {
      io::Json j;
      if (recipe == "comm-nerve") {
        if (group_path.empty()) throw InputError("comm-nerve needs --group");
        auto g = io::group_from_json(io::read_json_file(group_path));
        auto n = comm_nerve(g, torsion, levels);
        j = z ? io::to_json(group_nerve_cyclic(g, *z, n)) : io::to_json(n);
      } else if (recipe == "action-pg") {
        if (build_in.empty()) throw InputError("action-pg needs --in");
        j = io::to_json(action_from_json(io::read_json_file(build_in), levels));
      } else if (recipe == "effect-nerve") {
        auto e = effect_from_args(build_in, chain, boolean);
        auto ax = validate_effect_algebra(e);
        if (!ax.ok()) throw InputError("not an effect algebra: " + ax.failures.front().detail);
        auto n = labelled_nerve(e.magma, max_associativity_datum(e.magma, levels), levels);
        j = io::to_json(effect_nerve_cyclic(e, n));
      } else if (recipe == "s1") {
        j = io::to_json(simplicial_circle(levels));
      } else {
        j = io::to_json(quantum::build_witness());
      }
      emit(j, out_path, out);
      return 0;
    }
    if (states->parsed()) return run_states(cyclic_path, want_hc1, json, out);
    return run_quantum_demo(trials, seed, json, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace simpeff::cli
