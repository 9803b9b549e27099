#include "simpeff/io.hpp"

#include <fstream>
#include <sstream>

namespace simpeff::io {

namespace {

const Json& need(const Json& j, const std::string& key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError("missing field '" + key + "'");
  return *it;
}

template <class T>
T get_as(const Json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError("field '" + what + "' has the wrong type: " + e.what());
  }
}

template <class T>
T field(const Json& j, const std::string& key) {
  return get_as<T>(need(j, key), key);
}

std::string level_key(int n, int i) { return std::to_string(n) + "," + std::to_string(i); }

Json sset_body(const TruncatedSSet& x) {
  Json j;
  const int K = x.truncation();
  j["truncation"] = K;
  j["counts"] = x.counts();
  Json faces = Json::object(), degens = Json::object();
  for (int n = 1; n <= K; ++n)
    for (int i = 0; i <= n; ++i) faces[level_key(n, i)] = x.face_table(n, i);
  for (int n = 0; n < K; ++n)
    for (int i = 0; i <= n; ++i) degens[level_key(n, i)] = x.degeneracy_table(n, i);
  j["faces"] = std::move(faces);
  j["degeneracies"] = std::move(degens);
  return j;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(source + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(1) << '\n';
}

Json to_json(const PartialUnitalMagma& m) {
  Json j;
  j["size"] = m.size();
  j["unit"] = m.unit();
  Json products = Json::array();
  for (const auto& e : m.products())
    if (e[0] != m.unit() && e[1] != m.unit()) products.push_back(e);
  j["products"] = std::move(products);
  return j;
}

PartialUnitalMagma magma_from_json(const Json& j) {
  auto products = field<std::vector<std::array<int, 3>>>(j, "products");
  try {
    return PartialUnitalMagma(field<int>(j, "size"), field<int>(j, "unit"), products);
  } catch (const ValidationError& e) {
    throw InputError(std::string("invalid magma: ") + e.what());
  }
}

Json to_json(const AssociativityDatum& a) {
  Json levels = Json::object();
  for (const auto& [n, ts] : a.levels()) levels[std::to_string(n)] = ts;
  return Json{{"levels", levels}};
}

AssociativityDatum datum_from_json(const Json& j) {
  std::map<int, std::vector<Tuple>> levels;
  for (const auto& [key, value] : need(j, "levels").items()) {
    int n = 0;
    try {
      n = std::stoi(key);
    } catch (const std::exception&) {
      throw InputError("datum level key '" + key + "' is not an integer");
    }
    auto ts = get_as<std::vector<Tuple>>(value, "levels." + key);
    for (const auto& t : ts)
      if (static_cast<int>(t.size()) != n) throw InputError("datum level " + key + " holds " + format_tuple(t));
    levels[n] = std::move(ts);
  }
  return AssociativityDatum(std::move(levels));
}

Json to_json(const TruncatedSSet& x) { return sset_body(x); }

TruncatedSSet sset_from_json(const Json& j) {
  const int K = field<int>(j, "truncation");
  if (K < 0) throw InputError("truncation must be >= 0");
  auto counts = field<std::vector<int>>(j, "counts");
  if (static_cast<int>(counts.size()) != K + 1) throw InputError("counts must list levels 0..truncation");
  const auto& fj = need(j, "faces");
  const auto& dj = need(j, "degeneracies");
  std::vector<std::vector<TruncatedSSet::Table>> faces(static_cast<std::size_t>(K) + 1), degens(static_cast<std::size_t>(K));
  for (int n = 1; n <= K; ++n)
    for (int i = 0; i <= n; ++i)
      faces[static_cast<std::size_t>(n)].push_back(
          get_as<TruncatedSSet::Table>(need(fj, level_key(n, i)), "faces." + level_key(n, i)));
  for (int n = 0; n < K; ++n)
    for (int i = 0; i <= n; ++i)
      degens[static_cast<std::size_t>(n)].push_back(
          get_as<TruncatedSSet::Table>(need(dj, level_key(n, i)), "degeneracies." + level_key(n, i)));
  return TruncatedSSet(K, std::move(counts), std::move(faces), std::move(degens));
}

Json to_json(const LabelledNerve& n) {
  Json j = sset_body(n.sset);
  Json tuples = Json::object();
  for (std::size_t k = 1; k < n.tuples.size(); ++k) tuples[std::to_string(k)] = n.tuples[k];
  j["tuples"] = std::move(tuples);
  return j;
}

Json to_json(const CyclicSSet& c) {
  Json j = sset_body(c.base);
  Json tau = Json::object();
  for (std::size_t n = 0; n < c.tau.size(); ++n) tau[std::to_string(n)] = c.tau[n];
  j["tau"] = std::move(tau);
  return j;
}

CyclicSSet cyclic_from_json(const Json& j) {
  CyclicSSet c{sset_from_json(j), {}};
  const auto& tj = need(j, "tau");
  for (int n = 0; n <= c.base.truncation(); ++n) {
    auto key = std::to_string(n);
    if (n == 0 && !tj.contains(key)) {
      c.tau.emplace_back(static_cast<std::size_t>(c.base.count(0)));
      for (int v = 0; v < c.base.count(0); ++v) c.tau.back()[static_cast<std::size_t>(v)] = v;
      continue;
    }
    c.tau.push_back(get_as<std::vector<SimplexId>>(need(tj, key), "tau." + key));
  }
  return c;
}

Json to_json(const FiniteGroup& g) { return Json{{"order", g.order()}, {"mul", g.table()}}; }

FiniteGroup group_from_json(const Json& j) {
  auto mul = field<std::vector<std::vector<int>>>(j, "mul");
  if (static_cast<int>(mul.size()) != field<int>(j, "order")) throw InputError("group table size != order");
  try {
    return FiniteGroup(std::move(mul), j.value("name", ""));
  } catch (const ValidationError& e) {
    throw InputError(std::string("invalid group: ") + e.what());
  }
}

Json to_json(const FiniteEffectAlgebra& e) {
  Json j = to_json(e.magma);
  j["orthocomplement"] = e.orthocomplement;
  return j;
}

FiniteEffectAlgebra effect_algebra_from_json(const Json& j) {
  FiniteEffectAlgebra e{magma_from_json(j), field<std::vector<ElementId>>(j, "orthocomplement")};
  if (static_cast<int>(e.orthocomplement.size()) != e.magma.size())
    throw InputError("orthocomplement must list every element");
  for (int v : e.orthocomplement)
    if (v < 0 || v >= e.magma.size()) throw InputError("orthocomplement value out of range");
  return e;
}

Json matrix_to_json(const quantum::ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

quantum::ComplexMatrix matrix_from_json(const Json& j) {
  auto rows = get_as<std::vector<std::vector<std::array<double, 2>>>>(j, "matrix");
  const auto n = static_cast<Eigen::Index>(rows.size());
  quantum::ComplexMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(r)].size()) != n) throw InputError("matrix must be square");
    for (Eigen::Index c = 0; c < n; ++c) {
      const auto& e = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      m(r, c) = {e[0], e[1]};
    }
  }
  return m;
}

Json to_json(const quantum::ProjectiveMeasurement& m) {
  Json j;
  j["d"] = m.d;
  j["arity"] = m.arity;
  Json p = Json::object();
  for (int x = 0; x < m.outcomes(); ++x) {
    std::string key;
    for (int a : m.outcome(x)) key += std::to_string(a);
    p[key] = matrix_to_json(m.projectors[static_cast<std::size_t>(x)]);
  }
  j["projectors"] = std::move(p);
  return j;
}

Json to_json(const quantum::KeyWitness& w) {
  Json j;
  j["Pi"] = to_json(w.pi);
  j["Psi"] = to_json(w.psi);
  j["A"] = matrix_to_json(w.A);
  j["B"] = matrix_to_json(w.B);
  j["C"] = matrix_to_json(w.C);
  j["printed_A"] = matrix_to_json(w.printed_A);
  j["printed_B"] = matrix_to_json(w.printed_B);
  j["printed_C"] = matrix_to_json(w.printed_C);
  j["glue_residual"] = w.glue_residual;
  j["commutator_AB"] = w.ab_commutator;
  j["commutator_BC"] = w.bc_commutator;
  j["commutator_AC"] = w.ac_commutator;
  return j;
}

}  // namespace simpeff::io
