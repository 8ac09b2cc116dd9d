#include "paracurv/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "paracurv/errors.hpp"

namespace paracurv {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ModelSpec base_3d(std::string name) {
  ModelSpec m;
  m.name = std::move(name);
  m.dim = 3;
  m.metric = SymMatrix::diag({1, -1, 1});
  m.phi = Tensor(1, 1, 3);
  m.phi(1, 0) = 1;  // phi E_1 = E_2
  m.phi(0, 1) = 1;  // phi E_2 = E_1
  m.xi = {0, 0, 1};
  m.eta = {0, 0, 1};
  return m;
}

Rational rational_from(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected an integer or a \"p/q\" string");
}

int int_from(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
  return v.get<int>();
}

std::vector<Rational> rational_row(const json& v, int dim, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  if ((int)v.size() != dim)
    throw DimensionMismatchError(where + ": expected " + std::to_string(dim) +
                                 " entries, got " + std::to_string(v.size()));
  std::vector<Rational> row;
  row.reserve(dim);
  for (int j = 0; j < dim; ++j)
    row.push_back(rational_from(v[j], where + "[" + std::to_string(j + 1) + "]"));
  return row;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"paper_example", "para_heisenberg",
                                              "abelian_flat"};
  return names;
}

ModelSpec builtin(const std::string& name) {
  if (name == "paper_example") {
    ModelSpec m = base_3d(name);
    m.structure_constants = {{1, 2, 3, Rational(2)}, {1, 3, 2, Rational(2)},
                             {2, 3, 1, Rational(2)}};
    return m;
  }
  if (name == "para_heisenberg") {
    ModelSpec m = base_3d(name);
    m.structure_constants = {{1, 2, 3, Rational(2)}};
    return m;
  }
  if (name == "abelian_flat") return base_3d(name);
  throw UnknownModelError("unknown builtin model: " + name);
}

ModelSpec parse_model(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("model file: top level must be an object");

  static const std::set<std::string> allowed{"name", "dim",  "structure_constants",
                                             "metric", "phi", "xi",
                                             "eta"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!allowed.count(it.key())) throw ParseError("unknown key \"" + it.key() + "\"");
  for (const auto& key : allowed)
    if (!doc.contains(key)) throw ParseError("missing key \"" + key + "\"");

  ModelSpec m;
  if (!doc["name"].is_string()) throw ParseError("name: expected a string");
  m.name = doc["name"].get<std::string>();
  m.dim = int_from(doc["dim"], "dim");
  if (m.dim < 1) throw ParseError("dim: must be positive");
  const int d = m.dim;

  if (!doc["structure_constants"].is_array())
    throw ParseError("structure_constants: expected an array");
  std::set<std::tuple<int, int, int>> seen;
  for (std::size_t e = 0; e < doc["structure_constants"].size(); ++e) {
    const std::string where = "structure_constants[" + std::to_string(e + 1) + "]";
    const json& entry = doc["structure_constants"][e];
    if (!entry.is_array() || entry.size() != 4)
      throw ParseError(where + ": expected [i, j, k, value]");
    int i = int_from(entry[0], where + " i");
    int j = int_from(entry[1], where + " j");
    const int k = int_from(entry[2], where + " k");
    for (int idx : {i, j, k})
      if (idx < 1 || idx > d)
        throw ParseError(where + ": index " + std::to_string(idx) + " outside 1.." +
                         std::to_string(d));
    if (i == j) throw ParseError(where + ": i and j must differ");
    Rational v = rational_from(entry[3], where + " value");
    if (i > j) {
      std::swap(i, j);
      v = -v;
    }
    if (!seen.insert({i, j, k}).second)
      throw DuplicateEntryError(where + ": entry for (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) +
                                ") already given");
    if (!v.is_zero()) m.structure_constants.push_back({i, j, k, std::move(v)});
  }
  std::sort(m.structure_constants.begin(), m.structure_constants.end(),
            [](const StructureConstant& a, const StructureConstant& b) {
              return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
            });

  if (!doc["metric"].is_array())
    throw ParseError("metric: expected an array of rows");
  if ((int)doc["metric"].size() != d)
    throw DimensionMismatchError("metric: expected " + std::to_string(d) + " rows, got " +
                                 std::to_string(doc["metric"].size()));
  m.metric = SymMatrix(d);
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < d; ++i)
    rows.push_back(rational_row(doc["metric"][i], d, "metric[" + std::to_string(i + 1) + "]"));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (rows[i][j] != rows[j][i])
        throw ParseError("metric: not symmetric at (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
      m.metric.set(i, j, rows[i][j]);
    }

  if (!doc["phi"].is_array()) throw ParseError("phi: expected an array of rows");
  if ((int)doc["phi"].size() != d)
    throw DimensionMismatchError("phi: expected " + std::to_string(d) + " rows, got " +
                                 std::to_string(doc["phi"].size()));
  m.phi = Tensor(1, 1, d);
  for (int i = 0; i < d; ++i) {
    const auto row = rational_row(doc["phi"][i], d, "phi[" + std::to_string(i + 1) + "]");
    for (int j = 0; j < d; ++j) m.phi(i, j) = row[j];
  }

  m.xi = rational_row(doc["xi"], d, "xi");
  m.eta = rational_row(doc["eta"], d, "eta");
  return m;
}

ModelSpec load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string canonical_model(const ModelSpec& m) {
  const int d = m.dim;
  ordered_json doc;
  doc["name"] = m.name;
  doc["dim"] = d;

  std::vector<StructureConstant> sc = m.structure_constants;
  std::sort(sc.begin(), sc.end(), [](const StructureConstant& a, const StructureConstant& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  ordered_json scj = ordered_json::array();
  for (const auto& e : sc) {
    if (e.value.is_zero()) continue;
    scj.push_back(ordered_json::array({e.i, e.j, e.k, e.value.str()}));
  }
  doc["structure_constants"] = std::move(scj);

  auto matrix_rows = [d](auto&& get) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < d; ++i) {
      ordered_json row = ordered_json::array();
      for (int j = 0; j < d; ++j) row.push_back(get(i, j));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  doc["metric"] = matrix_rows([&](int i, int j) { return m.metric(i, j).str(); });
  doc["phi"] = matrix_rows([&](int i, int j) { return m.phi(i, j).str(); });

  ordered_json xij = ordered_json::array(), etaj = ordered_json::array();
  for (int i = 0; i < d; ++i) {
    xij.push_back(m.xi[i].str());
    etaj.push_back(m.eta[i].str());
  }
  doc["xi"] = std::move(xij);
  doc["eta"] = std::move(etaj);
  return doc.dump(2) + "\n";
}

FrameManifold frame_of(const ModelSpec& m) {
  const int d = m.dim;
  Tensor c(1, 2, d);
  for (const auto& e : m.structure_constants) {
    c(e.k - 1, e.i - 1, e.j - 1) += e.value;
    c(e.k - 1, e.j - 1, e.i - 1) -= e.value;
  }
  return FrameManifold(d, std::move(c), m.metric);
}

ParacontactStructure structure_of(const ModelSpec& m) {
  return ParacontactStructure{frame_of(m), m.phi, m.xi, m.eta};
}

}  // namespace paracurv
