#include "tvd/scenario_io.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tvd/symmetry.hpp"

namespace tvd::io {

namespace {

using json = nlohmann::json;
using Index = Eigen::Index;

const std::set<std::string> kMatrixNames{"hamiltonian", "h0", "v", "smatrix"};

struct DetectorShape {
  Detector detector;
  std::string_view name;
  std::vector<std::string> refs;            // required state/symmetry roles
  std::vector<std::string> required_params;
  std::vector<std::string> optional_params;
};

const std::vector<DetectorShape>& detector_table() {
  static const std::vector<DetectorShape> table{
      {Detector::UnitaryCurie, "unitary_curie", {"symmetry", "state"}, {"t"}, {}},
      {Detector::ScatteringCurie, "scattering_curie", {"symmetry", "state_in", "state_out"}, {}, {}},
      {Detector::SMatrixInference, "s_matrix_inference", {"symmetry"}, {}, {"ti", "tf"}},
      {Detector::CptLink, "cpt_link", {"cpt", "cp"}, {}, {}},
      {Detector::Kabir, "kabir", {"symmetry", "state_in", "state_out"}, {}, {"t"}},
      {Detector::Wigner, "wigner", {"symmetry"}, {}, {"gap_tol"}},
      {Detector::Kramers, "kramers", {"symmetry"}, {}, {"gap_tol"}},
  };
  return table;
}

const DetectorShape& shape_of(Detector d) {
  for (const auto& s : detector_table()) {
    if (s.detector == d) return s;
  }
  throw Error("unknown detector");
}

bool is_state_role(const std::string& role) { return role.rfind("state", 0) == 0; }

std::string index_path(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

void reject_unknown(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) throw ScenarioError(path + "." + key, "unknown field");
  }
}

const json& require_field(const json& obj, const std::string& path, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ScenarioError(path + "." + key, "missing required field");
  return *it;
}

double read_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ScenarioError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ScenarioError(path, "number is not finite");
  return v;
}

Complex read_complex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw ScenarioError(path, "expected a complex number as [re, im]");
  return {read_number(j[0], path + "[0]"), read_number(j[1], path + "[1]")};
}

ComplexMatrix read_matrix(const json& j, const std::string& path, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) {
    throw ScenarioError(path, "expected " + std::to_string(dim) + " rows");
  }
  const auto n = static_cast<Index>(dim);
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::string row_path = index_path(path, r);
    const json& row = j[r];
    if (!row.is_array() || row.size() != dim) {
      throw ScenarioError(row_path, "expected " + std::to_string(dim) + " entries");
    }
    for (std::size_t c = 0; c < dim; ++c) {
      m(static_cast<Index>(r), static_cast<Index>(c)) = read_complex(row[c], index_path(row_path, c));
    }
  }
  return m;
}

StateVector read_state(const json& j, const std::string& path, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) throw ScenarioError(path, "expected " + std::to_string(dim) + " amplitudes");
  StateVector v(static_cast<Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) v(static_cast<Index>(i)) = read_complex(j[i], index_path(path, i));
  return v;
}

json write_complex(Complex z) { return json::array({z.real(), z.imag()}); }

json write_matrix(const ComplexMatrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(write_complex(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json write_state(const StateVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(write_complex(v(i)));
  return out;
}

// ---- canonical text writer -------------------------------------------------

std::string format_real(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int numeric_depth(const json& j) {
  if (j.is_array()) {
    int depth = 1;
    for (const auto& e : j) {
      const int d = numeric_depth(e);
      if (d < 0) return -1;
      depth = std::max(depth, 1 + d);
    }
    return depth;
  }
  if (j.is_object()) return -1;
  return 0;
}

void write_canonical(const json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner_pad(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case json::value_t::null: out += "null"; return;
    case json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; return;
    case json::value_t::number_integer: out += std::to_string(j.get<std::int64_t>()); return;
    case json::value_t::number_unsigned: out += std::to_string(j.get<std::uint64_t>()); return;
    case json::value_t::number_float: out += format_real(j.get<double>()); return;
    case json::value_t::string: out += j.dump(); return;
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const int depth = numeric_depth(j);
      if (depth >= 1 && depth <= 2) {
        out += '[';
        bool first = true;
        for (const auto& e : j) {
          if (!first) out += ", ";
          first = false;
          write_canonical(e, out, indent);
        }
        out += ']';
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ",\n";
        first = false;
        out += inner_pad;
        write_canonical(e, out, indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {  // std::map: already sorted
        if (!first) out += ",\n";
        first = false;
        out += inner_pad + json(key).dump() + ": ";
        write_canonical(value, out, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    default: out += "null"; return;
  }
}

std::string canonical(const json& j) {
  std::string out;
  write_canonical(j, out, 0);
  out += '\n';
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ScenarioError("$", std::string("malformed JSON: ") + e.what());
  }
}

// ---- requests --------------------------------------------------------------

std::set<std::string> request_keys(const DetectorShape& shape) {
  std::set<std::string> keys{"id", "detector"};
  keys.insert(shape.refs.begin(), shape.refs.end());
  keys.insert(shape.required_params.begin(), shape.required_params.end());
  keys.insert(shape.optional_params.begin(), shape.optional_params.end());
  return keys;
}

void require_matrix(const Scenario& s, const std::string& path, const std::string& name, Detector d) {
  if (!s.matrices.count(name)) {
    throw ScenarioError(path, std::string(to_string(d)) + " needs matrix '" + name + "', which is not declared");
  }
}

void check_request_matrices(const Scenario& s, const Request& r, const std::string& path) {
  switch (r.detector) {
    case Detector::UnitaryCurie:
    case Detector::CptLink:
    case Detector::Wigner:
    case Detector::Kramers: require_matrix(s, path, "hamiltonian", r.detector); break;
    case Detector::ScatteringCurie: require_matrix(s, path, "smatrix", r.detector); break;
    case Detector::Kabir:
      require_matrix(s, path, r.params.count("t") ? "hamiltonian" : "smatrix", r.detector);
      break;
    case Detector::SMatrixInference: {
      require_matrix(s, path, "h0", r.detector);
      const bool build = r.params.count("ti") || r.params.count("tf");
      if (build) {
        if (!r.params.count("ti") || !r.params.count("tf")) {
          throw ScenarioError(path, "s_matrix_inference needs both ti and tf to build S");
        }
        if (r.params.at("ti") > r.params.at("tf")) throw ScenarioError(path + ".ti", "ti must not exceed tf");
        require_matrix(s, path, "v", r.detector);
      } else {
        require_matrix(s, path, "smatrix", r.detector);
      }
      break;
    }
  }
}

Request read_request(const json& j, const std::string& path, std::size_t index, const Scenario& s) {
  if (!j.is_object()) throw ScenarioError(path, "expected an object");
  const json& det = require_field(j, path, "detector");
  if (!det.is_string()) throw ScenarioError(path + ".detector", "expected a string");
  const auto kind = detector_from_string(det.get<std::string>());
  if (!kind) throw ScenarioError(path + ".detector", "unknown detector '" + det.get<std::string>() + "'");
  const DetectorShape& shape = shape_of(*kind);
  reject_unknown(j, path, request_keys(shape));

  Request r;
  r.detector = *kind;
  if (auto it = j.find("id"); it != j.end()) {
    if (!it->is_string()) throw ScenarioError(path + ".id", "expected a string");
    r.id = it->get<std::string>();
  } else {
    r.id = std::to_string(index);
  }
  for (const auto& role : shape.refs) {
    const json& ref = require_field(j, path, role);
    const std::string ref_path = path + "." + role;
    if (!ref.is_string()) throw ScenarioError(ref_path, "expected a name");
    const auto name = ref.get<std::string>();
    if (is_state_role(role)) {
      if (!s.states.count(name)) throw ScenarioError(ref_path, "undeclared state '" + name + "'");
    } else if (!s.find_symmetry(name)) {
      throw ScenarioError(ref_path, "undeclared symmetry '" + name + "'");
    }
    r.refs[role] = name;
  }
  for (const auto& p : shape.required_params) r.params[p] = read_number(require_field(j, path, p), path + "." + p);
  for (const auto& p : shape.optional_params) {
    if (auto it = j.find(p); it != j.end()) r.params[p] = read_number(*it, path + "." + p);
  }
  if (r.params.count("gap_tol") && !(r.params.at("gap_tol") > 0.0)) {
    throw ScenarioError(path + ".gap_tol", "must be positive");
  }
  check_request_matrices(s, r, path);
  return r;
}

json write_request(const Request& r) {
  json j = json::object();
  j["id"] = r.id;
  j["detector"] = std::string(to_string(r.detector));
  for (const auto& [role, name] : r.refs) j[role] = name;
  for (const auto& [key, value] : r.params) j[key] = value;
  return j;
}

// ---- witness / report helpers ----------------------------------------------

json write_witness(const Witness& w) {
  json j = json::object();
  for (const auto& [key, value] : w) {
    std::visit(
        [&](const auto& v) {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, Complex>) {
            j[key] = write_complex(v);
          } else {
            j[key] = v;
          }
        },
        value);
  }
  return j;
}

Witness read_witness(const json& j, const std::string& path) {
  if (!j.is_object()) throw ScenarioError(path, "expected an object");
  Witness w;
  for (const auto& [key, value] : j.items()) {
    const std::string p = path + "." + key;
    if (value.is_string()) {
      w[key] = value.get<std::string>();
    } else if (value.is_array()) {
      w[key] = read_complex(value, p);
    } else {
      w[key] = read_number(value, p);
    }
  }
  return w;
}

std::string read_string(const json& obj, const std::string& path, const std::string& key) {
  const json& v = require_field(obj, path, key);
  if (!v.is_string()) throw ScenarioError(path + "." + key, "expected a string");
  return v.get<std::string>();
}

json write_tolerances(const Tolerances& t) {
  return json{{"gap_tol", t.gap_tol}, {"tau_eig", t.tau_eig}, {"tau_violation", t.tau_violation},
              {"tau_zero", t.tau_zero}};
}

}  // namespace

std::string_view to_string(Detector d) { return shape_of(d).name; }

std::optional<Detector> detector_from_string(std::string_view s) {
  for (const auto& shape : detector_table()) {
    if (shape.name == s) return shape.detector;
  }
  return std::nullopt;
}

Tolerances ToleranceOverrides::apply_to(Tolerances base) const {
  if (tau_zero) base.tau_zero = *tau_zero;
  if (tau_violation) base.tau_violation = *tau_violation;
  if (gap_tol) base.gap_tol = *gap_tol;
  return base;
}

const SymmetryDecl* Scenario::find_symmetry(std::string_view label) const {
  for (const auto& s : symmetries) {
    if (s.label == label) return &s;
  }
  return nullptr;
}

bool equal(const Scenario& a, const Scenario& b) {
  auto same_matrix = [](const ComplexMatrix& x, const ComplexMatrix& y) {
    return x.rows() == y.rows() && x.cols() == y.cols() && x == y;
  };
  if (a.schema_version != b.schema_version || a.dim != b.dim || a.description != b.description ||
      a.seed != b.seed || a.tolerances.tau_zero != b.tolerances.tau_zero ||
      a.tolerances.tau_violation != b.tolerances.tau_violation || a.tolerances.gap_tol != b.tolerances.gap_tol) {
    return false;
  }
  if (a.matrices.size() != b.matrices.size() || a.states.size() != b.states.size() ||
      a.symmetries.size() != b.symmetries.size() || a.requests.size() != b.requests.size()) {
    return false;
  }
  for (const auto& [name, m] : a.matrices) {
    auto it = b.matrices.find(name);
    if (it == b.matrices.end() || !same_matrix(m, it->second)) return false;
  }
  for (const auto& [name, v] : a.states) {
    auto it = b.states.find(name);
    if (it == b.states.end() || v.size() != it->second.size() || v != it->second) return false;
  }
  for (std::size_t i = 0; i < a.symmetries.size(); ++i) {
    const auto& x = a.symmetries[i];
    const auto& y = b.symmetries[i];
    if (x.label != y.label || x.antilinear != y.antilinear || !same_matrix(x.unitary_part, y.unitary_part)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.requests.size(); ++i) {
    const auto& x = a.requests[i];
    const auto& y = b.requests[i];
    if (x.id != y.id || x.detector != y.detector || x.refs != y.refs || x.params != y.params) return false;
  }
  return true;
}

Scenario parse_scenario(std::string_view text) {
  const json root = parse_json(text);
  if (!root.is_object()) throw ScenarioError("$", "expected a JSON object");
  reject_unknown(root, "$",
                 {"schema_version", "dim", "description", "matrices", "symmetries", "states", "requests",
                  "tolerances", "seed"});

  Scenario s;
  const json& version = require_field(root, "$", "schema_version");
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
    throw ScenarioError("$.schema_version", "unsupported schema version (expected 1)");
  }
  const json& dim = require_field(root, "$", "dim");
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1) {
    throw ScenarioError("$.dim", "expected a positive integer");
  }
  s.dim = dim.get<std::size_t>();
  if (auto it = root.find("description"); it != root.end()) {
    if (!it->is_string()) throw ScenarioError("$.description", "expected a string");
    s.description = it->get<std::string>();
  }
  if (auto it = root.find("seed"); it != root.end()) {
    if (!it->is_number_integer()) throw ScenarioError("$.seed", "expected an integer");
    s.seed = it->get<std::int64_t>();
  }

  if (auto it = root.find("tolerances"); it != root.end()) {
    if (!it->is_object()) throw ScenarioError("$.tolerances", "expected an object");
    reject_unknown(*it, "$.tolerances", {"tau_zero", "tau_violation", "gap_tol"});
    auto read_opt = [&](const char* key) -> std::optional<double> {
      auto f = it->find(key);
      if (f == it->end()) return std::nullopt;
      const std::string p = std::string("$.tolerances.") + key;
      const double v = read_number(*f, p);
      if (!(v > 0.0)) throw ScenarioError(p, "must be positive");
      return v;
    };
    s.tolerances.tau_zero = read_opt("tau_zero");
    s.tolerances.tau_violation = read_opt("tau_violation");
    s.tolerances.gap_tol = read_opt("gap_tol");
  }
  const Tolerances tol = s.tolerances.apply_to({});
  if (!(tol.tau_zero < tol.tau_violation)) {
    throw ScenarioError("$.tolerances", "tau_zero must be below tau_violation");
  }

  if (auto it = root.find("matrices"); it != root.end()) {
    if (!it->is_object()) throw ScenarioError("$.matrices", "expected an object");
    for (const auto& [name, value] : it->items()) {
      const std::string path = "$.matrices." + name;
      if (!kMatrixNames.count(name)) throw ScenarioError(path, "unknown matrix name");
      ComplexMatrix m = read_matrix(value, path, s.dim);
      if (name != "smatrix" && !linalg::is_hermitian(m, tol.tau_zero)) {
        throw ScenarioError(path, "matrix is not Hermitian");
      }
      s.matrices.emplace(name, std::move(m));
    }
  }

  if (auto it = root.find("symmetries"); it != root.end()) {
    if (!it->is_array()) throw ScenarioError("$.symmetries", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = index_path("$.symmetries", i);
      const json& j = (*it)[i];
      if (!j.is_object()) throw ScenarioError(path, "expected an object");
      reject_unknown(j, path, {"label", "unitary_part", "antilinear"});
      SymmetryDecl decl;
      decl.label = read_string(j, path, "label");
      if (decl.label.empty()) throw ScenarioError(path + ".label", "label must not be empty");
      if (s.find_symmetry(decl.label)) throw ScenarioError(path + ".label", "duplicate symmetry '" + decl.label + "'");
      decl.unitary_part = read_matrix(require_field(j, path, "unitary_part"), path + ".unitary_part", s.dim);
      if (!linalg::is_unitary(decl.unitary_part, tol.tau_zero)) {
        throw ScenarioError(path + ".unitary_part", "symmetry '" + decl.label + "' is not unitary");
      }
      const json& flag = require_field(j, path, "antilinear");
      if (!flag.is_boolean()) throw ScenarioError(path + ".antilinear", "expected a boolean");
      decl.antilinear = flag.get<bool>();
      s.symmetries.push_back(std::move(decl));
    }
  }

  if (auto it = root.find("states"); it != root.end()) {
    if (!it->is_object()) throw ScenarioError("$.states", "expected an object");
    for (const auto& [name, value] : it->items()) {
      const std::string path = "$.states." + name;
      StateVector v = read_state(value, path, s.dim);
      if (!linalg::is_normalized(v, tol.tau_zero)) throw ScenarioError(path, "state is not normalized");
      s.states.emplace(name, std::move(v));
    }
  }

  if (auto it = root.find("requests"); it != root.end()) {
    if (!it->is_array()) throw ScenarioError("$.requests", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      s.requests.push_back(read_request((*it)[i], index_path("$.requests", i), i, s));
    }
  }
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  json root = json::object();
  root["schema_version"] = s.schema_version;
  root["dim"] = s.dim;
  if (!s.description.empty()) root["description"] = s.description;
  if (s.seed) root["seed"] = *s.seed;
  json tol = json::object();
  if (s.tolerances.tau_zero) tol["tau_zero"] = *s.tolerances.tau_zero;
  if (s.tolerances.tau_violation) tol["tau_violation"] = *s.tolerances.tau_violation;
  if (s.tolerances.gap_tol) tol["gap_tol"] = *s.tolerances.gap_tol;
  if (!tol.empty()) root["tolerances"] = tol;
  json matrices = json::object();
  for (const auto& [name, m] : s.matrices) matrices[name] = write_matrix(m);
  root["matrices"] = matrices;
  json symmetries = json::array();
  for (const auto& d : s.symmetries) {
    symmetries.push_back({{"label", d.label}, {"unitary_part", write_matrix(d.unitary_part)}, {"antilinear", d.antilinear}});
  }
  root["symmetries"] = symmetries;
  json states = json::object();
  for (const auto& [name, v] : s.states) states[name] = write_state(v);
  root["states"] = states;
  json requests = json::array();
  for (const auto& r : s.requests) requests.push_back(write_request(r));
  root["requests"] = requests;
  return canonical(root);
}

Record record_from_verdict(std::string id, Detector d, const Verdict& v) {
  Record r;
  r.id = std::move(id);
  r.detector = std::string(to_string(d));
  r.outcome = std::string(to_string(v.outcome));
  r.violated_symmetry = v.violated_symmetry;
  r.margin = v.margin;
  r.reason = std::string(to_string(v.reason));
  r.detail = v.detail;
  r.witness = v.witness;
  return r;
}

std::string serialize_report(const Report& r) {
  json root = json::object();
  root["schema_version"] = r.schema_version;
  json records = json::array();
  for (const auto& rec : r.records) {
    records.push_back({{"id", rec.id},
                       {"detector", rec.detector},
                       {"outcome", rec.outcome},
                       {"violated_symmetry", rec.violated_symmetry},
                       {"margin", rec.margin},
                       {"reason", rec.reason},
                       {"detail", rec.detail},
                       {"witness", write_witness(rec.witness)}});
  }
  root["records"] = records;
  json prov = json::object();
  prov["tolerances"] = write_tolerances(r.provenance.tolerances);
  prov["seed"] = r.provenance.seed ? json(*r.provenance.seed) : json(nullptr);
  prov["tool_version"] = r.provenance.tool_version;
  root["provenance"] = prov;
  if (r.oracle) {
    json checks = json::array();
    for (const auto& c : *r.oracle) {
      checks.push_back({{"id", c.id},
                        {"agree", c.agree},
                        {"expected_outcome", c.expected_outcome},
                        {"truth_margin", c.truth_margin},
                        {"note", c.note}});
    }
    root["oracle"] = checks;
  }
  return canonical(root);
}

Report parse_report(std::string_view text) {
  const json root = parse_json(text);
  if (!root.is_object()) throw ScenarioError("$", "expected a JSON object");
  reject_unknown(root, "$", {"schema_version", "records", "provenance", "oracle"});
  Report r;
  const json& version = require_field(root, "$", "schema_version");
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
    throw ScenarioError("$.schema_version", "unsupported schema version (expected 1)");
  }
  const json& records = require_field(root, "$", "records");
  if (!records.is_array()) throw ScenarioError("$.records", "expected an array");
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string path = index_path("$.records", i);
    const json& j = records[i];
    if (!j.is_object()) throw ScenarioError(path, "expected an object");
    reject_unknown(j, path, {"id", "detector", "outcome", "violated_symmetry", "margin", "reason", "detail", "witness"});
    Record rec;
    rec.id = read_string(j, path, "id");
    rec.detector = read_string(j, path, "detector");
    rec.outcome = read_string(j, path, "outcome");
    rec.violated_symmetry = read_string(j, path, "violated_symmetry");
    rec.margin = read_number(require_field(j, path, "margin"), path + ".margin");
    rec.reason = read_string(j, path, "reason");
    rec.detail = read_string(j, path, "detail");
    rec.witness = read_witness(require_field(j, path, "witness"), path + ".witness");
    r.records.push_back(std::move(rec));
  }
  const json& prov = require_field(root, "$", "provenance");
  if (!prov.is_object()) throw ScenarioError("$.provenance", "expected an object");
  const json& tol = require_field(prov, "$.provenance", "tolerances");
  r.provenance.tolerances.tau_zero = read_number(require_field(tol, "$.provenance.tolerances", "tau_zero"), "$.provenance.tolerances.tau_zero");
  r.provenance.tolerances.tau_eig = read_number(require_field(tol, "$.provenance.tolerances", "tau_eig"), "$.provenance.tolerances.tau_eig");
  r.provenance.tolerances.tau_violation = read_number(require_field(tol, "$.provenance.tolerances", "tau_violation"), "$.provenance.tolerances.tau_violation");
  r.provenance.tolerances.gap_tol = read_number(require_field(tol, "$.provenance.tolerances", "gap_tol"), "$.provenance.tolerances.gap_tol");
  if (auto it = prov.find("seed"); it != prov.end() && !it->is_null()) r.provenance.seed = it->get<std::int64_t>();
  r.provenance.tool_version = read_string(prov, "$.provenance", "tool_version");
  if (auto it = root.find("oracle"); it != root.end()) {
    std::vector<OracleCheck> checks;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = index_path("$.oracle", i);
      const json& j = (*it)[i];
      OracleCheck c;
      c.id = read_string(j, path, "id");
      c.agree = require_field(j, path, "agree").get<bool>();
      c.expected_outcome = read_string(j, path, "expected_outcome");
      c.truth_margin = read_number(require_field(j, path, "truth_margin"), path + ".truth_margin");
      c.note = read_string(j, path, "note");
      checks.push_back(std::move(c));
    }
    r.oracle = std::move(checks);
  }
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  for (const auto& rec : r.records) {
    out << rec.id << "  " << rec.detector << "  " << rec.outcome;
    if (!rec.violated_symmetry.empty()) out << "(" << rec.violated_symmetry << ")";
    out << "  margin=" << format_real(rec.margin);
    if (rec.reason != "none") out << "  reason=" << rec.reason;
    if (!rec.detail.empty()) out << "  detail=" << rec.detail;
    for (const auto& [key, value] : rec.witness) {
      out << "  " << key << "=";
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, Complex>) {
              out << "(" << format_real(v.real()) << "," << format_real(v.imag()) << ")";
            } else if constexpr (std::is_same_v<V, double>) {
              out << format_real(v);
            } else {
              out << '"' << v << '"';
            }
          },
          value);
    }
    out << '\n';
  }
  if (r.oracle) {
    for (const auto& c : *r.oracle) {
      out << "oracle " << c.id << "  " << (c.agree ? "agree" : "DISAGREE") << "  expected=" << c.expected_outcome
          << "  truth_margin=" << format_real(c.truth_margin) << "  " << c.note << '\n';
    }
  }
  return out.str();
}

}  // namespace tvd::io
