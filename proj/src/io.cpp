#include "truncorr/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace truncorr {

using nlohmann::json;

std::string format_decimal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// --- state files -------------------------------------------------------------

std::string write_state_file(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  std::ostringstream os;
  os << "{\n  \"dims\": [" << rho.dims().dA << ", " << rho.dims().dB << "],\n  \"matrix\": [\n";
  for (Index i = 0; i < m.rows(); ++i) {
    os << "    [";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << '[' << format_decimal(m(i, j).real()) << ", " << format_decimal(m(i, j).imag()) << ']';
    }
    os << (i + 1 < m.rows() ? "],\n" : "]\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw InputError("state file: field '" + field + "': " + what);
}

double decimal(const json& v, const std::string& field) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string& s = v.get_ref<const std::string&>();
    char* end = nullptr;
    errno = 0;
    const double d = std::strtod(s.c_str(), &end);
    if (!s.empty() && end == s.c_str() + s.size() && errno == 0) return d;
    field_error(field, "'" + s + "' is not a decimal number");
  }
  field_error(field, "expected a number");
}

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

DensityMatrix parse_state_file(const std::string& text, const Tolerances& tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    throw InputError("state file: syntax error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }
  if (!doc.is_object()) field_error("<root>", "expected an object");
  if (!doc.contains("dims")) field_error("dims", "missing");
  if (!doc.contains("matrix")) field_error("matrix", "missing");

  const json& jd = doc["dims"];
  if (!jd.is_array() || jd.size() != 2) field_error("dims", "expected [dA, dB]");
  BipartiteDims dims;
  for (int s = 0; s < 2; ++s) {
    const std::string f = "dims[" + std::to_string(s) + "]";
    if (!jd[s].is_number_integer() || jd[s].get<long long>() < 1)
      field_error(f, "expected a positive integer");
    (s == 0 ? dims.dA : dims.dB) = jd[s].get<Index>();
  }

  const json& jm = doc["matrix"];
  const Index n = dims.total();
  if (!jm.is_array() || static_cast<Index>(jm.size()) != n)
    field_error("matrix", "expected " + std::to_string(n) + " rows");
  ComplexMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const std::string fr = "matrix[" + std::to_string(i) + "]";
    const json& row = jm[i];
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      field_error(fr, "expected " + std::to_string(n) + " entries");
    for (Index j = 0; j < n; ++j) {
      const std::string fe = fr + "[" + std::to_string(j) + "]";
      const json& e = row[j];
      if (!e.is_array() || e.size() != 2) field_error(fe, "expected a [re, im] pair");
      m(i, j) = Complex(decimal(e[0], fe + "[0]"), decimal(e[1], fe + "[1]"));
    }
  }
  try {
    return DensityMatrix(std::move(m), dims, tol);
  } catch (const InputError& e) {
    throw InputError(std::string("state file: ") + e.what());
  }
}

DensityMatrix load_state_file(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open state file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_state_file(ss.str(), tol);
}

void save_state_file(const std::string& path, const DensityMatrix& rho) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write state file '" + path + "'");
  out << write_state_file(rho);
  if (!out) throw InputError("failed writing state file '" + path + "'");
}

// --- reports -------------------------------------------------------------------

namespace {

json complex_matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix complex_matrix_from(const json& j) {
  const Index rows = static_cast<Index>(j.size());
  const Index cols = rows ? static_cast<Index>(j[0].size()) : 0;
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index k = 0; k < cols; ++k)
      m(i, k) = Complex(j[i][k][0].get<double>(), j[i][k][1].get<double>());
  return m;
}

json real_matrix_json(const Matrix<double>& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<double> real_matrix_from(const json& j) {
  const Index rows = static_cast<Index>(j.size());
  const Index cols = rows ? static_cast<Index>(j[0].size()) : 0;
  Matrix<double> m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index k = 0; k < cols; ++k) m(i, k) = j[i][k].get<double>();
  return m;
}

void put_optional(json& j, const char* key, const std::optional<double>& v) {
  if (v) j[key] = *v;
}

std::optional<double> get_optional(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<double>();
}

json tolerances_json(const Tolerances& t) {
  return {{"eps_herm", t.herm},       {"eps_tr", t.trace},
          {"eps_psd", t.psd},         {"eps_recon", t.recon},
          {"eps_orth", t.orth},       {"eps_deg", t.deg},
          {"eps_zero", t.zero},       {"eps_rank", t.rank},
          {"eps_tie", t.tie},         {"eps_offdiag", t.offdiag},
          {"eps_comm", t.comm},       {"eps_local", t.local},
          {"eps_measure", t.measure}, {"partition_limit", t.partition_limit}};
}

Tolerances tolerances_from(const json& j) {
  Tolerances t;
  t.herm = j.at("eps_herm").get<double>();
  t.trace = j.at("eps_tr").get<double>();
  t.psd = j.at("eps_psd").get<double>();
  t.recon = j.at("eps_recon").get<double>();
  t.orth = j.at("eps_orth").get<double>();
  t.deg = j.at("eps_deg").get<double>();
  t.zero = j.at("eps_zero").get<double>();
  t.rank = j.at("eps_rank").get<double>();
  t.tie = j.at("eps_tie").get<double>();
  t.offdiag = j.at("eps_offdiag").get<double>();
  t.comm = j.at("eps_comm").get<double>();
  t.local = j.at("eps_local").get<double>();
  t.measure = j.at("eps_measure").get<double>();
  t.partition_limit = j.at("partition_limit").get<std::size_t>();
  return t;
}

json measures_json(const MeasureReport& m) {
  json j;
  j["M"] = m.M;
  j["M_A"] = m.MA;
  j["M_B"] = m.MB;
  json comps = json::array();
  for (const auto& c : m.per_component)
    comps.push_back({{"eta", c.eta}, {"mult", c.mult}, {"A", c.sideA}, {"B", c.sideB}});
  j["components"] = std::move(comps);
  put_optional(j, "G", m.G);
  put_optional(j, "F_A", m.FA);
  put_optional(j, "F_B", m.FB);
  put_optional(j, "S_A", m.entropyA);
  put_optional(j, "S_B", m.entropyB);
  put_optional(j, "S_AB", m.entropyAB);
  put_optional(j, "ppt_min_eigenvalue", m.ppt_min_eigenvalue);
  put_optional(j, "negativity", m.negativity);
  return j;
}

MeasureReport measures_from(const json& j) {
  MeasureReport m;
  m.M = j.at("M").get<double>();
  m.MA = j.at("M_A").get<double>();
  m.MB = j.at("M_B").get<double>();
  for (const auto& c : j.at("components"))
    m.per_component.push_back({c.at("eta").get<double>(), c.at("mult").get<Index>(),
                               c.at("A").get<double>(), c.at("B").get<double>()});
  m.G = get_optional(j, "G");
  m.FA = get_optional(j, "F_A");
  m.FB = get_optional(j, "F_B");
  m.entropyA = get_optional(j, "S_A");
  m.entropyB = get_optional(j, "S_B");
  m.entropyAB = get_optional(j, "S_AB");
  m.ppt_min_eigenvalue = get_optional(j, "ppt_min_eigenvalue");
  m.negativity = get_optional(j, "negativity");
  return m;
}

Outcome outcome_from(const std::string& s) {
  for (Outcome o : {Outcome::Classical, Outcome::Nonclassical, Outcome::Inconclusive,
                    Outcome::NotApplicable})
    if (s == to_string(o)) return o;
  throw InputError("report: unknown outcome '" + s + "'");
}

Verdict verdict_from(const std::string& s) {
  for (Verdict v : {Verdict::Classical, Verdict::Nonclassical, Verdict::Unknown})
    if (s == to_string(v)) return v;
  throw InputError("report: unknown verdict '" + s + "'");
}

json detection_json(const DetectionVerdict& d) {
  json j;
  j["verdict"] = to_string(d.verdict);
  j["decided_by"] = d.decided_by;
  j["applied"] = d.applied;
  json ev = json::array();
  for (const auto& e : d.evidence)
    ev.push_back({{"test", e.test},
                  {"outcome", to_string(e.outcome)},
                  {"witness", e.witness},
                  {"detail", e.detail}});
  j["evidence"] = std::move(ev);
  if (d.basis) {
    j["basis"] = {{"local_A", complex_matrix_json(d.basis->localA)},
                  {"local_B", complex_matrix_json(d.basis->localB)},
                  {"weights", real_matrix_json(d.basis->weights)}};
  }
  return j;
}

DetectionVerdict detection_from(const json& j) {
  DetectionVerdict d;
  d.verdict = verdict_from(j.at("verdict").get<std::string>());
  d.decided_by = j.at("decided_by").get<std::string>();
  d.applied = j.at("applied").get<std::vector<std::string>>();
  for (const auto& e : j.at("evidence"))
    d.evidence.push_back({e.at("test").get<std::string>(),
                          outcome_from(e.at("outcome").get<std::string>()),
                          e.at("witness").get<double>(), e.at("detail").get<std::string>()});
  if (j.contains("basis")) {
    const json& b = j["basis"];
    d.basis = ProductBasis{complex_matrix_from(b.at("local_A")),
                           complex_matrix_from(b.at("local_B")),
                           real_matrix_from(b.at("weights"))};
  }
  return d;
}

}  // namespace

std::string emit_report(const Report& r) {
  json j;
  j["schema"] = r.schema;
  j["version"] = r.version;
  j["command"] = r.command;
  j["source"] = r.source;
  j["dims"] = {r.dims.dA, r.dims.dB};
  j["tolerances"] = tolerances_json(r.tolerances);
  if (r.measures) j["measures"] = measures_json(*r.measures);
  if (r.detection) j["detection"] = detection_json(*r.detection);
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

Report parse_report(const std::string& text) {
  try {
    const json j = json::parse(text);
    Report r;
    r.schema = j.at("schema").get<std::string>();
    if (r.schema != kReportSchema) throw InputError("report: unsupported schema '" + r.schema + "'");
    r.version = j.at("version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.source = j.at("source").get<std::string>();
    r.dims = {j.at("dims").at(0).get<Index>(), j.at("dims").at(1).get<Index>()};
    r.tolerances = tolerances_from(j.at("tolerances"));
    if (j.contains("measures")) r.measures = measures_from(j["measures"]);
    if (j.contains("detection")) r.detection = detection_from(j["detection"]);
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("report: ") + e.what());
  }
}

// --- equality ------------------------------------------------------------------

bool operator==(const Tolerances& a, const Tolerances& b) {
  return a.herm == b.herm && a.trace == b.trace && a.psd == b.psd && a.recon == b.recon &&
         a.orth == b.orth && a.deg == b.deg && a.zero == b.zero && a.rank == b.rank &&
         a.tie == b.tie && a.offdiag == b.offdiag && a.comm == b.comm && a.local == b.local &&
         a.measure == b.measure && a.partition_limit == b.partition_limit;
}

bool operator==(const ComponentContribution& a, const ComponentContribution& b) {
  return a.eta == b.eta && a.mult == b.mult && a.sideA == b.sideA && a.sideB == b.sideB;
}

bool operator==(const MeasureReport& a, const MeasureReport& b) {
  return a.M == b.M && a.MA == b.MA && a.MB == b.MB && a.per_component == b.per_component &&
         a.G == b.G && a.FA == b.FA && a.FB == b.FB && a.entropyA == b.entropyA &&
         a.entropyB == b.entropyB && a.entropyAB == b.entropyAB &&
         a.ppt_min_eigenvalue == b.ppt_min_eigenvalue && a.negativity == b.negativity;
}

namespace {
template <typename M>
bool same_matrix(const M& a, const M& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.size() == 0 || a == b);
}
}  // namespace

bool operator==(const ProductBasis& a, const ProductBasis& b) {
  return same_matrix(a.localA, b.localA) && same_matrix(a.localB, b.localB) &&
         same_matrix(a.weights, b.weights);
}

bool operator==(const Evidence& a, const Evidence& b) {
  return a.test == b.test && a.outcome == b.outcome && a.witness == b.witness &&
         a.detail == b.detail;
}

bool operator==(const DetectionVerdict& a, const DetectionVerdict& b) {
  return a.verdict == b.verdict && a.decided_by == b.decided_by && a.applied == b.applied &&
         a.evidence == b.evidence && a.basis == b.basis;
}

bool operator==(const Report& a, const Report& b) {
  return a.schema == b.schema && a.version == b.version && a.command == b.command &&
         a.source == b.source && a.dims == b.dims && a.tolerances == b.tolerances &&
         a.measures == b.measures && a.detection == b.detection && a.notes == b.notes;
}

}  // namespace truncorr
