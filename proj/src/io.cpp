#include "jacobi/io.hpp"

#include <fstream>
#include <sstream>

namespace jacobi {

namespace {

[[noreturn]] void bad(const std::string &what) { throw Error(ErrorCode::ParseError, what); }

const Json &member(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

} // namespace

Json field_to_json(const FieldConfig &field) {
  Json j;
  j["field"] = field.is_rational() ? "rational" : "gfp";
  if (!field.is_rational()) j["modulus"] = field.modulus();
  return j;
}

FieldConfig field_from_json(const Json &j) {
  const auto &kind = member(j, "field");
  if (!kind.is_string()) bad("\"field\" must be a string");
  if (kind == "rational") return FieldConfig::rationals();
  if (kind == "gfp") {
    const auto &m = member(j, "modulus");
    if (!m.is_number_unsigned()) bad("\"modulus\" must be a positive integer");
    return FieldConfig::prime_field(m.get<std::uint64_t>());
  }
  bad("unknown field \"" + kind.get<std::string>() + "\"");
}

Json scalar_to_json(const Scalar &s) { return s.to_string(); }

Scalar scalar_from_json(const Json &j, const FieldConfig &field) {
  if (j.is_string()) return field.parse(j.get<std::string>());
  if (j.is_number_integer()) return field.from_int(j.get<long long>());
  bad("scalar must be a string or an integer");
}

Json monomial_to_json(const Monomial &m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.nvars(); ++i) j.push_back(static_cast<int>(m[i]));
  return j;
}

Monomial monomial_from_json(const Json &j, std::size_t nvars) {
  if (!j.is_array() || j.size() != nvars) bad("exponent vector must have length " + std::to_string(nvars));
  std::vector<int> exps;
  for (const auto &e : j) {
    if (!e.is_number_integer() || e.get<int>() < 0 || e.get<int>() > 255) bad("exponent out of range");
    exps.push_back(e.get<int>());
  }
  return Monomial::from_exponents(exps);
}

Json polynomial_to_json(const Polynomial &f) {
  Json j = Json::array();
  for (const auto &t : f.terms()) {
    Json term;
    term["coeff"] = scalar_to_json(t.coeff);
    term["exps"] = monomial_to_json(t.monomial);
    j.push_back(std::move(term));
  }
  return j;
}

Polynomial polynomial_from_json(const Json &j, RingPtr ring) {
  if (!j.is_array()) bad("polynomial must be a list of terms");
  std::vector<Term> terms;
  for (const auto &t : j)
    terms.push_back(Term{monomial_from_json(member(t, "exps"), ring->nvars()),
                         scalar_from_json(member(t, "coeff"), ring->field())});
  return Polynomial::from_terms(std::move(ring), std::move(terms));
}

Json matrix_to_json(const ExactMatrix &m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json data = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const auto &s : m.row(i)) row.push_back(scalar_to_json(s));
    data.push_back(std::move(row));
  }
  j["data"] = std::move(data);
  return j;
}

ExactMatrix matrix_from_json(const Json &j, const FieldConfig &field) {
  const auto &data = j.is_array() ? j : member(j, "data");
  if (!data.is_array()) bad("matrix data must be a list of rows");
  std::vector<Vector> rows;
  for (const auto &row : data) {
    if (!row.is_array()) bad("matrix row must be a list");
    Vector v;
    for (const auto &e : row) v.push_back(scalar_from_json(e, field));
    rows.push_back(std::move(v));
  }
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m = ExactMatrix::from_rows(rows, field, cols);
  if (j.is_object()) {
    if (j.contains("rows") && j.at("rows") != m.rows()) bad("\"rows\" disagrees with data");
    if (j.contains("cols") && j.at("cols") != m.cols()) bad("\"cols\" disagrees with data");
  }
  return m;
}

Json coeff_matrix_to_json(const CoeffMatrix &a) {
  Json j = field_to_json(a.field());
  j["mode"] = to_string(a.provenance);
  if (a.lambda) {
    Json l = Json::array();
    for (const auto &s : *a.lambda) l.push_back(scalar_to_json(s));
    j["lambda"] = std::move(l);
  }
  j["entries"] = matrix_to_json(a.entries)["data"];
  if (a.seed) j["seed"] = *a.seed;
  return j;
}

CoeffMatrix coeff_matrix_from_json(const Json &j) try {
  FieldConfig field = field_from_json(j);
  CoeffMatrix a{matrix_from_json(member(j, "entries"), field), MatrixMode::User, std::nullopt, std::nullopt};
  if (a.entries.rows() != kCoeffRows || a.entries.cols() != kCoeffCols) bad("\"entries\" must be 4x8");
  a.provenance = j.contains("mode") ? matrix_mode_from_string(j.at("mode").get<std::string>()) : MatrixMode::User;
  if (j.contains("lambda")) {
    std::vector<Scalar> l;
    for (const auto &e : j.at("lambda")) l.push_back(scalar_from_json(e, field));
    if (l.size() != kCoeffCols) bad("\"lambda\" must have 8 entries");
    a.lambda = std::move(l);
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) bad("\"seed\" must be a nonnegative integer");
    a.seed = j.at("seed").get<std::uint64_t>();
  }
  return a;
} catch (const nlohmann::json::exception &e) {
  bad(std::string("malformed matrix file: ") + e.what());
}

Json basis_to_json(const GradedBasis &b) {
  Json j;
  Json comps = Json::array();
  for (std::size_t p = 0; p < 4; ++p) {
    Json c = Json::array();
    for (const auto &m : b.component(p)) c.push_back(monomial_to_json(m));
    comps.push_back(std::move(c));
  }
  j["components"] = std::move(comps);
  j["dims"] = b.dims();
  return j;
}

GradedBasis basis_from_json(const Json &j) {
  const auto &comps = member(j, "components");
  if (!comps.is_array() || comps.size() != 4) bad("\"components\" must hold four lists");
  std::array<std::vector<Monomial>, 4> out;
  for (std::size_t p = 0; p < 4; ++p)
    for (const auto &m : comps[p]) out[p].push_back(monomial_from_json(m, kJacobianVars));
  return GradedBasis(std::move(out));
}

Json theta_to_json(const ThetaMatrices &t) {
  Json j = Json::array();
  for (const auto &m : t.mats) j.push_back(matrix_to_json(m));
  return j;
}

Json plethysm_to_json(const PlethysmReport &r) {
  Json j;
  j["dims"] = {{"U51", r.u51}, {"U42", r.u42}, {"U33", r.u33}};
  j["bound"] = r.bound;
  j["modular_consistent"] = r.modular_consistent;
  return j;
}

Json equations_to_json(const CharVariety &v) {
  Json j = Json::array();
  for (const auto &e : v.equations) j.push_back(polynomial_to_json(e));
  return j;
}

Json invariants_to_json(const VarietyInvariants &inv) {
  Json j;
  j["dimension"] = inv.hilbert.dimension;
  if (!inv.hilbert.genus) j["genus"] = nullptr;
  else if (inv.hilbert.genus->fits_slong_p()) j["genus"] = inv.hilbert.genus->get_si();
  else j["genus"] = inv.hilbert.genus->get_str();
  j["hilbert_polynomial"] = inv.hilbert.polynomial_string();
  j["invariants_field"] = field_to_json(inv.field);
  return j;
}

Json read_json_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    bad(path.string() + ": " + e.what());
  }
}

std::string dump_json(const Json &j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path &path, const Json &j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidConfig, "cannot write " + path.string());
  out << dump_json(j);
}

} // namespace jacobi
