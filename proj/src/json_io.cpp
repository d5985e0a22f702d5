#include "spearlab/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "spearlab/error.hpp"

namespace spearlab {

Rational scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  fail(ErrorCode::MalformedInput,
       "expected an integer or a \"p/q\" string, got " + j.dump() +
           (j.is_number_float() ? " (floats are not accepted in exact inputs)" : ""));
}

json scalar_to_json(const Rational& r) {
  if (r.is_integer() && r.numerator().fits_slong_p()) return r.numerator().get_si();
  return r.to_string();
}

RatVector vector_from_json(const json& j) {
  require(j.is_array(), ErrorCode::MalformedInput, "expected an array of scalars, got " + j.dump());
  RatVector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

json vector_to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

json vector_to_json(const oracle::Vec& v) {
  json out = json::array();
  for (double x : v) out.push_back(x);
  return out;
}

namespace {

// "-0.25", "1e-3", "2.5E2": read as the exact decimal value, not via double.
Rational parse_decimal(std::string_view text) {
  static const std::regex re(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
  std::cmatch m;
  const std::string t(text);
  if (!std::regex_match(t.c_str(), m, re) || (m[2].length() == 0 && m[3].length() == 0))
    fail(ErrorCode::MalformedInput, "not a decimal number: '" + t + "'");
  mpz_class num(m[2].str() + m[3].str() == "" ? "0" : m[2].str() + m[3].str(), 10);
  long exp10 = -static_cast<long>(m[3].length());
  if (m[4].matched) exp10 += std::stol(m[4].str());
  require(std::abs(exp10) <= 4000, ErrorCode::MalformedInput, "exponent out of range: '" + t + "'");
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exp10)));
  mpq_class q = exp10 >= 0 ? mpq_class(num * p) : mpq_class(num, p);
  if (m[1].str() == "-") q = -q;
  return Rational(q);
}

}  // namespace

RatVector parse_vector_literal(std::string_view text, bool allow_decimals) {
  RatVector v;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(start, end - start);
    const bool decimal = item.find_first_of(".eE") != std::string_view::npos;
    v.push_back(allow_decimals && decimal ? parse_decimal(item) : Rational::parse(item));
    start = end + 1;
  }
  return v;
}

RatMatrix parse_matrix_literal(std::string_view text) {
  std::vector<RatVector> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    rows.push_back(parse_vector_literal(text.substr(start, end - start)));
    start = end + 1;
  }
  return RatMatrix::from_rows(rows);
}

namespace {

json vectors_to_json(const std::vector<RatVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v));
  return out;
}

std::vector<RatVector> vectors_from_json(const json& j, std::size_t dim) {
  require(j.is_array() && !j.empty(), ErrorCode::MalformedInput, "expected a nonempty array of vectors");
  std::vector<RatVector> out;
  for (const auto& row : j) {
    out.push_back(vector_from_json(row));
    require(out.back().size() == dim, ErrorCode::DimensionMismatch,
            "vector " + row.dump() + " does not have length " + std::to_string(dim));
  }
  return out;
}

const json& field(const json& j, const char* name) {
  require(j.is_object() && j.contains(name), ErrorCode::MalformedInput,
          std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

json space_to_json(const PolyhedralSpace& space) {
  return json{{"label", space.label()},
              {"dim", space.dim()},
              {"ball_vertices", vectors_to_json(space.vertices())},
              {"dual_vertices", vectors_to_json(space.dual_vertices())}};
}

json operator_to_json(const LinOp& op) {
  return json{{"label", op.label()},
              {"domain", op.domain().label()},
              {"codomain", op.codomain().label()},
              {"matrix", vectors_to_json(op.matrix().row_list())}};
}

json to_json(const Certificate& cert) {
  json ws = json::array();
  for (const auto& w : cert.witnesses) {
    ws.push_back({{"kind", to_string(w.kind)},
                  {"vector", vector_to_json(w.vector)},
                  {"value", w.value.to_string()}});
  }
  return json{{"decision", cert.decision}, {"criterion", cert.criterion}, {"witnesses", ws}};
}

json to_json(const OperatorVerdict& verdict) {
  json out = to_json(verdict_certificate(verdict));
  out["lush"] = verdict.lush;
  out["spear"] = verdict.spear;
  out["adp"] = verdict.adp;
  return out;
}

json to_json(const oracle::FuzzReport& report) {
  json worst = json::array();
  for (const auto& v : report.worst_input) worst.push_back(vector_to_json(v));
  return json{{"trials", report.trials},     {"max_violation", report.max_violation},
              {"worst_input", worst},        {"tolerance", report.tolerance},
              {"passed", report.passed},     {"seed", report.seed}};
}

SpacePtr Workspace::space_from_json(const json& j) const {
  require(j.is_object(), ErrorCode::MalformedInput, "space must be a JSON object");
  std::string label = j.contains("label") ? j.at("label").get<std::string>() : std::string("space");
  const json& dim_field = field(j, "dim");
  require(dim_field.is_number_integer() && dim_field.get<long long>() > 0, ErrorCode::MalformedInput,
          "'dim' must be a positive integer");
  const auto dim = static_cast<std::size_t>(dim_field.get<long long>());
  if (j.contains("ball_vertices")) {
    return make_space(vectors_from_json(j.at("ball_vertices"), dim), label);
  }
  if (j.contains("facet_normals")) {
    return make_space_from_facets(vectors_from_json(j.at("facet_normals"), dim), label);
  }
  fail(ErrorCode::MalformedInput, "space needs 'ball_vertices' or 'facet_normals'");
}

SpacePtr Workspace::resolve_space(const json& j) const {
  if (j.is_string()) return space(j.get<std::string>());
  return space_from_json(j);
}

LinOp Workspace::operator_from_json(const json& j) const {
  require(j.is_object(), ErrorCode::MalformedInput, "operator must be a JSON object");
  auto dom = resolve_space(field(j, "domain"));
  auto cod = resolve_space(field(j, "codomain"));
  const json& m = field(j, "matrix");
  require(m.is_array(), ErrorCode::MalformedInput, "'matrix' must be an array of rows");
  std::vector<RatVector> rows;
  for (const auto& r : m) rows.push_back(vector_from_json(r));
  std::string label = j.contains("label") ? j.at("label").get<std::string>() : std::string();
  return LinOp(dom, cod, RatMatrix::from_rows(rows), label);
}

SpacePtr Workspace::add_space(const json& j) {
  auto s = space_from_json(j);
  add_space(s->label(), s);
  return s;
}

LinOp Workspace::add_operator(const json& j) {
  auto op = operator_from_json(j);
  add_operator(op.label(), op);
  return op;
}

void Workspace::add_space(const std::string& label, SpacePtr space) {
  require(!spaces_.contains(label), ErrorCode::InvalidArgument, "duplicate space label '" + label + "'");
  spaces_.emplace(label, std::move(space));
}

void Workspace::add_operator(const std::string& label, LinOp op) {
  require(!operators_.contains(label), ErrorCode::InvalidArgument,
          "duplicate operator label '" + label + "'");
  operators_.emplace(label, std::move(op));
}

SpacePtr Workspace::space(const std::string& label) const {
  if (auto it = spaces_.find(label); it != spaces_.end()) return it->second;
  try {
    return standard_space(label);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnknownSpec) throw;
  }
  fail(ErrorCode::UnknownLabel, "unknown space label '" + label + "'");
}

LinOp Workspace::op(const std::string& label) const {
  if (auto it = operators_.find(label); it != operators_.end()) return it->second;
  try {
    return standard_operator(label);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnknownSpec) throw;
  }
  fail(ErrorCode::UnknownLabel, "unknown operator label '" + label + "'");
}

void Workspace::load_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::MalformedInput, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(ErrorCode::MalformedInput, "malformed JSON in '" + path + "': " + e.what());
  }
  auto add_any = [&](const json& item) {
    if (item.contains("matrix")) add_operator(item);
    else add_space(item);
  };
  if (j.is_object() && (j.contains("spaces") || j.contains("operators"))) {
    if (j.contains("spaces"))
      for (const auto& s : j.at("spaces")) add_space(s);
    if (j.contains("operators"))
      for (const auto& o : j.at("operators")) add_operator(o);
  } else {
    add_any(j);
  }
}

}  // namespace spearlab
