#pragma once

#include <map>
#include <string>
#include <string_view>

#include "json.hpp"

#include "spearlab/analysis.hpp"
#include "spearlab/fixtures.hpp"
#include "spearlab/oracle.hpp"

namespace spearlab {

using json = nlohmann::json;

inline constexpr const char* kSchema = "spearlab/1";

/// A JSON integer or a "p/q" string. Floats are rejected (MalformedInput).
Rational scalar_from_json(const json& j);
/// Integers as JSON integers, other rationals as "p/q" strings.
json scalar_to_json(const Rational& r);

RatVector vector_from_json(const json& j);
json vector_to_json(const RatVector& v);
json vector_to_json(const oracle::Vec& v);

/// Comma-separated scalars, e.g. "1,-1/2,0". With allow_decimals, entries
/// like "0.25" or "1e-3" are also read (exactly); only fuzz inputs use this.
RatVector parse_vector_literal(std::string_view text, bool allow_decimals = false);
/// Rows separated by ';', entries by ',': "1,0;0,1".
RatMatrix parse_matrix_literal(std::string_view text);

json space_to_json(const PolyhedralSpace& space);
json operator_to_json(const LinOp& op);
json to_json(const Certificate& cert);
json to_json(const OperatorVerdict& verdict);
json to_json(const oracle::FuzzReport& report);

/// Labelled spaces and operators. Unknown labels fall back to the built-in
/// fixtures; anything else raises UnknownLabel.
class Workspace {
 public:
  SpacePtr add_space(const json& j);
  LinOp add_operator(const json& j);
  void add_space(const std::string& label, SpacePtr space);
  void add_operator(const std::string& label, LinOp op);

  SpacePtr space(const std::string& label) const;
  LinOp op(const std::string& label) const;

  /// Reads a file holding a space object, an operator object, or an object
  /// {"spaces": [...], "operators": [...]}.
  void load_file(const std::string& path);

  SpacePtr space_from_json(const json& j) const;
  LinOp operator_from_json(const json& j) const;

 private:
  SpacePtr resolve_space(const json& j) const;

  std::map<std::string, SpacePtr> spaces_;
  std::map<std::string, LinOp> operators_;
};

}  // namespace spearlab
