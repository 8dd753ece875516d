#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "isostab/solver.hpp"

namespace isostab {

using Json = nlohmann::ordered_json;

/// Malformed input. `line` is 1-based, 0 when not applicable.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line = 0);
  std::size_t line;
};

/// Exact value of "12", "-0.125", "3e-2" or "7/3".
Rational parse_decimal(std::string_view text);

/// Terminating values as decimals ("0.375", "-2"), others as "p/q".
std::string format_rational(const Rational& q);

/// JSON InstanceDoc or the line format; throws ParseError.
Instance parse_instance(std::string_view text);
Instance instance_from_json(const Json& doc);
Json instance_to_json(const Instance& s);

/// Full result document of one solve.
Json result_doc(const Instance& s, const SolveResult& r);

/// Minimal stabber through user-chosen extreme vertices.
struct ReshapeResult {
  Polygon polygon;
  Rational area;
  bool valid = false;
  std::vector<std::size_t> violated;
};

/// Throws ParseError if a vertex is off its host.
ReshapeResult reshape(const Instance& s, const std::array<RPoint, 4>& v);
Json reshape_doc(const ReshapeResult& r);

/// Text dump of the configuration registry.
std::string registry_text();
Json registry_json();

/// Throws std::invalid_argument for a rejected result.
std::string render_svg(const Json& result, const Instance& s);

}  // namespace isostab
