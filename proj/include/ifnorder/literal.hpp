#pragma once

/**
 * @file literal.hpp
 * @brief Text forms of intuitionistic fuzzy numbers.
 *
 * JSON literal forms, all normalised to trapezoids:
 *
 *     {"mu": [q1,q2,q3,q4], "nu": [q1,q2,q3,q4]}
 *     {"ifv": [m, n]}
 *     {"ivif": [[a,b], [c,d]]}       a bare scalar stands for a point interval
 *     {"tri": [[a,b,c], [e,f,g]]}
 *
 * Scalars may be JSON numbers or strings ("0.05", "2/3"); both are read
 * exactly because documents are parsed with parse_json_exact().
 *
 * The compact form used in CSV cells is "<mu knots|nu knots>" with 1 to 4
 * space-separated knots per side (point, interval, triangle, trapezoid).
 * Unicode angle brackets are accepted too.
 */

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ifnorder/ifn.hpp"

namespace ifnorder {

/// Parses JSON keeping every floating-point literal as its source text.
nlohmann::json parse_json_exact(std::string_view text);
nlohmann::json read_json_file(const std::filesystem::path& path);

/// Reads a scalar from a JSON number, a decimal string or a fraction string.
Rational scalar_from_json(const nlohmann::json& value);

Ifn ifn_from_json(const nlohmann::json& literal, Strictness strictness = Strictness::Strict);

/// Shortest literal form matching the kind tag; scalars are exact strings.
nlohmann::json ifn_to_json(const Ifn& ifn);

Ifn parse_compact(std::string_view text, Strictness strictness = Strictness::Strict);
std::string to_compact(const Ifn& ifn);

}  // namespace ifnorder
