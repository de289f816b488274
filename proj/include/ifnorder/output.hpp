#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ifnorder/rational.hpp"

namespace ifnorder {

enum class Format { Json, Table, Csv };

Format parse_format(std::string_view name);

/// Presentation settings. Values stay exact until render() is called.
struct OutputSpec {
  /// Decimal places after the point.
  int precision = 6;
  Format format = Format::Json;

  /// Half-even rounding to `precision` places with trailing zeros trimmed.
  std::string render(const Rational& value) const;
};

/// "0.650000" -> "0.65", "1.000" -> "1".
std::string trim_decimal(std::string text);

using TextRow = std::vector<std::string>;

/// Left-aligned columns separated by two spaces.
std::string render_table(const TextRow& header, const std::vector<TextRow>& rows);

/// RFC 4180 style: fields with commas, quotes or newlines are quoted.
std::string render_csv(const TextRow& header, const std::vector<TextRow>& rows);

}  // namespace ifnorder
