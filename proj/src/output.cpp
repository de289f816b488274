#include "ifnorder/output.hpp"

#include <algorithm>
#include <sstream>

#include "ifnorder/errors.hpp"

namespace ifnorder {

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  throw ParseError("unknown output format '" + std::string(name) + "' (json, table or csv)");
}

std::string trim_decimal(std::string text) {
  if (text.find('.') == std::string::npos) return text;
  while (text.back() == '0') text.pop_back();
  if (text.back() == '.') text.pop_back();
  if (text == "-0") text = "0";
  return text;
}

std::string OutputSpec::render(const Rational& value) const {
  return trim_decimal(value.to_decimal(precision));
}

std::string render_table(const TextRow& header, const std::vector<TextRow>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  auto widen = [&](const TextRow& row) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  };
  widen(header);
  for (const auto& r : rows) widen(r);

  std::ostringstream os;
  auto emit = [&](const TextRow& row) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) {
      line += row[k];
      if (k + 1 < row.size()) line += std::string(width[k] - row[k].size() + 2, ' ');
    }
    os << line << '\n';
  };
  emit(header);
  for (const auto& r : rows) emit(r);
  return os.str();
}

namespace {

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string render_csv(const TextRow& header, const std::vector<TextRow>& rows) {
  std::ostringstream os;
  auto emit = [&](const TextRow& row) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << csv_field(row[k]);
    os << '\n';
  };
  emit(header);
  for (const auto& r : rows) emit(r);
  return os.str();
}

}  // namespace ifnorder
