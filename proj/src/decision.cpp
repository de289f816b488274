#include "ifnorder/decision.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "ifnorder/literal.hpp"

namespace ifnorder {

namespace {

using json = nlohmann::json;

std::size_t index_of(const std::vector<std::string>& ids, const std::string& id, const char* what) {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) throw ParseError(std::string("unknown ") + what + " '" + id + "'");
  return static_cast<std::size_t>(it - ids.begin());
}

void require_unique(const std::vector<std::string>& ids, const char* what) {
  std::set<std::string> seen;
  for (const auto& id : ids)
    if (!seen.insert(id).second) throw ParseError(std::string("duplicate ") + what + " id '" + id + "'");
}

void settle_weights(std::vector<Attribute>& attributes, WeightPolicy policy) {
  Rational sum(0);
  for (const auto& a : attributes) {
    if (a.weight.sign() < 0) throw WeightSumError("weight of " + a.id + " is negative");
    sum += a.weight;
  }
  if (policy == WeightPolicy::Normalize) {
    if (sum.is_zero()) throw WeightSumError("weights sum to 0 and cannot be normalized");
    for (auto& a : attributes) a.weight /= sum;
    return;
  }
  if (sum != Rational(1))
    throw WeightSumError("weights sum to " + sum.str() + ", expected exactly 1 (use normalization to rescale)");
}

void require_nonempty(const WeightedInfoSystem& sys) {
  if (sys.alternatives.empty()) throw ParseError("system has no alternatives");
  if (sys.attributes.empty()) throw ParseError("system has no attributes");
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) {
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    out.push_back(first == std::string::npos ? "" : field.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::size_t WeightedInfoSystem::alternative_index(const std::string& id) const {
  return index_of(alternatives, id, "alternative");
}

std::size_t WeightedInfoSystem::attribute_index(const std::string& id) const {
  std::vector<std::string> ids;
  for (const auto& a : attributes) ids.push_back(a.id);
  return index_of(ids, id, "attribute");
}

WeightedInfoSystem load_system(const json& doc, const LoadOptions& options) {
  if (!doc.is_object()) throw ParseError("system document must be a JSON object");
  for (const char* key : {"alternatives", "attributes", "cells"})
    if (!doc.contains(key)) throw ParseError(std::string("system document lacks '") + key + "'");

  WeightedInfoSystem sys;
  const json& alts = doc.at("alternatives");
  if (!alts.is_array()) throw ParseError("'alternatives' must be an array of ids");
  for (const auto& id : alts) {
    if (!id.is_string()) throw ParseError("alternative ids must be strings");
    sys.alternatives.push_back(id.get<std::string>());
  }

  const json& attrs = doc.at("attributes");
  if (!attrs.is_array()) throw ParseError("'attributes' must be an array");
  for (const auto& a : attrs) {
    if (!a.is_object() || !a.contains("id") || !a.contains("weight") || !a.at("id").is_string())
      throw ParseError("each attribute needs a string 'id' and a 'weight'");
    sys.attributes.push_back({a.at("id").get<std::string>(), scalar_from_json(a.at("weight"))});
  }
  require_nonempty(sys);
  require_unique(sys.alternatives, "alternative");
  std::vector<std::string> attr_ids;
  for (const auto& a : sys.attributes) attr_ids.push_back(a.id);
  require_unique(attr_ids, "attribute");
  settle_weights(sys.attributes, options.weights);

  const json& cells = doc.at("cells");
  if (!cells.is_object()) throw ParseError("'cells' must be an object keyed by alternative");
  for (const auto& x : sys.alternatives) {
    std::vector<Ifn> row;
    for (const auto& a : sys.attributes) {
      if (!cells.contains(x) || !cells.at(x).contains(a.id)) throw CellValidationError(x, a.id, "missing");
      try {
        row.push_back(ifn_from_json(cells.at(x).at(a.id), options.strictness));
      } catch (const Error& e) {
        throw CellValidationError(x, a.id, e.what());
      }
    }
    sys.cells.push_back(std::move(row));
  }
  if (doc.contains("fixture") && doc.at("fixture").is_string()) sys.fixture = doc.at("fixture").get<std::string>();
  return sys;
}

WeightedInfoSystem load_system_csv(std::istream& in, const LoadOptions& options) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#') continue;
    rows.push_back(split_csv(line));
  }
  if (rows.size() < 2) throw ParseError("CSV system needs an attribute header and a weight row");

  WeightedInfoSystem sys;
  const auto& header = rows[0];
  const auto& weights = rows[1];
  if (header.size() < 2) throw ParseError("CSV header lists no attributes");
  if (weights.size() != header.size()) throw ParseError("weight row length differs from the header");
  for (std::size_t k = 1; k < header.size(); ++k) {
    try {
      sys.attributes.push_back({header[k], Rational::parse(weights[k])});
    } catch (const ParseError& e) {
      throw ParseError("weight of " + header[k] + ": " + e.what());
    }
  }
  for (std::size_t r = 2; r < rows.size(); ++r) sys.alternatives.push_back(rows[r].at(0));
  require_nonempty(sys);
  require_unique(sys.alternatives, "alternative");
  std::vector<std::string> attr_ids;
  for (const auto& a : sys.attributes) attr_ids.push_back(a.id);
  require_unique(attr_ids, "attribute");
  settle_weights(sys.attributes, options.weights);

  for (std::size_t r = 2; r < rows.size(); ++r) {
    const auto& row = rows[r];
    std::vector<Ifn> cells;
    for (std::size_t k = 1; k < header.size(); ++k) {
      if (k >= row.size() || row[k].empty()) throw CellValidationError(row[0], header[k], "missing");
      try {
        cells.push_back(parse_compact(row[k], options.strictness));
      } catch (const Error& e) {
        throw CellValidationError(row[0], header[k], e.what());
      }
    }
    if (row.size() > header.size()) throw ParseError("row " + row[0] + " has more cells than attributes");
    sys.cells.push_back(std::move(cells));
  }
  return sys;
}

WeightedInfoSystem load_system_file(const std::filesystem::path& path, const LoadOptions& options) {
  if (path.extension() == ".csv") {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return load_system_csv(in, options);
  }
  return load_system(read_json_file(path), options);
}

json system_to_json(const WeightedInfoSystem& sys) {
  json doc;
  doc["alternatives"] = sys.alternatives;
  json attrs = json::array();
  for (const auto& a : sys.attributes) attrs.push_back({{"id", a.id}, {"weight", a.weight.str()}});
  doc["attributes"] = attrs;
  json cells = json::object();
  for (std::size_t x = 0; x < sys.alternatives.size(); ++x)
    for (std::size_t a = 0; a < sys.attributes.size(); ++a)
      cells[sys.alternatives[x]][sys.attributes[a].id] = ifn_to_json(sys.cell(x, a));
  doc["cells"] = cells;
  if (!sys.fixture.empty()) doc["fixture"] = sys.fixture;
  return doc;
}

BetterSets better_sets(const WeightedInfoSystem& sys, std::size_t x, std::size_t y, const DenseSequence& seq,
                       std::uint64_t depth) {
  BetterSets out;
  for (std::size_t a = 0; a < sys.attributes.size(); ++a) {
    Verdict v = compare(sys.cell(x, a), sys.cell(y, a), seq, depth);
    switch (v.relation) {
      case Relation::Greater: out.better.push_back(a); break;
      case Relation::Less: break;
      case Relation::Indistinguishable:
        out.has_indistinguishable = true;
        out.ties.push_back(a);
        break;
      case Relation::Equivalent: out.ties.push_back(a); break;
    }
    out.comparisons.push_back({a, std::move(v)});
  }
  return out;
}

namespace {

Rational weight_of(const WeightedInfoSystem& sys, const BetterSets& sets) {
  Rational better(0);
  Rational ties(0);
  for (std::size_t a : sets.better) better += sys.attributes[a].weight;
  for (std::size_t a : sets.ties) ties += sys.attributes[a].weight;
  return better + ties / 2;
}

}  // namespace

Rational wr(const WeightedInfoSystem& sys, std::size_t x, std::size_t y, const DenseSequence& seq,
            std::uint64_t depth) {
  return weight_of(sys, better_sets(sys, x, y, seq, depth));
}

std::vector<Rational> dominance_degrees(const Matrix& matrix) {
  if (matrix.empty()) throw DimensionError("dominance matrix is empty");
  std::vector<Rational> out;
  const auto n = static_cast<std::int64_t>(matrix.size());
  for (const auto& row : matrix) {
    if (row.size() != matrix.size())
      throw DimensionError("dominance matrix row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(matrix.size()));
    Rational sum(0);
    for (const auto& v : row) sum += v;
    out.push_back(sum / n);
  }
  return out;
}

DominanceReport run_algorithm(const WeightedInfoSystem& sys, const DenseSequence& seq, std::uint64_t depth) {
  require_nonempty(sys);
  const std::size_t n = sys.alternatives.size();
  DominanceReport report;
  report.wr.assign(n, std::vector<Rational>(n, Rational(0)));

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      BetterSets sets = better_sets(sys, x, y, seq, depth);
      report.wr[x][y] = weight_of(sys, sets);
      if (x == y) continue;
      if (sets.has_indistinguishable) {
        for (const auto& c : sets.comparisons)
          if (c.verdict.relation == Relation::Indistinguishable)
            report.notes.push_back("(" + sys.alternatives[x] + ", " + sys.alternatives[y] + ") on " +
                                   sys.attributes[c.attribute].id + ": indistinguishable after " +
                                   std::to_string(c.verdict.depth) + " level pairs, counted as a tie");
      }
      report.audit.push_back({x, y, std::move(sets)});
    }
  }

  report.degrees = dominance_degrees(report.wr);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return report.degrees[a] > report.degrees[b]; });
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = order[k];
    const bool tied = (k > 0 && report.degrees[order[k - 1]] == report.degrees[i]) ||
                      (k + 1 < n && report.degrees[order[k + 1]] == report.degrees[i]);
    report.ranking.push_back({i, report.degrees[i], tied});
  }
  for (std::size_t k = 1; k < n; ++k) {
    if (report.ranking[k].degree == report.ranking[k - 1].degree)
      report.notes.push_back(sys.alternatives[report.ranking[k - 1].alternative] + " and " +
                             sys.alternatives[report.ranking[k].alternative] +
                             " share a dominance degree; ordered by input position");
  }
  return report;
}

}  // namespace ifnorder
