#pragma once

/**
 * @file decision.hpp
 * @brief Weighted dominance ranking of alternatives described by fuzzy cells.
 *
 * For alternatives x, y and attribute weights w_a:
 *
 *     WR(x, y) = sum of w_a where x beats y on a + (sum of w_a where they tie) / 2
 *
 * and the dominance degree of x is the mean of its WR row. Alternatives are
 * ranked by descending degree.
 */

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ifnorder/dense_sequence.hpp"
#include "ifnorder/ifn.hpp"
#include "ifnorder/total_order.hpp"

namespace ifnorder {

struct Attribute {
  std::string id;
  Rational weight;
};

struct WeightedInfoSystem {
  std::vector<std::string> alternatives;
  std::vector<Attribute> attributes;
  /// cells[x][a], alternative-major.
  std::vector<std::vector<Ifn>> cells;
  /// Name of a bundled published table this system reproduces, empty otherwise.
  std::string fixture;

  std::size_t alternative_index(const std::string& id) const;
  std::size_t attribute_index(const std::string& id) const;
  const Ifn& cell(std::size_t x, std::size_t a) const { return cells.at(x).at(a); }
};

enum class WeightPolicy {
  Exact,      ///< weights must sum to exactly 1
  Normalize,  ///< weights are divided by their sum
};

struct LoadOptions {
  WeightPolicy weights = WeightPolicy::Exact;
  Strictness strictness = Strictness::Strict;
};

/**
 * JSON document:
 *
 *     {"alternatives": ["x1", ...],
 *      "attributes": [{"id": "a1", "weight": "0.3"}, ...],
 *      "cells": {"x1": {"a1": <literal>, ...}, ...},
 *      "fixture": "reference-table2"}      optional
 *
 * Throws ParseError, CellValidationError or WeightSumError.
 */
WeightedInfoSystem load_system(const nlohmann::json& doc, const LoadOptions& options = {});

/**
 * CSV document: a header "alternative,a1,a2,..."; a second row
 * "weight,0.3,0.2,..."; then one row per alternative of compact literals.
 * Lines starting with '#' are ignored.
 */
WeightedInfoSystem load_system_csv(std::istream& in, const LoadOptions& options = {});

/// Dispatches on the extension: ".csv" reads CSV, anything else JSON.
WeightedInfoSystem load_system_file(const std::filesystem::path& path, const LoadOptions& options = {});

nlohmann::json system_to_json(const WeightedInfoSystem& sys);

struct CellComparison {
  std::size_t attribute;
  Verdict verdict;
};

/// Attributes on which x beats y, attributes on which they tie, and the
/// verdict of every cell comparison. Indistinguishable verdicts count as ties.
struct BetterSets {
  std::vector<std::size_t> better;
  std::vector<std::size_t> ties;
  std::vector<CellComparison> comparisons;
  bool has_indistinguishable = false;
};

BetterSets better_sets(const WeightedInfoSystem& sys, std::size_t x, std::size_t y,
                       const DenseSequence& seq, std::uint64_t depth = kDefaultDepth);

Rational wr(const WeightedInfoSystem& sys, std::size_t x, std::size_t y, const DenseSequence& seq,
            std::uint64_t depth = kDefaultDepth);

using Matrix = std::vector<std::vector<Rational>>;

/// Row means. Throws DimensionError unless the matrix is square and nonempty.
std::vector<Rational> dominance_degrees(const Matrix& matrix);

struct RankEntry {
  std::size_t alternative;
  Rational degree;
  /// Degree equals a neighbour's; the order between them follows input order.
  bool tied = false;
};

struct PairAudit {
  std::size_t x;
  std::size_t y;
  BetterSets sets;
};

struct DominanceReport {
  Matrix wr;
  std::vector<Rational> degrees;
  std::vector<RankEntry> ranking;
  /// Ordered pairs x != y.
  std::vector<PairAudit> audit;
  std::vector<std::string> notes;
};

DominanceReport run_algorithm(const WeightedInfoSystem& sys, const DenseSequence& seq,
                              std::uint64_t depth = kDefaultDepth);

}  // namespace ifnorder
