#pragma once

/**
 * @file errata.hpp
 * @brief Audits published reference values against exact recomputation.
 *
 * A reference directory holds a decision system (table2.json) together with
 * the values printed alongside it:
 *
 *     table3.expected.csv, table4.expected.csv   alternative,attribute,j,printed
 *     table5.expected.csv                        printed WR matrix
 *     table6.expected.csv                        printed dominance degrees
 *     worked_examples.json                       standalone claims
 *     errata.json                                known deviations, by id
 *
 * A printed value agrees with a recomputed one when they differ by at most
 * half a unit in the printed last decimal place.
 */

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ifnorder/decision.hpp"
#include "ifnorder/dense_sequence.hpp"
#include "ifnorder/output.hpp"

namespace ifnorder {

inline constexpr std::string_view kReferenceFixture = "reference-table2";

struct PrintedScore {
  std::string alternative;
  std::string attribute;
  std::uint64_t j;
  std::string printed;
};

struct ReferenceData {
  WeightedInfoSystem system;
  std::vector<PrintedScore> scores;
  /// Printed WR matrix, row-major in system order.
  std::vector<std::vector<std::string>> wr;
  std::vector<std::string> degrees;
  nlohmann::json claims;
  /// Known deviation id -> explanation.
  std::map<std::string, std::string> known;
};

/// Throws ParseError when a file is missing or malformed.
ReferenceData load_reference(const std::filesystem::path& dir);

/// Number of digits after the decimal point of a printed value.
int printed_places(std::string_view printed);

/// |value - printed| <= 5 * 10^-(places+1).
bool within_printed(const Rational& value, std::string_view printed);

struct Erratum {
  std::string id;
  std::string printed;
  std::string recomputed;
  std::string detail;
  bool known = false;
};

struct ErrataReport {
  std::vector<Erratum> entries;
  std::size_t checked = 0;
  /// Known ids that the audit did not reproduce.
  std::vector<std::string> unreproduced;

  const Erratum* find(std::string_view id) const;
  nlohmann::json to_json() const;
};

/// WR matrix under a lexicographic scan of the given diagonal levels, in the
/// given order. Used to test hypotheses about how printed tables were made.
Matrix replay_wr(const WeightedInfoSystem& sys, std::span<const Rational> levels);

/// Row means of a printed matrix, exact.
std::vector<Rational> printed_row_means(const std::vector<std::vector<std::string>>& matrix);

/// Audits every printed value in `ref`. `report` must come from
/// run_algorithm(ref.system, seq).
ErrataReport audit_reference(const ReferenceData& ref, const DenseSequence& seq,
                             const DominanceReport& report, const OutputSpec& out = {});

/// Audits the standalone claims only.
ErrataReport audit_claims(const nlohmann::json& claims, const std::map<std::string, std::string>& known,
                          const DenseSequence& seq, const OutputSpec& out = {});

}  // namespace ifnorder
