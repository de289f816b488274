#pragma once

/**
 * @file total_order.hpp
 * @brief Lexicographic order over the score stream C_1, C_2, ...
 *
 * A < B when the first index j at which the streams differ has
 * C_j(A) < C_j(B). Every stream value at a level is a polynomial of degree at
 * most two in that level, so on a diagonal sequence three distinct levels
 * with equal quads prove the whole streams equal. compare() stops there.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ifnorder/dense_sequence.hpp"
#include "ifnorder/ifn.hpp"

namespace ifnorder {

enum class Relation { Less, Greater, Equivalent, Indistinguishable };

std::string_view to_string(Relation r);

struct Verdict {
  Relation relation = Relation::Equivalent;
  /// Discriminating index for Less/Greater, 0 otherwise.
  std::uint64_t j = 0;
  std::optional<Rational> value_a;
  std::optional<Rational> value_b;
  /// Equivalent was proven by the three-level certificate.
  bool certified = false;
  /// Level pairs scanned.
  std::uint64_t depth = 0;

  bool decided() const { return relation == Relation::Less || relation == Relation::Greater; }
};

inline constexpr std::uint64_t kDefaultDepth = 100;

/**
 * Scans j = 1, 2, ... and returns at the first strict difference. Without a
 * difference the scan ends when the certificate fires (Equivalent,
 * certified), or after max_depth pairs or the end of a finite sequence. An
 * exhausted scan reports Equivalent for knot-identical operands and
 * Indistinguishable otherwise. Throws DomainError when max_depth is 0.
 */
Verdict compare(const Ifn& a, const Ifn& b, const DenseSequence& seq,
                std::uint64_t max_depth = kDefaultDepth);

/// True iff the quads agree at every pair up to the third distinct level.
/// Throws CertificateInapplicable for non-diagonal sequences and for
/// sequences that do not reach three distinct levels within `scan_limit` pairs.
bool equality_certificate(const Ifn& a, const Ifn& b, const DenseSequence& seq,
                          std::uint64_t scan_limit = 1000);

struct TieGroup {
  /// Input positions, ascending.
  std::vector<std::size_t> members;
  /// Some pair in the group was Indistinguishable rather than Equivalent.
  bool indistinguishable = false;
};

/// Ascending order as a list of tie groups. Stable: equal items keep input order.
/// Throws DomainError for an empty input.
std::vector<TieGroup> sort(std::span<const Ifn> items, const DenseSequence& seq,
                           std::uint64_t max_depth = kDefaultDepth);

}  // namespace ifnorder
