#pragma once

/**
 * @file legacy.hpp
 * @brief Score functions of earlier ranking methods, kept as a comparison bench.
 *
 * Each method collapses a value to one number and therefore ties some
 * distinct values; the bench exists to exhibit those ties next to the score
 * stream of the total order.
 *
 * Interval methods take IVIF-shaped values ([a,b],[c,d]); crisp values are
 * accepted as degenerate intervals. Point methods take crisp values (mu, nu).
 * The triangular methods take triangles <(a,b,c),(e,f,g)>.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ifnorder/ifn.hpp"

namespace ifnorder {

enum class LegacyTag {
  XuS,                ///< (a+b-c-d)/2
  XuH,                ///< (a+b+c+d)/2
  YuS,                ///< (2+a+b-c-d)/2
  YeM,                ///< a+b-1+(c+d)/2
  LakshmanaGeethaLG,  ///< (a+b+delta(2-a-b-c-d))/2
  ChenTanS,           ///< mu-nu
  HongChoiH,          ///< mu+nu
  LiuS,               ///< mu+mu(1-mu-nu)
  ZhouWuS,            ///< mu-nu+(alpha-beta)(1-mu-nu)
  LinS,               ///< 2mu+nu-1
  WangS,              ///< mu-nu-(1-mu-nu)/2
  LLinS,              ///< mu/2+3(mu+nu)/2-1
  YeSY,               ///< mu(2-mu-nu)+(1-mu-nu)^2
  ZhangYuKminus,      ///< closeness to ([0,0],[1,1])
  ZhangYuKplus,       ///< closeness to ([1,1],[0,0])
  TriangularT,
  TriangularNT,
  TriangularNTc,
};

struct LegacyMethod {
  LegacyTag tag;
  Rational delta{1, 2};      ///< Lakshmana-Geetha, in [0,1]
  Rational zw_alpha{1, 2};   ///< Zhou-Wu; alpha + beta <= 1
  Rational zw_beta{1, 2};

  static LegacyMethod of(LegacyTag tag) { return LegacyMethod{tag}; }

  /// Throws DomainError for out-of-range parameters.
  void check_parameters() const;
};

std::string_view to_string(LegacyTag tag);
/// Accepts the names printed by to_string(), case-insensitively.
LegacyTag parse_legacy_tag(std::string_view name);
const std::vector<LegacyTag>& all_legacy_tags();

struct LegacyScore {
  Rational value;
  /// Zhang-Yu: the score against the other ideal point.
  std::optional<Rational> companion;
  /// Zhang-Yu closeness involves a square root; value and companion hold
  /// K^2, which orders identically because K >= 0.
  bool squared = false;
};

/// Throws KindMismatch for an incompatible shape and DivisionByZero for
/// Zhang-Yu on ([0,0],[0,0]).
LegacyScore legacy_score(const LegacyMethod& method, const Ifn& value);

}  // namespace ifnorder
