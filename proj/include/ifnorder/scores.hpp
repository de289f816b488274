#pragma once

#include <cstdint>

#include "ifnorder/cuts.hpp"
#include "ifnorder/dense_sequence.hpp"
#include "ifnorder/ifn.hpp"

namespace ifnorder {

/**
 * The four scores of one cut rectangle ([a,b],[c,d]):
 *
 *     c1 = (a + b - c - d + ac + bd) / 2
 *     c2 = (a + b - c - d - ac - bd) / 2
 *     c3 = (a - b - c + d + ac + bd) / 2
 *     c4 = (a - b + c - d + ac - bd) / 2
 *
 * Level pair i of a sequence contributes C_{4i-3} .. C_{4i} in this order.
 */
struct ScoreQuad {
  Rational c1;
  Rational c2;
  Rational c3;
  Rational c4;

  /// r in 1..4
  const Rational& operator[](int r) const;
  friend bool operator==(const ScoreQuad&, const ScoreQuad&) = default;
};

ScoreQuad score_quad(const Rational& a, const Rational& b, const Rational& c, const Rational& d);
ScoreQuad score_quad(const CutRect& rect);

/// Quad of the cut at one level pair.
ScoreQuad level_quad(const Ifn& ifn, const LevelPair& levels);

/// C_j (j >= 1) of the score stream: component j - 4(i-1) of the quad at pair i = ceil(j/4).
Rational c_value(const Ifn& ifn, const DenseSequence& seq, std::uint64_t j);

/// Membership (L), non-membership (LG), vague (P) and imprecise (IP) scores
/// of an interval value ([a,b],[c,d]). L = c1, -LG = c2, P = c3, -IP = c4.
struct IvifScores {
  Rational l;
  Rational lg;
  Rational p;
  Rational ip;
};

IvifScores ivif_scores(const Interval& mu, const Interval& nu);

/// Scores of a triangular value <(a,b,c),(e,f,g)>.
struct TriangularScores {
  Rational left;   ///< L(M) = (1-a)/(1+b-a)
  Rational right;  ///< R(M) = c/(1+c-b)
  Rational t;      ///< (1 + R - L)/2
  Rational nl;     ///< e/(1+e-f)
  Rational nr;     ///< (1-g)/(1+f-g)
  Rational nt;     ///< (1 + NL - NR)/2
  Rational ntc;    ///< 1 - NT
};

/// Throws KindMismatch unless both sides are triangles (q2 == q3).
TriangularScores triangular_scores(const Ifn& ifn);

}  // namespace ifnorder
