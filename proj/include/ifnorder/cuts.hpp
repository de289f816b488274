#pragma once

#include <cstdint>
#include <span>

#include "ifnorder/dense_sequence.hpp"
#include "ifnorder/ifn.hpp"

namespace ifnorder {

/// Closed alpha-cut [q1 + (q2-q1)a, q4 - (q4-q3)a]; a must lie in (0,1].
Interval alpha_cut(const TrapFN& fn, const Rational& level);

/// Interval with per-side openness, as produced by strong cuts.
struct CutInterval {
  Interval bounds;
  bool lo_open = false;
  bool hi_open = false;

  bool contains(const Rational& x) const;
  bool empty_interior() const { return bounds.lo == bounds.hi; }
  friend bool operator==(const CutInterval&, const CutInterval&) = default;
};

/// The alpha-beta cut: mu cut at alpha times nu cut at beta.
struct CutRect {
  Rational alpha;
  Rational beta;
  CutInterval mu;
  CutInterval nu;
  bool strong = false;

  // Endpoints as consumed by the score formulas.
  const Rational& a() const { return mu.bounds.lo; }
  const Rational& b() const { return mu.bounds.hi; }
  const Rational& c() const { return nu.bounds.lo; }
  const Rational& d() const { return nu.bounds.hi; }
};

/// Closed cut; alpha, beta in (0,1]. Throws DomainError.
CutRect cut(const Ifn& ifn, const Rational& alpha, const Rational& beta);
inline CutRect cut(const Ifn& ifn, const LevelPair& levels) {
  return cut(ifn, levels.alpha, levels.beta);
}

/// {x : mu(x) > alpha} x {x : nu(x) > beta}; alpha, beta in [0,1).
/// A side is open where the leg is sloped and closed where it is vertical.
CutRect strong_cut(const Ifn& ifn, const Rational& alpha, const Rational& beta);

/// Values attained by one membership function over [0,1].
struct LevelRange {
  Interval range;
  /// Only the endpoint values are attained (no sloped leg).
  bool discrete = false;
};

struct LevelRanges {
  LevelRange mu;
  LevelRange nu;
};

LevelRanges level_range(const Ifn& ifn);

struct Reconstruction {
  Rational mu;
  Rational nu;
};

enum class CutKind { Closed, Strong };

/// Pointwise union of the special sets level * 1[x in cut(level)] over the
/// given level pairs: (max alpha with x in the mu-cut, max beta with x in the
/// nu-cut), 0 when no level qualifies.
Reconstruction special_set_union(const Ifn& ifn, std::span<const LevelPair> levels,
                                 const Rational& x, CutKind kind = CutKind::Closed);

/// special_set_union over the first n pairs of seq (n >= 1).
Reconstruction reconstruct(const Ifn& ifn, const DenseSequence& seq, std::uint64_t n,
                           const Rational& x);

}  // namespace ifnorder
