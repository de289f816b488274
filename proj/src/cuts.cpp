#include "ifnorder/cuts.hpp"

#include <vector>

namespace ifnorder {

namespace {

void require_closed_level(const Rational& level, const char* which) {
  if (level.sign() <= 0 || level > Rational(1))
    throw DomainError(std::string(which) + " level " + level.str() + " outside (0,1]");
}

void require_strong_level(const Rational& level, const char* which) {
  if (level.sign() < 0 || level >= Rational(1))
    throw DomainError(std::string(which) + " level " + level.str() + " outside [0,1)");
}

Interval leg_formula(const TrapFN& fn, const Rational& level) {
  return {fn.q1() + (fn.q2() - fn.q1()) * level, fn.q4() - (fn.q4() - fn.q3()) * level};
}

CutInterval strong_side(const TrapFN& fn, const Rational& level) {
  return {leg_formula(fn, level), !fn.left_vertical(), !fn.right_vertical()};
}

LevelRange attained(const TrapFN& fn) {
  const bool sloped = !fn.left_vertical() || !fn.right_vertical();
  if (sloped) return {{0, 1}, false};
  // Both legs vertical: the value is 1 on [q1,q4] and 0 elsewhere in [0,1].
  const bool zero_attained = fn.q1().sign() > 0 || fn.q4() < Rational(1);
  return {{zero_attained ? Rational(0) : Rational(1), 1}, true};
}

}  // namespace

Interval alpha_cut(const TrapFN& fn, const Rational& level) {
  require_closed_level(level, "alpha");
  return leg_formula(fn, level);
}

bool CutInterval::contains(const Rational& x) const {
  if (x < bounds.lo || x > bounds.hi) return false;
  if (x == bounds.lo && lo_open) return false;
  if (x == bounds.hi && hi_open) return false;
  return true;
}

CutRect cut(const Ifn& ifn, const Rational& alpha, const Rational& beta) {
  require_closed_level(alpha, "alpha");
  require_closed_level(beta, "beta");
  // The nu cut uses the same shoulder-shrinking formula as the mu cut.
  return CutRect{alpha, beta, {leg_formula(ifn.mu(), alpha)}, {leg_formula(ifn.nu(), beta)}, false};
}

CutRect strong_cut(const Ifn& ifn, const Rational& alpha, const Rational& beta) {
  require_strong_level(alpha, "alpha");
  require_strong_level(beta, "beta");
  return CutRect{alpha, beta, strong_side(ifn.mu(), alpha), strong_side(ifn.nu(), beta), true};
}

LevelRanges level_range(const Ifn& ifn) { return {attained(ifn.mu()), attained(ifn.nu())}; }

Reconstruction special_set_union(const Ifn& ifn, std::span<const LevelPair> levels,
                                 const Rational& x, CutKind kind) {
  Reconstruction out{0, 0};
  for (const auto& lv : levels) {
    const CutRect rect = kind == CutKind::Closed ? cut(ifn, lv) : strong_cut(ifn, lv.alpha, lv.beta);
    if (lv.alpha > out.mu && rect.mu.contains(x)) out.mu = lv.alpha;
    if (lv.beta > out.nu && rect.nu.contains(x)) out.nu = lv.beta;
  }
  return out;
}

Reconstruction reconstruct(const Ifn& ifn, const DenseSequence& seq, std::uint64_t n,
                           const Rational& x) {
  if (n == 0) throw DomainError("reconstruction needs at least one level pair");
  std::vector<LevelPair> levels;
  levels.reserve(n);
  for (std::uint64_t i = 1; i <= n; ++i) levels.push_back(seq.pair(i));
  return special_set_union(ifn, levels, x);
}

}  // namespace ifnorder
