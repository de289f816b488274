#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "ifnorder/errors.hpp"
#include "ifnorder/rational.hpp"

namespace ifnorder {

/// Closed interval [lo, hi] of exact scalars.
struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/**
 * Trapezoidal fuzzy number on the universe [0,1].
 *
 * Knots are (left foot, left shoulder, right shoulder, right foot). Equal
 * neighbouring knots give vertical legs, which is how crisp values (all four
 * equal), intervals (q1 = q2, q3 = q4) and triangles (q2 = q3) are encoded.
 */
class TrapFN {
 public:
  /// Throws KnotOrderError unless 0 <= q1 <= q2 <= q3 <= q4 <= 1.
  TrapFN(Rational q1, Rational q2, Rational q3, Rational q4);
  explicit TrapFN(const std::array<Rational, 4>& knots)
      : TrapFN(knots[0], knots[1], knots[2], knots[3]) {}

  static TrapFN point(const Rational& v) { return TrapFN(v, v, v, v); }
  static TrapFN interval(const Rational& lo, const Rational& hi) { return TrapFN(lo, lo, hi, hi); }
  static TrapFN triangle(const Rational& a, const Rational& b, const Rational& c) {
    return TrapFN(a, b, b, c);
  }

  const Rational& q1() const { return knots_[0]; }
  const Rational& q2() const { return knots_[1]; }
  const Rational& q3() const { return knots_[2]; }
  const Rational& q4() const { return knots_[3]; }
  const std::array<Rational, 4>& knots() const { return knots_; }

  /// Piecewise-linear hat; a vertical leg takes the value 1 at its foot.
  Rational at(const Rational& x) const;

  bool is_point() const { return q1() == q4(); }
  bool is_flat() const { return q1() == q2() && q3() == q4(); }
  bool is_triangular() const { return q2() == q3(); }
  bool left_vertical() const { return q1() == q2(); }
  bool right_vertical() const { return q3() == q4(); }

  friend bool operator==(const TrapFN&, const TrapFN&) = default;

 private:
  std::array<Rational, 4> knots_;
};

enum class IfnKind { IFValue, IVIF, Triangular, Trapezoidal };

std::string_view to_string(IfnKind kind);

/// Outcome of the structural checks on a (mu, nu) pair.
struct ValidationReport {
  /// Either branch of the leg condition holds.
  bool leg_condition = true;
  /// mu(x) + nu(x) <= 1 everywhere (see validate() for touching supports).
  bool pointwise = true;
  /// A point where the pointwise check fails, if any.
  std::optional<Rational> witness;

  bool ok() const { return leg_condition && pointwise; }
  std::string describe() const;
};

/// Raised when a (mu, nu) pair is not an intuitionistic fuzzy number.
class LegConditionError : public Error {
 public:
  explicit LegConditionError(ValidationReport report)
      : Error(report.describe()), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

enum class Strictness {
  Strict,   ///< failed validation throws LegConditionError
  Lenient,  ///< failed validation is accepted; callers may inspect validate()
};

/**
 * Checks the leg condition and the pointwise bound mu + nu <= 1.
 *
 * The pointwise bound is evaluated at every knot and on a 1/256 grid. Where
 * both trapezoids reach 1 at the same point x (vertical legs touching, e.g.
 * the crisp value <0.4, 0.4>), that point is read as membership and
 * non-membership degree x each and must satisfy 2x <= 1.
 */
ValidationReport validate(const TrapFN& mu, const TrapFN& nu);

/// Intuitionistic fuzzy number in trapezoidal normal form.
class Ifn {
 public:
  Ifn(TrapFN mu, TrapFN nu, IfnKind kind, Strictness strictness = Strictness::Strict);

  const TrapFN& mu() const { return mu_; }
  const TrapFN& nu() const { return nu_; }
  IfnKind kind() const { return kind_; }

  /// Knot equality; the kind tag is informational and ignored.
  bool same_knots(const Ifn& other) const { return mu_ == other.mu_ && nu_ == other.nu_; }

 private:
  TrapFN mu_;
  TrapFN nu_;
  IfnKind kind_;
};

/// Most specific kind consistent with the knots.
IfnKind infer_kind(const TrapFN& mu, const TrapFN& nu);

Ifn make_trapezoidal(const std::array<Rational, 4>& mu, const std::array<Rational, 4>& nu,
                     Strictness strictness = Strictness::Strict);
Ifn embed_if_value(const Rational& m, const Rational& n, Strictness strictness = Strictness::Strict);
Ifn embed_ivif(const Interval& mu, const Interval& nu, Strictness strictness = Strictness::Strict);
Ifn embed_triangular(const std::array<Rational, 3>& mu, const std::array<Rational, 3>& nu,
                     Strictness strictness = Strictness::Strict);

Rational membership_at(const Ifn& ifn, const Rational& x);
Rational nonmembership_at(const Ifn& ifn, const Rational& x);
Rational hesitancy_at(const Ifn& ifn, const Rational& x);

}  // namespace ifnorder
