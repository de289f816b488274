#include "ifnorder/ifn.hpp"

#include <set>
#include <sstream>

namespace ifnorder {

TrapFN::TrapFN(Rational q1, Rational q2, Rational q3, Rational q4)
    : knots_{std::move(q1), std::move(q2), std::move(q3), std::move(q4)} {
  for (const auto& k : knots_) {
    if (!in_unit_interval(k))
      throw KnotOrderError("knot " + k.str() + " outside [0,1]");
  }
  if (!(knots_[0] <= knots_[1] && knots_[1] <= knots_[2] && knots_[2] <= knots_[3])) {
    throw KnotOrderError("knots not nondecreasing: (" + knots_[0].str() + ", " + knots_[1].str() +
                         ", " + knots_[2].str() + ", " + knots_[3].str() + ")");
  }
}

Rational TrapFN::at(const Rational& x) const {
  if (q2() <= x && x <= q3()) return 1;
  if (q1() < x && x < q2()) return (x - q1()) / (q2() - q1());
  if (q3() < x && x < q4()) return (q4() - x) / (q4() - q3());
  return 0;
}

std::string_view to_string(IfnKind kind) {
  switch (kind) {
    case IfnKind::IFValue: return "IFValue";
    case IfnKind::IVIF: return "IVIF";
    case IfnKind::Triangular: return "Triangular";
    case IfnKind::Trapezoidal: return "Trapezoidal";
  }
  return "?";
}

std::string ValidationReport::describe() const {
  if (ok()) return "valid";
  std::ostringstream os;
  os << "not an intuitionistic fuzzy number:";
  if (!leg_condition) os << " leg condition fails (neither e >= b2, f1 >= c nor f2 <= a, g <= b1)";
  if (!leg_condition && !pointwise) os << ";";
  if (!pointwise) {
    os << " membership + non-membership exceeds 1";
    if (witness) os << " at x = " << witness->str();
  }
  return os.str();
}

ValidationReport validate(const TrapFN& mu, const TrapFN& nu) {
  ValidationReport report;
  const bool right_branch = nu.q1() >= mu.q3() && nu.q2() >= mu.q4();
  const bool left_branch = nu.q3() <= mu.q1() && nu.q4() <= mu.q2();
  report.leg_condition = right_branch || left_branch;

  // mu + nu is linear between consecutive knots and upper semicontinuous, so
  // its maximum over any grid is reached at a knot.
  std::set<Rational> probes(mu.knots().begin(), mu.knots().end());
  probes.insert(nu.knots().begin(), nu.knots().end());

  const Rational one(1);
  for (const auto& x : probes) {
    const Rational m = mu.at(x);
    const Rational n = nu.at(x);
    const bool fails = (m == one && n == one) ? (x + x > one) : (m + n > one);
    if (fails) {
      report.pointwise = false;
      report.witness = x;
      break;
    }
  }
  return report;
}

IfnKind infer_kind(const TrapFN& mu, const TrapFN& nu) {
  if (mu.is_point() && nu.is_point()) return IfnKind::IFValue;
  if (mu.is_flat() && nu.is_flat()) return IfnKind::IVIF;
  if (mu.is_triangular() && nu.is_triangular()) return IfnKind::Triangular;
  return IfnKind::Trapezoidal;
}

Ifn::Ifn(TrapFN mu, TrapFN nu, IfnKind kind, Strictness strictness)
    : mu_(std::move(mu)), nu_(std::move(nu)), kind_(kind) {
  const bool consistent = [&] {
    switch (kind_) {
      case IfnKind::IFValue: return mu_.is_point() && nu_.is_point();
      case IfnKind::IVIF: return mu_.is_flat() && nu_.is_flat();
      case IfnKind::Triangular: return mu_.is_triangular() && nu_.is_triangular();
      case IfnKind::Trapezoidal: return true;
    }
    return false;
  }();
  if (!consistent)
    throw KnotOrderError("knots are not of kind " + std::string(to_string(kind_)));

  if (strictness == Strictness::Strict) {
    if (auto report = validate(mu_, nu_); !report.ok()) throw LegConditionError(std::move(report));
  }
}

Ifn make_trapezoidal(const std::array<Rational, 4>& mu, const std::array<Rational, 4>& nu,
                     Strictness strictness) {
  TrapFN m(mu);
  TrapFN n(nu);
  const IfnKind kind = infer_kind(m, n);
  return Ifn(std::move(m), std::move(n), kind, strictness);
}

Ifn embed_if_value(const Rational& m, const Rational& n, Strictness strictness) {
  return Ifn(TrapFN::point(m), TrapFN::point(n), IfnKind::IFValue, strictness);
}

Ifn embed_ivif(const Interval& mu, const Interval& nu, Strictness strictness) {
  return Ifn(TrapFN::interval(mu.lo, mu.hi), TrapFN::interval(nu.lo, nu.hi), IfnKind::IVIF,
             strictness);
}

Ifn embed_triangular(const std::array<Rational, 3>& mu, const std::array<Rational, 3>& nu,
                     Strictness strictness) {
  return Ifn(TrapFN::triangle(mu[0], mu[1], mu[2]), TrapFN::triangle(nu[0], nu[1], nu[2]),
             IfnKind::Triangular, strictness);
}

Rational membership_at(const Ifn& ifn, const Rational& x) { return ifn.mu().at(x); }

Rational nonmembership_at(const Ifn& ifn, const Rational& x) { return ifn.nu().at(x); }

Rational hesitancy_at(const Ifn& ifn, const Rational& x) {
  return Rational(1) - membership_at(ifn, x) - nonmembership_at(ifn, x);
}

}  // namespace ifnorder
