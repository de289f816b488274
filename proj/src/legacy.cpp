#include "ifnorder/legacy.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "ifnorder/scores.hpp"

namespace ifnorder {

namespace {

enum class Shape { Interval, Point, Triangle };

struct TagInfo {
  LegacyTag tag;
  std::string_view name;
  Shape shape;
};

constexpr std::array<TagInfo, 18> kTags{{
    {LegacyTag::XuS, "xu-s", Shape::Interval},
    {LegacyTag::XuH, "xu-h", Shape::Interval},
    {LegacyTag::YuS, "yu-s", Shape::Interval},
    {LegacyTag::YeM, "ye-m", Shape::Interval},
    {LegacyTag::LakshmanaGeethaLG, "lakshmana-geetha-lg", Shape::Interval},
    {LegacyTag::ChenTanS, "chen-tan-s", Shape::Point},
    {LegacyTag::HongChoiH, "hong-choi-h", Shape::Point},
    {LegacyTag::LiuS, "liu-s", Shape::Point},
    {LegacyTag::ZhouWuS, "zhou-wu-s", Shape::Point},
    {LegacyTag::LinS, "lin-s", Shape::Point},
    {LegacyTag::WangS, "wang-s", Shape::Point},
    {LegacyTag::LLinS, "llin-s", Shape::Point},
    {LegacyTag::YeSY, "ye-sy", Shape::Point},
    {LegacyTag::ZhangYuKminus, "zhang-yu-kminus", Shape::Interval},
    {LegacyTag::ZhangYuKplus, "zhang-yu-kplus", Shape::Interval},
    {LegacyTag::TriangularT, "triangular-t", Shape::Triangle},
    {LegacyTag::TriangularNT, "triangular-nt", Shape::Triangle},
    {LegacyTag::TriangularNTc, "triangular-ntc", Shape::Triangle},
}};

const TagInfo& info(LegacyTag tag) {
  for (const auto& t : kTags)
    if (t.tag == tag) return t;
  throw Error("unknown legacy tag");
}

void require_shape(const TagInfo& t, const Ifn& v) {
  bool ok = false;
  const char* want = "";
  switch (t.shape) {
    case Shape::Interval:
      ok = v.mu().is_flat() && v.nu().is_flat();
      want = "an interval-valued";
      break;
    case Shape::Point:
      ok = v.mu().is_point() && v.nu().is_point();
      want = "a crisp (mu, nu)";
      break;
    case Shape::Triangle:
      ok = v.mu().is_triangular() && v.nu().is_triangular();
      want = "a triangular";
      break;
  }
  if (!ok)
    throw KindMismatch(std::string(t.name) + " needs " + want + " value, got " +
                       std::string(to_string(v.kind())));
}

Rational zhang_yu_norm_sq(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  const Rational s = a * a + b * b + c * c + d * d;
  if (s.is_zero()) throw DivisionByZero("Zhang-Yu closeness undefined for ([0,0],[0,0])");
  return s / 2;
}

LegacyScore plain(Rational v) { return {std::move(v), std::nullopt, false}; }

}  // namespace

void LegacyMethod::check_parameters() const {
  if (tag == LegacyTag::LakshmanaGeethaLG && !in_unit_interval(delta))
    throw DomainError("Lakshmana-Geetha delta " + delta.str() + " outside [0,1]");
  if (tag == LegacyTag::ZhouWuS) {
    if (!in_unit_interval(zw_alpha) || !in_unit_interval(zw_beta))
      throw DomainError("Zhou-Wu alpha and beta must lie in [0,1]");
    if (zw_alpha + zw_beta > Rational(1))
      throw DomainError("Zhou-Wu alpha + beta = " + (zw_alpha + zw_beta).str() + " exceeds 1");
  }
}

std::string_view to_string(LegacyTag tag) { return info(tag).name; }

LegacyTag parse_legacy_tag(std::string_view name) {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (const auto& t : kTags)
    if (t.name == lowered) return t.tag;
  throw ParseError("unknown score method '" + std::string(name) + "'");
}

const std::vector<LegacyTag>& all_legacy_tags() {
  static const std::vector<LegacyTag> tags = [] {
    std::vector<LegacyTag> out;
    for (const auto& t : kTags) out.push_back(t.tag);
    return out;
  }();
  return tags;
}

LegacyScore legacy_score(const LegacyMethod& method, const Ifn& value) {
  method.check_parameters();
  const TagInfo& t = info(method.tag);
  require_shape(t, value);

  const Rational one(1);
  const Rational half(1, 2);
  // Interval view ([a,b],[c,d]); for crisp values a == b and c == d.
  const Rational& a = value.mu().q1();
  const Rational& b = value.mu().q4();
  const Rational& c = value.nu().q1();
  const Rational& d = value.nu().q4();
  const Rational& mu = a;
  const Rational& nu = c;
  const Rational pi = one - mu - nu;

  switch (method.tag) {
    case LegacyTag::XuS: return plain((a + b - c - d) * half);
    case LegacyTag::XuH: return plain((a + b + c + d) * half);
    case LegacyTag::YuS: return plain((Rational(2) + a + b - c - d) * half);
    case LegacyTag::YeM: return plain(a + b - one + (c + d) * half);
    case LegacyTag::LakshmanaGeethaLG:
      return plain((a + b + method.delta * (Rational(2) - a - b - c - d)) * half);
    case LegacyTag::ChenTanS: return plain(mu - nu);
    case LegacyTag::HongChoiH: return plain(mu + nu);
    case LegacyTag::LiuS: return plain(mu + mu * pi);
    case LegacyTag::ZhouWuS: return plain(mu - nu + (method.zw_alpha - method.zw_beta) * pi);
    case LegacyTag::LinS: return plain(Rational(2) * mu + nu - one);
    case LegacyTag::WangS: return plain(mu - nu - pi * half);
    case LegacyTag::LLinS: return plain(mu * half + Rational(3, 2) * (mu + nu) - one);
    case LegacyTag::YeSY: return plain(mu * (Rational(2) - mu - nu) + pi * pi);
    case LegacyTag::ZhangYuKminus:
    case LegacyTag::ZhangYuKplus: {
      const Rational denom = zhang_yu_norm_sq(a, b, c, d);
      const Rational to_neg = (c + d) * half;
      const Rational to_pos = (a + b) * half;
      const Rational k_minus = to_neg * to_neg / denom;
      const Rational k_plus = to_pos * to_pos / denom;
      if (method.tag == LegacyTag::ZhangYuKminus) return {k_minus, k_plus, true};
      return {k_plus, k_minus, true};
    }
    case LegacyTag::TriangularT: return plain(triangular_scores(value).t);
    case LegacyTag::TriangularNT: return plain(triangular_scores(value).nt);
    case LegacyTag::TriangularNTc: return plain(triangular_scores(value).ntc);
  }
  throw Error("unhandled legacy tag");
}

}  // namespace ifnorder
