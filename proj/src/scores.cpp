#include "ifnorder/scores.hpp"

namespace ifnorder {

const Rational& ScoreQuad::operator[](int r) const {
  switch (r) {
    case 1: return c1;
    case 2: return c2;
    case 3: return c3;
    case 4: return c4;
    default: throw IndexError("score quad component " + std::to_string(r) + " outside 1..4");
  }
}

ScoreQuad score_quad(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  const Rational half(1, 2);
  const Rational ac = a * c;
  const Rational bd = b * d;
  const Rational spread = a + b - c - d;
  return ScoreQuad{
      (spread + ac + bd) * half,
      (spread - ac - bd) * half,
      (a - b - c + d + ac + bd) * half,
      (a - b + c - d + ac - bd) * half,
  };
}

ScoreQuad score_quad(const CutRect& rect) { return score_quad(rect.a(), rect.b(), rect.c(), rect.d()); }

ScoreQuad level_quad(const Ifn& ifn, const LevelPair& levels) { return score_quad(cut(ifn, levels)); }

Rational c_value(const Ifn& ifn, const DenseSequence& seq, std::uint64_t j) {
  if (j == 0) throw IndexError("score indices start at 1");
  const std::uint64_t i = (j + 3) / 4;
  const int r = static_cast<int>(j - 4 * (i - 1));
  return level_quad(ifn, seq.pair(i))[r];
}

IvifScores ivif_scores(const Interval& mu, const Interval& nu) {
  const Rational& a = mu.lo;
  const Rational& b = mu.hi;
  const Rational& c = nu.lo;
  const Rational& d = nu.hi;
  const Rational half(1, 2);
  return IvifScores{
      (a + b - c - d + a * c + b * d) * half,
      (-a - b + c + d + a * c + b * d) * half,
      (a - b - c + d + a * c + b * d) * half,
      (-a + b - c + d - a * c + b * d) * half,
  };
}

TriangularScores triangular_scores(const Ifn& ifn) {
  if (!ifn.mu().is_triangular() || !ifn.nu().is_triangular())
    throw KindMismatch("triangular scores need triangular membership and non-membership");
  const Rational one(1);
  const Rational& a = ifn.mu().q1();
  const Rational& b = ifn.mu().q2();
  const Rational& c = ifn.mu().q4();
  const Rational& e = ifn.nu().q1();
  const Rational& f = ifn.nu().q2();
  const Rational& g = ifn.nu().q4();

  TriangularScores s;
  s.left = (one - a) / (one + b - a);
  s.right = c / (one + c - b);
  s.t = (one + s.right - s.left) / 2;
  s.nl = e / (one + e - f);
  s.nr = (one - g) / (one + f - g);
  s.nt = (one + s.nl - s.nr) / 2;
  s.ntc = one - s.nt;
  return s;
}

}  // namespace ifnorder
