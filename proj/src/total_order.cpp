#include "ifnorder/total_order.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ifnorder/scores.hpp"

namespace ifnorder {

namespace {

constexpr std::size_t kCertificateLevels = 3;

std::uint64_t scan_bound(const DenseSequence& seq, std::uint64_t limit) {
  const auto len = seq.length();
  return len ? std::min(*len, limit) : limit;
}

}  // namespace

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "Less";
    case Relation::Greater: return "Greater";
    case Relation::Equivalent: return "Equivalent";
    case Relation::Indistinguishable: return "Indistinguishable";
  }
  return "?";
}

Verdict compare(const Ifn& a, const Ifn& b, const DenseSequence& seq, std::uint64_t max_depth) {
  if (max_depth == 0) throw DomainError("comparison depth must be at least 1");
  const bool diagonal = seq.diagonal();
  const std::uint64_t bound = scan_bound(seq, max_depth);
  std::set<Rational> levels;

  for (std::uint64_t i = 1; i <= bound; ++i) {
    const LevelPair lv = seq.pair(i);
    const ScoreQuad qa = level_quad(a, lv);
    const ScoreQuad qb = level_quad(b, lv);
    for (int r = 1; r <= 4; ++r) {
      if (qa[r] == qb[r]) continue;
      Verdict v;
      v.relation = qa[r] < qb[r] ? Relation::Less : Relation::Greater;
      v.j = 4 * (i - 1) + static_cast<std::uint64_t>(r);
      v.value_a = qa[r];
      v.value_b = qb[r];
      v.depth = i;
      return v;
    }
    if (diagonal) {
      levels.insert(lv.alpha);
      if (levels.size() == kCertificateLevels) {
        Verdict v;
        v.relation = Relation::Equivalent;
        v.certified = true;
        v.depth = i;
        return v;
      }
    }
  }

  Verdict v;
  v.relation = a.same_knots(b) ? Relation::Equivalent : Relation::Indistinguishable;
  v.depth = bound;
  return v;
}

bool equality_certificate(const Ifn& a, const Ifn& b, const DenseSequence& seq,
                          std::uint64_t scan_limit) {
  if (!seq.diagonal())
    throw CertificateInapplicable("sequence " + seq.name() + " is not diagonal");
  const std::uint64_t bound = scan_bound(seq, scan_limit);
  std::set<Rational> levels;
  bool equal = true;
  for (std::uint64_t i = 1; i <= bound; ++i) {
    const LevelPair lv = seq.pair(i);
    if (equal && !(level_quad(a, lv) == level_quad(b, lv))) equal = false;
    levels.insert(lv.alpha);
    if (levels.size() == kCertificateLevels) return equal;
  }
  throw CertificateInapplicable("sequence " + seq.name() + " has fewer than three distinct levels in its first " +
                                std::to_string(bound) + " pairs");
}

std::vector<TieGroup> sort(std::span<const Ifn> items, const DenseSequence& seq, std::uint64_t max_depth) {
  if (items.empty()) throw DomainError("cannot sort an empty list");
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return compare(items[x], items[y], seq, max_depth).relation == Relation::Less;
  });

  std::vector<TieGroup> groups;
  for (std::size_t idx : order) {
    if (!groups.empty()) {
      const Verdict v = compare(items[groups.back().members.front()], items[idx], seq, max_depth);
      if (!v.decided()) {
        groups.back().members.push_back(idx);
        if (v.relation == Relation::Indistinguishable) groups.back().indistinguishable = true;
        continue;
      }
    }
    groups.push_back(TieGroup{{idx}, false});
  }
  for (auto& g : groups) std::sort(g.members.begin(), g.members.end());
  return groups;
}

}  // namespace ifnorder
