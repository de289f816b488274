#include <doctest.h>

#include "ifnorder/total_order.hpp"
#include "oracle.hpp"

using namespace ifnorder;

namespace {

Rational r(const char* text) { return Rational::parse(text); }

Ifn trap(const char* m1, const char* m2, const char* m3, const char* m4, const char* n1,
         const char* n2, const char* n3, const char* n4) {
  return make_trapezoidal({r(m1), r(m2), r(m3), r(m4)}, {r(n1), r(n2), r(n3), r(n4)});
}

Ifn tri(const char* a, const char* b, const char* c, const char* e, const char* f, const char* g) {
  return embed_triangular({r(a), r(b), r(c)}, {r(e), r(f), r(g)});
}

const Ifn kDeepA = trap("0.3", "0.35", "0.4", "0.5", "0.1", "0.2", "0.25", "0.3");
const Ifn kDeepB = trap("0.35", "0.35", "0.4", "0.55", "0", "0.2", "0.25", "0.35");
const Ifn kNearA = trap("0.35", "0.35", "0.4", "0.6", "0.1", "0.2", "0.3", "0.35");
const Ifn kNearB = trap("0.35", "0.35", "0.45", "0.55", "0", "0.3", "0.3", "0.35");

}  // namespace

TEST_CASE("worked comparisons") {
  const auto seq = DenseSequence::distinct();
  const Verdict deep = compare(kDeepA, kDeepB, seq);
  CHECK(deep.relation == Relation::Less);
  CHECK(deep.j == 5);
  CHECK(*deep.value_a == r("0.26125"));
  CHECK(*deep.value_b == r("0.30125"));
  CHECK(deep.depth == 2);

  const Verdict near = compare(kNearA, kNearB, seq);
  CHECK(near.relation == Relation::Greater);
  CHECK(near.j == 2);
  CHECK(*near.value_a == r("0.03"));
  CHECK(*near.value_b == r("-0.02"));

  const Verdict self = compare(kDeepA, kDeepA, seq);
  CHECK(self.relation == Relation::Equivalent);
  CHECK(self.certified);
  CHECK(self.depth == 3);
  CHECK_FALSE(self.decided());
  CHECK(to_string(Relation::Indistinguishable) == "Indistinguishable");
}

TEST_CASE("depth and sequence limits") {
  const auto seq = DenseSequence::distinct();
  CHECK_THROWS_AS(compare(kDeepA, kDeepB, seq, 0), DomainError);

  const Verdict shallow = compare(kDeepA, kDeepB, seq, 1);
  CHECK(shallow.relation == Relation::Indistinguishable);
  CHECK(shallow.depth == 1);

  const auto level_one = DenseSequence::paired({{1, 1}});
  CHECK(compare(kDeepA, kDeepB, level_one).relation == Relation::Indistinguishable);
  const Verdict same = compare(kDeepA, kDeepA, level_one);
  CHECK(same.relation == Relation::Equivalent);
  CHECK_FALSE(same.certified);

  const auto repeats = DenseSequence::with_repeats();
  const Verdict rep = compare(kDeepA, kDeepA, repeats);
  CHECK(rep.certified);
  CHECK(rep.depth == 4);
  CHECK(compare(kDeepA, kDeepB, repeats).j == 5);

  const auto off_diagonal = DenseSequence::custom([](std::uint64_t i) { return distinct_term(i); },
                                                  [](std::uint64_t) { return Rational(1); });
  const Verdict od = compare(kDeepA, kDeepA, off_diagonal, 7);
  CHECK(od.relation == Relation::Equivalent);
  CHECK_FALSE(od.certified);
  CHECK(od.depth == 7);
}

TEST_CASE("equality certificate") {
  const auto seq = DenseSequence::distinct();
  CHECK(equality_certificate(kDeepA, kDeepA, seq));
  CHECK_FALSE(equality_certificate(kDeepA, kDeepB, seq));
  CHECK_FALSE(equality_certificate(kNearA, kNearB, seq));
  CHECK_THROWS_AS(equality_certificate(kDeepA, kDeepA, DenseSequence::paired({{1, 1}, {{1, 2}, {1, 2}}})),
                  CertificateInapplicable);
  CHECK_THROWS_AS(
      equality_certificate(kDeepA, kDeepA,
                           DenseSequence::custom([](std::uint64_t) { return Rational(1); },
                                                 [](std::uint64_t) { return Rational(1); })),
      CertificateInapplicable);
  CHECK_THROWS_AS(
      equality_certificate(kDeepA, kDeepA,
                           DenseSequence::custom_diagonal([](std::uint64_t i) {
                             return i % 2 ? Rational(1) : Rational(1, 2);
                           }),
                           50),
      CertificateInapplicable);
}

TEST_CASE("sorting") {
  const auto seq = DenseSequence::distinct();
  const Ifn a = tri("0.20", "0.30", "0.50", "0.35", "0.55", "0.65");
  const Ifn b = tri("0.17", "0.32", "0.58", "0.37", "0.63", "0.73");
  const Ifn c = tri("0.25", "0.40", "0.70", "0.45", "0.75", "0.85");
  const std::vector<Ifn> abc{a, b, c};
  const auto groups = sort(abc, seq);
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].members == std::vector<std::size_t>{1});
  CHECK(groups[1].members == std::vector<std::size_t>{0});
  CHECK(groups[2].members == std::vector<std::size_t>{2});

  const std::vector<Ifn> single{a};
  CHECK(sort(single, seq).size() == 1);

  const std::vector<Ifn> aab{c, a, c};
  const auto tied = sort(aab, seq);
  REQUIRE(tied.size() == 2);
  CHECK(tied[0].members == std::vector<std::size_t>{1});
  CHECK(tied[1].members == std::vector<std::size_t>{0, 2});
  CHECK_FALSE(tied[1].indistinguishable);

  const std::vector<Ifn> close{kDeepA, kDeepB};
  const auto flagged = sort(close, seq, 1);
  REQUIRE(flagged.size() == 1);
  CHECK(flagged[0].indistinguishable);

  CHECK_THROWS_AS(sort(std::span<const Ifn>{}, seq), DomainError);
}

TEST_CASE("sort agrees with pairwise comparison on random lists") {
  const auto seq = DenseSequence::distinct();
  oracle::Generator gen(51, 8);
  for (int round = 0; round < 20; ++round) {
    std::vector<Ifn> items;
    for (int i = 0; i < 12; ++i) items.push_back(oracle::to_ifn(gen.next()));
    items.push_back(items[3]);
    const auto groups = sort(items, seq);
    std::vector<std::size_t> flat;
    for (const auto& g : groups) {
      CHECK_FALSE(g.indistinguishable);
      for (std::size_t m : g.members) {
        CHECK(compare(items[g.members.front()], items[m], seq).relation == Relation::Equivalent);
        flat.push_back(m);
      }
    }
    CHECK(flat.size() == items.size());
    for (std::size_t k = 1; k < groups.size(); ++k)
      CHECK(compare(items[groups[k - 1].members.front()], items[groups[k].members.front()], seq).relation ==
            Relation::Less);
  }
}
