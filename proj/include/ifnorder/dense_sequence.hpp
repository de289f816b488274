#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ifnorder/rational.hpp"

namespace ifnorder {

/// One (alpha, beta) level pair of a double upper dense sequence.
struct LevelPair {
  Rational alpha;
  Rational beta;

  bool diagonal() const { return alpha == beta; }
  friend bool operator==(const LevelPair&, const LevelPair&) = default;
};

/// i-th term (i >= 1) of the closed-form enumeration i/k - (k-1)/2 with
/// k(k-1)/2 < i <= k(k+1)/2. Values repeat: term 8 is 2/4 = term 2.
Rational term_with_repeats(std::uint64_t i);

/// i-th term (i >= 1) of 1, 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, ...: every rational
/// in (0,1] exactly once, by denominator and then numerator.
Rational distinct_term(std::uint64_t i);

/**
 * Rule producing level pairs (alpha_i, beta_i) in (0,1]^2, i = 1, 2, ...
 *
 * Sequences are stateless index -> value rules. Every sequence starts with
 * (1, 1); constructors of user-supplied sequences enforce that.
 */
class DenseSequence {
 public:
  using Rule = std::function<Rational(std::uint64_t)>;

  /// Default: diagonal pairs over distinct_term().
  static DenseSequence distinct();
  /// Diagonal pairs over term_with_repeats().
  static DenseSequence with_repeats();
  /// Finite explicit list. Throws DomainError for levels outside (0,1] or a
  /// first pair other than (1,1).
  static DenseSequence paired(std::vector<LevelPair> pairs);
  /// Independent alpha and beta rules; the sequence is not considered diagonal.
  static DenseSequence custom(Rule alpha, Rule beta);
  /// A single rule used for both levels.
  static DenseSequence custom_diagonal(Rule level);

  /// One "alpha,beta" pair per line; blank lines and '#' comments skipped.
  static DenseSequence parse_pairs(std::istream& in);
  static DenseSequence from_file(const std::filesystem::path& path);
  /// "distinct", "repeats" or "file:<path>".
  static DenseSequence from_flag(const std::string& flag);

  /// i >= 1. Throws IndexError past the end of a paired list and DomainError
  /// when a custom rule yields a level outside (0,1].
  LevelPair pair(std::uint64_t i) const;

  /// Number of pairs, or nullopt for unbounded rules.
  std::optional<std::uint64_t> length() const;

  /// alpha_i == beta_i for every i.
  bool diagonal() const;

  std::string name() const;

 private:
  struct Distinct {};
  struct Repeats {};
  struct Paired {
    std::vector<LevelPair> pairs;
  };
  struct Custom {
    Rule alpha;
    Rule beta;  // empty for diagonal rules
  };
  using Spec = std::variant<Distinct, Repeats, Paired, Custom>;

  explicit DenseSequence(Spec spec) : spec_(std::move(spec)) {}

  Spec spec_;
};

}  // namespace ifnorder
