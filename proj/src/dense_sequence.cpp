#include "ifnorder/dense_sequence.hpp"

#include <fstream>
#include <istream>
#include <numeric>

#include "ifnorder/errors.hpp"

namespace ifnorder {

namespace {

bool valid_level(const Rational& r) { return r.sign() > 0 && r <= Rational(1); }

void check_level(const Rational& r, std::uint64_t i) {
  if (!valid_level(r))
    throw DomainError("level " + r.str() + " at index " + std::to_string(i) + " is outside (0,1]");
}

void check_first_pair(const LevelPair& p) {
  if (p.alpha != Rational(1) || p.beta != Rational(1))
    throw DomainError("a level sequence must start at (1,1), got (" + p.alpha.str() + "," +
                      p.beta.str() + ")");
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Rational term_with_repeats(std::uint64_t i) {
  if (i == 0) throw IndexError("sequence indices start at 1");
  // Smallest k with k(k+1) >= 2i, i.e. k = ceil(sqrt(2i + 1/4) - 1/2).
  std::uint64_t k = 1;
  while (k * (k + 1) < 2 * i) ++k;
  const auto num = static_cast<std::int64_t>(2 * i - k * (k - 1));
  return Rational(num, static_cast<std::int64_t>(2 * k));
}

Rational distinct_term(std::uint64_t i) {
  if (i == 0) throw IndexError("sequence indices start at 1");
  if (i == 1) return 1;
  std::uint64_t seen = 1;
  for (std::uint64_t k = 2;; ++k) {
    for (std::uint64_t j = 1; j < k; ++j) {
      if (std::gcd(j, k) != 1) continue;
      if (++seen == i) return Rational(static_cast<std::int64_t>(j), static_cast<std::int64_t>(k));
    }
  }
}

DenseSequence DenseSequence::distinct() { return DenseSequence(Distinct{}); }

DenseSequence DenseSequence::with_repeats() { return DenseSequence(Repeats{}); }

DenseSequence DenseSequence::paired(std::vector<LevelPair> pairs) {
  if (pairs.empty()) throw DomainError("a paired level sequence needs at least one pair");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    check_level(pairs[i].alpha, i + 1);
    check_level(pairs[i].beta, i + 1);
  }
  check_first_pair(pairs.front());
  return DenseSequence(Paired{std::move(pairs)});
}

DenseSequence DenseSequence::custom(Rule alpha, Rule beta) {
  if (!alpha || !beta) throw DomainError("custom sequence rules must be callable");
  check_first_pair({alpha(1), beta(1)});
  return DenseSequence(Custom{std::move(alpha), std::move(beta)});
}

DenseSequence DenseSequence::custom_diagonal(Rule level) {
  if (!level) throw DomainError("custom sequence rule must be callable");
  check_first_pair({level(1), level(1)});
  return DenseSequence(Custom{std::move(level), {}});
}

DenseSequence DenseSequence::parse_pairs(std::istream& in) {
  std::vector<LevelPair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw ParseError("sequence line " + std::to_string(line_no) + ": expected 'alpha,beta'");
    pairs.push_back({Rational::parse(line.substr(0, comma)), Rational::parse(line.substr(comma + 1))});
  }
  return paired(std::move(pairs));
}

DenseSequence DenseSequence::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read sequence file " + path.string());
  return parse_pairs(in);
}

DenseSequence DenseSequence::from_flag(const std::string& flag) {
  if (flag == "distinct") return distinct();
  if (flag == "repeats") return with_repeats();
  if (flag.rfind("file:", 0) == 0) return from_file(flag.substr(5));
  throw ParseError("unknown sequence '" + flag + "' (expected distinct, repeats or file:<path>)");
}

LevelPair DenseSequence::pair(std::uint64_t i) const {
  if (i == 0) throw IndexError("sequence indices start at 1");
  return std::visit(
      Overloaded{
          [&](const Distinct&) {
            Rational t = distinct_term(i);
            return LevelPair{t, t};
          },
          [&](const Repeats&) {
            Rational t = term_with_repeats(i);
            return LevelPair{t, t};
          },
          [&](const Paired& p) {
            if (i > p.pairs.size())
              throw IndexError("index " + std::to_string(i) + " past the end of a " +
                               std::to_string(p.pairs.size()) + "-pair sequence");
            return p.pairs[i - 1];
          },
          [&](const Custom& c) {
            Rational a = c.alpha(i);
            Rational b = c.beta ? c.beta(i) : a;
            check_level(a, i);
            check_level(b, i);
            return LevelPair{std::move(a), std::move(b)};
          },
      },
      spec_);
}

std::optional<std::uint64_t> DenseSequence::length() const {
  if (const auto* p = std::get_if<Paired>(&spec_)) return p->pairs.size();
  return std::nullopt;
}

bool DenseSequence::diagonal() const {
  return std::visit(Overloaded{
                        [](const Distinct&) { return true; },
                        [](const Repeats&) { return true; },
                        [](const Paired& p) {
                          for (const auto& pr : p.pairs)
                            if (!pr.diagonal()) return false;
                          return true;
                        },
                        [](const Custom& c) { return !c.beta; },
                    },
                    spec_);
}

std::string DenseSequence::name() const {
  return std::visit(Overloaded{
                        [](const Distinct&) { return std::string("distinct"); },
                        [](const Repeats&) { return std::string("repeats"); },
                        [](const Paired& p) {
                          return "paired(" + std::to_string(p.pairs.size()) + ")";
                        },
                        [](const Custom&) { return std::string("custom"); },
                    },
                    spec_);
}

}  // namespace ifnorder
