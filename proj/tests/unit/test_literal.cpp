#include <doctest.h>

#include "ifnorder/literal.hpp"
#include "oracle.hpp"

using namespace ifnorder;

namespace {

Rational r(const char* text) { return Rational::parse(text); }

}  // namespace

TEST_CASE("every literal form normalises to trapezoid knots") {
  const Ifn full = ifn_from_json(parse_json_exact(
      R"({"mu": ["0.17", 0.3, "0.47", 0.56], "nu": [0.05, "0.13", "0.16", "0.23"]})"));
  CHECK(full.kind() == IfnKind::Trapezoidal);
  CHECK(full.mu().q2() == r("0.3"));
  CHECK(full.nu().q1() == r("0.05"));

  const Ifn ifv = ifn_from_json(parse_json_exact(R"({"ifv": [0.2, 0.4]})"));
  CHECK(ifv.kind() == IfnKind::IFValue);
  CHECK(ifv.nu() == TrapFN::point(r("0.4")));

  const Ifn ivif = ifn_from_json(parse_json_exact(R"({"ivif": [0.7, [0.2, 0.6]]})"));
  CHECK(ivif.kind() == IfnKind::IVIF);
  CHECK(ivif.mu() == TrapFN::point(r("0.7")));
  CHECK(ivif.nu() == TrapFN::interval(r("0.2"), r("0.6")));

  const Ifn tri = ifn_from_json(parse_json_exact(R"({"tri": [[0, 0.2, 0.4], ["0.4", "0.45", "1/2"]]})"));
  CHECK(tri.kind() == IfnKind::Triangular);
  CHECK(tri.nu().q4() == Rational(1, 2));
}

TEST_CASE("JSON numbers are read exactly") {
  const auto doc = parse_json_exact(R"({"x": 0.1, "y": 1e-3, "z": 12})");
  CHECK(scalar_from_json(doc["x"]) == Rational(1, 10));
  CHECK(scalar_from_json(doc["y"]) == Rational(1, 1000));
  CHECK(scalar_from_json(doc["z"]) == Rational(12));
  CHECK_THROWS_AS(scalar_from_json(nlohmann::json(true)), ParseError);
}

TEST_CASE("malformed literals raise ParseError") {
  for (const char* bad : {R"([1, 2])", R"({"mu": [0, 0, 0, 0]})", R"({"ifv": [0.2]})",
                          R"({"ivif": [[0.1, 0.2]]})", R"({"tri": [[0, 0.1], [0.2, 0.3, 0.4]]})",
                          R"({"ifv": ["x", 0.1]})", R"({"other": 1})"})
    CHECK_THROWS_AS(ifn_from_json(parse_json_exact(bad)), ParseError);
  CHECK_THROWS_AS(parse_json_exact("{"), ParseError);
  CHECK_THROWS_AS(ifn_from_json(parse_json_exact(R"({"ifv": [0.6, 0.6]})")), LegConditionError);
  CHECK_NOTHROW(ifn_from_json(parse_json_exact(R"({"ifv": [0.6, 0.6]})"), Strictness::Lenient));
}

TEST_CASE("compact literals") {
  CHECK(parse_compact("<0.2|0.4>").same_knots(embed_if_value(r("0.2"), r("0.4"))));
  CHECK(parse_compact("⟨0 0.2|0.2 0.3⟩").kind() == IfnKind::IVIF);
  CHECK(parse_compact("< 0 0.2 0.4 | 0.4 0.45 0.5 >").kind() == IfnKind::Triangular);
  CHECK(parse_compact("<0.17 0.3 0.47 0.56|0.05 0.13 0.16 0.23>").kind() == IfnKind::Trapezoidal);
  for (const char* bad : {"<0.2 0.4>", "<|0.1>", "<0.1 0.2 0.3 0.4 0.5|0.9>", "<0.1|0.2|0.3>", "<a|0.1>"})
    CHECK_THROWS_AS(parse_compact(bad), ParseError);
}

TEST_CASE("literals round trip through both text forms") {
  oracle::Generator gen(21, 32);
  for (int i = 0; i < 300; ++i) {
    const Ifn v = oracle::to_ifn(gen.next());
    const Ifn via_json = ifn_from_json(parse_json_exact(ifn_to_json(v).dump()));
    CHECK(via_json.same_knots(v));
    CHECK(via_json.kind() == v.kind());
    const Ifn via_compact = parse_compact(to_compact(v));
    CHECK(via_compact.same_knots(v));
  }
  CHECK(to_compact(embed_if_value(r("0.2"), r("0.4"))) == "<0.2|0.4>");
  CHECK(ifn_to_json(embed_if_value(r("0.2"), r("0.4"))).dump() == R"({"ifv":["0.2","0.4"]})");
}
