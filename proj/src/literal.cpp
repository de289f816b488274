#include "ifnorder/literal.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace ifnorder {

namespace {

using json = nlohmann::json;

// DOM builder that stores floating-point literals as strings so that "0.05"
// in a document becomes exactly 1/20 rather than the nearest double.
class ExactNumberSax {
 public:
  explicit ExactNumberSax(json& root) : dom_(root, true) {}

  bool null() { return dom_.null(); }
  bool boolean(bool v) { return dom_.boolean(v); }
  bool number_integer(json::number_integer_t v) { return dom_.number_integer(v); }
  bool number_unsigned(json::number_unsigned_t v) { return dom_.number_unsigned(v); }
  bool number_float(json::number_float_t, const json::string_t& text) {
    json::string_t copy = text;
    return dom_.string(copy);
  }
  bool string(json::string_t& v) { return dom_.string(v); }
  bool binary(json::binary_t& v) { return dom_.binary(v); }
  bool start_object(std::size_t n) { return dom_.start_object(n); }
  bool key(json::string_t& k) { return dom_.key(k); }
  bool end_object() { return dom_.end_object(); }
  bool start_array(std::size_t n) { return dom_.start_array(n); }
  bool end_array() { return dom_.end_array(); }
  template <class Exception>
  bool parse_error(std::size_t pos, const std::string& token, const Exception& ex) {
    return dom_.parse_error(pos, token, ex);
  }

 private:
  nlohmann::detail::json_sax_dom_parser<json> dom_;
};

std::vector<Rational> scalars(const json& array, std::size_t expected, const char* what) {
  if (!array.is_array() || array.size() != expected)
    throw ParseError(std::string(what) + " must be an array of " + std::to_string(expected) +
                     " numbers");
  std::vector<Rational> out;
  out.reserve(expected);
  for (const auto& v : array) out.push_back(scalar_from_json(v));
  return out;
}

Interval interval_from_json(const json& v) {
  if (v.is_array()) {
    auto ends = scalars(v, 2, "interval");
    return {ends[0], ends[1]};
  }
  Rational p = scalar_from_json(v);
  return {p, p};
}

json exact(const Rational& r) { return r.str(); }

std::vector<Rational> compact_side(std::string_view side) {
  std::vector<Rational> out;
  std::istringstream is{std::string(side)};
  std::string token;
  while (is >> token) out.push_back(Rational::parse(token));
  return out;
}

TrapFN side_to_trapezoid(const std::vector<Rational>& k) {
  switch (k.size()) {
    case 1: return TrapFN::point(k[0]);
    case 2: return TrapFN::interval(k[0], k[1]);
    case 3: return TrapFN::triangle(k[0], k[1], k[2]);
    case 4: return TrapFN(k[0], k[1], k[2], k[3]);
    default: throw ParseError("compact literal side needs 1 to 4 knots");
  }
}

std::string side_to_compact(const TrapFN& t) {
  if (t.is_point()) return t.q1().str();
  if (t.is_flat()) return t.q1().str() + " " + t.q4().str();
  if (t.is_triangular()) return t.q1().str() + " " + t.q2().str() + " " + t.q4().str();
  return t.q1().str() + " " + t.q2().str() + " " + t.q3().str() + " " + t.q4().str();
}

}  // namespace

json parse_json_exact(std::string_view text) {
  json root;
  ExactNumberSax sax(root);
  try {
    json::sax_parse(text.begin(), text.end(), &sax);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return root;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_exact(buf.str());
}

Rational scalar_from_json(const json& value) {
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  // Only reachable for documents built in code rather than parsed exactly.
  if (value.is_number_float()) return Rational::parse(value.dump());
  throw ParseError("expected a number, got " + value.dump());
}

Ifn ifn_from_json(const json& literal, Strictness strictness) {
  if (!literal.is_object()) throw ParseError("IFN literal must be a JSON object");

  if (literal.contains("mu") || literal.contains("nu")) {
    if (!literal.contains("mu") || !literal.contains("nu"))
      throw ParseError("IFN literal needs both \"mu\" and \"nu\"");
    auto mu = scalars(literal.at("mu"), 4, "\"mu\"");
    auto nu = scalars(literal.at("nu"), 4, "\"nu\"");
    return make_trapezoidal({mu[0], mu[1], mu[2], mu[3]}, {nu[0], nu[1], nu[2], nu[3]},
                            strictness);
  }
  if (literal.contains("ifv")) {
    auto v = scalars(literal.at("ifv"), 2, "\"ifv\"");
    return embed_if_value(v[0], v[1], strictness);
  }
  if (literal.contains("ivif")) {
    const json& v = literal.at("ivif");
    if (!v.is_array() || v.size() != 2) throw ParseError("\"ivif\" must hold two intervals");
    return embed_ivif(interval_from_json(v[0]), interval_from_json(v[1]), strictness);
  }
  if (literal.contains("tri")) {
    const json& v = literal.at("tri");
    if (!v.is_array() || v.size() != 2) throw ParseError("\"tri\" must hold two triples");
    auto mu = scalars(v[0], 3, "triangle");
    auto nu = scalars(v[1], 3, "triangle");
    return embed_triangular({mu[0], mu[1], mu[2]}, {nu[0], nu[1], nu[2]}, strictness);
  }
  throw ParseError("unrecognised IFN literal: " + literal.dump());
}

json ifn_to_json(const Ifn& ifn) {
  const TrapFN& m = ifn.mu();
  const TrapFN& n = ifn.nu();
  switch (ifn.kind()) {
    case IfnKind::IFValue:
      return {{"ifv", json::array({exact(m.q1()), exact(n.q1())})}};
    case IfnKind::IVIF:
      return {{"ivif", json::array({json::array({exact(m.q1()), exact(m.q4())}),
                                    json::array({exact(n.q1()), exact(n.q4())})})}};
    case IfnKind::Triangular:
      return {{"tri",
               {{exact(m.q1()), exact(m.q2()), exact(m.q4())},
                {exact(n.q1()), exact(n.q2()), exact(n.q4())}}}};
    case IfnKind::Trapezoidal:
      break;
  }
  return {{"mu", {exact(m.q1()), exact(m.q2()), exact(m.q3()), exact(m.q4())}},
          {"nu", {exact(n.q1()), exact(n.q2()), exact(n.q3()), exact(n.q4())}}};
}

Ifn parse_compact(std::string_view text, Strictness strictness) {
  std::string s(text);
  for (const char* open : {"⟨", "<"}) {
    if (auto p = s.find(open); p != std::string::npos) s.erase(p, std::string_view(open).size());
  }
  for (const char* close : {"⟩", ">"}) {
    if (auto p = s.rfind(close); p != std::string::npos) s.erase(p, std::string_view(close).size());
  }
  auto bar = s.find('|');
  if (bar == std::string::npos || s.find('|', bar + 1) != std::string::npos)
    throw ParseError("compact literal must look like <mu knots|nu knots>: '" + std::string(text) +
                     "'");
  TrapFN mu = side_to_trapezoid(compact_side(std::string_view(s).substr(0, bar)));
  TrapFN nu = side_to_trapezoid(compact_side(std::string_view(s).substr(bar + 1)));
  const IfnKind kind = infer_kind(mu, nu);
  return Ifn(std::move(mu), std::move(nu), kind, strictness);
}

std::string to_compact(const Ifn& ifn) {
  return "<" + side_to_compact(ifn.mu()) + "|" + side_to_compact(ifn.nu()) + ">";
}

}  // namespace ifnorder
