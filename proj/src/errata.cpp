#include "ifnorder/errata.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ifnorder/legacy.hpp"
#include "ifnorder/literal.hpp"
#include "ifnorder/scores.hpp"

namespace ifnorder {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

std::vector<std::vector<std::string>> read_csv_rows(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::istringstream is(line);
    std::string f;
    while (std::getline(is, f, ',')) fields.push_back(f);
    rows.push_back(std::move(fields));
  }
  if (rows.empty()) throw ParseError(path.string() + " is empty");
  rows.erase(rows.begin());  // header
  return rows;
}

// Levels 1/2, 1, then the default sequence from its third term on.
std::vector<Rational> half_first_levels(std::size_t count) {
  std::vector<Rational> levels{Rational(1, 2), Rational(1)};
  for (std::uint64_t i = 3; levels.size() < count; ++i) levels.push_back(distinct_term(i));
  return levels;
}

std::string describe_verdict(const Verdict& v, const OutputSpec& out) {
  std::string s(to_string(v.relation));
  if (v.decided())
    s += " at C" + std::to_string(v.j) + " (" + out.render(*v.value_a) + " vs " + out.render(*v.value_b) + ")";
  return s;
}

std::string pair_breakdown(const WeightedInfoSystem& sys, const BetterSets& sets, const OutputSpec& out) {
  std::string s;
  for (const auto& c : sets.comparisons) {
    if (!s.empty()) s += "; ";
    s += sys.attributes[c.attribute].id + " " + describe_verdict(c.verdict, out);
  }
  return s;
}

struct ClaimAuditor {
  const DenseSequence& seq;
  const OutputSpec& out;
  ErrataReport& report;

  void add(const std::string& id, std::string printed, std::string recomputed, std::string detail) {
    report.entries.push_back({id, std::move(printed), std::move(recomputed), std::move(detail), false});
  }

  void c_claim(const std::string& id, const json& claim) {
    const Ifn v = ifn_from_json(claim.at("value"));
    const auto j = claim.at("j").get<std::uint64_t>();
    const std::string printed = claim.at("printed").get<std::string>();
    const Rational r = c_value(v, seq, j);
    if (!within_printed(r, printed)) add(id, printed, out.render(r), "C" + std::to_string(j) + " of " + to_compact(v));
  }

  void compare_claim(const std::string& id, const json& claim) {
    const Ifn a = ifn_from_json(claim.at("a"));
    const Ifn b = ifn_from_json(claim.at("b"));
    const std::string printed = claim.at("printed").get<std::string>();
    const Verdict v = compare(a, b, seq);
    bool ok = to_string(v.relation) == printed;
    std::string printed_text = printed;
    if (claim.contains("j")) {
      const auto j = claim.at("j").get<std::uint64_t>();
      printed_text += " at C" + std::to_string(j);
      ok = ok && v.j == j;
    }
    if (!ok) add(id, printed_text, describe_verdict(v, out), to_compact(a) + " against " + to_compact(b));
  }

  void tie_claim(const std::string& id, const json& claim) {
    const Ifn a = ifn_from_json(claim.at("a"));
    const Ifn b = ifn_from_json(claim.at("b"));
    const LegacyMethod method = LegacyMethod::of(parse_legacy_tag(claim.at("method").get<std::string>()));
    const LegacyScore sa = legacy_score(method, a);
    const LegacyScore sb = legacy_score(method, b);
    bool ok = sa.value == sb.value;
    std::string printed = "tie";
    if (claim.contains("printed")) {
      printed = claim.at("printed").get<std::string>();
      ok = ok && within_printed(sa.value, printed) && within_printed(sb.value, printed);
    }
    if (!ok) {
      std::string detail = std::string(to_string(method.tag)) + " of " + to_compact(a) + " and " + to_compact(b);
      if (sa.squared) detail += ", squared closeness";
      add(id, printed, out.render(sa.value) + " and " + out.render(sb.value), detail);
    }
  }

  void triangular_claim(const std::string& id, const json& claim) {
    const Ifn v = ifn_from_json(claim.at("value"));
    const std::string field = claim.at("field").get<std::string>();
    const std::string printed = claim.at("printed").get<std::string>();
    const TriangularScores s = triangular_scores(v);
    const std::map<std::string, const Rational*> fields{
        {"left", &s.left}, {"right", &s.right}, {"t", &s.t},   {"nl", &s.nl},
        {"nr", &s.nr},     {"nt", &s.nt},       {"ntc", &s.ntc}};
    auto it = fields.find(field);
    if (it == fields.end()) throw ParseError("unknown triangular score field '" + field + "'");
    if (!within_printed(*it->second, printed)) add(id, printed, out.render(*it->second), field + " of " + to_compact(v));
  }

  void run(const json& claims) {
    if (!claims.is_array()) throw ParseError("claims must be an array");
    for (const auto& claim : claims) {
      const std::string id = claim.at("id").get<std::string>();
      const std::string kind = claim.at("kind").get<std::string>();
      ++report.checked;
      try {
        if (kind == "c") c_claim(id, claim);
        else if (kind == "compare") compare_claim(id, claim);
        else if (kind == "legacy-tie") tie_claim(id, claim);
        else if (kind == "triangular") triangular_claim(id, claim);
        else throw ParseError("unknown claim kind '" + kind + "'");
      } catch (const Error& e) {
        add(id, claim.value("printed", ""), "", std::string("evaluation failed: ") + e.what());
      }
    }
  }
};

void settle_known(ErrataReport& report, const std::map<std::string, std::string>& known) {
  for (auto& e : report.entries) {
    auto it = known.find(e.id);
    if (it == known.end()) continue;
    e.known = true;
    if (e.detail.empty()) e.detail = it->second;
    else e.detail += ". " + it->second;
  }
  for (const auto& [id, note] : known)
    if (!report.find(id)) report.unreproduced.push_back(id);
}

}  // namespace

ReferenceData load_reference(const fs::path& dir) {
  ReferenceData ref;
  ref.system = load_system_file(dir / "table2.json");
  for (const char* name : {"table3.expected.csv", "table4.expected.csv"}) {
    for (const auto& row : read_csv_rows(dir / name)) {
      if (row.size() != 4) throw ParseError(std::string(name) + ": expected 4 fields per row");
      ref.scores.push_back({row[0], row[1], std::stoull(row[2]), row[3]});
    }
  }
  for (auto& row : read_csv_rows(dir / "table5.expected.csv")) {
    row.erase(row.begin());
    ref.wr.push_back(std::move(row));
  }
  for (const auto& row : read_csv_rows(dir / "table6.expected.csv")) ref.degrees.push_back(row.at(1));
  if (ref.wr.size() != ref.system.alternatives.size() || ref.degrees.size() != ref.system.alternatives.size())
    throw ParseError("reference tables do not match the system's alternatives");

  ref.claims = read_json_file(dir / "worked_examples.json").at("claims");
  const json errata = read_json_file(dir / "errata.json");
  for (const auto& k : errata.at("known")) ref.known[k.at("id").get<std::string>()] = k.at("note").get<std::string>();
  return ref;
}

int printed_places(std::string_view printed) {
  const auto dot = printed.find('.');
  return dot == std::string_view::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
}

bool within_printed(const Rational& value, std::string_view printed) {
  const Rational p = Rational::parse(printed);
  std::int64_t scale = 2;
  for (int k = 0; k < printed_places(printed); ++k) scale *= 10;
  return abs(value - p) <= Rational(1, scale);
}

const Erratum* ErrataReport::find(std::string_view id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

json ErrataReport::to_json() const {
  json j;
  j["checked"] = checked;
  json list = json::array();
  for (const auto& e : entries)
    list.push_back({{"id", e.id}, {"printed", e.printed}, {"recomputed", e.recomputed}, {"detail", e.detail},
                    {"known", e.known}});
  j["entries"] = list;
  j["unreproduced"] = unreproduced;
  return j;
}

Matrix replay_wr(const WeightedInfoSystem& sys, std::span<const Rational> levels) {
  const std::size_t n = sys.alternatives.size();
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t a = 0; a < sys.attributes.size(); ++a) {
        int sign = 0;
        for (const auto& lv : levels) {
          const ScoreQuad qx = level_quad(sys.cell(x, a), {lv, lv});
          const ScoreQuad qy = level_quad(sys.cell(y, a), {lv, lv});
          for (int r = 1; r <= 4 && sign == 0; ++r)
            if (qx[r] != qy[r]) sign = qx[r] < qy[r] ? -1 : 1;
          if (sign != 0) break;
        }
        const Rational& w = sys.attributes[a].weight;
        if (sign > 0) m[x][y] += w;
        else if (sign == 0) m[x][y] += w / 2;
      }
    }
  }
  return m;
}

std::vector<Rational> printed_row_means(const std::vector<std::vector<std::string>>& matrix) {
  Matrix exact;
  for (const auto& row : matrix) {
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(Rational::parse(v));
    exact.push_back(std::move(r));
  }
  return dominance_degrees(exact);
}

ErrataReport audit_claims(const json& claims, const std::map<std::string, std::string>& known,
                          const DenseSequence& seq, const OutputSpec& out) {
  ErrataReport report;
  ClaimAuditor{seq, out, report}.run(claims);
  settle_known(report, known);
  return report;
}

ErrataReport audit_reference(const ReferenceData& ref, const DenseSequence& seq, const DominanceReport& dom,
                             const OutputSpec& out) {
  const WeightedInfoSystem& sys = ref.system;
  ErrataReport report;

  // Score tables are printed at the levels of the default sequence whatever
  // sequence drives the ranking.
  const DenseSequence levels = DenseSequence::distinct();
  for (const auto& s : ref.scores) {
    ++report.checked;
    const Ifn& cell = sys.cell(sys.alternative_index(s.alternative), sys.attribute_index(s.attribute));
    const Rational r = c_value(cell, levels, s.j);
    if (!within_printed(r, s.printed))
      report.entries.push_back({"score:" + s.alternative + ":" + s.attribute + ":C" + std::to_string(s.j), s.printed,
                                out.render(r), "cell " + to_compact(cell), false});
  }

  const std::vector<Rational> replay_levels = half_first_levels(12);
  const Matrix replay = replay_wr(sys, replay_levels);
  const std::size_t n = sys.alternatives.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      ++report.checked;
      const std::string& printed = ref.wr[x].at(y);
      if (within_printed(dom.wr[x][y], printed)) continue;
      std::string detail;
      for (const auto& p : dom.audit)
        if (p.x == x && p.y == y) detail = pair_breakdown(sys, p.sets, out);
      detail += ". Scanning level 1/2 before level 1 gives " + out.render(replay[x][y]);
      report.entries.push_back({"wr:" + sys.alternatives[x] + ":" + sys.alternatives[y], printed,
                                out.render(dom.wr[x][y]), detail, false});
    }
  }

  const std::vector<Rational> from_printed = printed_row_means(ref.wr);
  for (std::size_t x = 0; x < n; ++x) {
    report.checked += 2;
    const std::string& printed = ref.degrees[x];
    if (!within_printed(from_printed[x], printed))
      report.entries.push_back({"degree-from-printed:" + sys.alternatives[x], printed, out.render(from_printed[x]),
                                "row mean of the printed WR matrix", false});
    if (!within_printed(dom.degrees[x], printed))
      report.entries.push_back({"degree:" + sys.alternatives[x], printed, out.render(dom.degrees[x]),
                                "row mean of the recomputed WR matrix", false});
  }

  ErrataReport claims = audit_claims(ref.claims, {}, seq, out);
  report.checked += claims.checked;
  for (auto& e : claims.entries) report.entries.push_back(std::move(e));
  settle_known(report, ref.known);
  return report;
}

}  // namespace ifnorder
