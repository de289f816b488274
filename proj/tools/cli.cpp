#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ifnorder/cuts.hpp"
#include "ifnorder/decision.hpp"
#include "ifnorder/errata.hpp"
#include "ifnorder/legacy.hpp"
#include "ifnorder/literal.hpp"
#include "ifnorder/output.hpp"
#include "ifnorder/scores.hpp"
#include "ifnorder/total_order.hpp"

namespace ifnorder::cli {

namespace {

using json = nlohmann::json;

struct Globals {
  std::string seq = "distinct";
  std::uint64_t depth = kDefaultDepth;
  int prec = 6;
  std::string format = "json";
  bool lenient = false;

  OutputSpec output() const {
    if (prec < 0) throw DomainError("--prec must be nonnegative");
    return OutputSpec{prec, parse_format(format)};
  }
  Strictness strictness() const { return lenient ? Strictness::Lenient : Strictness::Strict; }
  DenseSequence sequence() const { return DenseSequence::from_flag(seq); }
};

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool looks_inline(const std::string& s) {
  return !s.empty() && (s.front() == '{' || s.front() == '[' || s.front() == '<' || s.rfind("\xE2\x9F\xA8", 0) == 0);
}

/// An argument is either an inline literal or the path of a file holding one.
std::string load_text(const std::string& arg) {
  const std::string t = trim(arg);
  if (looks_inline(t)) return t;
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot open '" + arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return trim(ss.str());
}

Ifn parse_value(const std::string& text, Strictness strictness) {
  if (!text.empty() && text.front() != '{') return parse_compact(text, strictness);
  return ifn_from_json(parse_json_exact(text), strictness);
}

std::vector<Ifn> parse_list(const std::string& text, Strictness strictness) {
  std::vector<Ifn> items;
  if (!text.empty() && text.front() == '[') {
    for (const auto& lit : parse_json_exact(text)) items.push_back(ifn_from_json(lit, strictness));
    return items;
  }
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    items.push_back(parse_value(line, strictness));
  }
  return items;
}

void emit(std::ostream& out, const OutputSpec& spec, const json& doc, const TextRow& header,
          const std::vector<TextRow>& rows) {
  switch (spec.format) {
    case Format::Json: out << doc.dump(2) << '\n'; break;
    case Format::Table: out << render_table(header, rows); break;
    case Format::Csv: out << render_csv(header, rows); break;
  }
}

// compare ------------------------------------------------------------------

struct CompareArgs {
  std::string a;
  std::string b;
};

void cmd_compare(const Globals& g, const CompareArgs& args, std::ostream& out) {
  const OutputSpec spec = g.output();
  const Ifn a = parse_value(load_text(args.a), g.strictness());
  const Ifn b = parse_value(load_text(args.b), g.strictness());
  const Verdict v = compare(a, b, g.sequence(), g.depth);

  json doc{{"verdict", std::string(to_string(v.relation))}, {"depth", v.depth}};
  TextRow row{std::string(to_string(v.relation)), "", "", "", v.certified ? "yes" : "no", std::to_string(v.depth)};
  if (v.decided()) {
    doc["j"] = v.j;
    doc["cj_a"] = spec.render(*v.value_a);
    doc["cj_b"] = spec.render(*v.value_b);
    row[1] = std::to_string(v.j);
    row[2] = spec.render(*v.value_a);
    row[3] = spec.render(*v.value_b);
  } else {
    doc["certified"] = v.certified;
  }
  emit(out, spec, doc, {"verdict", "j", "cj_a", "cj_b", "certified", "depth"}, {row});
}

// sort ---------------------------------------------------------------------

void cmd_sort(const Globals& g, const std::string& list, std::ostream& out) {
  const OutputSpec spec = g.output();
  const std::vector<Ifn> items = parse_list(load_text(list), g.strictness());
  const std::vector<TieGroup> groups = sort(items, g.sequence(), g.depth);

  json doc = json::array();
  std::vector<TextRow> rows;
  for (std::size_t r = 0; r < groups.size(); ++r) {
    json members = json::array();
    for (std::size_t idx : groups[r].members) {
      members.push_back({{"index", idx}, {"value", ifn_to_json(items[idx])}});
      rows.push_back({std::to_string(r + 1), std::to_string(idx), to_compact(items[idx]),
                      groups[r].members.size() > 1 ? (groups[r].indistinguishable ? "indistinguishable" : "tie") : ""});
    }
    doc.push_back({{"rank", r + 1}, {"members", members}, {"indistinguishable", groups[r].indistinguishable}});
  }
  emit(out, spec, doc, {"rank", "index", "value", "group"}, rows);
}

// scores -------------------------------------------------------------------

struct ScoresArgs {
  std::vector<std::string> values;
  std::string method = "all";
  std::uint64_t pairs = 1;
  std::string delta = "1/2";
  std::string zw_alpha = "1/2";
  std::string zw_beta = "1/2";
};

void cmd_scores(const Globals& g, const ScoresArgs& args, std::ostream& out) {
  const OutputSpec spec = g.output();
  const DenseSequence seq = g.sequence();
  if (args.pairs == 0) throw DomainError("--pairs must be at least 1");

  std::vector<LegacyTag> tags;
  const bool all = args.method == "all";
  if (all) tags = all_legacy_tags();
  else if (args.method != "c") tags.push_back(parse_legacy_tag(args.method));

  json doc = json::array();
  std::vector<TextRow> rows;
  for (const auto& arg : args.values) {
    const Ifn v = parse_value(load_text(arg), g.strictness());
    const std::string name = to_compact(v);
    json entry{{"value", ifn_to_json(v)}, {"kind", std::string(to_string(v.kind()))}};

    json cvals = json::object();
    for (std::uint64_t j = 1; j <= 4 * args.pairs; ++j) {
      const Rational c = c_value(v, seq, j);
      cvals["C" + std::to_string(j)] = spec.render(c);
      rows.push_back({name, "C" + std::to_string(j), spec.render(c), ""});
    }
    entry["c"] = cvals;

    json legacy = json::object();
    for (LegacyTag tag : tags) {
      LegacyMethod m = LegacyMethod::of(tag);
      m.delta = Rational::parse(args.delta);
      m.zw_alpha = Rational::parse(args.zw_alpha);
      m.zw_beta = Rational::parse(args.zw_beta);
      try {
        const LegacyScore s = legacy_score(m, v);
        json item{{"value", spec.render(s.value)}};
        std::string note;
        if (s.companion) item["companion"] = spec.render(*s.companion);
        if (s.squared) {
          item["squared"] = true;
          note = "squared; companion " + spec.render(*s.companion);
        }
        legacy[std::string(to_string(tag))] = item;
        rows.push_back({name, std::string(to_string(tag)), spec.render(s.value), note});
      } catch (const KindMismatch&) {
        if (!all) throw;
      }
    }
    if (!tags.empty()) entry["legacy"] = legacy;
    doc.push_back(entry);
  }
  emit(out, spec, doc, {"value", "score", "result", "note"}, rows);
}

// cuts ---------------------------------------------------------------------

struct CutsArgs {
  std::string value;
  std::string alpha = "1";
  std::string beta;
  bool strong = false;
};

json side_json(const CutInterval& side, const OutputSpec& spec) {
  return {{"lo", spec.render(side.bounds.lo)},
          {"hi", spec.render(side.bounds.hi)},
          {"lo_open", side.lo_open},
          {"hi_open", side.hi_open}};
}

std::string side_text(const CutInterval& side, const OutputSpec& spec) {
  return std::string(side.lo_open ? "(" : "[") + spec.render(side.bounds.lo) + ", " + spec.render(side.bounds.hi) +
         (side.hi_open ? ")" : "]");
}

json range_json(const LevelRange& r, const OutputSpec& spec) {
  if (r.discrete) {
    json set = json::array();
    set.push_back(spec.render(r.range.lo));
    if (r.range.lo != r.range.hi) set.push_back(spec.render(r.range.hi));
    return {{"values", set}};
  }
  return {{"lo", spec.render(r.range.lo)}, {"hi", spec.render(r.range.hi)}};
}

void cmd_cuts(const Globals& g, const CutsArgs& args, std::ostream& out) {
  const OutputSpec spec = g.output();
  const Ifn v = parse_value(load_text(args.value), g.strictness());
  const Rational alpha = Rational::parse(args.alpha);
  const Rational beta = args.beta.empty() ? alpha : Rational::parse(args.beta);
  const CutRect rect = args.strong ? strong_cut(v, alpha, beta) : cut(v, alpha, beta);
  const ScoreQuad q = score_quad(rect);
  const LevelRanges ranges = level_range(v);

  json doc{{"alpha", spec.render(alpha)},
           {"beta", spec.render(beta)},
           {"strong", rect.strong},
           {"mu", side_json(rect.mu, spec)},
           {"nu", side_json(rect.nu, spec)},
           {"quad", {{"c1", spec.render(q.c1)}, {"c2", spec.render(q.c2)}, {"c3", spec.render(q.c3)},
                     {"c4", spec.render(q.c4)}}},
           {"level_range", {{"mu", range_json(ranges.mu, spec)}, {"nu", range_json(ranges.nu, spec)}}}};
  emit(out, spec, doc, {"side", "cut"}, {{"mu", side_text(rect.mu, spec)}, {"nu", side_text(rect.nu, spec)}});
}

// decide -------------------------------------------------------------------

struct DecideArgs {
  std::string system;
  bool normalize = false;
  bool audit = false;
  bool errata = false;
};

json matrix_json(const Matrix& m, const OutputSpec& spec) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& v : r) row.push_back(spec.render(v));
    rows.push_back(row);
  }
  return rows;
}

json audit_json(const WeightedInfoSystem& sys, const DominanceReport& report, const OutputSpec& spec) {
  json trail = json::array();
  for (const auto& p : report.audit) {
    json cells = json::array();
    for (const auto& c : p.sets.comparisons) {
      json cell{{"attribute", sys.attributes[c.attribute].id},
                {"verdict", std::string(to_string(c.verdict.relation))}};
      if (c.verdict.decided()) {
        cell["j"] = c.verdict.j;
        cell["cj_x"] = spec.render(*c.verdict.value_a);
        cell["cj_y"] = spec.render(*c.verdict.value_b);
      }
      cells.push_back(cell);
    }
    json better = json::array();
    json ties = json::array();
    for (auto a : p.sets.better) better.push_back(sys.attributes[a].id);
    for (auto a : p.sets.ties) ties.push_back(sys.attributes[a].id);
    trail.push_back({{"x", sys.alternatives[p.x]},
                     {"y", sys.alternatives[p.y]},
                     {"better", better},
                     {"ties", ties},
                     {"comparisons", cells}});
  }
  return trail;
}

void cmd_decide(const Globals& g, const DecideArgs& args, std::ostream& out) {
  const OutputSpec spec = g.output();
  const DenseSequence seq = g.sequence();
  LoadOptions opts;
  opts.weights = args.normalize ? WeightPolicy::Normalize : WeightPolicy::Exact;
  opts.strictness = g.strictness();
  const std::filesystem::path path(args.system);
  const WeightedInfoSystem sys = load_system_file(path, opts);
  const DominanceReport report = run_algorithm(sys, seq, g.depth);

  json doc;
  doc["alternatives"] = sys.alternatives;
  doc["wr"] = matrix_json(report.wr, spec);
  json degrees = json::object();
  for (std::size_t x = 0; x < sys.alternatives.size(); ++x) degrees[sys.alternatives[x]] = spec.render(report.degrees[x]);
  doc["degrees"] = degrees;
  json ranking = json::array();
  for (const auto& r : report.ranking)
    ranking.push_back({{"id", sys.alternatives[r.alternative]}, {"degree", spec.render(r.degree)}, {"tied", r.tied}});
  doc["ranking"] = ranking;
  doc["notes"] = report.notes;
  if (args.audit) doc["audit"] = audit_json(sys, report, spec);

  std::optional<ErrataReport> errata;
  if (args.errata) {
    if (sys.fixture == kReferenceFixture) {
      const ReferenceData ref = load_reference(path.parent_path());
      errata = audit_reference(ref, seq, report, spec);
      doc["errata"] = errata->to_json();
    } else {
      doc["errata"] = json{{"note", "no reference tables accompany this system"}};
    }
  }

  if (spec.format == Format::Json) {
    out << doc.dump(2) << '\n';
    return;
  }
  TextRow header{"rank", "alternative", "degree", "tied"};
  std::vector<TextRow> rows;
  for (std::size_t k = 0; k < report.ranking.size(); ++k) {
    const auto& r = report.ranking[k];
    rows.push_back({std::to_string(k + 1), sys.alternatives[r.alternative], spec.render(r.degree), r.tied ? "yes" : ""});
  }
  if (spec.format == Format::Csv) {
    out << render_csv(header, rows);
    return;
  }
  TextRow mheader{"WR(x,y)"};
  for (const auto& id : sys.alternatives) mheader.push_back(id);
  std::vector<TextRow> mrows;
  for (std::size_t x = 0; x < sys.alternatives.size(); ++x) {
    TextRow row{sys.alternatives[x]};
    for (const auto& v : report.wr[x]) row.push_back(spec.render(v));
    mrows.push_back(row);
  }
  out << render_table(mheader, mrows) << '\n' << render_table(header, rows);
  for (const auto& n : report.notes) out << "note: " << n << '\n';
  if (errata) {
    out << "\nerrata (" << errata->entries.size() << " of " << errata->checked << " printed values differ)\n";
    std::vector<TextRow> erows;
    for (const auto& e : errata->entries) erows.push_back({e.id, e.printed, e.recomputed, e.known ? "known" : "new"});
    out << render_table({"id", "printed", "recomputed", "status"}, erows);
  }
}

// emit-curve ---------------------------------------------------------------

struct CurveArgs {
  std::string value;
  std::string step = "1/16";
};

void cmd_emit_curve(const Globals& g, const CurveArgs& args, std::ostream& out, bool format_given) {
  OutputSpec spec = g.output();
  if (!format_given) spec.format = Format::Csv;
  const Ifn v = parse_value(load_text(args.value), g.strictness());
  const Rational step = Rational::parse(args.step);
  if (step.sign() <= 0 || step > Rational(1)) throw DomainError("--step must lie in (0,1]");

  std::set<Rational> xs;
  for (const auto& k : v.mu().knots()) xs.insert(k);
  for (const auto& k : v.nu().knots()) xs.insert(k);
  for (Rational x(0); x <= Rational(1); x += step) xs.insert(x);
  xs.insert(Rational(1));

  std::vector<std::string> flags;
  if (v.mu().is_point()) flags.push_back("mu is a zero-width spike at " + v.mu().q1().str());
  if (v.nu().is_point()) flags.push_back("nu is a zero-width spike at " + v.nu().q1().str());

  json rows_json = json::array();
  std::vector<TextRow> rows;
  for (const auto& x : xs) {
    const std::string mu = membership_at(v, x).str();
    const std::string nu = nonmembership_at(v, x).str();
    rows_json.push_back({{"x", x.str()}, {"mu", mu}, {"nu", nu}});
    rows.push_back({x.str(), mu, nu});
  }
  if (spec.format == Format::Json) {
    out << json{{"points", rows_json}, {"flags", flags}}.dump(2) << '\n';
    return;
  }
  for (const auto& f : flags) out << "# " << f << '\n';
  out << (spec.format == Format::Csv ? render_csv({"x", "mu", "nu"}, rows) : render_table({"x", "mu", "nu"}, rows));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact total ordering and dominance ranking of trapezoidal intuitionistic fuzzy numbers"};
  app.name("ifnorder");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seq", g.seq, "Level sequence: distinct, repeats or file:<path>")->capture_default_str();
  app.add_option("--depth", g.depth, "Maximum level pairs scanned per comparison")->capture_default_str();
  app.add_option("--prec", g.prec, "Decimal places in output (half-even rounding)")->capture_default_str();
  auto* format_opt = app.add_option("--format", g.format, "Output format: json, table or csv")->capture_default_str();
  app.add_flag("--lenient", g.lenient, "Accept values that fail the validity checks");

  CompareArgs compare_args;
  auto* compare_cmd = app.add_subcommand("compare", "Compare two values in the total order");
  compare_cmd->add_option("a", compare_args.a, "Literal or file")->required();
  compare_cmd->add_option("b", compare_args.b, "Literal or file")->required();

  std::string sort_list;
  auto* sort_cmd = app.add_subcommand("sort", "Sort values ascending with tie groups");
  sort_cmd->add_option("list", sort_list, "JSON array or one compact literal per line (literal or file)")->required();

  ScoresArgs scores_args;
  auto* scores_cmd = app.add_subcommand("scores", "Score stream and comparison-bench scores");
  scores_cmd->add_option("values", scores_args.values, "Literals or files")->required();
  scores_cmd->add_option("--method", scores_args.method, "all, c, or one bench method name")->capture_default_str();
  scores_cmd->add_option("--pairs", scores_args.pairs, "Level pairs of C values to print")->capture_default_str();
  scores_cmd->add_option("--delta", scores_args.delta, "Lakshmana-Geetha delta")->capture_default_str();
  scores_cmd->add_option("--zw-alpha", scores_args.zw_alpha, "Zhou-Wu alpha")->capture_default_str();
  scores_cmd->add_option("--zw-beta", scores_args.zw_beta, "Zhou-Wu beta")->capture_default_str();

  CutsArgs cuts_args;
  auto* cuts_cmd = app.add_subcommand("cuts", "Alpha-beta cut of a value");
  cuts_cmd->add_option("value", cuts_args.value, "Literal or file")->required();
  cuts_cmd->add_option("--alpha", cuts_args.alpha, "Membership level")->capture_default_str();
  cuts_cmd->add_option("--beta", cuts_args.beta, "Non-membership level (defaults to alpha)");
  cuts_cmd->add_flag("--strong", cuts_args.strong, "Strong cut, levels in [0,1)");

  DecideArgs decide_args;
  auto* decide_cmd = app.add_subcommand("decide", "Weighted dominance ranking of a decision system");
  decide_cmd->add_option("system", decide_args.system, "System document (.json or .csv)")->required();
  decide_cmd->add_flag("--normalize", decide_args.normalize, "Rescale weights to sum to 1");
  decide_cmd->add_flag("--audit", decide_args.audit, "Include per-pair comparison trail");
  decide_cmd->add_flag("--errata", decide_args.errata, "Audit printed reference values when available");

  CurveArgs curve_args;
  auto* curve_cmd = app.add_subcommand("emit-curve", "Membership and non-membership polylines");
  curve_cmd->add_option("value", curve_args.value, "Literal or file")->required();
  curve_cmd->add_option("--step", curve_args.step, "Uniform grid step in (0,1]")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (compare_cmd->parsed()) cmd_compare(g, compare_args, out);
    else if (sort_cmd->parsed()) cmd_sort(g, sort_list, out);
    else if (scores_cmd->parsed()) cmd_scores(g, scores_args, out);
    else if (cuts_cmd->parsed()) cmd_cuts(g, cuts_args, out);
    else if (decide_cmd->parsed()) cmd_decide(g, decide_args, out);
    else if (curve_cmd->parsed()) cmd_emit_curve(g, curve_args, out, format_opt->count() > 0);
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const LegConditionError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const Error& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace ifnorder::cli
