#include "invbruhat/report.hpp"

#include <json.hpp>

#include <sstream>

#include "invbruhat/bruhat.hpp"
#include "invbruhat/chains.hpp"
#include "invbruhat/elshell.hpp"
#include "invbruhat/incitti.hpp"

namespace invbruhat {

using json = nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "jsonl") return Format::jsonl;
  if (name == "text") return Format::text;
  if (name == "dot") return Format::dot;
  throw Error("unknown format '" + std::string(name) + "' (expected jsonl, text or dot)");
}

ChainQuery parse_chain_query(std::string_view name) {
  if (name == "increasing") return ChainQuery::increasing;
  if (name == "decreasing") return ChainQuery::decreasing;
  if (name == "all") return ChainQuery::all;
  throw Error("unknown chain kind '" + std::string(name) + "' (expected increasing, decreasing or all)");
}

namespace {

void require_not_dot(Format format, const char* command) {
  if (format == Format::dot) throw Error(std::string("--format dot is only available for hasse, not ") + command);
}

std::string line(const json& record) { return record.dump() + "\n"; }

json label_json(const std::optional<RiseLabel>& label) {
  return label ? json(label->to_string()) : json(nullptr);
}

json counts_json(const FixedPointSpec& spec) { return json(spec.counts()); }

std::string dot_quote(const std::string& s) { return "\"" + s + "\""; }

json chain_json(const Chain& chain) {
  json elements = json::array();
  for (const auto& p : chain.elements) elements.push_back(p.word());
  json labels = json::array();
  for (const auto& l : chain.labels) labels.push_back(l.to_string());
  return json{{"length", chain.length()}, {"elements", elements}, {"labels", labels}};
}

std::string chain_text(const Chain& chain) {
  std::ostringstream out;
  out << chain.elements.front().word();
  for (std::size_t t = 0; t < chain.labels.size(); ++t) {
    out << " -" << chain.labels[t].to_string() << "-> " << chain.elements[t + 1].word();
  }
  return out.str();
}

}  // namespace

CommandOutput cmd_enumerate(const FixedPointSpec& spec, Format format) {
  require_not_dot(format, "enumerate");
  const bool graded = is_graded_theorem1(spec);
  std::ostringstream out;
  for (const auto& p : enumerate_class(spec)) {
    const int inv = inversions(p);
    const int exc = exceedances(p);
    const std::optional<int> rank_class = graded ? std::optional<int>(rank_value(p, spec)) : std::nullopt;
    if (format == Format::jsonl) {
      out << line(json{{"word", p.word()},
                       {"n", p.size()},
                       {"fixed_points", fixed_point_count(p)},
                       {"inv", inv},
                       {"exc", exc},
                       {"rank_in", rank_in_In(p)},
                       {"rank_class", rank_class ? json(*rank_class) : json(nullptr)}});
    } else {
      out << p.word() << " fixed_points=" << fixed_point_count(p) << " inv=" << inv << " exc=" << exc
          << " rank_in=" << rank_in_In(p) << " rank_class=" << (rank_class ? std::to_string(*rank_class) : "-")
          << "\n";
    }
  }
  return {out.str(), true};
}

CommandOutput cmd_hasse(const FixedPointSpec& spec, Format format) {
  const PosetView view = labelled_class_view(spec);
  std::ostringstream out;
  switch (format) {
    case Format::dot:
      out << "digraph " << dot_quote(spec.name()) << " {\n";
      out << "  rankdir=BT;\n";
      for (const auto& p : view.elements()) out << "  " << dot_quote(p.word()) << ";\n";
      for (const auto& e : view.edges()) {
        out << "  " << dot_quote(view.element(e.lower).word()) << " -> " << dot_quote(view.element(e.upper).word());
        if (e.label) out << " [label=" << dot_quote(e.label->to_string()) << "]";
        out << ";\n";
      }
      out << "}\n";
      break;
    case Format::jsonl:
      for (const auto& p : view.elements()) {
        out << line(json{{"type", "node"}, {"word", p.word()}, {"fixed_points", fixed_point_count(p)}});
      }
      for (const auto& e : view.edges()) {
        out << line(json{{"type", "edge"},
                         {"from", view.element(e.lower).word()},
                         {"to", view.element(e.upper).word()},
                         {"label", label_json(e.label)}});
      }
      break;
    case Format::text:
      out << spec.name() << ": " << view.size() << " elements, " << view.edges().size() << " covers\n";
      for (const auto& e : view.edges()) {
        out << view.element(e.lower).word() << " < " << view.element(e.upper).word() << "  "
            << (e.label ? e.label->to_string() : "unlabelled") << "\n";
      }
      break;
  }
  return {out.str(), true};
}

CommandOutput cmd_check_graded(const std::vector<FixedPointSpec>& specs, Format format) {
  require_not_dot(format, "check-graded");
  std::ostringstream out;
  int disagreements = 0;
  int rank_failures = 0;
  for (const auto& spec : specs) {
    const PosetView view = class_view(spec);
    const bool predicted = is_graded_theorem1(spec);
    const Grading brute = is_graded_bruteforce(view);
    const bool agree = predicted == brute.graded;
    if (!agree) ++disagreements;

    std::optional<bool> ranks_match;
    std::optional<int> rank;
    if (brute.graded && predicted) {
      bool match = true;
      for (std::size_t x = 0; x < view.size(); ++x) {
        if (rank_value(view.element(x), spec) != (*brute.ranks)[x]) match = false;
      }
      rank = class_rank(spec);
      if (*rank != brute.height) match = false;
      ranks_match = match;
      if (!match) ++rank_failures;
    }
    const auto displayed = displayed_rank_expression(spec);

    if (format == Format::jsonl) {
      out << line(json{{"class", spec.name()},
                       {"n", spec.n()},
                       {"A", counts_json(spec)},
                       {"size", view.size()},
                       {"theorem", predicted},
                       {"bruteforce", brute.graded},
                       {"agree", agree},
                       {"height", brute.height},
                       {"rank_formula_matches", ranks_match ? json(*ranks_match) : json(nullptr)},
                       {"class_rank", rank ? json(*rank) : json(nullptr)},
                       {"displayed_rank_expression", displayed ? json(*displayed) : json(nullptr)}});
    } else {
      out << spec.name() << ": theorem=" << (predicted ? "graded" : "not-graded")
          << " bruteforce=" << (brute.graded ? "graded" : "not-graded") << (agree ? " agree" : " DISAGREE");
      if (rank) out << " rank=" << *rank << (*ranks_match ? " ranks-ok" : " RANKS-MISMATCH");
      out << "\n";
    }
  }
  const bool ok = disagreements == 0 && rank_failures == 0;
  if (format == Format::jsonl) {
    out << line(json{{"command", "check-graded"},
                     {"specs", specs.size()},
                     {"disagreements", disagreements},
                     {"rank_failures", rank_failures},
                     {"status", ok ? "pass" : "fail"}});
  } else {
    out << "checked " << specs.size() << " classes: " << disagreements << " disagreements, " << rank_failures
        << " rank mismatches: " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return {out.str(), ok};
}

CommandOutput cmd_chains(const Permutation& from, const Permutation& to, ChainQuery query, Format format,
                         std::size_t limit) {
  require_not_dot(format, "chains");
  require_involution_interval(from, to);
  std::vector<std::pair<std::string, Chain>> chains;
  bool ok = true;
  switch (query) {
    case ChainQuery::increasing: {
      Chain c = increasing_chain(from, to);
      ok = is_weakly_increasing(c);
      chains.emplace_back("increasing", std::move(c));
      break;
    }
    case ChainQuery::decreasing: {
      Chain c = decreasing_chain(from, to);
      ok = is_strictly_decreasing(c);
      chains.emplace_back("decreasing", std::move(c));
      break;
    }
    case ChainQuery::all: {
      int increasing = 0;
      int decreasing = 0;
      for (auto& c : all_saturated_chains(from, to, limit)) {
        const bool inc = is_weakly_increasing(c);
        const bool dec = is_strictly_decreasing(c);
        increasing += inc ? 1 : 0;
        decreasing += dec ? 1 : 0;
        chains.emplace_back(inc ? "increasing" : dec ? "decreasing" : "other", std::move(c));
      }
      ok = increasing == 1 && decreasing == 1;
      break;
    }
  }

  std::ostringstream out;
  for (const auto& [kind, chain] : chains) {
    if (format == Format::jsonl) {
      json record = chain_json(chain);
      record["kind"] = kind;
      out << line(record);
    } else {
      out << kind << " " << chain.length() << ": " << chain_text(chain) << "\n";
    }
  }
  if (format == Format::jsonl) {
    out << line(json{{"command", "chains"},
                     {"from", from.word()},
                     {"to", to.word()},
                     {"chains", chains.size()},
                     {"status", ok ? "pass" : "fail"}});
  } else {
    out << chains.size() << " chain(s) from " << from.word() << " to " << to.word() << ": "
        << (ok ? "PASS" : "FAIL") << "\n";
  }
  return {out.str(), ok};
}

CommandOutput cmd_el_verify(const FixedPointSpec& spec, std::optional<bool> reversed, Format format) {
  require_not_dot(format, "el-verify");
  const bool use_reversed = reversed.value_or(spec.counts() == std::vector<int>{0});
  const LabelOrder order = use_reversed ? LabelOrder::reversed_lex : LabelOrder::standard_lex;
  const PosetView view = labelled_class_view(spec);

  ElReport report;
  try {
    report = el_check(view, order);
  } catch (const Error& e) {
    report.status = ElStatus::not_applicable;
    report.note = e.what();
  }

  std::ostringstream out;
  if (format == Format::jsonl) {
    for (const auto& v : report.violations) {
      out << line(json{{"bottom", v.bottom.word()}, {"top", v.top.word()}, {"reason", v.reason}});
    }
    out << line(json{{"command", "el-verify"},
                     {"class", spec.name()},
                     {"order", use_reversed ? "reversed-lex" : "standard-lex"},
                     {"intervals", report.intervals_checked},
                     {"violations", report.violations.size()},
                     {"result", to_string(report.status)},
                     {"note", report.note}});
  } else {
    for (const auto& v : report.violations) {
      out << "violation [" << v.bottom.word() << ", " << v.top.word() << "]: " << v.reason << "\n";
    }
    out << spec.name() << " " << (use_reversed ? "reversed-lex" : "standard-lex") << ": "
        << to_string(report.status) << " (" << report.intervals_checked << " intervals, "
        << report.violations.size() << " violations)";
    if (!report.note.empty()) out << " - " << report.note;
    out << "\n";
  }
  return {out.str(), report.status != ElStatus::not_el_labelling};
}

CommandOutput cmd_counterexample(int prop, int n, int i, std::optional<int> m, Format format) {
  require_not_dot(format, "counterexample");
  Witness w = [&] {
    if (prop == 19) return prop19_witness(n, i);
    if (prop == 20) {
      if (!m) throw Error("--m is required for --prop 20");
      return prop20_witness(n, i, *m);
    }
    throw Error("--prop must be 19 or 20");
  }();

  std::ostringstream out;
  const std::pair<const char*, const WitnessChain*> chains[] = {{"long", &w.long_chain}, {"short", &w.short_chain}};
  for (const auto& [name, chain] : chains) {
    if (format == Format::jsonl) {
      json elements = json::array();
      json profile = json::array();
      json labels = json::array();
      for (const auto& p : chain->elements) {
        elements.push_back(p.word());
        profile.push_back(fixed_point_count(p));
      }
      for (const auto& l : chain->labels) labels.push_back(label_json(l));
      out << line(json{{"chain", name},
                       {"length", chain->length()},
                       {"elements", elements},
                       {"fixed_points", profile},
                       {"labels", labels}});
    } else {
      out << name << " chain, length " << chain->length() << ":\n";
      for (std::size_t t = 0; t < chain->elements.size(); ++t) {
        if (t > 0) {
          const auto& l = chain->labels[t - 1];
          out << "    " << (l ? l->to_string() : "(induced)") << "\n";
        }
        out << "  " << chain->elements[t].word() << "  fixed_points=" << fixed_point_count(chain->elements[t])
            << "\n";
      }
    }
  }
  if (format == Format::jsonl) {
    json summary{{"command", "counterexample"}, {"prop", prop}, {"n", n}, {"i", i}};
    if (prop == 20) summary["m"] = *m;
    summary["class"] = w.spec.name();
    summary["bottom"] = w.bottom.word();
    summary["top"] = w.top.word();
    summary["verified"] = w.verified;
    out << line(summary);
  } else {
    out << w.spec.name() << ": " << w.bottom.word() << " to " << w.top.word() << ", chains of length "
        << w.long_chain.length() << " and " << w.short_chain.length() << ", "
        << (w.verified ? "verified" : "NOT VERIFIED") << "\n";
  }
  return {out.str(), w.verified};
}

}  // namespace invbruhat
