// matlog: command-line front end.
//
// Exit codes: 0 success, 1 a checked property failed, 2 usage error.

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "matlog/clone.hpp"
#include "matlog/congruence.hpp"
#include "matlog/external.hpp"
#include "matlog/io.hpp"
#include "matlog/metatheory.hpp"
#include "matlog/registry.hpp"
#include "matlog/semantics.hpp"
#include "matlog/structure.hpp"
#include "matlog/survey.hpp"

namespace {

using namespace matlog;
using json = nlohmann::ordered_json;

struct UsageError : Error {
  using Error::Error;
};

struct Globals {
  std::size_t var_cap = default_eval_options().var_cap;
  std::size_t threads = 1;
  std::string format = "human";

  bool as_json() const { return format == "json"; }
  EvalOptions eval() const { return {var_cap, threads}; }
};

void emit(const json& j) { std::cout << j.dump() << "\n"; }

Formula parse_for(const Matrix& m, const std::string& text) {
  try {
    return parse(text, m.algebra().signature());
  } catch (const ParseError& e) {
    throw UsageError(std::string(e.what()) + "\n  " + text + "\n  " +
                     std::string(std::min(e.position(), text.size()), ' ') + "^");
  }
}

json valuation_json(const Valuation& v, const FiniteAlgebra& a) {
  json j = json::object();
  for (std::size_t i = 0; i < v.variables.size(); ++i) {
    j[v.variables[i]] = a.element_name(v.values[i]);
  }
  return j;
}

std::string names(const std::vector<Element>& es, const FiniteAlgebra& a) {
  std::string s;
  for (auto e : es) s += (s.empty() ? "" : ", ") + a.element_name(e);
  return s;
}

// check / theorem / antitheorem

int run_check(const Globals& g, const std::string& logic,
              const std::vector<std::string>& args) {
  const auto m = resolve_logic(logic);
  const auto sep = std::find(args.begin(), args.end(), "|-");
  if (sep == args.end() || std::next(sep) == args.end() ||
      std::next(sep, 2) != args.end()) {
    throw UsageError("expected: check <logic> <premise>... |- <conclusion>");
  }
  std::vector<Formula> premises;
  for (auto it = args.begin(); it != sep; ++it) premises.push_back(parse_for(m, *it));
  const auto conclusion = parse_for(m, *std::next(sep));
  const Rule rule{premises, conclusion};
  const auto v = entails(m, premises, conclusion, g.eval());
  const auto& a = m.algebra();
  if (g.as_json()) {
    json j{{"command", "check"}, {"logic", m.name()}, {"rule", render(rule)},
           {"valid", v.valid}, {"valuations", v.valuations_checked}};
    if (v.countermodel) {
      j["countermodel"] = valuation_json(v.countermodel->valuation, a);
      json pv = json::array();
      for (auto e : v.countermodel->premise_values) pv.push_back(a.element_name(e));
      j["premise_values"] = pv;
      j["conclusion_value"] = a.element_name(v.countermodel->conclusion_value);
    }
    emit(j);
  } else {
    std::cout << "matrix consequence in " << m.name() << ": " << render(rule)
              << "\n";
    if (v.valid) {
      std::cout << "valid (" << v.valuations_checked << " valuations)\n";
    } else {
      const auto& cm = *v.countermodel;
      std::cout << "invalid; countermodel " << cm.valuation.format(a)
                << "\n  premise values: " << names(cm.premise_values, a)
                << "\n  conclusion value: " << a.element_name(cm.conclusion_value)
                << "\n";
    }
  }
  return v.valid ? 0 : 1;
}

int run_theorem(const Globals& g, const std::string& logic,
                const std::string& text) {
  const auto m = resolve_logic(logic);
  const auto f = parse_for(m, text);
  const auto v = is_theorem(m, f, g.eval());
  if (g.as_json()) {
    json j{{"command", "theorem"}, {"logic", m.name()}, {"formula", render(f)},
           {"theorem", v.valid}, {"valuations", v.valuations_checked}};
    if (v.countermodel) {
      j["countermodel"] = valuation_json(v.countermodel->valuation, m.algebra());
      j["value"] = m.algebra().element_name(v.countermodel->conclusion_value);
    }
    emit(j);
  } else {
    std::cout << "theoremhood in " << m.name() << ": " << render(f) << "\n";
    if (v.valid) {
      std::cout << "theorem (" << v.valuations_checked << " valuations)\n";
    } else {
      std::cout << "not a theorem; countermodel "
                << v.countermodel->valuation.format(m.algebra()) << " gives "
                << m.algebra().element_name(v.countermodel->conclusion_value)
                << "\n";
    }
  }
  return v.valid ? 0 : 1;
}

int run_antitheorem(const Globals& g, const std::string& logic,
                    const std::vector<std::string>& texts) {
  const auto m = resolve_logic(logic);
  std::vector<Formula> gamma;
  for (const auto& t : texts) gamma.push_back(parse_for(m, t));
  const auto v = is_antitheorem(m, gamma, g.eval());
  std::string set;
  for (const auto& f : gamma) set += (set.empty() ? "" : ", ") + render(f);
  if (g.as_json()) {
    json j{{"command", "antitheorem"}, {"logic", m.name()}, {"set", set},
           {"antitheorem", v.antitheorem}};
    if (v.witness) j["witness"] = valuation_json(*v.witness, m.algebra());
    emit(j);
  } else {
    std::cout << "antitheorem check in " << m.name() << ": {" << set << "}\n";
    if (v.antitheorem) {
      std::cout << "antitheorem: no valuation designates every member\n";
    } else {
      std::cout << "not an antitheorem; designated together under "
                << (v.witness->variables.empty()
                        ? std::string("the empty valuation")
                        : v.witness->format(m.algebra()))
                << "\n";
    }
  }
  return v.antitheorem ? 0 : 1;
}

// external

int run_external(const Globals& g, const std::string& logic,
                 const std::string& emit_path) {
  const auto m = resolve_logic(logic);
  const auto r = check_subclassical(m);
  const auto anomalies = table_anomalies(m.algebra());
  std::optional<ExternalAlgebra> ext;
  if (r.passed) ext = build_external(m);
  if (ext && !emit_path.empty()) save_matrix(ext->matrix(), emit_path);
  const auto& a = m.algebra();
  if (g.as_json()) {
    json j{{"command", "external"}, {"logic", m.name()},
           {"boolean_subreduct", r.boolean_subreduct},
           {"involutive_negation", r.involutive_negation},
           {"negation_fixes_half", r.negation_fixes_half},
           {"subclassical", r.passed}, {"failures", r.failures},
           {"anomalies", anomalies}};
    if (r.frame) {
      j["frame"] = {a.element_name(r.frame->zero), a.element_name(r.frame->half),
                    a.element_name(r.frame->one)};
    }
    if (ext) j["external"] = json::parse(to_json(ext->matrix()));
    emit(j);
  } else {
    std::cout << "subclassicality of " << m.name() << "\n"
              << "  B2 subreduct with trace {1}: "
              << (r.boolean_subreduct ? "yes" : "no");
    if (r.frame) {
      std::cout << " (0 = " << a.element_name(r.frame->zero)
                << ", 1 = " << a.element_name(r.frame->one) << ")";
    }
    std::cout << "\n  ~~x = x: " << (r.involutive_negation ? "yes" : "no")
              << "\n  ~half = half: " << (r.negation_fixes_half ? "yes" : "no")
              << "\n  verdict: " << (r.passed ? "subclassical" : "not subclassical")
              << "\n";
    for (const auto& f : r.failures) std::cout << "  failure " << f << "\n";
    std::cout << "table anomalies:" << (anomalies.empty() ? " none" : "") << "\n";
    for (const auto& x : anomalies) std::cout << "  " << x << "\n";
    if (ext) {
      if (emit_path.empty()) {
        std::cout << "external version " << ext->matrix().name() << ":\n"
                  << to_json(ext->matrix());
      } else {
        std::cout << "external version " << ext->matrix().name()
                  << " written to " << emit_path << "\n";
      }
    }
  }
  return r.passed ? 0 : 1;
}

// skeleton / conucleus / survey

PowerAlgebra parse_power(const std::string& spec) {
  const auto caret = spec.rfind('^');
  if (caret == std::string::npos || caret == 0 || caret + 1 == spec.size()) {
    throw UsageError("power spec must look like SK^2, got '" + spec + "'");
  }
  std::size_t exponent = 0;
  try {
    exponent = std::stoul(spec.substr(caret + 1));
  } catch (const std::exception&) {
    throw UsageError("bad exponent in '" + spec + "'");
  }
  return PowerAlgebra(resolve_algebra(spec.substr(0, caret)), exponent);
}

json report_json(const ConucleusReport& r, const PowerAlgebra& p) {
  json j = json::object();
  auto one = [&](const char* key, const PropertyCheck& c) {
    json w = json::array();
    for (auto x : c.witness) w.push_back(p.format(x));
    j[key] = {{"holds", c.holds}, {"witness", w}, {"detail", c.detail}};
  };
  one("monotone", r.monotone);
  one("deflationary", r.deflationary);
  one("meet_compatible", r.meet_compatible);
  one("idempotent", r.idempotent);
  one("boolean", r.boolean);
  one("complete", r.complete);
  return j;
}

void print_report(const ConucleusReport& r) {
  auto one = [](const char* label, const PropertyCheck& c) {
    std::cout << "  " << std::left << std::setw(28) << label
              << (c.holds ? "holds" : "fails");
    if (!c.holds) std::cout << ": " << c.detail;
    std::cout << "\n";
  };
  one("monotone", r.monotone);
  one("deflationary s(a) <= a", r.deflationary);
  one("s(a) & s(b) <= s(a & b)", r.meet_compatible);
  one("idempotent", r.idempotent);
  one("image = Boolean skeleton", r.boolean);
  one("complete", r.complete);
}

std::string format_set(const std::vector<Code>& cs, const PowerAlgebra& p) {
  std::string s;
  for (auto c : cs) s += (s.empty() ? "" : ", ") + p.format(c);
  return "{" + s + "}";
}

std::string format_map(const UnaryMapOnCarrier& m, const PowerAlgebra& p) {
  std::string s;
  for (std::size_t i = 0; i < m.domain().size(); ++i) {
    s += (i ? ", " : "") + p.format(m.domain()[i]) + " -> " + p.format(m.image()[i]);
  }
  return s;
}

int run_skeleton(const Globals& g, const std::string& spec,
                 const std::vector<std::string>& generators) {
  const auto p = parse_power(spec);
  std::vector<Code> gens;
  for (const auto& t : generators) {
    try {
      gens.push_back(p.parse(t));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  const auto c = subalgebra_closure(p, gens);
  const auto skel = boolean_skeleton(c);
  const auto v = admits_expansion(c);
  std::optional<SepCheck> sep;
  if (v.sigma) sep = check_sep(*v.sigma, c);
  if (g.as_json()) {
    json j{{"command", "skeleton"}, {"power", spec},
           {"generators", generators}, {"carrier", c.format()},
           {"size", c.size()}, {"skeleton", format_set(skel.elements, p)},
           {"admits_expansion", v.admits}, {"reason", v.reason}};
    if (v.escape) {
      j["escape"] = {p.format(v.escape->first), p.format(v.escape->second)};
    }
    if (v.sigma) j["sigma"] = format_map(*v.sigma, p);
    if (v.report) j["report"] = report_json(*v.report, p);
    const auto& s = sep ? sep : v.sep_on_projection;
    if (s) {
      j["sep"] = {{"on", sep ? "canonical sigma" : "skeleton projection"},
                  {"holds", s->holds}};
      if (s->violation) {
        j["sep"]["violation"] = {p.format(s->violation->first),
                                 p.format(s->violation->second)};
      }
    }
    emit(j);
  } else {
    std::cout << "subalgebra of " << spec << " generated by "
              << format_set(gens, p) << "\n  carrier (" << c.size()
              << "): " << c.format() << "\n  Boolean skeleton ("
              << skel.elements.size() << "): " << format_set(skel.elements, p)
              << "\ncomplete Boolean conucleus (expansion by D1): "
              << (v.admits ? "YES" : "NO") << "\n  " << v.reason << "\n";
    if (v.sigma) std::cout << "  sigma: " << format_map(*v.sigma, p) << "\n";
    if (v.report) print_report(*v.report);
    const auto& s = sep ? sep : v.sep_on_projection;
    if (s) {
      std::cout << "separation on " << (sep ? "sigma" : "the skeleton projection")
                << ": " << (s->holds ? "holds" : "violated");
      if (s->violation) {
        std::cout << " by " << p.format(s->violation->first) << ", "
                  << p.format(s->violation->second);
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int run_conucleus(const Globals& g, const std::string& path) {
  const auto file = carrier_from_json(read_file(path));
  const auto& c = file.subalgebra;
  const auto& p = c.power();
  std::optional<UnaryMapOnCarrier> sigma;
  std::string source;
  if (file.sigma) {
    sigma = UnaryMapOnCarrier::from_pairs(c, *file.sigma);
    source = "file";
  } else {
    auto canon = canonical_sigma(c);
    if (!canon.map) {
      const auto msg = "pointwise D1 sends " + p.format(canon.escape->first) +
                       " to " + p.format(canon.escape->second) +
                       ", outside the carrier";
      if (g.as_json()) {
        emit({{"command", "conucleus"}, {"carrier", c.format()},
              {"sigma", "canonical"}, {"total", false}, {"detail", msg}});
      } else {
        std::cout << "canonical sigma is not a map on the carrier: " << msg << "\n";
      }
      return 1;
    }
    sigma = std::move(canon.map);
    source = "canonical";
  }
  const auto r = check_conucleus(*sigma, c);
  const auto s = check_sep(*sigma, c);
  std::optional<JoinCheck> join;
  if (join_gate(p.base())) join = check_join_criterion(c, *sigma);
  if (g.as_json()) {
    json j{{"command", "conucleus"}, {"carrier", c.format()}, {"sigma", source},
           {"map", format_map(*sigma, p)}, {"report", report_json(r, p)},
           {"conucleus", r.is_conucleus()}, {"boolean", r.is_boolean()},
           {"complete_boolean", r.is_complete_boolean()}, {"sep", s.holds}};
    if (join) j["join_criterion"] = join->holds;
    emit(j);
  } else {
    std::cout << "map (" << source << "): " << format_map(*sigma, p) << "\n";
    print_report(r);
    std::cout << "conucleus: " << (r.is_conucleus() ? "yes" : "no")
              << "; Boolean: " << (r.is_boolean() ? "yes" : "no")
              << "; complete Boolean: " << (r.is_complete_boolean() ? "yes" : "no")
              << "\nseparation: " << (s.holds ? "holds" : "violated") << "\n";
    if (join) {
      std::cout << "x <= s(x) | ~x: " << (join->holds ? "holds" : "fails");
      if (join->violation) std::cout << " at " << p.format(*join->violation);
      std::cout << "\n";
    }
  }
  return r.is_complete_boolean() ? 0 : 1;
}

int run_survey(const Globals& g, const std::string& algebra, std::size_t exponent,
               const std::string& mode, std::size_t max_generators,
               std::size_t scan_limit, bool embeddings) {
  SurveyOptions o;
  if (mode == "generated") {
    o.mode = SubuniverseMode::generated;
  } else if (mode != "exhaustive") {
    throw UsageError("--mode must be exhaustive or generated");
  }
  o.max_generators = max_generators;
  o.scan_limit = scan_limit;
  o.search_embeddings = embeddings;
  o.threads = g.threads;
  const auto r = survey(resolve_algebra(algebra), exponent, o);
  for (const auto& row : r.rows) {
    json j{{"id", row.id}, {"carrier", row.carrier}, {"size", row.size},
           {"skeleton", row.skeleton}, {"admits", row.admits},
           {"witness", row.witness}, {"canonical_total", row.canonical_total},
           {"expanded_closed", row.expanded_closed}};
    j["scan_admits"] = row.scan_admits ? json(*row.scan_admits) : json();
    j["sep_consistent"] = row.sep_consistent ? json(*row.sep_consistent) : json();
    j["join_criterion"] = row.join_criterion ? json(*row.join_criterion) : json();
    j["agrees"] = row.agrees() && row.join_agrees();
    j["scope"] = row.scope;
    if (row.embeddings) {
      j["embeddings_checked"] = row.embeddings->embeddings_checked;
      j["expandable_embedding"] = row.embeddings->found;
    }
    if (g.as_json()) emit(j);
  }
  const auto bad = r.disagreements() + r.sep_inconsistencies() +
                   r.join_disagreements();
  if (g.as_json()) {
    emit({{"summary", true}, {"algebra", r.algebra}, {"exponent", r.exponent},
          {"carriers", r.rows.size()}, {"complete", r.complete},
          {"note", r.note}, {"disagreements", r.disagreements()},
          {"sep_inconsistencies", r.sep_inconsistencies()},
          {"join_disagreements", r.join_disagreements()}});
  } else {
    std::cout << "expansion survey over subalgebras of " << r.algebra << "^"
              << r.exponent << " (" << r.note << ")\n";
    std::cout << std::right << std::setw(4) << "id" << std::setw(6) << "size"
              << std::setw(6) << "skel" << std::setw(8) << "verdict"
              << std::setw(7) << "agree" << "  witness / carrier\n";
    for (const auto& row : r.rows) {
      std::cout << std::setw(4) << row.id << std::setw(6) << row.size
                << std::setw(6) << row.skeleton << std::setw(8)
                << (row.admits ? "YES" : "NO") << std::setw(7)
                << (row.agrees() && row.join_agrees() ? "yes" : "NO") << "  "
                << (row.witness.empty() ? row.carrier : row.witness) << "\n";
      if (row.embeddings && row.embeddings->found_expandable) {
        std::cout << "        expandable under another embedding: "
                  << row.embeddings->found << "\n";
      }
    }
    std::cout << "carriers: " << r.rows.size()
              << "; verdict disagreements: " << r.disagreements()
              << "; separation inconsistencies: " << r.sep_inconsistencies()
              << "; join-criterion disagreements: " << r.join_disagreements()
              << (r.gate ? "" : " (0 | half = 0: join criterion not applicable)")
              << "\n";
  }
  return bad == 0 ? 0 : 1;
}

// verify

struct SuiteLine {
  std::string suite, logic, check;
  bool passed;
  std::string detail;
};

std::vector<LogicEntry> external_candidates(const std::string& only) {
  std::vector<LogicEntry> out;
  for (const auto& e : all_logics()) {
    if (e.matrix.algebra().size() != 3) continue;
    if (!only.empty() && e.name != only) continue;
    if (!check_subclassical(e.matrix).passed) continue;
    out.push_back(e);
  }
  if (!only.empty() && out.empty()) {
    throw UsageError("'" + only + "' is not a subclassical built-in logic");
  }
  return out;
}

std::string corpus_detail(const CorpusReport& c) {
  std::string s = std::to_string(c.instances) + " instances, " +
                  std::to_string(c.discrepancies.size()) + " discrepancies";
  if (!c.discrepancies.empty()) {
    s += "; first: " + render(c.discrepancies.front().rule) + " (" +
         c.discrepancies.front().detail + ")";
  }
  return s;
}

std::string pointwise_detail(const PointwiseCheck& c) {
  std::string s = std::to_string(c.points) + " points";
  if (!c.failures.empty()) s += "; " + c.failures.front();
  return s;
}

void suite_recapture(const std::string& only, const EvalOptions& eval,
                     std::vector<SuiteLine>& out) {
  const auto path = data_dir() + "/classical_rules.txt";
  const auto rules = load_rule_corpus(path, builtin::b2().signature());
  const Matrix classical(builtin::b2(), {1}, "CL");
  for (const auto& r : rules) {
    const auto v = entails(classical, r.rule.premises, r.rule.conclusion, eval);
    out.push_back({"recapture", "CL", r.name, v.valid, render(r.rule)});
  }
  for (const auto& e : external_candidates(only)) {
    const auto ext = build_external(e.matrix);
    std::size_t ok = 0;
    std::string first;
    for (const auto& r : rules) {
      try {
        const auto res = recapture(r.rule, ext, eval);
        if (res.verdict.valid) {
          ++ok;
        } else if (first.empty()) {
          first = r.name + ": " + render(res.image);
        }
      } catch (const Error& err) {
        if (first.empty()) first = r.name + ": " + err.what();
      }
    }
    out.push_back({"recapture", ext.matrix().name(), "D1 images valid",
                   ok == rules.size(),
                   std::to_string(ok) + "/" + std::to_string(rules.size()) +
                       (first.empty() ? "" : "; first failure " + first)});
  }
}

void suite_alg(const std::string& only, const EvalOptions& eval,
               std::vector<SuiteLine>& out) {
  for (const auto& e : external_candidates(only)) {
    const auto ext = build_external(e.matrix);
    const auto t = standard_transformer(ext);
    const auto r = check_alg_witnesses(ext, t, {}, eval);
    const auto& n = ext.matrix().name();
    out.push_back({"alg", n, t.name + " truth", r.truth.passed(),
                   pointwise_detail(r.truth)});
    out.push_back({"alg", n, "rho equality", r.equality.passed(),
                   pointwise_detail(r.equality)});
    out.push_back({"alg", n, "alg2 pointwise", r.alg2.passed(),
                   pointwise_detail(r.alg2)});
    out.push_back({"alg", n, "alg1 corpus", r.alg1.passed(),
                   corpus_detail(r.alg1)});
    if (t.name == tau_half().name) {
      const auto c = check_tau_half_replacement(ext);
      out.push_back({"alg", n, "constant-free tau1/2 equivalent to psi = 1",
                     c.passed(), pointwise_detail(c)});
    }
    if (ext.algebra().signature().contains(ops::kImp) && e.algebra == "L3" &&
        ext.matrix().designated().size() == 1) {
      const auto c = check_lukasiewicz_interderivability(ext);
      out.push_back({"alg", n, "derived and Lukasiewicz implication interderivable",
                     c.passed(), pointwise_detail(c)});
    }
  }
}

void suite_ddt(const std::string& only, const EvalOptions& eval,
               std::vector<SuiteLine>& out) {
  for (const auto& e : external_candidates(only)) {
    const auto ext = build_external(e.matrix);
    const auto d = ext.matrix().designated().size() == 1 ? ddt_one() : ddt_half();
    const auto r = check_ddt_witness(ext, d, {}, eval);
    const auto& n = ext.matrix().name();
    out.push_back({"ddt", n, d.name + " pointwise", r.pointwise.passed(),
                   pointwise_detail(r.pointwise)});
    out.push_back({"ddt", n, d.name + " corpus", r.corpus.passed(),
                   corpus_detail(r.corpus)});
    if (e.algebra == "L3" && ext.matrix().designated().size() == 1) {
      const auto& a = ext.algebra();
      const auto imp_op = a.operation_index(ops::kImp);
      const auto f = ext.frame();
      const auto nested = a.apply(imp_op, f.one, a.apply(imp_op, f.one, f.half));
      const auto arrow = evaluate(d.formulas.front(), a, {{"x", "y"}, {f.one, f.half}});
      out.push_back({"ddt", n, "1 =>L (1 =>L n) differs from ->1(1, n)",
                     nested == f.half && arrow == f.zero,
                     "1 =>L (1 =>L n) = " + a.element_name(nested) +
                         ", ->1(1, n) = " + a.element_name(arrow)});
    }
  }
}

void suite_dedeq(const std::string& only, const EvalOptions& eval,
                 std::vector<SuiteLine>& out) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"K3", "LP"}, {"B", "PWK"}, {"St/demorgan", "S/demorgan"}, {"L3", "J3"}};
  for (const auto& [one, half] : pairs) {
    if (!only.empty() && only != one && only != half) continue;
    const auto e1 = build_external(resolve_logic(one));
    const auto e2 = build_external(resolve_logic(half));
    const auto r = check_dedeq(e1, e2, {}, eval);
    const auto label = e1.matrix().name() + "/" + e2.matrix().name();
    out.push_back({"dedeq", label, "de2 pointwise", r.de2.passed(),
                   pointwise_detail(r.de2)});
    out.push_back({"dedeq", label, "de1 corpus", r.de1.passed(),
                   corpus_detail(r.de1)});
  }
}

std::string witnesses(const std::vector<CloneWitness>& ws) {
  std::string s;
  for (const auto& w : ws) {
    s += (s.empty() ? "" : "; ") + w.operation + " = " +
         (w.term ? render(*w.term) : std::string("?"));
  }
  return s;
}

void suite_clone(std::vector<SuiteLine>& out) {
  const auto ske = build_external(resolve_logic("K3")).algebra();
  const auto lpe = build_external(resolve_logic("LP")).algebra();
  const auto l3 = builtin::l3();
  const auto a = term_equivalent(ske, l3);
  out.push_back({"clone", "SK^e ~ L3", "term equivalent", a.equivalent,
                 witnesses(a.a_in_b) + " | " + witnesses(a.b_in_a)});
  const auto b = term_equivalent(lpe, resolve_logic("J3").algebra());
  out.push_back({"clone", "LP^e ~ J3", "term equivalent", b.equivalent,
                 witnesses(b.a_in_b) + " | " + witnesses(b.b_in_a)});
  const auto c = term_equivalent(builtin::sk(), l3);
  out.push_back({"clone", "SK ~ L3", "not term equivalent", !c.equivalent,
                 c.explanation.empty() ? "" : c.explanation.front()});
  const auto cl = generate_clone(l3, 2);
  const auto added = resaturate(l3, cl);
  out.push_back({"clone", "L3", "saturation idempotent", added == 0 && cl.saturated(),
                 std::to_string(cl.operations(2).size()) +
                     " binary term operations; resaturation added " +
                     std::to_string(added)});
}

int run_verify(const Globals& g, const std::string& suite, const std::string& only) {
  static const std::vector<std::string> known = {"recapture", "alg", "ddt",
                                                 "dedeq", "clone", "all"};
  if (std::find(known.begin(), known.end(), suite) == known.end()) {
    throw UsageError("unknown suite '" + suite +
                     "'; use recapture, alg, ddt, dedeq, clone or all");
  }
  std::vector<SuiteLine> lines;
  const auto eval = g.eval();
  const bool all = suite == "all";
  if (all || suite == "recapture") suite_recapture(only, eval, lines);
  if (all || suite == "alg") suite_alg(only, eval, lines);
  if (all || suite == "ddt") suite_ddt(only, eval, lines);
  if (all || suite == "dedeq") suite_dedeq(only, eval, lines);
  if (all || suite == "clone") suite_clone(lines);

  std::size_t failed = 0;
  for (const auto& l : lines) {
    failed += !l.passed;
    if (g.as_json()) {
      emit({{"suite", l.suite}, {"logic", l.logic}, {"check", l.check},
            {"passed", l.passed}, {"detail", l.detail}});
    } else {
      std::cout << (l.passed ? "PASS " : "FAIL ") << std::left << std::setw(10)
                << l.suite << std::setw(30) << l.logic << l.check << "\n";
      if (!l.passed || l.suite == "clone") {
        std::cout << "       " << l.detail << "\n";
      }
    }
  }
  if (g.as_json()) {
    emit({{"summary", true}, {"checks", lines.size()}, {"failed", failed}});
  } else {
    std::cout << lines.size() - failed << "/" << lines.size() << " checks passed\n";
  }
  return failed == 0 ? 0 : 1;
}

// clone / export / leibniz

int run_clone(const Globals& g, const std::string& algebra, std::size_t arity,
              const std::string& target, std::size_t cap) {
  const auto a = resolve_algebra(algebra);
  const auto c = generate_clone(a, arity, cap);
  json j{{"command", "clone"}, {"algebra", a.name()}, {"saturated", c.saturated()}};
  for (std::size_t k = 1; k <= arity; ++k) {
    j["arity" + std::to_string(k)] = c.operations(k).size();
  }
  bool found = true;
  if (!target.empty()) {
    const auto dot = target.find('.');
    if (dot == std::string::npos) {
      throw UsageError("--target must look like ALGEBRA.OPERATION, e.g. L3.imp");
    }
    const auto host = resolve_algebra(target.substr(0, dot));
    const auto op = host.operation_index(target.substr(dot + 1));
    const auto t = host.table(op);
    const auto k = host.signature().operations()[op].arity;
    if (host.universe() != a.universe()) {
      throw UsageError("target algebra has a different universe");
    }
    if (k > arity) throw UsageError("target arity exceeds --arity");
    const auto* w = c.find(k, std::vector<Element>(t.begin(), t.end()));
    found = w != nullptr;
    j["target"] = target;
    j["definable"] = found;
    if (w) j["witness"] = render(w->witness);
  }
  if (g.as_json()) {
    emit(j);
  } else {
    std::cout << "term operations of " << a.name() << (c.saturated() ? "" : " (cap hit, partial)")
              << "\n";
    for (std::size_t k = 1; k <= arity; ++k) {
      std::cout << "  arity " << k << ": " << c.operations(k).size()
                << " tables, " << c.layers()[k - 1] << " layers\n";
    }
    if (!target.empty()) {
      std::cout << target << ": "
                << (found ? "definable as " + j["witness"].get<std::string>()
                          : std::string("not definable"))
                << "\n";
    }
  }
  return found && c.saturated() ? 0 : 1;
}

int run_export(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& e : all_logics()) {
    auto file = e.name;
    std::replace(file.begin(), file.end(), '/', '-');
    save_matrix(e.matrix, dir + "/" + file + ".json");
    std::cout << dir << "/" << file << ".json\n";
  }
  return 0;
}

int run_leibniz(const Globals& g, const std::string& logic) {
  const auto m = resolve_logic(logic);
  const auto theta = leibniz_congruence(m);
  if (g.as_json()) {
    emit({{"command", "leibniz"}, {"logic", m.name()},
          {"congruence", theta.format(m.algebra())},
          {"reduced", theta.is_identity()}});
  } else {
    std::cout << "Leibniz congruence of " << m.name() << ": "
              << theta.format(m.algebra()) << "\n"
              << (theta.is_identity() ? "reduced" : "not reduced") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matlog: finite-matrix workbench for three-valued logics and "
               "their external versions"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--var-cap", g.var_cap, "Largest number of variables scanned")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"human", "json"}));
  app.fallthrough();

  std::string logic, text, spec, algebra, emit_path, suite, only, mode = "exhaustive",
                                                                  target, path;
  std::vector<std::string> rest;
  std::size_t exponent = 2, max_generators = 3, scan_limit = 9, arity = 2, cap = 64;
  bool embeddings = false;
  std::function<int()> action;

  auto* check = app.add_subcommand("check", "Decide matrix consequence: premises |- conclusion");
  check->add_option("logic", logic)->required();
  check->add_option("args", rest, "Premises, the token |-, then the conclusion")->required();
  check->callback([&] { action = [&] { return run_check(g, logic, rest); }; });

  auto* theorem = app.add_subcommand("theorem", "Decide theoremhood");
  theorem->add_option("logic", logic)->required();
  theorem->add_option("formula", text)->required();
  theorem->callback([&] { action = [&] { return run_theorem(g, logic, text); }; });

  auto* anti = app.add_subcommand("antitheorem", "Decide whether a set is never jointly designated");
  anti->add_option("logic", logic)->required();
  anti->add_option("formulas", rest)->required();
  anti->callback([&] { action = [&] { return run_antitheorem(g, logic, rest); }; });

  auto* external = app.add_subcommand("external", "Check subclassicality and build the external version");
  external->add_option("logic", logic)->required();
  external->add_option("--emit", emit_path, "Write the external matrix as JSON");
  external->callback([&] { action = [&] { return run_external(g, logic, emit_path); }; });

  auto* skeleton = app.add_subcommand("skeleton", "Generate a subalgebra of a power and decide its expansion");
  skeleton->add_option("power", spec, "Power such as SK^2")->required();
  skeleton->add_option("generators", rest, "Tuples such as (0,n)")->required();
  skeleton->callback([&] { action = [&] { return run_skeleton(g, spec, rest); }; });

  auto* surv = app.add_subcommand("survey", "Survey the expansion verdict over subalgebras of A^I");
  surv->add_option("algebra", algebra)->required();
  surv->add_option("--exponent", exponent)->required()->check(CLI::PositiveNumber);
  surv->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "generated"}));
  surv->add_option("--max-generators", max_generators);
  surv->add_option("--scan-limit", scan_limit, "Largest carrier for candidate scans");
  surv->add_flag("--embeddings", embeddings, "Search other embeddings on NO verdicts");
  surv->callback([&] {
    action = [&] {
      return run_survey(g, algebra, exponent, mode, max_generators, scan_limit,
                        embeddings);
    };
  });

  auto* conu = app.add_subcommand("conucleus", "Check a map on a carrier read from JSON");
  conu->add_option("carrier-file", path)->required();
  conu->callback([&] { action = [&] { return run_conucleus(g, path); }; });

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", suite, "recapture | alg | ddt | dedeq | clone | all")->required();
  verify->add_option("--logic", only, "Restrict to one built-in logic");
  verify->callback([&] { action = [&] { return run_verify(g, suite, only); }; });

  auto* clone = app.add_subcommand("clone", "Saturate term operations of arity <= 2");
  clone->add_option("algebra", algebra)->required();
  clone->add_option("--arity", arity)->check(CLI::Range(1, 2));
  clone->add_option("--target", target, "ALGEBRA.OPERATION to locate");
  clone->add_option("--cap", cap, "Layer cap");
  clone->callback([&] { action = [&] { return run_clone(g, algebra, arity, target, cap); }; });

  auto* exp = app.add_subcommand("export", "Write the built-in matrices as JSON files");
  exp->add_option("directory", path)->required();
  exp->callback([&] { action = [&] { return run_export(path); }; });

  auto* leib = app.add_subcommand("leibniz", "Leibniz congruence of a matrix");
  leib->add_option("logic", logic)->required();
  leib->callback([&] { action = [&] { return run_leibniz(g, logic); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const auto code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
