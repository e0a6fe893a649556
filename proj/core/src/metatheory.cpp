#include "matlog/metatheory.hpp"

#include <random>

#include "matlog/registry.hpp"

namespace matlog {

namespace {

const std::vector<std::string> kXY = {"x", "y"};

bool all_designated(const Matrix& m, const std::vector<Formula>& fs,
                    Element a, Element b) {
  for (const auto& f : fs) {
    if (!m.is_designated(evaluate(f, m.algebra(), {kXY, {a, b}}))) return false;
  }
  return true;
}

bool all_hold(const FiniteAlgebra& alg, const std::vector<Equation>& eqs,
              Element a, Element b) {
  for (const auto& e : eqs) {
    if (evaluate(e.left, alg, {kXY, {a, b}}) !=
        evaluate(e.right, alg, {kXY, {a, b}})) {
      return false;
    }
  }
  return true;
}

std::string show(const FiniteAlgebra& alg, Element a) {
  return alg.element_name(a);
}

std::string show(const FiniteAlgebra& alg, Element a, Element b) {
  return "(" + alg.element_name(a) + "," + alg.element_name(b) + ")";
}

void require_vars(const Formula& f, const std::vector<std::string>& allowed,
                  const std::string& where) {
  for (const auto& v : variables_of(f)) {
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
      throw Error(where + " uses variable '" + v + "' outside its placeholders");
    }
  }
}

Formula random_formula(std::mt19937_64& rng, const Signature& sig,
                       const std::vector<std::string>& vars, std::size_t depth) {
  std::uniform_int_distribution<std::size_t> coin(0, 3);
  if (depth == 0 || coin(rng) == 0) {
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    return var(vars[pick(rng)]);
  }
  std::uniform_int_distribution<std::size_t> pick(0, sig.size() - 1);
  const auto& op = sig.operations()[pick(rng)];
  std::vector<Formula> args;
  for (std::size_t k = 0; k < op.arity; ++k) {
    args.push_back(random_formula(rng, sig, vars, depth - 1));
  }
  return Formula::apply(op.name, std::move(args));
}

std::string verdict_word(bool v) { return v ? "valid" : "invalid"; }

}  // namespace

Formula delta1_image(const Formula& f) {
  Substitution s;
  for (const auto& v : variables_of(f)) s.emplace(v, delta1(var(v)));
  return substitute(f, s);
}

RecaptureResult recapture(const Rule& rule, const ExternalAlgebra& external,
                          const EvalOptions& options) {
  const Matrix classical(builtin::b2(), {1}, "CL");
  for (const auto& f : rule.premises) check_bound(f, classical.algebra().signature());
  check_bound(rule.conclusion, classical.algebra().signature());
  const auto cl = entails(classical, rule.premises, rule.conclusion, options);
  if (!cl.valid) {
    throw Error("rule " + render(rule) + " is not classically valid: " +
                cl.countermodel->valuation.format(classical.algebra()));
  }
  std::vector<Formula> all = rule.premises;
  all.push_back(rule.conclusion);
  Substitution s;
  for (const auto& v : variables_of(all)) s.emplace(v, delta1(var(v)));
  std::vector<Formula> premises;
  for (const auto& p : rule.premises) premises.push_back(substitute(p, s));
  Rule image{std::move(premises), substitute(rule.conclusion, s)};
  auto verdict = entails(external.matrix(), image.premises, image.conclusion, options);
  return {std::move(image), std::move(verdict)};
}

std::vector<Rule> rule_corpus(const Signature& signature,
                              const CorpusOptions& options) {
  const auto base =
      enumerate_formulas(signature, options.variables, options.exhaustive_depth);
  std::vector<Rule> out;
  const auto n = base.size();
  // Premise multisets as non-decreasing index lists, by size.
  std::vector<std::size_t> idx;
  auto emit = [&](auto&& self, std::size_t start, std::size_t size) -> void {
    if (idx.size() == size) {
      std::vector<Formula> premises;
      for (auto i : idx) premises.push_back(base[i]);
      for (const auto& c : base) out.push_back({premises, c});
      return;
    }
    for (auto i = start; i < n; ++i) {
      idx.push_back(i);
      self(self, i, size);
      idx.pop_back();
    }
  };
  for (std::size_t k = 0; k <= options.max_premises; ++k) emit(emit, 0, k);

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> count(0, options.max_premises);
  for (std::size_t s = 0; s < options.samples; ++s) {
    std::vector<Formula> premises;
    const auto k = count(rng);
    for (std::size_t i = 0; i < k; ++i) {
      premises.push_back(
          random_formula(rng, signature, options.variables, options.sample_depth));
    }
    auto c = random_formula(rng, signature, options.variables, options.sample_depth);
    out.push_back({std::move(premises), std::move(c)});
  }
  return out;
}

Transformer tau_one() {
  const auto x = var("x"), y = var("y");
  return {"tau1",
          {{x, derived_implication(x, x)}},
          {derived_implication(x, y), derived_implication(y, x)}};
}

Transformer tau_half() {
  const auto x = var("x"), y = var("y");
  const auto psi = disj(delta1(x), delta_half(x));
  return {"tau1/2",
          {{psi, disj(psi, neg(psi))}},
          {derived_implication(x, y), derived_implication(y, x)}};
}

Transformer standard_transformer(const ExternalAlgebra& external) {
  const auto& f = external.frame();
  const auto& d = external.matrix().designated();
  if (d == std::vector<Element>{f.one}) return tau_one();
  std::vector<Element> upper = {f.half, f.one};
  std::sort(upper.begin(), upper.end());
  if (d == upper) return tau_half();
  throw Error(external.matrix().name() +
              " designates neither {1} nor {1, half}; no standard transformer");
}

std::vector<Equation> apply_tau(const Transformer& t, const Formula& f) {
  const Substitution s{{"x", f}};
  std::vector<Equation> out;
  for (const auto& e : t.tau) {
    out.push_back({substitute(e.left, s), substitute(e.right, s)});
  }
  return out;
}

std::vector<Formula> apply_rho(const Transformer& t, const Formula& a,
                               const Formula& b) {
  const Substitution s{{"x", a}, {"y", b}};
  std::vector<Formula> out;
  for (const auto& f : t.rho) out.push_back(substitute(f, s));
  return out;
}

AlgReport check_alg_witnesses(const ExternalAlgebra& external,
                              const Transformer& t, const CorpusOptions& corpus,
                              const EvalOptions& options) {
  const auto& m = external.matrix();
  const auto& alg = m.algebra();
  if (t.tau.empty() || t.rho.empty()) {
    throw Error("transformer " + t.name + " has an empty tau or rho");
  }
  for (const auto& e : t.tau) {
    require_vars(e.left, {"x"}, "tau");
    require_vars(e.right, {"x"}, "tau");
    check_bound(e.left, alg.signature());
    check_bound(e.right, alg.signature());
  }
  for (const auto& f : t.rho) {
    require_vars(f, kXY, "rho");
    check_bound(f, alg.signature());
  }

  AlgReport r;
  r.truth.name = "truth";
  r.equality.name = "equality";
  r.alg2.name = "alg2";
  std::vector<Equation> tau_rho;
  for (const auto& f : t.rho) {
    for (auto& e : apply_tau(t, f)) tau_rho.push_back(std::move(e));
  }
  const auto n = static_cast<Element>(alg.size());
  for (Element a = 0; a < n; ++a) {
    ++r.truth.points;
    const bool in_f = m.is_designated(a);
    if (in_f != all_hold(alg, t.tau, a, a)) {
      r.truth.failures.push_back(show(alg, a) + (in_f ? " is" : " is not") +
                                 " designated but tau " +
                                 (in_f ? "fails" : "holds"));
    }
    for (Element b = 0; b < n; ++b) {
      ++r.equality.points;
      ++r.alg2.points;
      if ((a == b) != all_designated(m, t.rho, a, b)) {
        r.equality.failures.push_back("rho" + show(alg, a, b) +
                                      (a == b ? " leaves F" : " lies within F"));
      }
      if ((a == b) != all_hold(alg, tau_rho, a, b)) {
        r.alg2.failures.push_back("tau(rho" + show(alg, a, b) + ")" +
                                  (a == b ? " fails" : " holds"));
      }
    }
  }

  for (const auto& rule : rule_corpus(alg.signature(), corpus)) {
    ++r.alg1.instances;
    const bool lhs = entails(m, rule.premises, rule.conclusion, options).valid;
    std::vector<Equation> premises;
    for (const auto& p : rule.premises) {
      for (auto& e : apply_tau(t, p)) premises.push_back(std::move(e));
    }
    bool rhs = true;
    for (const auto& e : apply_tau(t, rule.conclusion)) {
      rhs = rhs && eq_consequence(alg, premises, e, options).valid;
    }
    if (lhs) ++r.alg1.positive;
    if (lhs != rhs) {
      r.alg1.discrepancies.push_back(
          {rule, "consequence " + verdict_word(lhs) + ", equational " +
                     verdict_word(rhs)});
    }
  }
  return r;
}

PointwiseCheck check_tau_half_replacement(const ExternalAlgebra& external) {
  PointwiseCheck c{"tau1/2 replacement", 0, {}};
  const auto& alg = external.algebra();
  const auto x = var("x");
  const auto psi = disj(delta1(x), delta_half(x));
  const Equation replacement{psi, disj(psi, neg(psi))};
  for (Element a = 0; a < alg.size(); ++a) {
    ++c.points;
    const bool constant_free = all_hold(alg, {replacement}, a, a);
    const bool with_one = evaluate(psi, alg, {kXY, {a, a}}) == external.frame().one;
    if (constant_free != with_one) {
      c.failures.push_back("at " + show(alg, a) + ": psi = psi | ~psi " +
                           (constant_free ? "holds" : "fails") +
                           " but psi = 1 " + (with_one ? "holds" : "fails"));
    }
  }
  return c;
}

DdtSet ddt_one() {
  const auto x = var("x"), y = var("y");
  return {"->1", {disj(neg(delta1(x)), delta1(y))}};
}

DdtSet ddt_half() {
  const auto x = var("x"), y = var("y");
  return {"->1/2", {disj(neg(disj(delta1(x), delta_half(x))),
                         disj(delta1(y), delta_half(y)))}};
}

DdtReport check_ddt_witness(const ExternalAlgebra& external, const DdtSet& d,
                            const CorpusOptions& corpus,
                            const EvalOptions& options) {
  const auto& m = external.matrix();
  const auto& alg = m.algebra();
  if (d.formulas.empty()) throw Error("DDT set " + d.name + " is empty");
  for (const auto& f : d.formulas) {
    require_vars(f, kXY, "DDT set");
    check_bound(f, alg.signature());
  }
  DdtReport r;
  r.pointwise.name = "ddt pointwise";
  for (Element a = 0; a < alg.size(); ++a) {
    for (Element b = 0; b < alg.size(); ++b) {
      ++r.pointwise.points;
      const bool lhs = all_designated(m, d.formulas, a, b);
      const bool rhs = !m.is_designated(a) || m.is_designated(b);
      if (lhs != rhs) {
        r.pointwise.failures.push_back(
            d.name + show(alg, a, b) + (lhs ? " designated" : " not designated") +
            " but designation is " + (rhs ? "" : "not ") + "preserved");
      }
    }
  }
  for (const auto& rule : rule_corpus(alg.signature(), corpus)) {
    if (rule.premises.empty()) continue;
    ++r.corpus.instances;
    const bool lhs = entails(m, rule.premises, rule.conclusion, options).valid;
    std::vector<Formula> gamma(rule.premises.begin(), rule.premises.end() - 1);
    const Substitution s{{"x", rule.premises.back()}, {"y", rule.conclusion}};
    bool rhs = true;
    for (const auto& f : d.formulas) {
      rhs = rhs && entails(m, gamma, substitute(f, s), options).valid;
    }
    if (lhs) ++r.corpus.positive;
    if (lhs != rhs) {
      r.corpus.discrepancies.push_back(
          {rule, "Gamma, phi |- psi " + verdict_word(lhs) + ", Gamma |- I " +
                     verdict_word(rhs)});
    }
  }
  return r;
}

DedeqReport check_dedeq(const ExternalAlgebra& one, const ExternalAlgebra& half,
                        const CorpusOptions& corpus,
                        const EvalOptions& options) {
  const auto& alg = one.algebra();
  if (!alg.same_structure(half.algebra())) {
    throw Error(one.matrix().name() + " and " + half.matrix().name() +
                " are not over the same algebra");
  }
  const auto& f = one.frame();
  std::vector<Element> upper = {f.half, f.one};
  std::sort(upper.begin(), upper.end());
  if (one.matrix().designated() != std::vector<Element>{f.one} ||
      half.matrix().designated() != upper) {
    throw Error("deductive equivalence needs designated sets {1} and {1, half}");
  }
  DedeqReport r;
  r.de2.name = "de2";
  const auto x = var("x");
  const auto back = delta1(disj(delta1(x), delta_half(x)));
  for (Element a = 0; a < alg.size(); ++a) {
    ++r.de2.points;
    const bool lhs = half.matrix().is_designated(a);
    const bool rhs = evaluate(back, alg, {kXY, {a, a}}) == f.one;
    if (lhs != rhs) {
      r.de2.failures.push_back("at " + show(alg, a) + ": " +
                               (lhs ? "designated" : "not designated") +
                               " but D1(D1 x | Dm x) " + (rhs ? "= 1" : "!= 1"));
    }
  }
  for (const auto& rule : rule_corpus(alg.signature(), corpus)) {
    ++r.de1.instances;
    const bool lhs =
        entails(one.matrix(), rule.premises, rule.conclusion, options).valid;
    std::vector<Formula> premises;
    for (const auto& p : rule.premises) premises.push_back(delta1(p));
    const bool rhs =
        entails(half.matrix(), premises, delta1(rule.conclusion), options).valid;
    if (lhs) ++r.de1.positive;
    if (lhs != rhs) {
      r.de1.discrepancies.push_back(
          {rule, one.matrix().name() + " " + verdict_word(lhs) + ", " +
                     half.matrix().name() + " on D1 images " + verdict_word(rhs)});
    }
  }
  return r;
}

PointwiseCheck check_lukasiewicz_interderivability(
    const ExternalAlgebra& l3_external) {
  const auto& m = l3_external.matrix();
  check_bound(imp(var("x"), var("y")), m.algebra().signature());
  const auto x = var("x"), y = var("y");
  const std::vector<Formula> derived = {derived_implication(x, y),
                                        derived_implication(y, x)};
  const std::vector<Formula> native = {imp(x, y), imp(y, x)};
  PointwiseCheck c{"interderivability", 0, {}};
  auto check = [&](const std::vector<Formula>& from,
                   const std::vector<Formula>& to, const char* label) {
    for (const auto& g : to) {
      const auto v = entails(m, from, g);
      c.points += v.valuations_checked;
      if (!v.valid) {
        c.failures.push_back(std::string(label) + " fails for " + render(g) +
                             " at " +
                             v.countermodel->valuation.format(m.algebra()));
      }
    }
  };
  check(derived, native, "derived to native");
  check(native, derived, "native to derived");
  return c;
}

}  // namespace matlog
