#include <random>
#include <set>

#include "doctest.h"
#include "matlog/external.hpp"
#include "matlog/registry.hpp"
#include "matlog/semantics.hpp"
#include "oracles.hpp"

using namespace matlog;

namespace {

std::set<Element> designated_set(const Matrix& m) {
  return {m.designated().begin(), m.designated().end()};
}

std::vector<Matrix> matrices() {
  std::vector<Matrix> out;
  for (const auto& e : all_logics()) out.push_back(e.matrix);
  out.push_back(build_external(resolve_logic("K3")).matrix());
  out.push_back(build_external(resolve_logic("PWK")).matrix());
  return out;
}

// First countermodel in lexicographic order over the first-occurrence
// variable order, by direct enumeration.
std::optional<oracle::Assignment> first_countermodel(const Matrix& m,
                                                     const std::vector<Formula>& ps,
                                                     const Formula& c) {
  auto all = ps;
  all.push_back(c);
  const auto vars = variables_of(all);
  const auto d = designated_set(m);
  std::optional<oracle::Assignment> found;
  oracle::for_each_assignment(vars, m.algebra().size(), [&](const auto& v) {
    if (found) return;
    for (const auto& p : ps) {
      if (!d.count(oracle::eval(p, m.algebra(), v))) return;
    }
    if (!d.count(oracle::eval(c, m.algebra(), v))) found = v;
  });
  return found;
}

}  // namespace

TEST_CASE("evaluation agrees with the recursive evaluator") {
  for (const auto& m : matrices()) {
    const auto& a = m.algebra();
    CAPTURE(m.name());
    const auto fs = enumerate_formulas(a.signature(), {"p", "q"}, 2);
    const std::vector<std::string> order = {"p", "q"};
    for (const auto& f : fs) {
      const CompiledFormula cf(f, a, order);
      std::vector<Element> scratch;
      oracle::for_each_assignment(order, a.size(), [&](const auto& v) {
        const Valuation val{order, {v.at("p"), v.at("q")}};
        const auto expect = oracle::eval(f, a, v);
        CHECK(evaluate(f, a, val) == expect);
        const Element vals[] = {v.at("p"), v.at("q")};
        CHECK(cf.run(vals, scratch) == expect);
      });
    }
  }
}

TEST_CASE("value_table enumerates valuations lexicographically") {
  const auto a = builtin::sk();
  const auto f = parse("p & ~q", a.signature());
  const auto t = value_table(f, a, {"p", "q"});
  REQUIRE(t.size() == 9);
  for (Element p = 0; p < 3; ++p) {
    for (Element q = 0; q < 3; ++q) {
      CHECK(t[p * 3 + q] == oracle::eval(f, a, {{"p", p}, {"q", q}}));
    }
  }
}

TEST_CASE("unassigned variables throw") {
  const auto a = builtin::sk();
  CHECK_THROWS_AS(evaluate(parse("p & q", a.signature()), a, {{"p"}, {0}}), Error);
}

TEST_CASE("entails agrees with brute force, including the countermodel") {
  std::mt19937 rng(11);
  for (const auto& m : matrices()) {
    CAPTURE(m.name());
    const auto pool = enumerate_formulas(m.algebra().signature(), {"p", "q", "r"}, 1);
    for (int i = 0; i < 150; ++i) {
      std::vector<Formula> ps;
      const auto k = rng() % 3;
      for (std::size_t j = 0; j < k; ++j) ps.push_back(pool[rng() % pool.size()]);
      const auto c = pool[rng() % pool.size()];
      const auto v = entails(m, ps, c);
      const auto expect = first_countermodel(m, ps, c);
      CHECK(v.valid == !expect.has_value());
      CHECK(v.valid == oracle::entails(m.algebra(), designated_set(m), ps, c));
      if (expect) {
        REQUIRE(v.countermodel.has_value());
        const auto& cm = *v.countermodel;
        for (std::size_t x = 0; x < cm.valuation.variables.size(); ++x) {
          CHECK(cm.valuation.values[x] == expect->at(cm.valuation.variables[x]));
        }
        CHECK_FALSE(m.is_designated(cm.conclusion_value));
        for (auto pv : cm.premise_values) CHECK(m.is_designated(pv));
      }
    }
  }
}

TEST_CASE("thread count does not change verdicts") {
  const auto m = resolve_logic("LP");
  const auto a = m.algebra().signature();
  std::vector<Formula> ps;
  std::string big;
  for (int i = 0; i < 9; ++i) {
    const auto v = "p" + std::to_string(i);
    ps.push_back(parse(v + " | ~" + v, a));
    big += (i ? " & " : "") + v;
  }
  const auto c = parse(big, a);
  const auto one = entails(m, ps, c, {.var_cap = 14, .threads = 1});
  const auto four = entails(m, ps, c, {.var_cap = 14, .threads = 4});
  CHECK(one.valid == four.valid);
  REQUIRE(one.countermodel.has_value());
  REQUIRE(four.countermodel.has_value());
  CHECK(one.countermodel->valuation.values == four.countermodel->valuation.values);
}

TEST_CASE("the variable cap is enforced") {
  const auto m = resolve_logic("K3");
  const auto f = parse("a | b | c | d", m.algebra().signature());
  CHECK_THROWS_AS(is_theorem(m, f, {.var_cap = 3}), Error);
  CHECK_NOTHROW(is_theorem(m, f, {.var_cap = 4}));
}

TEST_CASE("disjunctive syllogism fails in LP at p = n, q = 0") {
  const auto m = resolve_logic("LP");
  const auto& a = m.algebra();
  const std::vector<Formula> ps = {parse("p", a.signature()),
                                   parse("~p | q", a.signature())};
  const auto v = entails(m, ps, parse("q", a.signature()));
  CHECK_FALSE(v.valid);
  REQUIRE(v.countermodel.has_value());
  CHECK(v.countermodel->valuation.format(a) == "p=n, q=0");
  CHECK(resolve_logic("K3").algebra().same_structure(a));
  CHECK(entails(resolve_logic("K3"), ps, parse("q", a.signature())).valid);
}

TEST_CASE("theorems of K3, LP and B") {
  const auto lp = resolve_logic("LP");
  const auto k3 = resolve_logic("K3");
  const auto em = parse("p | ~p", lp.algebra().signature());
  CHECK(is_theorem(lp, em).valid);
  CHECK_FALSE(is_theorem(k3, em).valid);

  const auto b = resolve_logic("B");
  for (const auto& f : enumerate_formulas(b.algebra().signature(), {"p", "q"}, 2)) {
    CHECK_FALSE(is_theorem(b, f).valid);
  }
}

TEST_CASE("antitheorems agree with brute force") {
  for (const auto& m : matrices()) {
    CAPTURE(m.name());
    const auto pool = enumerate_formulas(m.algebra().signature(), {"p", "q"}, 1);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i; j < pool.size(); ++j) {
        const std::vector<Formula> g = {pool[i], pool[j]};
        const auto v = is_antitheorem(m, g);
        CHECK(v.antitheorem ==
              !oracle::jointly_designated(m.algebra(), designated_set(m), g));
        if (!v.antitheorem) {
          REQUIRE(v.witness.has_value());
          for (const auto& f : g) {
            CHECK(m.is_designated(evaluate(f, m.algebra(), *v.witness)));
          }
        }
      }
    }
  }
  const auto k3 = resolve_logic("K3");
  CHECK_FALSE(is_antitheorem(k3, std::vector<Formula>{}).antitheorem);
  const std::vector<Formula> contradiction = {
      parse("p & ~p", k3.algebra().signature())};
  CHECK(is_antitheorem(k3, contradiction).antitheorem);
  CHECK_FALSE(is_antitheorem(resolve_logic("LP"), contradiction).antitheorem);
  const auto ke = build_external(k3).matrix();
  CHECK(is_antitheorem(ke, std::vector<Formula>{parse("D1 p & ~D1 p",
                                                      ke.algebra().signature())})
            .antitheorem);
}

TEST_CASE("equational consequence agrees with brute force") {
  const auto a = builtin::wk();
  const auto& s = a.signature();
  const auto pool = enumerate_formulas(s, {"x", "y"}, 1);
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    std::vector<Equation> premises;
    if (rng() % 2) premises.push_back({pool[rng() % pool.size()], pool[rng() % pool.size()]});
    const Equation concl{pool[rng() % pool.size()], pool[rng() % pool.size()]};
    std::vector<Formula> all = {concl.left, concl.right};
    for (const auto& e : premises) {
      all.push_back(e.left);
      all.push_back(e.right);
    }
    bool expect = true;
    oracle::for_each_assignment(oracle::vars_of(all), 3, [&](const auto& v) {
      for (const auto& e : premises) {
        if (oracle::eval(e.left, a, v) != oracle::eval(e.right, a, v)) return;
      }
      if (oracle::eval(concl.left, a, v) != oracle::eval(concl.right, a, v)) {
        expect = false;
      }
    });
    const auto got = eq_consequence(a, premises, concl);
    CHECK(got.valid == expect);
    if (!got.valid) CHECK(got.counterexample.has_value());
  }
  // Absorption fails in WK at x = 0, y = n.
  const Equation absorption{parse("x & (x | y)", s), var("x")};
  CHECK_FALSE(eq_consequence(a, std::vector<Equation>{}, absorption).valid);
  CHECK(eq_consequence(builtin::sk(), std::vector<Equation>{}, absorption).valid);
}
