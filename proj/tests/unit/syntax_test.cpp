#include <random>
#include <set>

#include "doctest.h"
#include "matlog/external.hpp"
#include "matlog/registry.hpp"
#include "matlog/syntax.hpp"
#include "oracles.hpp"

using namespace matlog;

namespace {

const Signature& kleene() {
  static const auto s = builtin::sk().signature();
  return s;
}

const Signature& lukasiewicz() {
  static const auto s = builtin::l3().signature();
  return s;
}

const Signature& external_sk() {
  static const auto s =
      build_external(Matrix(builtin::sk(), {2})).algebra().signature();
  return s;
}

}  // namespace

TEST_CASE("precedence and associativity") {
  const auto p = var("p"), q = var("q"), r = var("r");
  CHECK(parse("p | q & r", kleene()) == disj(p, conj(q, r)));
  CHECK(parse("p & q | r", kleene()) == disj(conj(p, q), r));
  CHECK(parse("~p & q", kleene()) == conj(neg(p), q));
  CHECK(parse("~(p & q)", kleene()) == neg(conj(p, q)));
  CHECK(parse("p | q | r", kleene()) == disj(disj(p, q), r));
  CHECK(parse("p -> q -> r", lukasiewicz()) == imp(p, imp(q, r)));
  CHECK(parse("p | q -> r", lukasiewicz()) == imp(disj(p, q), r));
  CHECK(parse("~~p", kleene()) == neg(neg(p)));
  CHECK(parse("  ( p )  ", kleene()) == p);
}

TEST_CASE("external operators") {
  const auto p = var("p");
  CHECK(parse("D1 p", external_sk()) == delta1(p));
  CHECK(parse("D0 p", external_sk()) == delta1(neg(p)));
  CHECK(parse("Dm p", external_sk()) ==
        neg(disj(delta1(p), delta1(neg(p)))));
  CHECK(parse("D1 p | ~D1 p", external_sk()) == disj(delta1(p), neg(delta1(p))));
  CHECK(parse("p -> q", external_sk()) == derived_implication(p, var("q")));
  CHECK_THROWS_AS(parse("p -> q", external_sk(), {.derived_implication = false}),
                  ParseError);
  CHECK_THROWS_AS(parse("D1 p", kleene()), ParseError);
  CHECK_THROWS_AS(parse("p -> q", kleene()), ParseError);
}

TEST_CASE("parse errors carry a position") {
  auto position = [](std::string_view text) {
    try {
      parse(text, kleene());
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string_view::npos;
  };
  CHECK(position("p & ") == 4);
  CHECK(position("p $ q") == 2);
  CHECK(position("(p | q") == 6);
  CHECK(position("p q") == 2);
  CHECK(position("") == 0);
  CHECK(position("P") == 0);
}

TEST_CASE("render is inverse to parse on enumerated formulas") {
  for (const auto* sig : {&kleene(), &lukasiewicz(), &external_sk()}) {
    for (const auto& f : enumerate_formulas(*sig, {"p", "q"}, 2)) {
      CHECK(parse(render(f), *sig) == f);
    }
  }
  CHECK(render(parse("(p | q) & ~(r -> p)", lukasiewicz())) ==
        "(p | q) & ~(r -> p)");
}

TEST_CASE("enumeration count matches the recursive count") {
  const std::vector<std::size_t> kleene_arities = {2, 2, 1};
  const std::vector<std::size_t> l3_arities = {2, 2, 2, 1};
  for (std::size_t d = 0; d <= 3; ++d) {
    for (std::size_t v = 1; v <= 2; ++v) {
      std::vector<std::string> vars = {"p", "q"};
      vars.resize(v);
      const auto fs = enumerate_formulas(kleene(), vars, d);
      CHECK(fs.size() == oracle::formula_count(v, kleene_arities, d));
      CHECK(std::set<Formula>(fs.begin(), fs.end()).size() == fs.size());
      for (const auto& f : fs) CHECK(f.depth() <= d);
      if (d <= 2) {
        CHECK(enumerate_formulas(lukasiewicz(), vars, d).size() ==
              oracle::formula_count(v, l3_arities, d));
      }
    }
  }
}

TEST_CASE("enumeration order is by depth") {
  const auto fs = enumerate_formulas(kleene(), {"p", "q"}, 2);
  for (std::size_t i = 1; i < fs.size(); ++i) {
    CHECK(fs[i - 1].depth() <= fs[i].depth());
  }
  CHECK(fs[0] == var("p"));
  CHECK(fs[1] == var("q"));
}

TEST_CASE("variables in first-occurrence order") {
  const auto f = parse("(r | p) & ~(q | r)", kleene());
  CHECK(variables_of(f) == std::vector<std::string>{"r", "p", "q"});
  const std::vector<Formula> fs = {parse("q", kleene()), f};
  CHECK(variables_of(fs) == std::vector<std::string>{"q", "r", "p"});
}

TEST_CASE("substitution and composition") {
  const auto p = var("p"), q = var("q");
  const auto f = parse("p & ~q", kleene());
  const Substitution s1 = {{"p", disj(q, p)}};
  const Substitution s2 = {{"q", neg(p)}, {"p", q}};
  CHECK(substitute(f, s1) == conj(disj(q, p), neg(q)));
  CHECK(substitute(substitute(f, s1), s2) == substitute(f, compose(s1, s2)));

  std::mt19937 rng(7);
  const auto pool = enumerate_formulas(kleene(), {"p", "q"}, 2);
  for (int i = 0; i < 200; ++i) {
    const auto& g = pool[rng() % pool.size()];
    const Substitution a = {{"p", pool[rng() % pool.size()]}};
    const Substitution b = {{"p", pool[rng() % pool.size()]},
                            {"q", pool[rng() % pool.size()]}};
    CHECK(substitute(substitute(g, a), b) == substitute(g, compose(a, b)));
  }
}

TEST_CASE("formula construction validation") {
  CHECK_THROWS_AS(var("P"), Error);
  CHECK_THROWS_AS(var(""), Error);
  CHECK_THROWS_AS(Formula::apply("and", {}), Error);
  CHECK_THROWS_AS(check_bound(Formula::apply("and", {var("p")}), kleene()), Error);
  CHECK_NOTHROW(check_bound(parse("p & q", kleene()), kleene()));
  const auto f = parse("~(p & q)", kleene());
  CHECK(f.depth() == 2);
  CHECK(f.node_count() == 4);
}

TEST_CASE("rules and equations render") {
  const Rule r{{parse("p", kleene()), parse("~p | q", kleene())},
               parse("q", kleene())};
  CHECK(render(r) == "p, ~p | q |- q");
  const Rule t{{}, parse("p | ~p", kleene())};
  CHECK(render(t) == "|- p | ~p");
  CHECK(render(Equation{var("x"), parse("x & x", kleene())}) == "x = x & x");
}
