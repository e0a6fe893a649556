#include <set>

#include "doctest.h"
#include "matlog/metatheory.hpp"
#include "matlog/registry.hpp"
#include "oracles.hpp"

using namespace matlog;

namespace {

const CorpusOptions kSmall{.exhaustive_depth = 1, .max_premises = 1, .samples = 60};

std::vector<ExternalAlgebra> externals() {
  std::vector<ExternalAlgebra> out;
  for (const auto* n : {"K3", "LP", "B", "PWK", "RM3", "L3", "J3", "S/demorgan",
                        "St/demorgan", "RM3/demorgan"}) {
    out.push_back(build_external(resolve_logic(n)));
  }
  return out;
}

std::set<Element> designated_set(const Matrix& m) {
  return {m.designated().begin(), m.designated().end()};
}

}  // namespace

TEST_CASE("Delta1 images of classical rules hold in every external logic") {
  const auto b2 = builtin::b2();
  const auto rules = load_rule_corpus(data_dir() + "/classical_rules.txt", b2.signature());
  for (const auto& ext : externals()) {
    CAPTURE(ext.matrix().name());
    for (const auto& r : rules) {
      CAPTURE(r.name);
      const auto res = recapture(r.rule, ext);
      CHECK(res.verdict.valid);
      CHECK(oracle::entails(ext.algebra(), designated_set(ext.matrix()),
                            res.image.premises, res.image.conclusion));
    }
  }
}

TEST_CASE("recapture refuses classically invalid rules") {
  const auto sig = builtin::b2().signature();
  const Rule bad{{parse("p | q", sig)}, parse("p", sig)};
  CHECK_THROWS_AS(recapture(bad, build_external(resolve_logic("K3"))), Error);
}

TEST_CASE("without Delta1 the rules can fail") {
  const auto sig = builtin::b2().signature();
  const Rule ds{{parse("p | q", sig), parse("~p", sig)}, parse("q", sig)};
  const auto lpe = build_external(resolve_logic("LP"));
  CHECK_FALSE(entails(lpe.matrix(), ds.premises, ds.conclusion).valid);
  CHECK(recapture(ds, lpe).verdict.valid);
}

TEST_CASE("delta1_image replaces every variable") {
  const auto sig = builtin::b2().signature();
  const auto f = parse("p & ~(q | p)", sig);
  CHECK(delta1_image(f) ==
        conj(delta1(var("p")), neg(disj(delta1(var("q")), delta1(var("p"))))));
}

TEST_CASE("rule corpus size and determinism") {
  const auto sig = builtin::sk().signature();
  const CorpusOptions o{.exhaustive_depth = 1, .max_premises = 2, .samples = 25};
  const auto a = rule_corpus(sig, o);
  const auto b = rule_corpus(sig, o);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(render(a[i]) == render(b[i]));
  const auto f = oracle::formula_count(3, {2, 2, 1}, 1);
  CHECK(a.size() == f * (1 + f + f * (f + 1) / 2) + 25);
  for (const auto& r : a) {
    CHECK(r.premises.size() <= 2);
    for (const auto& p : r.premises) CHECK(p.depth() <= 3);
  }
}

TEST_CASE("algebraizability witnesses") {
  for (const auto& ext : externals()) {
    CAPTURE(ext.matrix().name());
    const auto t = standard_transformer(ext);
    CHECK(t.name == (ext.matrix().designated().size() == 1 ? tau_one().name
                                                           : tau_half().name));
    const auto r = check_alg_witnesses(ext, t, kSmall);
    CHECK(r.truth.passed());
    CHECK(r.truth.points == 3);
    CHECK(r.equality.passed());
    CHECK(r.equality.points == 9);
    CHECK(r.alg2.passed());
    CHECK(r.alg1.passed());
    CHECK(r.alg1.instances > 0);
  }
}

TEST_CASE("a wrong transformer is caught") {
  const auto k3e = build_external(resolve_logic("K3"));
  const auto sig = k3e.algebra().signature();
  Transformer t = tau_one();
  t.name = "x = x | ~x";
  t.tau = {{var("x"), parse("x | ~x", sig)}};
  const auto r = check_alg_witnesses(k3e, t, kSmall);
  CHECK_FALSE(r.truth.passed());

  Transformer empty = tau_one();
  empty.tau.clear();
  CHECK_THROWS_AS(check_alg_witnesses(k3e, empty, kSmall), Error);
  Transformer stray = tau_one();
  stray.rho = {parse("x | z", sig)};
  CHECK_THROWS_AS(check_alg_witnesses(k3e, stray, kSmall), Error);
}

TEST_CASE("transformer application") {
  const auto sig = build_external(resolve_logic("K3")).algebra().signature();
  const auto f = parse("p & q", sig);
  const auto eqs = apply_tau(tau_one(), f);
  REQUIRE(eqs.size() == 1);
  CHECK(eqs[0].left == f);
  CHECK(eqs[0].right == derived_implication(f, f));
  const auto rho = apply_rho(tau_one(), var("a"), var("b"));
  REQUIRE(rho.size() == 2);
  CHECK(rho[0] == derived_implication(var("a"), var("b")));
  CHECK(rho[1] == derived_implication(var("b"), var("a")));
}

TEST_CASE("constant-free tau for {1, n}") {
  for (const auto* n : {"LP", "PWK", "J3", "RM3"}) {
    CHECK(check_tau_half_replacement(build_external(resolve_logic(n))).passed());
  }
}

TEST_CASE("deduction-detachment sets") {
  for (const auto& ext : externals()) {
    CAPTURE(ext.matrix().name());
    const auto d = ext.matrix().designated().size() == 1 ? ddt_one() : ddt_half();
    const auto r = check_ddt_witness(ext, d, kSmall);
    CHECK(r.pointwise.passed());
    CHECK(r.pointwise.points == 9);
    CHECK(r.corpus.passed());
  }
  // Swapped sets fail.
  CHECK_FALSE(check_ddt_witness(build_external(resolve_logic("LP")), ddt_one(), kSmall)
                  .pointwise.passed());
  CHECK_FALSE(check_ddt_witness(build_external(resolve_logic("K3")), ddt_half(), kSmall)
                  .pointwise.passed());
}

TEST_CASE("Lukasiewicz implication is not a deduction-detachment set") {
  const auto l3e = build_external(resolve_logic("L3"));
  const DdtSet luk{"=>L", {imp(var("x"), var("y"))}};
  CHECK_FALSE(check_ddt_witness(l3e, luk, kSmall).passed());
  const auto& a = l3e.algebra();
  const auto i = a.operation_index("imp");
  CHECK(a.apply(i, 2, a.apply(i, 2, 1)) == 1);
  CHECK(evaluate(ddt_one().formulas.front(), a, {{"x", "y"}, {2, 1}}) == 0);
}

TEST_CASE("deductive equivalence of the pairs") {
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"K3", "LP"}, {"B", "PWK"}, {"St/demorgan", "S/demorgan"}, {"L3", "J3"}};
  for (const auto& [one, half] : pairs) {
    CAPTURE(one);
    const auto r = check_dedeq(build_external(resolve_logic(one)),
                               build_external(resolve_logic(half)), kSmall);
    CHECK(r.de2.passed());
    CHECK(r.de2.points == 3);
    CHECK(r.de1.passed());
  }
  CHECK_THROWS_AS(check_dedeq(build_external(resolve_logic("K3")),
                              build_external(resolve_logic("PWK")), kSmall),
                  Error);
  CHECK_THROWS_AS(check_dedeq(build_external(resolve_logic("LP")),
                              build_external(resolve_logic("K3")), kSmall),
                  Error);
}

TEST_CASE("derived and Lukasiewicz implications are interderivable in L3^e") {
  CHECK(check_lukasiewicz_interderivability(build_external(resolve_logic("L3")))
            .passed());
}
