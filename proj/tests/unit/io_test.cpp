#include <filesystem>

#include "doctest.h"
#include "matlog/io.hpp"
#include "matlog/registry.hpp"
#include "matlog/semantics.hpp"

using namespace matlog;

TEST_CASE("built-in matrices match the shipped files byte for byte") {
  for (const auto& e : all_logics()) {
    CAPTURE(e.name);
    auto file = e.name;
    std::replace(file.begin(), file.end(), '/', '-');
    const auto text = read_file(data_dir() + "/logics/" + file + ".json");
    CHECK(text == to_json(e.matrix));
    const auto m = matrix_from_json(text);
    CHECK(m.name() == e.name);
    CHECK(m.algebra().same_structure(e.matrix.algebra()));
    CHECK(m.designated() == e.matrix.designated());
  }
}

TEST_CASE("round trip through JSON") {
  const auto ext = build_external(resolve_logic("J3")).matrix();
  const auto back = matrix_from_json(to_json(ext));
  CHECK(back.algebra().same_structure(ext.algebra()));
  CHECK(to_json(back) == to_json(ext));

  const auto alg = algebra_from_json(to_json(builtin::wk()));
  CHECK(alg.same_structure(builtin::wk()));
  CHECK(to_json(builtin::wk()).find("designated") == std::string::npos);
}

TEST_CASE("save and load") {
  const auto dir = std::filesystem::temp_directory_path() / "matlog_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "k3.json").string();
  save_matrix(resolve_logic("K3"), path);
  const auto m = load_matrix(path);
  CHECK(to_json(m) == to_json(resolve_logic("K3")));
  CHECK(resolve_logic(path).designated() == std::vector<Element>{2});
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(read_file((dir / "missing.json").string()), Error);
}

TEST_CASE("malformed matrix files") {
  CHECK_THROWS_AS(matrix_from_json("{"), Error);
  CHECK_THROWS_AS(matrix_from_json(R"j({"name":"X","universe":["a"]})j"), Error);
  CHECK_THROWS_AS(
      matrix_from_json(R"j({"name":"X","universe":["a","b"],
        "operations":[{"name":"f","arity":1,"table":["a","c"]}],"designated":["a"]})j"),
      Error);
  CHECK_THROWS_AS(
      matrix_from_json(R"j({"name":"X","universe":["a","b"],
        "operations":[{"name":"f","arity":1,"table":["a","b"]}],"designated":["z"]})j"),
      Error);
  CHECK_THROWS_AS(
      matrix_from_json(R"j({"name":"X","universe":["a","b"],
        "operations":[{"name":"f","arity":"one","table":["a","b"]}],"designated":[]})j"),
      Error);
}

TEST_CASE("carrier files") {
  const auto file = carrier_from_json(R"j({"algebra": "SK", "exponent": 2,
      "carrier": ["(0,0)", "(n,n)", "(1,1)"],
      "sigma": [["(0,0)", "(0,0)"], ["(n,n)", "(0,0)"], ["(1,1)", "(1,1)"]]})j");
  CHECK(file.subalgebra.size() == 3);
  REQUIRE(file.sigma.has_value());
  CHECK(file.sigma->size() == 3);
  const auto& p = file.subalgebra.power();
  CHECK((*file.sigma)[1] == std::pair<Code, Code>{p.parse("(n,n)"), p.parse("(0,0)")});

  const auto bare = carrier_from_json(
      R"j({"algebra": "WK", "exponent": 1, "carrier": ["0", "n", "1"]})j");
  CHECK_FALSE(bare.sigma.has_value());
  CHECK_THROWS_AS(carrier_from_json(
                      R"j({"algebra": "SK", "exponent": 2, "carrier": ["(0,n)"]})j"),
                  Error);
  CHECK_THROWS_AS(carrier_from_json(R"j({"algebra": "SK", "exponent": 1,
      "carrier": ["0", "n", "1"], "sigma": [["0"]]})j"),
                  Error);
}

TEST_CASE("rule corpus format") {
  const auto sig = builtin::b2().signature();
  const auto rules = parse_rule_corpus(
      "# comment\n\nmp: p, ~p | q |- q\nem:  |- p | ~p\n", sig);
  REQUIRE(rules.size() == 2);
  CHECK(rules[0].name == "mp");
  CHECK(render(rules[0].rule) == "p, ~p | q |- q");
  CHECK(rules[1].rule.premises.empty());
  CHECK_THROWS_AS(parse_rule_corpus("no turnstile: p\n", sig), Error);
  CHECK_THROWS_AS(parse_rule_corpus("bad: p & |- q\n", sig), Error);
  CHECK_THROWS_AS(parse_rule_corpus("p |- q\n", sig), Error);
}

TEST_CASE("shipped classical rules are classically valid") {
  const auto b2 = builtin::b2();
  const auto rules = load_rule_corpus(data_dir() + "/classical_rules.txt", b2.signature());
  CHECK(rules.size() == 20);
  const Matrix cl(b2, {1});
  for (const auto& r : rules) {
    CAPTURE(r.name);
    CHECK(entails(cl, r.rule.premises, r.rule.conclusion).valid);
  }
}
