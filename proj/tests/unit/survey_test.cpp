#include "doctest.h"
#include "matlog/registry.hpp"
#include "matlog/survey.hpp"

using namespace matlog;

TEST_CASE("survey of squares agrees on every carrier") {
  for (auto base : {builtin::sk(), builtin::wk(), builtin::l3()}) {
    CAPTURE(base.name());
    const auto r = survey(base, 2);
    CHECK(r.complete);
    CHECK(r.rows.size() == all_subuniverses(PowerAlgebra(base, 2),
                                            SubuniverseMode::exhaustive)
                               .subalgebras.size());
    CHECK(r.disagreements() == 0);
    CHECK(r.sep_inconsistencies() == 0);
    CHECK(r.join_disagreements() == 0);
    for (const auto& row : r.rows) {
      CHECK(row.scan_admits.has_value());
      if (!row.witness.empty()) CHECK_FALSE(row.admits);
    }
  }
}

TEST_CASE("every L3 carrier admits the expansion") {
  const auto r = survey(builtin::l3(), 2);
  for (const auto& row : r.rows) CHECK(row.admits);
}

TEST_CASE("thread count does not change the report") {
  SurveyOptions one;
  SurveyOptions four;
  four.threads = 4;
  const auto a = survey(builtin::wk(), 2, one);
  const auto b = survey(builtin::wk(), 2, four);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].carrier == b.rows[i].carrier);
    CHECK(a.rows[i].admits == b.rows[i].admits);
    CHECK(a.rows[i].witness == b.rows[i].witness);
  }
}

TEST_CASE("generated mode on a cube") {
  SurveyOptions o;
  o.mode = SubuniverseMode::generated;
  o.max_generators = 2;
  const auto r = survey(builtin::sk(), 3, o);
  CHECK_FALSE(r.complete);
  CHECK_FALSE(r.note.empty());
  CHECK(r.disagreements() == 0);
}

TEST_CASE("embedding search on NO rows") {
  SurveyOptions o;
  o.search_embeddings = true;
  o.embedding_exponent = 2;
  const auto r = survey(builtin::sk(), 2, o);
  for (const auto& row : r.rows) {
    if (!row.admits && row.size <= o.scan_limit) {
      CHECK(row.embeddings.has_value());
      CHECK(row.scope.find("embeddings") != std::string::npos);
    }
  }
}
