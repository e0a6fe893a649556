#include <functional>
#include <set>

#include "doctest.h"
#include "matlog/registry.hpp"
#include "matlog/structure.hpp"
#include "oracles.hpp"

using namespace matlog;

namespace {

const oracle::Ranks kRanks{0, 1, 2};

SubalgebraOfPower closure(const PowerAlgebra& p,
                          std::initializer_list<const char*> gens) {
  std::vector<Code> cs;
  for (const auto* g : gens) cs.push_back(p.parse(g));
  return subalgebra_closure(p, cs);
}

// The complete Boolean conucleus, if any, by trying every skeleton-valued map
// and checking the defining properties directly.
std::size_t count_complete_boolean(const SubalgebraOfPower& c) {
  const auto& p = c.power();
  const auto frame = frame_of(p);
  const auto skel = boolean_skeleton(c).elements;
  const auto& car = c.carrier();
  if (skel.empty()) return 0;
  const auto conj = p.base().operation_index("and");
  std::size_t count = 0;
  std::vector<Code> img(car.size());
  auto idx = [&](Code x) { return c.index_of(x); };
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == car.size()) {
      for (std::size_t a = 0; a < car.size(); ++a) {
        if (!order_leq(p, frame, img[a], car[a])) return;
        if (img[idx(img[a])] != img[a]) return;
        for (std::size_t b = 0; b < car.size(); ++b) {
          if (order_leq(p, frame, car[a], car[b]) &&
              !order_leq(p, frame, img[a], img[b])) {
            return;
          }
          const auto m = p.apply(conj, img[a], img[b]);
          if (!order_leq(p, frame, m, img[idx(p.apply(conj, car[a], car[b]))])) {
            return;
          }
        }
      }
      const std::set<Code> range(img.begin(), img.end());
      if (range != std::set<Code>(skel.begin(), skel.end())) return;
      for (auto a : car) {
        if (!range.count(pointwise_delta1(p, frame, a))) return;
      }
      ++count;
      return;
    }
    for (auto s : skel) {
      img[i] = s;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace

TEST_CASE("pointwise Delta1 is the greatest Boolean tuple below") {
  for (auto base : {builtin::sk(), builtin::wk(), builtin::l3()}) {
    for (std::size_t i = 1; i <= 3; ++i) {
      const PowerAlgebra p(base, i);
      const auto frame = frame_of(p);
      for (Code c = 0; c < p.size(); ++c) {
        const auto expect = oracle::max_boolean_below(p.decode(c), kRanks);
        CHECK(p.decode(pointwise_delta1(p, frame, c)) == expect);
      }
    }
  }
}

TEST_CASE("information order") {
  const PowerAlgebra p(builtin::sk(), 2);
  const auto f = frame_of(p);
  for (Code a = 0; a < p.size(); ++a) {
    for (Code b = 0; b < p.size(); ++b) {
      const auto x = p.decode(a), y = p.decode(b);
      CHECK(order_leq(p, f, a, b) ==
            (kRanks.leq(x[0], y[0]) && kRanks.leq(x[1], y[1])));
    }
  }
  const std::vector<Element> one = {0};
  const std::vector<Element> two = {0, 0};
  CHECK_THROWS_AS(order_leq(f, one, two), Error);
}

TEST_CASE("diagonal of SK^2") {
  const PowerAlgebra p(builtin::sk(), 2);
  const auto c = closure(p, {"(0,0)", "(n,n)"});
  CHECK(c.size() == 3);
  CHECK(boolean_skeleton(c).elements ==
        std::vector<Code>{p.parse("(0,0)"), p.parse("(1,1)")});
  const auto v = admits_expansion(c);
  CHECK(v.admits);
  REQUIRE(v.sigma.has_value());
  CHECK((*v.sigma)(p.parse("(n,n)")) == p.parse("(0,0)"));
  REQUIRE(v.report.has_value());
  CHECK(v.report->is_complete_boolean());
  CHECK(check_sep(*v.sigma, c).holds);
  CHECK(check_join_criterion(c, *v.sigma).holds);
  REQUIRE(v.expanded.has_value());
  CHECK(v.expanded->carrier() == c.carrier());
  CHECK(v.expanded->power().base().signature().contains("D1"));
}

TEST_CASE("the four-element chain in SK^2") {
  const PowerAlgebra p(builtin::sk(), 2);
  const auto k4 = closure(p, {"(0,0)", "(0,n)"});
  CHECK(k4.format() == "{(0,0), (0,n), (1,n), (1,1)}");
  const auto& car = k4.carrier();
  for (std::size_t i = 0; i < car.size(); ++i) {
    for (std::size_t j = 0; j < car.size(); ++j) {
      const auto meet = p.apply(p.base().operation_index("and"), car[i], car[j]);
      CHECK((meet == car[i] || meet == car[j]));
    }
  }
  const auto v = admits_expansion(k4);
  CHECK_FALSE(v.admits);
  REQUIRE(v.escape.has_value());
  CHECK(p.format(v.escape->first) == "(1,n)");
  CHECK(p.format(v.escape->second) == "(1,0)");
  REQUIRE(v.sep_on_projection.has_value());
  CHECK_FALSE(v.sep_on_projection->holds);
  REQUIRE(v.sep_on_projection->violation.has_value());
  CHECK(p.format(v.sep_on_projection->violation->first) == "(0,n)");
  CHECK(p.format(v.sep_on_projection->violation->second) == "(1,n)");
  CHECK(count_complete_boolean(k4) == 0);

  const auto alone = closure(p, {"(0,n)"});
  CHECK(alone.format() == "{(0,n), (1,n)}");
  CHECK(boolean_skeleton(alone).elements.empty());
  CHECK(admits_expansion(alone).reason == "empty skeleton");
}

TEST_CASE("verdicts agree with the brute-force conucleus count") {
  for (auto base : {builtin::sk(), builtin::wk(), builtin::l3()}) {
    const PowerAlgebra p(base, 2);
    for (const auto& c : all_subuniverses(p, SubuniverseMode::exhaustive).subalgebras) {
      CAPTURE(c.format());
      const auto n = count_complete_boolean(c);
      CHECK(n <= 1);
      CHECK(admits_expansion(c).admits == (n == 1));
      CHECK(scan_boolean_conuclei(c, {.complete = true}).matches == n);
    }
  }
}

TEST_CASE("canonical sigma fixes the skeleton and lands in it") {
  for (auto base : {builtin::sk(), builtin::wk()}) {
    const PowerAlgebra p(base, 2);
    const auto frame = frame_of(p);
    for (const auto& c : all_subuniverses(p, SubuniverseMode::exhaustive).subalgebras) {
      const auto s = canonical_sigma(c);
      CHECK(s.map.has_value() != s.escape.has_value());
      if (!s.map) {
        CHECK_FALSE(c.contains(s.escape->second));
        CHECK(pointwise_delta1(p, frame, s.escape->first) == s.escape->second);
        continue;
      }
      const auto skel = boolean_skeleton(c);
      for (auto a : c.carrier()) {
        CHECK(skel.contains((*s.map)(a)));
        if (skel.contains(a)) CHECK((*s.map)(a) == a);
      }
    }
  }
}

TEST_CASE("conucleus property checks report witnesses") {
  const PowerAlgebra p(builtin::sk(), 1);
  const SubalgebraOfPower c(p, {0, 1, 2});
  const auto id = UnaryMapOnCarrier(c, {0, 1, 2});
  const auto r = check_conucleus(id, c);
  CHECK(r.is_conucleus());
  CHECK_FALSE(r.boolean.holds);
  CHECK(r.boolean.witness == std::vector<Code>{1});

  const auto up = UnaryMapOnCarrier(c, {2, 2, 2});
  const auto u = check_conucleus(up, c);
  CHECK_FALSE(u.deflationary.holds);
  CHECK(u.deflationary.witness == std::vector<Code>{0});

  const auto d1 = UnaryMapOnCarrier(c, {0, 0, 2});
  CHECK(check_conucleus(d1, c).is_complete_boolean());

  CHECK_THROWS_AS(UnaryMapOnCarrier(c, {0, 0}), Error);
  CHECK_THROWS_AS(UnaryMapOnCarrier::from_pairs(c, {{0, 0}, {2, 2}}), Error);
  CHECK_THROWS_AS(UnaryMapOnCarrier::from_pairs(c, {{0, 0}, {0, 2}, {1, 0}, {2, 2}}),
                  Error);
  CHECK(UnaryMapOnCarrier::from_pairs(c, {{2, 2}, {1, 0}, {0, 0}}) == d1);
  CHECK(d1.range() == std::vector<Code>{0, 2});
}

TEST_CASE("separation violations") {
  const PowerAlgebra p(builtin::sk(), 1);
  const SubalgebraOfPower c(p, {0, 1, 2});
  const auto flat = UnaryMapOnCarrier(c, {0, 0, 0});
  const auto s = check_sep(flat, c);
  CHECK_FALSE(s.holds);
  REQUIRE(s.violation.has_value());
  CHECK(s.violation->first == 0);
  CHECK(s.violation->second == 1);
}

TEST_CASE("gate for the join criterion") {
  for (auto base : {builtin::sk(), builtin::wk(), builtin::l3()}) {
    const auto o = base.operation_index("or");
    CHECK(join_gate(base) == (base.apply(o, 0, 1) != 0));
  }
  const auto flat = make_algebra({"F",
                                  {"0", "n", "1"},
                                  {{"and", 2, {0, 0, 0, 0, 1, 1, 0, 1, 2}},
                                   {"or", 2, {0, 0, 2, 0, 1, 2, 2, 2, 2}},
                                   {"neg", 1, {2, 1, 0}}}});
  CHECK_FALSE(join_gate(flat));
  const PowerAlgebra p(flat, 1);
  const SubalgebraOfPower c(p, {0, 1, 2});
  CHECK_THROWS_AS(check_join_criterion(c, UnaryMapOnCarrier(c, {0, 0, 2})), Error);
}

TEST_CASE("skeleton projection") {
  const PowerAlgebra p(builtin::sk(), 2);
  const auto k4 = closure(p, {"(0,0)", "(0,n)"});
  const auto proj = skeleton_projection(k4);
  REQUIRE(proj.has_value());
  CHECK((*proj)(p.parse("(0,n)")) == p.parse("(0,0)"));
  CHECK((*proj)(p.parse("(1,n)")) == p.parse("(0,0)"));
  CHECK((*proj)(p.parse("(1,1)")) == p.parse("(1,1)"));
}

TEST_CASE("embedding search finds the diagonal copy of SK") {
  const PowerAlgebra p(builtin::sk(), 1);
  const SubalgebraOfPower c(p, {0, 1, 2});
  const auto e = search_embeddings(c, 2);
  CHECK(e.homomorphisms > 0);
  CHECK(e.found_expandable);
}
