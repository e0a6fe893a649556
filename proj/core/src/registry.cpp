#include "matlog/registry.hpp"

#include <cstdlib>
#include <filesystem>

#include "matlog/io.hpp"
#include "matlog/syntax.hpp"

#ifndef MATLOG_DEFAULT_DATA_DIR
#define MATLOG_DEFAULT_DATA_DIR "data"
#endif
#ifndef MATLOG_INSTALL_DATA_DIR
#define MATLOG_INSTALL_DATA_DIR "data"
#endif

namespace matlog {

namespace {

const std::vector<std::string> kThree = {"0", "n", "1"};
const std::vector<Element> kNeg3 = {2, 1, 0};
const std::vector<Element> kKleeneAnd = {0, 0, 0, 0, 1, 1, 0, 1, 2};
const std::vector<Element> kKleeneOr = {0, 1, 2, 1, 1, 2, 2, 2, 2};

OperationSpec binary(std::string_view name, std::vector<Element> t) {
  return {std::string(name), 2, std::move(t)};
}

OperationSpec negation(std::vector<Element> t) {
  return {std::string(ops::kNeg), 1, std::move(t)};
}

std::vector<Element> demorgan_or(const std::vector<Element>& conj,
                                 const std::vector<Element>& neg) {
  std::vector<Element> out(9);
  for (Element a = 0; a < 3; ++a) {
    for (Element b = 0; b < 3; ++b) {
      out[a * 3 + b] = neg[conj[neg[a] * 3 + neg[b]]];
    }
  }
  return out;
}

std::string suffix(Variant v) {
  return v == Variant::demorgan ? "/demorgan" : "";
}

}  // namespace

namespace builtin {

FiniteAlgebra sk() {
  return make_algebra({"SK",
                       kThree,
                       {binary(ops::kAnd, kKleeneAnd), binary(ops::kOr, kKleeneOr),
                        negation(kNeg3)}});
}

FiniteAlgebra wk() {
  return make_algebra({"WK",
                       kThree,
                       {binary(ops::kAnd, {0, 1, 0, 1, 1, 1, 0, 1, 2}),
                        binary(ops::kOr, {0, 1, 2, 1, 1, 1, 2, 1, 2}),
                        negation(kNeg3)}});
}

FiniteAlgebra l3() {
  return make_algebra({"L3",
                       kThree,
                       {binary(ops::kAnd, kKleeneAnd), binary(ops::kOr, kKleeneOr),
                        binary(ops::kImp, {2, 2, 2, 1, 2, 2, 0, 1, 2}),
                        negation(kNeg3)}});
}

FiniteAlgebra s3(Variant v) {
  const std::vector<Element> conj = {0, 0, 0, 0, 1, 2, 0, 2, 2};
  const auto disj = v == Variant::demorgan
                        ? demorgan_or(conj, kNeg3)
                        : std::vector<Element>{2, 0, 2, 0, 1, 2, 2, 2, 2};
  return make_algebra({"S3" + suffix(v),
                       kThree,
                       {binary(ops::kAnd, conj), binary(ops::kOr, disj),
                        negation(kNeg3)}});
}

FiniteAlgebra z3(Variant v) {
  const auto disj =
      v == Variant::demorgan ? demorgan_or(kKleeneAnd, kNeg3) : kKleeneOr;
  return make_algebra({"Z3" + suffix(v),
                       kThree,
                       {binary(ops::kAnd, kKleeneAnd), binary(ops::kOr, disj),
                        binary(ops::kImp, {2, 2, 2, 0, 1, 2, 0, 0, 2}),
                        negation(kNeg3)}});
}

FiniteAlgebra b2() {
  return make_algebra({"B2",
                       {"0", "1"},
                       {binary(ops::kAnd, {0, 0, 0, 1}),
                        binary(ops::kOr, {0, 1, 1, 1}), negation({1, 0})}});
}

}  // namespace builtin

namespace {

constexpr Element kHalf = 1, kOne = 2;

LogicEntry entry(std::string name, FiniteAlgebra a, std::string variant,
                 std::vector<Element> designated) {
  auto alg = a.name();
  return {name, alg, std::move(variant),
          Matrix(std::move(a), std::move(designated), name)};
}

std::vector<LogicEntry> make_standard() {
  using namespace builtin;
  const auto p = Variant::as_printed;
  return {
      entry("K3", sk(), "", {kOne}),
      entry("LP", sk(), "", {kHalf, kOne}),
      entry("B", wk(), "", {kOne}),
      entry("PWK", wk(), "", {kHalf, kOne}),
      entry("RM3", z3(p), "as-printed", {kHalf, kOne}),
      entry("S", s3(p), "as-printed", {kHalf, kOne}),
      entry("St", s3(p), "as-printed", {kOne}),
      entry("L3", l3(), "", {kOne}),
      entry("J3", l3(), "", {kHalf, kOne}),
  };
}

std::vector<LogicEntry> make_all() {
  using namespace builtin;
  auto out = make_standard();
  const auto d = Variant::demorgan;
  out.push_back(entry("RM3/demorgan", z3(d), "demorgan", {kHalf, kOne}));
  out.push_back(entry("S/demorgan", s3(d), "demorgan", {kHalf, kOne}));
  out.push_back(entry("St/demorgan", s3(d), "demorgan", {kOne}));
  out.push_back(entry("CL", b2(), "", {1}));
  return out;
}

std::string_view strip_external(std::string_view name) {
  if (name.size() > 2 && name.ends_with("^e")) return name.substr(0, name.size() - 2);
  if (name.size() > 1 && name.ends_with("e")) return name.substr(0, name.size() - 1);
  return name;
}

}  // namespace

const std::vector<LogicEntry>& standard_logics() {
  static const auto logics = make_standard();
  return logics;
}

const std::vector<LogicEntry>& all_logics() {
  static const auto logics = make_all();
  return logics;
}

bool is_external_name(std::string_view name) {
  return !name.ends_with(".json") && strip_external(name) != name;
}

FiniteAlgebra resolve_algebra(std::string_view name) {
  using namespace builtin;
  const auto base = strip_external(name);
  const bool external = base != name;
  const std::vector<FiniteAlgebra> known = {
      sk(), wk(), l3(), s3(), s3(Variant::demorgan), z3(), z3(Variant::demorgan),
      b2()};
  for (const auto& a : known) {
    if (a.name() == name) return a;
  }
  if (external) {
    for (const auto& a : known) {
      if (a.name() != base || a.size() != 3) continue;
      return build_external(Matrix(a, {kOne})).algebra();
    }
  }
  std::string names;
  for (const auto& a : known) names += " " + a.name();
  throw Error("unknown algebra '" + std::string(name) + "'; known:" + names +
              " (append ^e for external versions)");
}

Matrix resolve_logic(std::string_view name) {
  if (name.ends_with(".json")) return load_matrix(std::string(name));
  for (const auto& e : all_logics()) {
    if (e.name == name) return e.matrix;
  }
  const auto base = strip_external(name);
  if (base != name) {
    for (const auto& e : all_logics()) {
      if (e.name == base) return build_external(e.matrix).matrix();
    }
  }
  std::string names;
  for (const auto& e : all_logics()) names += " " + e.name;
  throw Error("unknown logic '" + std::string(name) + "'; known:" + names +
              " (append ^e or e for external versions, or pass a .json file)");
}

std::string data_dir() {
  if (const char* env = std::getenv("MATLOG_DATA_DIR"); env && *env) return env;
  // The source tree when building in place, the install prefix otherwise.
  if (std::filesystem::is_directory(MATLOG_DEFAULT_DATA_DIR)) return MATLOG_DEFAULT_DATA_DIR;
  return MATLOG_INSTALL_DATA_DIR;
}

}  // namespace matlog
