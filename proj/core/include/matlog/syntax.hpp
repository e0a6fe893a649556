#pragma once

// Propositional formulas, the ASCII surface grammar, substitution, and the
// rule / equation containers used by the semantics.
//
// Grammar (lowest to highest precedence):
//   formula := disj ("->" formula)?
//   disj    := conj ("|" conj)*
//   conj    := unary ("&" unary)*
//   unary   := ("~" | "D1" | "D0" | "Dm") unary | atom
//   atom    := ident | "(" formula ")"
//   ident   := [a-z][a-zA-Z0-9_]*

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "matlog/algebra.hpp"

namespace matlog {

// Operation names the surface syntax binds to.
namespace ops {
inline constexpr std::string_view kAnd = "and";
inline constexpr std::string_view kOr = "or";
inline constexpr std::string_view kNeg = "neg";
inline constexpr std::string_view kImp = "imp";
inline constexpr std::string_view kDelta1 = "D1";
}  // namespace ops

/// Immutable formula tree. Copies share structure.
class Formula {
 public:
  static Formula variable(std::string name);
  static Formula apply(std::string op, std::vector<Formula> args);

  bool is_variable() const noexcept { return node_->args.empty(); }
  /// Variable name or operation name.
  const std::string& symbol() const noexcept { return node_->symbol; }
  const std::vector<Formula>& args() const noexcept { return node_->args; }
  std::size_t depth() const noexcept { return node_->depth; }
  std::size_t node_count() const noexcept { return node_->nodes; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node {
    std::string symbol;
    std::vector<Formula> args;
    std::size_t depth = 0;
    std::size_t nodes = 1;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Convenience constructors for the classical connectives and Delta1.
Formula var(std::string name);
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula imp(Formula a, Formula b);
Formula delta1(Formula f);
/// D0 f := D1 ~f
Formula delta0(Formula f);
/// Dm f := ~(D1 f | D1 ~f)
Formula delta_half(Formula f);
/// The derived implication of external algebras:
/// D0 a | (Dm a & (Dm b | D1 b)) | (D1 a & D1 b)
Formula derived_implication(Formula a, Formula b);

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

struct ParseOptions {
  /// When the signature has D1 but no "imp", expand "->" to the derived
  /// implication instead of reporting an unbound operation.
  bool derived_implication = true;
};

/// Parses `text` and checks every operation against `signature`.
Formula parse(std::string_view text, const Signature& signature,
              ParseOptions options = {});

/// Throws unless every operation occurring in f is in the signature with
/// matching arity.
void check_bound(const Formula& f, const Signature& signature);

/// Renders with minimal parentheses; parse(render(f)) == f for formulas over
/// the grammar's connectives.
std::string render(const Formula& f);

using Substitution = std::map<std::string, Formula>;

Formula substitute(const Formula& f, const Substitution& s);
/// (s2 after s1): x -> s1(x)[s2], plus s2 on variables outside s1's support.
Substitution compose(const Substitution& s1, const Substitution& s2);

/// Variables in left-to-right first-occurrence order.
std::vector<std::string> variables_of(const Formula& f);
/// Same order rule across several formulas, in sequence.
std::vector<std::string> variables_of(const std::vector<Formula>& fs);

/// All formulas over `variables` with depth <= max_depth, without duplicates.
/// Order: by depth, then operations in signature order, then argument tuples
/// in lexicographic order of earlier output positions.
std::vector<Formula> enumerate_formulas(
    const Signature& signature, const std::vector<std::string>& variables,
    std::size_t max_depth);

struct Rule {
  std::vector<Formula> premises;
  Formula conclusion;
};

struct Equation {
  Formula left;
  Formula right;
};

struct QuasiEquation {
  std::vector<Equation> premises;
  Equation conclusion;
};

std::string render(const Rule& r);
std::string render(const Equation& e);

}  // namespace matlog
