#pragma once

// Matrix semantics: evaluation, consequence, theoremhood, antitheorems and
// equational consequence, all by exhaustive valuation scans.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matlog/algebra.hpp"
#include "matlog/syntax.hpp"

namespace matlog {

/// Assignment of elements to an ordered list of variables.
struct Valuation {
  std::vector<std::string> variables;
  std::vector<Element> values;

  Element at(std::string_view variable) const;
  std::string format(const FiniteAlgebra& algebra) const;
};

/// A formula lowered to a flat instruction list over table lookups. Variable
/// slots follow the order given at compile time.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, const FiniteAlgebra& algebra,
                  const std::vector<std::string>& variable_order);

  /// `values[i]` is the value of variable_order[i]. `scratch` is resized as
  /// needed and may be reused between calls.
  Element run(std::span<const Element> values,
              std::vector<Element>& scratch) const;
  Element run(std::span<const Element> values) const;

  std::size_t variable_count() const noexcept { return vars_; }

 private:
  struct Instr {
    std::uint32_t op;
    std::uint32_t arity;
    std::uint32_t args[2];
    std::vector<std::uint32_t> extra;  // arguments beyond the second
  };
  std::size_t n_ = 0;
  std::size_t vars_ = 0;
  std::vector<std::vector<Element>> tables_;
  std::vector<Instr> code_;
  std::uint32_t result_slot_ = 0;
};

struct EvalOptions {
  /// Largest number of distinct variables a scan may range over.
  std::size_t var_cap = 14;
  /// Worker threads for valuation scans; results do not depend on it.
  std::size_t threads = 1;
};

/// Default options, honouring the MATLOG_VAR_CAP environment variable.
EvalOptions default_eval_options();

/// Value of f under v. Throws when a variable of f is unassigned.
Element evaluate(const Formula& f, const FiniteAlgebra& algebra,
                 const Valuation& v);

struct Countermodel {
  Valuation valuation;
  std::vector<Element> premise_values;
  Element conclusion_value = 0;
};

struct Verdict {
  bool valid = true;
  std::optional<Countermodel> countermodel;
  std::uint64_t valuations_checked = 0;
};

/// Gamma |= phi in the matrix. Valuations are enumerated lexicographically
/// (first variable most significant) over the variables of the premises then
/// the conclusion, in first-occurrence order; the first countermodel in that
/// order is returned.
Verdict entails(const Matrix& matrix, std::span<const Formula> premises,
                const Formula& conclusion, const EvalOptions& options = {});

Verdict is_theorem(const Matrix& matrix, const Formula& f,
                   const EvalOptions& options = {});

struct AntitheoremVerdict {
  bool antitheorem = false;
  /// A valuation designating every member, when not an antitheorem.
  std::optional<Valuation> witness;
};

/// No valuation designates all members of gamma. The empty set is never an
/// antitheorem.
AntitheoremVerdict is_antitheorem(const Matrix& matrix,
                                  std::span<const Formula> gamma,
                                  const EvalOptions& options = {});

struct EquationalVerdict {
  bool valid = true;
  std::optional<Valuation> counterexample;
};

/// Premises |= conclusion over the single algebra: every valuation
/// satisfying all premise equations satisfies the conclusion.
EquationalVerdict eq_consequence(const FiniteAlgebra& algebra,
                                 std::span<const Equation> premises,
                                 const Equation& conclusion,
                                 const EvalOptions& options = {});

/// Value table of f over `variables`: entry k is the value under the k-th
/// valuation in lexicographic order. Used by corpus checks.
std::vector<Element> value_table(const Formula& f, const FiniteAlgebra& algebra,
                                 const std::vector<std::string>& variables);

}  // namespace matlog
