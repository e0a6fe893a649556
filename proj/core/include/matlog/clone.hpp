#pragma once

// Term operations of small finite algebras: saturation of the unary and
// binary parts of the clone, with a minimal-depth witness term for each
// table, and term equivalence as mutual containment of basic operations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matlog/algebra.hpp"
#include "matlog/syntax.hpp"

namespace matlog {

/// A term operation: its table (row-major, like FiniteAlgebra tables) and a
/// term over the variables x (and y when binary) inducing it.
struct TermOperation {
  std::vector<Element> table;
  Formula witness;
};

class Clone {
 public:
  /// Term operations of arity 1 (over x) or 2 (over x, y).
  const std::vector<TermOperation>& operations(std::size_t arity) const;
  std::size_t max_arity() const noexcept { return parts_.size(); }
  /// False when the layer cap was hit before a fixpoint.
  bool saturated() const noexcept { return saturated_; }
  /// Number of composition layers run, per arity.
  const std::vector<std::size_t>& layers() const noexcept { return layers_; }

  const TermOperation* find(std::size_t arity,
                            const std::vector<Element>& table) const;

 private:
  friend Clone generate_clone(const FiniteAlgebra&, std::size_t, std::size_t);
  friend std::size_t resaturate(const FiniteAlgebra&, const Clone&);
  std::vector<std::vector<TermOperation>> parts_;
  std::vector<std::size_t> layers_;
  bool saturated_ = true;
};

inline constexpr std::size_t kCloneMaxUniverse = 4;

/// Layered saturation from the projections: layer k holds the tables first
/// reached by a term of depth k. Throws when |A| > 4, max_arity is not 1 or
/// 2, or a basic operation has arity above 2.
Clone generate_clone(const FiniteAlgebra& algebra, std::size_t max_arity,
                     std::size_t cap = 64);

/// Runs saturation again seeded with every table of `clone` and returns the
/// number of new tables found. Zero for a saturated clone.
std::size_t resaturate(const FiniteAlgebra& algebra, const Clone& clone);

/// A basic operation of one algebra located in the clone of the other.
struct CloneWitness {
  std::string operation;
  std::size_t arity = 0;
  std::optional<Formula> term;  // empty when not definable
};

struct TermEquivalence {
  bool equivalent = false;
  std::vector<CloneWitness> a_in_b;  // operations of A as terms of B
  std::vector<CloneWitness> b_in_a;  // operations of B as terms of A
  /// For each missing operation: a subuniverse of the other algebra that it
  /// fails to preserve, when one exists.
  std::vector<std::string> explanation;
};

/// Requires the same universe (element names in the same order).
TermEquivalence term_equivalent(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                std::size_t cap = 64);

/// Subsets closed under every operation, in increasing bitmask order.
std::vector<std::vector<Element>> subuniverses(const FiniteAlgebra& algebra);

}  // namespace matlog
