#pragma once

#include <string>
#include <vector>

#include "matlog/algebra.hpp"

namespace matlog {

/// A partition of an algebra's universe, stored as a block index per element.
/// Block indices are normalized by first occurrence, so equal partitions
/// compare equal.
class Congruence {
 public:
  explicit Congruence(std::vector<std::size_t> block_of);

  static Congruence identity(std::size_t n);
  static Congruence total(std::size_t n);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_of(Element e) const { return block_of_.at(e); }
  std::size_t block_count() const noexcept { return blocks_; }
  bool related(Element a, Element b) const {
    return block_of_.at(a) == block_of_.at(b);
  }
  bool is_identity() const noexcept { return blocks_ == block_of_.size(); }
  bool is_total() const noexcept { return blocks_ == 1; }
  /// Every pair related here is related in `other`.
  bool refines(const Congruence& other) const;

  std::vector<std::vector<Element>> blocks() const;
  std::string format(const FiniteAlgebra& algebra) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence& a, const Congruence& b) {
    return a.block_of_ <=> b.block_of_;
  }

 private:
  std::vector<std::size_t> block_of_;
  std::size_t blocks_ = 0;
};

/// Whether the partition is compatible with every operation.
bool is_congruence(const FiniteAlgebra& algebra, const Congruence& theta);

/// Smallest congruence relating a and b.
Congruence principal_congruence(const FiniteAlgebra& algebra, Element a,
                                Element b);

/// Join in the congruence lattice (transitive closure of the union).
Congruence join(const Congruence& x, const Congruence& y);

/// All congruences: principal congruences closed under joins, plus the
/// identity. Sorted.
std::vector<Congruence> congruences(const FiniteAlgebra& algebra);

/// Largest congruence for which the designated set is a union of blocks,
/// computed by partition refinement from {F, A \ F}.
Congruence leibniz_congruence(const Matrix& matrix);

/// Whether the designated set is a union of blocks of theta.
bool saturates(const Congruence& theta, const Matrix& matrix);

}  // namespace matlog
