#pragma once

// Finite algebras given by explicit operation tables, and logical matrices
// built on top of them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace matlog {

/// Index of an element in an algebra's universe.
using Element = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OperationSymbol {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const OperationSymbol&,
                         const OperationSymbol&) = default;
};

/// An ordered list of operation symbols. Constants are not allowed, so every
/// arity is at least one.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OperationSymbol> operations);

  const std::vector<OperationSymbol>& operations() const noexcept {
    return operations_;
  }
  std::size_t size() const noexcept { return operations_.size(); }
  std::optional<std::size_t> find(std::string_view name) const noexcept;
  bool contains(std::string_view name) const noexcept {
    return find(name).has_value();
  }
  std::size_t max_arity() const noexcept;

  /// Returns a copy with `symbol` appended.
  Signature extended(OperationSymbol symbol) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<OperationSymbol> operations_;
};

/// Raw input to make_algebra. Tables are flat and row-major: for a binary f,
/// entry i*|A| + j holds f(a_i, a_j).
struct OperationSpec {
  std::string name;
  std::size_t arity = 0;
  std::vector<Element> table;
};

struct AlgebraSpec {
  std::string name;
  std::vector<std::string> universe;
  std::vector<OperationSpec> operations;
};

class FiniteAlgebra {
 public:
  /// Validates `spec`: non-empty universe with distinct names, distinct
  /// operation names, arity >= 1, table sizes |A|^arity, entries in range.
  static FiniteAlgebra make(AlgebraSpec spec);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return universe_.size(); }
  const std::vector<std::string>& universe() const noexcept {
    return universe_;
  }
  const Signature& signature() const noexcept { return signature_; }

  const std::string& element_name(Element e) const { return universe_.at(e); }
  std::optional<Element> element(std::string_view name) const noexcept;
  /// Like element() but throws when the name is unknown.
  Element element_or_throw(std::string_view name) const;

  /// Index of the operation named `name`; throws when absent.
  std::size_t operation_index(std::string_view name) const;
  std::span<const Element> table(std::size_t op) const {
    return tables_.at(op);
  }

  Element apply(std::size_t op, std::span<const Element> args) const;
  Element apply(std::size_t op, Element a) const {
    return tables_[op][a];
  }
  Element apply(std::size_t op, Element a, Element b) const {
    return tables_[op][a * universe_.size() + b];
  }

  /// Expansion by one more operation (validated like make()).
  FiniteAlgebra with_operation(OperationSpec op) const;
  /// Same tables, different display name.
  FiniteAlgebra renamed(std::string name) const;
  /// Reduct to the named operations, in the given order.
  FiniteAlgebra reduct(std::span<const std::string> operations) const;

  AlgebraSpec spec() const;

  /// Tables and universe equal; the display name is ignored.
  bool same_structure(const FiniteAlgebra& other) const noexcept;

 private:
  FiniteAlgebra() = default;

  std::string name_;
  std::vector<std::string> universe_;
  Signature signature_;
  std::vector<std::vector<Element>> tables_;
};

inline FiniteAlgebra make_algebra(AlgebraSpec spec) {
  return FiniteAlgebra::make(std::move(spec));
}

/// Integer power with overflow check; throws when the result exceeds 2^63.
std::uint64_t checked_pow(std::uint64_t base, std::size_t exponent);

/// A finite algebra together with a designated subset.
class Matrix {
 public:
  Matrix(FiniteAlgebra algebra, std::vector<Element> designated,
         std::string name = {});

  const std::string& name() const noexcept { return name_; }
  const FiniteAlgebra& algebra() const noexcept { return algebra_; }
  /// Sorted, duplicate-free.
  const std::vector<Element>& designated() const noexcept {
    return designated_;
  }
  bool is_designated(Element e) const noexcept {
    return e < mask_.size() && mask_[e];
  }
  /// Proper and non-empty designated set.
  bool nontrivial() const noexcept {
    return !designated_.empty() && designated_.size() < algebra_.size();
  }

 private:
  std::string name_;
  FiniteAlgebra algebra_;
  std::vector<Element> designated_;
  std::vector<bool> mask_;
};

}  // namespace matlog
