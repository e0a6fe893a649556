#include "matlog/algebra.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace matlog {

Signature::Signature(std::vector<OperationSymbol> operations)
    : operations_(std::move(operations)) {
  std::set<std::string_view> seen;
  for (const auto& op : operations_) {
    if (op.name.empty()) throw Error("operation with empty name");
    if (op.arity == 0) {
      throw Error("operation '" + op.name +
                  "' has arity 0; constants are not supported");
    }
    if (!seen.insert(op.name).second) {
      throw Error("duplicate operation name '" + op.name + "'");
    }
  }
}

std::optional<std::size_t> Signature::find(
    std::string_view name) const noexcept {
  for (std::size_t i = 0; i < operations_.size(); ++i) {
    if (operations_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Signature::max_arity() const noexcept {
  std::size_t m = 0;
  for (const auto& op : operations_) m = std::max(m, op.arity);
  return m;
}

Signature Signature::extended(OperationSymbol symbol) const {
  auto ops = operations_;
  ops.push_back(std::move(symbol));
  return Signature(std::move(ops));
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exponent) {
  std::uint64_t r = 1;
  constexpr std::uint64_t limit = std::uint64_t{1} << 63;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && r > limit / base) throw Error("size overflow");
    r *= base;
  }
  return r;
}

FiniteAlgebra FiniteAlgebra::make(AlgebraSpec spec) {
  if (spec.universe.empty()) throw Error("algebra universe is empty");
  std::set<std::string_view> names;
  for (const auto& e : spec.universe) {
    if (e.empty()) throw Error("element with empty name");
    if (!names.insert(e).second) {
      throw Error("duplicate element name '" + e + "'");
    }
  }
  std::vector<OperationSymbol> symbols;
  symbols.reserve(spec.operations.size());
  for (const auto& op : spec.operations) {
    symbols.push_back({op.name, op.arity});
  }

  FiniteAlgebra a;
  a.signature_ = Signature(std::move(symbols));
  const auto n = spec.universe.size();
  for (auto& op : spec.operations) {
    const auto expected = checked_pow(n, op.arity);
    if (op.table.size() != expected) {
      throw Error("table of '" + op.name + "' has " +
                  std::to_string(op.table.size()) + " entries, expected " +
                  std::to_string(expected));
    }
    for (auto v : op.table) {
      if (v >= n) {
        throw Error("table of '" + op.name + "' refers to element index " +
                    std::to_string(v) + " outside the universe");
      }
    }
    a.tables_.push_back(std::move(op.table));
  }
  a.name_ = std::move(spec.name);
  a.universe_ = std::move(spec.universe);
  return a;
}

std::optional<Element> FiniteAlgebra::element(
    std::string_view name) const noexcept {
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (universe_[i] == name) return static_cast<Element>(i);
  }
  return std::nullopt;
}

Element FiniteAlgebra::element_or_throw(std::string_view name) const {
  if (auto e = element(name)) return *e;
  throw Error("unknown element '" + std::string(name) + "' in algebra " +
              name_);
}

std::size_t FiniteAlgebra::operation_index(std::string_view name) const {
  if (auto i = signature_.find(name)) return *i;
  throw Error("algebra " + name_ + " has no operation '" + std::string(name) +
              "'");
}

Element FiniteAlgebra::apply(std::size_t op,
                             std::span<const Element> args) const {
  const auto& sym = signature_.operations().at(op);
  if (args.size() != sym.arity) {
    throw Error("operation '" + sym.name + "' applied to " +
                std::to_string(args.size()) + " arguments");
  }
  std::size_t idx = 0;
  for (auto a : args) idx = idx * universe_.size() + a;
  return tables_[op][idx];
}

AlgebraSpec FiniteAlgebra::spec() const {
  AlgebraSpec s{name_, universe_, {}};
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    const auto& sym = signature_.operations()[i];
    s.operations.push_back({sym.name, sym.arity, tables_[i]});
  }
  return s;
}

FiniteAlgebra FiniteAlgebra::with_operation(OperationSpec op) const {
  auto s = spec();
  s.operations.push_back(std::move(op));
  return make(std::move(s));
}

FiniteAlgebra FiniteAlgebra::renamed(std::string name) const {
  FiniteAlgebra a = *this;
  a.name_ = std::move(name);
  return a;
}

FiniteAlgebra FiniteAlgebra::reduct(
    std::span<const std::string> operations) const {
  AlgebraSpec s{name_, universe_, {}};
  for (const auto& name : operations) {
    const auto i = operation_index(name);
    s.operations.push_back(
        {name, signature_.operations()[i].arity, tables_[i]});
  }
  return make(std::move(s));
}

bool FiniteAlgebra::same_structure(const FiniteAlgebra& other) const noexcept {
  return universe_ == other.universe_ && signature_ == other.signature_ &&
         tables_ == other.tables_;
}

Matrix::Matrix(FiniteAlgebra algebra, std::vector<Element> designated,
               std::string name)
    : name_(std::move(name)),
      algebra_(std::move(algebra)),
      designated_(std::move(designated)) {
  std::sort(designated_.begin(), designated_.end());
  designated_.erase(std::unique(designated_.begin(), designated_.end()),
                    designated_.end());
  mask_.assign(algebra_.size(), false);
  for (auto e : designated_) {
    if (e >= algebra_.size()) {
      throw Error("designated element index " + std::to_string(e) +
                  " outside the universe");
    }
    mask_[e] = true;
  }
  if (name_.empty()) name_ = algebra_.name();
}

}  // namespace matlog
