#pragma once

// Finite direct powers A^I with tuples packed into base-|A| integers, and
// subalgebras of such powers.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "matlog/algebra.hpp"

namespace matlog {

/// Encoded tuple of a power. Component 0 is the most significant digit, so
/// numeric order on codes is lexicographic order on tuples.
using Code = std::uint64_t;

class PowerAlgebra {
 public:
  /// Throws for exponent 0 or when |A|^I does not fit in 63 bits.
  PowerAlgebra(FiniteAlgebra base, std::size_t exponent);

  const FiniteAlgebra& base() const noexcept { return base_; }
  std::size_t exponent() const noexcept { return exponent_; }
  std::uint64_t size() const noexcept { return size_; }

  std::vector<Element> decode(Code c) const;
  Code encode(std::span<const Element> tuple) const;
  Element component(Code c, std::size_t i) const;

  Code apply(std::size_t op, std::span<const Code> args) const;
  Code apply(std::size_t op, Code a) const;
  Code apply(std::size_t op, Code a, Code b) const;

  /// Tuple with every component equal to `e`.
  Code diagonal(Element e) const;

  /// "(0,n)" style rendering using the base element names.
  std::string format(Code c) const;
  /// Inverse of format(); parentheses optional, commas required when
  /// exponent > 1 unless every element name is a single character.
  Code parse(std::string_view text) const;

  /// The power as a stand-alone FiniteAlgebra. Only for small powers.
  FiniteAlgebra as_algebra() const;

 private:
  FiniteAlgebra base_;
  std::size_t exponent_;
  std::uint64_t size_;
  std::vector<std::uint64_t> place_;  // |A|^(I-1-i)
  // Precomputed tables of the power when they fit.
  std::vector<std::vector<Code>> tables_;
};

/// A non-empty subset of a power closed under every operation.
class SubalgebraOfPower {
 public:
  /// Validates closure and non-emptiness.
  SubalgebraOfPower(PowerAlgebra power, std::vector<Code> carrier);

  const PowerAlgebra& power() const noexcept { return power_; }
  /// Sorted, duplicate-free.
  const std::vector<Code>& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  bool contains(Code c) const noexcept;
  /// Position of `c` in carrier(); throws if absent.
  std::size_t index_of(Code c) const;

  std::string format() const;

 private:
  PowerAlgebra power_;
  std::vector<Code> carrier_;
};

/// Closure check for an arbitrary subset (sorted or not).
bool is_closed(const PowerAlgebra& power, std::span<const Code> subset);

/// Smallest subuniverse containing `generators`. Throws on an empty generator
/// set, since without constants the closure of the empty set is empty.
SubalgebraOfPower subalgebra_closure(const PowerAlgebra& power,
                                     std::span<const Code> generators);

enum class SubuniverseMode { exhaustive, generated };

/// Largest power size for which the exhaustive subset scan is allowed.
inline constexpr std::uint64_t kExhaustiveSubuniverseLimit = 12;

struct SubuniverseListing {
  std::vector<SubalgebraOfPower> subalgebras;  // sorted by (size, carrier)
  bool complete = false;
  std::string note;
};

/// All subuniverses, by subset scan (complete) or by closing every generator
/// set of size <= max_generators (complete only for subalgebras with that
/// many generators).
SubuniverseListing all_subuniverses(const PowerAlgebra& power,
                                    SubuniverseMode mode,
                                    std::size_t max_generators = 0);

}  // namespace matlog
