#pragma once

// Boolean skeletons and conuclei on subalgebras of finite powers of a
// three-element subclassical algebra, and the decision procedure for whether
// such a subalgebra can be expanded by Delta1 into a subalgebra of (A^e)^I.
//
// Everything here is relative to the concrete carrier C <= A^I. Verdicts
// about abstract algebras (all embeddings) are only approximated, by
// search_embeddings().

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matlog/external.hpp"
#include "matlog/power.hpp"

namespace matlog {

/// The frame of the power's base; throws when the base has none.
ThreeValuedFrame frame_of(const PowerAlgebra& power);

/// Information order 0 <= half <= 1, pointwise on tuples.
bool order_leq(const ThreeValuedFrame& frame, std::span<const Element> a,
               std::span<const Element> b);
bool order_leq(const PowerAlgebra& power, const ThreeValuedFrame& frame,
               Code a, Code b);

/// Delta1 computed in each component.
Code pointwise_delta1(const PowerAlgebra& power, const ThreeValuedFrame& frame,
                      Code a);

bool is_boolean_tuple(const PowerAlgebra& power, const ThreeValuedFrame& frame,
                      Code a);

/// Carrier elements with every component in {0, 1}; possibly empty.
struct BooleanSkeleton {
  std::vector<Code> elements;  // sorted
  bool contains(Code c) const;
};

BooleanSkeleton boolean_skeleton(const SubalgebraOfPower& c);

/// A total self-map on a carrier, stored as the image of each carrier element
/// in carrier order.
class UnaryMapOnCarrier {
 public:
  /// Throws unless `image` has one entry per carrier element, each inside the
  /// carrier.
  UnaryMapOnCarrier(const SubalgebraOfPower& c, std::vector<Code> image);
  /// From explicit pairs; throws when some carrier element is unmapped.
  static UnaryMapOnCarrier from_pairs(
      const SubalgebraOfPower& c, const std::vector<std::pair<Code, Code>>& pairs);

  Code operator()(Code a) const;
  const std::vector<Code>& domain() const noexcept { return domain_; }
  const std::vector<Code>& image() const noexcept { return image_; }
  /// Sorted set of values.
  std::vector<Code> range() const;

  friend bool operator==(const UnaryMapOnCarrier&,
                         const UnaryMapOnCarrier&) = default;

 private:
  std::vector<Code> domain_;
  std::vector<Code> image_;
};

/// Outcome of one property check, with the first counterexample found in
/// carrier order.
struct PropertyCheck {
  bool holds = true;
  std::vector<Code> witness;
  std::string detail;
};

struct ConucleusReport {
  PropertyCheck monotone;
  PropertyCheck deflationary;     // s(a) <= a
  PropertyCheck meet_compatible;  // s(a) & s(b) <= s(a & b)
  PropertyCheck idempotent;       // s(s(a)) = s(a)
  PropertyCheck boolean;          // image equals the Boolean skeleton
  PropertyCheck complete;         // pointwise Delta1 of each a is in the image

  bool is_conucleus() const {
    return monotone.holds && deflationary.holds && meet_compatible.holds &&
           idempotent.holds;
  }
  bool is_boolean() const { return is_conucleus() && boolean.holds; }
  bool is_complete_boolean() const { return is_boolean() && complete.holds; }
};

ConucleusReport check_conucleus(const UnaryMapOnCarrier& sigma,
                                const SubalgebraOfPower& c);

/// Pointwise Delta1 restricted to the carrier, or the least element whose
/// pointwise Delta1 leaves the carrier.
struct CanonicalSigma {
  std::optional<UnaryMapOnCarrier> map;
  std::optional<std::pair<Code, Code>> escape;
};

CanonicalSigma canonical_sigma(const SubalgebraOfPower& c);

struct SepCheck {
  bool holds = true;
  /// Distinct a, b with s(a) = s(b) and s(~a) = s(~b).
  std::optional<std::pair<Code, Code>> violation;
};

SepCheck check_sep(const UnaryMapOnCarrier& sigma, const SubalgebraOfPower& c);

/// a -> greatest skeleton element below a, when every such set has a
/// greatest element. This is the only skeleton-valued candidate that can be
/// complete, and is what the separation test is run against on NO verdicts.
std::optional<UnaryMapOnCarrier> skeleton_projection(const SubalgebraOfPower& c);

struct ExpansionVerdict {
  bool admits = false;
  std::string reason;
  std::optional<UnaryMapOnCarrier> sigma;
  std::optional<ConucleusReport> report;
  /// The same carrier as a subalgebra of (A^e)^I, on YES.
  std::optional<SubalgebraOfPower> expanded;
  std::optional<std::pair<Code, Code>> escape;
  /// On NO with a skeleton projection: the separation check on it.
  std::optional<SepCheck> sep_on_projection;
};

/// Decides whether the carrier admits a complete Boolean conucleus, which is
/// necessarily pointwise Delta1.
ExpansionVerdict admits_expansion(const SubalgebraOfPower& c);

/// Whether 0 | half != 0 in the base algebra.
bool join_gate(const FiniteAlgebra& base);

struct JoinCheck {
  bool holds = true;
  std::optional<Code> violation;  // x with not (x <= s(x) | ~x)
};

/// Checks x <= s(x) | ~x on every carrier element. Throws when the gate fails.
JoinCheck check_join_criterion(const SubalgebraOfPower& c,
                         const UnaryMapOnCarrier& sigma);

/// Filters for the exhaustive scan over skeleton-valued maps below the
/// identity.
struct CandidateFilter {
  bool complete = false;
  bool sep = false;
  bool join_criterion = false;
};

struct CandidateScan {
  std::uint64_t examined = 0;  // complete assignments reached
  std::uint64_t matches = 0;
  std::optional<UnaryMapOnCarrier> first;
};

/// Enumerates every map s: C -> skeleton with s(a) <= a and keeps the
/// Boolean conuclei passing `filter`. Independent of canonical_sigma().
CandidateScan scan_boolean_conuclei(const SubalgebraOfPower& c,
                                    CandidateFilter filter);

/// Result of searching other embeddings of the carrier (as an abstract
/// algebra) into A^J for J <= max_exponent.
struct EmbeddingSearch {
  std::size_t homomorphisms = 0;
  std::size_t embeddings_checked = 0;
  bool found_expandable = false;
  std::string found;  // description of an embedding with a YES verdict
};

EmbeddingSearch search_embeddings(const SubalgebraOfPower& c,
                                  std::size_t max_exponent);

}  // namespace matlog
