#pragma once

// Subclassicality of three-element matrices and their external versions: the
// expansion by Delta1 (1 -> 1, everything else -> 0) together with the
// derived classifiers Delta0, Delta_half and the derived implication.

#include <optional>
#include <string>
#include <vector>

#include "matlog/algebra.hpp"

namespace matlog {

/// Positions of the Boolean values inside a three-element universe.
struct ThreeValuedFrame {
  Element zero = 0;
  Element half = 1;
  Element one = 2;
};

struct SubclassicalityReport {
  std::string matrix;
  /// Located two-element subreduct acting as B2 with F-trace {1}.
  bool boolean_subreduct = false;
  std::optional<ThreeValuedFrame> frame;
  /// x = ~~x on every element.
  bool involutive_negation = false;
  /// ~half = half for the remaining element.
  bool negation_fixes_half = false;
  bool passed = false;
  std::vector<std::string> failures;
};

/// Requires a three-element universe and the operations and/or/neg. The B2
/// subreduct is searched up to isomorphism.
SubclassicalityReport check_subclassical(const Matrix& matrix);

/// Where the printed tables deviate from the laws expected of a De Morgan
/// lattice with involution. Each entry names the law and a witness.
std::vector<std::string> table_anomalies(const FiniteAlgebra& algebra);

/// The frame of a three-element algebra whose {and, or, neg}-reduct has B2
/// as a subreduct; zero is the meet of the located pair.
std::optional<ThreeValuedFrame> locate_frame(const FiniteAlgebra& algebra);

/// A^e: the base algebra expanded by Delta1, with the base designated set.
class ExternalAlgebra {
 public:
  const Matrix& base() const noexcept { return base_; }
  const FiniteAlgebra& algebra() const noexcept { return expanded_; }
  /// <A^e, F>.
  const Matrix& matrix() const noexcept { return matrix_; }
  const ThreeValuedFrame& frame() const noexcept { return frame_; }

  Element delta1(Element a) const;
  Element delta0(Element a) const;
  Element delta_half(Element a) const;

  /// Same expanded algebra, another designated set.
  ExternalAlgebra with_designated(std::vector<Element> designated,
                                  std::string name) const;

 private:
  friend ExternalAlgebra build_external(const Matrix& matrix);
  ExternalAlgebra(Matrix base, FiniteAlgebra expanded, Matrix matrix,
                  ThreeValuedFrame frame)
      : base_(std::move(base)),
        expanded_(std::move(expanded)),
        matrix_(std::move(matrix)),
        frame_(frame) {}

  Matrix base_;
  FiniteAlgebra expanded_;
  Matrix matrix_;
  ThreeValuedFrame frame_;
};

/// Throws when the matrix is not subclassical. When the algebra already has
/// D1 it must be the canonical one, and it is kept as is.
ExternalAlgebra build_external(const Matrix& matrix);

/// Value of D0 a | (Dm a & (Dm b | D1 b)) | (D1 a & D1 b) in A^e.
Element derived_implication(Element a, Element b, const ExternalAlgebra& ext);

}  // namespace matlog
