#pragma once

// Built-in algebras and logics, and name resolution for the CLI.
//
// Algebra names: SK, WK, L3, S3, Z3, B2, with "/demorgan" for the corrected
// variants of S3 and Z3. Logic names: K3, LP, B, PWK, RM3, S, St, L3, J3, CL,
// plus the same "/demorgan" suffix for RM3, S, St. A trailing "^e" or "e"
// selects the external version.

#include <string>
#include <string_view>
#include <vector>

#include "matlog/algebra.hpp"
#include "matlog/external.hpp"

namespace matlog {

enum class Variant { as_printed, demorgan };

namespace builtin {
FiniteAlgebra sk();
FiniteAlgebra wk();
FiniteAlgebra l3();
FiniteAlgebra s3(Variant v = Variant::as_printed);
FiniteAlgebra z3(Variant v = Variant::as_printed);
FiniteAlgebra b2();
}  // namespace builtin

struct LogicEntry {
  std::string name;
  std::string algebra;
  /// Empty for algebras shipped in a single form.
  std::string variant;
  Matrix matrix;
};

/// The nine three-valued logics in their as-printed form, in the order
/// K3, LP, B, PWK, RM3, S, St, L3, J3.
const std::vector<LogicEntry>& standard_logics();

/// standard_logics(), the demorgan variants of RM3, S and St, and CL.
const std::vector<LogicEntry>& all_logics();

FiniteAlgebra resolve_algebra(std::string_view name);

/// Resolves a logic name, an external suffix, or a path to a JSON matrix
/// file (anything ending in ".json").
Matrix resolve_logic(std::string_view name);

/// Whether `name` asks for an external version.
bool is_external_name(std::string_view name);

/// Directory holding the shipped data files: MATLOG_DATA_DIR from the
/// environment when set, else the source tree if present, else the
/// installed share directory.
std::string data_dir();

}  // namespace matlog
