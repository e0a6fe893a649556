#pragma once

// JSON files for algebras, matrices and power carriers, and the plain-text
// rule corpus format.
//
// Matrix file:
//   {"name": ..., "universe": [...],
//    "operations": [{"name": ..., "arity": k, "table": [element names]}],
//    "designated": [...]}
// Tables are row-major: entry i*|A| + j holds f(a_i, a_j).

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matlog/algebra.hpp"
#include "matlog/power.hpp"
#include "matlog/syntax.hpp"

namespace matlog {

/// Canonical text: two-space indentation, keys in the order above, trailing
/// newline. An algebra omits "designated".
std::string to_json(const FiniteAlgebra& algebra);
std::string to_json(const Matrix& matrix);

FiniteAlgebra algebra_from_json(std::string_view text);
/// The algebra takes the matrix name.
Matrix matrix_from_json(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

Matrix load_matrix(const std::string& path);
void save_matrix(const Matrix& matrix, const std::string& path);

/// Carrier file for the conucleus command:
///   {"algebra": "SK", "exponent": 2, "carrier": ["(0,0)", ...],
///    "sigma": [["(0,n)", "(0,0)"], ...]}
/// "sigma" is optional.
struct CarrierFile {
  SubalgebraOfPower subalgebra;
  std::optional<std::vector<std::pair<Code, Code>>> sigma;
};

CarrierFile carrier_from_json(std::string_view text);

struct NamedRule {
  std::string name;
  Rule rule;
};

/// One rule per line, "name: premise, premise |- conclusion". Blank lines and
/// lines starting with '#' are skipped.
std::vector<NamedRule> parse_rule_corpus(std::string_view text,
                                         const Signature& signature);
std::vector<NamedRule> load_rule_corpus(const std::string& path,
                                        const Signature& signature);

}  // namespace matlog
