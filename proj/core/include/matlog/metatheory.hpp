#pragma once

// Checks on external logics: classical recapture through Delta1, the
// algebraizability transformers, deduction-theorem sets, and the deductive
// equivalence of the two external logics over one algebra.
//
// Each check has a pointwise stage (finitely many elements or pairs) and a
// corpus stage deciding both sides of the law by brute force on sample rules.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matlog/external.hpp"
#include "matlog/io.hpp"
#include "matlog/semantics.hpp"
#include "matlog/syntax.hpp"

namespace matlog {

struct RecaptureResult {
  Rule image;  // every variable replaced by D1 of itself
  Verdict verdict;
};

/// Throws unless the rule is valid in <B2, {1}>.
RecaptureResult recapture(const Rule& rule, const ExternalAlgebra& external,
                          const EvalOptions& options = {});

Formula delta1_image(const Formula& f);

struct CorpusOptions {
  std::vector<std::string> variables = {"p", "q", "r"};
  /// Every rule whose formulas have depth <= exhaustive_depth.
  std::size_t exhaustive_depth = 1;
  std::size_t max_premises = 2;
  /// Plus this many seeded random rules of depth <= sample_depth.
  std::size_t samples = 300;
  std::size_t sample_depth = 3;
  std::uint64_t seed = 20240607;
};

/// Premise lists are multisets (non-decreasing in enumeration order).
std::vector<Rule> rule_corpus(const Signature& signature,
                              const CorpusOptions& options = {});

struct Discrepancy {
  Rule rule;
  std::string detail;
};

struct CorpusReport {
  std::size_t instances = 0;
  std::size_t positive = 0;  // instances where the left side holds
  std::vector<Discrepancy> discrepancies;
  bool passed() const { return discrepancies.empty(); }
};

/// tau sends the placeholder x to equations over x; rho sends the pair
/// (x, y) to formulas over x and y.
struct Transformer {
  std::string name;
  std::vector<Equation> tau;
  std::vector<Formula> rho;
};

/// x = x -> x, with the derived implication.
Transformer tau_one();
/// psi = psi | ~psi for psi = D1 x | Dm x.
Transformer tau_half();
/// tau_one for designated set {1}, tau_half for {1, half}.
Transformer standard_transformer(const ExternalAlgebra& external);

std::vector<Equation> apply_tau(const Transformer& t, const Formula& f);
std::vector<Formula> apply_rho(const Transformer& t, const Formula& a,
                               const Formula& b);

/// A pointwise law checked at every element or pair.
struct PointwiseCheck {
  std::string name;
  std::size_t points = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

struct AlgReport {
  PointwiseCheck truth;     // a in F iff tau(a) holds
  PointwiseCheck equality;  // a = b iff rho(a, b) within F
  PointwiseCheck alg2;      // a = b iff tau(rho(a, b)) holds
  CorpusReport alg1;        // Gamma |- phi iff tau(Gamma) |= tau(phi)
  bool passed() const {
    return truth.passed() && equality.passed() && alg2.passed() &&
           alg1.passed();
  }
};

/// Throws on a malformed transformer (empty parts, stray variables).
AlgReport check_alg_witnesses(const ExternalAlgebra& external,
                              const Transformer& t,
                              const CorpusOptions& corpus = {},
                              const EvalOptions& options = {});

/// tau_half's equation against the constant-based original: for every a,
/// psi(a) = psi(a) | ~psi(a) iff psi(a) = 1.
PointwiseCheck check_tau_half_replacement(const ExternalAlgebra& external);

struct DdtSet {
  std::string name;
  std::vector<Formula> formulas;  // over x and y
};

/// ~D1 x | D1 y
DdtSet ddt_one();
/// ~(D1 x | Dm x) | (D1 y | Dm y)
DdtSet ddt_half();

struct DdtReport {
  PointwiseCheck pointwise;  // I(a, b) within F iff (a in F implies b in F)
  CorpusReport corpus;       // Gamma, phi |- psi iff Gamma |- I(phi, psi)
  bool passed() const { return pointwise.passed() && corpus.passed(); }
};

DdtReport check_ddt_witness(const ExternalAlgebra& external, const DdtSet& d,
                            const CorpusOptions& corpus = {},
                            const EvalOptions& options = {});

struct DedeqReport {
  PointwiseCheck de2;   // a in {1, half} iff D1(D1 a | Dm a) = 1
  CorpusReport de1;     // Gamma |-_{1} phi iff D1 Gamma |-_{half} D1 phi
  bool passed() const { return de2.passed() && de1.passed(); }
};

/// `one` must designate {1} and `half` {1, half}, over the same algebra.
DedeqReport check_dedeq(const ExternalAlgebra& one, const ExternalAlgebra& half,
                        const CorpusOptions& corpus = {},
                        const EvalOptions& options = {});

/// {x -> y, y -> x} and {x =>L y, y =>L x} entail each other in <L3^e, {1}>,
/// with -> derived and =>L the native implication.
PointwiseCheck check_lukasiewicz_interderivability(
    const ExternalAlgebra& l3_external);

}  // namespace matlog
