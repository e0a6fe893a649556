#pragma once

// Survey of the subalgebras of A^I: the expansion verdict against three
// independent readings, separation consistency, and the join criterion.

#include <optional>
#include <string>
#include <vector>

#include "matlog/power.hpp"
#include "matlog/structure.hpp"

namespace matlog {

struct SurveyOptions {
  SubuniverseMode mode = SubuniverseMode::exhaustive;
  std::size_t max_generators = 3;
  /// Candidate scans run only on carriers up to this size.
  std::size_t scan_limit = 9;
  /// On NO verdicts up to scan_limit, look for other embeddings into A^J.
  bool search_embeddings = false;
  std::size_t embedding_exponent = 3;
  std::size_t threads = 1;
};

struct SurveyRow {
  std::size_t id = 0;
  std::string carrier;
  std::size_t size = 0;
  std::size_t skeleton = 0;
  bool admits = false;
  std::string reason;
  std::string witness;
  bool canonical_total = false;  // (a)
  bool expanded_closed = false;  // (b)
  std::optional<bool> scan_admits;  // (c), when scanned
  /// YES carries no separation violation; NO admits no complete Boolean
  /// conucleus that separates.
  std::optional<bool> sep_consistent;
  /// Whether some Boolean conucleus meets x <= s(x) | ~x, when the gate
  /// passes and the carrier was scanned.
  std::optional<bool> join_criterion;
  std::optional<EmbeddingSearch> embeddings;
  std::string scope;

  bool agrees() const {
    return admits == canonical_total && admits == expanded_closed &&
           (!scan_admits || *scan_admits == admits);
  }
  bool join_agrees() const { return !join_criterion || *join_criterion == admits; }
};

struct SurveyReport {
  std::string algebra;
  std::size_t exponent = 0;
  bool complete = false;
  std::string note;
  bool gate = false;  // 0 | half != 0 in the base
  std::vector<SurveyRow> rows;

  std::size_t disagreements() const;
  std::size_t sep_inconsistencies() const;
  std::size_t join_disagreements() const;
};

SurveyRow survey_carrier(const SubalgebraOfPower& c, const SurveyOptions& options,
                         std::size_t id = 0);

SurveyReport survey(const FiniteAlgebra& base, std::size_t exponent,
                    const SurveyOptions& options = {});

}  // namespace matlog
