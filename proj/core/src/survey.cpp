#include "matlog/survey.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace matlog {

std::size_t SurveyReport::disagreements() const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [](const SurveyRow& r) { return !r.agrees(); }));
}

std::size_t SurveyReport::sep_inconsistencies() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const SurveyRow& r) {
        return r.sep_consistent && !*r.sep_consistent;
      }));
}

std::size_t SurveyReport::join_disagreements() const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [](const SurveyRow& r) { return !r.join_agrees(); }));
}

SurveyRow survey_carrier(const SubalgebraOfPower& c, const SurveyOptions& options,
                         std::size_t id) {
  const auto& p = c.power();
  SurveyRow r;
  r.id = id;
  r.carrier = c.format();
  r.size = c.size();
  r.skeleton = boolean_skeleton(c).elements.size();

  const auto verdict = admits_expansion(c);
  r.admits = verdict.admits;
  r.reason = verdict.reason;
  if (verdict.escape) {
    r.witness = p.format(verdict.escape->first) + " -> " +
                p.format(verdict.escape->second);
  }

  r.canonical_total = canonical_sigma(c).map.has_value();

  const auto frame = frame_of(p);
  const auto ext = build_external(Matrix(p.base(), {frame.one}));
  PowerAlgebra ext_power(ext.algebra(), p.exponent());
  r.expanded_closed =
      r.skeleton > 0 &&
      subalgebra_closure(ext_power, c.carrier()).size() == c.size();

  const bool scanned = c.size() <= options.scan_limit;
  if (scanned) {
    r.scan_admits =
        scan_boolean_conuclei(c, {.complete = true}).matches > 0;
  }

  if (verdict.admits) {
    r.sep_consistent = check_sep(*verdict.sigma, c).holds;
  } else if (scanned && r.skeleton > 0) {
    r.sep_consistent =
        scan_boolean_conuclei(c, {.complete = true, .sep = true}).matches == 0;
  }

  if (scanned && join_gate(p.base())) {
    r.join_criterion = scan_boolean_conuclei(c, {.join_criterion = true}).matches > 0;
  }

  r.scope = "carrier";
  if (!verdict.admits && scanned && options.search_embeddings) {
    r.embeddings = search_embeddings(c, options.embedding_exponent);
    r.scope = "embeddings into " + p.base().name() + "^J, J <= " +
              std::to_string(options.embedding_exponent);
  }
  return r;
}

SurveyReport survey(const FiniteAlgebra& base, std::size_t exponent,
                    const SurveyOptions& options) {
  PowerAlgebra power(base, exponent);
  const auto listing =
      all_subuniverses(power, options.mode, options.max_generators);
  SurveyReport report;
  report.algebra = base.name();
  report.exponent = exponent;
  report.complete = listing.complete;
  report.note = listing.note;
  report.gate = join_gate(base);
  const auto& subs = listing.subalgebras;
  report.rows.resize(subs.size());

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (auto i = next++; i < subs.size(); i = next++) {
      report.rows[i] = survey_carrier(subs[i], options, i);
    }
  };
  const auto threads = std::max<std::size_t>(1, options.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return report;
}

}  // namespace matlog
