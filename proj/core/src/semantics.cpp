#include "matlog/semantics.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <map>
#include <thread>

namespace matlog {

Element Valuation::at(std::string_view variable) const {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i] == variable) return values.at(i);
  }
  throw Error("variable '" + std::string(variable) + "' is unassigned");
}

std::string Valuation::format(const FiniteAlgebra& algebra) const {
  std::string s;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (i) s += ", ";
    s += variables[i] + "=" + algebra.element_name(values[i]);
  }
  return s;
}

CompiledFormula::CompiledFormula(const Formula& f, const FiniteAlgebra& algebra,
                                 const std::vector<std::string>& variable_order)
    : n_(algebra.size()), vars_(variable_order.size()) {
  for (std::size_t op = 0; op < algebra.signature().size(); ++op) {
    const auto t = algebra.table(op);
    tables_.emplace_back(t.begin(), t.end());
  }
  std::map<std::string, std::uint32_t, std::less<>> var_slot;
  for (std::size_t i = 0; i < variable_order.size(); ++i) {
    var_slot.emplace(variable_order[i], static_cast<std::uint32_t>(i));
  }
  std::uint32_t next_slot = static_cast<std::uint32_t>(vars_);
  auto lower = [&](auto&& self, const Formula& g) -> std::uint32_t {
    if (g.is_variable()) {
      auto it = var_slot.find(g.symbol());
      if (it == var_slot.end()) {
        throw Error("variable '" + g.symbol() + "' is unassigned");
      }
      return it->second;
    }
    const auto idx = algebra.signature().find(g.symbol());
    if (!idx || algebra.signature().operations()[*idx].arity != g.args().size()) {
      throw Error("operation '" + g.symbol() + "' is not in the signature of " +
                  algebra.name());
    }
    Instr in{static_cast<std::uint32_t>(*idx),
             static_cast<std::uint32_t>(g.args().size()),
             {0, 0},
             {}};
    for (std::size_t k = 0; k < g.args().size(); ++k) {
      const auto s = self(self, g.args()[k]);
      if (k < 2) {
        in.args[k] = s;
      } else {
        in.extra.push_back(s);
      }
    }
    code_.push_back(std::move(in));
    return next_slot++;
  };
  result_slot_ = lower(lower, f);
}

Element CompiledFormula::run(std::span<const Element> values,
                             std::vector<Element>& scratch) const {
  if (code_.empty()) return values[result_slot_];
  scratch.resize(vars_ + code_.size());
  std::copy(values.begin(), values.begin() + vars_, scratch.begin());
  Element* slot = scratch.data();
  std::size_t out = vars_;
  for (const auto& in : code_) {
    const Element* t = tables_[in.op].data();
    switch (in.arity) {
      case 1:
        slot[out] = t[slot[in.args[0]]];
        break;
      case 2:
        slot[out] = t[slot[in.args[0]] * n_ + slot[in.args[1]]];
        break;
      default: {
        std::size_t idx = slot[in.args[0]] * n_ + slot[in.args[1]];
        for (auto a : in.extra) idx = idx * n_ + slot[a];
        slot[out] = t[idx];
      }
    }
    ++out;
  }
  return slot[result_slot_];
}

Element CompiledFormula::run(std::span<const Element> values) const {
  std::vector<Element> scratch;
  return run(values, scratch);
}

EvalOptions default_eval_options() {
  EvalOptions o;
  if (const char* env = std::getenv("MATLOG_VAR_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) o.var_cap = v;
  }
  return o;
}

Element evaluate(const Formula& f, const FiniteAlgebra& algebra,
                 const Valuation& v) {
  if (v.values.size() != v.variables.size()) {
    throw Error("valuation has mismatched variables and values");
  }
  for (auto e : v.values) {
    if (e >= algebra.size()) throw Error("valuation value outside universe");
  }
  CompiledFormula c(f, algebra, v.variables);
  return c.run(v.values);
}

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

void check_cap(std::size_t vars, const EvalOptions& options) {
  if (vars > options.var_cap) {
    throw Error("formula set has " + std::to_string(vars) +
                " variables, above the cap of " +
                std::to_string(options.var_cap) +
                " (raise with --var-cap or MATLOG_VAR_CAP)");
  }
}

void digits_of(std::uint64_t index, std::size_t n, std::vector<Element>& out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Element>(index % n);
    index /= n;
  }
}

// Increments the lexicographic odometer; last variable least significant.
void advance(std::vector<Element>& digits, std::size_t n) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < n) return;
    digits[i] = 0;
  }
}

// Finds the least valuation index in [0, total) satisfying `hit`, scanning
// in parallel chunks. `hit` gets the digit vector and a per-thread scratch.
template <typename Hit>
std::uint64_t find_first(std::uint64_t total, std::size_t vars, std::size_t n,
                         std::size_t threads, Hit hit) {
  constexpr std::uint64_t kMinPerThread = 1 << 14;
  threads = std::max<std::size_t>(
      1, std::min<std::uint64_t>(threads, total / kMinPerThread));
  std::atomic<std::uint64_t> best{kNone};
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Element> digits(vars);
    std::vector<Element> scratch;
    digits_of(begin, n, digits);
    for (std::uint64_t i = begin; i < end; ++i) {
      if ((i & 0xfff) == 0 && best.load(std::memory_order_relaxed) < begin) {
        return;
      }
      if (hit(digits, scratch)) {
        auto cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
      advance(digits, n);
    }
  };
  if (threads == 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    const auto chunk = (total + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const auto b = t * chunk;
      const auto e = std::min(total, b + chunk);
      if (b >= e) break;
      pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }
  return best.load();
}

}  // namespace

Verdict entails(const Matrix& matrix, std::span<const Formula> premises,
                const Formula& conclusion, const EvalOptions& options) {
  std::vector<Formula> all(premises.begin(), premises.end());
  all.push_back(conclusion);
  const auto vars = variables_of(all);
  check_cap(vars.size(), options);

  const auto& algebra = matrix.algebra();
  std::vector<CompiledFormula> prem;
  for (const auto& p : premises) prem.emplace_back(p, algebra, vars);
  const CompiledFormula concl(conclusion, algebra, vars);

  const auto n = algebra.size();
  const auto total = checked_pow(n, vars.size());
  const auto first = find_first(
      total, vars.size(), n, options.threads,
      [&](const std::vector<Element>& d, std::vector<Element>& scratch) {
        for (const auto& p : prem) {
          if (!matrix.is_designated(p.run(d, scratch))) return false;
        }
        return !matrix.is_designated(concl.run(d, scratch));
      });

  Verdict v;
  if (first == kNone) {
    v.valuations_checked = total;
    return v;
  }
  v.valid = false;
  v.valuations_checked = first + 1;
  Countermodel cm;
  cm.valuation.variables = vars;
  cm.valuation.values.resize(vars.size());
  digits_of(first, n, cm.valuation.values);
  for (const auto& p : prem) cm.premise_values.push_back(p.run(cm.valuation.values));
  cm.conclusion_value = concl.run(cm.valuation.values);
  v.countermodel = std::move(cm);
  return v;
}

Verdict is_theorem(const Matrix& matrix, const Formula& f,
                   const EvalOptions& options) {
  return entails(matrix, {}, f, options);
}

AntitheoremVerdict is_antitheorem(const Matrix& matrix,
                                  std::span<const Formula> gamma,
                                  const EvalOptions& options) {
  AntitheoremVerdict out;
  if (gamma.empty()) {
    out.witness = Valuation{};
    return out;
  }
  std::vector<Formula> all(gamma.begin(), gamma.end());
  const auto vars = variables_of(all);
  check_cap(vars.size(), options);
  const auto& algebra = matrix.algebra();
  std::vector<CompiledFormula> compiled;
  for (const auto& g : gamma) compiled.emplace_back(g, algebra, vars);
  const auto n = algebra.size();
  const auto first = find_first(
      checked_pow(n, vars.size()), vars.size(), n, options.threads,
      [&](const std::vector<Element>& d, std::vector<Element>& scratch) {
        for (const auto& c : compiled) {
          if (!matrix.is_designated(c.run(d, scratch))) return false;
        }
        return true;
      });
  if (first == kNone) {
    out.antitheorem = true;
    return out;
  }
  Valuation w{vars, std::vector<Element>(vars.size())};
  digits_of(first, n, w.values);
  out.witness = std::move(w);
  return out;
}

EquationalVerdict eq_consequence(const FiniteAlgebra& algebra,
                                 std::span<const Equation> premises,
                                 const Equation& conclusion,
                                 const EvalOptions& options) {
  std::vector<Formula> all;
  for (const auto& e : premises) {
    all.push_back(e.left);
    all.push_back(e.right);
  }
  all.push_back(conclusion.left);
  all.push_back(conclusion.right);
  const auto vars = variables_of(all);
  check_cap(vars.size(), options);
  std::vector<CompiledFormula> compiled;
  for (const auto& f : all) compiled.emplace_back(f, algebra, vars);
  const auto n = algebra.size();
  const auto first = find_first(
      checked_pow(n, vars.size()), vars.size(), n, options.threads,
      [&](const std::vector<Element>& d, std::vector<Element>& scratch) {
        for (std::size_t i = 0; i + 2 < compiled.size(); i += 2) {
          if (compiled[i].run(d, scratch) != compiled[i + 1].run(d, scratch)) {
            return false;
          }
        }
        const auto k = compiled.size() - 2;
        return compiled[k].run(d, scratch) != compiled[k + 1].run(d, scratch);
      });
  EquationalVerdict out;
  if (first != kNone) {
    out.valid = false;
    Valuation w{vars, std::vector<Element>(vars.size())};
    digits_of(first, n, w.values);
    out.counterexample = std::move(w);
  }
  return out;
}

std::vector<Element> value_table(const Formula& f, const FiniteAlgebra& algebra,
                                 const std::vector<std::string>& variables) {
  const CompiledFormula c(f, algebra, variables);
  const auto n = algebra.size();
  const auto total = checked_pow(n, variables.size());
  std::vector<Element> out;
  out.reserve(total);
  std::vector<Element> digits(variables.size(), 0);
  std::vector<Element> scratch;
  for (std::uint64_t i = 0; i < total; ++i) {
    out.push_back(c.run(digits, scratch));
    advance(digits, n);
  }
  return out;
}

}  // namespace matlog
