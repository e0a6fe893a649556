#include "matlog/power.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace matlog {

namespace {

// Keep precomputed power tables under ~1M entries per operation.
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

}  // namespace

PowerAlgebra::PowerAlgebra(FiniteAlgebra base, std::size_t exponent)
    : base_(std::move(base)), exponent_(exponent) {
  if (exponent_ == 0) throw Error("power exponent must be at least 1");
  size_ = checked_pow(base_.size(), exponent_);
  place_.resize(exponent_);
  std::uint64_t p = 1;
  for (std::size_t i = exponent_; i-- > 0;) {
    place_[i] = p;
    p *= base_.size();
  }

  const auto& ops = base_.signature().operations();
  for (std::size_t op = 0; op < ops.size(); ++op) {
    std::uint64_t entries = 1;
    bool fits = true;
    for (std::size_t k = 0; k < ops[op].arity; ++k) {
      if (entries > kTableLimit / size_) {
        fits = false;
        break;
      }
      entries *= size_;
    }
    if (!fits) {
      tables_.clear();
      break;
    }
    std::vector<Code> t(entries);
    std::vector<Code> args(ops[op].arity);
    for (std::uint64_t idx = 0; idx < entries; ++idx) {
      auto rest = idx;
      for (std::size_t k = ops[op].arity; k-- > 0;) {
        args[k] = rest % size_;
        rest /= size_;
      }
      std::vector<Element> comp(ops[op].arity);
      Code out = 0;
      for (std::size_t i = 0; i < exponent_; ++i) {
        for (std::size_t k = 0; k < args.size(); ++k) {
          comp[k] = component(args[k], i);
        }
        out += place_[i] * base_.apply(op, comp);
      }
      t[idx] = out;
    }
    tables_.push_back(std::move(t));
  }
}

std::vector<Element> PowerAlgebra::decode(Code c) const {
  if (c >= size_) throw Error("tuple code out of range");
  std::vector<Element> t(exponent_);
  for (std::size_t i = exponent_; i-- > 0;) {
    t[i] = static_cast<Element>(c % base_.size());
    c /= base_.size();
  }
  return t;
}

Code PowerAlgebra::encode(std::span<const Element> tuple) const {
  if (tuple.size() != exponent_) {
    throw Error("tuple length " + std::to_string(tuple.size()) +
                " does not match exponent " + std::to_string(exponent_));
  }
  Code c = 0;
  for (auto e : tuple) {
    if (e >= base_.size()) throw Error("tuple entry outside the universe");
    c = c * base_.size() + e;
  }
  return c;
}

Element PowerAlgebra::component(Code c, std::size_t i) const {
  return static_cast<Element>((c / place_[i]) % base_.size());
}

Code PowerAlgebra::apply(std::size_t op, std::span<const Code> args) const {
  if (!tables_.empty()) {
    std::uint64_t idx = 0;
    for (auto a : args) idx = idx * size_ + a;
    return tables_[op][idx];
  }
  std::vector<Element> comp(args.size());
  Code out = 0;
  for (std::size_t i = 0; i < exponent_; ++i) {
    for (std::size_t k = 0; k < args.size(); ++k) {
      comp[k] = component(args[k], i);
    }
    out += place_[i] * base_.apply(op, comp);
  }
  return out;
}

Code PowerAlgebra::apply(std::size_t op, Code a) const {
  if (!tables_.empty()) return tables_[op][a];
  const Code args[] = {a};
  return apply(op, std::span<const Code>(args));
}

Code PowerAlgebra::apply(std::size_t op, Code a, Code b) const {
  if (!tables_.empty()) return tables_[op][a * size_ + b];
  const Code args[] = {a, b};
  return apply(op, std::span<const Code>(args));
}

Code PowerAlgebra::diagonal(Element e) const {
  std::vector<Element> t(exponent_, e);
  return encode(t);
}

std::string PowerAlgebra::format(Code c) const {
  std::string s = "(";
  const auto t = decode(c);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += base_.element_name(t[i]);
  }
  return s + ")";
}

Code PowerAlgebra::parse(std::string_view text) const {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '(' && ch != ')') s += ch;
  }
  std::vector<std::string> parts;
  if (s.find(',') != std::string::npos || exponent_ == 1) {
    std::size_t start = 0;
    while (true) {
      const auto pos = s.find(',', start);
      parts.push_back(s.substr(start, pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
  } else {
    for (char ch : s) parts.emplace_back(1, ch);
  }
  if (parts.size() != exponent_) {
    throw Error("tuple '" + std::string(text) + "' does not have " +
                std::to_string(exponent_) + " components");
  }
  std::vector<Element> t;
  for (const auto& p : parts) t.push_back(base_.element_or_throw(p));
  return encode(t);
}

FiniteAlgebra PowerAlgebra::as_algebra() const {
  AlgebraSpec spec;
  spec.name = base_.name() + "^" + std::to_string(exponent_);
  for (Code c = 0; c < size_; ++c) spec.universe.push_back(format(c));
  const auto& ops = base_.signature().operations();
  for (std::size_t op = 0; op < ops.size(); ++op) {
    const auto entries = checked_pow(size_, ops[op].arity);
    OperationSpec o{ops[op].name, ops[op].arity, {}};
    o.table.reserve(entries);
    std::vector<Code> args(ops[op].arity);
    for (std::uint64_t idx = 0; idx < entries; ++idx) {
      auto rest = idx;
      for (std::size_t k = args.size(); k-- > 0;) {
        args[k] = rest % size_;
        rest /= size_;
      }
      o.table.push_back(static_cast<Element>(apply(op, args)));
    }
    spec.operations.push_back(std::move(o));
  }
  return FiniteAlgebra::make(std::move(spec));
}

bool is_closed(const PowerAlgebra& power, std::span<const Code> subset) {
  std::unordered_set<Code> members(subset.begin(), subset.end());
  const auto& ops = power.base().signature().operations();
  std::vector<Code> elems(members.begin(), members.end());
  for (std::size_t op = 0; op < ops.size(); ++op) {
    const auto arity = ops[op].arity;
    std::vector<std::size_t> pos(arity, 0);
    std::vector<Code> args(arity);
    if (elems.empty()) return true;
    while (true) {
      for (std::size_t k = 0; k < arity; ++k) args[k] = elems[pos[k]];
      if (!members.count(power.apply(op, args))) return false;
      std::size_t k = arity;
      while (k > 0 && ++pos[k - 1] == elems.size()) pos[--k] = 0;
      if (k == 0) break;
    }
  }
  return true;
}

SubalgebraOfPower::SubalgebraOfPower(PowerAlgebra power,
                                     std::vector<Code> carrier)
    : power_(std::move(power)), carrier_(std::move(carrier)) {
  std::sort(carrier_.begin(), carrier_.end());
  carrier_.erase(std::unique(carrier_.begin(), carrier_.end()),
                 carrier_.end());
  if (carrier_.empty()) throw Error("subalgebra carrier is empty");
  if (carrier_.back() >= power_.size()) {
    throw Error("carrier element outside the power");
  }
  if (!is_closed(power_, carrier_)) {
    throw Error("carrier is not closed under the operations");
  }
}

bool SubalgebraOfPower::contains(Code c) const noexcept {
  return std::binary_search(carrier_.begin(), carrier_.end(), c);
}

std::size_t SubalgebraOfPower::index_of(Code c) const {
  auto it = std::lower_bound(carrier_.begin(), carrier_.end(), c);
  if (it == carrier_.end() || *it != c) {
    throw Error("element " + power_.format(c) + " not in carrier");
  }
  return static_cast<std::size_t>(it - carrier_.begin());
}

std::string SubalgebraOfPower::format() const {
  std::string s = "{";
  for (std::size_t i = 0; i < carrier_.size(); ++i) {
    if (i) s += ", ";
    s += power_.format(carrier_[i]);
  }
  return s + "}";
}

namespace {

// Worklist closure: every new element is combined with everything known.
std::vector<Code> close(const PowerAlgebra& power,
                        std::span<const Code> generators) {
  std::unordered_set<Code> seen;
  std::vector<Code> elems;
  for (auto g : generators) {
    if (g >= power.size()) throw Error("generator outside the power");
    if (seen.insert(g).second) elems.push_back(g);
  }
  const auto& ops = power.base().signature().operations();
  std::size_t done = 0;
  while (done < elems.size()) {
    const std::size_t frontier_end = elems.size();
    for (std::size_t op = 0; op < ops.size(); ++op) {
      const auto arity = ops[op].arity;
      std::vector<std::size_t> pos(arity, 0);
      std::vector<Code> args(arity);
      // Tuples over [0, frontier_end) with at least one index >= done.
      while (true) {
        bool fresh = false;
        for (std::size_t k = 0; k < arity; ++k) {
          args[k] = elems[pos[k]];
          fresh = fresh || pos[k] >= done;
        }
        if (fresh) {
          const auto r = power.apply(op, args);
          if (seen.insert(r).second) elems.push_back(r);
        }
        std::size_t k = arity;
        while (k > 0 && ++pos[k - 1] == frontier_end) pos[--k] = 0;
        if (k == 0) break;
      }
    }
    done = frontier_end;
  }
  return elems;
}

}  // namespace

SubalgebraOfPower subalgebra_closure(const PowerAlgebra& power,
                                     std::span<const Code> generators) {
  if (generators.empty()) {
    throw Error("cannot close an empty generator set (no constants)");
  }
  return SubalgebraOfPower(power, close(power, generators));
}

SubuniverseListing all_subuniverses(const PowerAlgebra& power,
                                    SubuniverseMode mode,
                                    std::size_t max_generators) {
  SubuniverseListing out;
  std::set<std::vector<Code>> carriers;
  const auto n = power.size();

  if (mode == SubuniverseMode::exhaustive) {
    if (n > kExhaustiveSubuniverseLimit) {
      throw Error("exhaustive subuniverse scan refused: power has " +
                  std::to_string(n) + " elements (limit " +
                  std::to_string(kExhaustiveSubuniverseLimit) + ")");
    }
    std::vector<Code> subset;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      subset.clear();
      for (Code c = 0; c < n; ++c) {
        if (mask >> c & 1) subset.push_back(c);
      }
      if (is_closed(power, subset)) carriers.insert(subset);
    }
    out.complete = true;
    out.note = "exhaustive subset scan";
  } else {
    if (max_generators == 0) throw Error("generated mode needs >= 1 generator");
    std::vector<Code> gens;
    // Generator sets as strictly increasing index sequences.
    auto recurse = [&](auto&& self, Code start) -> void {
      if (!gens.empty()) {
        auto c = close(power, gens);
        std::sort(c.begin(), c.end());
        carriers.insert(std::move(c));
      }
      if (gens.size() == max_generators) return;
      for (Code g = start; g < n; ++g) {
        gens.push_back(g);
        self(self, g + 1);
        gens.pop_back();
      }
    };
    recurse(recurse, 0);
    out.complete = n <= max_generators;
    out.note = "generated mode: complete only for subalgebras with at most " +
               std::to_string(max_generators) + " generators";
  }

  for (const auto& c : carriers) out.subalgebras.emplace_back(power, c);
  std::stable_sort(out.subalgebras.begin(), out.subalgebras.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a.carrier() < b.carrier();
                   });
  return out;
}

}  // namespace matlog
