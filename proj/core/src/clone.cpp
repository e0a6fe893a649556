#include "matlog/clone.hpp"

#include <unordered_map>

namespace matlog {

namespace {

using Table = std::vector<Element>;

std::uint64_t code_of(const Table& t, std::size_t n) {
  std::uint64_t c = 0;
  for (auto e : t) c = c * n + e;
  return c;
}

// Membership over table codes; dense when the code space is small.
class SeenSet {
 public:
  SeenSet(std::size_t n, std::size_t points) {
    const auto space = checked_pow(n, points);
    if (space <= (1u << 24)) dense_.assign(space, false);
  }
  // True when newly inserted.
  bool insert(std::uint64_t code) {
    if (!dense_.empty()) {
      if (dense_[code]) return false;
      dense_[code] = true;
      return true;
    }
    return sparse_.emplace(code, true).second;
  }

 private:
  std::vector<bool> dense_;
  std::unordered_map<std::uint64_t, bool> sparse_;
};

struct Saturation {
  std::vector<TermOperation> ops;
  std::size_t layers = 0;
  bool saturated = true;
  std::size_t added = 0;
};

// Composes basic operations with the current tables, layer by layer, until
// nothing new appears or `cap` layers have run.
Saturation saturate(const FiniteAlgebra& algebra, std::size_t arity,
                    std::vector<TermOperation> seed, std::size_t cap) {
  const auto n = algebra.size();
  const auto points = checked_pow(n, arity);
  SeenSet seen(n, points);
  Saturation s;
  for (auto& t : seed) {
    if (seen.insert(code_of(t.table, n))) s.ops.push_back(std::move(t));
  }
  const auto& sig = algebra.signature().operations();
  std::size_t frontier = 0;
  Table res(points);
  constexpr auto none = static_cast<std::size_t>(-1);
  // Unary when j == none.
  auto consider = [&](std::size_t op, std::size_t i, std::size_t j) {
    const auto t = algebra.table(op);
    const auto& g = s.ops[i].table;
    if (j == none) {
      for (std::size_t p = 0; p < points; ++p) res[p] = t[g[p]];
    } else {
      const auto& h = s.ops[j].table;
      for (std::size_t p = 0; p < points; ++p) res[p] = t[g[p] * n + h[p]];
    }
    if (!seen.insert(code_of(res, n))) return;
    std::vector<Formula> args{s.ops[i].witness};
    if (j != none) args.push_back(s.ops[j].witness);
    s.ops.push_back({res, Formula::apply(sig[op].name, std::move(args))});
    ++s.added;
  };
  while (true) {
    const auto end = s.ops.size();
    if (frontier == end) break;
    if (s.layers == cap) {
      s.saturated = false;
      break;
    }
    ++s.layers;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      if (sig[op].arity == 1) {
        for (auto i = frontier; i < end; ++i) consider(op, i, none);
      } else {
        for (std::size_t i = 0; i < end; ++i) {
          for (auto j = frontier; j < end; ++j) consider(op, i, j);
        }
        for (auto i = frontier; i < end; ++i) {
          for (std::size_t j = 0; j < frontier; ++j) consider(op, i, j);
        }
      }
    }
    frontier = end;
  }
  return s;
}

std::vector<TermOperation> projections(std::size_t n, std::size_t arity) {
  std::vector<TermOperation> out;
  const auto points = checked_pow(n, arity);
  const char* names[] = {"x", "y"};
  for (std::size_t k = 0; k < arity; ++k) {
    Table t(points);
    for (std::size_t p = 0; p < points; ++p) {
      t[p] = static_cast<Element>(arity == 1 ? p : (k == 0 ? p / n : p % n));
    }
    out.push_back({std::move(t), var(names[k])});
  }
  return out;
}

void check_clone_input(const FiniteAlgebra& algebra, std::size_t max_arity) {
  if (max_arity < 1 || max_arity > 2) {
    throw Error("clone saturation supports arity 1 or 2, not " +
                std::to_string(max_arity));
  }
  if (algebra.size() > kCloneMaxUniverse) {
    throw Error("clone saturation needs at most " +
                std::to_string(kCloneMaxUniverse) + " elements; " +
                algebra.name() + " has " + std::to_string(algebra.size()));
  }
  for (const auto& op : algebra.signature().operations()) {
    if (op.arity > 2) {
      throw Error("operation " + op.name + " has arity " +
                  std::to_string(op.arity) + "; only arity <= 2 is supported");
    }
  }
}

}  // namespace

const std::vector<TermOperation>& Clone::operations(std::size_t arity) const {
  if (arity < 1 || arity > parts_.size()) {
    throw Error("clone has no part of arity " + std::to_string(arity));
  }
  return parts_[arity - 1];
}

const TermOperation* Clone::find(std::size_t arity, const Table& table) const {
  if (arity < 1 || arity > parts_.size()) return nullptr;
  for (const auto& t : parts_[arity - 1]) {
    if (t.table == table) return &t;
  }
  return nullptr;
}

Clone generate_clone(const FiniteAlgebra& algebra, std::size_t max_arity,
                     std::size_t cap) {
  check_clone_input(algebra, max_arity);
  Clone c;
  for (std::size_t k = 1; k <= max_arity; ++k) {
    auto s = saturate(algebra, k, projections(algebra.size(), k), cap);
    c.parts_.push_back(std::move(s.ops));
    c.layers_.push_back(s.layers);
    c.saturated_ = c.saturated_ && s.saturated;
  }
  return c;
}

std::size_t resaturate(const FiniteAlgebra& algebra, const Clone& clone) {
  std::size_t added = 0;
  for (std::size_t k = 1; k <= clone.max_arity(); ++k) {
    added += saturate(algebra, k, clone.operations(k), 1).added;
  }
  return added;
}

std::vector<std::vector<Element>> subuniverses(const FiniteAlgebra& algebra) {
  const auto n = algebra.size();
  if (n > 16) throw Error("subuniverse scan needs at most 16 elements");
  const auto& sig = algebra.signature().operations();
  std::vector<std::vector<Element>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Element> s;
    for (Element e = 0; e < n; ++e) {
      if (mask >> e & 1) s.push_back(e);
    }
    bool closed = true;
    for (std::size_t op = 0; op < sig.size() && closed; ++op) {
      const auto arity = sig[op].arity;
      std::vector<std::size_t> pos(arity, 0);
      std::vector<Element> args(arity);
      while (closed) {
        for (std::size_t k = 0; k < arity; ++k) args[k] = s[pos[k]];
        closed = mask >> algebra.apply(op, args) & 1;
        std::size_t k = arity;
        while (k > 0 && ++pos[k - 1] == s.size()) pos[--k] = 0;
        if (k == 0) break;
      }
    }
    if (closed) out.push_back(std::move(s));
  }
  return out;
}

namespace {

// A subuniverse of `host` that operation `op` of `other` does not preserve.
std::optional<std::string> separating_subuniverse(const FiniteAlgebra& host,
                                                  const FiniteAlgebra& other,
                                                  std::size_t op) {
  const auto& sym = other.signature().operations()[op];
  for (const auto& s : subuniverses(host)) {
    std::vector<bool> in(host.size(), false);
    for (auto e : s) in[e] = true;
    std::vector<std::size_t> pos(sym.arity, 0);
    std::vector<Element> args(sym.arity);
    while (true) {
      for (std::size_t k = 0; k < sym.arity; ++k) args[k] = s[pos[k]];
      const auto r = other.apply(op, args);
      if (!in[r]) {
        std::string set, call;
        for (auto e : s) set += (set.empty() ? "" : ",") + host.element_name(e);
        for (auto a : args) call += (call.empty() ? "" : ",") + host.element_name(a);
        return "{" + set + "} is closed in " + host.name() +
               ", so every term of " + host.name() + " preserves it, but " +
               sym.name + "(" + call + ") = " + host.element_name(r);
      }
      std::size_t k = sym.arity;
      while (k > 0 && ++pos[k - 1] == s.size()) pos[--k] = 0;
      if (k == 0) break;
    }
  }
  return std::nullopt;
}

std::vector<CloneWitness> locate(const FiniteAlgebra& target,
                                 const FiniteAlgebra& host, const Clone& clone,
                                 std::vector<std::string>& explanation) {
  std::vector<CloneWitness> out;
  const auto& sig = target.signature().operations();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const auto t = target.table(op);
    CloneWitness w{sig[op].name, sig[op].arity, std::nullopt};
    if (const auto* found = clone.find(sig[op].arity, Table(t.begin(), t.end()))) {
      w.term = found->witness;
    } else if (auto why = separating_subuniverse(host, target, op)) {
      explanation.push_back(sig[op].name + " of " + target.name() +
                            " is not a term operation of " + host.name() +
                            ": " + *why);
    } else {
      explanation.push_back(sig[op].name + " of " + target.name() +
                            " is outside the saturated clone of " + host.name() +
                            "; no subuniverse separates them");
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

TermEquivalence term_equivalent(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                std::size_t cap) {
  if (a.universe() != b.universe()) {
    throw Error("term equivalence needs a common universe; " + a.name() +
                " and " + b.name() + " differ");
  }
  const auto arity = std::max<std::size_t>(
      1, std::max(a.signature().max_arity(), b.signature().max_arity()));
  const auto ca = generate_clone(a, arity, cap);
  const auto cb = generate_clone(b, arity, cap);
  TermEquivalence r;
  r.a_in_b = locate(a, b, cb, r.explanation);
  r.b_in_a = locate(b, a, ca, r.explanation);
  r.equivalent = r.explanation.empty();
  if (!ca.saturated() || !cb.saturated()) {
    r.explanation.push_back("layer cap reached before saturation; verdict partial");
    r.equivalent = false;
  }
  return r;
}

}  // namespace matlog
