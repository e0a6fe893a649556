#pragma once

// Slow reference implementations used only as test oracles. Nothing here
// calls into the library beyond reading tables and formula trees.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "matlog/algebra.hpp"
#include "matlog/syntax.hpp"

namespace oracle {

using matlog::Element;
using matlog::FiniteAlgebra;
using matlog::Formula;
using Assignment = std::map<std::string, Element>;

inline Element table_lookup(const FiniteAlgebra& a, const std::string& op,
                            const std::vector<Element>& args) {
  const auto idx = a.operation_index(op);
  const auto t = a.table(idx);
  std::size_t pos = 0;
  for (auto x : args) pos = pos * a.size() + x;
  return t[pos];
}

inline Element eval(const Formula& f, const FiniteAlgebra& a, const Assignment& v) {
  if (f.is_variable()) return v.at(f.symbol());
  std::vector<Element> args;
  for (const auto& g : f.args()) args.push_back(eval(g, a, v));
  return table_lookup(a, f.symbol(), args);
}

inline void collect_vars(const Formula& f, std::set<std::string>& out) {
  if (f.is_variable()) {
    out.insert(f.symbol());
    return;
  }
  for (const auto& g : f.args()) collect_vars(g, out);
}

// Calls visit on every assignment of `vars` into the universe.
inline void for_each_assignment(const std::vector<std::string>& vars, std::size_t n,
                                const std::function<void(const Assignment&)>& visit) {
  Assignment v;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == vars.size()) {
      visit(v);
      return;
    }
    for (Element e = 0; e < n; ++e) {
      v[vars[i]] = e;
      rec(i + 1);
    }
  };
  rec(0);
}

inline std::vector<std::string> vars_of(const std::vector<Formula>& fs) {
  std::set<std::string> s;
  for (const auto& f : fs) collect_vars(f, s);
  return {s.begin(), s.end()};
}

inline bool entails(const FiniteAlgebra& a, const std::set<Element>& designated,
                    const std::vector<Formula>& premises, const Formula& conclusion) {
  auto all = premises;
  all.push_back(conclusion);
  bool ok = true;
  for_each_assignment(vars_of(all), a.size(), [&](const Assignment& v) {
    for (const auto& p : premises) {
      if (!designated.count(eval(p, a, v))) return;
    }
    if (!designated.count(eval(conclusion, a, v))) ok = false;
  });
  return ok;
}

inline bool jointly_designated(const FiniteAlgebra& a,
                               const std::set<Element>& designated,
                               const std::vector<Formula>& gamma) {
  bool found = false;
  for_each_assignment(vars_of(gamma), a.size(), [&](const Assignment& v) {
    for (const auto& g : gamma) {
      if (!designated.count(eval(g, a, v))) return;
    }
    found = true;
  });
  return found;
}

// Number of distinct formulas of depth <= d over v variables, given the
// arities of the operations.
inline std::size_t formula_count(std::size_t v, const std::vector<std::size_t>& arities,
                                 std::size_t d) {
  if (d == 0) return v;
  const auto below = formula_count(v, arities, d - 1);
  std::size_t total = v;
  for (auto k : arities) {
    std::size_t p = 1;
    for (std::size_t i = 0; i < k; ++i) p *= below;
    total += p;
  }
  return total;
}

// Information order rank: zero < half < one, given their indices.
struct Ranks {
  Element zero, half, one;
  int rank(Element e) const { return e == zero ? 0 : e == half ? 1 : 2; }
  bool leq(Element a, Element b) const {
    return (a == b) || (a == zero) || (a == half && b == one);
  }
};

// The greatest {zero, one}-valued tuple below `a` in the information order,
// by scanning all Boolean tuples.
inline std::vector<Element> max_boolean_below(const std::vector<Element>& a,
                                              const Ranks& r) {
  const auto n = a.size();
  std::vector<std::vector<Element>> below;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Element> b(n);
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = (mask >> i) & 1 ? r.one : r.zero;
      ok = ok && r.leq(b[i], a[i]);
    }
    if (ok) below.push_back(b);
  }
  for (const auto& m : below) {
    bool top = true;
    for (const auto& b : below) {
      for (std::size_t i = 0; i < n; ++i) top = top && r.leq(b[i], m[i]);
    }
    if (top) return m;
  }
  return {};
}

// Every partition of {0..n-1} as a block-index vector (restricted growth).
inline std::vector<std::vector<std::size_t>> partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> p(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t used) {
    if (i == n) {
      out.push_back(p);
      return;
    }
    for (std::size_t b = 0; b <= used && b < n; ++b) {
      p[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  if (n) rec(0, 0);
  return out;
}

inline bool compatible(const FiniteAlgebra& a, const std::vector<std::size_t>& p) {
  const auto n = a.size();
  for (std::size_t op = 0; op < a.signature().size(); ++op) {
    const auto k = a.signature().operations()[op].arity;
    if (k == 1) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          if (p[x] == p[y] && p[a.apply(op, x)] != p[a.apply(op, y)]) return false;
        }
      }
    } else if (k == 2) {
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          for (Element z = 0; z < n; ++z)
            for (Element w = 0; w < n; ++w)
              if (p[x] == p[y] && p[z] == p[w] &&
                  p[a.apply(op, x, z)] != p[a.apply(op, y, w)])
                return false;
    }
  }
  return true;
}

// Plain fixpoint of term operations of the given arity: start from the
// projections and compose basic operations until nothing new appears.
inline std::set<std::vector<Element>> clone_fixpoint(const FiniteAlgebra& a,
                                                     std::size_t arity) {
  const auto n = a.size();
  std::size_t rows = 1;
  for (std::size_t i = 0; i < arity; ++i) rows *= n;
  std::set<std::vector<Element>> known;
  for (std::size_t j = 0; j < arity; ++j) {
    std::vector<Element> proj(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      std::size_t div = 1;
      for (std::size_t k = j + 1; k < arity; ++k) div *= n;
      proj[r] = static_cast<Element>((r / div) % n);
    }
    known.insert(proj);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::vector<Element>> cur(known.begin(), known.end());
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      const auto k = a.signature().operations()[op].arity;
      if (k == 1) {
        for (const auto& f : cur) {
          std::vector<Element> t(rows);
          for (std::size_t r = 0; r < rows; ++r) t[r] = a.apply(op, f[r]);
          grew = known.insert(t).second || grew;
        }
      } else {
        for (const auto& f : cur) {
          for (const auto& g : cur) {
            std::vector<Element> t(rows);
            for (std::size_t r = 0; r < rows; ++r) t[r] = a.apply(op, f[r], g[r]);
            grew = known.insert(t).second || grew;
          }
        }
      }
    }
  }
  return known;
}

}  // namespace oracle
