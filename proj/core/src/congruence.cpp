#include "matlog/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace matlog {

namespace {

std::vector<std::size_t> normalize(const std::vector<std::size_t>& raw,
                                   std::size_t& blocks) {
  std::map<std::size_t, std::size_t> relabel;
  std::vector<std::size_t> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, inserted] = relabel.emplace(raw[i], relabel.size());
    out[i] = it->second;
  }
  blocks = relabel.size();
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Closes the relation in `uf` under all operations.
void close_under_operations(const FiniteAlgebra& algebra, UnionFind& uf) {
  const auto n = algebra.size();
  const auto& ops = algebra.signature().operations();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t op = 0; op < ops.size(); ++op) {
      const auto arity = ops[op].arity;
      // Vary one argument position at a time; the other arguments range
      // over all tuples. That suffices for compatibility by transitivity.
      const auto table = algebra.table(op);
      const auto entries = table.size();
      for (std::size_t pos = 0; pos < arity; ++pos) {
        std::size_t stride = 1;
        for (std::size_t k = pos + 1; k < arity; ++k) stride *= n;
        for (std::size_t idx = 0; idx < entries; ++idx) {
          const auto digit = (idx / stride) % n;
          for (std::size_t other = digit + 1; other < n; ++other) {
            if (uf.find(digit) != uf.find(other)) continue;
            const auto idx2 = idx + (other - digit) * stride;
            changed |= uf.unite(table[idx], table[idx2]);
          }
        }
      }
    }
  }
}

Congruence from_union_find(UnionFind& uf) {
  std::vector<std::size_t> b(uf.parent.size());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = uf.find(i);
  return Congruence(std::move(b));
}

}  // namespace

Congruence::Congruence(std::vector<std::size_t> block_of) {
  block_of_ = normalize(block_of, blocks_);
}

Congruence Congruence::identity(std::size_t n) {
  std::vector<std::size_t> b(n);
  std::iota(b.begin(), b.end(), 0);
  return Congruence(std::move(b));
}

Congruence Congruence::total(std::size_t n) {
  return Congruence(std::vector<std::size_t>(n, 0));
}

bool Congruence::refines(const Congruence& other) const {
  if (other.size() != size()) throw Error("partition size mismatch");
  std::map<std::size_t, std::size_t> image;
  for (std::size_t i = 0; i < block_of_.size(); ++i) {
    auto [it, inserted] = image.emplace(block_of_[i], other.block_of_[i]);
    if (!inserted && it->second != other.block_of_[i]) return false;
  }
  return true;
}

std::vector<std::vector<Element>> Congruence::blocks() const {
  std::vector<std::vector<Element>> out(blocks_);
  for (std::size_t i = 0; i < block_of_.size(); ++i) {
    out[block_of_[i]].push_back(static_cast<Element>(i));
  }
  return out;
}

std::string Congruence::format(const FiniteAlgebra& algebra) const {
  std::string s;
  for (const auto& block : blocks()) {
    s += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) s += ',';
      s += algebra.element_name(block[i]);
    }
    s += '}';
  }
  return s;
}

bool is_congruence(const FiniteAlgebra& algebra, const Congruence& theta) {
  if (theta.size() != algebra.size()) return false;
  UnionFind uf(algebra.size());
  for (Element e = 0; e < algebra.size(); ++e) {
    for (Element f = e + 1; f < algebra.size(); ++f) {
      if (theta.related(e, f)) uf.unite(e, f);
    }
  }
  close_under_operations(algebra, uf);
  return from_union_find(uf) == theta;
}

Congruence principal_congruence(const FiniteAlgebra& algebra, Element a,
                                Element b) {
  if (a >= algebra.size() || b >= algebra.size()) {
    throw Error("element outside the universe");
  }
  UnionFind uf(algebra.size());
  uf.unite(a, b);
  close_under_operations(algebra, uf);
  return from_union_find(uf);
}

Congruence join(const Congruence& x, const Congruence& y) {
  if (x.size() != y.size()) throw Error("partition size mismatch");
  UnionFind uf(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x.related(i, j) || y.related(i, j)) uf.unite(i, j);
    }
  }
  return from_union_find(uf);
}

std::vector<Congruence> congruences(const FiniteAlgebra& algebra) {
  const auto n = algebra.size();
  std::set<Congruence> found{Congruence::identity(n)};
  std::vector<Congruence> principals;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      principals.push_back(principal_congruence(algebra, a, b));
    }
  }
  // Joins of principal congruences are congruences (the join of compatible
  // partitions is compatible), and every congruence is such a join.
  std::vector<Congruence> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const auto& c : frontier) {
      for (const auto& p : principals) {
        auto j = join(c, p);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

bool saturates(const Congruence& theta, const Matrix& matrix) {
  for (Element a = 0; a < theta.size(); ++a) {
    for (Element b = a + 1; b < theta.size(); ++b) {
      if (theta.related(a, b) &&
          matrix.is_designated(a) != matrix.is_designated(b)) {
        return false;
      }
    }
  }
  return true;
}

Congruence leibniz_congruence(const Matrix& matrix) {
  const auto& algebra = matrix.algebra();
  const auto n = algebra.size();
  const auto& ops = algebra.signature().operations();

  std::vector<std::size_t> block(n);
  for (Element e = 0; e < n; ++e) block[e] = matrix.is_designated(e) ? 0 : 1;
  Congruence current(block);

  // Split a and b apart whenever some one-step context sends them to
  // different blocks. The fixpoint is the coarsest stable refinement.
  while (true) {
    std::vector<std::vector<std::size_t>> signature_of(n);
    for (Element e = 0; e < n; ++e) signature_of[e].push_back(current.block_of(e));
    for (std::size_t op = 0; op < ops.size(); ++op) {
      const auto arity = ops[op].arity;
      const auto table = algebra.table(op);
      std::size_t contexts = 1;
      for (std::size_t k = 1; k < arity; ++k) contexts *= n;
      for (std::size_t pos = 0; pos < arity; ++pos) {
        std::size_t stride = 1;
        for (std::size_t k = pos + 1; k < arity; ++k) stride *= n;
        for (std::size_t ctx = 0; ctx < contexts; ++ctx) {
          // Spread ctx over the positions other than `pos`.
          const auto low = ctx % stride;
          const auto high = ctx / stride;
          const auto base = high * stride * n + low;
          for (Element e = 0; e < n; ++e) {
            signature_of[e].push_back(
                current.block_of(table[base + e * stride]));
          }
        }
      }
    }
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (Element e = 0; e < n; ++e) {
      next[e] = ids.emplace(signature_of[e], ids.size()).first->second;
    }
    Congruence refined(next);
    if (refined.block_count() == current.block_count()) return refined;
    current = refined;
  }
}

}  // namespace matlog
