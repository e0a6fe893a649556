#include "matlog/external.hpp"

#include "matlog/syntax.hpp"

namespace matlog {

namespace {

struct ClassicalOps {
  std::size_t conj, disj, neg;
};

std::optional<ClassicalOps> classical_ops(const FiniteAlgebra& a) {
  const auto& sig = a.signature();
  auto c = sig.find(ops::kAnd);
  auto d = sig.find(ops::kOr);
  auto n = sig.find(ops::kNeg);
  if (!c || !d || !n) return std::nullopt;
  if (sig.operations()[*c].arity != 2 || sig.operations()[*d].arity != 2 ||
      sig.operations()[*n].arity != 1) {
    return std::nullopt;
  }
  return ClassicalOps{*c, *d, *n};
}

// First deviation of {x, y} from B2 (x as 0, y as 1), or empty.
std::string b2_deviation(const FiniteAlgebra& a, const ClassicalOps& o,
                         Element x, Element y) {
  const auto nm = [&](Element e) { return a.element_name(e); };
  if (a.apply(o.neg, x) != y) return "~" + nm(x) + " = " + nm(a.apply(o.neg, x));
  if (a.apply(o.neg, y) != x) return "~" + nm(y) + " = " + nm(a.apply(o.neg, y));
  const Element vals[2] = {x, y};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const auto want_and = vals[i & j];
      const auto want_or = vals[i | j];
      const auto got_and = a.apply(o.conj, vals[i], vals[j]);
      const auto got_or = a.apply(o.disj, vals[i], vals[j]);
      if (got_and != want_and) {
        return nm(vals[i]) + " & " + nm(vals[j]) + " = " + nm(got_and);
      }
      if (got_or != want_or) {
        return nm(vals[i]) + " | " + nm(vals[j]) + " = " + nm(got_or);
      }
    }
  }
  return {};
}

}  // namespace

std::optional<ThreeValuedFrame> locate_frame(const FiniteAlgebra& algebra) {
  if (algebra.size() != 3) return std::nullopt;
  const auto o = classical_ops(algebra);
  if (!o) return std::nullopt;
  for (Element x = 0; x < 3; ++x) {
    for (Element y = 0; y < 3; ++y) {
      if (x == y || !b2_deviation(algebra, *o, x, y).empty()) continue;
      return ThreeValuedFrame{x, static_cast<Element>(3 - x - y), y};
    }
  }
  return std::nullopt;
}

SubclassicalityReport check_subclassical(const Matrix& matrix) {
  const auto& a = matrix.algebra();
  if (a.size() != 3) {
    throw Error("subclassicality is defined for three-element matrices; " +
                matrix.name() + " has " + std::to_string(a.size()) +
                " elements");
  }
  const auto o = classical_ops(a);
  if (!o) {
    throw Error(matrix.name() + " lacks one of the operations and/or/neg");
  }
  SubclassicalityReport r;
  r.matrix = matrix.name();

  // Pairs behaving as B2, in enumeration order; prefer one with trace {1}.
  std::vector<std::string> deviations;
  for (Element x = 0; x < 3 && !r.frame; ++x) {
    for (Element y = 0; y < 3; ++y) {
      if (x == y) continue;
      const auto dev = b2_deviation(a, *o, x, y);
      if (!dev.empty()) {
        if (a.apply(o->neg, x) == y && x < y) {
          deviations.push_back("{" + a.element_name(x) + "," +
                               a.element_name(y) + "} is not a copy of B2: " +
                               dev);
        }
        continue;
      }
      if (matrix.is_designated(y) && !matrix.is_designated(x)) {
        r.frame = ThreeValuedFrame{x, static_cast<Element>(3 - x - y), y};
        break;
      }
      std::string trace;
      for (const auto e : {x, y}) {
        if (!matrix.is_designated(e)) continue;
        trace += (trace.empty() ? "" : ",") + a.element_name(e);
      }
      deviations.push_back("B2 copy {" + a.element_name(x) + "," +
                           a.element_name(y) + "} has designated trace {" +
                           trace + "}, not {" + a.element_name(y) + "}");
    }
  }
  r.boolean_subreduct = r.frame.has_value();
  if (!r.boolean_subreduct) {
    if (deviations.empty()) {
      deviations.push_back("no two-element subset closed under ~ behaves as B2");
    }
    for (auto& d : deviations) r.failures.push_back("B2 subreduct: " + d);
  }

  r.involutive_negation = true;
  for (Element e = 0; e < 3; ++e) {
    const auto nn = a.apply(o->neg, a.apply(o->neg, e));
    if (nn != e) {
      r.involutive_negation = false;
      r.failures.push_back("involution: ~~" + a.element_name(e) + " = " +
                           a.element_name(nn));
    }
  }

  if (r.frame) {
    r.negation_fixes_half = a.apply(o->neg, r.frame->half) == r.frame->half;
    if (!r.negation_fixes_half) {
      r.failures.push_back("~" + a.element_name(r.frame->half) + " = " +
                           a.element_name(a.apply(o->neg, r.frame->half)));
    }
  }
  r.passed = r.boolean_subreduct && r.involutive_negation;
  return r;
}

std::vector<std::string> table_anomalies(const FiniteAlgebra& a) {
  std::vector<std::string> out;
  const auto o = classical_ops(a);
  if (!o) return {"missing one of the operations and/or/neg"};
  const auto n = static_cast<Element>(a.size());
  const auto nm = [&](Element e) { return a.element_name(e); };
  struct Bin {
    std::size_t op;
    const char* sym;
  };
  for (const Bin b : {Bin{o->conj, "&"}, Bin{o->disj, "|"}}) {
    bool idem = true, comm = true, assoc = true;
    for (Element x = 0; x < n; ++x) {
      if (idem && a.apply(b.op, x, x) != x) {
        idem = false;
        out.push_back(std::string("idempotence of ") + b.sym + ": " + nm(x) +
                      " " + b.sym + " " + nm(x) + " = " +
                      nm(a.apply(b.op, x, x)));
      }
      for (Element y = 0; y < n; ++y) {
        if (comm && a.apply(b.op, x, y) != a.apply(b.op, y, x)) {
          comm = false;
          out.push_back(std::string("commutativity of ") + b.sym + ": " +
                        nm(x) + " " + b.sym + " " + nm(y) + " = " +
                        nm(a.apply(b.op, x, y)) + " but " + nm(y) + " " +
                        b.sym + " " + nm(x) + " = " + nm(a.apply(b.op, y, x)));
        }
        for (Element z = 0; z < n && assoc; ++z) {
          const auto l = a.apply(b.op, a.apply(b.op, x, y), z);
          const auto r = a.apply(b.op, x, a.apply(b.op, y, z));
          if (l != r) {
            assoc = false;
            out.push_back(std::string("associativity of ") + b.sym + " at (" +
                          nm(x) + "," + nm(y) + "," + nm(z) + ")");
          }
        }
      }
    }
  }
  bool inv = true, dm = true;
  for (Element x = 0; x < n; ++x) {
    if (inv && a.apply(o->neg, a.apply(o->neg, x)) != x) {
      inv = false;
      out.push_back("involution: ~~" + nm(x) + " = " +
                    nm(a.apply(o->neg, a.apply(o->neg, x))));
    }
    for (Element y = 0; y < n && dm; ++y) {
      const auto l = a.apply(o->neg, a.apply(o->conj, x, y));
      const auto r = a.apply(o->disj, a.apply(o->neg, x), a.apply(o->neg, y));
      if (l != r) {
        dm = false;
        out.push_back("De Morgan: ~(" + nm(x) + " & " + nm(y) + ") = " + nm(l) +
                      " but ~" + nm(x) + " | ~" + nm(y) + " = " + nm(r));
      }
    }
  }
  return out;
}

Element ExternalAlgebra::delta1(Element a) const {
  return a == frame_.one ? frame_.one : frame_.zero;
}

Element ExternalAlgebra::delta0(Element a) const {
  return a == frame_.zero ? frame_.one : frame_.zero;
}

Element ExternalAlgebra::delta_half(Element a) const {
  return a == frame_.half ? frame_.one : frame_.zero;
}

ExternalAlgebra ExternalAlgebra::with_designated(
    std::vector<Element> designated, std::string name) const {
  return ExternalAlgebra(base_, expanded_,
                         Matrix(expanded_, std::move(designated), std::move(name)),
                         frame_);
}

ExternalAlgebra build_external(const Matrix& matrix) {
  const auto report = check_subclassical(matrix);
  if (!report.passed) {
    std::string why;
    for (const auto& f : report.failures) why += "; " + f;
    throw Error(matrix.name() + " is not subclassical" + why);
  }
  const auto frame = *report.frame;
  const auto& a = matrix.algebra();
  std::vector<Element> table(3);
  for (Element e = 0; e < 3; ++e) table[e] = e == frame.one ? frame.one : frame.zero;

  FiniteAlgebra expanded = a;
  if (const auto idx = a.signature().find(ops::kDelta1)) {
    const auto t = a.table(*idx);
    if (a.signature().operations()[*idx].arity != 1 ||
        std::vector<Element>(t.begin(), t.end()) != table) {
      throw Error(a.name() + " already has a D1 that is not the external one");
    }
  } else {
    expanded = a.with_operation({std::string(ops::kDelta1), 1, table})
                   .renamed(a.name() + "^e");
  }
  Matrix m(expanded, matrix.designated(),
           a.signature().contains(ops::kDelta1) ? matrix.name()
                                                : matrix.name() + "^e");
  return ExternalAlgebra(matrix, expanded, std::move(m), frame);
}

Element derived_implication(Element a, Element b, const ExternalAlgebra& ext) {
  const auto& alg = ext.algebra();
  const auto conj = alg.operation_index(ops::kAnd);
  const auto disj = alg.operation_index(ops::kOr);
  const auto middle =
      alg.apply(conj, ext.delta_half(a),
                alg.apply(disj, ext.delta_half(b), ext.delta1(b)));
  const auto last = alg.apply(conj, ext.delta1(a), ext.delta1(b));
  return alg.apply(disj, alg.apply(disj, ext.delta0(a), middle), last);
}

}  // namespace matlog
