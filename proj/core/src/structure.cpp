#include "matlog/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "matlog/syntax.hpp"

namespace matlog {

ThreeValuedFrame frame_of(const PowerAlgebra& power) {
  if (auto f = locate_frame(power.base())) return *f;
  throw Error("base algebra " + power.base().name() +
              " has no three-valued frame (needs a B2 subreduct in and/or/neg)");
}

namespace {

int rank(const ThreeValuedFrame& f, Element e) {
  if (e == f.zero) return 0;
  if (e == f.half) return 1;
  return 2;
}

std::size_t op(const PowerAlgebra& p, std::string_view name) {
  return p.base().operation_index(name);
}

std::string fmt(const PowerAlgebra& p, Code c) { return p.format(c); }

}  // namespace

bool order_leq(const ThreeValuedFrame& frame, std::span<const Element> a,
               std::span<const Element> b) {
  if (a.size() != b.size()) {
    throw Error("order_leq on tuples of different length");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (rank(frame, a[i]) > rank(frame, b[i])) return false;
  }
  return true;
}

bool order_leq(const PowerAlgebra& power, const ThreeValuedFrame& frame,
               Code a, Code b) {
  for (std::size_t i = 0; i < power.exponent(); ++i) {
    if (rank(frame, power.component(a, i)) > rank(frame, power.component(b, i))) {
      return false;
    }
  }
  return true;
}

Code pointwise_delta1(const PowerAlgebra& power, const ThreeValuedFrame& frame,
                      Code a) {
  auto t = power.decode(a);
  for (auto& e : t) e = e == frame.one ? frame.one : frame.zero;
  return power.encode(t);
}

bool is_boolean_tuple(const PowerAlgebra& power, const ThreeValuedFrame& frame,
                      Code a) {
  for (std::size_t i = 0; i < power.exponent(); ++i) {
    if (power.component(a, i) == frame.half) return false;
  }
  return true;
}

bool BooleanSkeleton::contains(Code c) const {
  return std::binary_search(elements.begin(), elements.end(), c);
}

BooleanSkeleton boolean_skeleton(const SubalgebraOfPower& c) {
  const auto frame = frame_of(c.power());
  BooleanSkeleton s;
  for (auto x : c.carrier()) {
    if (is_boolean_tuple(c.power(), frame, x)) s.elements.push_back(x);
  }
  return s;
}

UnaryMapOnCarrier::UnaryMapOnCarrier(const SubalgebraOfPower& c,
                                     std::vector<Code> image)
    : domain_(c.carrier()), image_(std::move(image)) {
  if (image_.size() != domain_.size()) {
    throw Error("map is not total on the carrier");
  }
  for (auto v : image_) {
    if (!c.contains(v)) {
      throw Error("map value " + c.power().format(v) + " is outside the carrier");
    }
  }
}

UnaryMapOnCarrier UnaryMapOnCarrier::from_pairs(
    const SubalgebraOfPower& c, const std::vector<std::pair<Code, Code>>& pairs) {
  std::map<Code, Code> m;
  for (const auto& [a, b] : pairs) {
    if (!c.contains(a)) {
      throw Error("map argument " + c.power().format(a) + " is outside the carrier");
    }
    if (!m.emplace(a, b).second && m[a] != b) {
      throw Error("map assigns two values to " + c.power().format(a));
    }
  }
  std::vector<Code> image;
  for (auto a : c.carrier()) {
    auto it = m.find(a);
    if (it == m.end()) {
      throw Error("map is not total: no value for " + c.power().format(a));
    }
    image.push_back(it->second);
  }
  return UnaryMapOnCarrier(c, std::move(image));
}

Code UnaryMapOnCarrier::operator()(Code a) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), a);
  if (it == domain_.end() || *it != a) throw Error("argument outside the carrier");
  return image_[static_cast<std::size_t>(it - domain_.begin())];
}

std::vector<Code> UnaryMapOnCarrier::range() const {
  std::vector<Code> r = image_;
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

ConucleusReport check_conucleus(const UnaryMapOnCarrier& sigma,
                                const SubalgebraOfPower& c) {
  if (sigma.domain() != c.carrier()) {
    throw Error("map is not defined on this carrier");
  }
  const auto& p = c.power();
  const auto frame = frame_of(p);
  const auto conj = op(p, ops::kAnd);
  const auto& dom = c.carrier();
  const auto& s = sigma.image();
  const auto leq = [&](Code a, Code b) { return order_leq(p, frame, a, b); };

  ConucleusReport r;
  auto fail = [](PropertyCheck& pc, std::vector<Code> w, std::string d) {
    if (!pc.holds) return;
    pc.holds = false;
    pc.witness = std::move(w);
    pc.detail = std::move(d);
  };

  for (std::size_t i = 0; i < dom.size(); ++i) {
    const auto a = dom[i];
    if (!leq(s[i], a)) {
      fail(r.deflationary, {a},
           "s" + fmt(p, a) + " = " + fmt(p, s[i]) + " is not below " + fmt(p, a));
    }
    if (sigma(s[i]) != s[i]) {
      fail(r.idempotent, {a},
           "s(s" + fmt(p, a) + ") = " + fmt(p, sigma(s[i])) + " != " + fmt(p, s[i]));
    }
    for (std::size_t j = 0; j < dom.size(); ++j) {
      const auto b = dom[j];
      if (leq(a, b) && !leq(s[i], s[j])) {
        fail(r.monotone, {a, b},
             fmt(p, a) + " <= " + fmt(p, b) + " but s" + fmt(p, a) + " = " +
                 fmt(p, s[i]) + " is not below s" + fmt(p, b) + " = " +
                 fmt(p, s[j]));
      }
      const auto lhs = p.apply(conj, s[i], s[j]);
      const auto rhs = sigma(p.apply(conj, a, b));
      if (!leq(lhs, rhs)) {
        fail(r.meet_compatible, {a, b},
             "s" + fmt(p, a) + " & s" + fmt(p, b) + " = " + fmt(p, lhs) +
                 " is not below s(" + fmt(p, a) + " & " + fmt(p, b) + ") = " +
                 fmt(p, rhs));
      }
    }
  }

  const auto skel = boolean_skeleton(c);
  const auto range = sigma.range();
  if (range != skel.elements) {
    std::vector<Code> diff;
    std::set_symmetric_difference(range.begin(), range.end(),
                                  skel.elements.begin(), skel.elements.end(),
                                  std::back_inserter(diff));
    fail(r.boolean, {diff.front()},
         "image and Boolean skeleton differ at " + fmt(p, diff.front()));
  }
  for (auto a : dom) {
    const auto d = pointwise_delta1(p, frame, a);
    if (!std::binary_search(range.begin(), range.end(), d)) {
      fail(r.complete, {a, d},
           "greatest Boolean tuple below " + fmt(p, a) + " is " + fmt(p, d) +
               ", not in the image");
    }
  }
  return r;
}

CanonicalSigma canonical_sigma(const SubalgebraOfPower& c) {
  const auto frame = frame_of(c.power());
  std::vector<Code> image;
  for (auto a : c.carrier()) {
    const auto d = pointwise_delta1(c.power(), frame, a);
    if (!c.contains(d)) return {std::nullopt, std::make_pair(a, d)};
    image.push_back(d);
  }
  return {UnaryMapOnCarrier(c, std::move(image)), std::nullopt};
}

SepCheck check_sep(const UnaryMapOnCarrier& sigma, const SubalgebraOfPower& c) {
  const auto& p = c.power();
  const auto negation = op(p, ops::kNeg);
  const auto& dom = c.carrier();
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = i + 1; j < dom.size(); ++j) {
      const auto a = dom[i], b = dom[j];
      if (sigma(a) == sigma(b) &&
          sigma(p.apply(negation, a)) == sigma(p.apply(negation, b))) {
        return {false, std::make_pair(a, b)};
      }
    }
  }
  return {};
}

std::optional<UnaryMapOnCarrier> skeleton_projection(const SubalgebraOfPower& c) {
  const auto& p = c.power();
  const auto frame = frame_of(p);
  const auto skel = boolean_skeleton(c);
  if (skel.elements.empty()) return std::nullopt;
  std::vector<Code> image;
  for (auto a : c.carrier()) {
    std::vector<Code> below;
    for (auto s : skel.elements) {
      if (order_leq(p, frame, s, a)) below.push_back(s);
    }
    std::optional<Code> top;
    for (auto s : below) {
      bool greatest = true;
      for (auto t : below) greatest = greatest && order_leq(p, frame, t, s);
      if (greatest) top = s;
    }
    if (!top) return std::nullopt;
    image.push_back(*top);
  }
  return UnaryMapOnCarrier(c, std::move(image));
}

ExpansionVerdict admits_expansion(const SubalgebraOfPower& c) {
  const auto& p = c.power();
  const auto frame = frame_of(p);
  ExpansionVerdict v;
  const auto skel = boolean_skeleton(c);
  auto cross_check = [&] {
    if (auto proj = skeleton_projection(c)) {
      v.sep_on_projection = check_sep(*proj, c);
    }
  };
  if (skel.elements.empty()) {
    v.reason = "empty skeleton";
    return v;
  }
  auto canon = canonical_sigma(c);
  if (!canon.map) {
    v.escape = canon.escape;
    v.reason = "pointwise Delta1 sends " + p.format(canon.escape->first) +
               " to " + p.format(canon.escape->second) +
               ", outside the carrier";
    cross_check();
    return v;
  }
  auto report = check_conucleus(*canon.map, c);
  if (!report.is_complete_boolean()) {
    // Cannot happen for a closed pointwise Delta1; reported rather than hidden.
    v.reason = "pointwise Delta1 fails the complete Boolean conucleus check";
    v.report = std::move(report);
    return v;
  }
  Matrix base_matrix(p.base(), {frame.one});
  const auto ext = build_external(base_matrix);
  PowerAlgebra ext_power(ext.algebra(), p.exponent());
  v.admits = true;
  v.reason = "pointwise Delta1 is a complete Boolean conucleus";
  v.sigma = std::move(canon.map);
  v.report = std::move(report);
  v.expanded = SubalgebraOfPower(ext_power, c.carrier());
  return v;
}

bool join_gate(const FiniteAlgebra& base) {
  const auto frame = locate_frame(base);
  if (!frame) throw Error(base.name() + " has no three-valued frame");
  return base.apply(base.operation_index(ops::kOr), frame->zero, frame->half) !=
         frame->zero;
}

JoinCheck check_join_criterion(const SubalgebraOfPower& c,
                         const UnaryMapOnCarrier& sigma) {
  const auto& p = c.power();
  if (!join_gate(p.base())) {
    throw Error("0 | half = 0 in " + p.base().name() +
                "; the join criterion does not apply");
  }
  const auto frame = frame_of(p);
  const auto disj = op(p, ops::kOr);
  const auto negation = op(p, ops::kNeg);
  for (auto x : c.carrier()) {
    const auto rhs = p.apply(disj, sigma(x), p.apply(negation, x));
    if (!order_leq(p, frame, x, rhs)) return {false, x};
  }
  return {};
}

CandidateScan scan_boolean_conuclei(const SubalgebraOfPower& c,
                                    CandidateFilter filter) {
  const auto& p = c.power();
  const auto frame = frame_of(p);
  const auto& dom = c.carrier();
  const auto n = dom.size();
  const auto skel = boolean_skeleton(c);
  CandidateScan out;
  if (skel.elements.empty()) return out;
  if (filter.join_criterion && !join_gate(p.base())) {
    throw Error("join criterion requested on a base failing 0 | half != 0");
  }

  const auto conj = op(p, ops::kAnd);
  const auto negation = op(p, ops::kNeg);
  const auto disj = op(p, ops::kOr);
  const auto leq = [&](Code a, Code b) { return order_leq(p, frame, a, b); };

  // Index-level tables.
  std::vector<std::vector<std::size_t>> options(n);
  std::vector<std::size_t> neg_idx(n);
  std::vector<std::vector<std::size_t>> meet_idx(n, std::vector<std::size_t>(n));
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto s : skel.elements) {
      if (leq(s, dom[i])) options[i].push_back(c.index_of(s));
    }
    neg_idx[i] = c.index_of(p.apply(negation, dom[i]));
    for (std::size_t j = 0; j < n; ++j) {
      meet_idx[i][j] = c.index_of(p.apply(conj, dom[i], dom[j]));
      le[i][j] = leq(dom[i], dom[j]);
    }
  }

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> s(n, unset);

  // Constraints among assigned positions only.
  auto consistent = [&](std::size_t k) {
    for (std::size_t i = 0; i <= k; ++i) {
      const auto si = s[i];
      if (s[si] != unset && s[si] != si) return false;  // idempotence
      for (std::size_t j = 0; j <= k; ++j) {
        if (le[i][j] && !le[si][s[j]]) return false;  // monotone
        const auto m = meet_idx[i][j];
        if (s[m] != unset &&
            !leq(p.apply(conj, dom[si], dom[s[j]]), dom[s[m]])) {
          return false;
        }
      }
    }
    return true;
  };

  auto accept = [&]() {
    std::set<std::size_t> image(s.begin(), s.end());
    if (image.size() != skel.elements.size()) return false;  // Boolean
    if (filter.complete) {
      for (std::size_t i = 0; i < n; ++i) {
        const auto d = pointwise_delta1(p, frame, dom[i]);
        if (!c.contains(d) || !image.count(c.index_of(d))) return false;
      }
    }
    if (filter.sep) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (s[i] == s[j] && s[neg_idx[i]] == s[neg_idx[j]]) return false;
        }
      }
    }
    if (filter.join_criterion) {
      for (std::size_t i = 0; i < n; ++i) {
        const auto rhs = p.apply(disj, dom[s[i]], dom[neg_idx[i]]);
        if (!leq(dom[i], rhs)) return false;
      }
    }
    return true;
  };

  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      ++out.examined;
      if (accept()) {
        ++out.matches;
        if (!out.first) {
          std::vector<Code> image;
          for (auto i : s) image.push_back(dom[i]);
          out.first = UnaryMapOnCarrier(c, std::move(image));
        }
      }
      return;
    }
    for (auto o : options[k]) {
      s[k] = o;
      if (consistent(k)) self(self, k + 1);
    }
    s[k] = unset;
  };
  recurse(recurse, 0);
  return out;
}

EmbeddingSearch search_embeddings(const SubalgebraOfPower& c,
                                  std::size_t max_exponent) {
  const auto& p = c.power();
  const auto& base = p.base();
  const auto& dom = c.carrier();
  const auto n = dom.size();
  const auto& sig = base.signature().operations();

  // Operation instances over carrier indices: (op, args, result).
  struct Instance {
    std::size_t op;
    std::vector<std::size_t> args;
    std::size_t result;
    std::size_t last;  // highest index involved
  };
  std::vector<Instance> instances;
  for (std::size_t o = 0; o < sig.size(); ++o) {
    const auto arity = sig[o].arity;
    std::vector<std::size_t> pos(arity, 0);
    std::vector<Code> args(arity);
    while (true) {
      for (std::size_t k = 0; k < arity; ++k) args[k] = dom[pos[k]];
      const auto r = c.index_of(p.apply(o, args));
      auto last = r;
      for (auto x : pos) last = std::max(last, x);
      instances.push_back({o, pos, r, last});
      std::size_t k = arity;
      while (k > 0 && ++pos[k - 1] == n) pos[--k] = 0;
      if (k == 0) break;
    }
  }
  std::vector<std::vector<const Instance*>> by_last(n);
  for (const auto& in : instances) by_last[in.last].push_back(&in);

  // All homomorphisms carrier -> base.
  std::vector<std::vector<Element>> homs;
  std::vector<Element> h(n);
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      homs.push_back(h);
      return;
    }
    for (Element e = 0; e < base.size(); ++e) {
      h[k] = e;
      bool ok = true;
      std::vector<Element> args;
      for (const auto* in : by_last[k]) {
        args.clear();
        for (auto a : in->args) args.push_back(h[a]);
        if (base.apply(in->op, args) != h[in->result]) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, k + 1);
    }
  };
  recurse(recurse, 0);

  EmbeddingSearch out;
  out.homomorphisms = homs.size();
  // Multisets of homomorphisms of size J, jointly injective.
  std::vector<std::size_t> pick;
  auto choose = [&](auto&& self, std::size_t start, std::size_t size) -> bool {
    if (pick.size() == size) {
      std::set<std::vector<Element>> images;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Element> t;
        for (auto k : pick) t.push_back(homs[k][i]);
        images.insert(t);
      }
      if (images.size() != n) return false;
      ++out.embeddings_checked;
      PowerAlgebra target(base, size);
      std::vector<Code> codes;
      for (const auto& t : images) codes.push_back(target.encode(t));
      SubalgebraOfPower image(target, codes);
      if (admits_expansion(image).admits) {
        out.found_expandable = true;
        out.found = "image " + image.format() + " in " + base.name() + "^" +
                    std::to_string(size);
        return true;
      }
      return false;
    }
    for (std::size_t k = start; k < homs.size(); ++k) {
      pick.push_back(k);
      if (self(self, k, size)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t j = 1; j <= max_exponent; ++j) {
    pick.clear();
    if (choose(choose, 0, j)) break;
  }
  return out;
}

}  // namespace matlog
