#include "matlog/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace matlog {

Formula Formula::variable(std::string name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) {
    throw Error("invalid variable name '" + name + "'");
  }
  for (char ch : name) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') {
      throw Error("invalid variable name '" + name + "'");
    }
  }
  return Formula(std::make_shared<const Node>(Node{std::move(name), {}, 0, 1}));
}

Formula Formula::apply(std::string op, std::vector<Formula> args) {
  if (args.empty()) {
    throw Error("operation '" + op + "' applied to no arguments");
  }
  std::size_t depth = 0;
  std::size_t nodes = 1;
  for (const auto& a : args) {
    depth = std::max(depth, a.depth());
    nodes += a.node_count();
  }
  return Formula(std::make_shared<const Node>(
      Node{std::move(op), std::move(args), depth + 1, nodes}));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->depth == b.node_->depth &&
         a.node_->nodes == b.node_->nodes &&
         a.node_->symbol == b.node_->symbol && a.node_->args == b.node_->args;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  if (a.node_->symbol != b.node_->symbol) {
    return a.node_->symbol < b.node_->symbol;
  }
  return std::lexicographical_compare(a.args().begin(), a.args().end(),
                                      b.args().begin(), b.args().end());
}

Formula var(std::string name) { return Formula::variable(std::move(name)); }
Formula neg(Formula f) {
  return Formula::apply(std::string(ops::kNeg), {std::move(f)});
}
Formula conj(Formula a, Formula b) {
  return Formula::apply(std::string(ops::kAnd), {std::move(a), std::move(b)});
}
Formula disj(Formula a, Formula b) {
  return Formula::apply(std::string(ops::kOr), {std::move(a), std::move(b)});
}
Formula imp(Formula a, Formula b) {
  return Formula::apply(std::string(ops::kImp), {std::move(a), std::move(b)});
}
Formula delta1(Formula f) {
  return Formula::apply(std::string(ops::kDelta1), {std::move(f)});
}
Formula delta0(Formula f) { return delta1(neg(std::move(f))); }
Formula delta_half(Formula f) {
  return neg(disj(delta1(f), delta1(neg(f))));
}
Formula derived_implication(Formula a, Formula b) {
  return disj(disj(delta0(a), conj(delta_half(a), disj(delta_half(b),
                                                         delta1(b)))),
              conj(delta1(a), delta1(b)));
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

enum class Tok { ident, amp, bar, arrow, tilde, d1, d0, dm, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const auto start = i;
    if (c == '&') {
      out.push_back({Tok::amp, "&", i++});
    } else if (c == '|') {
      out.push_back({Tok::bar, "|", i++});
    } else if (c == '~') {
      out.push_back({Tok::tilde, "~", i++});
    } else if (c == '(') {
      out.push_back({Tok::lparen, "(", i++});
    } else if (c == ')') {
      out.push_back({Tok::rparen, ")", i++});
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::arrow, "->", i});
      i += 2;
    } else if (c == 'D' && i + 1 < s.size() &&
               (s[i + 1] == '1' || s[i + 1] == '0' || s[i + 1] == 'm')) {
      const Tok k = s[i + 1] == '1' ? Tok::d1 : s[i + 1] == '0' ? Tok::d0 : Tok::dm;
      out.push_back({k, std::string(s.substr(i, 2)), i});
      i += 2;
    } else if (std::islower(static_cast<unsigned char>(c))) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) ||
                              s[i] == '_')) {
        ++i;
      }
      out.push_back({Tok::ident, std::string(s.substr(start, i - start)), start});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const Signature& sig, ParseOptions opts)
      : toks_(std::move(toks)), sig_(sig), opts_(opts) {}

  Formula parse_all() {
    auto f = formula();
    if (peek().kind != Tok::end) {
      throw ParseError("unexpected token '" + peek().text + "'", peek().pos);
    }
    return f;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }

  void require(std::string_view op, std::size_t arity, std::size_t pos) {
    const auto idx = sig_.find(op);
    if (!idx) {
      throw ParseError("operation '" + std::string(op) +
                           "' is not in the signature",
                       pos);
    }
    if (sig_.operations()[*idx].arity != arity) {
      throw ParseError("operation '" + std::string(op) + "' has arity " +
                           std::to_string(sig_.operations()[*idx].arity) +
                           ", used with " + std::to_string(arity),
                       pos);
    }
  }

  Formula formula() {
    auto left = disjunction();
    if (peek().kind == Tok::arrow) {
      const auto pos = next().pos;
      auto right = formula();
      if (sig_.contains(ops::kImp)) {
        require(ops::kImp, 2, pos);
        return imp(std::move(left), std::move(right));
      }
      if (opts_.derived_implication && sig_.contains(ops::kDelta1)) {
        require(ops::kDelta1, 1, pos);
        require(ops::kNeg, 1, pos);
        require(ops::kOr, 2, pos);
        require(ops::kAnd, 2, pos);
        return derived_implication(std::move(left), std::move(right));
      }
      throw ParseError(
          "'->' is unbound: signature has no 'imp' and no derived "
          "implication is available",
          pos);
    }
    return left;
  }

  Formula disjunction() {
    auto f = conjunction();
    while (peek().kind == Tok::bar) {
      require(ops::kOr, 2, next().pos);
      f = disj(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    auto f = unary();
    while (peek().kind == Tok::amp) {
      require(ops::kAnd, 2, next().pos);
      f = conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    const auto& t = peek();
    switch (t.kind) {
      case Tok::tilde:
        require(ops::kNeg, 1, next().pos);
        return neg(unary());
      case Tok::d1:
        require(ops::kDelta1, 1, next().pos);
        return delta1(unary());
      case Tok::d0: {
        const auto pos = next().pos;
        require(ops::kDelta1, 1, pos);
        require(ops::kNeg, 1, pos);
        return delta0(unary());
      }
      case Tok::dm: {
        const auto pos = next().pos;
        require(ops::kDelta1, 1, pos);
        require(ops::kNeg, 1, pos);
        require(ops::kOr, 2, pos);
        return delta_half(unary());
      }
      default:
        return atom();
    }
  }

  Formula atom() {
    const auto& t = next();
    if (t.kind == Tok::ident) return var(t.text);
    if (t.kind == Tok::lparen) {
      auto f = formula();
      if (peek().kind != Tok::rparen) {
        throw ParseError("expected ')'", peek().pos);
      }
      next();
      return f;
    }
    if (t.kind == Tok::end) throw ParseError("unexpected end of input", t.pos);
    throw ParseError("unexpected token '" + t.text + "'", t.pos);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  const Signature& sig_;
  ParseOptions opts_;
};

int precedence(const Formula& f) {
  if (f.is_variable()) return 5;
  const auto& s = f.symbol();
  if (s == ops::kImp && f.args().size() == 2) return 1;
  if (s == ops::kOr && f.args().size() == 2) return 2;
  if (s == ops::kAnd && f.args().size() == 2) return 3;
  if ((s == ops::kNeg || s == ops::kDelta1) && f.args().size() == 1) return 4;
  return 5;  // rendered in call syntax
}

void render_into(const Formula& f, std::string& out);

void render_operand(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  render_into(f, out);
  if (parens) out += ')';
}

void render_into(const Formula& f, std::string& out) {
  if (f.is_variable()) {
    out += f.symbol();
    return;
  }
  const int p = precedence(f);
  const auto& a = f.args();
  switch (p) {
    case 1:
      render_operand(a[0], precedence(a[0]) <= 1, out);
      out += " -> ";
      render_operand(a[1], precedence(a[1]) < 1, out);
      return;
    case 2:
    case 3:
      render_operand(a[0], precedence(a[0]) < p, out);
      out += p == 2 ? " | " : " & ";
      render_operand(a[1], precedence(a[1]) <= p, out);
      return;
    case 4:
      out += f.symbol() == ops::kNeg ? "~" : "D1 ";
      render_operand(a[0], precedence(a[0]) < 4, out);
      return;
    default:
      out += f.symbol();
      out += '(';
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ", ";
        render_into(a[i], out);
      }
      out += ')';
  }
}

void collect_variables(const Formula& f, std::vector<std::string>& out,
                       std::set<std::string>& seen) {
  if (f.is_variable()) {
    if (seen.insert(f.symbol()).second) out.push_back(f.symbol());
    return;
  }
  for (const auto& a : f.args()) collect_variables(a, out, seen);
}

}  // namespace

Formula parse(std::string_view text, const Signature& signature,
              ParseOptions options) {
  Parser p(tokenize(text), signature, options);
  return p.parse_all();
}

void check_bound(const Formula& f, const Signature& signature) {
  if (f.is_variable()) return;
  const auto idx = signature.find(f.symbol());
  if (!idx) {
    throw Error("operation '" + f.symbol() + "' is not in the signature");
  }
  if (signature.operations()[*idx].arity != f.args().size()) {
    throw Error("operation '" + f.symbol() + "' used with wrong arity");
  }
  for (const auto& a : f.args()) check_bound(a, signature);
}

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

Formula substitute(const Formula& f, const Substitution& s) {
  if (f.is_variable()) {
    auto it = s.find(f.symbol());
    return it == s.end() ? f : it->second;
  }
  std::vector<Formula> args;
  args.reserve(f.args().size());
  for (const auto& a : f.args()) args.push_back(substitute(a, s));
  return Formula::apply(f.symbol(), std::move(args));
}

Substitution compose(const Substitution& s1, const Substitution& s2) {
  Substitution out;
  for (const auto& [x, f] : s1) out.emplace(x, substitute(f, s2));
  for (const auto& [x, f] : s2) out.emplace(x, f);  // no-op if present
  return out;
}

std::vector<std::string> variables_of(const Formula& f) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_variables(f, out, seen);
  return out;
}

std::vector<std::string> variables_of(const std::vector<Formula>& fs) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& f : fs) collect_variables(f, out, seen);
  return out;
}

std::vector<Formula> enumerate_formulas(
    const Signature& signature, const std::vector<std::string>& variables,
    std::size_t max_depth) {
  std::vector<Formula> all;
  for (const auto& v : variables) {
    auto f = var(v);
    if (std::find(all.begin(), all.end(), f) == all.end()) all.push_back(f);
  }
  if (all.empty()) return all;
  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    const auto prev = all.size();
    for (const auto& op : signature.operations()) {
      std::vector<std::size_t> pos(op.arity, 0);
      while (true) {
        bool reaches = false;
        for (auto p : pos) reaches = reaches || all[p].depth() == depth - 1;
        if (reaches) {
          std::vector<Formula> args;
          for (auto p : pos) args.push_back(all[p]);
          all.push_back(Formula::apply(op.name, std::move(args)));
        }
        std::size_t k = op.arity;
        while (k > 0 && ++pos[k - 1] == prev) pos[--k] = 0;
        if (k == 0) break;
      }
    }
  }
  return all;
}

std::string render(const Rule& r) {
  std::string s;
  for (std::size_t i = 0; i < r.premises.size(); ++i) {
    if (i) s += ", ";
    s += render(r.premises[i]);
  }
  s += s.empty() ? "|- " : " |- ";
  return s + render(r.conclusion);
}

std::string render(const Equation& e) {
  return render(e.left) + " = " + render(e.right);
}

}  // namespace matlog
