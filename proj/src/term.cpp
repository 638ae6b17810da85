#include "lgroup/term.hpp"

#include <cctype>

namespace lgroup {

struct Term::Node {
  Op op;
  std::string name;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

Term Term::zero() { return Term(std::make_shared<const Node>(Node{Op::zero, {}, {}, {}})); }
Term Term::unit() { return Term(std::make_shared<const Node>(Node{Op::unit, {}, {}, {}})); }
Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Node{Op::var, std::move(name), {}, {}}));
}
Term Term::add(Term a, Term b) { return Term(std::make_shared<const Node>(Node{Op::add, {}, a.node_, b.node_})); }
Term Term::sub(Term a, Term b) { return Term(std::make_shared<const Node>(Node{Op::sub, {}, a.node_, b.node_})); }
Term Term::neg(Term a) { return Term(std::make_shared<const Node>(Node{Op::neg, {}, a.node_, {}})); }
Term Term::meet(Term a, Term b) { return Term(std::make_shared<const Node>(Node{Op::meet, {}, a.node_, b.node_})); }
Term Term::join(Term a, Term b) { return Term(std::make_shared<const Node>(Node{Op::join, {}, a.node_, b.node_})); }
Term Term::abs(Term a) { return Term(std::make_shared<const Node>(Node{Op::abs, {}, a.node_, {}})); }

Term::Op Term::op() const { return node_->op; }
const std::string& Term::name() const { return node_->name; }

Term Term::lhs() const { return Term(node_->a); }
Term Term::rhs() const { return Term(node_->b); }

std::string Term::to_string() const {
  switch (op()) {
    case Op::zero: return "0";
    case Op::unit: return "u";
    case Op::var: return name();
    case Op::neg: return "-(" + lhs().to_string() + ")";
    case Op::abs: return "abs(" + lhs().to_string() + ")";
    case Op::add: return "(" + lhs().to_string() + " + " + rhs().to_string() + ")";
    case Op::sub: return "(" + lhs().to_string() + " - " + rhs().to_string() + ")";
    case Op::meet: return "(" + lhs().to_string() + " & " + rhs().to_string() + ")";
    case Op::join: return "(" + lhs().to_string() + " | " + rhs().to_string() + ")";
  }
  return {};
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = parse_join();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::parse_error,
                why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Term parse_join() {
    Term t = parse_meet();
    while (accept('|')) t = Term::join(t, parse_meet());
    return t;
  }

  Term parse_meet() {
    Term t = parse_sum();
    while (accept('&')) t = Term::meet(t, parse_sum());
    return t;
  }

  Term parse_sum() {
    Term t = parse_unary();
    for (;;) {
      if (accept('+')) {
        t = Term::add(t, parse_unary());
      } else if (accept('-')) {
        t = Term::sub(t, parse_unary());
      } else {
        return t;
      }
    }
  }

  Term parse_unary() {
    if (accept('-')) return Term::neg(parse_unary());
    return parse_atom();
  }

  Term parse_atom() {
    skip_space();
    if (accept('(')) {
      Term t = parse_join();
      if (!accept(')')) fail("expected ')'");
      return t;
    }
    if (pos_ < text_.size() && text_[pos_] == '0') {
      ++pos_;
      return Term::zero();
    }
    std::string ident;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ident.push_back(text_[pos_++]);
    }
    if (ident.empty()) fail("expected a term");
    if (std::isdigit(static_cast<unsigned char>(ident.front()))) fail("only the constant 0 is allowed");
    if (ident == "u") return Term::unit();
    if (ident == "abs") {
      if (!accept('(')) fail("expected '(' after abs");
      Term t = parse_join();
      if (!accept(')')) fail("expected ')'");
      return Term::abs(t);
    }
    return Term::var(std::move(ident));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).parse(); }

namespace {

Element eval(const UnitalGroup& G, const Term& t, const Environment& env) {
  switch (t.op()) {
    case Term::Op::zero: return G.zero();
    case Term::Op::unit: return G.unit();
    case Term::Op::var: {
      auto it = env.find(t.name());
      if (it == env.end()) throw Error(ErrorCode::unbound_variable, "variable '" + t.name() + "'");
      G.check(it->second);
      return it->second;
    }
    default: break;
  }
  Element a = eval(G, t.lhs(), env);
  switch (t.op()) {
    case Term::Op::neg: return -a;
    case Term::Op::abs: return abs(a);
    default: break;
  }
  Element b = eval(G, t.rhs(), env);
  switch (t.op()) {
    case Term::Op::add: return a + b;
    case Term::Op::sub: return a - b;
    case Term::Op::meet: return meet(a, b);
    case Term::Op::join: return join(a, b);
    default: break;
  }
  throw Error(ErrorCode::internal_invariant_violation, "unknown term operator");
}

}  // namespace

Element evaluate_term(const UnitalGroup& G, const Term& term, const Environment& env) {
  return eval(G, term, env);
}

}  // namespace lgroup
