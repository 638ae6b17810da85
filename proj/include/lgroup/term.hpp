#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "lgroup/core.hpp"

namespace lgroup {

/// Terms over the l-group signature {+, -, meet, join, |.|, 0, u} with variables.
///
/// Concrete syntax accepted by parse_term, loosest binding first:
///   a | b        join
///   a & b        meet
///   a + b, a - b
///   -a, abs(a), (a), 0, u, identifiers
class Term {
 public:
  enum class Op { zero, unit, var, add, sub, neg, meet, join, abs };

  static Term zero();
  static Term unit();
  static Term var(std::string name);
  static Term add(Term a, Term b);
  static Term sub(Term a, Term b);
  static Term neg(Term a);
  static Term meet(Term a, Term b);
  static Term join(Term a, Term b);
  static Term abs(Term a);

  Op op() const;
  const std::string& name() const;
  Term lhs() const;
  Term rhs() const;

  std::string to_string() const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Term parse_term(std::string_view text);

using Environment = std::map<std::string, Element, std::less<>>;

/// Throws Error(unbound_variable) or Error(shape_mismatch).
Element evaluate_term(const UnitalGroup& G, const Term& term, const Environment& env);

}  // namespace lgroup
