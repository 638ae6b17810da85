#pragma once

// Unital lattice-ordered Abelian groups built from Z by finite products and
// lexicographic extensions, with exact element arithmetic.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lgroup/error.hpp"
#include "lgroup/rational.hpp"

namespace lgroup {

enum class Kind : std::uint8_t { atom, prod, lex };

/// Shape of a group: Z, a product of at least two groups, or Z ×→ bottom
/// (lexicographic, top dominant).
class Structure {
 public:
  Structure() = default;  // Z

  static Structure atom() { return {}; }
  static Structure prod(std::vector<Structure> children);
  static Structure lex(Structure bottom);

  Kind kind() const noexcept { return kind_; }
  /// Prod factors; for Lex the single bottom structure.
  const std::vector<Structure>& children() const noexcept { return children_; }
  const Structure& bottom() const;

  /// Number of Z leaves in pre-order (a Lex top counts as one leaf).
  std::size_t leaf_count() const;
  /// Number of l-ideals; saturates at SIZE_MAX.
  std::size_t ideal_count() const;
  std::size_t depth() const;

  /// "Z", "(Z x Z)", "lex(Z)".
  std::string to_string() const;

  friend bool operator==(const Structure& a, const Structure& b);

 private:
  Kind kind_ = Kind::atom;
  std::vector<Structure> children_;
};

/// True iff the order is total: Z and lex extensions of chains.
bool is_chain(const Structure& s);

/// A group element as a nested integer tuple. Elements carry their own shape
/// tag so arithmetic and order never need the Structure; compatibility with a
/// particular group is checked by UnitalGroup::check.
class Element {
 public:
  Element() = default;  // 0 in Z

  static Element atom(Integer value);
  static Element tuple(std::vector<Element> parts);
  static Element lex(Integer top, Element bottom);

  Kind kind() const noexcept { return kind_; }
  /// The integer of an atom, or the top of a lex pair.
  const Integer& value() const noexcept { return value_; }
  const std::vector<Element>& parts() const noexcept { return parts_; }
  const Element& bottom() const;

  bool matches(const Structure& s) const;
  bool is_zero() const;

  /// "3", "(1,-2)", "(0,(1,5))"; a lex pair prints as (top,bottom).
  std::string to_string() const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);

  friend bool operator==(const Element& a, const Element& b);

 private:
  Kind kind_ = Kind::atom;
  Integer value_{0};
  std::vector<Element> parts_;
};

Element zero_of(const Structure& s);
Element scale(const Integer& n, const Element& g);

/// Shape-checked lattice operations. Lex pairs compare top first.
bool leq(const Element& g, const Element& h);
Element meet(const Element& g, const Element& h);
Element join(const Element& g, const Element& h);
Element abs(const Element& g);
/// The zero element with g's shape.
Element zero_like(const Element& g);

/// Flattening to leaves in pre-order and back.
std::vector<Integer> leaves(const Element& g);
Element from_leaves(const Structure& s, std::span<const Integer> values);

struct Diagnostic {
  ErrorCode code;
  std::string position;  // "$", "$.top", "$[1].bottom", ...
  std::string message;
};

class UnitalGroup {
 public:
  /// Throws Error with the first diagnostic when the unit is invalid.
  UnitalGroup(Structure structure, Element unit);

  const Structure& structure() const noexcept { return structure_; }
  const Element& unit() const noexcept { return unit_; }
  Element zero() const { return zero_of(structure_); }

  /// Throws Error(shape_mismatch) unless g has this group's shape.
  void check(const Element& g) const;

  std::string to_string() const;

  friend bool operator==(const UnitalGroup& a, const UnitalGroup& b) {
    return a.structure_ == b.structure_ && a.unit_ == b.unit_;
  }

 private:
  Structure structure_;
  Element unit_;
};

/// Returns the group, or every violation found (shape mismatch, or the
/// positions at which the unit fails to be a strong unit).
std::variant<UnitalGroup, std::vector<Diagnostic>> validate_unital_group(Structure structure,
                                                                          Element unit);

bool leq(const UnitalGroup& G, const Element& g, const Element& h);

/// Smallest n >= 0 with n*u >= g, computed from the top-level magnitudes.
Integer unit_multiple_bound(const UnitalGroup& G, const Element& g);

}  // namespace lgroup
