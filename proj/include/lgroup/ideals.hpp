#pragma once

// l-ideals of groups in the supported class, the ideal lattice, quotients and
// congruence modulo an ideal.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgroup/core.hpp"

namespace lgroup {

/// An l-ideal described recursively along the group's structure:
///   Z:        zero | all
///   product:  one ideal per factor
///   Z ×→ B:   all | bottom(J), meaning {0} × J
/// Every ideal has exactly one such description, so equality is structural.
class Ideal {
 public:
  enum class Kind : std::uint8_t { zero, all, prod, bottom };

  static Ideal zero() { return Ideal(Kind::zero); }
  static Ideal all() { return Ideal(Kind::all); }
  static Ideal prod(std::vector<Ideal> children);
  static Ideal bottom(Ideal inner);

  Kind kind() const noexcept { return kind_; }
  const std::vector<Ideal>& children() const noexcept { return children_; }
  const Ideal& inner() const;

  bool matches(const Structure& s) const;

  /// "zero", "all", "(zero,all)", "bottom(all)".
  std::string to_string() const;

  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  explicit Ideal(Kind kind) : kind_(kind) {}
  Kind kind_;
  std::vector<Ideal> children_;
};

Ideal zero_ideal(const Structure& s);
Ideal full_ideal(const Structure& s);
bool is_full(const Ideal& I);

/// Unchecked forms; both arguments must share a shape.
bool contains(const Ideal& I, const Element& g);
bool subset(const Ideal& I, const Ideal& J);
Ideal meet(const Ideal& I, const Ideal& J);
Ideal join(const Ideal& I, const Ideal& J);

/// Shape-checked forms.
bool contains(const UnitalGroup& G, const Ideal& I, const Element& g);
Ideal principal_ideal(const UnitalGroup& G, const Element& g);
Ideal generated_ideal(const UnitalGroup& G, std::span<const Element> generators);

enum class LatticeOp { meet, join };
Ideal ideal_lattice_op(const UnitalGroup& G, LatticeOp op, const Ideal& I, const Ideal& J);

/// Canonical generator g with <g> = I: 1 for Z, the local unit for a full lex
/// ideal, (0, gen J) for bottom(J), componentwise for products.
Element canonical_generator(const UnitalGroup& G, const Ideal& I);

/// Position of I in the canonical enumeration order of Idl(s): zero before all,
/// products in mixed radix with the first factor most significant, and for
/// Z ×→ B every bottom(J) in Idl(B) order, then all.
std::size_t ideal_index(const Structure& s, const Ideal& I);

/// The complete, finite ideal lattice of G in canonical enumeration order.
class IdealLattice {
 public:
  explicit IdealLattice(const UnitalGroup& G);

  const UnitalGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return ideals_.size(); }
  const Ideal& operator[](std::size_t k) const { return ideals_[k]; }
  const std::vector<Ideal>& ideals() const noexcept { return ideals_; }

  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return ideals_.size() - 1; }

  /// ideals[a] ⊆ ideals[b].
  bool leq(std::size_t a, std::size_t b) const { return order_[a * ideals_.size() + b] != 0; }
  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t index_of(const Ideal& I) const;

  bool is_principal(std::size_t k) const { return principal_[k] != 0; }
  const Element& generator(std::size_t k) const { return generators_[k]; }

 private:
  UnitalGroup group_;
  std::vector<Ideal> ideals_;
  std::vector<std::uint8_t> order_;
  std::vector<std::uint8_t> principal_;
  std::vector<Element> generators_;
};

IdealLattice enumerate_ideals(const UnitalGroup& G);

/// G/I kept inside the supported class: trivial factors are dropped, and a lex
/// extension over a trivial bottom collapses to Z.
class Quotient {
 public:
  Quotient(const UnitalGroup& G, Ideal I);

  const UnitalGroup& source() const noexcept { return source_; }
  const Ideal& ideal() const noexcept { return ideal_; }

  /// Set when I = all; the quotient is then the one-element group.
  bool trivial() const noexcept { return !target_.has_value(); }
  /// Throws Error(internal_invariant_violation) when trivial.
  const UnitalGroup& group() const;

  /// [g]_I. Throws when trivial.
  Element project(const Element& g) const;
  /// J/I for J ⊇ I, as an ideal of group(). Throws unless I ⊆ J.
  Ideal project_ideal(const Ideal& J) const;

 private:
  UnitalGroup source_;
  Ideal ideal_;
  std::optional<UnitalGroup> target_;
};

Quotient quotient(const UnitalGroup& G, const Ideal& I);

/// g ≡ h (mod I), i.e. g - h ∈ I.
bool congruent(const UnitalGroup& G, const Element& g, const Element& h, const Ideal& I);

/// Throws Error(shape_mismatch) unless I is a well-formed ideal of G.
void check_ideal(const UnitalGroup& G, const Ideal& I);

}  // namespace lgroup
