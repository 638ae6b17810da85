#include "lgroup/ideals.hpp"

#include <algorithm>

namespace lgroup {

namespace {

[[noreturn]] void shape_error(const std::string& what) { throw Error(ErrorCode::shape_mismatch, what); }

}  // namespace

// -------------------------------------------------------------------- Ideal

Ideal Ideal::prod(std::vector<Ideal> children) {
  if (children.size() < 2) shape_error("a product ideal needs at least two components");
  Ideal I(Kind::prod);
  I.children_ = std::move(children);
  return I;
}

Ideal Ideal::bottom(Ideal inner) {
  Ideal I(Kind::bottom);
  I.children_.push_back(std::move(inner));
  return I;
}

const Ideal& Ideal::inner() const {
  if (kind_ != Kind::bottom) shape_error("inner() on a non-bottom ideal");
  return children_.front();
}

bool Ideal::matches(const Structure& s) const {
  switch (s.kind()) {
    case lgroup::Kind::atom: return kind_ == Kind::zero || kind_ == Kind::all;
    case lgroup::Kind::lex: return kind_ == Kind::all || (kind_ == Kind::bottom && inner().matches(s.bottom()));
    case lgroup::Kind::prod:
      if (kind_ != Kind::prod || children_.size() != s.children().size()) return false;
      for (std::size_t k = 0; k < children_.size(); ++k) {
        if (!children_[k].matches(s.children()[k])) return false;
      }
      return true;
  }
  return false;
}

std::string Ideal::to_string() const {
  switch (kind_) {
    case Kind::zero: return "zero";
    case Kind::all: return "all";
    case Kind::bottom: return "bottom(" + inner().to_string() + ")";
    case Kind::prod: {
      std::string out = "(";
      for (std::size_t k = 0; k < children_.size(); ++k) {
        if (k) out += ",";
        out += children_[k].to_string();
      }
      return out + ")";
    }
  }
  return {};
}

bool operator==(const Ideal& a, const Ideal& b) {
  return a.kind_ == b.kind_ && a.children_ == b.children_;
}

Ideal zero_ideal(const Structure& s) {
  switch (s.kind()) {
    case Kind::atom: return Ideal::zero();
    case Kind::lex: return Ideal::bottom(zero_ideal(s.bottom()));
    case Kind::prod: {
      std::vector<Ideal> parts;
      for (const auto& c : s.children()) parts.push_back(zero_ideal(c));
      return Ideal::prod(std::move(parts));
    }
  }
  return Ideal::zero();
}

Ideal full_ideal(const Structure& s) {
  if (s.kind() != Kind::prod) return Ideal::all();
  std::vector<Ideal> parts;
  for (const auto& c : s.children()) parts.push_back(full_ideal(c));
  return Ideal::prod(std::move(parts));
}

bool is_full(const Ideal& I) {
  switch (I.kind()) {
    case Ideal::Kind::all: return true;
    case Ideal::Kind::prod:
      return std::all_of(I.children().begin(), I.children().end(), [](const Ideal& c) { return is_full(c); });
    default: return false;
  }
}

// ------------------------------------------------------- unchecked algebra

bool contains(const Ideal& I, const Element& g) {
  switch (I.kind()) {
    case Ideal::Kind::zero: return g.value().is_zero();
    case Ideal::Kind::all: return true;
    case Ideal::Kind::bottom: return g.value().is_zero() && contains(I.inner(), g.bottom());
    case Ideal::Kind::prod:
      for (std::size_t k = 0; k < I.children().size(); ++k) {
        if (!contains(I.children()[k], g.parts()[k])) return false;
      }
      return true;
  }
  return false;
}

bool subset(const Ideal& I, const Ideal& J) {
  switch (I.kind()) {
    case Ideal::Kind::zero: return true;
    case Ideal::Kind::all: return J.kind() == Ideal::Kind::all;
    case Ideal::Kind::bottom: return J.kind() == Ideal::Kind::all || subset(I.inner(), J.inner());
    case Ideal::Kind::prod:
      for (std::size_t k = 0; k < I.children().size(); ++k) {
        if (!subset(I.children()[k], J.children()[k])) return false;
      }
      return true;
  }
  return false;
}

namespace {

template <bool IsMeet>
Ideal ideal_op(const Ideal& I, const Ideal& J) {
  using K = Ideal::Kind;
  if (I.kind() == K::prod) {
    std::vector<Ideal> parts;
    parts.reserve(I.children().size());
    for (std::size_t k = 0; k < I.children().size(); ++k) {
      parts.push_back(ideal_op<IsMeet>(I.children()[k], J.children()[k]));
    }
    return Ideal::prod(std::move(parts));
  }
  if (I.kind() == K::all) return IsMeet ? J : I;
  if (J.kind() == K::all) return IsMeet ? I : J;
  if (I.kind() == K::zero) return IsMeet ? I : J;
  // bottom ∘ bottom
  return Ideal::bottom(ideal_op<IsMeet>(I.inner(), J.inner()));
}

Ideal principal_of(const Element& g) {
  switch (g.kind()) {
    case Kind::atom: return g.value().is_zero() ? Ideal::zero() : Ideal::all();
    case Kind::lex: return g.value().is_zero() ? Ideal::bottom(principal_of(g.bottom())) : Ideal::all();
    case Kind::prod: {
      std::vector<Ideal> parts;
      parts.reserve(g.parts().size());
      for (const auto& p : g.parts()) parts.push_back(principal_of(p));
      return Ideal::prod(std::move(parts));
    }
  }
  return Ideal::zero();
}

}  // namespace

Ideal meet(const Ideal& I, const Ideal& J) { return ideal_op<true>(I, J); }
Ideal join(const Ideal& I, const Ideal& J) { return ideal_op<false>(I, J); }

// ---------------------------------------------------------- checked forms

void check_ideal(const UnitalGroup& G, const Ideal& I) {
  if (!I.matches(G.structure())) {
    shape_error("ideal " + I.to_string() + " does not match " + G.structure().to_string());
  }
}

bool contains(const UnitalGroup& G, const Ideal& I, const Element& g) {
  check_ideal(G, I);
  G.check(g);
  return contains(I, g);
}

Ideal principal_ideal(const UnitalGroup& G, const Element& g) {
  G.check(g);
  return principal_of(g);
}

Ideal generated_ideal(const UnitalGroup& G, std::span<const Element> generators) {
  Ideal result = zero_ideal(G.structure());
  for (const auto& g : generators) result = join(result, principal_ideal(G, g));
  return result;
}

Ideal ideal_lattice_op(const UnitalGroup& G, LatticeOp op, const Ideal& I, const Ideal& J) {
  check_ideal(G, I);
  check_ideal(G, J);
  return op == LatticeOp::meet ? meet(I, J) : join(I, J);
}

namespace {

Element generator_of(const Structure& s, const Element& unit, const Ideal& I) {
  switch (s.kind()) {
    case Kind::atom: return Element::atom(I.kind() == Ideal::Kind::all ? 1 : 0);
    case Kind::lex:
      if (I.kind() == Ideal::Kind::all) return unit;
      return Element::lex(0, generator_of(s.bottom(), unit.bottom(), I.inner()));
    case Kind::prod: {
      std::vector<Element> parts;
      for (std::size_t k = 0; k < s.children().size(); ++k) {
        parts.push_back(generator_of(s.children()[k], unit.parts()[k], I.children()[k]));
      }
      return Element::tuple(std::move(parts));
    }
  }
  return {};
}

std::vector<Ideal> enumerate(const Structure& s) {
  switch (s.kind()) {
    case Kind::atom: return {Ideal::zero(), Ideal::all()};
    case Kind::lex: {
      std::vector<Ideal> out;
      for (auto& J : enumerate(s.bottom())) out.push_back(Ideal::bottom(std::move(J)));
      out.push_back(Ideal::all());
      return out;
    }
    case Kind::prod: {
      std::vector<std::vector<Ideal>> per_factor;
      for (const auto& c : s.children()) per_factor.push_back(enumerate(c));
      std::vector<std::vector<Ideal>> partial{{}};
      for (const auto& options : per_factor) {
        std::vector<std::vector<Ideal>> next;
        next.reserve(partial.size() * options.size());
        for (const auto& prefix : partial) {
          for (const auto& o : options) {
            auto extended = prefix;
            extended.push_back(o);
            next.push_back(std::move(extended));
          }
        }
        partial = std::move(next);
      }
      std::vector<Ideal> out;
      out.reserve(partial.size());
      for (auto& parts : partial) out.push_back(Ideal::prod(std::move(parts)));
      return out;
    }
  }
  return {};
}

}  // namespace

Element canonical_generator(const UnitalGroup& G, const Ideal& I) {
  check_ideal(G, I);
  return generator_of(G.structure(), G.unit(), I);
}

std::size_t ideal_index(const Structure& s, const Ideal& I) {
  switch (s.kind()) {
    case Kind::atom: return I.kind() == Ideal::Kind::all ? 1 : 0;
    case Kind::lex:
      if (I.kind() == Ideal::Kind::all) return s.bottom().ideal_count();
      return ideal_index(s.bottom(), I.inner());
    case Kind::prod: {
      std::size_t idx = 0;
      for (std::size_t k = 0; k < s.children().size(); ++k) {
        idx = idx * s.children()[k].ideal_count() + ideal_index(s.children()[k], I.children()[k]);
      }
      return idx;
    }
  }
  return 0;
}

// ------------------------------------------------------------- IdealLattice

IdealLattice::IdealLattice(const UnitalGroup& G) : group_(G), ideals_(enumerate(G.structure())) {
  const std::size_t n = ideals_.size();
  order_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) order_[a * n + b] = subset(ideals_[a], ideals_[b]) ? 1 : 0;
  }
  principal_.resize(n);
  generators_.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    generators_.push_back(generator_of(G.structure(), G.unit(), ideals_[k]));
    principal_[k] = principal_of(generators_[k]) == ideals_[k] ? 1 : 0;
  }
}

std::size_t IdealLattice::meet(std::size_t a, std::size_t b) const {
  return ideal_index(group_.structure(), lgroup::meet(ideals_[a], ideals_[b]));
}

std::size_t IdealLattice::join(std::size_t a, std::size_t b) const {
  return ideal_index(group_.structure(), lgroup::join(ideals_[a], ideals_[b]));
}

std::size_t IdealLattice::index_of(const Ideal& I) const {
  check_ideal(group_, I);
  return ideal_index(group_.structure(), I);
}

IdealLattice enumerate_ideals(const UnitalGroup& G) { return IdealLattice(G); }

// ---------------------------------------------------------------- Quotient

namespace {

std::optional<Structure> quotient_structure(const Structure& s, const Ideal& I) {
  switch (s.kind()) {
    case Kind::atom:
      if (I.kind() == Ideal::Kind::all) return std::nullopt;
      return s;
    case Kind::lex: {
      if (I.kind() == Ideal::Kind::all) return std::nullopt;
      auto b = quotient_structure(s.bottom(), I.inner());
      if (!b) return Structure::atom();
      return Structure::lex(std::move(*b));
    }
    case Kind::prod: {
      std::vector<Structure> kept;
      for (std::size_t k = 0; k < s.children().size(); ++k) {
        if (auto c = quotient_structure(s.children()[k], I.children()[k])) kept.push_back(std::move(*c));
      }
      if (kept.empty()) return std::nullopt;
      if (kept.size() == 1) return std::move(kept.front());
      return Structure::prod(std::move(kept));
    }
  }
  return std::nullopt;
}

std::optional<Element> quotient_element(const Ideal& I, const Element& g) {
  switch (g.kind()) {
    case Kind::atom:
      if (I.kind() == Ideal::Kind::all) return std::nullopt;
      return g;
    case Kind::lex: {
      if (I.kind() == Ideal::Kind::all) return std::nullopt;
      auto b = quotient_element(I.inner(), g.bottom());
      if (!b) return Element::atom(g.value());
      return Element::lex(g.value(), std::move(*b));
    }
    case Kind::prod: {
      std::vector<Element> kept;
      for (std::size_t k = 0; k < g.parts().size(); ++k) {
        if (auto c = quotient_element(I.children()[k], g.parts()[k])) kept.push_back(std::move(*c));
      }
      if (kept.empty()) return std::nullopt;
      if (kept.size() == 1) return std::move(kept.front());
      return Element::tuple(std::move(kept));
    }
  }
  return std::nullopt;
}

// J ⊇ I. nullopt exactly when the quotient by I is trivial at this node.
std::optional<Ideal> quotient_ideal(const Structure& s, const Ideal& I, const Ideal& J) {
  switch (s.kind()) {
    case Kind::atom:
      if (I.kind() == Ideal::Kind::all) return std::nullopt;
      return J;
    case Kind::lex: {
      if (I.kind() == Ideal::Kind::all) return std::nullopt;
      if (J.kind() == Ideal::Kind::all) return Ideal::all();
      auto b = quotient_ideal(s.bottom(), I.inner(), J.inner());
      if (!b) return Ideal::zero();  // the quotient collapsed to Z, and J = bottom(all)
      return Ideal::bottom(std::move(*b));
    }
    case Kind::prod: {
      std::vector<Ideal> kept;
      for (std::size_t k = 0; k < s.children().size(); ++k) {
        if (auto c = quotient_ideal(s.children()[k], I.children()[k], J.children()[k])) {
          kept.push_back(std::move(*c));
        }
      }
      if (kept.empty()) return std::nullopt;
      if (kept.size() == 1) return std::move(kept.front());
      return Ideal::prod(std::move(kept));
    }
  }
  return std::nullopt;
}

}  // namespace

Quotient::Quotient(const UnitalGroup& G, Ideal I) : source_(G), ideal_(std::move(I)) {
  check_ideal(G, ideal_);
  if (auto s = quotient_structure(G.structure(), ideal_)) {
    target_.emplace(std::move(*s), *quotient_element(ideal_, G.unit()));
  }
}

const UnitalGroup& Quotient::group() const {
  if (!target_) throw Error(ErrorCode::internal_invariant_violation, "quotient by the full ideal is trivial");
  return *target_;
}

Element Quotient::project(const Element& g) const {
  source_.check(g);
  auto q = quotient_element(ideal_, g);
  if (!q) throw Error(ErrorCode::internal_invariant_violation, "projection into the trivial quotient");
  return std::move(*q);
}

Ideal Quotient::project_ideal(const Ideal& J) const {
  check_ideal(source_, J);
  if (!subset(ideal_, J)) {
    throw Error(ErrorCode::shape_mismatch, J.to_string() + " does not contain " + ideal_.to_string());
  }
  auto q = quotient_ideal(source_.structure(), ideal_, J);
  if (!q) throw Error(ErrorCode::internal_invariant_violation, "ideal of the trivial quotient");
  return std::move(*q);
}

Quotient quotient(const UnitalGroup& G, const Ideal& I) { return Quotient(G, I); }

bool congruent(const UnitalGroup& G, const Element& g, const Element& h, const Ideal& I) {
  check_ideal(G, I);
  G.check(g);
  G.check(h);
  return contains(I, g - h);
}

}  // namespace lgroup
