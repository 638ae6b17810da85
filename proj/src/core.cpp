#include "lgroup/core.hpp"

#include <algorithm>
#include <limits>

namespace lgroup {

namespace {

[[noreturn]] void shape_error(const std::string& what) { throw Error(ErrorCode::shape_mismatch, what); }

void require_same_shape(const Element& g, const Element& h) {
  if (g.kind() != h.kind() || g.parts().size() != h.parts().size()) {
    shape_error(g.to_string() + " vs " + h.to_string());
  }
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    return std::numeric_limits<std::size_t>::max();
  }
  return a * b;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  // b > 0
  Integer q = a / b;
  if (q * b < a) ++q;
  return q;
}

}  // namespace

// ---------------------------------------------------------------- Structure

Structure Structure::prod(std::vector<Structure> children) {
  if (children.size() < 2) shape_error("a product needs at least two factors");
  Structure s;
  s.kind_ = Kind::prod;
  s.children_ = std::move(children);
  return s;
}

Structure Structure::lex(Structure bottom) {
  Structure s;
  s.kind_ = Kind::lex;
  s.children_.push_back(std::move(bottom));
  return s;
}

const Structure& Structure::bottom() const {
  if (kind_ != Kind::lex) shape_error("bottom() on a non-lex structure");
  return children_.front();
}

std::size_t Structure::leaf_count() const {
  switch (kind_) {
    case Kind::atom: return 1;
    case Kind::lex: return 1 + children_.front().leaf_count();
    case Kind::prod: {
      std::size_t n = 0;
      for (const auto& c : children_) n += c.leaf_count();
      return n;
    }
  }
  return 0;
}

std::size_t Structure::ideal_count() const {
  switch (kind_) {
    case Kind::atom: return 2;
    case Kind::lex: {
      std::size_t b = children_.front().ideal_count();
      return b == std::numeric_limits<std::size_t>::max() ? b : b + 1;
    }
    case Kind::prod: {
      std::size_t n = 1;
      for (const auto& c : children_) n = saturating_mul(n, c.ideal_count());
      return n;
    }
  }
  return 0;
}

std::size_t Structure::depth() const {
  std::size_t d = 0;
  for (const auto& c : children_) d = std::max(d, c.depth() + 1);
  return d;
}

std::string Structure::to_string() const {
  switch (kind_) {
    case Kind::atom: return "Z";
    case Kind::lex: return "lex(" + children_.front().to_string() + ")";
    case Kind::prod: {
      std::string out = "(";
      for (std::size_t k = 0; k < children_.size(); ++k) {
        if (k) out += " x ";
        out += children_[k].to_string();
      }
      return out + ")";
    }
  }
  return {};
}

bool operator==(const Structure& a, const Structure& b) {
  return a.kind_ == b.kind_ && a.children_ == b.children_;
}

bool is_chain(const Structure& s) {
  switch (s.kind()) {
    case Kind::atom: return true;
    case Kind::lex: return is_chain(s.bottom());
    case Kind::prod: return false;
  }
  return false;
}

// ------------------------------------------------------------------ Element

Element Element::atom(Integer value) {
  Element e;
  e.value_ = std::move(value);
  return e;
}

Element Element::tuple(std::vector<Element> parts) {
  if (parts.size() < 2) shape_error("a tuple needs at least two components");
  Element e;
  e.kind_ = Kind::prod;
  e.parts_ = std::move(parts);
  return e;
}

Element Element::lex(Integer top, Element bottom) {
  Element e;
  e.kind_ = Kind::lex;
  e.value_ = std::move(top);
  e.parts_.push_back(std::move(bottom));
  return e;
}

const Element& Element::bottom() const {
  if (kind_ != Kind::lex) shape_error("bottom() on a non-lex element");
  return parts_.front();
}

bool Element::matches(const Structure& s) const {
  if (kind_ != s.kind() || parts_.size() != s.children().size()) return false;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (!parts_[k].matches(s.children()[k])) return false;
  }
  return true;
}

bool Element::is_zero() const {
  if (kind_ != Kind::prod && !value_.is_zero()) return false;
  return std::all_of(parts_.begin(), parts_.end(), [](const Element& p) { return p.is_zero(); });
}

std::string Element::to_string() const {
  if (kind_ == Kind::atom) return value_.str();
  std::string out = "(";
  if (kind_ == Kind::lex) {
    out += value_.str() + "," + parts_.front().to_string();
  } else {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (k) out += ",";
      out += parts_[k].to_string();
    }
  }
  return out + ")";
}

Element Element::operator-() const {
  Element e = *this;
  e.value_ = -e.value_;
  for (auto& p : e.parts_) p = -p;
  return e;
}

Element& Element::operator+=(const Element& other) {
  require_same_shape(*this, other);
  value_ += other.value_;
  for (std::size_t k = 0; k < parts_.size(); ++k) parts_[k] += other.parts_[k];
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_shape(*this, other);
  value_ -= other.value_;
  for (std::size_t k = 0; k < parts_.size(); ++k) parts_[k] -= other.parts_[k];
  return *this;
}

Element operator+(const Element& a, const Element& b) {
  Element r = a;
  r += b;
  return r;
}

Element operator-(const Element& a, const Element& b) {
  Element r = a;
  r -= b;
  return r;
}

bool operator==(const Element& a, const Element& b) {
  return a.kind_ == b.kind_ && a.value_ == b.value_ && a.parts_ == b.parts_;
}

Element zero_of(const Structure& s) {
  switch (s.kind()) {
    case Kind::atom: return Element::atom(0);
    case Kind::lex: return Element::lex(0, zero_of(s.bottom()));
    case Kind::prod: {
      std::vector<Element> parts;
      parts.reserve(s.children().size());
      for (const auto& c : s.children()) parts.push_back(zero_of(c));
      return Element::tuple(std::move(parts));
    }
  }
  return {};
}

Element zero_like(const Element& g) { return g - g; }

Element scale(const Integer& n, const Element& g) {
  struct Scaler {
    const Integer& n;
    Element operator()(const Element& x) const {
      switch (x.kind()) {
        case Kind::atom: return Element::atom(n * x.value());
        case Kind::lex: return Element::lex(n * x.value(), (*this)(x.bottom()));
        case Kind::prod: {
          std::vector<Element> parts;
          parts.reserve(x.parts().size());
          for (const auto& p : x.parts()) parts.push_back((*this)(p));
          return Element::tuple(std::move(parts));
        }
      }
      return {};
    }
  };
  return Scaler{n}(g);
}

bool leq(const Element& g, const Element& h) {
  require_same_shape(g, h);
  switch (g.kind()) {
    case Kind::atom: return g.value() <= h.value();
    case Kind::lex:
      if (g.value() != h.value()) return g.value() < h.value();
      return leq(g.bottom(), h.bottom());
    case Kind::prod:
      for (std::size_t k = 0; k < g.parts().size(); ++k) {
        if (!leq(g.parts()[k], h.parts()[k])) return false;
      }
      return true;
  }
  return false;
}

namespace {

template <bool IsMeet>
Element lattice_op(const Element& g, const Element& h) {
  require_same_shape(g, h);
  switch (g.kind()) {
    case Kind::atom:
      return Element::atom(IsMeet ? std::min(g.value(), h.value()) : std::max(g.value(), h.value()));
    case Kind::lex:
      if (g.value() != h.value()) {
        const bool g_below = g.value() < h.value();
        return (g_below == IsMeet) ? g : h;
      }
      return Element::lex(g.value(), lattice_op<IsMeet>(g.bottom(), h.bottom()));
    case Kind::prod: {
      std::vector<Element> parts;
      parts.reserve(g.parts().size());
      for (std::size_t k = 0; k < g.parts().size(); ++k) {
        parts.push_back(lattice_op<IsMeet>(g.parts()[k], h.parts()[k]));
      }
      return Element::tuple(std::move(parts));
    }
  }
  return {};
}

}  // namespace

Element meet(const Element& g, const Element& h) { return lattice_op<true>(g, h); }
Element join(const Element& g, const Element& h) { return lattice_op<false>(g, h); }
Element abs(const Element& g) { return join(g, -g); }

std::vector<Integer> leaves(const Element& g) {
  std::vector<Integer> out;
  struct Walk {
    std::vector<Integer>& out;
    void operator()(const Element& x) const {
      if (x.kind() != Kind::prod) out.push_back(x.value());
      for (const auto& p : x.parts()) (*this)(p);
    }
  };
  Walk{out}(g);
  return out;
}

Element from_leaves(const Structure& s, std::span<const Integer> values) {
  if (values.size() != s.leaf_count()) shape_error("leaf count mismatch for " + s.to_string());
  std::size_t pos = 0;
  struct Build {
    std::span<const Integer> values;
    std::size_t& pos;
    Element operator()(const Structure& t) const {
      switch (t.kind()) {
        case Kind::atom: return Element::atom(values[pos++]);
        case Kind::lex: {
          Integer top = values[pos++];
          return Element::lex(std::move(top), (*this)(t.bottom()));
        }
        case Kind::prod: {
          std::vector<Element> parts;
          for (const auto& c : t.children()) parts.push_back((*this)(c));
          return Element::tuple(std::move(parts));
        }
      }
      return {};
    }
  };
  return Build{values, pos}(s);
}

// -------------------------------------------------------------- UnitalGroup

namespace {

void collect_unit_violations(const Structure& s, const Element& u, const std::string& pos,
                             std::vector<Diagnostic>& out) {
  switch (s.kind()) {
    case Kind::atom:
      if (u.value() < 1) {
        out.push_back({ErrorCode::not_a_strong_unit, pos,
                       "component " + u.value().str() + " at " + pos + " is not >= 1"});
      }
      return;
    case Kind::lex:
      // Any (k, t) with k >= 1 dominates: n*(k,t) has top nk > a eventually.
      if (u.value() < 1) {
        out.push_back({ErrorCode::not_a_strong_unit, pos + ".top",
                       "lexicographic top " + u.value().str() + " at " + pos +
                           ".top is not >= 1; no multiple dominates the top direction"});
      }
      return;
    case Kind::prod:
      for (std::size_t k = 0; k < s.children().size(); ++k) {
        collect_unit_violations(s.children()[k], u.parts()[k], pos + "[" + std::to_string(k) + "]", out);
      }
      return;
  }
}

}  // namespace

std::variant<UnitalGroup, std::vector<Diagnostic>> validate_unital_group(Structure structure,
                                                                          Element unit) {
  std::vector<Diagnostic> problems;
  if (!unit.matches(structure)) {
    problems.push_back({ErrorCode::shape_mismatch, "$",
                        "unit " + unit.to_string() + " does not match " + structure.to_string()});
    return problems;
  }
  collect_unit_violations(structure, unit, "$", problems);
  if (!problems.empty()) return problems;
  return UnitalGroup(std::move(structure), std::move(unit));
}

UnitalGroup::UnitalGroup(Structure structure, Element unit)
    : structure_(std::move(structure)), unit_(std::move(unit)) {
  if (!unit_.matches(structure_)) {
    shape_error("unit " + unit_.to_string() + " does not match " + structure_.to_string());
  }
  std::vector<Diagnostic> problems;
  collect_unit_violations(structure_, unit_, "$", problems);
  if (!problems.empty()) throw Error(problems.front().code, problems.front().message);
}

void UnitalGroup::check(const Element& g) const {
  if (!g.matches(structure_)) {
    shape_error(g.to_string() + " is not an element of " + structure_.to_string());
  }
}

std::string UnitalGroup::to_string() const {
  return "(" + structure_.to_string() + ", u=" + unit_.to_string() + ")";
}

bool leq(const UnitalGroup& G, const Element& g, const Element& h) {
  G.check(g);
  G.check(h);
  return leq(g, h);
}

namespace {

Integer min_multiple(const Element& u, const Element& g) {
  switch (u.kind()) {
    case Kind::atom: return std::max(Integer(0), ceil_div(g.value(), u.value()));
    case Kind::prod: {
      Integer n = 0;
      for (std::size_t k = 0; k < u.parts().size(); ++k) {
        n = std::max(n, min_multiple(u.parts()[k], g.parts()[k]));
      }
      return n;
    }
    case Kind::lex: {
      Integer n = std::max(Integer(0), ceil_div(g.value(), u.value()));
      if (n * u.value() > g.value()) return n;
      // Tops tie at n*k == a; the bottoms decide.
      return leq(g.bottom(), scale(n, u.bottom())) ? n : n + 1;
    }
  }
  return 0;
}

}  // namespace

Integer unit_multiple_bound(const UnitalGroup& G, const Element& g) {
  G.check(g);
  return min_multiple(G.unit(), g);
}

}  // namespace lgroup
