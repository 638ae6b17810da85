#pragma once

// Random instances and brute-force oracles shared by the unit tests and the
// acceptance driver. The oracles work from definitions only (order, sums,
// membership by bounded multiples) and never call the decision procedures
// they are compared against.

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "lgroup/crt.hpp"
#include "lgroup/ideals.hpp"

namespace lgroup::testing {

/// Structures with nesting depth <= max_depth and products of 2..max_width
/// factors. Draws are redrawn until the ideal lattice has at most max_ideals
/// members and the structure at most max_leaves leaves.
inline Structure random_structure(std::mt19937_64& rng, std::size_t max_depth, std::size_t max_width,
                                  std::size_t max_ideals = 512, std::size_t max_leaves = 6) {
  std::function<Structure(std::size_t)> draw = [&](std::size_t depth) {
    if (depth == 0) return Structure::atom();
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0: return Structure::atom();
      case 1: {
        const auto width = std::uniform_int_distribution<std::size_t>(2, max_width)(rng);
        std::vector<Structure> children;
        for (std::size_t k = 0; k < width; ++k) children.push_back(draw(depth - 1));
        return Structure::prod(std::move(children));
      }
      default: return Structure::lex(draw(depth - 1));
    }
  };
  for (;;) {
    Structure s = draw(max_depth);
    if (s.ideal_count() <= max_ideals && s.leaf_count() <= max_leaves) return s;
  }
}

/// A strong unit: positive at every Z factor and every lex top, anything below.
inline Element random_unit(const Structure& s, std::mt19937_64& rng, bool under_lex = false) {
  std::uniform_int_distribution<int> positive(1, 3);
  std::uniform_int_distribution<int> any(-3, 3);
  switch (s.kind()) {
    case Kind::atom: return Element::atom(under_lex ? any(rng) : positive(rng));
    case Kind::lex: return Element::lex(positive(rng), random_unit(s.bottom(), rng, true));
    case Kind::prod: {
      std::vector<Element> parts;
      for (const auto& c : s.children()) parts.push_back(random_unit(c, rng, under_lex));
      return Element::tuple(std::move(parts));
    }
  }
  return {};
}

inline UnitalGroup random_group(std::mt19937_64& rng, std::size_t max_depth = 3, std::size_t max_width = 4) {
  const Structure s = random_structure(rng, max_depth, max_width);
  return UnitalGroup(s, random_unit(s, rng));
}

inline Element random_element(const Structure& s, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<Integer> leaf(s.leaf_count());
  for (auto& v : leaf) v = dist(rng);
  return from_leaves(s, leaf);
}

/// Every element whose leaves lie in [-bound, bound].
inline std::vector<Element> box(const Structure& s, int bound) {
  const std::size_t n = s.leaf_count();
  std::vector<Integer> leaf(n, -bound);
  std::vector<Element> out;
  for (;;) {
    out.push_back(from_leaves(s, leaf));
    std::size_t k = n;
    while (k > 0 && leaf[k - 1] == bound) leaf[--k] = -bound;
    if (k == 0) return out;
    leaf[k - 1] += 1;
  }
}

/// h ∈ <g> decided as |h| <= n|g| for some n <= max_multiple.
inline bool in_principal_by_multiples(const Element& g, const Element& h, int max_multiple = 16) {
  const Element ag = abs(g);
  const Element ah = abs(h);
  for (int n = 0; n <= max_multiple; ++n) {
    if (leq(ah, scale(n, ag))) return true;
  }
  return false;
}

/// Primality from the definition: P is proper and g ∧ h ∈ P forces g ∈ P or
/// h ∈ P, over the given sample.
inline bool is_prime_by_definition(const Ideal& P, std::span<const Element> sample) {
  if (is_full(P)) return false;
  for (const auto& g : sample) {
    if (contains(P, g)) continue;
    for (const auto& h : sample) {
      if (!contains(P, h) && contains(P, meet(g, h))) return false;
    }
  }
  return true;
}

/// The first element of the box (in enumeration order) solving the system.
inline std::optional<Element> brute_force_crt(const UnitalGroup& G, const CongruenceSystem& system, int bound) {
  for (const auto& g : box(G.structure(), bound)) {
    bool ok = true;
    for (const auto& c : system.constraints) {
      if (!contains(c.ideal, g - c.target)) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return std::nullopt;
}

inline Structure zn(std::size_t n) {
  return n == 1 ? Structure::atom() : Structure::prod(std::vector<Structure>(n, Structure::atom()));
}

inline Element vec(std::initializer_list<long long> values) {
  std::vector<Element> parts;
  for (long long v : values) parts.push_back(Element::atom(v));
  return parts.size() == 1 ? parts.front() : Element::tuple(std::move(parts));
}

}  // namespace lgroup::testing
