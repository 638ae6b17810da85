#include "lgroup/semisimple.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace lgroup {

Ideal radical(const SpectrumSpace& X) {
  if (X.maximal().none()) {
    throw Error(ErrorCode::internal_invariant_violation, "unital group without maximal ideals");
  }
  return ideal_of_locus(X, X.maximal());
}

Ideal radical(const UnitalGroup& G) { return radical(SpectrumSpace(G)); }

bool is_semisimple(const SpectrumSpace& X) { return radical(X) == zero_ideal(X.group().structure()); }

bool is_semisimple(const UnitalGroup& G) { return is_semisimple(SpectrumSpace(G)); }

namespace {

bool quotient_semisimple(const UnitalGroup& G, const Ideal& P) {
  Quotient q(G, P);
  // The one-element quotient has no maximal ideals; it is vacuously semisimple.
  if (q.trivial()) return true;
  return is_semisimple(q.group());
}

}  // namespace

StrongSemisimplicity is_strongly_semisimple(const SpectrumSpace& X, Exec exec) {
  const IdealLattice& L = X.lattice();
  const auto n = static_cast<std::int64_t>(L.size());
  std::size_t first = std::numeric_limits<std::size_t>::max();
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) reduction(min : first)
    for (std::int64_t i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      if (k < first && L.is_principal(k) && !quotient_semisimple(X.group(), L[k])) first = std::min(first, k);
    }
  } else {
    for (std::size_t k = 0; k < L.size(); ++k) {
      if (L.is_principal(k) && !quotient_semisimple(X.group(), L[k])) {
        first = k;
        break;
      }
    }
  }
  if (first == std::numeric_limits<std::size_t>::max()) return {};
  return {false, L[first]};
}

StrongSemisimplicity is_strongly_semisimple(const UnitalGroup& G, Exec exec) {
  return is_strongly_semisimple(SpectrumSpace(G), exec);
}

bool all_multiples_below(const Element& g, const Element& h) {
  switch (g.kind()) {
    case Kind::atom: return g.value() <= 0 && h.value() >= 0;
    case Kind::prod:
      for (std::size_t k = 0; k < g.parts().size(); ++k) {
        if (!all_multiples_below(g.parts()[k], h.parts()[k])) return false;
      }
      return true;
    case Kind::lex: {
      const Element zero = zero_like(h);
      if (!leq(zero, h)) return false;  // n = 0
      if (g.value() > 0) return false;  // tops n*a eventually exceed b
      if (g.value() < 0) return true;   // n*a < 0 <= b for n >= 1, since 0 <= h forces b >= 0
      // a = 0: (0, n*t) <= (b, s)
      if (h.value() > 0) return true;
      return all_multiples_below(g.bottom(), h.bottom());
    }
  }
  return false;
}

namespace {

// Every element whose nonzero leaves are exactly `support`, with values taken
// from 1..bound, -1..-bound.
std::vector<Element> with_support(const Structure& s, const std::vector<std::size_t>& support, int bound) {
  std::vector<int> values;
  for (int v = 1; v <= bound; ++v) values.push_back(v);
  for (int v = 1; v <= bound; ++v) values.push_back(-v);
  std::vector<Integer> leaf(s.leaf_count(), Integer(0));
  std::vector<Element> out;
  std::vector<std::size_t> digit(support.size(), 0);
  for (;;) {
    for (std::size_t k = 0; k < support.size(); ++k) leaf[support[k]] = values[digit[k]];
    out.push_back(from_leaves(s, leaf));
    std::size_t k = support.size();
    for (;;) {
      if (k == 0) return out;
      --k;
      if (++digit[k] < values.size()) break;
      digit[k] = 0;
    }
  }
}

// All nonempty supports of size <= max_size, by size then lexicographically.
std::vector<std::vector<std::size_t>> supports_up_to(std::size_t leaves, std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::vector<std::size_t>> frontier{{}};
  for (std::size_t size = 1; size <= max_size; ++size) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& base : frontier) {
      const std::size_t start = base.empty() ? 0 : base.back() + 1;
      for (std::size_t k = start; k < leaves; ++k) {
        auto extended = base;
        extended.push_back(k);
        next.push_back(std::move(extended));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

std::optional<std::pair<Element, Element>> archimedean_falsify(const UnitalGroup& G, int bound) {
  if (bound < 1) throw std::invalid_argument("archimedean_falsify: bound must be >= 1");
  const Structure& s = G.structure();
  const std::size_t leaves = s.leaf_count();
  const auto supports = supports_up_to(leaves, leaves);
  std::vector<std::optional<std::vector<Element>>> cache(supports.size());
  auto candidates = [&](std::size_t k) -> const std::vector<Element>& {
    if (!cache[k]) cache[k] = with_support(s, supports[k], bound);
    return *cache[k];
  };
  const Element zero = G.zero();
  // Level L covers every pair whose larger support has size L, so small
  // witnesses are found without touching the large supports.
  for (std::size_t level = 1; level <= leaves; ++level) {
    for (std::size_t a = 0; a < supports.size() && supports[a].size() <= level; ++a) {
      for (const Element& g : candidates(a)) {
        if (!leq(zero, g)) continue;
        for (std::size_t b = 0; b < supports.size() && supports[b].size() <= level; ++b) {
          if (std::max(supports[a].size(), supports[b].size()) != level) continue;
          for (const Element& h : candidates(b)) {
            if (leq(g, h) && all_multiples_below(g, h)) return std::pair{g, h};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace lgroup
