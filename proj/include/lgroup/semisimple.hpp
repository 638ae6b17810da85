#pragma once

#include <optional>
#include <utility>

#include "lgroup/parallel.hpp"
#include "lgroup/spectrum.hpp"

namespace lgroup {

/// Rad(G), the intersection of the maximal ideals.
Ideal radical(const SpectrumSpace& X);
Ideal radical(const UnitalGroup& G);

/// Decided through the radical: G is semisimple iff Rad(G) = {0}.
bool is_semisimple(const SpectrumSpace& X);
bool is_semisimple(const UnitalGroup& G);

struct StrongSemisimplicity {
  bool holds = true;
  /// The first principal ideal (canonical order) whose quotient is not semisimple.
  std::optional<Ideal> witness;
};

/// Checks G/P for every principal ideal P, the zero ideal included.
StrongSemisimplicity is_strongly_semisimple(const UnitalGroup& G, Exec exec = Exec::parallel);
StrongSemisimplicity is_strongly_semisimple(const SpectrumSpace& X, Exec exec = Exec::parallel);

/// Searches elements with leaves in [-bound, bound], ordered by support size,
/// for 0 < g <= h with n*g <= h for every n >= 0. The test "for every n" is
/// decided exactly. Only a cross-check; semisimplicity is decided by the radical.
std::optional<std::pair<Element, Element>> archimedean_falsify(const UnitalGroup& G, int bound);

/// Exact decision of "n*g <= h for all n >= 0".
bool all_multiples_below(const Element& g, const Element& h);

}  // namespace lgroup
