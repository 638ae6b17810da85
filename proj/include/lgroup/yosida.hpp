#pragma once

// Hölder embeddings of the simple quotients G/m into (R, 1) and the Yosida
// function ĝ on Max(G). In the supported class G/m is always (Z, k), so every
// value is the rational [g]_m / k.

#include <vector>

#include "lgroup/spectrum.hpp"

namespace lgroup {

/// ĝ(m). Throws Error(not_maximal) unless m is a maximal ideal of G.
Rational holder_eval(const UnitalGroup& G, const Element& g, const Ideal& m);

struct YosidaTable {
  std::vector<std::size_t> primes;  // indices into Spec(G) of the maximal ideals
  std::vector<Rational> values;
};

YosidaTable yosida_table(const SpectrumSpace& X, const Element& g);

/// {m ∈ Max : g ∈ m}, as a subset of Spec(G).
PrimeSet principal_zero_set(const SpectrumSpace& X, const Element& g);
/// {m ∈ Max : ĝ(m) = 0}; agrees with principal_zero_set.
PrimeSet zero_set_by_values(const SpectrumSpace& X, const Element& g);

/// For a lex-free group, the leaf (coordinate) at which each maximal ideal
/// vanishes, in Spec order. Throws Error(shape_mismatch) if G has a lex factor.
std::vector<std::size_t> yosida_points(const SpectrumSpace& X);

}  // namespace lgroup
