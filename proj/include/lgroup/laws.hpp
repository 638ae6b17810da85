#pragma once

// Exhaustive and sampled law suites over finite instances. `selftest` runs
// them on the gallery; tests run them on generated structures too.

#include <random>
#include <span>
#include <string>
#include <vector>

#include "lgroup/io.hpp"
#include "lgroup/spectrum.hpp"

namespace lgroup {

/// Every element with leaves in [-1, 1] (when there are at most 6 leaves), the
/// unit, a generator of the radical, and `extra` random elements with leaves in
/// [-3, 3].
std::vector<Element> sample_elements(const UnitalGroup& G, std::mt19937_64& rng, std::size_t extra = 16);

/// <g> is the least ideal containing g, checked against every ideal.
LawCheck principal_is_least(const IdealLattice& L, std::span<const Element> sample);
LawCheck lattice_distributive(const IdealLattice& L);
/// Every ideal is principal, witnessed by its canonical generator.
LawCheck every_ideal_principal(const IdealLattice& L);
/// d ∈ I ∨ J splits as a + b over I and J; sums of members of I and J lie in I ∨ J.
LawCheck ideal_sum_law(const IdealLattice& L, std::span<const Element> sample);
/// Idl(G/I) is order-isomorphic to the interval [I, G] via J ↦ J/I.
LawCheck quotient_lattice_correspondence(const IdealLattice& L);
/// Spec(G/I) is order-isomorphic to V(I) via J ↦ J/I, for every ideal I.
LawCheck spectrum_quotient_correspondence(const SpectrumSpace& X);

/// Rad(G) = {0} iff cl(Max) = Spec.
LawCheck semisimple_iff_max_dense(const SpectrumSpace& X);
/// Strongly semisimple iff V(P) = cl(V(P) ∩ Max) for every principal P, iff
/// every principal ideal is the meet of the maximal ideals above it; and
/// strongly semisimple implies semisimple.
LawCheck strongly_semisimple_characterizations(const SpectrumSpace& X, Exec exec = Exec::parallel);
/// archimedean_falsify finds a witness iff G is not semisimple.
LawCheck archimedean_cross_check(const SpectrumSpace& X, int bound);

/// ĝ is additive and lattice-compatible, both zero-set definitions agree, and
/// ĝ vanishes on Max iff g ∈ Rad(G). For lex-free groups, Max is in bijection
/// with the coordinates.
LawCheck yosida_laws(const SpectrumSpace& X, std::span<const Element> sample);

/// [g]_p = [h]_p for all p ∈ V(I) iff g ≡ h (mod I).
LawCheck spectral_patching_equivalence(const SpectrumSpace& X, std::span<const Element> sample);
/// (I1 ∨ J) ∧ (I2 ∨ J) = (I1 ∧ I2) ∨ J over all ideal triples.
LawCheck merge_distributivity(const IdealLattice& L);
/// Agreement modulo every maximal ideal above I ∨ J forces g - h ∈ I ∨ J
/// exactly when G is strongly semisimple (checked over the sample).
LawCheck upgrade_lemma(const SpectrumSpace& X, std::span<const Element> sample, Exec exec = Exec::parallel);

/// MV axioms and the order compatibility of Γ(G, u) on `triples` random triples.
LawCheck mv_axioms(const UnitalGroup& G, std::mt19937_64& rng, std::size_t triples);
LawCheck mv_correspondence(const SpectrumSpace& X);

struct SuiteResult {
  std::string instance;
  LawCheck law;
};

/// All suites over every gallery instance, in a fixed order.
std::vector<SuiteResult> run_selftest(Exec exec = Exec::parallel);

}  // namespace lgroup
