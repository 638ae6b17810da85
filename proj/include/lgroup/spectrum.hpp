#pragma once

// Prime and maximal spectra with the hull-kernel topology: the vanishing locus
// V, the kernel I, the closure cl = V∘I, and an exhaustive law report.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "lgroup/ideals.hpp"
#include "lgroup/parallel.hpp"

namespace lgroup {

/// A subset of Spec(G); bit k stands for the k-th prime in canonical order.
using PrimeSet = boost::dynamic_bitset<>;

class SpectrumSpace {
 public:
  explicit SpectrumSpace(const UnitalGroup& G);

  const UnitalGroup& group() const noexcept { return lattice_.group(); }
  const IdealLattice& lattice() const noexcept { return lattice_; }

  std::size_t size() const noexcept { return primes_.size(); }
  const Ideal& prime(std::size_t p) const { return lattice_[primes_[p]]; }
  std::size_t lattice_index(std::size_t p) const { return primes_[p]; }
  bool is_maximal(std::size_t p) const { return maximal_.test(p); }
  const PrimeSet& maximal() const noexcept { return maximal_; }

  PrimeSet empty_set() const { return PrimeSet(size()); }
  PrimeSet full_set() const { return ~PrimeSet(size()); }

  /// p ⊆ q, i.e. q lies in the closure of {p}.
  bool specializes(std::size_t p, std::size_t q) const { return lattice_.leq(primes_[p], primes_[q]); }

  std::optional<std::size_t> find(const Ideal& I) const;
  /// Throws Error(unknown_prime) if I is not a prime of G.
  std::size_t prime_index(const Ideal& I) const;
  PrimeSet to_set(std::span<const Ideal> primes) const;

  /// V over the ideal with the given lattice index.
  const PrimeSet& vanishing_locus_of(std::size_t ideal_index) const { return vanishing_[ideal_index]; }
  /// Lattice index of I(S) = ⋂S; the top ideal for S = ∅.
  std::size_t ideal_of_locus_index(const PrimeSet& S) const;

 private:
  IdealLattice lattice_;
  std::vector<std::size_t> primes_;
  PrimeSet maximal_;
  std::vector<PrimeSet> vanishing_;
};

SpectrumSpace compute_spectrum(const UnitalGroup& G);

/// V(R) for an ideal R, or for a finite set of elements R.
PrimeSet vanishing_locus(const SpectrumSpace& X, const Ideal& R);
PrimeSet vanishing_locus(const SpectrumSpace& X, std::span<const Element> R);

/// I(S) = ⋂S; I(∅) is the full ideal. Throws Error(unknown_prime) when S is
/// not a subset of this spectrum.
Ideal ideal_of_locus(const SpectrumSpace& X, const PrimeSet& S);
Ideal ideal_of_locus(const SpectrumSpace& X, std::span<const Ideal> S);

/// cl(S) = V(I(S)).
PrimeSet closure(const SpectrumSpace& X, const PrimeSet& S);
std::vector<Ideal> closure(const SpectrumSpace& X, std::span<const Ideal> S);

std::vector<Ideal> members(const SpectrumSpace& X, const PrimeSet& S);

struct LawCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool holds() const noexcept { return failures == 0; }
};

struct SpectralReport {
  std::vector<LawCheck> laws;
  bool max_dense = false;

  bool all_hold() const;
};

/// Exhaustive check of the spectral-space laws on a finite spectrum: Galois
/// adjunction, closure-operator axioms, fixed points of I∘V and V∘I, closed
/// sets as specialization up-sets, T0 and sobriety, compact-open basis from
/// principal ideals, discreteness of Max, and density of Max.
///
/// The subset-indexed laws enumerate 2^|Spec| subsets; throws
/// std::length_error above 20 primes.
SpectralReport spectral_axioms_report(const SpectrumSpace& X, Exec exec = Exec::parallel);

/// Hasse diagram of the specialization order; maximal primes are double circles.
std::string to_dot(const SpectrumSpace& X);

}  // namespace lgroup
