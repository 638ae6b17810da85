#pragma once

// The MV-algebra Γ(G, u) = [0, u] with the Łukasiewicz operations
//   x ⊕ y = u ∧ (x + y),   ¬x = u - x,   x ⊙ y = 0 ∨ (x + y - u).

#include <optional>
#include <random>
#include <vector>

#include "lgroup/spectrum.hpp"

namespace lgroup {

class MVElement {
 public:
  /// Throws Error(out_of_interval) unless 0 <= carrier <= u.
  MVElement(const UnitalGroup& G, Element carrier);

  const Element& carrier() const noexcept { return carrier_; }

  friend bool operator==(const MVElement& a, const MVElement& b) { return a.carrier_ == b.carrier_; }

 private:
  Element carrier_;
};

enum class MvOp { oplus, neg, odot };

/// y is required for oplus and odot and ignored for neg.
MVElement gamma_op(const UnitalGroup& G, MvOp op, const MVElement& x, const std::optional<MVElement>& y = {});

MVElement mv_zero(const UnitalGroup& G);
MVElement mv_one(const UnitalGroup& G);
MVElement oplus(const UnitalGroup& G, const MVElement& x, const MVElement& y);
MVElement odot(const UnitalGroup& G, const MVElement& x, const MVElement& y);
MVElement neg(const UnitalGroup& G, const MVElement& x);
/// x ≤ y in the MV order: ¬x ⊕ y = 1.
bool mv_leq(const UnitalGroup& G, const MVElement& x, const MVElement& y);

/// (x ∨ 0) ∧ u for a random x with leaves in [-bound, bound].
MVElement random_mv_element(const UnitalGroup& G, std::mt19937_64& rng, int bound);

/// The elements of [0, u] whose leaves lie in [-bound, bound].
std::vector<MVElement> bounded_interval(const UnitalGroup& G, int bound);

/// Bijection between l-ideals I and MV-ideals I ∩ [0, u], checked on a finite
/// set of interval representatives.
struct MvCorrespondence {
  std::size_t l_ideals = 0;
  std::size_t mv_ideals = 0;       // distinct restrictions
  bool injective = false;          // distinct l-ideals restrict differently
  bool ideals_closed = false;      // each restriction contains 0, is downward closed, closed under ⊕
  bool order_preserved = false;    // I ⊆ J iff I∩[0,u] ⊆ J∩[0,u]
  bool primes_preserved = false;   // l-prime iff x⊙¬y or y⊙¬x lies in the restriction for all x, y
  bool maximals_preserved = false; // l-maximal iff maximal among proper restrictions
  std::size_t radical_index = 0;   // lattice index of the ideal matching the MV-radical
  bool radical_matches = false;    // the MV-radical corresponds to Rad(G)
  std::size_t sample_size = 0;

  bool holds() const noexcept {
    return injective && ideals_closed && order_preserved && primes_preserved && maximals_preserved &&
           radical_matches;
  }
};

MvCorrespondence mv_ideal_correspondence(const SpectrumSpace& X, int bound = 3);

}  // namespace lgroup
