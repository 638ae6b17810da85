#pragma once

// Chinese-remainder patching: Keimel's theorem for arbitrary ideals, the
// strengthened form for strongly semisimple groups whose hypothesis is only
// checked at maximal ideals, and the zero-set form over Max(G).

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lgroup/parallel.hpp"
#include "lgroup/spectrum.hpp"

namespace lgroup {

struct Constraint {
  Ideal ideal;
  Element target;
};

/// Find g with g ≡ target (mod ideal) for every constraint. Repeated ideals are allowed.
struct CongruenceSystem {
  std::vector<Constraint> constraints;
};

enum class PatchStatus {
  solved,
  incompatible,               // Keimel: g_i - g_j ∉ I_i ∨ I_j
  max_hypothesis_violated,    // [g_i]_m ≠ [g_j]_m for a maximal m ⊇ I_i ∨ I_j
  incompatible_on_zero_sets,  // ĝ_i(m) ≠ ĝ_j(m) for m ∈ Z_i ∩ Z_j
  not_strongly_semisimple,
  length_mismatch,
};

std::string_view to_string(PatchStatus status) noexcept;

/// Outcome of Keimel's pairwise test; i and j are 1-based.
struct KeimelCheck {
  bool holds = true;
  std::size_t i = 0;
  std::size_t j = 0;
  std::optional<Element> difference;  // g_i - g_j
};

/// Why patching failed. Pair indices are 1-based, as in (g_1, ..., g_n).
struct Certificate {
  PatchStatus status = PatchStatus::solved;
  std::size_t i = 0;
  std::size_t j = 0;
  std::optional<Element> difference;
  std::optional<Ideal> prime;    // the offending maximal ideal
  std::optional<Ideal> witness;  // principal P with G/P not semisimple

  // Diagnostics attached to not_strongly_semisimple: whether the maximal-ideal
  // hypothesis held, and whether Keimel's stronger hypothesis holds anyway
  // (with the solution it yields).
  std::optional<bool> max_hypothesis_holds;
  std::optional<KeimelCheck> keimel;
  std::optional<Element> keimel_solution;

  std::string message;
};

struct PatchResult {
  std::optional<Element> solution;
  /// Zero-set mode only: the zero sets cover Max(G) and G embeds in ∏ G/m.
  bool unique = false;
  Certificate certificate;

  bool solved() const noexcept { return solution.has_value(); }
};

/// 0 solved, 1 hypothesis violated, 2 not strongly semisimple, 3 invalid input.
int exit_code(const PatchResult& result) noexcept;

/// Splits d ∈ I ∨ J as a + b with a ∈ I, b ∈ J. Whatever both ideals could
/// absorb goes to a. Throws Error(not_in_join) if d ∉ I ∨ J.
std::pair<Element, Element> riesz_split(const UnitalGroup& G, const Element& d, const Ideal& I, const Ideal& J);

KeimelCheck check_keimel_hypothesis(const UnitalGroup& G, const CongruenceSystem& system);

/// g satisfies every congruence of the system.
bool verify_congruences(const UnitalGroup& G, const CongruenceSystem& system, const Element& g);

/// Keimel's Chinese remainder theorem. Checks g_i ≡ g_j (mod I_i ∨ I_j) for
/// all i < j, then merges left to right: with K the meet of the processed
/// ideals, split g - g_k over (K, I_k) and subtract the K part. Distributivity
/// of Idl(G) keeps every processed congruence intact.
PatchResult keimel_patch(const UnitalGroup& G, const CongruenceSystem& system);

/// The strongly semisimple Chinese remainder theorem: the hypothesis is only
/// required at maximal ideals above I_i ∨ I_j. The returned g also satisfies
/// [g]_p = [g_i]_p at every prime p ⊇ I_i.
PatchResult strong_patch(const UnitalGroup& G, const CongruenceSystem& system, Exec exec = Exec::parallel);

/// Zero-set form over Max(G): Z_i = {m : h_i ∈ m}; finds g with ĝ = ĝ_i on
/// each Z_i. Requires strong semisimplicity.
PatchResult zero_set_patch(const UnitalGroup& G, std::span<const Element> generators,
                           std::span<const Element> targets, Exec exec = Exec::parallel);

}  // namespace lgroup
