#include "lgroup/crt.hpp"

#include "lgroup/semisimple.hpp"
#include "lgroup/yosida.hpp"

namespace lgroup {

std::string_view to_string(PatchStatus status) noexcept {
  switch (status) {
    case PatchStatus::solved: return "Solved";
    case PatchStatus::incompatible: return "Incompatible";
    case PatchStatus::max_hypothesis_violated: return "MaxHypothesisViolated";
    case PatchStatus::incompatible_on_zero_sets: return "IncompatibleOnZeroSets";
    case PatchStatus::not_strongly_semisimple: return "NotStronglySemisimple";
    case PatchStatus::length_mismatch: return "LengthMismatch";
  }
  return "Unknown";
}

int exit_code(const PatchResult& result) noexcept {
  switch (result.certificate.status) {
    case PatchStatus::solved: return 0;
    case PatchStatus::incompatible:
    case PatchStatus::max_hypothesis_violated:
    case PatchStatus::incompatible_on_zero_sets: return 1;
    case PatchStatus::not_strongly_semisimple: return 2;
    case PatchStatus::length_mismatch: return 3;
  }
  return 3;
}

namespace {

// The full ideal of the structure that `like` belongs to.
Ideal full_like(const Ideal& like) {
  if (like.kind() != Ideal::Kind::prod) return Ideal::all();
  std::vector<Ideal> parts;
  for (const auto& c : like.children()) parts.push_back(full_like(c));
  return Ideal::prod(std::move(parts));
}

std::pair<Element, Element> split(const Element& d, const Ideal& I, const Ideal& J) {
  using K = Ideal::Kind;
  if (I.kind() == K::prod) {
    std::vector<Element> a;
    std::vector<Element> b;
    for (std::size_t k = 0; k < I.children().size(); ++k) {
      auto [x, y] = split(d.parts()[k], I.children()[k], J.children()[k]);
      a.push_back(std::move(x));
      b.push_back(std::move(y));
    }
    return {Element::tuple(std::move(a)), Element::tuple(std::move(b))};
  }
  const Element zero = zero_like(d);
  if (I.kind() == K::all) return {d, zero};
  if (I.kind() == K::zero) return {zero, d};
  // I = bottom(I'): a keeps the part of the bottom that I' absorbs.
  const Ideal& other = J.kind() == K::all ? full_like(I.inner()) : J.inner();
  Element a = Element::lex(0, split(d.bottom(), I.inner(), other).first);
  Element b = d - a;
  return {std::move(a), std::move(b)};
}

PatchResult failure(Certificate certificate) {
  PatchResult result;
  result.certificate = std::move(certificate);
  return result;
}

void check_system(const UnitalGroup& G, const CongruenceSystem& system) {
  for (const auto& c : system.constraints) {
    check_ideal(G, c.ideal);
    G.check(c.target);
  }
}

std::string pair_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

std::pair<Element, Element> riesz_split(const UnitalGroup& G, const Element& d, const Ideal& I, const Ideal& J) {
  check_ideal(G, I);
  check_ideal(G, J);
  G.check(d);
  if (!contains(join(I, J), d)) {
    throw Error(ErrorCode::not_in_join, d.to_string() + " is not in " + I.to_string() + " v " + J.to_string());
  }
  auto parts = split(d, I, J);
  if (!contains(I, parts.first) || !contains(J, parts.second) || parts.first + parts.second != d) {
    throw Error(ErrorCode::internal_invariant_violation, "riesz_split produced an invalid decomposition");
  }
  return parts;
}

KeimelCheck check_keimel_hypothesis(const UnitalGroup& G, const CongruenceSystem& system) {
  check_system(G, system);
  const auto& cs = system.constraints;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      Element diff = cs[i].target - cs[j].target;
      if (!contains(join(cs[i].ideal, cs[j].ideal), diff)) return {false, i + 1, j + 1, std::move(diff)};
    }
  }
  return {};
}

bool verify_congruences(const UnitalGroup& G, const CongruenceSystem& system, const Element& g) {
  G.check(g);
  for (const auto& c : system.constraints) {
    if (!congruent(G, g, c.target, c.ideal)) return false;
  }
  return true;
}

PatchResult keimel_patch(const UnitalGroup& G, const CongruenceSystem& system) {
  const KeimelCheck check = check_keimel_hypothesis(G, system);
  if (!check.holds) {
    Certificate c;
    c.status = PatchStatus::incompatible;
    c.i = check.i;
    c.j = check.j;
    c.difference = check.difference;
    c.message = "targets " + pair_name(check.i, check.j) + " differ by " + check.difference->to_string() +
                ", which is not in the join of their ideals";
    return failure(std::move(c));
  }
  const auto& cs = system.constraints;
  PatchResult result;
  if (cs.empty()) {
    result.solution = G.zero();
    return result;
  }
  Element g = cs.front().target;
  Ideal processed = cs.front().ideal;
  for (std::size_t k = 1; k < cs.size(); ++k) {
    const Element d = g - cs[k].target;
    auto [a, b] = riesz_split(G, d, processed, cs[k].ideal);
    g -= a;
    processed = meet(processed, cs[k].ideal);
  }
  if (!verify_congruences(G, system, g)) {
    throw Error(ErrorCode::internal_invariant_violation, "Keimel merge lost a congruence");
  }
  result.solution = std::move(g);
  return result;
}

PatchResult strong_patch(const UnitalGroup& G, const CongruenceSystem& system, Exec exec) {
  check_system(G, system);
  const SpectrumSpace X(G);
  const auto& cs = system.constraints;
  for (const auto& c : cs) {
    if (!X.lattice().is_principal(X.lattice().index_of(c.ideal))) {
      throw Error(ErrorCode::internal_invariant_violation, c.ideal.to_string() + " is not principal");
    }
  }

  // Phase 1: agreement at every maximal ideal above I_i ∨ I_j.
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i; j < cs.size(); ++j) {
      const Ideal above = join(cs[i].ideal, cs[j].ideal);
      const Element diff = cs[i].target - cs[j].target;
      for (std::size_t p = 0; p < X.size(); ++p) {
        if (!X.is_maximal(p) || !subset(above, X.prime(p))) continue;
        if (!contains(X.prime(p), diff)) {
          Certificate c;
          c.status = PatchStatus::max_hypothesis_violated;
          c.i = i + 1;
          c.j = j + 1;
          c.difference = diff;
          c.prime = X.prime(p);
          c.message = "targets " + pair_name(i + 1, j + 1) + " disagree modulo the maximal ideal " +
                      X.prime(p).to_string();
          return failure(std::move(c));
        }
      }
    }
  }

  // Phase 2: the theorem needs strong semisimplicity.
  const StrongSemisimplicity ss = is_strongly_semisimple(X, exec);
  if (!ss.holds) {
    Certificate c;
    c.status = PatchStatus::not_strongly_semisimple;
    c.witness = ss.witness;
    c.max_hypothesis_holds = true;
    c.keimel = check_keimel_hypothesis(G, system);
    if (c.keimel->holds) c.keimel_solution = keimel_patch(G, system).solution;
    c.message = "G/" + ss.witness->to_string() + " is not semisimple";
    if (!c.keimel->holds) {
      c.message += "; Keimel's hypothesis fails for " + pair_name(c.keimel->i, c.keimel->j) +
                   ", so no solution exists";
    } else {
      c.message += "; Keimel's hypothesis holds anyway";
    }
    return failure(std::move(c));
  }

  // Phase 3: under strong semisimplicity, agreement at the maximal ideals of
  // V(I_i ∨ I_j) upgrades to g_i - g_j ∈ I_i ∨ I_j.
  const KeimelCheck upgraded = check_keimel_hypothesis(G, system);
  if (!upgraded.holds) {
    throw Error(ErrorCode::internal_invariant_violation,
                "maximal-ideal agreement did not upgrade on a strongly semisimple group");
  }
  PatchResult result = keimel_patch(G, system);
  const Element& g = *result.solution;
  for (const auto& c : cs) {
    for (std::size_t p = 0; p < X.size(); ++p) {
      if (subset(c.ideal, X.prime(p)) && !contains(X.prime(p), g - c.target)) {
        throw Error(ErrorCode::internal_invariant_violation, "solution disagrees at a prime above its ideal");
      }
    }
  }
  return result;
}

PatchResult zero_set_patch(const UnitalGroup& G, std::span<const Element> generators,
                           std::span<const Element> targets, Exec exec) {
  if (generators.size() != targets.size()) {
    Certificate c;
    c.status = PatchStatus::length_mismatch;
    c.message = std::to_string(generators.size()) + " generators but " + std::to_string(targets.size()) +
                " targets";
    return failure(std::move(c));
  }
  for (const auto& h : generators) G.check(h);
  for (const auto& g : targets) G.check(g);

  const SpectrumSpace X(G);
  const std::size_t n = generators.size();
  CongruenceSystem system;
  std::vector<PrimeSet> zero_sets;
  for (std::size_t k = 0; k < n; ++k) {
    system.constraints.push_back({principal_ideal(G, generators[k]), targets[k]});
    zero_sets.push_back(principal_zero_set(X, generators[k]));
  }

  // Compatibility: ĝ_i = ĝ_j on Z_i ∩ Z_j.
  std::optional<Certificate> clash;
  for (std::size_t i = 0; i < n && !clash; ++i) {
    for (std::size_t j = i + 1; j < n && !clash; ++j) {
      const PrimeSet common = zero_sets[i] & zero_sets[j];
      for (auto p = common.find_first(); p != PrimeSet::npos; p = common.find_next(p)) {
        const Rational vi = holder_eval(G, targets[i], X.prime(p));
        const Rational vj = holder_eval(G, targets[j], X.prime(p));
        if (vi != vj) {
          Certificate c;
          c.status = PatchStatus::incompatible_on_zero_sets;
          c.i = i + 1;
          c.j = j + 1;
          c.prime = X.prime(p);
          c.difference = targets[i] - targets[j];
          c.message = "values " + vi.to_string() + " and " + vj.to_string() + " differ at " +
                      X.prime(p).to_string();
          clash = std::move(c);
          break;
        }
      }
    }
  }

  const StrongSemisimplicity ss = is_strongly_semisimple(X, exec);
  if (!ss.holds) {
    Certificate c;
    c.status = PatchStatus::not_strongly_semisimple;
    c.witness = ss.witness;
    c.max_hypothesis_holds = !clash.has_value();
    c.keimel = check_keimel_hypothesis(G, system);
    if (c.keimel->holds) c.keimel_solution = keimel_patch(G, system).solution;
    c.message = "G/" + ss.witness->to_string() + " is not semisimple; the zero-set theorem does not apply";
    return failure(std::move(c));
  }
  if (clash) return failure(std::move(*clash));

  PatchResult result = strong_patch(G, system, exec);
  if (!result.solved()) return result;
  const Element& g = *result.solution;
  for (std::size_t k = 0; k < n; ++k) {
    for (auto p = zero_sets[k].find_first(); p != PrimeSet::npos; p = zero_sets[k].find_next(p)) {
      if (holder_eval(G, g, X.prime(p)) != holder_eval(G, targets[k], X.prime(p))) {
        throw Error(ErrorCode::internal_invariant_violation, "zero-set solution disagrees with a target");
      }
    }
  }

  PrimeSet covered = X.empty_set();
  for (const auto& Z : zero_sets) covered |= Z;
  // Two solutions agree at every maximal ideal; a trivial radical makes
  // G → ∏ G/m injective, so they are equal.
  result.unique = covered == X.maximal() && radical(X) == zero_ideal(G.structure());
  return result;
}

}  // namespace lgroup
