// Acceptance driver: one PASS/FAIL line per criterion, exit 0 iff all pass.
//
//   acceptance CLI_PATH DATA_DIR

#include <sys/wait.h>

#include <cstdlib>
#include <iostream>
#include <string>

#include "lgroup/gallery.hpp"
#include "lgroup/laws.hpp"
#include "lgroup/mv.hpp"
#include "lgroup/semisimple.hpp"
#include "support.hpp"

namespace {

using namespace lgroup;
using lgroup::testing::vec;

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail = {}) {
  std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << '\n';
  if (!ok) ++failures;
}

// Gallery groups followed by `random` random groups of depth <= 3, width <= 4.
std::vector<UnitalGroup> corpus(std::size_t random) {
  std::vector<UnitalGroup> out;
  for (auto name : gallery_names()) out.push_back(gallery(name).group);
  std::mt19937_64 rng(20261016);
  for (std::size_t k = 0; k < random; ++k) out.push_back(lgroup::testing::random_group(rng, 3, 4));
  return out;
}

void galois_suite() {
  bool ok = true;
  std::size_t laws = 0;
  for (auto name : {"a2", "c3", "lex", "mix"}) {
    const SpectralReport r = spectral_axioms_report(SpectrumSpace(gallery(name).group));
    ok = ok && r.all_hold();
    laws += r.laws.size();
  }
  report(1, ok, "spectral and Galois laws on a2, c3, lex, mix", std::to_string(laws) + " law checks");
}

void semisimplicity(const std::vector<UnitalGroup>& groups) {
  bool ok = true;
  std::size_t non_ss = 0;
  for (const auto& G : groups) {
    const SpectrumSpace X(G);
    const bool ss = radical(X) == zero_ideal(G.structure());
    ok = ok && ss == (closure(X, X.maximal()) == X.full_set());
    if (!ss) {
      ++non_ss;
      ok = ok && archimedean_falsify(G, 3).has_value();
    }
  }
  report(2, ok, "Rad = 0 iff cl(Max) = Spec; falsifier finds every infinitesimal",
         std::to_string(groups.size()) + " groups, " + std::to_string(non_ss) + " not semisimple");
}

void strong_semisimplicity(const std::vector<UnitalGroup>& groups) {
  bool ok = true;
  for (const auto& G : groups) {
    const SpectrumSpace X(G);
    const IdealLattice& L = X.lattice();
    bool dense_everywhere = true;
    for (std::size_t k = 0; k < L.size(); ++k) {
      if (!L.is_principal(k)) continue;
      const PrimeSet& V = X.vanishing_locus_of(k);
      dense_everywhere = dense_everywhere && V == closure(X, V & X.maximal());
    }
    ok = ok && is_strongly_semisimple(X).holds == dense_everywhere;
  }
  report(3, ok, "strongly semisimple iff V(P) = cl(V(P) n Max) for principal P",
         std::to_string(groups.size()) + " groups");
}

void quotient_spectra() {
  bool ok = true;
  std::size_t ideals = 0;
  for (auto name : gallery_names()) {
    const SpectrumSpace X(gallery(name).group);
    ok = ok && spectrum_quotient_correspondence(X).holds();
    ideals += X.lattice().size();
  }
  report(4, ok, "Spec(G/I) is isomorphic to V(I) for every gallery ideal", std::to_string(ideals) + " ideals");
}

void keimel() {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> small(-2, 2);
  std::uniform_int_distribution<int> noise(-3, 3);
  std::uniform_int_distribution<int> target(-5, 5);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  std::uniform_int_distribution<std::size_t> length(1, 4);

  auto group = [](std::size_t n) {
    const Structure s = lgroup::testing::zn(n);
    return UnitalGroup(s, from_leaves(s, std::vector<Integer>(n, 1)));
  };
  auto pick = [&](const IdealLattice& L) { return L[std::uniform_int_distribution<std::size_t>(0, L.size() - 1)(rng)]; };

  std::size_t verified = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const UnitalGroup G = group(dim(rng));
    const Structure& s = G.structure();
    const IdealLattice L(G);
    std::vector<Integer> leaf(s.leaf_count());
    for (auto& v : leaf) v = small(rng);
    const Element hidden = from_leaves(s, leaf);
    CongruenceSystem sys;
    for (std::size_t k = length(rng); k > 0; --k) {
      const Ideal I = pick(L);
      for (auto& v : leaf) v = noise(rng);
      const Element inside = riesz_split(G, from_leaves(s, leaf), I, full_ideal(s)).first;
      sys.constraints.push_back({I, hidden + inside});
    }
    const PatchResult r = keimel_patch(G, sys);
    if (r.solved() && verify_congruences(G, sys, *r.solution)) ++verified;
  }

  std::size_t matched = 0;
  const std::size_t oracle_trials = 100;
  for (std::size_t trial = 0; trial < oracle_trials; ++trial) {
    const UnitalGroup G = group(dim(rng));
    const Structure& s = G.structure();
    const IdealLattice L(G);
    CongruenceSystem sys;
    std::vector<Integer> leaf(s.leaf_count());
    for (std::size_t k = length(rng); k > 0; --k) {
      for (auto& v : leaf) v = target(rng);
      sys.constraints.push_back({pick(L), from_leaves(s, leaf)});
    }
    const PatchResult r = keimel_patch(G, sys);
    const bool oracle = lgroup::testing::brute_force_crt(G, sys, 5).has_value();
    if (r.solved() == oracle && (!r.solved() || verify_congruences(G, sys, *r.solution))) ++matched;
  }
  report(5, verified >= 200 && matched == oracle_trials, "Keimel patching on Z^n, n <= 3",
         std::to_string(verified) + "/250 compatible systems verified, " + std::to_string(matched) + "/" +
             std::to_string(oracle_trials) + " agree with brute force");
}

void lex_example() {
  const Instance inst = gallery("lex");
  const UnitalGroup& G = inst.group;
  const Ideal zero = zero_ideal(G.structure());
  const CongruenceSystem sys{{{zero, Element::lex(0, Element::atom(0))}, {zero, Element::lex(0, Element::atom(1))}}};
  const SpectrumSpace X(G);

  // Both targets agree modulo the unique maximal ideal bottom(all).
  bool max_check = true;
  for (std::size_t p = 0; p < X.size(); ++p) {
    if (X.is_maximal(p)) max_check = max_check && congruent(G, sys.constraints[0].target, sys.constraints[1].target, X.prime(p));
  }
  const StrongSemisimplicity ss = is_strongly_semisimple(G);
  const PatchResult r = strong_patch(G, sys);
  const bool no_solution = !lgroup::testing::brute_force_crt(G, sys, 10).has_value();
  const bool ok = max_check && !ss.holds && ss.witness == zero &&
                  r.certificate.status == PatchStatus::not_strongly_semisimple && no_solution;
  report(6, ok, "Z x-> Z with (0,0), (0,1) modulo zero is certified unsolvable",
         std::string(to_string(r.certificate.status)) + ", witness " + (ss.witness ? ss.witness->to_string() : "none"));
}

void c3_example() {
  const Instance inst = gallery("c3");
  const UnitalGroup& G = inst.group;
  const PatchResult r = run_task(inst);
  const SpectrumSpace X(G);
  const auto& h = inst.task->generators;
  std::size_t matches = 0;
  for (const auto& c : lgroup::testing::box(G.structure(), 10)) {
    bool ok = true;
    for (std::size_t k = 0; k < h.size() && ok; ++k) {
      const PrimeSet Z = principal_zero_set(X, h[k]);
      for (auto p = Z.find_first(); p != PrimeSet::npos && ok; p = Z.find_next(p)) {
        ok = holder_eval(G, c, X.prime(p)) == holder_eval(G, inst.elements[k], X.prime(p));
      }
    }
    matches += ok;
  }
  const bool ok = r.solved() && *r.solution == vec({2, 4, 1}) && r.unique && matches == 1;
  report(7, ok, "zero-set patching on c3 gives the unique (2,4,1)",
         (r.solution ? r.solution->to_string() : "no solution") + ", " + std::to_string(matches) +
             " solution(s) in [-10,10]^3");
}

void mv() {
  bool ok = true;
  std::mt19937_64 rng(4242);
  for (auto name : gallery_names()) {
    const UnitalGroup G = gallery(name).group;
    ok = ok && mv_axioms(G, rng, 1000).holds();
  }
  const SpectrumSpace X(gallery("chang").group);
  const MvCorrespondence c = mv_ideal_correspondence(X);
  const bool radical_ok = c.holds() && X.lattice()[c.radical_index] == Ideal::bottom(Ideal::all());
  report(8, ok && radical_ok, "MV axioms on 1000 triples per instance; Chang's radical is bottom(all)");
}

int run(const std::string& command) {
  const int status = std::system((command + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void cli(const std::string& exe, const std::string& data) {
  const int selftest = run(exe + " selftest");
  const int solved = run(exe + " crt " + data + "/crt_solved.json");
  const int incompatible = run(exe + " crt " + data + "/crt_incompatible.json");
  const int not_strong = run(exe + " crt " + data + "/crt_not_strongly_semisimple.json");
  const int mismatch = run(exe + " crt " + data + "/crt_length_mismatch.json");
  const bool ok = selftest == 0 && solved == 0 && incompatible == 1 && not_strong == 2 && mismatch == 3;
  report(9, ok, "CLI selftest and crt exit codes",
         "selftest " + std::to_string(selftest) + ", crt " + std::to_string(solved) + "/" +
             std::to_string(incompatible) + "/" + std::to_string(not_strong) + "/" + std::to_string(mismatch));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance CLI_PATH DATA_DIR\n";
    return 2;
  }
  try {
    const auto groups = corpus(120);
    galois_suite();
    semisimplicity(groups);
    strong_semisimplicity(groups);
    quotient_spectra();
    keimel();
    lex_example();
    c3_example();
    mv();
    cli(argv[1], argv[2]);
  } catch (const std::exception& e) {
    std::cout << "FAIL unexpected exception: " << e.what() << '\n';
    return 1;
  }
  std::cout << (failures == 0 ? "all criteria pass\n" : std::to_string(failures) + " criteria failed\n");
  return failures == 0 ? 0 : 1;
}
