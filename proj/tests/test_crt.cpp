#include <gtest/gtest.h>

#include "lgroup/crt.hpp"
#include "lgroup/laws.hpp"
#include "lgroup/semisimple.hpp"
#include "support.hpp"

using namespace lgroup;
using lgroup::testing::vec;

namespace {

Element lx(long long top, long long bottom) { return Element::lex(top, Element::atom(bottom)); }

Ideal random_ideal(const IdealLattice& L, std::mt19937_64& rng) {
  return L[std::uniform_int_distribution<std::size_t>(0, L.size() - 1)(rng)];
}

}  // namespace

TEST(Riesz, SplitsAcrossIdeals) {
  const UnitalGroup G(lgroup::testing::zn(2), vec({1, 1}));
  const Ideal I = Ideal::prod({Ideal::all(), Ideal::zero()});
  const Ideal J = Ideal::prod({Ideal::zero(), Ideal::all()});
  const auto [a, b] = riesz_split(G, vec({3, -4}), I, J);
  EXPECT_EQ(a, vec({3, 0}));
  EXPECT_EQ(b, vec({0, -4}));
  try {
    (void)riesz_split(G, vec({3, -4}), I, I);
    FAIL() << "element outside the join accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_in_join);
  }
}

TEST(Riesz, LexBottomAgainstAll) {
  const UnitalGroup G(Structure::lex(Structure::atom()), lx(1, 0));
  const auto [a, b] = riesz_split(G, lx(0, 5), Ideal::bottom(Ideal::all()), Ideal::all());
  EXPECT_EQ(a, lx(0, 5));
  EXPECT_EQ(b, lx(0, 0));
}

TEST(Keimel, SolvesPairwiseCompatibleSystems) {
  const UnitalGroup G(lgroup::testing::zn(2), vec({1, 1}));
  CongruenceSystem sys{{{Ideal::prod({Ideal::all(), Ideal::zero()}), vec({5, 7})},
                        {Ideal::prod({Ideal::zero(), Ideal::all()}), vec({3, 4})}}};
  const PatchResult r = keimel_patch(G, sys);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(*r.solution, vec({3, 7}));
  EXPECT_EQ(keimel_patch(G, {}).solution, G.zero());
}

TEST(Keimel, ReportsTheFirstIncompatiblePair) {
  const UnitalGroup G(lgroup::testing::zn(2), vec({1, 1}));
  const Ideal zero = zero_ideal(G.structure());
  const CongruenceSystem sys{{{full_ideal(G.structure()), vec({0, 0})}, {zero, vec({5, 7})}, {zero, vec({3, 4})}}};
  const PatchResult r = keimel_patch(G, sys);
  ASSERT_FALSE(r.solved());
  EXPECT_EQ(r.certificate.status, PatchStatus::incompatible);
  EXPECT_EQ(r.certificate.i, 2u);
  EXPECT_EQ(r.certificate.j, 3u);
  EXPECT_EQ(*r.certificate.difference, vec({2, 3}));
  EXPECT_EQ(exit_code(r), 1);
}

TEST(Keimel, AgreesWithBruteForceOnZn) {
  std::mt19937_64 rng(555);
  std::uniform_int_distribution<int> target(-5, 5);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const Structure s = lgroup::testing::zn(n);
    const UnitalGroup G(s, from_leaves(s, std::vector<Integer>(n, 1)));
    const IdealLattice L(G);
    CongruenceSystem sys;
    const auto m = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    for (std::size_t k = 0; k < m; ++k) {
      std::vector<Integer> leaf(n);
      for (auto& v : leaf) v = target(rng);
      sys.constraints.push_back({random_ideal(L, rng), from_leaves(s, leaf)});
    }
    const PatchResult r = keimel_patch(G, sys);
    const auto oracle = lgroup::testing::brute_force_crt(G, sys, 5);
    ASSERT_EQ(r.solved(), oracle.has_value()) << "trial " << trial;
    if (r.solved()) {
      ++solved;
      ASSERT_TRUE(verify_congruences(G, sys, *r.solution));
    }
  }
  EXPECT_GT(solved, 50);
}

TEST(Keimel, RandomCompatibleSystemsOnRandomGroups) {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    const UnitalGroup G = lgroup::testing::random_group(rng);
    const IdealLattice L(G);
    // Targets built from one hidden solution are always compatible.
    const Element hidden = lgroup::testing::random_element(G.structure(), rng, 5);
    CongruenceSystem sys;
    for (int k = 0; k < 3; ++k) {
      const Ideal I = random_ideal(L, rng);
      const Element noise = lgroup::testing::random_element(G.structure(), rng, 5);
      // Keep only the part of the noise that lies in I.
      const Element inside = riesz_split(G, noise, I, full_ideal(G.structure())).first;
      sys.constraints.push_back({I, hidden + inside});
    }
    const PatchResult r = keimel_patch(G, sys);
    ASSERT_TRUE(r.solved()) << G.to_string();
    ASSERT_TRUE(verify_congruences(G, sys, *r.solution));
  }
}

TEST(Strong, LexTwoCongruencesAreCertifiedUnsolvable) {
  const Structure s = Structure::lex(Structure::atom());
  const UnitalGroup G(s, lx(1, 0));
  const Ideal zero = zero_ideal(s);
  const CongruenceSystem sys{{{zero, lx(0, 0)}, {zero, lx(0, 1)}}};
  const PatchResult r = strong_patch(G, sys);
  ASSERT_FALSE(r.solved());
  EXPECT_EQ(r.certificate.status, PatchStatus::not_strongly_semisimple);
  EXPECT_EQ(exit_code(r), 2);
  EXPECT_TRUE(r.certificate.max_hypothesis_holds);
  ASSERT_TRUE(r.certificate.witness.has_value());
  EXPECT_EQ(*r.certificate.witness, zero);
  ASSERT_TRUE(r.certificate.keimel.has_value());
  EXPECT_FALSE(r.certificate.keimel->holds);
  EXPECT_FALSE(lgroup::testing::brute_force_crt(G, sys, 10).has_value());
}

TEST(Strong, MaxHypothesisViolation) {
  const UnitalGroup G(lgroup::testing::zn(2), vec({1, 1}));
  const Ideal m0 = Ideal::prod({Ideal::zero(), Ideal::all()});
  const CongruenceSystem sys{{{m0, vec({1, 0})}, {m0, vec({2, 0})}}};
  const PatchResult r = strong_patch(G, sys);
  EXPECT_EQ(r.certificate.status, PatchStatus::max_hypothesis_violated);
  EXPECT_EQ(r.certificate.i, 1u);
  EXPECT_EQ(r.certificate.j, 2u);
  ASSERT_TRUE(r.certificate.prime.has_value());
  EXPECT_EQ(*r.certificate.prime, m0);
}

TEST(Strong, SolvesOnZn) {
  const UnitalGroup G(lgroup::testing::zn(3), vec({1, 1, 1}));
  const CongruenceSystem sys{{{Ideal::prod({Ideal::zero(), Ideal::all(), Ideal::all()}), vec({4, 0, 0})},
                              {Ideal::prod({Ideal::all(), Ideal::zero(), Ideal::zero()}), vec({0, -2, 3})}}};
  const PatchResult r = strong_patch(G, sys);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(*r.solution, vec({4, -2, 3}));
}

TEST(ZeroSet, C3ExampleIsUnique) {
  const UnitalGroup G(lgroup::testing::zn(3), vec({1, 2, 1}));
  const std::vector<Element> h{vec({0, 0, 1}), vec({1, 0, 0})};
  const std::vector<Element> g{vec({2, 4, 6}), vec({0, 4, 1})};
  const PatchResult r = zero_set_patch(G, h, g);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(*r.solution, vec({2, 4, 1}));
  EXPECT_TRUE(r.unique);

  const SpectrumSpace X(G);
  int matches = 0;
  for (const auto& c : lgroup::testing::box(G.structure(), 10)) {
    bool ok = true;
    for (std::size_t k = 0; k < 2 && ok; ++k) {
      const PrimeSet Z = principal_zero_set(X, h[k]);
      for (auto p = Z.find_first(); p != PrimeSet::npos && ok; p = Z.find_next(p)) {
        ok = holder_eval(G, c, X.prime(p)) == holder_eval(G, g[k], X.prime(p));
      }
    }
    matches += ok;
  }
  EXPECT_EQ(matches, 1);
}

TEST(ZeroSet, Failures) {
  const UnitalGroup G(lgroup::testing::zn(2), vec({1, 1}));
  const std::vector<Element> h{vec({0, 1}), vec({0, 1})};
  const std::vector<Element> g{vec({1, 0}), vec({2, 0})};
  const PatchResult clash = zero_set_patch(G, h, g);
  EXPECT_EQ(clash.certificate.status, PatchStatus::incompatible_on_zero_sets);
  EXPECT_EQ(exit_code(clash), 1);

  const std::vector<Element> one{vec({0, 1})};
  const PatchResult mismatch = zero_set_patch(G, h, one);
  EXPECT_EQ(mismatch.certificate.status, PatchStatus::length_mismatch);
  EXPECT_EQ(exit_code(mismatch), 3);

  const UnitalGroup L(Structure::lex(Structure::atom()), lx(1, 0));
  const std::vector<Element> lh{lx(0, 1)};
  const std::vector<Element> lg{lx(0, 0)};
  EXPECT_EQ(zero_set_patch(L, lh, lg).certificate.status, PatchStatus::not_strongly_semisimple);
}

TEST(ZeroSet, NotUniqueWhenZeroSetsMissAPoint) {
  const UnitalGroup G(lgroup::testing::zn(2), vec({1, 1}));
  const std::vector<Element> h{vec({0, 1})};
  const std::vector<Element> g{vec({3, 9})};
  const PatchResult r = zero_set_patch(G, h, g);
  ASSERT_TRUE(r.solved());
  EXPECT_FALSE(r.unique);
}

TEST(PatchingLaws, RandomStructures) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    const UnitalGroup G = lgroup::testing::random_group(rng, 3, 3);
    const SpectrumSpace X(G);
    auto sample = sample_elements(G, rng, 6);
    if (sample.size() > 20) sample.erase(sample.begin(), sample.end() - 20);
    ASSERT_TRUE(spectral_patching_equivalence(X, sample).holds()) << G.to_string();
    ASSERT_TRUE(merge_distributivity(X.lattice()).holds()) << G.to_string();
    const LawCheck up = upgrade_lemma(X, sample);
    ASSERT_TRUE(up.holds()) << G.to_string() << ": " << up.first_failure;
  }
}
