#include <gtest/gtest.h>

#include "lgroup/io.hpp"
#include "lgroup/spectrum.hpp"
#include "support.hpp"

using namespace lgroup;
using lgroup::testing::vec;

namespace {

Element lx(long long top, long long bottom) { return Element::lex(top, Element::atom(bottom)); }

}  // namespace

TEST(Spectrum, ZnHasOnlyMaximalPrimes) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Element> ones(n, Element::atom(1));
    const UnitalGroup G(lgroup::testing::zn(n), n == 1 ? Element::atom(1) : Element::tuple(ones));
    const SpectrumSpace X(G);
    EXPECT_EQ(X.size(), n);
    EXPECT_EQ(X.maximal().count(), n);
  }
}

TEST(Spectrum, LexIsAChainOfTwoPrimes) {
  const SpectrumSpace X(UnitalGroup(Structure::lex(Structure::atom()), lx(1, 0)));
  ASSERT_EQ(X.size(), 2u);
  EXPECT_EQ(X.prime(0), zero_ideal(Structure::lex(Structure::atom())));
  EXPECT_EQ(X.prime(1), Ideal::bottom(Ideal::all()));
  EXPECT_FALSE(X.is_maximal(0));
  EXPECT_TRUE(X.is_maximal(1));
  EXPECT_TRUE(X.specializes(0, 1));
  // cl(Max) = {bottom(all)} misses the zero prime.
  PrimeSet expected(2);
  expected.set(1);
  EXPECT_EQ(closure(X, X.maximal()), expected);
}

TEST(Spectrum, PrimesMatchTheDefinition) {
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 40) {
    const UnitalGroup G = lgroup::testing::random_group(rng, 3, 3);
    if (G.structure().leaf_count() > 4) continue;
    ++checked;
    const SpectrumSpace X(G);
    const auto sample = lgroup::testing::box(G.structure(), 1);
    for (std::size_t r = 0; r < X.lattice().size(); ++r) {
      const Ideal& I = X.lattice()[r];
      ASSERT_EQ(X.find(I).has_value(), lgroup::testing::is_prime_by_definition(I, sample))
          << G.to_string() << " " << I.to_string();
    }
    // Maximal primes are the maximal proper ideals.
    for (std::size_t p = 0; p < X.size(); ++p) {
      bool maximal = true;
      for (std::size_t r = 0; r < X.lattice().size(); ++r) {
        if (r != X.lattice().top() && r != X.lattice_index(p) && X.lattice().leq(X.lattice_index(p), r)) {
          maximal = false;
        }
      }
      ASSERT_EQ(X.is_maximal(p), maximal);
    }
  }
}

TEST(Spectrum, VanishingLocusOfElementsMatchesIdeal) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const UnitalGroup G = lgroup::testing::random_group(rng);
    const SpectrumSpace X(G);
    std::vector<Element> R;
    for (int k = 0; k < 2; ++k) R.push_back(lgroup::testing::random_element(G.structure(), rng, 1));
    EXPECT_EQ(vanishing_locus(X, R), vanishing_locus(X, generated_ideal(G, R)));
    EXPECT_EQ(ideal_of_locus(X, X.empty_set()), full_ideal(G.structure()));
    EXPECT_EQ(vanishing_locus(X, full_ideal(G.structure())), X.empty_set());
  }
}

TEST(Spectrum, UnknownPrimeIsReported) {
  const SpectrumSpace X(UnitalGroup(lgroup::testing::zn(2), vec({1, 1})));
  try {
    (void)X.prime_index(zero_ideal(lgroup::testing::zn(2)));
    FAIL() << "non-prime accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_prime);
  }
}

TEST(Spectrum, ReportHoldsOnRandomStructures) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const UnitalGroup G = lgroup::testing::random_group(rng);
    const SpectrumSpace X(G);
    if (X.size() > 12) continue;
    const SpectralReport report = spectral_axioms_report(X);
    for (const auto& law : report.laws) {
      ASSERT_TRUE(law.holds()) << G.to_string() << " " << law.name << ": " << law.first_failure;
    }
  }
}

TEST(Spectrum, DotAndJsonRendering) {
  const SpectrumSpace X(UnitalGroup(Structure::lex(Structure::atom()), lx(1, 0)));
  const std::string dot = to_dot(X);
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  EXPECT_NE(dot.find("p0 -> p1"), std::string::npos);
  EXPECT_NE(dot.find("doublecircle"), std::string::npos);
  const json j = spectrum_to_json(X);
  EXPECT_EQ(j["primes"].size(), 2u);
  EXPECT_FALSE(j["max_dense"].get<bool>());
  EXPECT_TRUE(j["primes"][1]["maximal"].get<bool>());
}
