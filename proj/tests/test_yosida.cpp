#include <gtest/gtest.h>

#include "lgroup/laws.hpp"
#include "lgroup/yosida.hpp"
#include "support.hpp"

using namespace lgroup;
using lgroup::testing::vec;

namespace {

Element lx(long long top, long long bottom) { return Element::lex(top, Element::atom(bottom)); }

}  // namespace

TEST(Yosida, ValuesOnZ3) {
  const UnitalGroup G(lgroup::testing::zn(3), vec({1, 2, 1}));
  const SpectrumSpace X(G);
  const YosidaTable t = yosida_table(X, vec({2, 4, 6}));
  ASSERT_EQ(t.values.size(), 3u);
  // Each maximal ideal keeps one coordinate k, and ĝ = g_k / u_k there.
  const std::vector<std::size_t> pts = yosida_points(X);
  std::vector<Rational> by_coordinate(3, Rational(0));
  for (std::size_t k = 0; k < 3; ++k) by_coordinate[pts[k]] = t.values[k];
  EXPECT_EQ(by_coordinate[0], Rational(2));
  EXPECT_EQ(by_coordinate[1], Rational(2));
  EXPECT_EQ(by_coordinate[2], Rational(6));
  EXPECT_EQ(holder_eval(G, vec({1, 1, 0}), X.prime(0)).to_string(), pts[0] == 1 ? "1/2" : "1");
}

TEST(Yosida, LexValueIgnoresBottom) {
  const UnitalGroup G(Structure::lex(Structure::atom()), lx(3, 1));
  const SpectrumSpace X(G);
  EXPECT_EQ(holder_eval(G, lx(2, 100), Ideal::bottom(Ideal::all())), Rational(2, 3));
  try {
    (void)holder_eval(G, lx(2, 100), zero_ideal(G.structure()));
    FAIL() << "non-maximal prime accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_maximal);
  }
  EXPECT_THROW(yosida_points(X), Error);
}

TEST(Yosida, ZeroSetsAgree) {
  const UnitalGroup G(lgroup::testing::zn(3), vec({1, 2, 1}));
  const SpectrumSpace X(G);
  for (const auto& g : lgroup::testing::box(G.structure(), 1)) {
    ASSERT_EQ(principal_zero_set(X, g), zero_set_by_values(X, g));
  }
  EXPECT_EQ(principal_zero_set(X, vec({0, 0, 1})).count(), 2u);
}

TEST(Yosida, LawsOnRandomStructures) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const UnitalGroup G = lgroup::testing::random_group(rng);
    const SpectrumSpace X(G);
    const auto sample = sample_elements(G, rng, 8);
    const std::span<const Element> head(sample.data(), std::min<std::size_t>(sample.size(), 30));
    const LawCheck law = yosida_laws(X, head);
    ASSERT_TRUE(law.holds()) << G.to_string() << ": " << law.first_failure;
  }
}
