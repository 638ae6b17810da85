#include <gtest/gtest.h>

#include "lgroup/laws.hpp"
#include "lgroup/semisimple.hpp"
#include "support.hpp"

using namespace lgroup;
using lgroup::testing::vec;

namespace {

Element lx(long long top, long long bottom) { return Element::lex(top, Element::atom(bottom)); }

bool has_lex(const Structure& s) {
  if (s.kind() == Kind::lex) return true;
  for (const auto& c : s.children()) {
    if (has_lex(c)) return true;
  }
  return false;
}

}  // namespace

TEST(Semisimple, ZnIsStronglySemisimple) {
  const UnitalGroup G(lgroup::testing::zn(3), vec({1, 2, 1}));
  EXPECT_EQ(radical(G), zero_ideal(G.structure()));
  EXPECT_TRUE(is_semisimple(G));
  EXPECT_TRUE(is_strongly_semisimple(G).holds);
  EXPECT_FALSE(archimedean_falsify(G, 3).has_value());
}

TEST(Semisimple, LexHasInfinitesimals) {
  const UnitalGroup G(Structure::lex(Structure::atom()), lx(1, 0));
  EXPECT_EQ(radical(G), Ideal::bottom(Ideal::all()));
  EXPECT_FALSE(is_semisimple(G));
  const auto ss = is_strongly_semisimple(G);
  EXPECT_FALSE(ss.holds);
  ASSERT_TRUE(ss.witness.has_value());
  EXPECT_EQ(*ss.witness, zero_ideal(G.structure()));
  const auto w = archimedean_falsify(G, 3);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(all_multiples_below(w->first, w->second));
  EXPECT_THROW(archimedean_falsify(G, 0), std::invalid_argument);
}

TEST(Semisimple, AllMultiplesBelowIsExact) {
  EXPECT_TRUE(all_multiples_below(lx(0, 1), lx(1, -100)));
  EXPECT_FALSE(all_multiples_below(lx(0, 1), lx(0, 100)));
  EXPECT_TRUE(all_multiples_below(lx(0, -1), lx(0, 0)));
  EXPECT_FALSE(all_multiples_below(vec({1, 0}), vec({5, 5})));
  EXPECT_TRUE(all_multiples_below(vec({0, 0}), vec({0, 1})));
}

// In this class semisimplicity is lex-freeness, and lex-free groups are Z^n.
TEST(Semisimple, RandomStructuresFollowTheirShape) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 120; ++trial) {
    const UnitalGroup G = lgroup::testing::random_group(rng);
    const SpectrumSpace X(G);
    const bool ss = is_semisimple(X);
    ASSERT_EQ(ss, !has_lex(G.structure())) << G.to_string();
    ASSERT_EQ(ss, closure(X, X.maximal()) == X.full_set());
    ASSERT_EQ(archimedean_falsify(G, 3).has_value(), !ss) << G.to_string();
    ASSERT_EQ(is_strongly_semisimple(X).holds, ss);
    ASSERT_TRUE(strongly_semisimple_characterizations(X).holds()) << G.to_string();
  }
}

TEST(Semisimple, SerialAndParallelAgree) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const UnitalGroup G = lgroup::testing::random_group(rng);
    const SpectrumSpace X(G);
    const auto a = is_strongly_semisimple(X, Exec::serial);
    const auto b = is_strongly_semisimple(X, Exec::parallel);
    ASSERT_EQ(a.holds, b.holds);
    ASSERT_EQ(a.witness, b.witness);
  }
}
