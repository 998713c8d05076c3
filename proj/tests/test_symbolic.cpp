#include <gtest/gtest.h>

#include <random>

#include "efa/models.hpp"
#include "efa/order.hpp"
#include "efa/symbolic.hpp"

using namespace efa::symbolic;

namespace {

constexpr int kTriples = 20000;

// Generators draw from small windows so that sums are often defined.

FinCofElement gen_fincof(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 3), point(0, 9), count(0, 3);
  FinCofElement u;
  u.cofinite = coin(rng) == 0;
  for (int i = count(rng); i > 0; --i) u.finite_part.insert(point(rng));
  return u;
}

BlockElement gen_block(std::mt19937_64& rng) {
  static constexpr std::uint8_t bases[] = {blocks::kEmpty, blocks::kX1X2, blocks::kX2X3,
                                           blocks::kX3X4,  blocks::kX4X1, blocks::kAll};
  std::uniform_int_distribution<int> base(0, 11), block(1, 4), index(0, 2), count(0, 2);
  BlockElement u;
  const int b = base(rng);
  u.base = b < 6 ? bases[b] : blocks::kEmpty;
  for (int i = count(rng); i > 0; --i) u.perturbation.insert({block(rng), static_cast<std::uint64_t>(index(rng))});
  return u;
}

ChainElement gen_chain(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> value(0, 8), coin(0, 2);
  return {static_cast<std::uint64_t>(value(rng)), coin(rng) == 0};
}

BalancedElement gen_balanced(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(0, 4), pairs(0, 2), coin(0, 3);
  BalancedElement u;
  u.complement = coin(rng) == 0;
  for (int i = pairs(rng); i > 0; --i) {
    const auto x = TaggedPoint::x(idx(rng)), y = TaggedPoint::y(idx(rng));
    if (!u.direct_part.contains(x) && !u.direct_part.contains(y)) {
      u.direct_part.insert(x);
      u.direct_part.insert(y);
    }
  }
  return u;
}

template <class T, class Gen>
void check_family_laws(Gen gen, const T& zero, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const T unit = supplement(zero);
  int associative_premises = 0;
  for (int i = 0; i < kTriples; ++i) {
    const T a = gen(rng), b = gen(rng), c = gen(rng);
    ASSERT_TRUE(is_member(a));
    EXPECT_EQ(oplus(a, b), oplus(b, a)) << to_string(a) << " " << to_string(b);
    if (auto ab = oplus(a, b)) {
      EXPECT_TRUE(is_member(*ab));
      EXPECT_TRUE(le(a, *ab));
      if (auto abc = oplus(*ab, c)) {
        ++associative_premises;
        const auto bc = oplus(b, c);
        ASSERT_TRUE(bc) << to_string(a) << " " << to_string(b) << " " << to_string(c);
        EXPECT_EQ(oplus(a, *bc), abc);
      }
    }
    EXPECT_EQ(supplement(supplement(a)), a);
    EXPECT_TRUE(is_member(supplement(a)));
    EXPECT_EQ(oplus(a, supplement(a)), unit);
    EXPECT_EQ(oplus(a, zero), a);
    EXPECT_TRUE(le(zero, a));
    EXPECT_TRUE(le(a, unit));
    EXPECT_TRUE(le(a, a));
    if (le(a, b)) {
      EXPECT_TRUE(le(supplement(b), supplement(a)));
      if (le(b, a)) EXPECT_EQ(a, b);
      if (le(b, c)) EXPECT_TRUE(le(a, c));
    }
  }
  EXPECT_GT(associative_premises, kTriples / 50);
}

}  // namespace

TEST(SymbolicLaws, FinCof) { check_family_laws(gen_fincof, FinCofElement{}, 1); }
TEST(SymbolicLaws, Blocks) { check_family_laws(gen_block, BlockElement{}, 2); }
TEST(SymbolicLaws, Chain) { check_family_laws(gen_chain, ChainElement{}, 3); }
TEST(SymbolicLaws, Balanced) { check_family_laws(gen_balanced, BalancedElement{}, 4); }

TEST(SymbolicOps, Examples) {
  EXPECT_EQ(oplus(ChainElement::plain(3), ChainElement::prime(5)), ChainElement::prime(2));
  EXPECT_EQ(oplus(ChainElement::plain(6), ChainElement::prime(5)), std::nullopt);
  EXPECT_EQ(oplus(FinCofElement::finite({1, 2}), FinCofElement::finite({3})), FinCofElement::finite({1, 2, 3}));
  EXPECT_EQ(oplus(FinCofElement::all_but({1}), FinCofElement::all_but({2})), std::nullopt);
  EXPECT_EQ(supplement(BalancedElement::direct({TaggedPoint::x(1), TaggedPoint::y(1)})),
            BalancedElement::all_but({TaggedPoint::x(1), TaggedPoint::y(1)}));
  EXPECT_FALSE(is_member(BalancedElement::direct({TaggedPoint::x(1)})));
  EXPECT_FALSE(is_member(BlockElement{0b0101, {}}));
  // X1 u X2 plus X3 u X4 is X.
  EXPECT_EQ(oplus(BlockElement{blocks::kX1X2, {}}, BlockElement{blocks::kX3X4, {}}), (BlockElement{blocks::kAll, {}}));
  // A finite point outside the base joins as a perturbation.
  EXPECT_EQ(oplus(BlockElement{blocks::kX1X2, {}}, BlockElement{blocks::kEmpty, {{3, 0}}}),
            (BlockElement{blocks::kX1X2, {{3, 0}}}));
  // X1 u X2 and X2 u X3 overlap on X2.
  EXPECT_EQ(oplus(BlockElement{blocks::kX1X2, {}}, BlockElement{blocks::kX2X3, {}}), std::nullopt);
}

TEST(SymbolicOps, ToString) {
  EXPECT_EQ(to_string(FinCofElement::all_but({1, 3})), "N\\{1,3}");
  EXPECT_EQ(to_string(FinCofElement::all_but({})), "N");
  EXPECT_EQ(to_string(ChainElement::prime(4)), "4'");
  EXPECT_EQ(to_string(BlockElement{blocks::kX1X2, {{2, 0}}}), "X1uX2 ^ {(2,0)}");
  EXPECT_EQ(to_string(BalancedElement::all_but({TaggedPoint::x(0), TaggedPoint::y(1)})), "(XuY)\\{x0,y1}");
}

TEST(SymbolicChain, FinitePrefixEmbedsIntoFiniteChain) {
  for (int n = 1; n <= 12; ++n) {
    const efa::Model c(efa::chain(n));
    for (std::uint64_t a = 0; a <= static_cast<std::uint64_t>(n); ++a)
      for (std::uint64_t b = 0; b <= static_cast<std::uint64_t>(n); ++b) {
        EXPECT_EQ(le(ChainElement::plain(a), ChainElement::plain(b)), c.le(a, b));
        const auto s = oplus(ChainElement::plain(a), ChainElement::plain(b));
        const auto t = c.sum(a, b);
        if (t) EXPECT_EQ(s, ChainElement::plain(*t));
      }
  }
}

TEST(Ex34, SpecExamples) {
  const auto x = ex34_not_orthocomplete(FinCofElement::all_but({}));
  EXPECT_EQ(x.verdict, Verdict::improved);
  EXPECT_EQ(x.defeater, FinCofElement::all_but({1}));
  EXPECT_TRUE(x.verified);

  const auto y = ex34_not_orthocomplete(FinCofElement::all_but({1}));
  EXPECT_EQ(y.defeater, FinCofElement::all_but({1, 3}));

  const auto z = ex34_not_orthocomplete(FinCofElement::finite({0, 2, 4}));
  EXPECT_EQ(z.verdict, Verdict::not_a_bound);
  EXPECT_EQ(z.witness, FinCofElement::finite({6}));
  EXPECT_TRUE(z.verified);

  const auto w = ex34_not_orthocomplete(FinCofElement::all_but({4, 7}));
  EXPECT_EQ(w.verdict, Verdict::not_a_bound);
  EXPECT_EQ(w.witness, FinCofElement::finite({4}));
}

TEST(Ex36, SpecExamples) {
  const auto meet = ex36_no_meet(BlockElement{blocks::kEmpty, {{2, 0}, {2, 1}}});
  EXPECT_EQ(meet.verdict, Verdict::improved);
  EXPECT_EQ(meet.defeater, (BlockElement{blocks::kEmpty, {{2, 0}, {2, 1}, {2, 2}}}));
  EXPECT_TRUE(meet.verified);

  const auto based = ex36_no_meet(BlockElement{blocks::kX1X2, {}});
  EXPECT_EQ(based.verdict, Verdict::not_a_bound);
  EXPECT_EQ(based.witness, (BlockElement{blocks::kX2X3, {}}));
  EXPECT_TRUE(based.verified);

  const auto outside = ex36_no_meet(BlockElement{blocks::kEmpty, {{1, 0}}});
  EXPECT_EQ(outside.verdict, Verdict::not_a_bound);

  EXPECT_EQ(ex36_no_meet(BlockElement{0b0111, {}}).verdict, Verdict::not_a_member);

  const auto sup = ex36_no_sup_of_singletons(BlockElement{blocks::kX1X2, {}});
  EXPECT_EQ(sup.verdict, Verdict::improved);
  EXPECT_EQ(sup.defeater, (BlockElement{blocks::kX1X2, {{2, 0}}}));
  EXPECT_TRUE(sup.verified);

  const auto missing = ex36_no_sup_of_singletons(BlockElement{blocks::kX1X2, {{1, 3}}});
  EXPECT_EQ(missing.verdict, Verdict::not_a_bound);
  EXPECT_EQ(missing.witness, (BlockElement{blocks::kEmpty, {{1, 3}}}));
}

TEST(Defeaters, RandomCandidatesAreAllRefutedAndVerified) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 2000; ++i) {
    const auto a = ex34_not_orthocomplete(random_ex34_candidate(rng));
    EXPECT_TRUE(a.verified) << to_string(a.candidate);
    const auto b = ex36_no_meet(random_ex36_meet_candidate(rng));
    EXPECT_TRUE(b.verified) << to_string(b.candidate);
    const auto c = ex36_no_sup_of_singletons(random_ex36_sup_candidate(rng));
    EXPECT_TRUE(c.verified) << to_string(c.candidate);
  }
}

TEST(Defeaters, GeneratorsMixGenuineBoundsWithNonBounds) {
  std::mt19937_64 rng(5);
  int improved = 0;
  for (int i = 0; i < 400; ++i)
    improved += ex34_not_orthocomplete(random_ex34_candidate(rng)).verdict == Verdict::improved;
  EXPECT_GT(improved, 100);
  EXPECT_LT(improved, 350);
}

TEST(Ex38, DepthTwenty) {
  const auto r = ex38_not_orthoatomistic(5, 20);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.atoms, std::vector<ChainElement>{ChainElement::plain(1)});
  EXPECT_FALSE(r.target_reachable);
  EXPECT_EQ(r.upper_bound_chain.size(), 21u);
  EXPECT_TRUE(r.chain_strictly_decreasing);
  EXPECT_EQ(r.explanation,
            "5' unreachable by atom sums; decreasing upper-bound chain 0' > 1' > ... > 20' verified to depth 20");
  std::optional<ChainElement> acc = ChainElement::plain(0);
  for (int i = 0; i < 7; ++i) acc = oplus(*acc, ChainElement::plain(1));
  EXPECT_EQ(acc, ChainElement::plain(7));
}

TEST(Ex39, ThreeUpperBoundsTwoMinimal) {
  const auto r = ex39_two_minimal_upper_bounds();
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.upper_bounds.size(), 3u);
  ASSERT_EQ(r.minimal_upper_bounds.size(), 2u);
  const auto a = BalancedElement::all_but({TaggedPoint::x(0), TaggedPoint::y(0)});
  const auto b = BalancedElement::all_but({TaggedPoint::x(0), TaggedPoint::y(1)});
  EXPECT_TRUE((r.minimal_upper_bounds == std::vector<BalancedElement>{a, b}) ||
              (r.minimal_upper_bounds == std::vector<BalancedElement>{b, a}));
  EXPECT_FALSE(le(a, b));
  EXPECT_FALSE(le(b, a));
  EXPECT_FALSE(r.supremum);
}

TEST(Ex39, PairingWitness) {
  const auto w = ex39_orthoatomistic_witness(BalancedElement::direct(
      {TaggedPoint::x(1), TaggedPoint::x(2), TaggedPoint::y(3), TaggedPoint::y(5)}));
  EXPECT_EQ(w, (std::vector<BalancedElement>{BalancedElement::direct({TaggedPoint::x(1), TaggedPoint::y(3)}),
                                             BalancedElement::direct({TaggedPoint::x(2), TaggedPoint::y(5)})}));
  EXPECT_EQ(ex39_orthoatomistic_witness(BalancedElement::direct({TaggedPoint::x(1), TaggedPoint::y(1)})).size(), 1u);
  EXPECT_TRUE(ex39_orthoatomistic_witness(BalancedElement{}).empty());
  EXPECT_THROW(ex39_orthoatomistic_witness(BalancedElement::direct({TaggedPoint::x(1)})), std::invalid_argument);
  EXPECT_THROW(ex39_orthoatomistic_witness(BalancedElement::all_but({})), std::invalid_argument);
}
