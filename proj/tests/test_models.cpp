#include <gtest/gtest.h>

#include "efa/enumerate.hpp"
#include "efa/models.hpp"
#include "efa/properties.hpp"
#include "support.hpp"

using namespace efa;

TEST(Models, RangesAreEnforced) {
  EXPECT_THROW(boolean_algebra(0), std::invalid_argument);
  EXPECT_THROW(boolean_algebra(11), std::invalid_argument);
  EXPECT_THROW(even_subset_omp(5), std::invalid_argument);
  EXPECT_THROW(even_subset_omp(12), std::invalid_argument);
  EXPECT_THROW(chain(0), std::invalid_argument);
  EXPECT_THROW(chain(65), std::invalid_argument);
}

TEST(Models, EveryConstructorValidates) {
  for (int k = 1; k <= 6; ++k) EXPECT_TRUE(validate(boolean_algebra(k)).valid()) << k;
  for (int m = 2; m <= 8; m += 2) EXPECT_TRUE(validate(even_subset_omp(m)).valid()) << m;
  for (int n = 1; n <= 64; ++n) EXPECT_TRUE(validate(chain(n)).valid()) << n;
  EXPECT_TRUE(validate(horizontal_sum(chain(2), chain(3))).valid());
  EXPECT_TRUE(validate(horizontal_sum(boolean_algebra(3), even_subset_omp(4))).valid());
}

TEST(Models, Sizes) {
  EXPECT_EQ(boolean_algebra(3).size(), 8u);
  EXPECT_EQ(even_subset_omp(6).size(), 32u);
  EXPECT_EQ(even_subset_omp(4).size(), 8u);
  EXPECT_EQ(even_subset_omp(2).size(), 2u);
  EXPECT_EQ(chain(5).size(), 6u);
  EXPECT_EQ(horizontal_sum(chain(2), chain(3)).size(), 5u);
}

TEST(Models, ChainArithmetic) {
  const auto c = chain(6);
  for (Element m = 0; m <= 6; ++m)
    for (Element k = 0; k <= 6; ++k) {
      const auto s = c.sum(m, k);
      EXPECT_EQ(s.has_value(), m + k <= 6);
      if (s) EXPECT_EQ(*s, m + k);
    }
  const Model model(c);
  for (Element m = 0; m <= 6; ++m) EXPECT_EQ(model.supplement(m), 6 - m);
}

TEST(Models, EvenSubsetsAreOmp) {
  for (int m = 2; m <= 8; m += 2) EXPECT_TRUE(classify(Model(even_subset_omp(m))).omp) << m;
  EXPECT_TRUE(classify(Model(even_subset_omp(4))).lattice);
  EXPECT_FALSE(classify(Model(even_subset_omp(6))).lattice);
}

TEST(Models, ChainsAreLatticesButNotOrthoalgebras) {
  for (int n = 2; n <= 12; ++n) {
    const auto c = classify(Model(chain(n)));
    EXPECT_TRUE(c.lattice);
    EXPECT_FALSE(c.orthoalgebra);
  }
}

TEST(Models, BooleanAlgebrasAreAtomisticAndDisjunctive) {
  for (int k = 1; k <= 5; ++k) {
    const auto p = profile(Model(boolean_algebra(k)));
    EXPECT_TRUE(p.atomistic);
    EXPECT_TRUE(p.orthoatomistic);
    EXPECT_TRUE(p.disjunctive);
    EXPECT_TRUE(p.oml);
  }
}

TEST(Models, Labels) {
  const auto b = boolean_algebra(2);
  EXPECT_EQ(b.labels(), (std::vector<std::string>{"{}", "{a}", "{b}", "{a,b}"}));
  EXPECT_EQ(chain(3).labels(), (std::vector<std::string>{"0", "1", "2", "3"}));
  const auto hs = horizontal_sum(chain(2), boolean_algebra(2));
  EXPECT_EQ(hs.labels(), (std::vector<std::string>{"0", "l:1", "r:{a}", "r:{b}", "1"}));
}

TEST(HorizontalSum, TwoTwoElementChains) {
  const Model m(horizontal_sum(chain(2), chain(2)));
  ASSERT_EQ(m.size(), 4u);
  EXPECT_EQ(m.supplement(1), 1u);
  EXPECT_EQ(m.supplement(2), 2u);
  EXPECT_FALSE(m.sum(1, 2));
}

TEST(HorizontalSum, TrivialSummandIsAbsorbed) {
  for (const auto& e : {chain(3), boolean_algebra(2), even_subset_omp(4)}) {
    EXPECT_EQ(canonical_form(horizontal_sum(e, chain(1))), canonical_form(e));
    EXPECT_EQ(canonical_form(horizontal_sum(chain(1), e)), canonical_form(e));
  }
}

TEST(HorizontalSum, RejectsInvalidOperand) {
  auto bad = test_support::c2_table();
  bad.clear_sum(1, 1);
  EXPECT_THROW(horizontal_sum(bad, chain(2)), std::invalid_argument);
}

TEST(Recipe, ParseAndBuild) {
  const auto r = ModelRecipe::parse("horizontal_sum(chain:2,horizontal_sum(chain:2,boolean:2))");
  EXPECT_EQ(r.to_string(), "horizontal_sum(chain:2,horizontal_sum(chain:2,boolean:2))");
  EXPECT_EQ(build(r).size(), 6u);
  EXPECT_EQ(build(ModelRecipe::parse("even_subsets:6")), even_subset_omp(6));
  EXPECT_THROW(ModelRecipe::parse("chain"), std::invalid_argument);
  EXPECT_THROW(ModelRecipe::parse("chain:x"), std::invalid_argument);
  EXPECT_THROW(build(ModelRecipe::parse("torus:3")), std::invalid_argument);
}
