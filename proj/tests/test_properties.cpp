#include <gtest/gtest.h>

#include "efa/models.hpp"
#include "efa/properties.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace efa;
using test_support::by_label;
using test_support::labels_of;

TEST(Principal, Examples) {
  const Model c2(chain(2));
  EXPECT_FALSE(is_principal(c2, 1));
  EXPECT_TRUE(is_principal(c2, c2.one()));
  const auto failure = find_non_principal(c2);
  ASSERT_TRUE(failure);
  EXPECT_EQ(failure->element, 1u);

  const Model e6(even_subset_omp(6));
  for (Element a = 0; a < e6.size(); ++a) EXPECT_TRUE(is_principal(e6, a));
}

TEST(Classify, Examples) {
  const auto e6 = classify(Model(even_subset_omp(6)));
  EXPECT_TRUE(e6.omp);
  EXPECT_TRUE(e6.omp_via_joins);
  EXPECT_FALSE(e6.lattice);
  ASSERT_TRUE(e6.non_lattice);
  EXPECT_EQ(e6.non_lattice->minimal_bounds.size(), 3u);

  const auto b3 = classify(Model(boolean_algebra(3)));
  EXPECT_TRUE(b3.oml);

  const auto c4 = classify(Model(chain(4)));
  EXPECT_FALSE(c4.orthoalgebra);
  EXPECT_EQ(c4.self_orthogonal, std::optional<Element>(1));

  const auto hs = classify(Model(horizontal_sum(chain(2), chain(2))));
  EXPECT_FALSE(hs.omp);  // a + a = 1 while a is not principal
  EXPECT_FALSE(hs.orthoalgebra);
}

TEST(IsotropicIndex, Examples) {
  const Model c4(chain(4));
  EXPECT_EQ(isotropic_index(c4, 1), (IsotropicIndex{false, 4}));
  EXPECT_EQ(isotropic_index(c4, 2), (IsotropicIndex{false, 2}));
  EXPECT_EQ(isotropic_index(c4, 0), IsotropicIndex::infinity());
  const Model b3(boolean_algebra(3));
  for (Element a = 1; a < 8; ++a) EXPECT_EQ(isotropic_index(b3, a), (IsotropicIndex{false, 1}));
  EXPECT_TRUE(is_archimedean(Model(chain(10))));
  EXPECT_TRUE(is_archimedean(Model(even_subset_omp(6))));
  EXPECT_TRUE(is_archimedean(Model(boolean_algebra(2))));
}

TEST(Atoms, Examples) {
  const Model e6(even_subset_omp(6));
  const auto a = atoms(e6);
  EXPECT_EQ(a.size(), 15u);
  for (auto x : a) EXPECT_EQ(std::count(e6.label(x).begin(), e6.label(x).end(), ','), 1);
  EXPECT_EQ(atoms(Model(chain(7))), std::vector<Element>{1});
  EXPECT_EQ(atoms(Model(boolean_algebra(3))), (std::vector<Element>{1, 2, 4}));
  EXPECT_EQ(atoms_below(e6, by_label(e6, "{a,b,c,d}")).size(), 6u);
  EXPECT_TRUE(is_atomic(Model(chain(5))));
  EXPECT_TRUE(is_atomic(Model(horizontal_sum(chain(2), chain(2)))));
}

TEST(Atomistic, Examples) {
  EXPECT_TRUE(is_atomistic(Model(even_subset_omp(6))).holds);
  const auto c5 = is_atomistic(Model(chain(5)));
  EXPECT_FALSE(c5.holds);
  EXPECT_EQ(c5.failure, std::optional<Element>(2));
  EXPECT_TRUE(is_atomistic(Model(boolean_algebra(4))).holds);
}

TEST(Orthoatomistic, Examples) {
  const Model c5(chain(5));
  const auto r = is_orthoatomistic(c5);
  EXPECT_TRUE(r.holds);
  ASSERT_TRUE(r.decompositions[5]);
  EXPECT_EQ(r.decompositions[5]->multiplicity(1), 5u);

  const Model e6(even_subset_omp(6));
  const auto s = is_orthoatomistic(e6);
  EXPECT_TRUE(s.holds);
  const auto abcd = by_label(e6, "{a,b,c,d}");
  ASSERT_TRUE(s.decompositions[abcd]);
  EXPECT_EQ(s.decompositions[abcd]->total(), 2u);
  EXPECT_EQ(oplus_multiset(e6, *s.decompositions[abcd]), std::optional<Element>(abcd));

  // Strict-set reading: chains beyond C1 fail it.
  EXPECT_FALSE(is_orthoatomistic_distinct(c5));
  EXPECT_TRUE(is_orthoatomistic_distinct(e6));
}

TEST(Disjunctive, Examples) {
  const auto c5 = is_disjunctive(Model(chain(5)));
  EXPECT_FALSE(c5.holds);
  EXPECT_EQ(c5.counterexample, (std::optional<std::pair<Element, Element>>({2, 1})));
  EXPECT_TRUE(is_disjunctive(Model(boolean_algebra(3))).holds);
  EXPECT_TRUE(is_disjunctive(Model(even_subset_omp(6))).holds);
}

TEST(Orthocomplete, FiniteModels) {
  for (const auto& e : {even_subset_omp(6), chain(3), horizontal_sum(chain(2), chain(2)), boolean_algebra(3)}) {
    const auto r = check_orthocompleteness(Model(e));
    EXPECT_TRUE(r.orthocomplete);
    EXPECT_TRUE(r.weakly_orthocomplete);
    EXPECT_GT(r.systems_checked, 0u);
  }
}

TEST(Orthocomplete, SystemCountMatchesMultiplicityBound) {
  // C3: the empty system and {1}, {2}, {3}, {1,1}, {1,2}, {1,1,1}; their
  // partial-sum sets are pairwise distinct.
  EXPECT_EQ(check_orthocompleteness(Model(chain(3))).systems_checked, 7u);
}

TEST(Orthocomplete, LongChainStaysTractable) {
  const auto r = check_orthocompleteness(Model(chain(64)));
  EXPECT_TRUE(r.orthocomplete);
  EXPECT_TRUE(r.weakly_orthocomplete);
}

TEST(Profile, ChainFive) {
  const auto p = profile(Model(chain(5)));
  EXPECT_FALSE(p.omp);
  EXPECT_TRUE(p.lattice);
  EXPECT_TRUE(p.atomic);
  EXPECT_FALSE(p.atomistic);
  EXPECT_TRUE(p.orthoatomistic);
  EXPECT_FALSE(p.disjunctive);
  EXPECT_EQ(p.witnesses.non_atomistic, std::optional<Element>(2));
}

TEST(Profile, EvenSubsetsSix) {
  const auto p = profile(Model(even_subset_omp(6)));
  EXPECT_TRUE(p.omp);
  EXPECT_FALSE(p.lattice);
  EXPECT_TRUE(p.atomistic);
  EXPECT_TRUE(p.orthoatomistic);
  EXPECT_TRUE(p.disjunctive);
  EXPECT_FALSE(p.oml);
}

TEST(Profile, TwoElementAlgebraHasEveryFlag) {
  const auto p = profile(Model(boolean_algebra(1)));
  for (const auto& name : property_names()) EXPECT_TRUE(*p.flag(name)) << name;
  EXPECT_FALSE(p.flag("no_such_property"));
}

TEST(Profile, AgreesWithOracleOnBuiltins) {
  const std::vector<FiniteEffectAlgebra> models{
      chain(1),          chain(2),          chain(5),          chain(9),
      boolean_algebra(2), boolean_algebra(3), even_subset_omp(4), even_subset_omp(6),
      horizontal_sum(chain(2), chain(3)), horizontal_sum(boolean_algebra(2), chain(2)),
      horizontal_sum(even_subset_omp(4), boolean_algebra(2))};
  for (const auto& e : models) {
    const Model m(e);
    const auto p = profile(m);
    const auto t = oracle::from(e);
    const auto d = oracle::derive(t);
    SCOPED_TRACE(e.size());
    EXPECT_EQ(p.orthoalgebra, oracle::orthoalgebra(t));
    EXPECT_EQ(p.omp, oracle::omp(t, d));
    EXPECT_EQ(p.lattice, oracle::lattice(t, d));
    EXPECT_EQ(p.atomistic, oracle::atomistic(t, d));
    EXPECT_EQ(p.orthoatomistic, oracle::orthoatomistic(t, d));
    EXPECT_EQ(p.orthoatomistic_distinct, oracle::orthoatomistic(t, d, true));
    EXPECT_EQ(p.disjunctive, oracle::disjunctive(t, d));
    std::vector<int> core_atoms(p.atoms.begin(), p.atoms.end());
    EXPECT_EQ(core_atoms, oracle::atoms(t, d));
  }
}
