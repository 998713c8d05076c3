#include <gtest/gtest.h>

#include <random>
#include <set>

#include "efa/enumerate.hpp"
#include "efa/models.hpp"
#include "oracle.hpp"

using namespace efa;

namespace {

FiniteEffectAlgebra to_algebra(const oracle::Table& t) {
  FiniteEffectAlgebra e(t.n, t.one);
  for (int a = 1; a < t.n; ++a)
    for (int b = a; b < t.n; ++b)
      if (t.def(a, b)) e.set_sum(a, b, t.at(a, b));
  return e;
}

std::set<CanonicalForm> forms_of(const std::vector<FiniteEffectAlgebra>& models) {
  std::set<CanonicalForm> out;
  for (const auto& m : models) out.insert(canonical_form(m));
  return out;
}

std::vector<Element> random_relabeling(std::size_t n, std::mt19937& rng) {
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  return perm;
}

}  // namespace

TEST(Enumerate, SmallOrdersAreForced) {
  EXPECT_EQ(enumerate_up_to_iso(2).models.size(), 1u);
  const auto three = enumerate_up_to_iso(3);
  ASSERT_EQ(three.models.size(), 1u);
  EXPECT_EQ(canonical_form(three.models[0]), canonical_form(chain(2)));
}

TEST(Enumerate, OrderFourIsChainBooleanAndHorizontalSum) {
  const auto four = enumerate_up_to_iso(4);
  EXPECT_EQ(forms_of(four.models), (std::set<CanonicalForm>{canonical_form(chain(3)), canonical_form(boolean_algebra(2)),
                                                             canonical_form(horizontal_sum(chain(2), chain(2)))}));
}

// The naive generator shares no code with the engine; agreement here is what
// licenses the frozen counts below.
class NaiveAgreement : public ::testing::TestWithParam<int> {};

TEST_P(NaiveAgreement, SameIsomorphismClasses) {
  const int n = GetParam();
  std::vector<FiniteEffectAlgebra> naive;
  for (const auto& t : oracle::naive_classes(n)) naive.push_back(to_algebra(t));
  const auto engine = enumerate_up_to_iso(n);
  EXPECT_EQ(engine.models.size(), naive.size());
  EXPECT_EQ(forms_of(engine.models), forms_of(naive));
}

INSTANTIATE_TEST_SUITE_P(Orders, NaiveAgreement, ::testing::Values(2, 3, 4, 5, 6));

TEST(Enumerate, FrozenCounts) {
  const std::vector<std::pair<std::size_t, std::size_t>> expected{{2, 1}, {3, 1}, {4, 3}, {5, 4}, {6, 10}, {7, 14}};
  EXPECT_EQ(count_up_to(7), expected);
}

#ifdef EFA_SLOW_TESTS
TEST(Enumerate, FrozenCountOrderEight) { EXPECT_EQ(enumerate_up_to_iso(8).models.size(), 40u); }
#endif

TEST(Enumerate, StreamIsSoundAndIsoFree) {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto r = enumerate_up_to_iso(n);
    EXPECT_EQ(r.duplicates, 0u);
    EXPECT_EQ(forms_of(r.models).size(), r.models.size());
    EXPECT_TRUE(std::is_sorted(r.forms.begin(), r.forms.end()));
    for (std::size_t i = 0; i < r.models.size(); ++i) {
      EXPECT_TRUE(validate(r.models[i]).valid());
      EXPECT_EQ(r.models[i].size(), n);
      EXPECT_EQ(r.forms[i], canonical_form(r.models[i]));
    }
  }
}

TEST(Enumerate, KnownModelsAppear) {
  const std::vector<FiniteEffectAlgebra> known{
      chain(4), chain(5), chain(6), chain(7), boolean_algebra(3), even_subset_omp(4),
      horizontal_sum(chain(2), chain(3)), horizontal_sum(chain(3), chain(3)),
      horizontal_sum(boolean_algebra(2), boolean_algebra(2)),
      horizontal_sum(chain(2), horizontal_sum(chain(2), chain(2)))};
  for (const auto& e : known) {
    const auto forms = forms_of(enumerate_up_to_iso(e.size()).models);
    EXPECT_TRUE(forms.contains(canonical_form(e))) << "order " << e.size();
  }
}

TEST(Enumerate, ParallelMatchesSequential) {
  for (std::size_t n = 4; n <= 7; ++n) {
    const auto seq = enumerate_up_to_iso(n, {1});
    const auto par = enumerate_up_to_iso(n, {4, 2});
    EXPECT_EQ(seq.forms, par.forms);
  }
}

TEST(Enumerate, CapIsEnforced) {
  EXPECT_THROW(enumerate_up_to_iso(kMaxEnumerationSize + 1), EnumerationCapExceeded);
  EXPECT_THROW(enumerate_up_to_iso(1), std::invalid_argument);
}

TEST(CanonicalForm, RelabelingInvariant) {
  std::mt19937 rng(7);
  std::vector<FiniteEffectAlgebra> models{boolean_algebra(3), even_subset_omp(4), chain(6),
                                          horizontal_sum(chain(3), boolean_algebra(2))};
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& m : enumerate_up_to_iso(n).models) models.push_back(m);
  for (const auto& m : models) {
    const auto form = canonical_form(m);
    for (int i = 0; i < 5; ++i) EXPECT_EQ(canonical_form(m.relabeled(random_relabeling(m.size(), rng))), form);
  }
}

TEST(CanonicalForm, Examples) {
  const auto b2 = boolean_algebra(2);
  EXPECT_EQ(canonical_form(b2), canonical_form(b2.relabeled({0, 2, 1, 3})));
  EXPECT_NE(canonical_form(chain(3)), canonical_form(horizontal_sum(chain(2), chain(2))));
  EXPECT_EQ(canonical_form(b2), canonical_form(b2.relabeled({0, 1, 2, 3})));
}

TEST(CanonicalForm, UnitMayMoveUnderRelabeling) {
  // Put the unit of C3 at index 1.
  const auto moved = chain(3).relabeled({0, 2, 1, 3}).relabeled({0, 1, 3, 2});
  EXPECT_EQ(canonical_form(moved), canonical_form(chain(3)));
}

TEST(Search, Examples) {
  const auto found = search({{"orthoatomistic"}, {"atomistic"}, 5});
  ASSERT_TRUE(found.model);
  EXPECT_EQ(canonical_form(*found.model), canonical_form(chain(2)));

  const auto none1 = search({{"atomic"}, {"orthoatomistic"}, 6});
  EXPECT_FALSE(none1.model);
  EXPECT_EQ(none1.certificate, "no model of order <= 6");

  const auto none2 = search({{"omp", "orthoatomistic"}, {"atomistic"}, 6});
  EXPECT_FALSE(none2.model);

  EXPECT_THROW(search({{"fluffy"}, {}, 4}), std::invalid_argument);
}
