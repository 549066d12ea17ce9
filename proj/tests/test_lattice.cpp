#include <gtest/gtest.h>

#include "carter/composition.hpp"
#include "carter/error.hpp"
#include "carter/families.hpp"
#include "carter/kernel.hpp"
#include "carter/lattice.hpp"
#include "support/oracles.hpp"

using namespace carter;

namespace {

Permutation cyc(std::size_t degree, std::string_view text) { return Permutation::parse(text, degree); }

oracle::Elements naive(FiniteGroup const& g) { return oracle::closure(g.degree(), g.generators()); }

std::uint64_t total(std::vector<SubgroupClass> const& classes) {
  std::uint64_t n = 0;
  for (auto const& c : classes) n += c.class_size;
  return n;
}

// Class count and subgroup total against the exhaustive scan.
void expect_lattice_matches(FiniteGroup const& g) {
  auto classes = all_subgroup_classes(g);
  auto elements = naive(g);
  auto subs = oracle::subgroups(elements);
  EXPECT_EQ(total(classes), subs.size());
  EXPECT_EQ(classes.size(), oracle::conjugacy_class_count(elements, subs));
  for (auto const& c : classes) {
    EXPECT_EQ(oracle::normalizer(elements, naive(c.representative.group())).size() * c.class_size,
              g.order());
  }
}

}  // namespace

TEST(LatticeTest, Sym3HasFourClasses) {
  auto classes = all_subgroup_classes(symmetric_group(3));
  ASSERT_EQ(classes.size(), 4u);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> shape;
  for (auto const& c : classes) shape.emplace_back(c.representative.order(), c.class_size);
  EXPECT_EQ(shape, (std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 1}, {2, 3}, {3, 1}, {6, 1}}));
  expect_lattice_matches(symmetric_group(3));
}

TEST(LatticeTest, TrivialGroupHasOneClass) {
  EXPECT_EQ(all_subgroup_classes(generate(3, {})).size(), 1u);
}

TEST(LatticeTest, KleinFourGroupHasFiveClasses) {
  auto v = generate({cyc(4, "(1 2)(3 4)"), cyc(4, "(1 3)(2 4)")});
  auto classes = all_subgroup_classes(v);
  EXPECT_EQ(classes.size(), 5u);
  EXPECT_EQ(total(classes), 5u);
}

TEST(LatticeTest, SmallGroupsAgreeWithExhaustiveScan) {
  expect_lattice_matches(symmetric_group(4));
  expect_lattice_matches(alternating_group(4));
  expect_lattice_matches(dihedral_group(6));
  expect_lattice_matches(dicyclic_group(3));
  expect_lattice_matches(alternating_group(5));
}

TEST(LatticeTest, RefusesGroupsAboveTheCap) {
  try {
    all_subgroup_classes(symmetric_group(6), 100);
    FAIL() << "expected GroupTooLarge";
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroupTooLarge);
  }
}

TEST(LatticeTest, ConjugacyOfSubgroups) {
  auto s3 = symmetric_group(3);
  SubgroupHandle h(s3, {cyc(3, "(1 2)")});
  SubgroupHandle k(s3, {cyc(3, "(2 3)")});
  auto g = are_conjugate(s3, h, k);
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(oracle::conjugate_set(naive(h.group()), *g), naive(k.group()));
  auto self = are_conjugate(s3, h, h);
  ASSERT_TRUE(self.has_value());

  auto s4 = symmetric_group(4);
  SubgroupHandle t(s4, {cyc(4, "(1 2)")});
  SubgroupHandle d(s4, {cyc(4, "(1 2)(3 4)")});
  EXPECT_FALSE(are_conjugate(s4, t, d).has_value());
  EXPECT_FALSE(oracle::conjugate(naive(s4), naive(t.group()), naive(d.group())));
}

TEST(LatticeTest, MinimalNormalSubgroups) {
  auto mins = minimal_normal_subgroups(symmetric_group(4));
  ASSERT_EQ(mins.size(), 1u);
  EXPECT_EQ(mins[0].order(), 4u);

  auto a5 = alternating_group(5);
  auto pair = direct_product(a5, a5);
  auto two = minimal_normal_subgroups(pair);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].order(), 60u);
  EXPECT_EQ(two[1].order(), 60u);

  auto simple = minimal_normal_subgroups(a5);
  ASSERT_EQ(simple.size(), 1u);
  EXPECT_EQ(simple[0].order(), 60u);
}

TEST(LatticeTest, NormalSubgroupsAgreeWithScan) {
  for (auto const& g : {symmetric_group(4), dihedral_group(6), dicyclic_group(4)}) {
    auto elements = naive(g);
    std::size_t expected = 0;
    for (auto const& h : oracle::subgroups(elements)) expected += oracle::is_normal(elements, h);
    EXPECT_EQ(normal_subgroups(g).size(), expected);
  }
}

TEST(LatticeTest, DirectFactorDecomposition) {
  auto s5 = symmetric_group(5);
  auto a5 = SubgroupHandle(s5, alternating_group(5));
  EXPECT_EQ(decompose_direct_factors(a5).size(), 1u);

  auto w = wreath_product(alternating_group(5), cyclic_group(2));
  auto b = SubgroupHandle(w, derived_subgroup(w).group());
  ASSERT_EQ(b.order(), 3600u);
  auto factors = decompose_direct_factors(b);
  ASSERT_EQ(factors.size(), 2u);
  for (auto const& t : factors) EXPECT_EQ(t.order(), 60u);

  auto s4 = symmetric_group(4);
  auto v = minimal_normal_subgroups(s4).front();
  try {
    decompose_direct_factors(v);
    FAIL() << "expected AbelianFactor";
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::AbelianFactor);
  }
}

TEST(LatticeTest, OvergroupsOfSylowInSym4) {
  auto s4 = symmetric_group(4);
  auto d8 = SubgroupHandle(s4, {cyc(4, "(1 2 3 4)"), cyc(4, "(1 3)")});
  auto result = overgroups(s4, d8);
  EXPECT_TRUE(result.complete);
  EXPECT_EQ(result.overgroups.size(), 2u);
}

TEST(CompositionTest, Sym4Factors) {
  auto series = composition_series(symmetric_group(4));
  std::vector<std::string> labels;
  for (auto const& f : series.factors) labels.push_back(f.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"C_2", "C_3", "C_2", "C_2"}));
  EXPECT_EQ(series.terms.front().order(), 24u);
  EXPECT_EQ(series.terms.back().order(), 1u);
}

TEST(CompositionTest, SimpleGroupsAreLabelled) {
  auto a5 = composition_series(alternating_group(5));
  ASSERT_EQ(a5.factors.size(), 1u);
  EXPECT_EQ(a5.factors[0].label, "Alt_5");
  EXPECT_EQ(a5.factors[0].order, 60u);
  EXPECT_FALSE(a5.factors[0].abelian);
  auto psl27 = generate({cyc(7, "(1 2 3 4 5 6 7)"), cyc(7, "(1 2)(3 6)")});
  ASSERT_EQ(psl27.order(), 168u);
  EXPECT_EQ(identify_simple(psl27), "PSL(2,7)");
  EXPECT_EQ(identify_simple(alternating_group(6)), "Alt_6");
}

TEST(CompositionTest, TrivialGroupHasNoFactors) {
  EXPECT_TRUE(composition_series(generate(2, {})).factors.empty());
}

TEST(CompositionTest, LeastAndGreatestSeriesAgree) {
  for (auto const& g : {symmetric_group(4), symmetric_group(5), dihedral_group(12),
                        direct_product(alternating_group(5), cyclic_group(6))}) {
    auto labels = [](CompositionSeries const& s) {
      std::vector<std::string> out;
      for (auto const& f : s.factors) out.push_back(f.label);
      std::sort(out.begin(), out.end());
      return out;
    };
    EXPECT_EQ(labels(composition_series(g, SeriesChoice::least)),
              labels(composition_series(g, SeriesChoice::greatest)));
  }
}
