#include <gtest/gtest.h>

#include "carter/error.hpp"
#include "carter/families.hpp"
#include "carter/kernel.hpp"
#include "carter/lattice.hpp"
#include "carter/lemmas.hpp"
#include "carter/sections.hpp"
#include "carter/wreath.hpp"
#include "support/oracles.hpp"

using namespace carter;

namespace {

Permutation cyc(std::size_t degree, std::string_view text) { return Permutation::parse(text, degree); }

SubgroupHandle d8_in(FiniteGroup const& s4) {
  return SubgroupHandle(s4, {cyc(4, "(1 2 3 4)"), cyc(4, "(1 3)")});
}

template <typename F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(QuotientImageTest, Sym4ModKlein) {
  auto s4 = symmetric_group(4);
  auto v = SubgroupHandle(s4, {cyc(4, "(1 2)(3 4)"), cyc(4, "(1 3)(2 4)")});
  EXPECT_TRUE(verify_quotient_image(s4, d8_in(s4), v));
  // Image in S4/V4 computed by hand: D8 V4 / V4 has order 2 and is its own
  // normalizer in the quotient of order 6.
  auto q = quotient(s4, v);
  EXPECT_EQ(q.image_of(d8_in(s4).group()).order(), 2u);
}

TEST(QuotientImageTest, Preconditions) {
  auto s4 = symmetric_group(4);
  auto v = SubgroupHandle(s4, {cyc(4, "(1 2)(3 4)"), cyc(4, "(1 3)(2 4)")});
  expect_error(ErrorCode::NotCarter, [&] { verify_quotient_image(s4, v, v); });
  auto t = SubgroupHandle(s4, {cyc(4, "(1 2)")});
  expect_error(ErrorCode::NotNormal, [&] { verify_quotient_image(s4, d8_in(s4), t); });
}

TEST(QuotientImageTest, EveryNormalSubgroupOfSmallSolubleGroups) {
  for (auto const& g : {symmetric_group(4), dihedral_group(12), dicyclic_group(6)}) {
    auto r = run_lemma1(g);
    EXPECT_TRUE(r.star);
    EXPECT_FALSE(r.checks.empty());
    EXPECT_EQ(r.failures, 0u);
  }
}

TEST(Lemma5Test, Sym4WithCentralInvolution) {
  auto s4 = symmetric_group(4);
  auto r = verify_lemma5(s4, d8_in(s4), cyc(4, "(1 3)(2 4)"));
  EXPECT_TRUE(r.overgroups_self_normalizing);
  EXPECT_TRUE(r.conjugates_in_ZK);
  EXPECT_TRUE(r.center_meeting_other_carter);
  EXPECT_TRUE(r.power_conjugacy);
  EXPECT_TRUE(r.overgroups_complete);
  EXPECT_EQ(r.class_size, 3u);
}

TEST(Lemma5Test, NilpotentGroupIsItsOwnCarterSubgroup) {
  auto d = dihedral_group(4);
  auto whole = SubgroupHandle::whole(d);
  auto z = center(d).generators().front();
  EXPECT_TRUE(verify_lemma5(d, whole, z).all());
}

TEST(Lemma5Test, Sym3WithTransposition) {
  auto s3 = symmetric_group(3);
  auto r = verify_lemma5(s3, SubgroupHandle(s3, {cyc(3, "(1 2)")}), cyc(3, "(1 2)"));
  EXPECT_TRUE(r.all());
}

TEST(Lemma5Test, Preconditions) {
  auto s4 = symmetric_group(4);
  expect_error(ErrorCode::NotCentral, [&] { verify_lemma5(s4, d8_in(s4), cyc(4, "(1 2 3 4)")); });
  auto v = SubgroupHandle(s4, {cyc(4, "(1 2)(3 4)"), cyc(4, "(1 3)(2 4)")});
  expect_error(ErrorCode::NotCarter, [&] { verify_lemma5(s4, v, cyc(4, "(1 2)(3 4)")); });
}

TEST(Lemma5Test, ConjugatesOfTheCentralElementAgainstScan) {
  // Conclusion (2) by direct enumeration: the only G-conjugate of z lying
  // in Z(K) is z itself.
  auto s4 = symmetric_group(4);
  auto elements = oracle::closure(4, s4.generators());
  auto zk = oracle::center(oracle::closure(4, d8_in(s4).generators()));
  auto z = cyc(4, "(1 3)(2 4)");
  std::size_t inside = 0;
  for (auto const& x : elements) inside += oracle::contains(zk, z.conjugate_by(x)) ? 1 : 0;
  EXPECT_EQ(inside, oracle::centralizer(elements, z).size());
}

TEST(Lemma5Test, RunOverAllCarterClasses) {
  auto summary = run_lemma5(symmetric_group(4));
  EXPECT_FALSE(summary.runs.empty());
  EXPECT_EQ(summary.failures, 0u);
}

TEST(Lemma3Test, Sym5WithSingleFactor) {
  auto s5 = symmetric_group(5);
  auto sylow = SubgroupHandle(s5, {cyc(5, "(1 2 3 4)"), cyc(5, "(1 3)")});
  auto b = SubgroupHandle(s5, alternating_group(5));
  auto r = verify_lemma3(s5, sylow, b);
  EXPECT_EQ(r.k, 1u);
  EXPECT_TRUE(r.claim);
  EXPECT_TRUE(r.h1_carter);
  EXPECT_EQ(r.aut_h_order, 8u);
  EXPECT_EQ(r.induced_order, 120u);
}

TEST(Lemma3Test, SingleFactorHasNoBlockSystem) {
  auto s5 = symmetric_group(5);
  auto sylow = SubgroupHandle(s5, {cyc(5, "(1 2 3 4)"), cyc(5, "(1 3)")});
  auto b = SubgroupHandle(s5, alternating_group(5));
  expect_error(ErrorCode::NoBlockSystem, [&] { build_wreath_embedding(s5, sylow, b); });
}

TEST(Lemma3Test, HypothesisGEqualsHB) {
  auto s5 = symmetric_group(5);
  auto small = SubgroupHandle(s5, {cyc(5, "(1 2)")});
  auto b = SubgroupHandle(s5, alternating_group(5));
  EXPECT_THROW(verify_lemma3(s5, small, b), Error);
}
