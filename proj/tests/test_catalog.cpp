#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "carter/catalog.hpp"
#include "carter/error.hpp"
#include "support/corpus.hpp"

using namespace carter;

namespace {

std::string trim(std::string s) {
  auto const first = s.find_first_not_of(' ');
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(' ') - first + 1);
}

std::string condition_name(Condition c) {
  switch (c) {
    case Condition::none: return "none";
    case Condition::two_group_or_index_le_2: return "two_group_or_index_le_2";
    case Condition::A_equals_G: return "A_equals_G";
    case Condition::between_G_and_Ghat: return "between_G_and_Ghat";
  }
  return "?";
}

std::vector<std::string> fixture_rows() {
  std::ifstream in(testing_support::fixture_path("catalog_rows.txt"));
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream fields(line);
    std::string field;
    std::string row;
    while (std::getline(fields, field, '|')) row += trim(field) + "|";
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST(CatalogTest, TableMatchesFixtureRowForRow) {
  std::vector<std::string> rows;
  for (auto const& e : catalog_entries()) {
    rows.push_back(std::to_string(e.block) + "|" + e.row + "|" + e.parameter_constraints + "|" +
                   condition_name(e.condition) + "|");
  }
  auto expected = fixture_rows();
  ASSERT_EQ(expected.size(), 29u);
  EXPECT_EQ(rows, expected);
}

TEST(CatalogTest, AlternatingIsAlwaysConjugate) {
  auto r = catalog_lookup(Family::alternating, {}, {});
  EXPECT_EQ(r.verdict, Verdict::conjugate);
  EXPECT_EQ(r.citation, "alternating");
  EXPECT_EQ(r.condition, "none");
}

TEST(CatalogTest, E6RequiresAEqualsG) {
  ExtensionDescriptor proper;
  proper.a_equals_g = false;
  auto r = catalog_lookup(Family::E6, {1, 2, 1}, proper);
  EXPECT_EQ(r.verdict, Verdict::not_guaranteed);
  EXPECT_EQ(r.citation, "E_6(r^t)");

  ExtensionDescriptor equal;
  equal.a_equals_g = true;
  EXPECT_EQ(catalog_lookup(Family::E6, {1, 2, 1}, equal).verdict, Verdict::conjugate);
  EXPECT_EQ(catalog_lookup(Family::E6, {1, 2, 1}, {}).verdict, Verdict::conditional);
}

TEST(CatalogTest, LinearGroupsBetweenGAndGhat) {
  ExtensionDescriptor x;
  x.a_within_ghat = true;
  auto r = catalog_lookup(Family::A, {3, 5, 2}, x);
  EXPECT_EQ(r.verdict, Verdict::conjugate);
  EXPECT_EQ(r.citation, "A_l(r^t)");
  // l = 1 is not covered by this row.
  EXPECT_EQ(catalog_lookup(Family::A, {1, 5, 2}, x).verdict, Verdict::not_guaranteed);
}

TEST(CatalogTest, CharacteristicThreeNeedsEvenExponent) {
  EXPECT_EQ(catalog_lookup(Family::A1, {1, 3, 2}, {}).verdict, Verdict::conjugate);
  EXPECT_EQ(catalog_lookup(Family::A1, {1, 3, 1}, {}).verdict, Verdict::not_guaranteed);
  // B_l(3^t) with t odd falls back to the A = G row.
  ExtensionDescriptor equal;
  equal.a_equals_g = true;
  auto r = catalog_lookup(Family::B, {2, 3, 1}, equal);
  EXPECT_EQ(r.verdict, Verdict::conjugate);
  EXPECT_EQ(r.citation, "B_l(3^t)");
}

TEST(CatalogTest, ExceptionalPrimesForE7AndE8) {
  EXPECT_EQ(catalog_lookup(Family::E7, {1, 2, 1}, {}).verdict, Verdict::conjugate);
  auto e7 = catalog_lookup(Family::E7, {1, 3, 1}, {});
  EXPECT_EQ(e7.verdict, Verdict::conditional);
  EXPECT_EQ(e7.citation, "E_7(3^t)");
  EXPECT_EQ(catalog_lookup(Family::E8, {1, 5, 1}, {}).citation, "E_8(5^t)");
}

TEST(CatalogTest, D4PredicateIsKeptUnevaluated) {
  ExtensionDescriptor two;
  two.outer_part_is_two_group = true;
  auto d4 = catalog_lookup(Family::D_even, {2, 2, 1}, two);
  EXPECT_EQ(d4.verdict, Verdict::conditional);
  EXPECT_NE(d4.unevaluated.find("Field(G)"), std::string::npos);
  auto d8 = catalog_lookup(Family::D_even, {4, 2, 1}, two);
  EXPECT_EQ(d8.verdict, Verdict::conjugate);
  EXPECT_TRUE(d8.unevaluated.empty());
}

TEST(CatalogTest, IndexAtMostTwo) {
  ExtensionDescriptor x;
  x.outer_part_is_two_group = false;
  x.index_in_ghat = 2;
  EXPECT_EQ(catalog_lookup(Family::triality_D4, {1, 2, 1}, x).verdict, Verdict::conjugate);
  x.index_in_ghat = 3;
  EXPECT_EQ(catalog_lookup(Family::triality_D4, {1, 2, 1}, x).verdict, Verdict::not_guaranteed);
}

TEST(CatalogTest, LookupIsTotalOverFamilies) {
  for (auto name : {"alternating", "sporadic", "A1", "Bl", "Cl", "2B2", "G2", "F4", "2F4", "E7",
                    "E8", "D2l", "3D4", "2D2l", "D2l+1", "2D2l+1", "2G2", "E6", "2E6", "Al",
                    "2Al"}) {
    auto f = parse_family(name);
    EXPECT_EQ(to_string(f), name);
    FamilyParameters p{2, f == Family::twisted_G2 ? 3u : 2u, 1};
    EXPECT_NO_THROW(catalog_lookup(f, p, {})) << name;
  }
  try {
    parse_family("H4");
    FAIL() << "expected UnknownFamily";
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownFamily);
  }
}

TEST(CatalogTest, RejectsImpossibleParameters) {
  EXPECT_THROW(catalog_lookup(Family::G2, {1, 4, 1}, {}), Error);
  EXPECT_THROW(catalog_lookup(Family::twisted_B2, {1, 2, 2}, {}), Error);
}
