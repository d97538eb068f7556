#include "godeaux/subring.hpp"

#include "godeaux/group_action.hpp"
#include "godeaux/scenarios.hpp"

#include <gtest/gtest.h>

#include <random>

namespace godeaux {
namespace {

const MembershipPredicate& sc() {
  static const MembershipPredicate pred = sc_predicate();
  return pred;
}

Polynomial abc(std::string_view text) { return parse_polynomial(text, sc_data().desc); }

TEST(SubspaceBasis, SpecExamples) {
  EXPECT_TRUE(subspace_basis(sc(), 1).empty());
  auto v2 = subspace_basis(sc(), 2);
  EXPECT_EQ(v2.size(), 2u);
  EXPECT_TRUE(is_member(sc(), abc("a*b")));
  EXPECT_TRUE(is_member(sc(), abc("3*a^2+3*b^2+c^2")));
  EXPECT_EQ(subspace_basis(sc(), 5).size(), 11u);
}

// V_1 by hand: g = pa + qb + rc. Condition (b) at degree 1 forces r = 0.
// sigma1(g) = pa and sigma2(g) = -q(a+c)/2; with sign -1: pa = q(a+c)/2, so p = q = 0.
TEST(SubspaceBasis, DegreeOneByHand) {
  for (const char* g : {"a", "b", "c", "a+b", "a-b"}) EXPECT_FALSE(is_member(sc(), abc(g))) << g;
}

TEST(SubspaceBasis, Dimensions) {
  for (int m = 0; m <= 9; ++m) EXPECT_EQ(subspace_basis(sc(), m).size(), oracle_plurigenus(m)) << m;
}

TEST(SubspaceBasis, SquaredVariableFails) {
  // a^2: sigma1 gives a^2, sigma2 gives 0
  Polynomial a2 = abc("a^2");
  EXPECT_NE(substitute(a2, sc_data().sigma1), substitute(a2, sc_data().sigma2));
  EXPECT_FALSE(is_member(sc(), a2));
}

TEST(MinimalGenerators, ScDegrees) {
  auto gens = minimal_generators(sc(), 10);
  std::map<int, int> census;
  for (const auto& g : gens) ++census[g.degree];
  EXPECT_EQ(census, (std::map<int, int>{{2, 2}, {3, 4}, {4, 4}, {5, 3}}));
  for (std::size_t i = 1; i < gens.size(); ++i) EXPECT_LE(gens[i - 1].degree, gens[i].degree);
  for (const auto& g : gens) {
    EXPECT_TRUE(is_member(sc(), g.poly));
    EXPECT_GT(g.poly.leading_coefficient().rational_value(), Rational(0));
    for (const auto& [m, c] : g.poly.terms()) EXPECT_TRUE(c.rational_value().is_integer());
  }
}

TEST(MinimalGenerators, SingleWeightZeroVariable) {
  auto x = make_descriptor({{"x", 1, 0}});
  MembershipPredicate pred(x);
  pred.add(WeightCondition{0});
  auto gens = minimal_generators(pred, 5);
  ASSERT_EQ(gens.size(), 1u);
  EXPECT_EQ(gens[0].poly, Polynomial::variable(x, "x"));
}

TEST(MinimalGenerators, InvariantsOfQuintic) {
  const auto& z5 = z5_data();
  MembershipPredicate pred(z5.desc, {z5.q});
  pred.add(WeightCondition{0});
  auto gens = minimal_generators(pred, 4);
  std::map<int, std::size_t> census;
  for (const auto& g : gens) ++census[g.degree];
  EXPECT_EQ(census.count(1), 0u);
  // V_2 = 2, V_3 = 4 with no products below 4; V_4 = 7 minus the 3 products of degree-2 generators
  EXPECT_EQ(census[2], 2u);
  EXPECT_EQ(census[3], 4u);
  EXPECT_EQ(census[4], 7u - 3u);
}

TEST(Presentation, FreeRing) {
  auto r = sc_data().desc;
  MembershipPredicate pred(r);
  auto pres = presentation(pred, 6);
  ASSERT_EQ(pres.generators.size(), 3u);
  EXPECT_EQ(pres.relation_count(), 0u);
  std::vector<std::string> names;
  for (const auto& g : pres.generators) names.push_back(render_polynomial(g.poly));
  EXPECT_EQ(names, (std::vector<std::string>{"a", "b", "c"}));
}

TEST(Presentation, Z4WeightZeroLowDegrees) {
  MembershipPredicate pred(z4_ring());
  pred.add(WeightCondition{0});
  auto pres = presentation(pred, 4);
  for (int m = 0; m <= 3; ++m) EXPECT_EQ(pres.census.at(m), 0u);
}

TEST(Presentation, ScCensusAndVanishing) {
  auto pres = presentation(sc(), 10);
  std::map<int, std::size_t> nonzero;
  for (const auto& [m, c] : pres.census)
    if (c) nonzero[m] = c;
  EXPECT_EQ(nonzero, (std::map<int, std::size_t>{{6, 6}, {7, 12}, {8, 18}, {9, 12}, {10, 6}}));
  EXPECT_EQ(pres.relation_count(), 54u);
  for (const auto& r : pres.relations) EXPECT_TRUE(evaluate_in_ambient(sc(), pres, r).is_zero());
  EXPECT_TRUE(pres.warning);  // relations still appear at the top degree
}

TEST(Presentation, TruncationWarning) {
  auto pres = presentation(sc(), 4);
  ASSERT_TRUE(pres.warning);
  EXPECT_EQ(*pres.warning, "census may be truncated");
}

TEST(VerifyGeneratorList, PublishedListPasses) {
  auto report = verify_generator_list(sc(), sc_data().claimed, 10);
  EXPECT_TRUE(report.all_members());
  EXPECT_TRUE(report.generates());
}

TEST(VerifyGeneratorList, ReplacementFailsAtDegreeTwo) {
  auto claimed = sc_data().claimed;
  claimed[1] = abc("a^2");
  auto report = verify_generator_list(sc(), claimed, 4);
  EXPECT_FALSE(report.members[1].member);
  EXPECT_TRUE(report.members[0].member);
  EXPECT_FALSE(report.degrees[1].ok);
  EXPECT_EQ(report.degrees[1].degree, 2);
}

TEST(VerifyGeneratorList, EmptyListFailsAtDegreeTwo) {
  auto report = verify_generator_list(sc(), {}, 2);
  ASSERT_EQ(report.degrees.size(), 2u);
  EXPECT_TRUE(report.degrees[0].ok);
  EXPECT_FALSE(report.degrees[1].ok);
}

TEST(SubringProperty, MultiplicativeClosure) {
  std::mt19937_64 gen(99);
  for (int i = 2; i <= 5; ++i)
    for (int j = i; i + j <= 10; ++j) {
      auto bi = subspace_basis(sc(), i), bj = subspace_basis(sc(), j);
      Polynomial p(sc().ambient()), q(sc().ambient());
      for (const auto& b : bi) p += b * Scalar(static_cast<long>(gen() % 41) - 20);
      for (const auto& b : bj) q += b * Scalar(static_cast<long>(gen() % 41) - 20);
      EXPECT_TRUE(is_member(sc(), p * q)) << i << "+" << j;
    }
}

TEST(SubringProperty, Deterministic) {
  auto a = minimal_generators(sc(), 6);
  auto b = minimal_generators(sc(), 6);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(render_polynomial(a[i].poly), render_polynomial(b[i].poly));
}

TEST(IntegerPrimitive, ClearsDenominators) {
  EXPECT_EQ(integer_primitive(abc("-1/2*a + 3/4*b")), abc("2*a - 3*b"));
  EXPECT_EQ(integer_primitive(abc("6*a^2 + 4*b*c")), abc("3*a^2 + 2*b*c"));
}

}  // namespace
}  // namespace godeaux
