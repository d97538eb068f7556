#include "godeaux/group_action.hpp"

#include "godeaux/scenarios.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

namespace godeaux {
namespace {

// Brute-force count of exponent vectors of degree m and weight w.
std::size_t count_monomials(const std::vector<int>& degrees, const std::vector<int>& weights, int d, int m, int w) {
  std::size_t n = 0;
  std::vector<int> e(degrees.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == degrees.size()) {
      if (left != 0) return;
      int wt = 0;
      for (std::size_t k = 0; k < e.size(); ++k) wt += e[k] * weights[k];
      n += ((wt % d) + d) % d == w;
      return;
    }
    for (e[i] = 0; e[i] * degrees[i] <= left; ++e[i]) rec(i + 1, left - e[i] * degrees[i]);
    e[i] = 0;
  };
  rec(0, m);
  return n;
}

TEST(Act, SpecExamples) {
  const auto& z5 = z5_data();
  CyclicAction g(5);
  EXPECT_EQ(act(g, 1, z5.q), z5.q);
  EXPECT_EQ(act(g, 1, Polynomial::variable(z5.desc, "x1")),
            Polynomial::variable(z5.desc, "x1") * Scalar::root_of_unity(5));
  EXPECT_EQ(act(g, 0, z5.planes[2]), z5.planes[2]);
  // the planes are permuted cyclically, which is why q is fixed
  for (int k = 0; k < 5; ++k) EXPECT_EQ(act(g, 1, z5.planes[k]), z5.planes[(k + 1) % 5]);
}

TEST(WeightOf, SpecExamples) {
  const auto& z5 = z5_data();
  EXPECT_EQ(weight_of(CyclicAction(5), z5.q), 0);
  const auto& z3 = z3_data();
  EXPECT_EQ(weight_of(CyclicAction(3), parse_polynomial("x2^2*y1", z3.numeric)), 2);
  EXPECT_EQ(weight_of(CyclicAction(5), parse_polynomial("x1 + x2", z5.desc)), std::nullopt);
}

TEST(WeightSpaceDim, SpecExamples) {
  const auto& z5 = z5_data();
  EXPECT_EQ(weight_space_dim(*z5.desc, 1, 0), 0u);
  EXPECT_EQ(weight_space_dim(*z5.desc, 5, 0), count_monomials({1, 1, 1, 1}, {1, 2, 3, 4}, 5, 5, 0));
  EXPECT_EQ(weight_space_dim(*z5.desc, 5, 0), 12u);
  auto z4 = z4_ring();
  std::vector<std::size_t> m1;
  for (int w = 0; w < 4; ++w) m1.push_back(weight_space_dim(*z4, 1, w));
  EXPECT_EQ(m1, (std::vector<std::size_t>{0, 1, 1, 1}));
  for (int m = 0; m <= 12; ++m)
    for (int w = 0; w < 4; ++w)
      EXPECT_EQ(weight_space_dim(*z4, m, w), count_monomials({1, 1, 1, 2, 2}, {1, 2, 3, 1, 3}, 4, m, w));
}

TEST(WeightSpaceDim, SumsToTotal) {
  const auto& z3 = z3_data();
  for (int m = 0; m <= 10; ++m) {
    std::size_t s = 0;
    for (int w = 0; w < 3; ++w) s += weight_space_dim(*z3.numeric, m, w);
    EXPECT_EQ(s, enumerate_monomials(*z3.numeric, m).size());
  }
}

TEST(ProjectToWeight, KeepsMatchingTerms) {
  const auto& z3 = z3_data();
  auto p = parse_polynomial("x2^2*y1 + y0*y2 + x2^4 + y0", z3.numeric);
  EXPECT_EQ(project_to_weight(p, 2), parse_polynomial("x2^2*y1 + y0*y2 + x2^4", z3.numeric));
  EXPECT_EQ(project_to_weight(p, 0), parse_polynomial("y0", z3.numeric));
}

TEST(ActProperty, HomomorphismAndOrder) {
  const auto& z5 = z5_data();
  CyclicAction g(5);
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial p(z5.desc), q(z5.desc);
    for (const auto& mon : enumerate_monomials(*z5.desc, 2))
      if (gen() % 2) p.add_term(mon, Scalar::root_of_unity(5, static_cast<long>(gen() % 5)));
    for (const auto& mon : enumerate_monomials(*z5.desc, 1))
      q.add_term(mon, Scalar(static_cast<long>(gen() % 7) - 3).embed(5));
    long k = static_cast<long>(gen() % 5);
    EXPECT_EQ(act(g, k, p * q), act(g, k, p) * act(g, k, q));
    EXPECT_EQ(act(g, 5, p), p);
    EXPECT_EQ(act(g, 2, act(g, 3, p)), p);
  }
}

TEST(ActProperty, RelationWeightsAreSingle) {
  const auto& z3 = z3_data();
  for (const auto& r : z3.relations) EXPECT_TRUE(weight_of(CyclicAction(3), r.poly)) << r.name;
  auto s = z4_sample(42);
  EXPECT_EQ(weight_of(CyclicAction(4), s.q1), 0);
  EXPECT_EQ(weight_of(CyclicAction(4), s.q2), 2);
}

}  // namespace
}  // namespace godeaux
