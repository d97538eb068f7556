#include "godeaux/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

namespace godeaux {
namespace {

Matrix ints(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> rs;
  std::size_t cols = 0;
  for (auto r : rows) {
    Vector v;
    for (long x : r) v.emplace_back(x);
    cols = v.size();
    rs.push_back(std::move(v));
  }
  return Matrix::from_rows(rs, cols);
}

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

TEST(Rref, SpecExamples) {
  auto id = rref(Matrix::identity(3));
  EXPECT_EQ(id.reduced, Matrix::identity(3));
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2}));

  auto r = rref(ints({{1, 2}, {2, 4}}));
  EXPECT_EQ(r.reduced, ints({{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));

  auto empty = rref(Matrix(0, 0));
  EXPECT_EQ(empty.reduced.rows(), 0u);
  EXPECT_TRUE(empty.pivots.empty());
}

TEST(Kernel, SpecExamples) {
  auto k = kernel_basis(ints({{1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], -k[0][1]);
  EXPECT_TRUE(kernel_basis(ints({{1, 2}, {3, 4}})).empty());
  auto k2 = kernel_basis(ints({{1, 2}, {2, 4}}));
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(k2[0][0], Scalar(-2) * k2[0][1]);
}

TEST(Span, SpecExamples) {
  std::vector<Vector> vs{vec({1, 0}), vec({0, 1}), vec({1, 1})};
  EXPECT_EQ(span_dim(vs), 2u);
  std::vector<Vector> one{vec({1, 1})};
  auto c = in_span(vec({2, 2}), one);
  ASSERT_TRUE(c);
  EXPECT_EQ((*c)[0], Scalar(2));
  EXPECT_FALSE(in_span(vec({1, 0}), one));
  std::vector<Vector> bad{vec({1}), vec({1, 2})};
  EXPECT_THROW(span_dim(bad), std::invalid_argument);
}

TEST(Echelon, TrackedRelation) {
  EchelonBasis e(3, 1, true);
  EXPECT_TRUE(e.insert(to_sparse(vec({1, 2, 0}))));
  EXPECT_TRUE(e.insert(to_sparse(vec({0, 1, 1}))));
  SparseVector rel;
  EXPECT_FALSE(e.insert(to_sparse(vec({2, 5, 1})), &rel));
  // 2*(1,2,0) + (0,1,1) = (2,5,1)
  Vector dense = to_dense(rel, 3);
  EXPECT_EQ(dense[2], Scalar(1));
  EXPECT_EQ(dense[0], Scalar(-2));
  EXPECT_EQ(dense[1], Scalar(-1));
}

TEST(Linalg, CyclotomicEntries) {
  Scalar i = Scalar::root_of_unity(4);
  Matrix m(2, 2, 4);
  m(0, 0) = Scalar(1).embed(4);
  m(0, 1) = i;
  m(1, 0) = i;
  m(1, 1) = Scalar(-1).embed(4);  // second row = i * first row
  EXPECT_EQ(rank(m), 1u);
}

Matrix random_matrix(std::mt19937_64& gen, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(static_cast<long>(gen() % 5) - 2);
  return m;
}

TEST(LinalgProperty, RankNullity) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m = random_matrix(gen, gen() % 6, 1 + gen() % 7);
    auto k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.size(), m.cols());
    for (const auto& v : k)
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Scalar s(0);
        for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
        EXPECT_TRUE(s.is_zero());
      }
  }
}

TEST(LinalgProperty, RrefIdempotent) {
  std::mt19937_64 gen(6);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = random_matrix(gen, 1 + gen() % 5, 1 + gen() % 5);
    auto once = rref(m);
    auto twice = rref(once.reduced);
    EXPECT_EQ(once.reduced, twice.reduced);
    EXPECT_EQ(once.pivots, twice.pivots);
  }
}

TEST(LinalgProperty, CertificatesRecombine) {
  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Vector> vs;
    for (int k = 0; k < 3; ++k) {
      Vector v;
      for (int j = 0; j < 4; ++j) v.emplace_back(static_cast<long>(gen() % 5) - 2);
      vs.push_back(v);
    }
    Vector target(4, Scalar(0));
    for (const auto& v : vs) {
      Scalar k(static_cast<long>(gen() % 3));
      for (int j = 0; j < 4; ++j) target[j] += k * v[j];
    }
    auto c = in_span(target, vs);
    ASSERT_TRUE(c);
    Vector back(4, Scalar(0));
    for (std::size_t k = 0; k < vs.size(); ++k)
      for (int j = 0; j < 4; ++j) back[j] += (*c)[k] * vs[k][j];
    EXPECT_EQ(back, target);
  }
}

}  // namespace
}  // namespace godeaux
