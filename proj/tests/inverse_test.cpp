#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "centrosym/errors.hpp"
#include "centrosym/inverse.hpp"
#include "centrosym/product.hpp"
#include "centrosym/structure.hpp"

using namespace centro;

namespace {

DenseTensor diagonal(std::size_t order, const std::vector<double>& d) {
  const std::size_t n = d.size();
  DenseTensor shape(order, n);
  std::vector<double> e(shape.size(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<std::size_t> idx(order, i);
    e[shape.offset_of(idx)] = d[i];
  }
  return DenseTensor(order, n, std::move(e));
}

// Diagonally dominant centro matrix, so well conditioned.
DenseTensor well_conditioned_centro(std::size_t n, std::uint64_t seed) {
  return add(random_structured(2, n, Kind::centro, seed),
             scale(DenseTensor::identity(2, n), static_cast<double>(n) + 1.0));
}

DenseTensor eigen_inverse(const DenseTensor& c) {
  const std::size_t n = c.dim();
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = c[i * n + j];
  const Eigen::MatrixXd inv = m.inverse();
  std::vector<double> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = inv(i, j);
  return DenseTensor(2, n, std::move(e));
}

}  // namespace

TEST(VerifyInverse, Orientation) {
  EXPECT_EQ(verify_inverse(DenseTensor::identity(2, 3), DenseTensor::identity(2, 3), Side::left), 0.0);
  const auto a = DenseTensor::matrix({{2, 0}, {0, 4}});
  const auto b = DenseTensor::matrix({{0.5, 0}, {0, 0.25}});
  EXPECT_EQ(verify_inverse(a, b, Side::left), 0.0);
  EXPECT_EQ(verify_inverse(a, b, Side::right), 0.0);
  // Left and right differ for a non-commuting pair.
  const auto c = DenseTensor::matrix({{1, 1}, {0, 1}});
  const auto wrong = DenseTensor::matrix({{1, 0}, {-1, 1}});
  EXPECT_GT(verify_inverse(c, wrong, Side::left), 0.5);
  EXPECT_GT(verify_inverse(DenseTensor::matrix({{0.3, 0.1}, {0.7, 0.2}}),
                           DenseTensor::matrix({{0.5, 0.9}, {0.4, 0.6}}), Side::left),
            0.1);
  EXPECT_THROW(verify_inverse(a, DenseTensor::identity(2, 3), Side::left), InputError);
}

TEST(DiagonalLeftInverse, Examples) {
  const auto a = diagonal(3, {2, 2});
  const auto r = diagonal_left_inverse(a, 2);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(*r.inverse, DenseTensor::matrix({{0.5, 0}, {0, 0.5}}));
  EXPECT_EQ(r.residual, 0.0);
  EXPECT_TRUE(r.centro_verdict);
  EXPECT_EQ(r.side, Side::left);

  for (std::size_t k = 2; k <= 4; ++k) {
    const auto id = diagonal_left_inverse(DenseTensor::identity(3, 3), k);
    EXPECT_EQ(*id.inverse, DenseTensor::identity(k, 3));
  }
}

TEST(DiagonalLeftInverse, Errors) {
  try {
    diagonal_left_inverse(diagonal(3, {2, 0, 2}), 2);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("entry 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(diagonal_left_inverse(DenseTensor::matrix({{1, 1}, {1, 1}}), 2), InputError);
  EXPECT_THROW(diagonal_left_inverse(diagonal(2, {1, 2}), 2), InputError);
  EXPECT_THROW(diagonal_left_inverse(diagonal(2, {1, 1}), 1), InputError);
}

TEST(DiagonalRightInverse, Examples) {
  const auto r = diagonal_right_inverse(diagonal(4, {16, 16}), 2);
  ASSERT_TRUE(r.found());
  EXPECT_NEAR((*r.inverse)[0], 0.3968502630, 1e-10);
  EXPECT_NEAR((*r.inverse)[3], 0.3968502630, 1e-10);
  EXPECT_LE(r.residual, 1e-12);
  EXPECT_TRUE(r.centro_verdict);

  // Even order: negative entries take the real odd root.
  const auto neg = diagonal_right_inverse(diagonal(4, {-8, 1, -8}), 3);
  EXPECT_NEAR((*neg.inverse)[0], -0.5, 1e-15);
  EXPECT_LE(neg.residual, 1e-13);

  EXPECT_EQ(*diagonal_right_inverse(DenseTensor::identity(3, 2), 2).inverse,
            DenseTensor::identity(2, 2));
}

TEST(DiagonalRightInverse, Errors) {
  EXPECT_THROW(diagonal_right_inverse(diagonal(3, {-1, -1}), 2), DomainError);
  EXPECT_THROW(diagonal_right_inverse(diagonal(4, {0, 0}), 2), DomainError);
  EXPECT_THROW(diagonal_right_inverse(diagonal(3, {1, 2}), 2), InputError);
}

TEST(DiagonalInverse, RoundTrips) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.5, 4.0);
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t k = 2; k <= 3; ++k)
      for (std::size_t n = 2; n <= 4; ++n) {
        std::vector<double> d(n);
        for (std::size_t i = 0; i < (n + 1) / 2; ++i) d[i] = d[n - 1 - i] = u(rng);
        const auto a = diagonal(m, d);
        EXPECT_LE(diagonal_left_inverse(a, k).residual, 1e-13);
        EXPECT_LE(diagonal_right_inverse(a, k).residual, 1e-13);
      }
}

TEST(RecoverLeft, Identity) {
  for (std::size_t m = 2; m <= 4; ++m) {
    const auto r = recover_order2_left_inverse(DenseTensor::identity(m, 3));
    ASSERT_TRUE(r.found());
    EXPECT_EQ(*r.inverse, DenseTensor::identity(2, 3));
    EXPECT_EQ(r.residual, 0.0);
    ASSERT_TRUE(r.condition.has_value());
  }
}

TEST(RecoverLeft, PlantedInverse) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 3, m = 2 + seed % 3;
    const auto c = well_conditioned_centro(n, seed);
    const auto a = shao_product(c, DenseTensor::identity(m, n));
    const auto r = recover_order2_left_inverse(a);
    ASSERT_TRUE(r.found()) << r.diagnostic;
    EXPECT_LE(max_abs_diff(*r.inverse, eigen_inverse(c)), 1e-9);
    EXPECT_TRUE(r.centro_verdict);
  }
}

TEST(RecoverLeft, NoInverseReports) {
  const auto a = random_structured(3, 3, Kind::centro, 42);
  const auto r = recover_order2_left_inverse(a);
  EXPECT_FALSE(r.found());
  EXPECT_NE(r.diagnostic.find("no order-2 left inverse"), std::string::npos) << r.diagnostic;
  EXPECT_TRUE(std::isinf(r.residual) || r.residual > 1e-6);

  const auto singular = recover_order2_left_inverse(DenseTensor::filled(3, 2, 1.0));
  EXPECT_FALSE(singular.found());
  EXPECT_NE(singular.diagnostic.find("singular"), std::string::npos);

  EXPECT_THROW(recover_order2_left_inverse(DenseTensor::matrix({{1, 2}, {3, 4}})), InputError);
}

TEST(RecoverRight, Identity) {
  const auto r = recover_order2_right_inverse(DenseTensor::identity(4, 3));
  ASSERT_TRUE(r.found());
  EXPECT_EQ(*r.inverse, DenseTensor::identity(2, 3));
}

TEST(RecoverRight, PlantedInverse) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 3, m = seed % 2 ? 4 : 2;
    const auto c = well_conditioned_centro(n, seed + 500);
    const auto a = shao_product(DenseTensor::identity(m, n), eigen_inverse(c));
    const auto r = recover_order2_right_inverse(a);
    ASSERT_TRUE(r.found()) << r.diagnostic;
    EXPECT_LE(max_abs_diff(*r.inverse, c), 1e-9);
    EXPECT_LE(r.residual, 1e-9);
    EXPECT_TRUE(r.centro_verdict);
  }
}

TEST(RecoverRight, Errors) {
  EXPECT_THROW(recover_order2_right_inverse(DenseTensor::identity(3, 2)), InputError);
  EXPECT_THROW(recover_order2_right_inverse(DenseTensor::matrix({{1, 2}, {3, 4}})), InputError);
  const auto r = recover_order2_right_inverse(random_structured(4, 3, Kind::centro, 7));
  EXPECT_FALSE(r.found());
}

TEST(RecoveryOptions, ConditionThreshold) {
  const auto a = DenseTensor::matrix({{1.0, 1.0 - 1e-9}, {1.0 - 1e-9, 1.0}});
  EXPECT_TRUE(recover_order2_left_inverse(a).found());
  const auto strict = recover_order2_left_inverse(a, RecoveryOptions{1e6, 1e-10});
  EXPECT_FALSE(strict.found());
  ASSERT_TRUE(strict.condition.has_value());
  EXPECT_GT(*strict.condition, 1e6);
}

TEST(FindInverse, Dispatch) {
  EXPECT_EQ(find_inverse(diagonal(3, {2, 2}), Side::left, 3).order, 3u);
  EXPECT_TRUE(find_inverse(well_conditioned_centro(3, 1), Side::left, 2).found());
  EXPECT_THROW(find_inverse(well_conditioned_centro(3, 1), Side::left, 3), InputError);
}

TEST(RealRoot, OddRoots) {
  EXPECT_EQ(real_root(-8.0, 3), -2.0);
  EXPECT_EQ(real_root(27.0, 3), 3.0);
  EXPECT_EQ(real_root(0.0, 5), 0.0);
}

TEST(Side, Names) {
  EXPECT_EQ(to_string(Side::left), "left");
  EXPECT_EQ(to_string(Side::right), "right");
}
