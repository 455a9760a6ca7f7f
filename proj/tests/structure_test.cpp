#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "centrosym/cauchy.hpp"
#include "centrosym/errors.hpp"
#include "centrosym/structure.hpp"

using namespace centro;

namespace {

DenseTensor random_tensor(std::size_t order, std::size_t dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> e(checked_power(dim, order));
  for (double& v : e) v = u(rng);
  return DenseTensor(order, dim, std::move(e));
}

const DenseTensor kCentro = DenseTensor::matrix({{2, 1}, {1, 2}});
const DenseTensor kSkew = DenseTensor::matrix({{1, 0}, {0, -1}});
const DenseTensor kNeither = DenseTensor::matrix({{1, 2}, {3, 4}});

}  // namespace

TEST(CheckStructure, Examples) {
  auto r = check_structure(kCentro);
  EXPECT_EQ(r.verdict, Verdict::centrosymmetric);
  EXPECT_EQ(r.max_violation, 0.0);

  EXPECT_EQ(check_structure(kSkew).verdict, Verdict::skew_centrosymmetric);

  r = check_structure(kNeither);
  EXPECT_EQ(r.verdict, Verdict::neither);
  EXPECT_EQ(r.max_violation, 3.0);
  EXPECT_EQ(r.worst_index, (MultiIndex{1, 1}));

  EXPECT_EQ(check_structure(DenseTensor(3, 3)).verdict, Verdict::both);
}

TEST(CheckStructure, DefaultToleranceScales) {
  EXPECT_EQ(default_tolerance(kCentro), 2e-12);
  EXPECT_EQ(default_tolerance(DenseTensor::filled(2, 2, 0.25)), 1e-12);
  EXPECT_EQ(check_structure(kCentro).tolerance_used, 2e-12);
}

TEST(CheckStructure, ExplicitTolerance) {
  const auto a = DenseTensor::matrix({{1.0, 0.0}, {0.0, 1.0 + 1e-6}});
  EXPECT_EQ(check_structure(a).verdict, Verdict::neither);
  EXPECT_EQ(check_structure(a, 1e-5).verdict, Verdict::centrosymmetric);
  EXPECT_THROW(check_structure(a, -1.0), InputError);
}

TEST(CheckStructure, NearZeroIsBoth) {
  const auto tiny = DenseTensor::matrix({{1e-13, 0}, {0, 0}});
  EXPECT_EQ(check_structure(tiny).verdict, Verdict::both);
}

TEST(CheckViaJ, Examples) {
  EXPECT_EQ(check_via_J(DenseTensor::identity(3, 4)).verdict, Verdict::centrosymmetric);
  EXPECT_EQ(check_via_J(kSkew).verdict, Verdict::skew_centrosymmetric);
  EXPECT_EQ(check_via_J(kNeither).verdict, Verdict::neither);
}

TEST(CheckCommutation, Examples) {
  const auto c = materialize(CauchySpec{{1, 2, 1}, 2});
  EXPECT_EQ(check_commutation(c).verdict, Verdict::centrosymmetric);
  EXPECT_EQ(check_commutation(kSkew).verdict, Verdict::skew_centrosymmetric);
  EXPECT_EQ(check_commutation(DenseTensor(2, 3)).verdict, Verdict::both);
}

TEST(Characterization, ThreeRoutesAgree) {
  std::mt19937_64 rng(20150421);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = 2 + trial % 3, n = 2 + (trial / 3) % 4;
    DenseTensor a(1, 1);
    switch (trial % 3) {
      case 0: a = random_structured(m, n, Kind::centro, rng()); break;
      case 1: a = random_structured(m, n, Kind::skew, rng()); break;
      default: a = random_tensor(m, n, rng); break;
    }
    const auto direct = check_structure(a).verdict;
    ASSERT_EQ(check_via_J(a).verdict, direct) << "trial " << trial;
    ASSERT_EQ(check_commutation(a).verdict, direct) << "trial " << trial;
  }
}

TEST(Characterization, OrderOneVectors) {
  const DenseTensor sym(1, 3, {1, 2, 1});
  const DenseTensor skew(1, 2, {1, -1});
  for (auto check : {check_structure, check_via_J, check_commutation}) {
    EXPECT_EQ(check(sym, std::nullopt).verdict, Verdict::centrosymmetric);
    EXPECT_EQ(check(skew, std::nullopt).verdict, Verdict::skew_centrosymmetric);
  }
}

TEST(Decompose, Examples) {
  const auto d = decompose(kNeither);
  EXPECT_EQ(d.centro, DenseTensor::filled(2, 2, 2.5));
  EXPECT_EQ(d.skew, DenseTensor::matrix({{-1.5, -0.5}, {0.5, 1.5}}));

  EXPECT_EQ(decompose(kCentro).skew, DenseTensor(2, 2));
  EXPECT_EQ(decompose(kSkew).centro, DenseTensor(2, 2));
}

TEST(Decompose, PartsAndReconstruction) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_tensor(1 + trial % 4, 1 + trial % 5, rng);
    const auto d = decompose(a);
    const double scale = std::max(1.0, a.max_abs());
    EXPECT_TRUE(check_structure(d.centro, 1e-13 * scale).is_centro());
    EXPECT_TRUE(check_structure(d.skew, 1e-13 * scale).is_skew());
    EXPECT_LE(max_abs_diff(add(d.centro, d.skew), a), 1e-14 * scale);
  }
}

TEST(RandomStructured, Properties) {
  const auto c = random_structured(3, 4, Kind::centro, 9);
  const auto r = check_structure(c);
  EXPECT_EQ(r.verdict, Verdict::centrosymmetric);
  EXPECT_EQ(r.max_violation, 0.0);

  EXPECT_EQ(random_structured(3, 4, Kind::skew, 9), random_structured(3, 4, Kind::skew, 9));
  EXPECT_NE(random_structured(3, 4, Kind::skew, 9), random_structured(3, 4, Kind::skew, 10));

  for (std::size_t n : {1u, 3u, 5u}) {
    for (std::size_t m = 1; m <= 4; ++m) {
      const auto s = random_structured(m, n, Kind::skew, 100 + m);
      EXPECT_EQ(check_structure(s).max_violation, 0.0);
      const std::vector<std::size_t> mid(m, (n - 1) / 2);
      EXPECT_EQ(s.at(mid), 0.0);
    }
  }
}

TEST(RowSumSymmetry, Examples) {
  const auto c = random_structured(3, 4, Kind::centro, 1);
  EXPECT_TRUE(verify_row_sum_symmetry(c).holds);

  const auto s = random_structured(2, 3, Kind::skew, 2);
  const auto check = verify_row_sum_symmetry(s);
  EXPECT_TRUE(check.holds);
  EXPECT_NEAR(row_sums(s)[1], 0.0, 1e-12);

  const auto forced = verify_row_sum_symmetry(kNeither, Parity::centro);
  EXPECT_FALSE(forced.holds);
  ASSERT_TRUE(forced.witness.has_value());
  EXPECT_EQ(*forced.witness, 1u);
  EXPECT_EQ(forced.max_gap, 4.0);

  EXPECT_THROW(verify_row_sum_symmetry(kNeither), InputError);
}

TEST(RowSumSymmetry, RandomInstances) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 2 + trial % 3, n = 1 + trial % 6;
    const Kind kind = trial % 2 ? Kind::centro : Kind::skew;
    const auto a = random_structured(m, n, kind, rng());
    const auto check = verify_row_sum_symmetry(a, kind == Kind::centro ? Parity::centro : Parity::skew);
    EXPECT_TRUE(check.holds) << "trial " << trial;
  }
}

TEST(PolyReflection, Examples) {
  const Vector x{1, 2};
  EXPECT_EQ(poly_eval(kCentro, x), 14.0);
  EXPECT_EQ(poly_eval(kCentro, flip_vector(x)), 14.0);
  EXPECT_EQ(poly_eval(kSkew, x), -3.0);
  EXPECT_EQ(poly_eval(kSkew, flip_vector(x)), 3.0);

  EXPECT_TRUE(verify_poly_reflection(kCentro, 20, 1).holds);
  EXPECT_TRUE(verify_poly_reflection(kSkew, 20, 1).holds);
  EXPECT_THROW(verify_poly_reflection(kNeither, 20, 1), InputError);
}

TEST(PolyReflection, RandomTensors) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t m = 2 + seed % 4, n = 2 + seed % 4;
    const Kind kind = seed % 2 ? Kind::centro : Kind::skew;
    const auto check = verify_poly_reflection(random_structured(m, n, kind, seed), 20, seed);
    EXPECT_TRUE(check.holds) << "seed " << seed << " gap " << check.worst_gap;
    EXPECT_EQ(check.trials, 20u);
  }
}

TEST(Hadamard, ParityTable) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t m = 2 + seed % 3, n = 2 + seed % 4;
    const auto a = random_structured(m, n, Kind::centro, seed);
    const auto s = random_structured(m, n, Kind::skew, seed + 1000);
    EXPECT_TRUE(check_structure(hadamard(a, a), 1e-12).is_centro());
    EXPECT_TRUE(check_structure(hadamard(s, s), 1e-12).is_centro());
    EXPECT_TRUE(check_structure(hadamard(a, s), 1e-12).is_skew());
  }
}

TEST(Verdict, Names) {
  EXPECT_EQ(to_string(Verdict::centrosymmetric), "centrosymmetric");
  EXPECT_EQ(to_string(Verdict::skew_centrosymmetric), "skew-centrosymmetric");
  EXPECT_EQ(to_string(Verdict::both), "both");
  EXPECT_EQ(to_string(Verdict::neither), "neither");
}
