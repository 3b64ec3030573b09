#include <gtest/gtest.h>

#include <random>

#include "nmv/engine.hpp"
#include "nmv/error.hpp"
#include "nmv/linear.hpp"
#include "nmv/oracle.hpp"

namespace nmv {
namespace {

RationalMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  RationalMatrix m;
  for (const auto& row : rows) {
    m.emplace_back();
    for (int v : row) m.back().emplace_back(v);
  }
  return m;
}

std::map<TypeVector, Integer> values(std::initializer_list<std::pair<TypeVector, int>> kv) {
  std::map<TypeVector, Integer> out;
  for (const auto& [d, v] : kv) out.emplace(d, Integer(v));
  return out;
}

// x, y, z and x, y, w in P^3: kernels at the w- and z-points.
const RationalMatrix kCamXYZ = mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
const RationalMatrix kCamXYW = mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
const RationalMatrix kCamXZW = mat({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});

TEST(BasePoints, Examples) {
  const auto two = camera_base_points({3, {kCamXYZ, kCamXYW}});
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(camera_base_points({3, {mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})}}).size(), 0u);
  EXPECT_EQ(camera_base_points({3, {kCamXYZ, kCamXYZ}}).size(), 1u);
  const auto generic = camera_base_points({2, {mat({{1, 2, 3}, {0, 1, 1}})}});
  ASSERT_EQ(generic.size(), 1u);
  EXPECT_EQ(generic.front(), (ProjectivePoint{1, 1, -1}));
}

TEST(BasePoints, RankDeficientCameraIsHypothesisError) {
  EXPECT_THROW(camera_base_points({3, {mat({{1, 0, 0, 0}, {2, 0, 0, 0}, {0, 1, 0, 0}})}}), HypothesisError);
  EXPECT_THROW(camera_base_points({3, {mat({{1, 0, 0}})}}), InputError);
}

TEST(Support, Examples) {
  EXPECT_EQ(multidegree_support({3, {kCamXYZ, kCamXYW}}).entries(),
            values({{{3, 0}, 0}, {{2, 1}, 1}, {{1, 2}, 1}, {{0, 3}, 0}}));
  EXPECT_EQ(multidegree_support({3, {mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})}}).entries(),
            values({{{3}, 1}}));
  const auto three = multidegree_support({3, {kCamXYZ, kCamXYW, kCamXZW}});
  EXPECT_EQ(three.at({1, 1, 1}), 1);
  EXPECT_EQ(three.at({3, 0, 0}), 0);
  EXPECT_EQ(three.at({2, 1, 0}), 1);
}

TEST(Support, InvariantUnderRowOperations) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-3, 3);
  const CameraConfig base{3, {kCamXYZ, kCamXYW, kCamXZW}};
  const auto expected = multidegree_support(base);
  for (int trial = 0; trial < 20; ++trial) {
    CameraConfig mixed = base;
    for (auto& A : mixed.cameras) {
      RationalMatrix B(A.size(), std::vector<Rational>(A.front().size(), Rational(0)));
      // B = G A for a random invertible lower-unitriangular G.
      for (std::size_t i = 0; i < A.size(); ++i) {
        for (std::size_t k = 0; k <= i; ++k) {
          const Rational g = k == i ? Rational(1) : Rational(coef(rng));
          for (std::size_t c = 0; c < A[k].size(); ++c) B[i][c] += g * A[k][c];
        }
      }
      A = B;
    }
    EXPECT_EQ(multidegree_support(mixed), expected);
  }
}

TEST(Export, Examples) {
  const auto spec = coordinate_alignment_export({3, {kCamXYZ, kCamXYW}});
  ASSERT_TRUE(spec);
  EXPECT_EQ(spec->ideals[0], minimalize(4, {ExponentVector({1, 0, 0, 0}), ExponentVector({0, 1, 0, 0}),
                                            ExponentVector({0, 0, 1, 0})}));
  EXPECT_EQ(spec->deltas, (std::vector<int>{1, 1}));
  EXPECT_FALSE(coordinate_alignment_export({2, {mat({{1, 2, 3}, {0, 1, 1}})}}));
  const auto identity = coordinate_alignment_export({2, {mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})}});
  ASSERT_TRUE(identity);
  EXPECT_EQ(identity->ideals[0], MonomialIdeal::irrelevant(3));
  // Row space spanned by coordinate vectors even though rows are not.
  EXPECT_TRUE(coordinate_alignment_export({2, {mat({{1, 1, 0}, {1, -1, 0}})}}));
}

TEST(Linear, ThreeRoutesAgree) {
  const std::vector<CameraConfig> configs{
      {3, {kCamXYZ, kCamXYW}},
      {3, {kCamXYZ, kCamXYW, kCamXZW}},
      {2, {mat({{1, 0, 0}, {0, 1, 0}}), mat({{0, 1, 0}, {0, 0, 1}})}},
  };
  for (const auto& config : configs) {
    const auto support = multidegree_support(config);
    const auto spec = coordinate_alignment_export(config);
    ASSERT_TRUE(spec);
    EXPECT_EQ(monomial_multidegrees(*spec), support);
    EXPECT_EQ(saturated_fiber_mixed_multiplicities(*spec).table, support);
    EXPECT_TRUE(birationality_defect(*spec).defect.all_zero());
  }
}

}  // namespace
}  // namespace nmv
