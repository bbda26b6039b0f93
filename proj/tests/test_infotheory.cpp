#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sicinfo/infotheory.hpp"
#include "sicinfo/optimize.hpp"
#include "sicinfo/sic.hpp"
#include "test_util.hpp"

namespace sicinfo {
namespace {

using testing::Rng;

Ensemble uniform_basis_ensemble(Index d) {
  std::vector<Operator> states;
  for (Index k = 0; k < d; ++k) states.push_back(outer(PureState::basis(d, k)) * (1.0 / static_cast<double>(d)));
  return Ensemble(std::move(states));
}

Eigen::MatrixXd random_joint(Index rows, Index cols, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::MatrixXd p(rows, cols);
  for (Index i = 0; i < p.size(); ++i) p(i) = u(rng) < 0.1 ? 0.0 : u(rng);
  p(0, 0) += 0.01;
  return p / p.sum();
}

TEST(ShannonEntropy, Examples) {
  EXPECT_NEAR(shannon_entropy(Eigen::Vector4d(0.25, 0.25, 0.25, 0.25)), 2.0, 1e-15);
  EXPECT_EQ(shannon_entropy(Eigen::Vector3d(1, 0, 0)), 0.0);
  // Exact value computed offline at 30 digits.
  EXPECT_NEAR(shannon_entropy(Eigen::Vector3d(0.5, 1.0 / 3, 1.0 / 6)), 1.4591479170272448, 1e-14);
}

TEST(ShannonEntropy, RejectsInvalid) {
  EXPECT_THROW(shannon_entropy(Eigen::Vector2d(0.5, 0.4)), InvalidDistribution);
  EXPECT_THROW(shannon_entropy(Eigen::Vector2d(1.1, -0.1)), InvalidDistribution);
  EXPECT_THROW(shannon_entropy(Eigen::VectorXd()), InvalidDistribution);
  EXPECT_THROW(shannon_entropy(Eigen::Vector2d(std::nan(""), 1)), InvalidDistribution);
}

TEST(ShannonEntropy, BoundedByLogLength) {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = 1 + trial % 9;
    const Eigen::MatrixXd p = random_joint(n, 1, rng);
    const double h = shannon_entropy(p.col(0));
    ASSERT_GE(h, 0.0);
    ASSERT_LE(h, std::log2(static_cast<double>(n)) + 1e-12);
  }
}

TEST(JointDistribution, ClampsTinyNegatives) {
  Eigen::Matrix2d p;
  p << 0.5, -1e-12, 0.25, 0.25 + 1e-12;
  const JointDistribution j(p);
  EXPECT_EQ(j(0, 1), 0.0);
  Eigen::Matrix2d bad;
  bad << 0.6, -0.1, 0.25, 0.25;
  EXPECT_THROW(JointDistribution{bad}, InvalidDistribution);
}

TEST(JointDistribution, QutritOrthonormalPattern) {
  const JointDistribution j = joint_distribution(qutrit_orthonormal_ensemble(), qutrit_sic_povm());
  ASSERT_EQ(j.rows(), 3);
  ASSERT_EQ(j.cols(), 9);
  for (Index x = 0; x < 3; ++x) {
    for (Index y = 0; y < 9; ++y) {
      const bool zero = y / 3 == x;
      EXPECT_NEAR(j(x, y), zero ? 0.0 : 1.0 / 18, 1e-12) << x << "," << y;
    }
  }
}

TEST(JointDistribution, TetrahedralSicPair) {
  const Povm p = tetrahedral_povm();
  const JointDistribution j = joint_distribution(sic_ensemble_from_povm(p), p);
  for (Index x = 0; x < 4; ++x)
    for (Index y = 0; y < 4; ++y) EXPECT_NEAR(j(x, y), x == y ? 1.0 / 8 : 1.0 / 24, 1e-15);
}

TEST(JointDistribution, BasisPair) {
  const JointDistribution j = joint_distribution(uniform_basis_ensemble(3), Povm::basis(3));
  EXPECT_LT((j.probs() - Eigen::Matrix3d::Identity() / 3).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(JointDistribution, RowSumsAreTraces) {
  Rng rng(3);
  const Ensemble e = testing::random_ensemble(3, 5, rng, 2);
  const JointDistribution j = joint_distribution(e, testing::random_povm(3, 7, rng));
  const auto w = e.probabilities();
  for (Index x = 0; x < j.rows(); ++x) EXPECT_NEAR(j.marginal_x()(x), w[static_cast<std::size_t>(x)], kSumTol);
}

TEST(JointDistribution, DimensionMismatch) {
  EXPECT_THROW(joint_distribution(antitetrahedral_ensemble(), qutrit_sic_povm()), DimMismatch);
}

TEST(MutualInformation, SaturatingConstructions) {
  EXPECT_NEAR(mutual_information(antitetrahedral_ensemble(), tetrahedral_povm()), std::log2(4.0 / 3), 1e-12);
  EXPECT_NEAR(mutual_information(qutrit_orthonormal_ensemble(), qutrit_sic_povm()), std::log2(1.5), 1e-12);
}

TEST(MutualInformation, IndependentVariables) {
  const Eigen::Vector3d px(0.2, 0.3, 0.5);
  const Eigen::Vector2d py(0.6, 0.4);
  const JointDistribution j(px * py.transpose());
  EXPECT_NEAR(mutual_information(j), 0.0, 1e-15);
}

TEST(MutualInformation, EntropyIdentities) {
  Rng rng(4);
  for (int trial = 0; trial < 1000; ++trial) {
    const JointDistribution j(random_joint(1 + trial % 6, 1 + (trial / 6) % 6, rng));
    const EntropyBreakdown b = entropy_breakdown(j);
    // Oracle entropies computed from plain vectors.
    std::vector<double> px, py, pxy;
    for (Index x = 0; x < j.rows(); ++x) px.push_back(j.probs().row(x).sum());
    for (Index y = 0; y < j.cols(); ++y) py.push_back(j.probs().col(y).sum());
    for (Index i = 0; i < j.probs().size(); ++i) pxy.push_back(j.probs()(i));
    ASSERT_NEAR(b.h_x, testing::entropy_oracle(px), 1e-12);
    ASSERT_NEAR(b.h_xy, testing::entropy_oracle(pxy), 1e-12);
    ASSERT_NEAR(b.h_xy, b.h_x + b.h_y_given_x, 10 * kSumTol);
    ASSERT_GE(b.mutual_information, 0.0);
    ASSERT_NEAR(b.mutual_information, b.h_y - (b.h_xy - b.h_x), 10 * kSumTol);
  }
}

TEST(MutualInformation, HolevoCeiling) {
  Rng rng(5);
  for (Index d : {2, 3, 4}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const Ensemble e = testing::random_ensemble(d, 2 + trial % 7, rng);
      const Povm p = testing::random_povm(d, 2 + trial % 9, rng);
      ASSERT_LE(mutual_information(e, p), std::log2(static_cast<double>(d)) + 10 * kSumTol);
    }
  }
}

TEST(MutualInformation, DualityIdentity) {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const Index d = 2 + trial % 3;
    // At least d pure states, so the average state is full rank.
    const Ensemble e = testing::random_ensemble(d, static_cast<int>(d) + trial % 4, rng);
    const Povm p = testing::random_povm(d, 2 + trial % 6, rng);
    const Operator rho = average_state(e);
    // Swap roles: rho^{-1/2} rho_x rho^{-1/2} measured on rho^{1/2} Pi_y rho^{1/2}.
    const double direct = mutual_information(e, p);
    const double dual = mutual_information(pretty_good_ensemble(p, rho), pretty_good_povm(e));
    ASSERT_NEAR(direct, dual, 10 * kSumTol);
  }
}

TEST(ConditionalOutputEntropy, Examples) {
  EXPECT_NEAR(conditional_output_entropy(tetrahedral_povm(), antitetrahedral_vectors()[0]), std::log2(3.0), 1e-14);
  EXPECT_NEAR(conditional_output_entropy(qutrit_sic_povm(), qutrit_orthonormal_vectors()[0]), std::log2(6.0), 1e-14);
  EXPECT_EQ(conditional_output_entropy(Povm::basis(3), PureState::basis(3, 1)), 0.0);
  EXPECT_THROW(conditional_output_entropy(Povm::basis(3), PureState::basis(2, 1)), DimMismatch);
}

TEST(ConditionalOutputEntropy, RasteginFloor) {
  HaarSampler sampler(2, 99);
  HaarSampler sampler3(3, 99);
  for (int trial = 0; trial < 1000; ++trial) {
    ASSERT_GE(conditional_output_entropy(tetrahedral_povm(), sampler.next()), rastegin_bound(2) - 10 * kSumTol);
    ASSERT_GE(conditional_output_entropy(qutrit_sic_povm(), sampler3.next()), rastegin_bound(3) - 10 * kSumTol);
  }
}

TEST(IndexOfCoincidence, Examples) {
  EXPECT_NEAR(index_of_coincidence(tetrahedral_povm(), outer(PureState::basis(2, 1))), 1.0 / 3, 1e-15);
  EXPECT_NEAR(index_of_coincidence(qutrit_sic_povm(), outer(PureState::basis(3, 2))), 1.0 / 6, 1e-15);
  EXPECT_NEAR(index_of_coincidence(Povm::basis(3), outer(PureState::basis(3, 0))), 1.0, 1e-15);
}

TEST(IndexOfCoincidence, ConstantOnPureStatesForSics) {
  for (const Povm& p : {tetrahedral_povm(), qutrit_sic_povm()}) {
    const double d = static_cast<double>(p.dim());
    HaarSampler sampler(p.dim(), 17);
    double lo = 1, hi = 0;
    for (int i = 0; i < 1000; ++i) {
      const double c = index_of_coincidence(p, outer(sampler.next()));
      ASSERT_NEAR(c, 2 / (d * (d + 1)), 1e-12);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    EXPECT_LT(hi - lo, 1e-9);
  }
}

TEST(Bounds, DimensionTwo) {
  const BoundSet b = bounds_for_dimension(2);
  EXPECT_DOUBLE_EQ(b.holevo, 1.0);
  // Frozen from an independent evaluation.
  EXPECT_NEAR(b.scrooge_lower, 0.2786524795555183, 1e-14);
  EXPECT_NEAR(b.sic_upper, 0.41503749927884376, 1e-14);
  EXPECT_NEAR(b.rastegin_cond, 1.584962500721156, 1e-14);
  EXPECT_NEAR(b.pg_sic_value, 0.20751874963942107, 1e-9);
}

TEST(Bounds, DimensionThree) {
  const BoundSet b = bounds_for_dimension(3);
  EXPECT_NEAR(b.scrooge_lower, 0.38271663331368666, 1e-14);
  EXPECT_NEAR(b.sic_upper, 0.5849625007211562, 1e-14);
  EXPECT_NEAR(b.pg_sic_value, 0.2516291673878275, 1e-12);
}

TEST(Bounds, Asymptotes) {
  EXPECT_NEAR(scrooge_asymptote(), 0.60995, 5e-6);
  EXPECT_NEAR(scrooge_lower_bound(1000000), 0.60995, 5e-6);
  EXPECT_NEAR(sic_upper_bound(1000000), 1.0, 2e-6);
}

TEST(Bounds, InvalidDimension) {
  EXPECT_THROW(bounds_for_dimension(1), InvalidDimension);
  EXPECT_THROW(scrooge_lower_bound(0), InvalidDimension);
}

TEST(Bounds, PrettyGoodAgreesWithConstructedSics) {
  for (const Povm& p : {tetrahedral_povm(), qutrit_sic_povm()}) {
    const Ensemble e = sic_ensemble_from_povm(p);
    const double direct = mutual_information(e, pretty_good_povm(e));
    EXPECT_NEAR(direct, pg_sic_mutual_information(static_cast<int>(p.dim())), 1e-12);
  }
}

TEST(Bounds, PrettyGoodClosedFormDisagrees) {
  // The coefficient form and the summed joint distribution differ.
  EXPECT_NEAR(pg_sic_coefficient_form(2), 0.20125312493990366, 1e-14);
  EXPECT_GT(pg_sic_mutual_information(2) - pg_sic_coefficient_form(2), 1e-3);
}

TEST(Bounds, OrderingAndDominance) {
  for (int d = 2; d <= 64; ++d) {
    const BoundSet b = bounds_for_dimension(d);
    ASSERT_LT(b.scrooge_lower, b.sic_upper) << d;
    ASSERT_LT(b.sic_upper, b.holevo) << d;
    ASSERT_LE(b.pg_sic_value, b.scrooge_lower) << d;
    // log d - ((d-1)/d) log(d+1) matches the summed value.
    ASSERT_NEAR(b.pg_sic_value, std::log2(d) - (d - 1.0) / d * std::log2(d + 1.0), 1e-9) << d;
  }
}

}  // namespace
}  // namespace sicinfo
