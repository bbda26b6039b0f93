#include <gtest/gtest.h>

#include "sicinfo/infotheory.hpp"
#include "sicinfo/sic.hpp"
#include "sicinfo/states.hpp"
#include "test_util.hpp"

namespace sicinfo {
namespace {

using testing::max_abs_diff;
using testing::Rng;

Ensemble uniform_basis_ensemble(Index d) {
  std::vector<Operator> states;
  for (Index k = 0; k < d; ++k) states.push_back(outer(PureState::basis(d, k)) * (1.0 / static_cast<double>(d)));
  return Ensemble(std::move(states));
}

TEST(Ensemble, Validation) {
  EXPECT_THROW(Ensemble({Operator::identity(2) * 0.4}), InvalidEnsemble);
  EXPECT_THROW(Ensemble({Operator::diagonal(Eigen::Vector2d(1.2, -0.2))}), InvalidEnsemble);
  EXPECT_THROW(Ensemble({Operator::identity(2) * 0.25, Operator::identity(3) * (1.0 / 6)}), InvalidEnsemble);
  EXPECT_THROW(Ensemble(std::vector<Operator>{}), InvalidEnsemble);
  // Zero-weight elements are carried.
  const Ensemble e({Operator::identity(2) * 0.5, Operator::zero(2)});
  EXPECT_EQ(e.size(), 2u);
  EXPECT_THROW(e.normalized_state(1), InvalidEnsemble);
  EXPECT_LT(max_abs_diff(e.normalized_state(0).matrix(), ComplexMatrix::Identity(2, 2) / 2.0), 1e-15);
}

TEST(Povm, Validation) {
  EXPECT_THROW(Povm({Operator::identity(2) * 0.5}), InvalidPovm);
  EXPECT_THROW(Povm({Operator::diagonal(Eigen::Vector2d(1.5, 0.5)), Operator::diagonal(Eigen::Vector2d(-0.5, 0.5))}),
               InvalidPovm);
  EXPECT_NO_THROW(Povm::basis(4));
}

TEST(AverageState, Examples) {
  const Operator half = Operator::identity(2) * 0.5;
  EXPECT_LT(max_abs_diff(average_state(sic_ensemble_from_povm(tetrahedral_povm())).matrix(), half.matrix()), 1e-15);

  Rng rng(1);
  const Operator rho = testing::random_density(3, rng);
  EXPECT_LT(max_abs_diff(average_state(Ensemble({rho})).matrix(), rho.matrix()), 1e-15);

  EXPECT_LT(max_abs_diff(average_state(antitetrahedral_ensemble()).matrix(), half.matrix()), 1e-15);
}

TEST(RestrictToSupport, FullSupportKeepsProbabilities) {
  const Povm p = qutrit_sic_povm();
  const Operator rho = Operator::identity(3) * (1.0 / 3);
  const Povm r = restrict_to_support(p, rho);
  ASSERT_EQ(r.dim(), 3);
  Rng rng(2);
  const Ensemble e = testing::random_ensemble(3, 4, rng);
  const auto& a = joint_distribution(e, p).probs();
  // Full support: the basis is the identity.
  const auto& b = joint_distribution(e, r).probs();
  EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(RestrictToSupport, TetrahedralOnPureZero) {
  const Povm r = restrict_to_support(tetrahedral_povm(), outer(PureState::basis(2, 0)));
  ASSERT_EQ(r.dim(), 1);
  const double expected[] = {0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6};
  for (std::size_t y = 0; y < 4; ++y) EXPECT_NEAR(r[y](0, 0).real(), expected[y], 1e-15);
}

TEST(RestrictToSupport, QutritOnRankTwoState) {
  const Povm p = qutrit_sic_povm();
  const Operator rho = Operator::diagonal(Eigen::Vector3d(0.5, 0.5, 0.0));
  const Povm r = restrict_to_support(p, rho);
  ASSERT_EQ(r.dim(), 2);
  for (std::size_t y = 0; y < p.size(); ++y) {
    // Tr[P Pi P] with P = diag(1,1,0).
    const double projected = p[y](0, 0).real() + p[y](1, 1).real();
    EXPECT_NEAR(r[y].trace(), projected, 1e-15);
  }
}

TEST(RestrictToSupport, PreservesBornProbabilities) {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Index d = 2 + trial % 3;
    const Index rank = 1 + trial % d;
    const Operator rho(testing::random_psd(d, rank, 1.0, rng));
    const ComplexMatrix v = support_basis(rho);
    // States supported in supp(rho).
    std::vector<Operator> states;
    const int n = 3;
    for (int i = 0; i < n; ++i) {
      const ComplexMatrix a = testing::random_psd(rank, rank, 1.0 / n, rng);
      states.emplace_back(v * a * v.adjoint());
    }
    const Ensemble e(states);
    const Povm p = testing::random_povm(d, 5, rng);
    const auto before = joint_distribution(e, p).probs();
    const auto after = joint_distribution(restrict_to_support(e, rho), restrict_to_support(p, rho)).probs();
    ASSERT_LE((before - after).cwiseAbs().maxCoeff(), kReconTol);
  }
}

TEST(PrettyGoodPovm, SicEnsembleScalesByDimension) {
  for (const Povm& p : {tetrahedral_povm(), qutrit_sic_povm()}) {
    const Ensemble e = sic_ensemble_from_povm(p);
    const Povm pg = pretty_good_povm(e);
    const double d = static_cast<double>(p.dim());
    for (std::size_t x = 0; x < e.size(); ++x) {
      EXPECT_LT(max_abs_diff(pg[x].matrix(), d * e[x].matrix()), 1e-12);
    }
  }
}

TEST(PrettyGoodPovm, OrthonormalEnsembleGivesBasis) {
  const Povm pg = pretty_good_povm(uniform_basis_ensemble(3));
  for (Index k = 0; k < 3; ++k) {
    EXPECT_LT(max_abs_diff(pg[static_cast<std::size_t>(k)].matrix(), outer(PureState::basis(3, k)).matrix()), 1e-14);
  }
}

TEST(PrettyGoodPovm, ProportionalStates) {
  Rng rng(4);
  const Operator rho = testing::random_density(3, rng);
  const Povm full = pretty_good_povm(Ensemble({rho * 0.5, rho * 0.5}));
  EXPECT_LT(max_abs_diff(full[0].matrix(), ComplexMatrix::Identity(3, 3) / 2.0), 1e-12);

  // Rank-deficient average: the result lives on the 2-dimensional support.
  const Operator low(testing::random_psd(3, 2, 1.0, rng));
  const Povm restricted = pretty_good_povm(Ensemble({low * 0.5, low * 0.5}));
  ASSERT_EQ(restricted.dim(), 2);
  EXPECT_LT(max_abs_diff(restricted[1].matrix(), ComplexMatrix::Identity(2, 2) / 2.0), 1e-12);
}

TEST(PrettyGoodPovm, AlwaysAPovm) {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const Index d = 2 + trial % 4;
    const Ensemble e = testing::random_ensemble(d, 2 + trial % 6, rng, 1 + trial % 2);
    EXPECT_NO_THROW(pretty_good_povm(e));
  }
}

TEST(PrettyGoodEnsemble, Examples) {
  const Povm tetra = tetrahedral_povm();
  const Ensemble e = pretty_good_ensemble(tetra, Operator::identity(2) * 0.5);
  for (std::size_t y = 0; y < 4; ++y) EXPECT_LT(max_abs_diff(e[y].matrix(), tetra[y].matrix() / 2.0), 1e-15);

  const Ensemble basis = pretty_good_ensemble(Povm::basis(3), Operator::identity(3) * (1.0 / 3));
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_LT(max_abs_diff(basis[k].matrix(), uniform_basis_ensemble(3)[k].matrix()), 1e-15);
  }

  Rng rng(9);
  const Povm p = testing::random_povm(2, 5, rng);
  const Operator zero = outer(PureState::basis(2, 0));
  const Ensemble distorted = pretty_good_ensemble(p, zero);
  for (std::size_t y = 0; y < p.size(); ++y) {
    EXPECT_LT(max_abs_diff(distorted[y].matrix(), p[y](0, 0).real() * zero.matrix()), 1e-14);
  }
}

TEST(PrettyGoodEnsemble, RejectsNonUnitTrace) {
  EXPECT_THROW(pretty_good_ensemble(tetrahedral_povm(), Operator::identity(2)), InvalidState);
}

TEST(PrettyGood, DualityProperties) {
  Rng rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const Index d = 2 + trial % 3;
    const Povm p = testing::random_povm(d, 3 + trial % 5, rng, 1 + trial % 2);
    const Operator rho = testing::random_density(d, rng);
    const Ensemble e = pretty_good_ensemble(p, rho);
    ASSERT_LE(max_abs_diff(average_state(e).matrix(), rho.matrix()), kSumTol);
    const Povm back = pretty_good_povm(e);
    for (std::size_t y = 0; y < p.size(); ++y) ASSERT_LE(max_abs_diff(back[y].matrix(), p[y].matrix()), kReconTol);
  }
}

TEST(SicRenormalization, Examples) {
  const Ensemble tetra = sic_ensemble_from_povm(tetrahedral_povm());
  for (const auto& s : tetra.states()) EXPECT_NEAR(s.trace(), 0.25, 1e-15);

  const Ensemble qutrit = sic_ensemble_from_povm(qutrit_sic_povm());
  for (const auto& s : qutrit.states()) EXPECT_NEAR(s.trace(), 1.0 / 9, 1e-15);

  const Povm round = sic_povm_from_ensemble(tetra);
  const Povm orig = tetrahedral_povm();
  for (std::size_t y = 0; y < 4; ++y) EXPECT_LT(max_abs_diff(round[y].matrix(), orig[y].matrix()), 1e-15);
}

TEST(SicRenormalization, RejectsNonSic) {
  EXPECT_THROW(sic_ensemble_from_povm(Povm::basis(2)), NotSic);
  EXPECT_THROW(sic_povm_from_ensemble(qutrit_orthonormal_ensemble()), NotSic);
  // A SIC POVM handed over as an ensemble has the wrong trace normalization.
  EXPECT_THROW(sic_povm_from_ensemble(Ensemble({Operator::identity(2) * 0.5})), NotSic);
  // The antitetrahedral states form a SIC ensemble of their own.
  EXPECT_NO_THROW(sic_povm_from_ensemble(antitetrahedral_ensemble()));
}

}  // namespace
}  // namespace sicinfo
