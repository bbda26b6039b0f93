#pragma once

#include <span>
#include <vector>

#include "sicinfo/states.hpp"

namespace sicinfo {

/// Outcome of checking the SIC conditions on a set of operators X_x:
/// equal traces lambda, Tr[X_x X_y] = lambda^2 / (d + 1) for x != y, d^2
/// rank-one elements.
struct SicCertificate {
  Index dim = 0;
  std::size_t count = 0;
  double lambda = 0;
  double max_trace_deviation = 0;
  double max_pairwise_deviation = 0;
  /// Largest second eigenvalue over all elements.
  double max_rank_residual = 0;
  /// ||sum_x X_x - d lambda 1||_F.
  double average_deviation = 0;
  bool rank_one = false;
  bool passes = false;
};

SicCertificate is_sic(std::span<const Operator> elements);

// Qubit tetrahedral SIC: Pi_y = |pi_y><pi_y| / 2.
std::vector<PureState> tetrahedral_vectors();
Povm tetrahedral_povm();

// rho_x = |psi_x><psi_x| / 4, each psi_x orthogonal to one tetrahedral vector.
std::vector<PureState> antitetrahedral_vectors();
Ensemble antitetrahedral_ensemble();

// Qutrit SIC with nine effects Pi_y = |pi_y><pi_y| / 3.
std::vector<PureState> qutrit_sic_vectors();
Povm qutrit_sic_povm();

// Orthonormal qutrit ensemble rho_x = |psi_x><psi_x| / 3.
std::vector<PureState> qutrit_orthonormal_vectors();
Ensemble qutrit_orthonormal_ensemble();

/// Clock-and-shift displacement X^j Z^k with X|m> = |m+1 mod d>, Z|m> = w^m |m>.
ComplexMatrix displacement(Index d, Index j, Index k);

/// The d^2 effects (1/d) D_jk |f><f| D_jk^dagger, ordered j-major. Always a POVM;
/// a SIC exactly when the fiducial is a SIC fiducial.
Povm wh_covariant_povm(const PureState& fiducial);

}  // namespace sicinfo
