#pragma once

#include <cstddef>
#include <vector>

#include "sicinfo/hilbert.hpp"

namespace sicinfo {

/// Finite ensemble of sub-normalized states. Each element carries its prior
/// probability as its trace; the traces sum to one.
class Ensemble {
 public:
  explicit Ensemble(std::vector<Operator> states);

  /// Builds {p_x |psi_x><psi_x|}.
  static Ensemble from_pure(const std::vector<PureState>& states, const std::vector<double>& weights);

  Index dim() const { return dim_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<Operator>& states() const { return states_; }
  const Operator& operator[](std::size_t x) const { return states_[x]; }

  /// Tr[rho_x] for every element.
  std::vector<double> probabilities() const;

  /// rho_x / Tr[rho_x]. Throws InvalidEnsemble for a zero-weight element.
  Operator normalized_state(std::size_t x) const;

 private:
  Index dim_ = 0;
  std::vector<Operator> states_;
};

/// Finite POVM: positive effects summing to the identity.
class Povm {
 public:
  explicit Povm(std::vector<Operator> effects);

  Index dim() const { return dim_; }
  std::size_t size() const { return effects_.size(); }
  const std::vector<Operator>& effects() const { return effects_; }
  const Operator& operator[](std::size_t y) const { return effects_[y]; }

  /// Computational-basis measurement {|e_y><e_y|}.
  static Povm basis(Index d);

 private:
  Index dim_ = 0;
  std::vector<Operator> effects_;
};

/// rho = sum_x rho_x.
Operator average_state(const Ensemble& e);

/// Compresses every effect onto supp(rho): returns V^dagger Pi_y V, where the
/// columns of V are the eigenvectors of rho with eigenvalue > kKernelTol.
Povm restrict_to_support(const Povm& p, const Operator& rho);

/// Same compression for an ensemble whose states live in supp(rho).
Ensemble restrict_to_support(const Ensemble& e, const Operator& rho);

/// {rho^{-1/2} rho_x rho^{-1/2}}. If the average state is rank deficient the
/// result is expressed in the support basis of the average state, where it
/// resolves the identity.
Povm pretty_good_povm(const Ensemble& e);

/// {rho^{1/2} Pi_y rho^{1/2}}, whose average state is rho.
Ensemble pretty_good_ensemble(const Povm& p, const Operator& rho);

/// SIC POVM <-> SIC ensemble by rescaling with 1/d (resp. d). Both throw NotSic
/// unless the input is a SIC set with the matching trace normalization.
Ensemble sic_ensemble_from_povm(const Povm& p);
Povm sic_povm_from_ensemble(const Ensemble& e);

}  // namespace sicinfo
