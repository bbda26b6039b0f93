#pragma once

// Shannon quantities of Born-rule statistics, in bits, plus the closed-form
// bounds on accessible information and informational power.

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <string>

#include "sicinfo/states.hpp"

namespace sicinfo {

/// -sum p log2 p with 0 log 0 = 0; entries below kZeroProb count as zero.
/// No validation, for use in inner loops.
template <typename Derived>
double entropy_bits_unchecked(const Eigen::DenseBase<Derived>& p) {
  double h = 0;
  for (Index i = 0; i < p.size(); ++i) {
    const double v = p.derived().coeff(i);
    if (v > kZeroProb) h -= v * std::log2(v);
  }
  return h;
}

template <typename Derived>
void validate_distribution(const Eigen::DenseBase<Derived>& p) {
  if (p.size() == 0) throw InvalidDistribution("empty distribution");
  double sum = 0;
  for (Index i = 0; i < p.size(); ++i) {
    const double v = p.derived().coeff(i);
    if (!std::isfinite(v) || v < -kPsdTol) {
      throw InvalidDistribution("distribution has invalid entry " + std::to_string(v));
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    throw InvalidDistribution("distribution sums to " + std::to_string(sum));
  }
}

/// Shannon entropy in bits of a probability vector.
template <typename Derived>
double shannon_entropy(const Eigen::DenseBase<Derived>& p) {
  validate_distribution(p);
  return entropy_bits_unchecked(p);
}

/// p(x, y) over preparations x (rows) and outcomes y (columns).
class JointDistribution {
 public:
  /// Clamps entries in [-kPsdTol, 0) to zero; throws InvalidDistribution otherwise.
  explicit JointDistribution(Eigen::MatrixXd probs);

  Index rows() const { return p_.rows(); }
  Index cols() const { return p_.cols(); }
  const Eigen::MatrixXd& probs() const { return p_; }
  double operator()(Index x, Index y) const { return p_(x, y); }

  Eigen::VectorXd marginal_x() const { return p_.rowwise().sum(); }
  Eigen::VectorXd marginal_y() const { return p_.colwise().sum().transpose(); }

 private:
  Eigen::MatrixXd p_;
};

/// p(x, y) = Tr[rho_x Pi_y].
JointDistribution joint_distribution(const Ensemble& e, const Povm& p);

struct EntropyBreakdown {
  double h_x = 0;
  double h_y = 0;
  double h_xy = 0;
  /// H(Y|X) = H(X,Y) - H(X).
  double h_y_given_x = 0;
  /// I(X;Y) = H(X) + H(Y) - H(X,Y), clamped at zero.
  double mutual_information = 0;
};

EntropyBreakdown entropy_breakdown(const JointDistribution& j);
double mutual_information(const JointDistribution& j);

inline double mutual_information(const Ensemble& e, const Povm& p) {
  return mutual_information(joint_distribution(e, p));
}

/// Outcome distribution <psi|Pi_y|psi>.
Eigen::VectorXd outcome_distribution(const Povm& p, const PureState& psi);

/// H(Y|X=x) for the pure input psi.
double conditional_output_entropy(const Povm& p, const PureState& psi);

/// sum_y Tr[rho Pi_y]^2.
double index_of_coincidence(const Povm& p, const Operator& rho);

// Closed-form bounds, all in bits. Each throws InvalidDimension for d < 2.

/// log d.
double holevo_bound(int d);
/// log d - (1/ln 2) sum_{n=2}^d 1/n; the informational power of the uniform
/// (Haar) rank-one measurement and the lower bound for every rank-one POVM.
double scrooge_lower_bound(int d);
/// log(2d / (d+1)).
double sic_upper_bound(int d);
/// log(d(d+1)/2): floor on H(Y|X=x) for a SIC POVM and any pure input.
double rastegin_bound(int d);

/// Limit of scrooge_lower_bound as d -> infinity, (1 - gamma) / ln 2.
inline double scrooge_asymptote() { return (1.0 - std::numbers::egamma) / std::numbers::ln2; }

/// Mutual information of the pretty-good strategy on a d-dimensional SIC,
/// evaluated by summing over all d^4 cells of the joint distribution
/// (diagonal 1/d^3, off-diagonal 1/(d^3 (d+1))).
double pg_sic_mutual_information(int d);

/// (2d/(d^2(d+1))) log d - ((d-1)/(d^2(d+1))) log(d+1). Kept for comparison
/// only; it does not agree with pg_sic_mutual_information.
double pg_sic_coefficient_form(int d);

struct BoundSet {
  int dim = 0;
  double holevo = 0;
  double scrooge_lower = 0;
  double sic_upper = 0;
  double rastegin_cond = 0;
  double pg_sic_value = 0;
};

/// All bounds for dimension d. Checks scrooge_lower <= sic_upper <= holevo.
BoundSet bounds_for_dimension(int d);

}  // namespace sicinfo
