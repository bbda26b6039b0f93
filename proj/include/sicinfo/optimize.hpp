#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sicinfo/infotheory.hpp"
#include "sicinfo/states.hpp"

namespace sicinfo {

/// Deterministic stream of Haar-distributed pure states: normalized vectors of
/// independent standard complex Gaussians.
class HaarSampler {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64+splitmix64/std::normal_distribution";

  HaarSampler(Index dim, std::uint64_t seed);

  /// Independent stream number `index` derived from `seed`.
  static HaarSampler stream(Index dim, std::uint64_t seed, std::uint64_t index);

  PureState next();
  ComplexVector next_vector();

  Index dim() const { return dim_; }
  std::uint64_t seed() const { return seed_; }

 private:
  Index dim_;
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

std::uint64_t splitmix64(std::uint64_t x);

struct DescentOptions {
  double conv_tol = 1e-10;
  double grad_tol = 1e-8;
  int max_iterations = 200;
  double initial_step = 1.0;
  /// Backtracking factor.
  double armijo_shrink = 0.5;
  double armijo_slope = 1e-4;
  int max_backtracks = 60;
};

struct OptimizeOptions {
  DescentOptions descent;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Cap on outer see-saw rounds for the ensemble search.
  int max_seesaw_rounds = 300;
  int max_reweight_iterations = 2000;
};

/// Points on a product of unit spheres in C^d, one column per factor.
using SpherePoint = ComplexMatrix;

/// Columnwise g - Re<x, g> x.
SpherePoint project_tangent(const SpherePoint& x, const SpherePoint& g);
/// Columnwise normalization.
SpherePoint retract(const SpherePoint& x);

struct DescentResult {
  SpherePoint point;
  double value = 0;
  int iterations = 0;
  bool converged = false;
  /// Objective after every accepted step, starting with the initial value.
  std::vector<double> trace;
};

using SphereValue = std::function<double(const SpherePoint&)>;
using SphereGradient = std::function<SpherePoint(const SpherePoint&)>;

/// Riemannian steepest descent with Armijo backtracking and the normalization
/// retraction. `gradient` must return the Riemannian gradient.
DescentResult descend_on_sphere(const SphereValue& value, const SphereGradient& gradient, SpherePoint start,
                                const DescentOptions& options = {});

/// H(Y|X=x) as a function of the input state.
class OutputEntropyObjective {
 public:
  explicit OutputEntropyObjective(const Povm& p);

  double value(const SpherePoint& psi) const;
  SpherePoint riemannian_gradient(const SpherePoint& psi) const;

 private:
  std::vector<ComplexMatrix> effects_;
};

/// Mutual information of the ensemble {w_i |psi_i><psi_i|} against a fixed
/// POVM, as a function of the states (columns) for fixed weights.
class EnsembleInformationObjective {
 public:
  EnsembleInformationObjective(const Povm& p, Eigen::VectorXd weights);

  /// Rows: states, columns: outcomes. Entry (i, y) = <psi_i|Pi_y|psi_i>.
  Eigen::MatrixXd likelihoods(const SpherePoint& states) const;
  double value(const SpherePoint& states) const;
  /// Ascent direction: Riemannian gradient of the mutual information.
  SpherePoint riemannian_gradient(const SpherePoint& states) const;

  const Eigen::VectorXd& weights() const { return weights_; }
  void set_weights(Eigen::VectorXd w) { weights_ = std::move(w); }

 private:
  std::vector<ComplexMatrix> effects_;
  Eigen::VectorXd weights_;
};

/// I = sum_i w_i sum_y L(i,y) log2(L(i,y) / q(y)), q = w^T L.
double channel_information(const Eigen::VectorXd& weights, const Eigen::MatrixXd& likelihoods);

/// Multiplicative prior update w_i <- w_i 2^{D(L_i || q)} / Z, iterated until
/// the largest weight change drops below tol. Returns the iteration count.
int reweight_priors(Eigen::VectorXd& weights, const Eigen::MatrixXd& likelihoods, double tol, int max_iterations);

struct OptimizationReport {
  std::string objective;
  double best_value = 0;
  std::vector<PureState> best_states;
  std::vector<double> weights;
  int starts = 0;
  int converged_starts = 0;
  std::vector<int> iterations_per_start;
  std::vector<double> value_per_start;
  std::uint64_t seed = 0;
  double tolerance_used = 0;
  std::string prng = HaarSampler::kAlgorithm;
  int max_support = 0;
  bool weight_hit_zero = false;
};

/// Multi-start minimization of H(Y|X=x) over pure inputs.
OptimizationReport min_output_entropy(const Povm& p, int starts, std::uint64_t seed,
                                      const OptimizeOptions& options = {});

struct SeesawResult {
  SpherePoint states;
  Eigen::VectorXd weights;
  double value = 0;
  int rounds = 0;
  bool converged = false;
  /// Mutual information after every half step (reweight, then state ascent).
  std::vector<double> trace;
};

/// One see-saw run from the given starting states.
SeesawResult seesaw_information(const Povm& p, SpherePoint start, const OptimizeOptions& options = {});

/// Certified lower bound on the informational power: multi-start see-saw over
/// ensembles of at most max_support pure states (0 means d^2).
OptimizationReport informational_power_lower_bound(const Povm& p, int starts, std::uint64_t seed,
                                                   int max_support = 0, const OptimizeOptions& options = {});

/// I(E_N, computational basis) for N Haar states with uniform priors.
double scrooge_lower_bound_estimate(int d, long samples, std::uint64_t seed);

/// Finite stand-in for the Haar-uniform measurement: n Haar states |psi_i>,
/// S = sum_i |psi_i><psi_i|, effects S^{-1/2} |psi_i><psi_i| S^{-1/2}.
Povm uniform_povm_approximant(int d, int n, std::uint64_t seed);

/// Runs fn(i) for i in [0, n) on up to `threads` workers.
void parallel_for(int n, unsigned threads, const std::function<void(int)>& fn);

}  // namespace sicinfo
