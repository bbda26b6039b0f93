#include "sicinfo/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

namespace sicinfo {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

HaarSampler::HaarSampler(Index dim, std::uint64_t seed) : dim_(dim), seed_(seed), engine_(splitmix64(seed)) {
  if (dim < 1) throw InvalidDimension("HaarSampler: dimension must be positive");
}

HaarSampler HaarSampler::stream(Index dim, std::uint64_t seed, std::uint64_t index) {
  HaarSampler s(dim, seed);
  s.engine_.seed(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
  return s;
}

ComplexVector HaarSampler::next_vector() {
  ComplexVector v(dim_);
  double n2 = 0;
  do {
    for (Index i = 0; i < dim_; ++i) {
      const double re = normal_(engine_);
      const double im = normal_(engine_);
      v(i) = {re, im};
    }
    n2 = v.squaredNorm();
  } while (!(n2 > 0));
  return v / std::sqrt(n2);
}

PureState HaarSampler::next() { return PureState(next_vector()); }

SpherePoint project_tangent(const SpherePoint& x, const SpherePoint& g) {
  SpherePoint out = g;
  for (Index c = 0; c < x.cols(); ++c) {
    const double radial = x.col(c).dot(g.col(c)).real();
    out.col(c) -= radial * x.col(c);
  }
  return out;
}

SpherePoint retract(const SpherePoint& x) {
  SpherePoint out = x;
  for (Index c = 0; c < x.cols(); ++c) out.col(c).normalize();
  return out;
}

DescentResult descend_on_sphere(const SphereValue& value, const SphereGradient& gradient, SpherePoint start,
                                const DescentOptions& options) {
  DescentResult r;
  r.point = retract(start);
  r.value = value(r.point);
  r.trace.push_back(r.value);

  for (r.iterations = 0; r.iterations < options.max_iterations; ++r.iterations) {
    const SpherePoint g = gradient(r.point);
    const double g2 = g.squaredNorm();
    if (std::sqrt(g2) < options.grad_tol) {
      r.converged = true;
      break;
    }

    double step = options.initial_step;
    SpherePoint trial;
    double trial_value = r.value;
    bool accepted = false;
    for (int b = 0; b < options.max_backtracks; ++b) {
      trial = retract(r.point - step * g);
      trial_value = value(trial);
      if (trial_value <= r.value - options.armijo_slope * step * g2) {
        accepted = true;
        break;
      }
      step *= options.armijo_shrink;
    }
    if (!accepted) {
      // No step of any admissible length decreases the objective.
      r.converged = true;
      break;
    }

    const double decrease = r.value - trial_value;
    r.point = std::move(trial);
    r.value = trial_value;
    r.trace.push_back(r.value);
    if (decrease < options.conv_tol) {
      r.converged = true;
      ++r.iterations;
      break;
    }
  }
  return r;
}

namespace {

std::vector<ComplexMatrix> effect_matrices(const Povm& p) {
  std::vector<ComplexMatrix> out;
  out.reserve(p.size());
  for (const auto& e : p.effects()) out.push_back(e.matrix());
  return out;
}

// Below this a probability contributes nothing to a gradient.
constexpr double kGradientFloor = 1e-300;

}  // namespace

OutputEntropyObjective::OutputEntropyObjective(const Povm& p) : effects_(effect_matrices(p)) {}

double OutputEntropyObjective::value(const SpherePoint& psi) const {
  Eigen::VectorXd q(static_cast<Index>(effects_.size()));
  for (std::size_t y = 0; y < effects_.size(); ++y) {
    q(static_cast<Index>(y)) = std::max(0.0, psi.col(0).dot(effects_[y] * psi.col(0)).real());
  }
  return entropy_bits_unchecked(q);
}

SpherePoint OutputEntropyObjective::riemannian_gradient(const SpherePoint& psi) const {
  SpherePoint g = SpherePoint::Zero(psi.rows(), 1);
  for (const auto& e : effects_) {
    const ComplexVector ev = e * psi.col(0);
    const double q = psi.col(0).dot(ev).real();
    if (q <= kGradientFloor) continue;
    g.col(0) -= 2.0 * (std::log2(q) + 1.0 / std::numbers::ln2) * ev;
  }
  return project_tangent(psi, g);
}

EnsembleInformationObjective::EnsembleInformationObjective(const Povm& p, Eigen::VectorXd weights)
    : effects_(effect_matrices(p)), weights_(std::move(weights)) {}

Eigen::MatrixXd EnsembleInformationObjective::likelihoods(const SpherePoint& states) const {
  Eigen::MatrixXd l(states.cols(), static_cast<Index>(effects_.size()));
  for (Index i = 0; i < states.cols(); ++i) {
    for (std::size_t y = 0; y < effects_.size(); ++y) {
      l(i, static_cast<Index>(y)) = std::max(0.0, states.col(i).dot(effects_[y] * states.col(i)).real());
    }
  }
  return l;
}

double channel_information(const Eigen::VectorXd& weights, const Eigen::MatrixXd& likelihoods) {
  const Eigen::VectorXd q = likelihoods.transpose() * weights;
  double info = 0;
  for (Index i = 0; i < likelihoods.rows(); ++i) {
    if (weights(i) <= 0) continue;
    double row = 0;
    for (Index y = 0; y < likelihoods.cols(); ++y) {
      const double l = likelihoods(i, y);
      if (l > kZeroProb && q(y) > 0) row += l * std::log2(l / q(y));
    }
    info += weights(i) * row;
  }
  return std::max(0.0, info);
}

double EnsembleInformationObjective::value(const SpherePoint& states) const {
  return channel_information(weights_, likelihoods(states));
}

SpherePoint EnsembleInformationObjective::riemannian_gradient(const SpherePoint& states) const {
  const Eigen::MatrixXd l = likelihoods(states);
  const Eigen::VectorXd q = l.transpose() * weights_;
  SpherePoint g = SpherePoint::Zero(states.rows(), states.cols());
  for (Index i = 0; i < states.cols(); ++i) {
    const double w = weights_(i);
    if (w <= 0) continue;
    for (std::size_t y = 0; y < effects_.size(); ++y) {
      const double li = l(i, static_cast<Index>(y));
      const double qy = q(static_cast<Index>(y));
      if (li <= kGradientFloor || qy <= kGradientFloor) continue;
      g.col(i) += 2.0 * w * std::log2(li / qy) * (effects_[y] * states.col(i));
    }
  }
  return project_tangent(states, g);
}

int reweight_priors(Eigen::VectorXd& weights, const Eigen::MatrixXd& likelihoods, double tol, int max_iterations) {
  const Index m = weights.size();
  Eigen::VectorXd next(m);
  int it = 0;
  for (; it < max_iterations; ++it) {
    const Eigen::VectorXd q = likelihoods.transpose() * weights;
    for (Index i = 0; i < m; ++i) {
      double divergence = 0;
      for (Index y = 0; y < likelihoods.cols(); ++y) {
        const double l = likelihoods(i, y);
        if (l > kZeroProb && q(y) > 0) divergence += l * std::log2(l / q(y));
      }
      next(i) = weights(i) * std::exp2(divergence);
    }
    next /= next.sum();
    const double change = (next - weights).cwiseAbs().maxCoeff();
    weights = next;
    if (change < tol) {
      ++it;
      break;
    }
  }
  return it;
}

void parallel_for(int n, unsigned threads, const std::function<void(int)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(n, 1)));
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
}

namespace {

void require_starts(int starts) {
  if (starts < 1) throw InvalidInput("number of starts must be at least 1");
}

// Index of the best value; ties go to the lowest index.
template <typename Better>
std::size_t best_index(const std::vector<double>& values, Better better) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (better(values[i], values[best])) best = i;
  }
  return best;
}

bool is_trivial(const Povm& p) {
  const double d = static_cast<double>(p.dim());
  for (const auto& e : p.effects()) {
    const ComplexMatrix scaled = (e.trace() / d) * ComplexMatrix::Identity(p.dim(), p.dim());
    if ((e.matrix() - scaled).cwiseAbs().maxCoeff() > kSumTol) return false;
  }
  return true;
}

}  // namespace

OptimizationReport min_output_entropy(const Povm& p, int starts, std::uint64_t seed, const OptimizeOptions& options) {
  require_starts(starts);
  const OutputEntropyObjective objective(p);
  const SphereValue value = [&](const SpherePoint& x) { return objective.value(x); };
  const SphereGradient gradient = [&](const SpherePoint& x) { return objective.riemannian_gradient(x); };

  std::vector<DescentResult> runs(static_cast<std::size_t>(starts));
  parallel_for(starts, options.threads, [&](int s) {
    HaarSampler sampler = HaarSampler::stream(p.dim(), seed, static_cast<std::uint64_t>(s));
    runs[static_cast<std::size_t>(s)] = descend_on_sphere(value, gradient, sampler.next_vector(), options.descent);
  });

  OptimizationReport report;
  report.objective = "min_output_entropy";
  report.starts = starts;
  report.seed = seed;
  report.tolerance_used = options.descent.conv_tol;
  report.max_support = 1;
  for (const auto& r : runs) {
    report.iterations_per_start.push_back(r.iterations);
    report.value_per_start.push_back(r.value);
    if (r.converged) ++report.converged_starts;
  }
  const std::size_t best = best_index(report.value_per_start, std::less<>());
  const PureState state = PureState::normalized(runs[best].point.col(0));
  report.best_states = {state};
  report.weights = {1.0};
  report.best_value = conditional_output_entropy(p, state);
  return report;
}

SeesawResult seesaw_information(const Povm& p, SpherePoint start, const OptimizeOptions& options) {
  const Index m = start.cols();
  SeesawResult r;
  r.states = retract(start);
  r.weights = Eigen::VectorXd::Constant(m, 1.0 / static_cast<double>(m));
  EnsembleInformationObjective objective(p, r.weights);

  const auto& opt = options.descent;
  double previous = objective.value(r.states);
  r.trace.push_back(previous);
  for (r.rounds = 0; r.rounds < options.max_seesaw_rounds; ++r.rounds) {
    reweight_priors(r.weights, objective.likelihoods(r.states), opt.conv_tol, options.max_reweight_iterations);
    objective.set_weights(r.weights);
    r.trace.push_back(objective.value(r.states));

    const DescentResult ascent = descend_on_sphere(
        [&](const SpherePoint& x) { return -objective.value(x); },
        [&](const SpherePoint& x) -> SpherePoint { return -objective.riemannian_gradient(x); }, r.states, opt);
    r.states = ascent.point;
    const double current = -ascent.value;
    r.trace.push_back(current);

    if (current - previous < opt.conv_tol) {
      r.converged = true;
      previous = std::max(previous, current);
      ++r.rounds;
      break;
    }
    previous = current;
  }
  r.value = objective.value(r.states);
  return r;
}

OptimizationReport informational_power_lower_bound(const Povm& p, int starts, std::uint64_t seed, int max_support,
                                                   const OptimizeOptions& options) {
  require_starts(starts);
  const Index d = p.dim();
  if (max_support <= 0) max_support = static_cast<int>(d * d);

  OptimizationReport report;
  report.objective = "informational_power_lower_bound";
  report.starts = starts;
  report.seed = seed;
  report.tolerance_used = options.descent.conv_tol;
  report.max_support = max_support;

  if (is_trivial(p)) {
    // Effects proportional to the identity carry no information.
    report.converged_starts = starts;
    report.iterations_per_start.assign(static_cast<std::size_t>(starts), 0);
    report.value_per_start.assign(static_cast<std::size_t>(starts), 0.0);
    report.best_states = {PureState::basis(d, 0)};
    report.weights = {1.0};
    report.best_value = mutual_information(Ensemble::from_pure(report.best_states, report.weights), p);
    return report;
  }

  std::vector<SeesawResult> runs(static_cast<std::size_t>(starts));
  parallel_for(starts, options.threads, [&](int s) {
    HaarSampler sampler = HaarSampler::stream(d, seed, static_cast<std::uint64_t>(s));
    SpherePoint start(d, max_support);
    for (int i = 0; i < max_support; ++i) start.col(i) = sampler.next_vector();
    runs[static_cast<std::size_t>(s)] = seesaw_information(p, std::move(start), options);
  });

  for (const auto& r : runs) {
    report.iterations_per_start.push_back(r.rounds);
    report.value_per_start.push_back(r.value);
    if (r.converged) ++report.converged_starts;
  }
  const std::size_t best = best_index(report.value_per_start, std::greater<>());
  const SeesawResult& winner = runs[best];
  for (Index i = 0; i < winner.states.cols(); ++i) {
    report.best_states.push_back(PureState::normalized(winner.states.col(i)));
  }
  Eigen::VectorXd w = winner.weights.cwiseMax(0.0);
  w /= w.sum();
  report.weights.assign(w.data(), w.data() + w.size());
  report.weight_hit_zero = (w.array() < 1e-12).any();
  report.best_value = mutual_information(Ensemble::from_pure(report.best_states, report.weights), p);
  return report;
}

double scrooge_lower_bound_estimate(int d, long samples, std::uint64_t seed) {
  if (d < 2) throw InvalidDimension("scrooge estimate needs d >= 2");
  if (samples < static_cast<long>(d) * d) throw InvalidInput("scrooge estimate needs at least d^2 samples");
  HaarSampler sampler(d, seed);
  const double weight = 1.0 / static_cast<double>(samples);
  std::vector<Operator> states;
  states.reserve(static_cast<std::size_t>(samples));
  for (long i = 0; i < samples; ++i) states.push_back(weight * outer(sampler.next()));
  return mutual_information(Ensemble(std::move(states)), Povm::basis(d));
}

Povm uniform_povm_approximant(int d, int n, std::uint64_t seed) {
  if (d < 1) throw InvalidDimension("uniform_povm_approximant: d must be positive");
  if (n < d) throw InvalidInput("uniform_povm_approximant needs n >= d");
  HaarSampler sampler(d, seed);
  for (;;) {
    std::vector<ComplexVector> kets;
    kets.reserve(static_cast<std::size_t>(n));
    ComplexMatrix frame = ComplexMatrix::Zero(d, d);
    for (int i = 0; i < n; ++i) {
      kets.push_back(sampler.next_vector());
      frame += kets.back() * kets.back().adjoint();
    }
    const Operator s(frame);
    const auto spectrum = eigh(s);
    // A singular frame has probability zero; draw again rather than return a
    // sub-normalized measurement.
    if (spectrum.values(d - 1) <= 1e3 * kKernelTol) continue;
    const ComplexMatrix inv_sqrt = op_inv_sqrt(s).matrix();
    std::vector<Operator> effects;
    effects.reserve(kets.size());
    for (const auto& k : kets) {
      const ComplexVector v = inv_sqrt * k;
      effects.push_back(Operator(v * v.adjoint()));
    }
    return Povm(std::move(effects));
  }
}

}  // namespace sicinfo
